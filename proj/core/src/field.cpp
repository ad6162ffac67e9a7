#include "liestruct/field.hpp"

#include <cctype>

namespace liestruct {

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty()) throw ParseError("missing modulus in field spec '" + s + "'");
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad modulus in field spec '" + s + "'");
        unsigned long v = 0;
        try {
            v = std::stoul(num);
        } catch (const std::exception&) {
            throw ParseError("bad modulus in field spec '" + s + "'");
        }
        if (v >= (1ul << 31)) throw BadParams("prime field modulus must be < 2^31");
        try {
            return prime(static_cast<std::uint32_t>(v));
        } catch (const BadParams& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("unknown field spec '" + s + "', expected Q or Fp:<p>");
}

bool char_guard(const FieldSpec& spec, std::initializer_list<std::uint32_t> excluded) {
    const std::uint32_t c = spec.characteristic();
    if (c == 0) return true;
    for (std::uint32_t e : excluded)
        if (c == e) return false;
    return true;
}

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

QField::Elem QField::parse(const std::string& s) const {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s)) throw ParseError("bad rational '" + s + "'");
        return Elem(mpz_class(s));
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den))
        throw ParseError("bad rational '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Elem q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

FpField::Elem FpField::parse(const std::string& s) const {
    // Accepts any integer (reduced mod p) and "a/b" with b invertible, so
    // that field-generic tables like "1/2" or "-1" load into F_p directly.
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    if (!valid_int_token(num)) throw ParseError("bad residue '" + s + "'");
    mpz_class n(num);
    mpz_class nr = n % p;
    if (nr < 0) nr += p;
    Elem a = static_cast<Elem>(nr.get_ui());
    if (slash == std::string::npos) return a;
    const std::string den = s.substr(slash + 1);
    if (!valid_int_token(den)) throw ParseError("bad residue '" + s + "'");
    mpz_class d(den);
    mpz_class dr = d % p;
    if (dr < 0) dr += p;
    Elem b = static_cast<Elem>(dr.get_ui());
    if (b == 0) throw ParseError("denominator of '" + s + "' vanishes mod " + std::to_string(p));
    return div(a, b);
}

Scalar Scalar::residue(std::uint32_t v, const FieldSpec& spec) {
    if (spec.kind != FieldKind::PrimeField)
        throw BadParams("residue scalar needs a prime field spec");
    Scalar s;
    s.spec = spec;
    s.r = v % spec.p;
    return s;
}

std::string Scalar::str() const {
    if (spec.kind == FieldKind::Rationals) return q.get_str();
    return std::to_string(r);
}

Scalar Scalar::parse(const std::string& s, const FieldSpec& spec) {
    Scalar out;
    out.spec = spec;
    if (spec.kind == FieldKind::Rationals) {
        out.q = QField{}.parse(s);
    } else {
        out.r = FpField{spec.p}.parse(s);
    }
    return out;
}

Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    if (!(a.spec == b.spec))
        throw MixedFields("cannot combine " + a.spec.str() + " with " + b.spec.str());
    Scalar out;
    out.spec = a.spec;
    if (a.spec.kind == FieldKind::Rationals) {
        QField f;
        switch (op) {
            case ArithOp::add: out.q = f.add(a.q, b.q); break;
            case ArithOp::sub: out.q = f.sub(a.q, b.q); break;
            case ArithOp::mul: out.q = f.mul(a.q, b.q); break;
            case ArithOp::div: out.q = f.div(a.q, b.q); break;
        }
    } else {
        FpField f{a.spec.p};
        switch (op) {
            case ArithOp::add: out.r = f.add(a.r, b.r); break;
            case ArithOp::sub: out.r = f.sub(a.r, b.r); break;
            case ArithOp::mul: out.r = f.mul(a.r, b.r); break;
            case ArithOp::div: out.r = f.div(a.r, b.r); break;
        }
    }
    return out;
}

}  // namespace liestruct
