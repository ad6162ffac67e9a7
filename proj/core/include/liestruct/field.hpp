#pragma once

// Exact scalar arithmetic: Q with arbitrary-precision integers (GMP) and
// prime fields F_p with p < 2^31 stored as machine-word residues.
// No floating point anywhere: every downstream result is a rank or a
// dimension and would be meaningless under rounding.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "liestruct/errors.hpp"

namespace liestruct {

enum class FieldKind { Rationals, PrimeField };

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;  // present iff PrimeField

    static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p) {
        if (p >= (1u << 31))
            throw BadParams("prime field modulus must be < 2^31, got " + std::to_string(p));
        if (!is_prime_u32(p))
            throw BadParams("modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{FieldKind::PrimeField, p};
    }

    std::uint32_t characteristic() const { return kind == FieldKind::Rationals ? 0 : p; }
    bool operator==(const FieldSpec&) const = default;

    std::string str() const {
        return kind == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(p);
    }
    // Accepts the CLI/JSON spelling "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& s);
};

// true iff the characteristic is 0 or lies outside `excluded`. Solvers with
// characteristic-sensitive hypotheses consult this before running.
bool char_guard(const FieldSpec& spec, std::initializer_list<std::uint32_t> excluded);

struct QField {
    using Elem = mpq_class;

    FieldSpec spec() const { return FieldSpec::rationals(); }
    std::uint32_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DivisionByZero("inverse of 0 in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw DivisionByZero("division by 0 in Q");
        return a / b;
    }

    // Canonical form "a/b" with b omitted when 1; mpq_class keeps fractions
    // reduced with positive denominator, which is exactly that form.
    std::string str(const Elem& a) const { return a.get_str(); }
    Elem parse(const std::string& s) const;
};

struct FpField {
    std::uint32_t p = 2;
    using Elem = std::uint32_t;

    FpField() = default;
    explicit FpField(std::uint32_t prime) : p(FieldSpec::prime(prime).p) {}

    FieldSpec spec() const { return FieldSpec::prime(p); }
    std::uint32_t characteristic() const { return p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_long(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return Elem(std::uint64_t(a) * b % p); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p));
        // Fermat: p is prime by construction.
        Elem r = 1, base = a;
        std::uint32_t e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const;
};

using AnyField = std::variant<QField, FpField>;
inline AnyField make_field(const FieldSpec& spec) {
    if (spec.kind == FieldKind::Rationals) return QField{};
    return FpField{spec.p};
}

// Boundary scalar type: a field element tagged with its FieldSpec, used at
// serialization edges and wherever values from different sources meet.
// Arithmetic refuses to mix specs.
class Scalar {
public:
    FieldSpec spec;
    mpq_class q;          // active when spec.kind == Rationals
    std::uint32_t r = 0;  // active when spec.kind == PrimeField

    Scalar() : spec(FieldSpec::rationals()), q(0) {}
    static Scalar rational(mpq_class v) {
        Scalar s;
        s.spec = FieldSpec::rationals();
        s.q = std::move(v);
        return s;
    }
    static Scalar residue(std::uint32_t v, const FieldSpec& spec);

    bool operator==(const Scalar& o) const {
        return spec == o.spec && (spec.kind == FieldKind::Rationals ? q == o.q : r == o.r);
    }

    std::string str() const;
    static Scalar parse(const std::string& s, const FieldSpec& spec);
};

enum class ArithOp { add, sub, mul, div };
Scalar field_arith(const Scalar& a, const Scalar& b, ArithOp op);

}  // namespace liestruct
