#include "liestruct/catalog.hpp"

#include <utility>

#include "liestruct/constructors.hpp"
#include "liestruct/errors.hpp"

namespace liestruct {

namespace {

struct ParsedSpec {
    std::string head;
    std::vector<std::string> params;
};

ParsedSpec parse_spec(const std::string& spec) {
    ParsedSpec out;
    const auto colon = spec.find(':');
    out.head = spec.substr(0, colon);
    if (colon != std::string::npos) {
        const std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (true) {
            const auto comma = rest.find(',', start);
            out.params.push_back(rest.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (out.head.empty()) throw ParseError("empty catalog spec");
    return out;
}

int int_param(const ParsedSpec& p, std::size_t i) {
    if (i >= p.params.size())
        throw BadParams("catalog spec '" + p.head + "' is missing a numeric parameter");
    try {
        std::size_t used = 0;
        const int v = std::stoi(p.params[i], &used);
        if (used != p.params[i].size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw BadParams("catalog spec '" + p.head + "': bad numeric parameter '" +
                        p.params[i] + "'");
    }
}

void need_params(const ParsedSpec& p, std::size_t n) {
    if (p.params.size() != n)
        throw BadParams("catalog spec '" + p.head + "' takes " + std::to_string(n) +
                        " parameter(s), got " + std::to_string(p.params.size()));
}

}  // namespace

template <class F>
Algebra<F> catalog_build_typed(const F& f, const std::string& spec) {
    const auto p = parse_spec(spec);
    const auto& h = p.head;
    if (h == "K") {
        need_params(p, 0);
        return base_field_algebra(f);
    }
    if (h == "dual") {
        need_params(p, 0);
        return dual_numbers(f);
    }
    if (h == "trunc_poly") {
        need_params(p, 1);
        return trunc_poly(f, int_param(p, 0));
    }
    if (h == "local3") {
        need_params(p, 0);
        return local3(f);
    }
    if (h == "ut2") {
        need_params(p, 0);
        return upper_tri2(f);
    }
    if (h == "mat") {
        need_params(p, 1);
        return matrix_algebra(f, int_param(p, 0));
    }
    if (h == "group_zn") {
        need_params(p, 1);
        return group_algebra_zn(f, int_param(p, 0));
    }
    if (h == "abelian") {
        need_params(p, 1);
        return abelian_lie(f, int_param(p, 0));
    }
    if (h == "na2") {
        need_params(p, 0);
        return nonabelian2(f);
    }
    if (h == "sl2") {
        need_params(p, 0);
        return sl_n(f, 2);
    }
    if (h == "sl3") {
        need_params(p, 0);
        return sl_n(f, 3);
    }
    if (h == "sl") {
        need_params(p, 1);
        return sl_n(f, int_param(p, 0));
    }
    if (h == "gl") {
        need_params(p, 1);
        auto g = skew_symmetrize(matrix_algebra(f, int_param(p, 0)));
        g.name = "gl" + p.params[0];
        return g;
    }
    if (h == "novikov_base") {
        need_params(p, 0);
        return novikov_base(f);
    }
    if (h == "novikov_vi") {
        need_params(p, 0);
        return novikov_vi(f);
    }
    if (h == "schrodinger_virasoro_novikov") {
        need_params(p, 0);
        return schrodinger_virasoro_novikov(f);
    }
    if (h == "bi_zassenhaus") {
        need_params(p, 2);
        return bi_zassenhaus(f, int_param(p, 0), int_param(p, 1));
    }
    if (h == "witt_mod_p") {
        need_params(p, 0);
        return witt_mod_p(f);
    }
    if (h == "affinization_vi") {
        need_params(p, 1);
        return affinization_vi(f, int_param(p, 0));
    }
    if (h == "twisted_zn") {
        need_params(p, 1);
        return twisted_zn(f, int_param(p, 0));
    }
    if (h == "kac_moody") {
        need_params(p, 0);
        return kac_moody_mod_p(f);
    }
    if (h == "current") {
        need_params(p, 2);
        return current_algebra(catalog_build_typed(f, p.params[0]),
                               catalog_build_typed(f, p.params[1]));
    }
    if (h == "dual_operad") {
        need_params(p, 2);
        return dual_operad_bracket(catalog_build_typed(f, p.params[0]),
                                   catalog_build_typed(f, p.params[1]));
    }
    if (h == "sln_a") {
        need_params(p, 2);
        return sl_n_A(catalog_build_typed(f, p.params[0]), int_param(p, 1));
    }
    throw BadParams("unknown catalog name '" + h + "'");
}

template Algebra<QField> catalog_build_typed(const QField&, const std::string&);
template Algebra<FpField> catalog_build_typed(const FpField&, const std::string&);

AnyAlgebra catalog_build(const FieldSpec& field, const std::string& spec) {
    if (field.characteristic() == 0) return catalog_build_typed(QField{}, spec);
    return catalog_build_typed(FpField{field.characteristic()}, spec);
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"K", "the base field as a one-dimensional unital algebra"},
        {"dual", "dual numbers K[t]/(t^2)"},
        {"trunc_poly:<k>", "truncated polynomials K[t]/(t^k)"},
        {"local3", "K[x,y] with xx = xy = yx = yy = 0"},
        {"ut2", "upper triangular 2x2 matrices"},
        {"mat:<n>", "full n x n matrix algebra"},
        {"group_zn:<n>", "group algebra K[t]/(t^n - 1)"},
        {"abelian:<n>", "abelian Lie algebra"},
        {"na2", "2-dim Lie algebra [x,y] = y"},
        {"sl2 | sl3 | sl:<n>", "traceless n x n matrices"},
        {"gl:<n>", "matrix commutator Lie algebra"},
        {"novikov_base", "1-dim left-Novikov e*e = e"},
        {"novikov_vi", "2-dim left-Novikov xx = x, yx = y"},
        {"schrodinger_virasoro_novikov", "3-dim left-Novikov with the half z entry"},
        {"bi_zassenhaus:<g>,<h>", "char-2 family of dim 2^(g+h+1)"},
        {"witt_mod_p", "p-dim Witt algebra over F_p"},
        {"affinization_vi:<m>", "affinization of novikov_vi over F_m"},
        {"twisted_zn:<n>", "right-Novikov twisted group algebra over F_n"},
        {"kac_moody", "extended current analog over F_p with central term"},
        {"current:<L>,<A>", "current algebra of two catalog specs"},
        {"dual_operad:<A>,<B>", "tensor bracket of a dual operad pair"},
        {"sln_a:<A>,<n>", "traceless matrices over an associative algebra"},
    };
}

}  // namespace liestruct
