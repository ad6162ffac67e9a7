// Modules over Lie and associative algebras: certification of action
// matrices, tensor ("current") modules, intertwiner spaces, and exact
// isomorphism decisions via determinant polynomial identity testing.
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "liestruct/algebra.hpp"
#include "liestruct/constructors.hpp"
#include "liestruct/errors.hpp"
#include "liestruct/matrix.hpp"
#include "liestruct/streaming.hpp"

namespace liestruct {

template <class F>
struct LieModule {
    Algebra<F> alg;
    int dim = 0;
    std::vector<Mat<F>> rho;  // one action matrix per algebra basis vector
    std::string name;
};

template <class F>
struct AssocModule {
    Algebra<F> alg;
    int dim = 0;
    std::vector<Mat<F>> rho;
    bool unital = true;
    std::string name;
};

namespace detail {

template <class F>
void check_action_shape(const Algebra<F>& alg, int dim, const std::vector<Mat<F>>& rho) {
    if (static_cast<int>(rho.size()) != alg.dim)
        throw AmbientMismatch("need one action matrix per algebra basis vector");
    for (const auto& m : rho)
        if (m.rows != dim || m.cols != dim)
            throw AmbientMismatch("action matrix is not dim x dim");
}

template <class F>
Mat<F> action_of(const Algebra<F>& alg, const std::vector<Mat<F>>& rho,
                 const typename Algebra<F>::SparseVec& v, int dim) {
    Mat<F> out(alg.fld, dim, dim);
    for (const auto& [i, c] : v) out = out.add(rho[i].scale(c));
    return out;
}

}  // namespace detail

template <class F>
void certify_module(const LieModule<F>& M) {
    detail::check_action_shape(M.alg, M.dim, M.rho);
    if (M.alg.flavor != Flavor::Lie)
        throw FlavorMismatch("Lie module over a non-Lie algebra");
    for (int i = 0; i < M.alg.dim; ++i)
        for (int j = 0; j < M.alg.dim; ++j) {
            auto lhs = detail::action_of(M.alg, M.rho, M.alg.prod(i, j), M.dim);
            auto rhs = M.rho[i].mul(M.rho[j]).sub(M.rho[j].mul(M.rho[i]));
            if (!(lhs == rhs))
                throw NotARepresentation("bracket action fails on basis pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

template <class F>
void certify_module(const AssocModule<F>& V) {
    detail::check_action_shape(V.alg, V.dim, V.rho);
    for (int i = 0; i < V.alg.dim; ++i)
        for (int j = 0; j < V.alg.dim; ++j) {
            auto lhs = detail::action_of(V.alg, V.rho, V.alg.prod(i, j), V.dim);
            auto rhs = V.rho[i].mul(V.rho[j]);
            if (!(lhs == rhs))
                throw NotARepresentation("product action fails on basis pair (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        }
    if (V.unital) {
        if (!V.alg.unit_index)
            throw NotARepresentation("unital module over an algebra without a unit");
        if (!(V.rho[*V.alg.unit_index] == Mat<F>::identity(V.alg.fld, V.dim)))
            throw NotARepresentation("unit does not act as the identity");
    }
}

template <class F>
LieModule<F> adjoint_module(const Algebra<F>& L) {
    LieModule<F> M{L, L.dim, {}, "adjoint(" + L.name + ")"};
    for (int i = 0; i < L.dim; ++i) {
        Vec<F> e(L.dim, L.fld.zero());
        e[i] = L.fld.one();
        M.rho.push_back(L.left_mult_matrix(e));
    }
    certify_module(M);
    return M;
}

template <class F>
LieModule<F> trivial_module(const Algebra<F>& L, int dim = 1) {
    LieModule<F> M{L, dim, std::vector<Mat<F>>(L.dim, Mat<F>(L.fld, dim, dim)), "trivial"};
    certify_module(M);
    return M;
}

// A acting on itself by left multiplication.
template <class F>
AssocModule<F> regular_module(const Algebra<F>& A) {
    AssocModule<F> V{A, A.dim, {}, A.unit_index.has_value(), "regular(" + A.name + ")"};
    for (int i = 0; i < A.dim; ++i) {
        Vec<F> e(A.dim, A.fld.zero());
        e[i] = A.fld.one();
        V.rho.push_back(A.left_mult_matrix(e));
    }
    certify_module(V);
    return V;
}

// The two-dimensional modules over K[x,y]/(x,y)^2 from the nonisomorphic
// family: basis (u,v) with x.u = v, y.u = t v, x.v = y.v = 0.
template <class F>
AssocModule<F> v_t_module(const Algebra<F>& local3_alg, const typename F::Elem& t) {
    const F& f = local3_alg.fld;
    AssocModule<F> V{local3_alg, 2, {}, true, "V_t(" + f.str(t) + ")"};
    V.rho.assign(3, Mat<F>(f, 2, 2));
    V.rho[0] = Mat<F>::identity(f, 2);
    V.rho[1].a[1][0] = f.one();
    V.rho[2].a[1][0] = t;
    certify_module(V);
    return V;
}

// One-dimensional quotient of a local algebra by its radical: the unit acts
// as 1, every non-unit basis vector listed in rad acts as 0.
template <class F>
AssocModule<F> quotient_by_radical_module(const Algebra<F>& A) {
    if (!A.unit_index) throw BadParams("quotient module needs a unital algebra");
    AssocModule<F> V{A, 1, std::vector<Mat<F>>(A.dim, Mat<F>(A.fld, 1, 1)), true, "A/rad"};
    V.rho[*A.unit_index].a[0][0] = A.fld.one();
    certify_module(V);
    return V;
}

// Module over current_algebra(L, A): (x (x) a).(m (x) v) = (x.m) (x) (a.v),
// tensor index m*dimV + v.
template <class F>
LieModule<F> tensor_module(const LieModule<F>& M, const AssocModule<F>& V) {
    require_same_field(M.alg.fld, V.alg.fld);
    certify_module(M);
    certify_module(V);
    auto cur = current_algebra(M.alg, V.alg);
    const F& f = M.alg.fld;
    const int dM = M.dim, dV = V.dim, nA = V.alg.dim;
    LieModule<F> out{cur, dM * dV, {}, M.name + "(x)" + V.name};
    for (int i = 0; i < M.alg.dim; ++i)
        for (int j = 0; j < nA; ++j) {
            Mat<F> k(f, dM * dV, dM * dV);
            for (int m = 0; m < dM; ++m)
                for (int mm = 0; mm < dM; ++mm) {
                    const auto& c1 = M.rho[i].a[mm][m];
                    if (f.is_zero(c1)) continue;
                    for (int v = 0; v < dV; ++v)
                        for (int vv = 0; vv < dV; ++vv) {
                            const auto& c2 = V.rho[j].a[vv][v];
                            if (!f.is_zero(c2))
                                k.a[mm * dV + vv][m * dV + v] = f.mul(c1, c2);
                        }
                }
            out.rho.push_back(std::move(k));
        }
    certify_module(out);
    return out;
}

// All linear T: V1 -> V2 with T rho1(g) = rho2(g) T for every generator g.
template <class F>
SubspaceBasis<F> intertwiner_space(const F& f, const std::vector<Mat<F>>& rho1,
                                   const std::vector<Mat<F>>& rho2, int d1, int d2) {
    // unknown T stored column-major by source: T[a*d2 + b] = coefficient of
    // target e_b in T(e_a)
    StreamingSolver<F> solver(f, d1 * d2);
    std::map<int, typename F::Elem> row;
    auto acc = [&](int idx, const typename F::Elem& v) {
        auto it = row.find(idx);
        if (it == row.end())
            row[idx] = v;
        else
            it->second = f.add(it->second, v);
    };
    for (std::size_t g = 0; g < rho1.size(); ++g)
        for (int a = 0; a < d1; ++a)
            for (int b = 0; b < d2; ++b) {
                row.clear();
                // (T rho1(g))(e_a)_b = sum_m rho1(g)[m][a] T[m*d2+b]
                for (int m = 0; m < d1; ++m) {
                    const auto& c = rho1[g].a[m][a];
                    if (!f.is_zero(c)) acc(m * d2 + b, c);
                }
                // (rho2(g) T)(e_a)_b = sum_m rho2(g)[b][m] T[a*d2+m]
                for (int m = 0; m < d2; ++m) {
                    const auto& c = rho2[g].a[b][m];
                    if (!f.is_zero(c)) acc(a * d2 + m, f.neg(c));
                }
                solver.add_row(row);
            }
    return solver.nullspace();
}

template <class F>
Mat<F> hom_from_flat(const F& f, int d1, int d2, const Vec<F>& flat) {
    Mat<F> m(f, d2, d1);
    for (int a = 0; a < d1; ++a)
        for (int b = 0; b < d2; ++b) m.a[b][a] = flat[std::size_t(a) * d2 + b];
    return m;
}

namespace detail {

template <class F>
void require_same_algebra(const Algebra<F>& a, const Algebra<F>& b) {
    if (a.dim != b.dim || !a.table_equals(b))
        throw AmbientMismatch("modules are over different algebras");
}

}  // namespace detail

template <class F>
SubspaceBasis<F> module_hom_space(const LieModule<F>& M1, const LieModule<F>& M2) {
    detail::require_same_algebra(M1.alg, M2.alg);
    auto out = intertwiner_space(M1.alg.fld, M1.rho, M2.rho, M1.dim, M2.dim);
    for (const auto& flat : out.vectors) {
        auto T = hom_from_flat(M1.alg.fld, M1.dim, M2.dim, flat);
        for (std::size_t g = 0; g < M1.rho.size(); ++g)
            if (!(T.mul(M1.rho[g]) == M2.rho[g].mul(T)))
                throw Error("intertwiner post-verification failed");
    }
    return out;
}

template <class F>
SubspaceBasis<F> module_hom_space(const AssocModule<F>& V1, const AssocModule<F>& V2) {
    detail::require_same_algebra(V1.alg, V2.alg);
    auto out = intertwiner_space(V1.alg.fld, V1.rho, V2.rho, V1.dim, V2.dim);
    for (const auto& flat : out.vectors) {
        auto T = hom_from_flat(V1.alg.fld, V1.dim, V2.dim, flat);
        for (std::size_t g = 0; g < V1.rho.size(); ++g)
            if (!(T.mul(V1.rho[g]) == V2.rho[g].mul(T)))
                throw Error("intertwiner post-verification failed");
    }
    return out;
}

namespace detail {

template <class F>
typename F::Elem det(const Mat<F>& m) {
    // fraction-free not needed; fields are exact
    const F& f = m.fld;
    auto a = m.a;
    const int n = m.rows;
    auto result = f.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!f.is_zero(a[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) return f.zero();
        if (piv != col) {
            std::swap(a[piv], a[col]);
            result = f.neg(result);
        }
        result = f.mul(result, a[col][col]);
        auto inv = f.inv(a[col][col]);
        for (int r = col + 1; r < n; ++r) {
            if (f.is_zero(a[r][col])) continue;
            auto factor = f.mul(a[r][col], inv);
            for (int c = col; c < n; ++c)
                a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
        }
    }
    return result;
}

// Walks all assignments of values[...] to k slots, calling fn on each tuple.
template <class F, class Fn>
bool any_assignment(const std::vector<typename F::Elem>& values, int k, Fn&& fn) {
    std::vector<int> idx(k, 0);
    while (true) {
        if (fn(idx)) return true;
        int pos = k - 1;
        while (pos >= 0 && ++idx[pos] == static_cast<int>(values.size())) idx[pos--] = 0;
        if (pos < 0) return false;
    }
}

// Decides whether a space of d x d maps contains an invertible one. The
// determinant of a generic combination is a polynomial of total degree <= d
// in the k coefficients; over a field with more than d elements it is
// nonzero as a polynomial iff it is nonzero somewhere on the grid {0..d}^k,
// and a nonvanishing grid point also witnesses an invertible combination.
// Over F_p with p <= d the grid argument fails, so all p^k combinations are
// enumerated instead.
template <class F>
bool span_contains_invertible(const F& f, const SubspaceBasis<F>& homs, int d, bool force) {
    const int k = homs.dim();
    if (k == 0) return false;
    std::vector<Mat<F>> basis;
    for (const auto& flat : homs.vectors) {
        basis.push_back(hom_from_flat(f, d, d, flat));
        if (!f.is_zero(det(basis.back()))) return true;
    }
    if (k == 1) return false;  // det(c T) = c^d det(T)
    auto p = f.characteristic();
    std::vector<typename F::Elem> values;
    double combos;
    if (p != 0 && p <= static_cast<uint64_t>(d)) {
        for (uint64_t v = 0; v < p; ++v) values.push_back(f.from_long(static_cast<long>(v)));
        combos = std::pow(double(p), k);
    } else {
        for (int v = 0; v <= d; ++v) values.push_back(f.from_long(v));
        combos = std::pow(double(d + 1), k);
    }
    if (!force && combos > 200000)
        throw DimCapExceeded("isomorphism grid has " + std::to_string(combos) +
                             " points (use force to override)");
    return any_assignment<F>(values, k, [&](const std::vector<int>& idx) {
        Mat<F> m(f, d, d);
        for (int i = 0; i < k; ++i) m = m.add(basis[i].scale(values[idx[i]]));
        return !f.is_zero(det(m));
    });
}

}  // namespace detail

template <class F>
bool modules_isomorphic(const LieModule<F>& M1, const LieModule<F>& M2, bool force = false) {
    if (M1.dim != M2.dim) return false;
    if (M1.dim == 0) return true;
    detail::require_same_algebra(M1.alg, M2.alg);
    return detail::span_contains_invertible(M1.alg.fld, module_hom_space(M1, M2), M1.dim, force);
}

template <class F>
bool modules_isomorphic(const AssocModule<F>& V1, const AssocModule<F>& V2, bool force = false) {
    if (V1.dim != V2.dim) return false;
    if (V1.dim == 0) return true;
    detail::require_same_algebra(V1.alg, V2.alg);
    return detail::span_contains_invertible(V1.alg.fld, module_hom_space(V1, V2), V1.dim, force);
}

// Right side of the hom-space formula for tensor modules: the span of
// {phi (x) psi : phi kills the action both ways} over all psi, plus
// {f (x) g : f an L-intertwiner of M, g an A-intertwiner V1 -> V2},
// measured inside Hom(M (x) V1, M (x) V2).
struct LemmaHomSides {
    int ann = 0;      // dim {phi in End(M): phi(L.M) = 0 and L.phi(M) = 0}
    int hom_k = 0;    // dim Hom_K(V1, V2)
    int end_l = 0;    // dim End_L(M)
    int hom_a = 0;    // dim Hom_A(V1, V2)
    int span_dim = 0;
};

template <class F>
LemmaHomSides lemma_hom_rhs(const LieModule<F>& M, const AssocModule<F>& V1,
                            const AssocModule<F>& V2) {
    const F& f = M.alg.fld;
    const int dM = M.dim, d1 = V1.dim, d2 = V2.dim;
    // phi with phi(rho(x) m) = 0 and rho(x) phi(m) = 0 for all x
    StreamingSolver<F> ann_solver(f, dM * dM);
    std::map<int, typename F::Elem> row;
    auto acc = [&](int idx, const typename F::Elem& v) {
        auto it = row.find(idx);
        if (it == row.end())
            row[idx] = v;
        else
            it->second = f.add(it->second, v);
    };
    for (const auto& rx : M.rho)
        for (int a = 0; a < dM; ++a)
            for (int b = 0; b < dM; ++b) {
                row.clear();
                for (int m = 0; m < dM; ++m)
                    if (!f.is_zero(rx.a[m][a])) acc(m * dM + b, rx.a[m][a]);
                ann_solver.add_row(row);
                row.clear();
                for (int m = 0; m < dM; ++m)
                    if (!f.is_zero(rx.a[b][m])) acc(a * dM + m, rx.a[b][m]);
                ann_solver.add_row(row);
            }
    auto ann = ann_solver.nullspace();
    auto end_l = intertwiner_space(f, M.rho, M.rho, dM, dM);
    auto hom_a = intertwiner_space(f, V1.rho, V2.rho, d1, d2);

    const int N1 = dM * d1, N2 = dM * d2;
    auto kron_flat = [&](const Mat<F>& phi, const Mat<F>& psi) {
        // tensor map (m (x) v) -> phi(m) (x) psi(v), flat index a*N2 + b
        Vec<F> g(std::size_t(N1) * N2, f.zero());
        for (int m = 0; m < dM; ++m)
            for (int mm = 0; mm < dM; ++mm) {
                if (f.is_zero(phi.a[mm][m])) continue;
                for (int v = 0; v < d1; ++v)
                    for (int vv = 0; vv < d2; ++vv)
                        if (!f.is_zero(psi.a[vv][v]))
                            g[std::size_t(m * d1 + v) * N2 + (mm * d2 + vv)] =
                                f.mul(phi.a[mm][m], psi.a[vv][v]);
            }
        return g;
    };
    std::vector<Vec<F>> gens;
    for (const auto& av : ann.vectors) {
        auto phi = hom_from_flat(f, dM, dM, av);
        for (int v = 0; v < d1; ++v)
            for (int vv = 0; vv < d2; ++vv) {
                Mat<F> e(f, d2, d1);
                e.a[vv][v] = f.one();
                gens.push_back(kron_flat(phi, e));
            }
    }
    for (const auto& ev : end_l.vectors) {
        auto fmap = hom_from_flat(f, dM, dM, ev);
        for (const auto& hv : hom_a.vectors)
            gens.push_back(kron_flat(fmap, hom_from_flat(f, d1, d2, hv)));
    }
    auto span = SubspaceBasis<F>::from_span(f, N1 * N2, gens);
    return LemmaHomSides{ann.dim(), d1 * d2, end_l.dim(), hom_a.dim(), span.dim()};
}

}  // namespace liestruct
