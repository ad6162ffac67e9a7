// Constructions that assemble new algebras out of given ones: current
// algebras L (x) A and their central/derivation extensions, brackets induced
// by dual flavor pairs, sl_n over an associative base, twisted semigroup
// algebras, and the named catalog entries the tests and CLI refer to.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liestruct/algebra.hpp"
#include "liestruct/errors.hpp"
#include "liestruct/field.hpp"
#include "liestruct/matrix.hpp"

namespace liestruct {

template <class F>
void require_same_field(const F& a, const F& b) {
    if (!(a.spec() == b.spec()))
        throw MixedFields(a.spec().str() + " vs " + b.spec().str());
}

// ---------------------------------------------------------------------------
// Current algebra: bracket [x(x)a, y(x)b] = [x,y](x)ab on L (x) A.
// Basis order: L index outer, so (x_i, a_j) sits at i*dimA + j.

template <class F>
std::string tensor_label(const Algebra<F>& L, const Algebra<F>& A, int i, int j) {
    return L.label(i) + "(x)" + A.label(j);
}

template <class F>
Algebra<F> current_algebra(const Algebra<F>& L, const Algebra<F>& A) {
    require_same_field(L.fld, A.fld);
    if (L.flavor != Flavor::Lie)
        throw FlavorMismatch("current_algebra: first factor must be Lie, got " +
                             flavor_name(L.flavor));
    if (A.flavor != Flavor::AssocCommutativeUnital)
        throw FlavorMismatch(
            "current_algebra: second factor must be AssocCommutativeUnital, got " +
            flavor_name(A.flavor));
    certify(L);
    certify(A);

    const int nL = L.dim, nA = A.dim;
    Algebra<F> R(L.fld, nL * nA, Flavor::Lie, L.name + "(x)" + A.name);
    for (int i = 0; i < nL; ++i)
        for (int j = 0; j < nA; ++j)
            R.basis_names.push_back(tensor_label(L, A, i, j));
    for (int i = 0; i < nL; ++i)
        for (int k = 0; k < nL; ++k) {
            const auto& lie = L.prod(i, k);
            if (lie.empty()) continue;
            for (int j = 0; j < nA; ++j)
                for (int l = 0; l < nA; ++l) {
                    const auto& assoc = A.prod(j, l);
                    for (const auto& [m, cm] : lie)
                        for (const auto& [w, cw] : assoc)
                            R.add(i * nA + j, k * nA + l, m * nA + w, R.fld.mul(cm, cw));
                }
        }
    return R;
}

// ---------------------------------------------------------------------------
// Bracket induced on A (x) B by a dual pair of flavors,
//   [u(x)v, u'(x)v'] = uu'(x)vv' - u'u(x)v'v.
// When one factor's product is already antisymmetric and the other's
// symmetric the two terms coincide and are counted once, which is what makes
// the (Lie, AssocCommutativeUnital) case reproduce the current algebra
// table on the nose instead of twice it.

inline bool is_dual_flavor_pair(Flavor a, Flavor b) {
    using enum Flavor;
    return (a == Lie && b == AssocCommutativeUnital) ||
           (a == AssocCommutativeUnital && b == Lie) ||
           (a == Associative && b == Associative) ||
           (a == LeftNovikov && b == RightNovikov) ||
           (a == LeftFermionicNovikov && b == RightFermionicNovikov);
}

template <class F>
Algebra<F> dual_operad_bracket(const Algebra<F>& A, const Algebra<F>& B) {
    require_same_field(A.fld, B.fld);
    if (!is_dual_flavor_pair(A.flavor, B.flavor))
        throw NotDualPair(flavor_name(A.flavor) + " with " + flavor_name(B.flavor));
    certify(A);
    certify(B);

    const int nA = A.dim, nB = B.dim;
    Algebra<F> R(A.fld, nA * nB, Flavor::Lie, A.name + "(x)" + B.name);
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < nB; ++j)
            R.basis_names.push_back(tensor_label(A, B, i, j));

    const bool once_ab = (A.flavor == Flavor::Lie);   // second term duplicates first
    const bool once_ba = (B.flavor == Flavor::Lie);
    for (int i = 0; i < nA; ++i)
        for (int k = 0; k < nA; ++k)
            for (int j = 0; j < nB; ++j)
                for (int l = 0; l < nB; ++l) {
                    for (const auto& [m, cm] : A.prod(i, k))
                        for (const auto& [w, cw] : B.prod(j, l))
                            R.add(i * nB + j, k * nB + l, m * nB + w, R.fld.mul(cm, cw));
                    if (once_ab || once_ba) continue;
                    for (const auto& [m, cm] : A.prod(k, i))
                        for (const auto& [w, cw] : B.prod(l, j))
                            R.add(i * nB + j, k * nB + l, m * nB + w,
                                  R.fld.neg(R.fld.mul(cm, cw)));
                }

    auto rep = check_identity(R, Identity::Jacobi);
    if (!rep.holds) throw JacobiViolation(rep.describe(R));
    auto skew = check_identity(R, Identity::Anticommutative);
    if (!skew.holds) throw JacobiViolation(skew.describe(R));
    return R;
}

// ---------------------------------------------------------------------------
// Finite semigroups and quasicharacters.

struct Semigroup {
    int order = 0;
    std::vector<int> table;  // table[a*order + b] = a*b
    bool commutative = false;
    std::string name;

    int prod(int a, int b) const { return table[std::size_t(a) * order + b]; }
    std::optional<int> identity() const {
        for (int e = 0; e < order; ++e) {
            bool ok = true;
            for (int a = 0; a < order && ok; ++a)
                ok = prod(e, a) == a && prod(a, e) == a;
            if (ok) return e;
        }
        return std::nullopt;
    }
};

inline Semigroup make_semigroup(int order, std::vector<int> table, std::string name = "") {
    if (order <= 0) throw BadParams("semigroup order must be positive");
    if (static_cast<int>(table.size()) != order * order)
        throw BadParams("semigroup table must have order^2 entries");
    for (int v : table)
        if (v < 0 || v >= order) throw BadParams("semigroup table entry out of range");
    Semigroup G{order, std::move(table), true, std::move(name)};
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            if (G.prod(a, b) != G.prod(b, a)) G.commutative = false;
            for (int c = 0; c < order; ++c)
                if (G.prod(G.prod(a, b), c) != G.prod(a, G.prod(b, c)))
                    throw BadParams("semigroup table is not associative at (" +
                                    std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")");
        }
    return G;
}

inline Semigroup zn_add(int n) {
    std::vector<int> t(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b) % n;
    return make_semigroup(n, std::move(t), "Z" + std::to_string(n));
}

// Z/n with product a*b = a+b-1; the element 1 is the identity.
inline Semigroup zn_shifted(int n) {
    std::vector<int> t(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = (a + b - 1 + n) % n;
    return make_semigroup(n, std::move(t), "Z" + std::to_string(n) + "shift");
}

template <class F>
struct QuasiCharacter {
    F fld;
    std::vector<typename F::Elem> values;  // indexed by semigroup element
};

// First (a,b,c) with chi(ab) - chi(ac) != chi(b) - chi(c); the (b,c) and
// (c,b) residuals are negatives of each other, so only c < b is scanned.
template <class F>
std::optional<std::array<int, 3>> quasicharacter_witness(
    const F& f, const Semigroup& G, const std::vector<typename F::Elem>& values) {
    if (static_cast<int>(values.size()) != G.order)
        throw BadParams("quasicharacter needs one value per semigroup element");
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            for (int c = 0; c < b; ++c) {
                auto lhs = f.sub(values[G.prod(a, b)], values[G.prod(a, c)]);
                auto rhs = f.sub(values[b], values[c]);
                if (!f.eq(lhs, rhs)) return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

template <class F>
bool is_quasicharacter(const F& f, const Semigroup& G,
                       const std::vector<typename F::Elem>& values) {
    return !quasicharacter_witness(f, G, values).has_value();
}

template <class F>
QuasiCharacter<F> quasicharacter_certify(const F& f, const Semigroup& G,
                                         std::vector<typename F::Elem> values) {
    if (auto w = quasicharacter_witness(f, G, values)) {
        auto [a, b, c] = *w;
        throw NotQuasiCharacter("chi(ab)-chi(ac) != chi(b)-chi(c) at (a,b,c)=(" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
    }
    return QuasiCharacter<F>{f, std::move(values)};
}

template <class F>
QuasiCharacter<F> identity_character(const F& f, const Semigroup& G) {
    std::vector<typename F::Elem> vals;
    vals.reserve(G.order);
    for (int a = 0; a < G.order; ++a) vals.push_back(f.from_long(a));
    return quasicharacter_certify(f, G, std::move(vals));
}

// ---------------------------------------------------------------------------
// Semigroup algebras, plain and twisted.

template <class F>
Algebra<F> semigroup_algebra(const F& f, const Semigroup& G) {
    auto e = G.identity();
    Flavor fl = Flavor::Associative;
    if (G.commutative && e) fl = Flavor::AssocCommutativeUnital;
    Algebra<F> R(f, G.order, fl, "K[" + (G.name.empty() ? "S" : G.name) + "]");
    if (fl == Flavor::AssocCommutativeUnital) R.unit_index = *e;
    for (int a = 0; a < G.order; ++a) R.basis_names.push_back("g" + std::to_string(a));
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b) R.set(a, b, G.prod(a, b), f.one());
    certify(R);
    return R;
}

// e_a o e_b = chi(a) e_{ab}; right Novikov when chi is a quasicharacter on a
// commutative semigroup.
template <class F>
Algebra<F> twisted_semigroup_algebra(const F& f, const Semigroup& G,
                                     const QuasiCharacter<F>& chi) {
    if (!G.commutative)
        throw BadParams("twisted_semigroup_algebra requires a commutative semigroup");
    if (static_cast<int>(chi.values.size()) != G.order)
        throw BadParams("quasicharacter length != semigroup order");
    Algebra<F> R(f, G.order, Flavor::RightNovikov,
                 "K[" + (G.name.empty() ? "S" : G.name) + "]chi");
    for (int a = 0; a < G.order; ++a) R.basis_names.push_back("g" + std::to_string(a));
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            R.set(a, b, G.prod(a, b), chi.values[a]);
    certify(R);
    return R;
}

// ---------------------------------------------------------------------------
// The Lie bracket [x(x)a, y(x)b] = (chi(a) xy - chi(b) yx) (x) ab on N (x) K[G].

template <class F>
Algebra<F> n_chi_g_table(const Algebra<F>& N, const Semigroup& G,
                         const std::vector<typename F::Elem>& chi_values) {
    if (static_cast<int>(chi_values.size()) != G.order)
        throw BadParams("chi length != semigroup order");
    const int nN = N.dim, nG = G.order;
    Algebra<F> R(N.fld, nN * nG, Flavor::Generic, N.name + "[G]");
    for (int i = 0; i < nN; ++i)
        for (int a = 0; a < nG; ++a)
            R.basis_names.push_back(N.label(i) + "[" + std::to_string(a) + "]");
    for (int i = 0; i < nN; ++i)
        for (int k = 0; k < nN; ++k)
            for (int a = 0; a < nG; ++a)
                for (int b = 0; b < nG; ++b) {
                    const int ab = G.prod(a, b);
                    for (const auto& [m, c] : N.prod(i, k))
                        R.add(i * nG + a, k * nG + b, m * nG + ab,
                              R.fld.mul(chi_values[a], c));
                    for (const auto& [m, c] : N.prod(k, i))
                        R.add(i * nG + a, k * nG + b, m * nG + ab,
                              R.fld.neg(R.fld.mul(chi_values[b], c)));
                }
    return R;
}

template <class F>
Algebra<F> n_chi_g(const Algebra<F>& N, const Semigroup& G, const QuasiCharacter<F>& chi) {
    if (N.flavor != Flavor::LeftNovikov)
        throw FlavorMismatch("n_chi_g requires a LeftNovikov first factor, got " +
                             flavor_name(N.flavor));
    certify(N);
    if (!G.commutative) throw BadParams("n_chi_g requires a commutative semigroup");
    Algebra<F> R = n_chi_g_table(N, G, chi.values);
    R.flavor = Flavor::Lie;
    auto skew = check_identity(R, Identity::Anticommutative);
    if (!skew.holds) throw JacobiViolation(skew.describe(R));
    auto rep = check_identity(R, Identity::Jacobi);
    if (!rep.holds) throw JacobiViolation(rep.describe(R));
    return R;
}

// ---------------------------------------------------------------------------
// Certified ingredients for extended current algebras.

template <class F>
Mat<F> certify_derivation(const Algebra<F>& A, const Mat<F>& d) {
    if (d.rows != A.dim || d.cols != A.dim)
        throw AmbientMismatch("derivation matrix must be dim x dim");
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            // d(e_i e_j) - d(e_i) e_j - e_i d(e_j), columns of d are images
            Vec<F> lhs(A.dim, A.fld.zero());
            for (const auto& [k, c] : A.prod(i, j))
                for (int w = 0; w < A.dim; ++w)
                    lhs[w] = A.fld.add(lhs[w], A.fld.mul(c, d.a[w][k]));
            for (int m = 0; m < A.dim; ++m) {
                if (!A.fld.is_zero(d.a[m][i]))
                    for (const auto& [w, c] : A.prod(m, j))
                        lhs[w] = A.fld.sub(lhs[w], A.fld.mul(d.a[m][i], c));
                if (!A.fld.is_zero(d.a[m][j]))
                    for (const auto& [w, c] : A.prod(i, m))
                        lhs[w] = A.fld.sub(lhs[w], A.fld.mul(d.a[m][j], c));
            }
            for (const auto& x : lhs)
                if (!A.fld.is_zero(x))
                    throw NotDerivation("Leibniz fails on (" + A.label(i) + "," +
                                        A.label(j) + ")");
        }
    return d;
}

template <class F>
Mat<F> certify_invariant_form(const Algebra<F>& L, const Mat<F>& g) {
    if (g.rows != L.dim || g.cols != L.dim)
        throw AmbientMismatch("form matrix must be dim x dim");
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j)
            if (!L.fld.eq(g.a[i][j], g.a[j][i]))
                throw FormNotInvariant("form is not symmetric at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
    // <[x,y],z> = <x,[y,z]> on basis triples
    for (int x = 0; x < L.dim; ++x)
        for (int y = 0; y < L.dim; ++y)
            for (int z = 0; z < L.dim; ++z) {
                auto lhs = L.fld.zero();
                for (const auto& [m, c] : L.prod(x, y))
                    lhs = L.fld.add(lhs, L.fld.mul(c, g.a[m][z]));
                for (const auto& [m, c] : L.prod(y, z))
                    lhs = L.fld.sub(lhs, L.fld.mul(c, g.a[x][m]));
                if (!L.fld.is_zero(lhs))
                    throw FormNotInvariant("invariance fails at (" + std::to_string(x) +
                                           "," + std::to_string(y) + "," +
                                           std::to_string(z) + ")");
            }
    return g;
}

// Skew bilinear xi with xi(ab,c) + xi(bc,a) + xi(ca,b) = 0.
template <class F>
Mat<F> certify_cyclic_cocycle(const Algebra<F>& A, const Mat<F>& xi) {
    if (xi.rows != A.dim || xi.cols != A.dim)
        throw AmbientMismatch("cocycle matrix must be dim x dim");
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            if (!A.fld.eq(xi.a[i][j], A.fld.neg(xi.a[j][i])))
                throw NotCyclicCocycle("cocycle is not skew at (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b)
            for (int c = 0; c < A.dim; ++c) {
                auto s = A.fld.zero();
                for (const auto& [m, k] : A.prod(a, b)) s = A.fld.add(s, A.fld.mul(k, xi.a[m][c]));
                for (const auto& [m, k] : A.prod(b, c)) s = A.fld.add(s, A.fld.mul(k, xi.a[m][a]));
                for (const auto& [m, k] : A.prod(c, a)) s = A.fld.add(s, A.fld.mul(k, xi.a[m][b]));
                if (!A.fld.is_zero(s))
                    throw NotCyclicCocycle("cyclic condition fails at (" + std::to_string(a) +
                                           "," + std::to_string(b) + "," + std::to_string(c) +
                                           ")");
            }
    return xi;
}

template <class F>
void certify_xi_d_invariant(const Algebra<F>& A, const Mat<F>& xi,
                            const std::vector<Mat<F>>& derivs) {
    for (std::size_t r = 0; r < derivs.size(); ++r) {
        const auto& d = derivs[r];
        for (int a = 0; a < A.dim; ++a)
            for (int b = 0; b < A.dim; ++b) {
                // xi(d(a), b) + xi(a, d(b))
                auto s = A.fld.zero();
                for (int m = 0; m < A.dim; ++m) {
                    s = A.fld.add(s, A.fld.mul(d.a[m][a], xi.a[m][b]));
                    s = A.fld.add(s, A.fld.mul(d.a[m][b], xi.a[a][m]));
                }
                if (!A.fld.is_zero(s))
                    throw XiNotDInvariant("cocycle not invariant under derivation " +
                                          std::to_string(r) + " at (" + std::to_string(a) +
                                          "," + std::to_string(b) + ")");
            }
    }
}

// ---------------------------------------------------------------------------
// Extended current algebra on (L (x) A) + K z + D:
//   [x(x)a, y(x)b] = [x,y](x)ab + <x,y> xi(a,b) z
//   [d, x(x)a]     = x (x) d(a),   z central,   [d_r,d_s] taken inside span D.

template <class F>
Algebra<F> extended_current(const Algebra<F>& L, const Algebra<F>& A,
                            const std::vector<Mat<F>>& derivs, const Mat<F>& form,
                            const Mat<F>& xi) {
    require_same_field(L.fld, A.fld);
    if (L.flavor != Flavor::Lie)
        throw FlavorMismatch("extended_current: first factor must be Lie");
    if (A.flavor != Flavor::AssocCommutativeUnital)
        throw FlavorMismatch("extended_current: second factor must be AssocCommutativeUnital");
    certify(L);
    certify(A);
    for (const auto& d : derivs) certify_derivation(A, d);
    certify_invariant_form(L, form);
    certify_cyclic_cocycle(A, xi);
    certify_xi_d_invariant(A, xi, derivs);

    const int nL = L.dim, nA = A.dim, nD = static_cast<int>(derivs.size());
    const int zi = nL * nA;
    const int d0 = zi + 1;
    Algebra<F> R(L.fld, nL * nA + 1 + nD, Flavor::Lie, L.name + "(x)" + A.name + "+z+D");
    for (int i = 0; i < nL; ++i)
        for (int j = 0; j < nA; ++j)
            R.basis_names.push_back(tensor_label(L, A, i, j));
    R.basis_names.push_back("z");
    for (int r = 0; r < nD; ++r) R.basis_names.push_back("d" + std::to_string(r));

    for (int i = 0; i < nL; ++i)
        for (int k = 0; k < nL; ++k)
            for (int j = 0; j < nA; ++j)
                for (int l = 0; l < nA; ++l) {
                    const int u = i * nA + j, v = k * nA + l;
                    for (const auto& [m, cm] : L.prod(i, k))
                        for (const auto& [w, cw] : A.prod(j, l))
                            R.add(u, v, m * nA + w, R.fld.mul(cm, cw));
                    auto central = R.fld.mul(form.a[i][k], xi.a[j][l]);
                    if (!R.fld.is_zero(central)) R.add(u, v, zi, central);
                }

    for (int r = 0; r < nD; ++r)
        for (int i = 0; i < nL; ++i)
            for (int j = 0; j < nA; ++j)
                for (int b = 0; b < nA; ++b) {
                    const auto& c = derivs[r].a[b][j];
                    if (R.fld.is_zero(c)) continue;
                    R.add(d0 + r, i * nA + j, i * nA + b, c);
                    R.add(i * nA + j, d0 + r, i * nA + b, R.fld.neg(c));
                }

    if (nD > 0) {
        std::vector<Vec<F>> flat;
        flat.reserve(derivs.size());
        for (const auto& d : derivs) flat.push_back(d.flatten());
        Mat<F> span_cols(R.fld, nA * nA, nD);
        for (int r = 0; r < nD; ++r)
            for (int t = 0; t < nA * nA; ++t) span_cols.a[t][r] = flat[r][t];
        for (int r = 0; r < nD; ++r)
            for (int s = 0; s < nD; ++s) {
                if (r == s) continue;
                auto comm = derivs[r].commutator(derivs[s]).flatten();
                auto coeffs = solve_linear(span_cols, comm);
                if (!coeffs)
                    throw BadParams("derivation list is not closed under commutators");
                for (int t = 0; t < nD; ++t)
                    if (!R.fld.is_zero((*coeffs)[t])) R.add(d0 + r, d0 + s, d0 + t, (*coeffs)[t]);
            }
    }

    auto skew = check_identity(R, Identity::Anticommutative);
    if (!skew.holds) throw JacobiViolation(skew.describe(R));
    auto rep = check_identity(R, Identity::Jacobi);
    if (!rep.holds) throw JacobiViolation(rep.describe(R));
    return R;
}

// ---------------------------------------------------------------------------
// sl_n with entries in a unital associative algebra A. The underlying space
// is (sl_n(K) (x) A) + (E (x) [A,A]) with E the identity matrix; generators
// are ordered E_ij (i != j, row-major) (x) A-basis, then H_i (x) A-basis,
// then E (x) w_r over a reduced basis w_r of [A,A].

template <class F>
struct SlnContext {
    using Cell = typename Algebra<F>::SparseVec;
    using MatA = std::vector<Cell>;  // n*n cells, row-major

    F fld;
    int n = 0;
    Algebra<F> A;
    Vec<F> unit;                               // coordinates of 1 in A
    SubspaceBasis<F> comm;                     // [A,A] inside A
    std::vector<std::pair<int, int>> off_pos;  // positions of the E_ij, i != j
    int sl_dim = 0;                            // n^2 - 1
    int dim = 0;

    int scalar_index(int r, int c) const {  // r != c -> index of E_rc
        for (std::size_t o = 0; o < off_pos.size(); ++o)
            if (off_pos[o] == std::pair{r, c}) return static_cast<int>(o);
        throw Error("not an off-diagonal position");
    }

    MatA zero_mat() const { return MatA(std::size_t(n) * n); }

    MatA generator_matrix(int idx) const {
        MatA m = zero_mat();
        const int mA = A.dim;
        if (idx < sl_dim * mA) {
            const int si = idx / mA, aj = idx % mA;
            const int off = static_cast<int>(off_pos.size());
            if (si < off) {
                auto [r, c] = off_pos[si];
                m[std::size_t(r) * n + c][aj] = fld.one();
            } else {
                const int i = si - off;  // H_i = E_ii - E_{i+1,i+1}
                m[std::size_t(i) * n + i][aj] = fld.one();
                m[std::size_t(i + 1) * n + (i + 1)][aj] = fld.neg(fld.one());
            }
        } else {
            const auto& w = comm.vectors[idx - sl_dim * mA];
            Cell cell = A.sv_from_dense(w);
            for (int r = 0; r < n; ++r) m[std::size_t(r) * n + r] = cell;
        }
        return m;
    }

    MatA mul(const MatA& x, const MatA& y) const {
        MatA r = zero_mat();
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Cell& xc = x[std::size_t(i) * n + k];
                if (xc.empty()) continue;
                for (int j = 0; j < n; ++j) {
                    const Cell& yc = y[std::size_t(k) * n + j];
                    if (yc.empty()) continue;
                    auto& out = r[std::size_t(i) * n + j];
                    out = A.sv_add(out, A.mul(xc, yc));
                }
            }
        return r;
    }

    MatA sub(const MatA& x, const MatA& y) const {
        MatA r = zero_mat();
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = A.sv_sub(x[i], y[i]);
        return r;
    }

    // Coordinates of a traceless-in-the-suitable-sense matrix in the
    // generator basis. The scalar trace of the input must land in [A,A]
    // after division by n.
    Vec<F> decompose(const MatA& m) const {
        const int mA = A.dim;
        Vec<F> out(dim, fld.zero());
        Cell tr;
        for (int r = 0; r < n; ++r) tr = A.sv_add(tr, m[std::size_t(r) * n + r]);
        Cell tr_n;
        if (!A.sv_is_zero(tr)) {
            // only reached when [A,A] != 0; the context guard guarantees
            // n is invertible in that case
            tr_n = A.sv_scale(fld.inv(fld.from_long(n)), tr);
            auto cw = comm.coordinates(A.sv_dense(tr_n));
            if (!cw) throw Error("matrix trace does not lie in n*[A,A]");
            for (int t = 0; t < comm.dim(); ++t) out[sl_dim * mA + t] = (*cw)[t];
        }

        const int off = static_cast<int>(off_pos.size());
        for (int o = 0; o < off; ++o) {
            auto [r, c] = off_pos[o];
            for (const auto& [aj, coeff] : m[std::size_t(r) * n + c])
                out[o * mA + aj] = coeff;
        }
        Cell running;  // partial sums of the shifted diagonal give H-coordinates
        for (int i = 0; i + 1 < n; ++i) {
            Cell di = A.sv_sub(m[std::size_t(i) * n + i], tr_n);
            running = A.sv_add(running, di);
            for (const auto& [aj, coeff] : running) out[(off + i) * mA + aj] = coeff;
        }
        return out;
    }
};

template <class F>
SlnContext<F> make_sln_context(const Algebra<F>& A, int n) {
    if (n < 2) throw BadParams("sl_n needs n >= 2");
    if (A.flavor != Flavor::Associative && A.flavor != Flavor::AssocCommutativeUnital)
        throw FlavorMismatch("sl_n entries must come from an associative algebra");
    certify(A);
    auto unit = find_unit(A);
    if (!unit) throw BadParams("sl_n entries must come from a unital algebra");

    SlnContext<F> ctx{A.fld, n, A, *unit, SubspaceBasis<F>(A.fld, A.dim), {}, 0, 0};
    std::vector<Vec<F>> comms;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            comms.push_back(A.sv_dense(A.sv_sub(A.prod(i, j), A.prod(j, i))));
    ctx.comm = SubspaceBasis<F>::from_span(A.fld, A.dim, comms);
    // with [A,A] = 0 every bracket is traceless and no E(x)w generators
    // exist, so dividing by n never happens and p | n is harmless
    auto char_p = A.fld.characteristic();
    if (char_p != 0 && n % char_p == 0 && ctx.comm.dim() > 0)
        throw CharDividesN("characteristic " + std::to_string(char_p) + " divides n = " +
                           std::to_string(n) + " and [A,A] != 0");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) ctx.off_pos.emplace_back(i, j);
    ctx.sl_dim = n * n - 1;
    ctx.dim = ctx.sl_dim * A.dim + ctx.comm.dim();
    return ctx;
}

template <class F>
Algebra<F> sl_n_A(const Algebra<F>& A, int n) {
    auto ctx = make_sln_context(A, n);
    const int mA = A.dim;
    Algebra<F> R(ctx.fld, ctx.dim, Flavor::Lie,
                 "sl" + std::to_string(n) + "(" + (A.name.empty() ? "A" : A.name) + ")");
    const int off = static_cast<int>(ctx.off_pos.size());
    for (int si = 0; si < ctx.sl_dim; ++si) {
        std::string sn;
        if (si < off)
            sn = "E" + std::to_string(ctx.off_pos[si].first + 1) +
                 std::to_string(ctx.off_pos[si].second + 1);
        else
            sn = "H" + std::to_string(si - off + 1);
        for (int aj = 0; aj < mA; ++aj)
            R.basis_names.push_back(sn + "(x)" + A.label(aj));
    }
    for (int t = 0; t < ctx.comm.dim(); ++t)
        R.basis_names.push_back("E(x)w" + std::to_string(t));

    std::vector<typename SlnContext<F>::MatA> gens;
    gens.reserve(ctx.dim);
    for (int i = 0; i < ctx.dim; ++i) gens.push_back(ctx.generator_matrix(i));
    for (int i = 0; i < ctx.dim; ++i)
        for (int j = i + 1; j < ctx.dim; ++j) {
            auto br = ctx.sub(ctx.mul(gens[i], gens[j]), ctx.mul(gens[j], gens[i]));
            auto coords = ctx.decompose(br);
            auto sv = R.sv_from_dense(coords);
            for (const auto& [k, c] : sv) {
                R.add(i, j, k, c);
                R.add(j, i, k, R.fld.neg(c));
            }
        }

    auto rep = check_identity(R, Identity::Jacobi);
    if (!rep.holds) throw JacobiViolation(rep.describe(R));
    return R;
}

// ---------------------------------------------------------------------------
// Catalog.

template <class F>
Algebra<F> abelian_lie(const F& f, int n) {
    Algebra<F> R(f, n, Flavor::Lie, "abelian" + std::to_string(n));
    for (int i = 0; i < n; ++i) R.basis_names.push_back("a" + std::to_string(i));
    return R;
}

// [x,y] = y, the nonabelian Lie algebra of dimension two.
template <class F>
Algebra<F> nonabelian2(const F& f) {
    Algebra<F> R(f, 2, Flavor::Lie, "na2");
    R.basis_names = {"x", "y"};
    R.set(0, 1, 1, f.one());
    R.set(1, 0, 1, f.neg(f.one()));
    return R;
}

template <class F>
Algebra<F> base_field_algebra(const F& f) {
    Algebra<F> R(f, 1, Flavor::AssocCommutativeUnital, "K");
    R.basis_names = {"1"};
    R.unit_index = 0;
    R.set(0, 0, 0, f.one());
    return R;
}

template <class F>
Algebra<F> trunc_poly(const F& f, int k) {
    if (k < 1) throw BadParams("trunc_poly needs k >= 1");
    Algebra<F> R(f, k, Flavor::AssocCommutativeUnital, "K[t]/t^" + std::to_string(k));
    R.unit_index = 0;
    for (int i = 0; i < k; ++i)
        R.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t" + std::to_string(i)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i + j < k) R.set(i, j, i + j, f.one());
    return R;
}

template <class F>
Algebra<F> dual_numbers(const F& f) {
    auto R = trunc_poly(f, 2);
    R.name = "K[t]/t^2";
    return R;
}

// K[x,y]/(x,y)^2, the three-dimensional local algebra with square-zero
// maximal ideal.
template <class F>
Algebra<F> local3(const F& f) {
    Algebra<F> R(f, 3, Flavor::AssocCommutativeUnital, "local3");
    R.basis_names = {"1", "x", "y"};
    R.unit_index = 0;
    R.set(0, 0, 0, f.one());
    R.set(0, 1, 1, f.one());
    R.set(1, 0, 1, f.one());
    R.set(0, 2, 2, f.one());
    R.set(2, 0, 2, f.one());
    return R;
}

// Upper triangular 2x2 matrices, basis E11, E12, E22.
template <class F>
Algebra<F> upper_tri2(const F& f) {
    Algebra<F> R(f, 3, Flavor::Associative, "ut2");
    R.basis_names = {"E11", "E12", "E22"};
    R.set(0, 0, 0, f.one());  // E11 E11 = E11
    R.set(0, 1, 1, f.one());  // E11 E12 = E12
    R.set(1, 2, 1, f.one());  // E12 E22 = E12
    R.set(2, 2, 2, f.one());  // E22 E22 = E22
    return R;
}

template <class F>
Algebra<F> matrix_algebra(const F& f, int n) {
    Algebra<F> R(f, n * n, Flavor::Associative, "M" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R.basis_names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (j == k) R.set(i * n + j, k * n + l, i * n + l, f.one());
    return R;
}

template <class F>
Algebra<F> group_algebra_zn(const F& f, int n) {
    return semigroup_algebra(f, zn_add(n));
}

template <class F>
Algebra<F> sl_n(const F& f, int n) {
    auto R = sl_n_A(base_field_algebra(f), n);
    R.name = "sl" + std::to_string(n);
    for (auto& b : R.basis_names) {
        auto pos = b.find("(x)");
        if (pos != std::string::npos) b = b.substr(0, pos);
    }
    return R;
}

// Two-dimensional left Novikov algebra: x*x = x, y*x = y.
template <class F>
Algebra<F> novikov_vi(const F& f) {
    Algebra<F> R(f, 2, Flavor::LeftNovikov, "nov2");
    R.basis_names = {"x", "y"};
    R.set(0, 0, 0, f.one());
    R.set(1, 0, 1, f.one());
    certify(R);
    return R;
}

// One-dimensional left Novikov algebra e*e = e.
template <class F>
Algebra<F> novikov_base(const F& f) {
    Algebra<F> R(f, 1, Flavor::LeftNovikov, "nov1");
    R.basis_names = {"e"};
    R.set(0, 0, 0, f.one());
    certify(R);
    return R;
}

// Three-dimensional left Novikov algebra: x*x = x, x*z = z/2, y*x = y,
// z*x = z, z*z = y. Needs characteristic != 2.
template <class F>
Algebra<F> schrodinger_virasoro_novikov(const F& f) {
    if (!char_guard(f.spec(), {2}))
        throw BadParams("schrodinger_virasoro_novikov requires characteristic != 2");
    Algebra<F> R(f, 3, Flavor::LeftNovikov, "nov3");
    R.basis_names = {"x", "y", "z"};
    auto half = f.inv(f.from_long(2));
    R.set(0, 0, 0, f.one());
    R.set(0, 2, 2, half);
    R.set(1, 0, 1, f.one());
    R.set(2, 0, 2, f.one());
    R.set(2, 2, 1, f.one());
    certify(R);
    return R;
}

// Characteristic-2 family on (Z/2) x (Z/2^(g+h)) with brackets
//   [e_{0,u}, e_{i,v}] = (u + v) e_{i,u+v}
//   [e_{1,u}, e_{1,v}] = (u^q + v^q) e_{0,u+v},  q = 2^g - 1,
// all exponent arithmetic mod 2^(g+h), coefficients read mod 2.
template <class F>
Algebra<F> bi_zassenhaus(const F& f, int g, int h) {
    if (f.characteristic() != 2) throw BadParams("bi_zassenhaus requires characteristic 2");
    if (g < 2 || h < 1) throw BadParams("bi_zassenhaus requires g >= 2, h >= 1");
    const long M = 1L << (g + h);
    const long q = (1L << g) - 1;
    auto powmod = [&](long base, long exp) {
        long r = 1 % M, b = base % M;
        for (; exp > 0; exp >>= 1, b = b * b % M)
            if (exp & 1) r = r * b % M;
        return r;
    };
    Algebra<F> R(f, static_cast<int>(2 * M), Flavor::Lie,
                 "bizass" + std::to_string(g) + "_" + std::to_string(h));
    for (int i = 0; i < 2; ++i)
        for (long a = 0; a < M; ++a)
            R.basis_names.push_back("e(" + std::to_string(i) + "," + std::to_string(a) + ")");
    auto idx = [&](int i, long a) { return static_cast<int>(i * M + ((a % M + M) % M)); };
    for (long u = 0; u < M; ++u)
        for (long v = 0; v < M; ++v) {
            if ((u + v) % 2 == 1) {
                R.set(idx(0, u), idx(0, v), idx(0, u + v), f.one());
                R.set(idx(0, u), idx(1, v), idx(1, u + v), f.one());
                R.set(idx(1, u), idx(0, v), idx(1, u + v), f.one());
            }
            if ((powmod(u, q) + powmod(v, q)) % 2 == 1)
                R.set(idx(1, u), idx(1, v), idx(0, u + v), f.one());
        }
    auto skew = check_identity(R, Identity::Anticommutative);
    if (!skew.holds) throw JacobiViolation(skew.describe(R));
    auto rep = check_identity(R, Identity::Jacobi);
    if (!rep.holds) throw JacobiViolation(rep.describe(R));
    return R;
}

// Witt-type bracket [e_a, e_b] = (a - b) e_{a+b} on K[Z/p]; the shift indices
// wrap mod p, so the field characteristic must match p.
template <class F>
Algebra<F> witt_mod_p(const F& f) {
    auto p = f.characteristic();
    if (p == 0) throw BadParams("witt_mod_p needs a prime field");
    auto G = zn_add(static_cast<int>(p));
    auto R = n_chi_g(novikov_base(f), G, identity_character(f, G));
    R.name = "witt" + std::to_string(p);
    return R;
}

// Affinization of the two-dimensional Novikov algebra over Z/m with the
// shifted product; index wraparound ties m to the field characteristic.
template <class F>
Algebra<F> affinization_vi(const F& f, int m) {
    if (static_cast<int>(f.characteristic()) != m)
        throw BadParams("affinization_vi needs field characteristic equal to " +
                        std::to_string(m));
    auto G = zn_shifted(m);
    auto R = n_chi_g(novikov_vi(f), G, identity_character(f, G));
    R.name = "affine_nov2_" + std::to_string(m);
    return R;
}

// K[Z/n] with e_a o e_b = a e_{a+b}; right Novikov, wraps mod n.
template <class F>
Algebra<F> twisted_zn(const F& f, int n) {
    if (static_cast<int>(f.characteristic()) != n)
        throw BadParams("twisted_zn needs field characteristic equal to " + std::to_string(n));
    auto G = zn_add(n);
    return twisted_semigroup_algebra(f, G, identity_character(f, G));
}

// Central-plus-derivation extension of sl2 (x) K[Z/p]: trace form on sl2,
// cocycle xi(t^a, t^b) = a [a+b = 0 mod p], derivation t d/dt.
template <class F>
Algebra<F> kac_moody_mod_p(const F& f) {
    auto p = f.characteristic();
    if (p < 5) throw BadParams("kac_moody_mod_p needs characteristic >= 5");
    const int n = static_cast<int>(p);
    auto L = sl_n(f, 2);
    auto A = group_algebra_zn(f, n);

    Mat<F> form(f, 3, 3);  // <x,y> = Tr(xy) on E12, E21, H
    form.a[0][1] = form.a[1][0] = f.one();
    form.a[2][2] = f.from_long(2);

    Mat<F> xi(f, n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((a + b) % n == 0) xi.a[a][b] = f.from_long(a);

    Mat<F> d(f, n, n);
    for (int k = 0; k < n; ++k) d.a[k][k] = f.from_long(k);

    auto R = extended_current(L, A, std::vector<Mat<F>>{d}, form, xi);
    R.name = "kac_moody_mod" + std::to_string(p);
    return R;
}

}  // namespace liestruct
