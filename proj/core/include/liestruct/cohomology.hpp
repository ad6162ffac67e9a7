// Chevalley-Eilenberg cohomology in degrees up to 3, the cochain embedding
// into current algebras, and cyclic 1-cocycle spaces of associative algebras.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "liestruct/algebra.hpp"
#include "liestruct/errors.hpp"
#include "liestruct/matrix.hpp"
#include "liestruct/modules.hpp"
#include "liestruct/streaming.hpp"

namespace liestruct {

inline constexpr int kDegreeCap = 3;

// Strictly increasing n-tuples from {0..n_items-1} in lexicographic order.
struct TupleIndexer {
    int n_items = 0;
    int size = 0;
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> rank;

    TupleIndexer(int items, int n) : n_items(items), size(n) {
        std::vector<int> t(n);
        build(t, 0, 0);
    }
    int count() const { return static_cast<int>(tuples.size()); }

   private:
    void build(std::vector<int>& t, int pos, int start) {
        if (pos == size) {
            rank[t] = count();
            tuples.push_back(t);
            return;
        }
        for (int v = start; v <= n_items - (size - pos); ++v) {
            t[pos] = v;
            build(t, pos + 1, v + 1);
        }
    }
};

// Alternating n-cochain with values in a module, stored on increasing basis
// tuples: values[tuple_rank * dim_m + coordinate].
template <class F>
struct Cochain {
    int degree = 0;
    int dim_l = 0;
    int dim_m = 0;
    Vec<F> values;
};

template <class F>
Cochain<F> zero_cochain(const F& f, int degree, int dim_l, int dim_m) {
    TupleIndexer ix(dim_l, degree);
    return Cochain<F>{degree, dim_l, dim_m,
                      Vec<F>(std::size_t(ix.count()) * dim_m, f.zero())};
}

// Matrix of the differential d: C^n -> C^{n+1} for the module (L, M):
//   (d phi)(x_0..x_n) = sum_i (-1)^i x_i . phi(..omit i..)
//                     + sum_{i<j} (-1)^{i+j} phi([x_i,x_j], ..omit i,j..).
template <class F>
Mat<F> ce_coboundary(const LieModule<F>& M, int n) {
    if (n < 0 || n > kDegreeCap)
        throw DegreeCapExceeded("coboundary degree " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kDegreeCap));
    const F& f = M.alg.fld;
    const int nL = M.alg.dim, dM = M.dim;
    TupleIndexer src(nL, n), dst(nL, n + 1);
    Mat<F> d(f, dst.count() * dM, src.count() * dM);
    std::vector<int> sub;
    for (int tr = 0; tr < dst.count(); ++tr) {
        const auto& T = dst.tuples[tr];
        for (int i = 0; i <= n; ++i) {
            sub.clear();
            for (int q = 0; q <= n; ++q)
                if (q != i) sub.push_back(T[q]);
            const int sr = src.rank.at(sub);
            const bool neg = i % 2;
            const auto& act = M.rho[T[i]];
            for (int w = 0; w < dM; ++w)
                for (int m = 0; m < dM; ++m) {
                    const auto& c = act.a[w][m];
                    if (f.is_zero(c)) continue;
                    auto& slot = d.a[tr * dM + w][sr * dM + m];
                    slot = neg ? f.sub(slot, c) : f.add(slot, c);
                }
        }
        for (int i = 0; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                sub.clear();
                for (int q = 0; q <= n; ++q)
                    if (q != i && q != j) sub.push_back(T[q]);
                const bool pair_neg = (i + j) % 2;
                for (const auto& [m, cm] : M.alg.prod(T[i], T[j])) {
                    if (std::binary_search(sub.begin(), sub.end(), m)) continue;
                    auto ins = sub;
                    const int below =
                        static_cast<int>(std::lower_bound(ins.begin(), ins.end(), m) -
                                         ins.begin());
                    ins.insert(ins.begin() + below, m);
                    const int sr = src.rank.at(ins);
                    const bool neg = pair_neg ^ (below % 2);
                    for (int w = 0; w < dM; ++w) {
                        auto& slot = d.a[tr * dM + w][sr * dM + w];
                        slot = neg ? f.sub(slot, cm) : f.add(slot, cm);
                    }
                }
            }
    }
    return d;
}

template <class F>
int cohomology_dim(const LieModule<F>& M, int n) {
    if (n < 0 || n > kDegreeCap) throw DegreeCapExceeded("degree exceeds cap");
    auto dn = ce_coboundary(M, n);
    const int kernel = dn.cols - rank_of(dn);
    if (n == 0) return kernel;
    return kernel - rank_of(ce_coboundary(M, n - 1));
}

// The embedding of cochains into the current-algebra complex:
//   xi(phi (x) v)(x_1 (x) a_1, ..., x_n (x) a_n) = phi(x_1..x_n) (x) (a_1...a_n).v
// Basis indices follow tensor conventions: generator i*dimA+j of L (x) A,
// module coordinate m*dimV+w of M (x) V.
template <class F>
Cochain<F> xi_map(const LieModule<F>& M, const AssocModule<F>& V, const Cochain<F>& phi,
                  const Vec<F>& v) {
    const F& f = M.alg.fld;
    const int nL = M.alg.dim, nA = V.alg.dim, dM = M.dim, dV = V.dim;
    if (phi.dim_l != nL || phi.dim_m != dM) throw AmbientMismatch("cochain shape mismatch");
    if (static_cast<int>(v.size()) != dV) throw AmbientMismatch("module vector shape mismatch");
    const int n = phi.degree;
    auto out = zero_cochain(f, n, nL * nA, dM * dV);
    TupleIndexer src(nL, n), dst(nL * nA, n);
    std::vector<int> li(n);
    for (int tr = 0; tr < dst.count(); ++tr) {
        const auto& T = dst.tuples[tr];
        bool repeat = false;
        for (int q = 0; q < n; ++q) {
            li[q] = T[q] / nA;
            if (q > 0 && li[q] == li[q - 1]) repeat = true;
        }
        if (repeat) continue;
        // product a_1 ... a_n acting on v
        Vec<F> av = v;
        if (n > 0) {
            typename Algebra<F>::SparseVec a{{T[0] % nA, f.one()}};
            for (int q = 1; q < n; ++q) a = V.alg.mul_sb(a, T[q] % nA);
            Vec<F> w(dV, f.zero());
            for (const auto& [j, c] : a) {
                auto part = V.rho[j].apply(v);
                for (int t = 0; t < dV; ++t) w[t] = f.add(w[t], f.mul(c, part[t]));
            }
            av = std::move(w);
        }
        const int sr = src.rank.at(li);
        for (int m = 0; m < dM; ++m) {
            const auto& c = phi.values[std::size_t(sr) * dM + m];
            if (f.is_zero(c)) continue;
            for (int t = 0; t < dV; ++t)
                if (!f.is_zero(av[t]))
                    out.values[std::size_t(tr) * (dM * dV) + (m * dV + t)] = f.mul(c, av[t]);
        }
    }
    return out;
}

// Exact check of d(xi(phi (x) v)) = xi(d phi (x) v) for one cochain.
template <class F>
bool xi_chain_check(const LieModule<F>& M, const AssocModule<F>& V,
                    const LieModule<F>& tensor, const Cochain<F>& phi, const Vec<F>& v) {
    const F& f = M.alg.fld;
    auto lhs = ce_coboundary(tensor, phi.degree).apply(xi_map(M, V, phi, v).values);
    Cochain<F> dphi{phi.degree + 1, phi.dim_l, phi.dim_m,
                    ce_coboundary(M, phi.degree).apply(phi.values)};
    auto rhs = xi_map(M, V, dphi, v).values;
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!f.eq(lhs[i], rhs[i])) return false;
    return true;
}

// Cyclic 1-cocycles of an associative algebra: skew bilinear xi with
// xi(ab,c) + xi(ca,b) + xi(bc,a) = 0, optionally invariant under a list of
// derivations (xi(d(a),b) + xi(a,d(b)) = 0). Coordinates are packed skew
// pairs (p < q).
template <class F>
SubspaceBasis<F> hc1_space(const Algebra<F>& A, const std::vector<Mat<F>>& derivs = {}) {
    const F& f = A.fld;
    const int n = A.dim;
    const int P = skew_pair_count(n);
    StreamingSolver<F> solver(f, P);
    std::map<int, typename F::Elem> row;
    auto acc_pair = [&](int p, int q, const typename F::Elem& c) {
        if (p == q) return;
        const int idx = p < q ? skew_pair_index(n, p, q) : skew_pair_index(n, q, p);
        const auto signed_c = p < q ? c : f.neg(c);
        auto it = row.find(idx);
        if (it == row.end())
            row[idx] = signed_c;
        else
            it->second = f.add(it->second, signed_c);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                row.clear();
                for (const auto& [m, cm] : A.prod(a, b)) acc_pair(m, c, cm);
                for (const auto& [m, cm] : A.prod(c, a)) acc_pair(m, b, cm);
                for (const auto& [m, cm] : A.prod(b, c)) acc_pair(m, a, cm);
                solver.add_row(row);
            }
    for (const auto& d : derivs) {
        if (d.rows != n || d.cols != n) throw AmbientMismatch("derivation matrix shape");
        certify_derivation(A, d);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                row.clear();
                for (int m = 0; m < n; ++m) {
                    if (!f.is_zero(d.a[m][a])) acc_pair(m, b, d.a[m][a]);
                    if (!f.is_zero(d.a[m][b])) acc_pair(a, m, d.a[m][b]);
                }
                solver.add_row(row);
            }
    }
    auto out = solver.nullspace();
    for (const auto& xi : out.vectors) {
        auto eval = [&](int p, int q) {
            if (p == q) return f.zero();
            const auto& val = xi[p < q ? skew_pair_index(n, p, q) : skew_pair_index(n, q, p)];
            return p < q ? val : f.neg(val);
        };
        auto eval_sv = [&](const typename Algebra<F>::SparseVec& s, int q) {
            auto acc = f.zero();
            for (const auto& [m, cm] : s) acc = f.add(acc, f.mul(cm, eval(m, q)));
            return acc;
        };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    auto s = f.add(f.add(eval_sv(A.prod(a, b), c), eval_sv(A.prod(c, a), b)),
                                   eval_sv(A.prod(b, c), a));
                    if (!f.is_zero(s)) throw Error("cyclic cocycle post-verification failed");
                }
        if (A.unit_index)
            for (int b = 0; b < n; ++b)
                if (!f.is_zero(eval(*A.unit_index, b)))
                    throw Error("cyclic cocycle does not vanish on the unit");
    }
    return out;
}

template <class F>
typename F::Elem hc1_eval(const F& f, int n, const Vec<F>& packed, int p, int q) {
    if (p == q) return f.zero();
    const auto& val = packed[p < q ? skew_pair_index(n, p, q) : skew_pair_index(n, q, p)];
    return p < q ? val : f.neg(val);
}

}  // namespace liestruct
