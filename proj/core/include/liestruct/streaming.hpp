#pragma once

// Streaming nullspace solver. Equation rows are pushed one at a time, reduced
// against the pivot rows accumulated so far, and either absorbed (new pivot)
// or discarded (dependent). Memory stays O(unknowns * rank) regardless of how
// many rows are streamed, which is what makes the larger structure-space
// solves feasible: the row count is cubic in the algebra dimension while the
// rank is bounded by the unknown count.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "liestruct/errors.hpp"
#include "liestruct/field.hpp"
#include "liestruct/matrix.hpp"

namespace liestruct {

template <class F>
struct SparseRow {
    // (column, coefficient), strictly increasing columns, no zero coefficients.
    std::vector<std::pair<int, typename F::Elem>> entries;
};

template <class F>
class StreamingSolver {
  public:
    using Elem = typename F::Elem;

    StreamingSolver(F f, int unknowns) : fld_(f), unknowns_(unknowns) {}

    int unknowns() const { return unknowns_; }
    int rank() const { return static_cast<int>(pivots_.size()); }
    long long rows_seen() const { return rows_seen_; }

    void add_row(const std::map<int, Elem>& coeffs) {
        SparseRow<F> r;
        r.entries.reserve(coeffs.size());
        for (const auto& [c, v] : coeffs) {
            if (c < 0 || c >= unknowns_) throw AmbientMismatch("row column out of range");
            if (!fld_.is_zero(v)) r.entries.emplace_back(c, v);
        }
        add_sparse(std::move(r));
    }

    void add_dense_row(const Vec<F>& row) {
        if (static_cast<int>(row.size()) != unknowns_)
            throw RowWidthMismatch("dense row width != unknowns");
        SparseRow<F> r;
        for (int c = 0; c < unknowns_; ++c)
            if (!fld_.is_zero(row[c])) r.entries.emplace_back(c, row[c]);
        add_sparse(std::move(r));
    }

    // Canonical basis of the common nullspace of all streamed rows.
    SubspaceBasis<F> nullspace() const {
        std::vector<bool> is_pivot(unknowns_, false);
        for (const auto& [p, _] : pivots_) is_pivot[p] = true;
        std::vector<Vec<F>> basis;
        for (int c = 0; c < unknowns_; ++c) {
            if (is_pivot[c]) continue;
            Vec<F> v(unknowns_, fld_.zero());
            v[c] = fld_.one();
            // Pivot rows are not mutually reduced, so substitute from the
            // largest pivot down: by the time row p is processed every
            // entry of v at columns > p is final.
            for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
                const int p = it->first;
                Elem acc = fld_.zero();
                for (const auto& [col, coeff] : it->second.entries)
                    if (col > p && !fld_.is_zero(v[col]))
                        acc = fld_.add(acc, fld_.mul(coeff, v[col]));
                v[p] = fld_.neg(acc);  // pivot coefficient is 1
            }
            basis.push_back(std::move(v));
        }
        return SubspaceBasis<F>::from_span(fld_, unknowns_, basis);
    }

  private:
    void add_sparse(SparseRow<F>&& row) {
        ++rows_seen_;
        // Forward elimination against stored pivot rows.
        while (!row.entries.empty()) {
            const int lead = row.entries.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) break;
            const Elem factor = row.entries.front().second;  // pivot row leads with 1
            row = axpy(row, fld_.neg(factor), it->second);
        }
        if (row.entries.empty()) return;
        const int lead = row.entries.front().first;
        const Elem il = fld_.inv(row.entries.front().second);
        for (auto& [c, v] : row.entries) v = fld_.mul(v, il);
        pivots_.emplace(lead, std::move(row));
    }

    // row + factor * pivot, sparse merge.
    SparseRow<F> axpy(const SparseRow<F>& row, const Elem& factor, const SparseRow<F>& pivot) {
        SparseRow<F> out;
        out.entries.reserve(row.entries.size() + pivot.entries.size());
        std::size_t i = 0, j = 0;
        while (i < row.entries.size() || j < pivot.entries.size()) {
            if (j == pivot.entries.size() ||
                (i < row.entries.size() && row.entries[i].first < pivot.entries[j].first)) {
                out.entries.push_back(row.entries[i++]);
            } else if (i == row.entries.size() || pivot.entries[j].first < row.entries[i].first) {
                out.entries.emplace_back(pivot.entries[j].first,
                                         fld_.mul(factor, pivot.entries[j].second));
                ++j;
            } else {
                Elem v = fld_.add(row.entries[i].second,
                                  fld_.mul(factor, pivot.entries[j].second));
                if (!fld_.is_zero(v)) out.entries.emplace_back(row.entries[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    F fld_;
    int unknowns_;
    long long rows_seen_ = 0;
    std::map<int, SparseRow<F>> pivots_;  // keyed by pivot column
};

}  // namespace liestruct
