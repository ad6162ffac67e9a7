#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liestruct/matrix.hpp"
#include "liestruct/streaming.hpp"

using namespace liestruct;

namespace {

template <class F>
Mat<F> from_ints(const F& f, std::vector<std::vector<long>> rows) {
    Mat<F> m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.a[i][j] = f.from_long(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("rref produces the unique reduced form") {
    QField q;
    auto m = from_ints(q, {{2, 4, -2}, {1, 2, 0}, {3, 6, -1}});
    auto [r, rank] = rref(m);
    CHECK(rank == 2);
    // pivots normalized to 1, pivot columns cleared
    CHECK(q.eq(r.a[0][0], q.one()));
    CHECK(q.eq(r.a[0][1], q.from_long(2)));
    CHECK(q.eq(r.a[0][2], q.zero()));
    CHECK(q.eq(r.a[1][2], q.one()));
    for (int j = 0; j < 3; ++j) CHECK(q.is_zero(r.a[2][j]));
}

TEST_CASE("rank depends on the coefficient field") {
    QField q;
    FpField f5{5};
    // row2 = row1 + 5*row0: full rank over Q, a relation mod 5
    std::vector<std::vector<long>> rows = {{1, 0, 2}, {0, 1, 3}, {5, 1, 13}};
    CHECK(rank_of(from_ints(q, rows)) == 3);
    CHECK(rank_of(from_ints(f5, rows)) == 2);
}

TEST_CASE("nullspace vectors solve the system") {
    QField q;
    auto m = from_ints(q, {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
    auto ns = nullspace(m);
    CHECK(ns.dim() == 2);
    for (const auto& v : ns.vectors) {
        auto img = m.apply(v);
        for (const auto& c : img) CHECK(q.is_zero(c));
    }
}

TEST_CASE("subspace membership and coordinates") {
    QField q;
    std::vector<Vec<QField>> gens = {
        {q.from_long(1), q.from_long(0), q.from_long(2)},
        {q.from_long(0), q.from_long(1), q.from_long(-1)},
        {q.from_long(1), q.from_long(1), q.from_long(1)},  // dependent
    };
    auto sb = SubspaceBasis<QField>::from_span(q, 3, gens);
    CHECK(sb.dim() == 2);
    Vec<QField> inside = {q.from_long(2), q.from_long(3), q.from_long(1)};
    Vec<QField> outside = {q.from_long(0), q.from_long(0), q.from_long(1)};
    CHECK(sb.contains(inside));
    CHECK_FALSE(sb.contains(outside));
    auto co = sb.coordinates(inside);
    REQUIRE(co.has_value());
    Vec<QField> rebuilt(3, q.zero());
    for (int t = 0; t < sb.dim(); ++t)
        for (int j = 0; j < 3; ++j)
            rebuilt[j] = q.add(rebuilt[j], q.mul((*co)[t], sb.vectors[t][j]));
    for (int j = 0; j < 3; ++j) CHECK(q.eq(rebuilt[j], inside[j]));
    CHECK_FALSE(sb.coordinates(outside).has_value());
}

TEST_CASE("sum and intersection respect dimension formula") {
    FpField f7{7};
    auto plane1 = SubspaceBasis<FpField>::from_span(
        f7, 4,
        {{f7.one(), f7.zero(), f7.zero(), f7.zero()},
         {f7.zero(), f7.one(), f7.zero(), f7.zero()}});
    auto plane2 = SubspaceBasis<FpField>::from_span(
        f7, 4,
        {{f7.zero(), f7.one(), f7.zero(), f7.zero()},
         {f7.zero(), f7.zero(), f7.one(), f7.zero()}});
    auto s = plane1.sum(plane2);
    auto i = plane1.intersect(plane2);
    CHECK(s.dim() == 3);
    CHECK(i.dim() == 1);
    CHECK(s.dim() + i.dim() == plane1.dim() + plane2.dim());
    CHECK(plane1.contains(i.vectors[0]));
    CHECK(plane2.contains(i.vectors[0]));
}

TEST_CASE("solve_linear finds a particular solution or reports none") {
    QField q;
    auto m = from_ints(q, {{1, 1}, {1, -1}});
    Vec<QField> b = {q.from_long(3), q.from_long(1)};
    auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK(q.eq((*x)[0], q.from_long(2)));
    CHECK(q.eq((*x)[1], q.from_long(1)));
    auto bad = solve_linear(from_ints(q, {{1, 1}, {2, 2}}),
                            Vec<QField>{q.from_long(1), q.from_long(3)});
    CHECK_FALSE(bad.has_value());
}

TEST_CASE("streaming solver agrees with dense nullspace") {
    FpField f101{101};
    // 5 unknowns, structured rows with some redundancy
    std::vector<std::map<int, FpField::Elem>> rows;
    rows.push_back({{0, f101.one()}, {1, f101.from_long(2)}, {4, f101.from_long(-1)}});
    rows.push_back({{1, f101.one()}, {2, f101.from_long(3)}});
    rows.push_back({{0, f101.one()}, {1, f101.from_long(3)}, {2, f101.from_long(3)},
                    {4, f101.from_long(-1)}});  // sum of the first two
    rows.push_back({{3, f101.from_long(5)}});
    StreamingSolver<FpField> solver(f101, 5);
    Mat<FpField> dense(f101, static_cast<int>(rows.size()), 5);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        solver.add_row(rows[i]);
        for (const auto& [j, c] : rows[i]) dense.a[i][j] = c;
    }
    CHECK(solver.rank() == 3);
    CHECK(solver.rows_seen() == 4);
    auto ns = solver.nullspace();
    auto dense_ns = nullspace(dense);
    CHECK(ns.dim() == 2);
    CHECK(ns.dim() == dense_ns.dim());
    for (const auto& v : ns.vectors) CHECK(dense_ns.contains(v));
}

TEST_CASE("streaming solver ignores zero rows and repeats") {
    QField q;
    StreamingSolver<QField> solver(q, 3);
    solver.add_row({});
    solver.add_row({{0, q.one()}, {2, q.from_long(2)}});
    solver.add_row({{0, q.from_long(3)}, {2, q.from_long(6)}});
    CHECK(solver.rank() == 1);
    CHECK(solver.nullspace().dim() == 2);
}

TEST_CASE("packed pair indices enumerate without collisions") {
    const int n = 6;
    std::vector<int> seen_sym(sym_pair_count(n), 0), seen_skew(skew_pair_count(n), 0);
    for (int p = 0; p < n; ++p) {
        for (int q = p; q < n; ++q) ++seen_sym[sym_pair_index(n, p, q)];
        for (int q = p + 1; q < n; ++q) ++seen_skew[skew_pair_index(n, p, q)];
    }
    for (int c : seen_sym) CHECK(c == 1);
    for (int c : seen_skew) CHECK(c == 1);
}

TEST_CASE("matrix flatten and unflatten are inverse") {
    FpField f5{5};
    auto m = from_ints(f5, {{1, 2, 3}, {4, 0, 1}});
    auto back = Mat<FpField>::unflatten(f5, 2, 3, m.flatten());
    CHECK(m == back);
}
