#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liestruct/solvers.hpp"

using namespace liestruct;

TEST_CASE("centroid of simple and current algebras") {
    QField q;
    CHECK(centroid(sl_n(q, 2)).space.dim() == 1);
    CHECK(centroid(sl_n(q, 3)).space.dim() == 1);
    CHECK(centroid(current_algebra(sl_n(q, 3), dual_numbers(q))).space.dim() == 2);
    CHECK(centroid(current_algebra(sl_n(q, 3), trunc_poly(q, 3))).space.dim() == 3);
    CHECK(centroid(nonabelian2(q)).space.dim() == 1);
    CHECK(centroid(current_algebra(nonabelian2(q), dual_numbers(q))).space.dim() == 2);
}

TEST_CASE("centroid elements commute with multiplications") {
    QField q;
    auto L = current_algebra(sl_n(q, 3), dual_numbers(q));
    auto rep = centroid(L);
    CHECK(rep.verified);
    for (const auto& flat : rep.space.vectors) {
        auto phi = linear_map_matrix(q, L.dim, flat);
        for (int x = 0; x < L.dim; ++x)
            for (int y = 0; y < L.dim; ++y) {
                auto phi_xy = L.sv_from_dense(detail::map_apply_cols(L, phi, L.prod(x, y)));
                Algebra<QField>::SparseVec ex{{x, q.one()}};
                auto phi_x = L.sv_from_dense(detail::map_apply_cols(L, phi, ex));
                Algebra<QField>::SparseVec phix_y;
                for (const auto& [j, cj] : phi_x)
                    phix_y = L.sv_add(phix_y, L.sv_scale(cj, L.prod(j, y)));
                CHECK(L.sv_is_zero(L.sv_sub(phi_xy, phix_y)));
            }
    }
}

TEST_CASE("nonperfect centroid matches the two-summand formula") {
    QField q;
    auto na2 = nonabelian2(q);
    auto dual = dual_numbers(q);
    auto sides = centroid_tensor_rhs(na2, dual);
    CHECK(sides.cent_l == 1);
    CHECK(sides.coker_derived == 1);
    CHECK(sides.center_image == 0);
    CHECK(sides.value == 2);
    CHECK(centroid(current_algebra(na2, dual)).space.dim() == sides.value);
}

TEST_CASE("poisson spaces of classical algebras") {
    QField q;
    auto sl2 = sl_n(q, 2);
    auto rep2 = poisson_quotient(sl2);
    CHECK(rep2.space.dim() == 1);
    CHECK(*rep2.quotient_dim == 0);
    auto sl3 = sl_n(q, 3);
    auto rep3 = poisson_quotient(sl3);
    CHECK(rep3.space.dim() == 2);
    CHECK(*rep3.quotient_dim == 1);
    CHECK(trivial_poisson_space(sl3).space.dim() == 1);
    CHECK(poisson_space(abelian_lie(q, 2)).space.dim() == 8);
}

TEST_CASE("poisson solutions pass the independent residual check") {
    QField q;
    auto sl3 = sl_n(q, 3);
    auto rep = poisson_space(sl3);
    CHECK(rep.verified);
    for (const auto& flat : rep.space.vectors) {
        auto star = bilinear_table(sl3, flat);
        auto chk = is_poisson(sl3, star);
        CHECK(chk.ok());
    }
}

TEST_CASE("poisson quotient over several prime fields") {
    for (uint32_t p : {101u, 103u}) {
        FpField f{p};
        auto L = current_algebra(sl_n(f, 3), dual_numbers(f));
        auto rep = poisson_quotient(L);
        CHECK(rep.space.dim() == 4);
        CHECK(*rep.quotient_dim == 2);
    }
}

TEST_CASE("dimension caps guard expensive solves") {
    FpField f7{7};
    auto KM = kac_moody_mod_p(f7);
    CHECK_THROWS_AS(poisson_space(KM, false), DimCapExceeded);
    CHECK_NOTHROW(centroid(KM, true));
}

TEST_CASE("hom-lie spaces and the tensor formula") {
    QField q;
    CHECK(homlie_space(sl_n(q, 2)).space.dim() == 6);
    CHECK(homlie_space(nonabelian2(q)).space.dim() == 4);
    auto sides_sl2 = homlie_tensor_rhs(sl_n(q, 2), dual_numbers(q));
    CHECK(sides_sl2.homlie_l == 6);
    CHECK(sides_sl2.annihilator == 0);
    CHECK(sides_sl2.span_dim == 12);
    auto sides_na2 = homlie_tensor_rhs(nonabelian2(q), trunc_poly(q, 3));
    CHECK(sides_na2.homlie_l == 4);
    CHECK(sides_na2.annihilator == 2);
    CHECK(sides_na2.span_dim == 4 * 3 + 2 * 9);
    CHECK(homlie_space(current_algebra(nonabelian2(q), trunc_poly(q, 3))).space.dim() ==
          sides_na2.span_dim);
}

TEST_CASE("hom-lie formula holds over a prime field too") {
    FpField f{101};
    auto lhs = homlie_space(current_algebra(sl_n(f, 2), trunc_poly(f, 3))).space.dim();
    CHECK(lhs == 18);
    CHECK(homlie_tensor_rhs(sl_n(f, 2), trunc_poly(f, 3)).span_dim == 18);
}

TEST_CASE("invariant forms") {
    QField q;
    auto sl3 = sl_n(q, 3);
    CHECK(invariant_forms(sl3, false).space.dim() == 1);
    CHECK(invariant_forms(sl3, true).space.dim() == 1);
    CHECK(invariant_forms(sl3, false, FormCondition::Cyclic).space.dim() == 1);
    auto L = current_algebra(sl3, dual_numbers(q));
    CHECK(invariant_forms(L, true).space.dim() == 2);
    CHECK(invariant_forms(abelian_lie(q, 2), false).space.dim() == 4);
}

TEST_CASE("derivation spaces") {
    QField q;
    CHECK(derivations(sl_n(q, 3)).space.dim() == 8);  // all inner
    CHECK(derivations(base_field_algebra(q)).space.dim() == 0);
    CHECK(derivations(local3(q)).space.dim() == 4);
    FpField f7{7};
    CHECK(derivations(semigroup_algebra(f7, zn_add(7))).space.dim() == 7);
}

TEST_CASE("third power associative deformations of sl2") {
    QField q;
    CHECK(third_power_assoc_space(sl_n(q, 2)).space.dim() == 3);
}

TEST_CASE("skew poisson variants stay inside the poisson space") {
    QField q;
    auto sl3 = sl_n(q, 3);
    auto P = poisson_space(sl3).space;
    for (bool left : {true, false}) {
        auto rep = skew_poisson_spaces(sl3, left);
        for (const auto& v : rep.space.vectors) CHECK(P.contains(v));
    }
}

TEST_CASE("certified zero-parameter matrix structures have no residual") {
    QField q;
    auto A = upper_tri2(q);
    auto S = sl_n_A(A, 3);
    SlnPoissonParams<QField> prm;
    prm.u = Vec<QField>(3, q.zero());
    prm.gamma = Mat<QField>(q, 3, 3);
    auto star = sln_basic_poisson(A, 3, SlnPoissonKind::I, prm);
    CHECK(is_poisson(S, star).ok());
}

TEST_CASE("nonzero central parameter violates the membership condition") {
    QField q;
    SlnPoissonParams<QField> prm;
    prm.u = Vec<QField>{q.one(), q.zero(), q.one()};  // the unit of ut2
    prm.gamma = Mat<QField>(q, 3, 3);
    CHECK_THROWS_AS(sln_basic_poisson(upper_tri2(q), 3, SlnPoissonKind::I, prm),
                    SideConditionViolated);
}

TEST_CASE("scalar-block action certified from the commutator line fails poissonity") {
    QField q;
    auto A = upper_tri2(q);
    auto S = sl_n_A(A, 3);
    SlnPoissonParams<QField> prm;
    prm.alpha = Mat<QField>(q, 3, 1);
    prm.alpha->a[0][0] = q.one();  // alpha(E12) = E11 + E22
    prm.alpha->a[2][0] = q.one();
    auto star = sln_basic_poisson(A, 3, SlnPoissonKind::II, prm);
    auto chk = is_poisson(S, star);
    CHECK_FALSE(chk.ok());
    CHECK(chk.violations > 0);
    REQUIRE(chk.first.has_value());
    CHECK((*chk.first)[0] == 0);
    CHECK((*chk.first)[1] == 7);
    CHECK((*chk.first)[2] == 0);
    REQUIRE(chk.first_residual.size() == 1);
    CHECK(q.eq(chk.first_residual.at(0), q.parse("-1/3")));
}

TEST_CASE("jordan-style product is poisson and not trivial on sl3") {
    QField q;
    auto sl3 = sl_n(q, 3);
    auto K = base_field_algebra(q);
    SlnPoissonParams<QField> prm;
    prm.u = Vec<QField>{q.one()};
    prm.gamma = Mat<QField>(q, 1, 1);
    prm.gamma->a[0][0] = q.parse("-1/3");
    auto star = sln_basic_poisson(K, 3, SlnPoissonKind::I, prm);
    CHECK(is_poisson(sl3, star).ok());
    Vec<QField> flat(static_cast<std::size_t>(27), q.zero());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (const auto& [k, c] : star.prod(x, y))
                flat[(std::size_t(x) * 3 + y) * 3 + k] = c;
    CHECK(poisson_space(sl3).space.contains(flat));
    CHECK_FALSE(trivial_poisson_space(sl3).space.contains(flat));
}

TEST_CASE("seven matrix probe on the displayed triple") {
    QField q;
    auto mk = [&](std::initializer_list<int> vals) {
        Mat<QField> m(q, 3, 3);
        int i = 0;
        for (int v : vals) {
            m.a[i / 3][i % 3] = q.from_long(v);
            ++i;
        }
        return m;
    };
    auto rep = seven_matrix_probe(mk({0, 1, 1, 0, 0, 0, 0, 0, 0}),
                                  mk({0, 0, 0, 1, 0, 1, 0, 0, 0}),
                                  mk({0, 0, 0, 0, 0, 0, 1, 1, 0}));
    CHECK(rep.rank_products == 6);
    CHECK(rep.rank_all == 6);
    CHECK(rep.independent);
    CHECK(rep.trace_diff == "0");
    auto smp = seven_matrix_sample(12345, 200);
    CHECK(smp.trials == 200);
    CHECK(smp.dependent == 0);
}

TEST_CASE("seven matrix probe rejects non-traceless input") {
    QField q;
    auto I = Mat<QField>::identity(q, 3);
    CHECK_THROWS_AS(seven_matrix_probe(I, I, I), BadParams);
}

TEST_CASE("solver reports carry provenance and kind names") {
    QField q;
    auto rep = centroid(sl_n(q, 2));
    CHECK(space_kind_name(rep.kind) == "centroid");
    CHECK_FALSE(rep.provenance.empty());
    auto pq = poisson_quotient(sl_n(q, 3));
    CHECK(space_kind_name(pq.kind) == "poisson_quotient");
    CHECK(pq.representatives.size() == 1);
}
