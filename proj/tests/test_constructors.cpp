#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liestruct/catalog.hpp"
#include "liestruct/constructors.hpp"

using namespace liestruct;

namespace {

template <class F>
bool tables_equal(const Algebra<F>& A, const Algebra<F>& B) {
    if (A.dim != B.dim) return false;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            if (!A.sv_is_zero(A.sv_sub(A.prod(i, j), B.prod(i, j)))) return false;
    return true;
}

}  // namespace

TEST_CASE("current algebra of sl2 over dual numbers") {
    QField q;
    auto L = current_algebra(sl_n(q, 2), dual_numbers(q));
    CHECK(L.dim == 6);
    CHECK(L.flavor == Flavor::Lie);
    CHECK(check_identity(L, Identity::Jacobi).holds);
    // [e(x)t, f(x)t] = h(x)t^2 = 0
    bool saw_nonzero = false, t_t_vanishes = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto br = L.prod(i * 2 + 1, j * 2 + 1);
            if (!L.sv_is_zero(br)) t_t_vanishes = false;
            if (!L.sv_is_zero(L.prod(i * 2, j * 2))) saw_nonzero = true;
        }
    CHECK(saw_nonzero);
    CHECK(t_t_vanishes);
}

TEST_CASE("truncated polynomials multiply with cutoff") {
    QField q;
    auto A = trunc_poly(q, 3);
    CHECK(A.dim == 3);
    CHECK(A.flavor == Flavor::AssocCommutativeUnital);
    CHECK(A.unit_index == 0);
    auto t2 = A.prod(1, 1);
    REQUIRE(t2.size() == 1);
    CHECK(q.eq(t2.at(2), q.one()));
    CHECK(A.sv_is_zero(A.prod(1, 2)));  // t * t^2 = 0
    CHECK(A.sv_is_zero(A.prod(2, 2)));
}

TEST_CASE("local3 has radical of square zero off the socle") {
    QField q;
    auto A = local3(q);
    CHECK(A.dim == 3);
    CHECK(check_identity(A, Identity::Associative).holds);
    CHECK(check_identity(A, Identity::Commutative).holds);
    // u*u = 0, u*v = 0, v*v = 0 for the two radical generators
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j < 3; ++j) CHECK(A.sv_is_zero(A.prod(i, j)));
}

TEST_CASE("semigroup algebra of cyclic additive semigroup") {
    FpField f5{5};
    auto A = semigroup_algebra(f5, zn_add(5));
    CHECK(A.dim == 5);
    CHECK(A.flavor == Flavor::AssocCommutativeUnital);
    CHECK(A.unit_index == 0);
    auto g = A.prod(2, 4);
    REQUIRE(g.size() == 1);
    CHECK(f5.eq(g.at(1), f5.one()));  // 2+4 = 1 mod 5
}

TEST_CASE("identity character is a quasicharacter only at matching characteristic") {
    FpField f5{5};
    CHECK_NOTHROW(identity_character(f5, zn_add(5)));
    CHECK_THROWS_AS(identity_character(f5, zn_add(3)), NotQuasiCharacter);
    FpField f3{3};
    CHECK_NOTHROW(identity_character(f3, zn_add(3)));
}

TEST_CASE("quasicharacter witness pins a concrete violation") {
    FpField f5{5};
    auto G = zn_add(3);
    std::vector<FpField::Elem> chi = {f5.zero(), f5.one(), f5.from_long(2)};
    auto w = quasicharacter_witness(f5, G, chi);
    REQUIRE(w.has_value());
    auto [a, b, c] = *w;
    // chi(ab) - chi(ac) != chi(b) - chi(c) at the witness
    auto lhs = f5.sub(chi[G.table[a * 3 + b]], chi[G.table[a * 3 + c]]);
    auto rhs = f5.sub(chi[b], chi[c]);
    CHECK_FALSE(f5.eq(lhs, rhs));
}

TEST_CASE("witt mod 7 table and simplicity") {
    FpField f7{7};
    auto W = witt_mod_p(f7);
    CHECK(W.dim == 7);
    CHECK(check_identity(W, Identity::Jacobi).holds);
    for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) {
            Algebra<FpField>::SparseVec want;
            auto c = f7.from_long(m - n);
            if (!f7.is_zero(c)) want[(m + n) % 7] = c;
            CHECK(W.sv_is_zero(W.sv_sub(W.prod(m, n), want)));
        }
    for (int i = 0; i < 7; ++i) {
        Vec<FpField> seed(7, f7.zero());
        seed[i] = f7.one();
        CHECK(ideal_closure(W, {seed}).dim() == 7);
    }
}

TEST_CASE("mod five affinization has heisenberg-style brackets") {
    FpField f5{5};
    auto L = affinization_vi(f5, 5);
    CHECK(L.dim == 10);
    CHECK(check_identity(L, Identity::Jacobi).holds);
    auto idx = [](int i, int a) { return i * 5 + a; };
    for (int m = 0; m < 5; ++m)
        for (int n = 0; n < 5; ++n) {
            const int w = ((m + n - 1) % 5 + 5) % 5;
            Algebra<FpField>::SparseVec ee, eh, he;
            auto cee = f5.from_long(m - n);
            if (!f5.is_zero(cee)) ee[idx(0, w)] = cee;
            auto ceh = f5.from_long(-n);
            if (!f5.is_zero(ceh)) eh[idx(1, w)] = ceh;
            auto che = f5.from_long(m);
            if (!f5.is_zero(che)) he[idx(1, w)] = che;
            CHECK(L.sv_is_zero(L.sv_sub(L.prod(idx(0, m), idx(0, n)), ee)));
            CHECK(L.sv_is_zero(L.sv_sub(L.prod(idx(0, m), idx(1, n)), eh)));
            CHECK(L.sv_is_zero(L.sv_sub(L.prod(idx(1, m), idx(0, n)), he)));
            CHECK(L.sv_is_zero(L.prod(idx(1, m), idx(1, n))));
        }
}

TEST_CASE("affinization requires matching characteristic") {
    FpField f5{5};
    CHECK_THROWS_AS(affinization_vi(f5, 7), BadParams);
}

TEST_CASE("n_chi_g rejects tables that are not left Novikov") {
    FpField f5{5};
    auto G = zn_add(1);
    CHECK_THROWS_AS(n_chi_g(upper_tri2(f5), G, identity_character(f5, G)), FlavorMismatch);
}

TEST_CASE("bi-Zassenhaus algebra in characteristic two") {
    FpField f2{2};
    auto W = bi_zassenhaus(f2, 2, 1);
    CHECK(W.dim == 16);
    CHECK(check_identity(W, Identity::Anticommutative).holds);
    CHECK(check_identity(W, Identity::Jacobi).holds);
    CHECK_THROWS_AS(bi_zassenhaus(FpField{3}, 2, 1), InputError);
    CHECK_THROWS_AS(bi_zassenhaus(f2, 1, 1), BadParams);
}

TEST_CASE("schrodinger-virasoro seed Novikov algebra") {
    QField q;
    auto N = schrodinger_virasoro_novikov(q);
    CHECK(N.dim == 3);
    CHECK(check_identity(N, Identity::LeftNovikov).holds);
    CHECK_THROWS_AS(schrodinger_virasoro_novikov(FpField{2}), InputError);
}

TEST_CASE("matrix algebra over a coefficient algebra") {
    QField q;
    auto M = sl_n_A(dual_numbers(q), 3);
    CHECK(M.dim == 16);  // commutative coefficients leave no trace block
    CHECK(check_identity(M, Identity::Jacobi).holds);
    auto S = sl_n_A(upper_tri2(q), 3);
    CHECK(S.dim == 25);  // 8*3 + [A,A]
    CHECK(check_identity(S, Identity::Jacobi).holds);
}

TEST_CASE("sl_n over the base field matches the special linear table") {
    QField q;
    auto L = sl_n(q, 3);
    CHECK(L.dim == 8);
    CHECK(is_perfect(L));
    CHECK(center(L).dim() == 0);
}

TEST_CASE("characteristic dividing n is rejected only when it matters") {
    FpField f3{3};
    CHECK_NOTHROW(sl_n(f3, 3));  // commutative coefficients, no trace division
    CHECK_THROWS_AS(sl_n_A(upper_tri2(f3), 3), CharDividesN);
}

TEST_CASE("extended current algebra certifies its defining data") {
    FpField f7{7};
    auto KM = kac_moody_mod_p(f7);
    CHECK(KM.dim == 23);  // 3*7 + z + d
    CHECK(check_identity(KM, Identity::Jacobi).holds);
    CHECK(check_identity(KM, Identity::Anticommutative).holds);
    // central element never appears on the left
    const int zi = 21;
    for (int j = 0; j < KM.dim; ++j) CHECK(KM.sv_is_zero(KM.prod(zi, j)));
}

TEST_CASE("dual operad bracket reproduces the current algebra") {
    QField q;
    auto direct = current_algebra(sl_n(q, 2), dual_numbers(q));
    auto viaop = dual_operad_bracket(sl_n(q, 2), dual_numbers(q));
    CHECK(tables_equal(direct, viaop));
}

TEST_CASE("dual operad bracket reproduces the twisted group construction") {
    FpField f5{5};
    auto N = novikov_vi(f5);
    auto G = zn_add(5);
    auto chi = identity_character(f5, G);
    auto expected = n_chi_g_table(N, G, chi.values);
    auto twisted = twisted_semigroup_algebra(f5, G, chi.values);
    auto viaop = dual_operad_bracket(N, twisted);
    CHECK(tables_equal(expected, viaop));
}

TEST_CASE("dual operad bracket rejects non-dual flavor pairs") {
    QField q;
    CHECK_THROWS_AS(dual_operad_bracket(sl_n(q, 2), sl_n(q, 2)), NotDualPair);
}

TEST_CASE("catalog round trip by name") {
    auto any = catalog_build(FieldSpec::rationals(), "current:sl3,trunc_poly:3");
    auto* L = std::get_if<Algebra<QField>>(&any);
    REQUIRE(L != nullptr);
    CHECK(L->dim == 24);
    CHECK_THROWS_AS(catalog_build(FieldSpec::rationals(), "nosuch"), InputError);
    CHECK_THROWS_AS(catalog_build(FieldSpec::rationals(), "trunc_poly:x"), InputError);
    auto w = catalog_build(FieldSpec::prime(7), "witt_mod_p");
    CHECK(std::get<Algebra<FpField>>(w).dim == 7);
}

TEST_CASE("derivation certificates") {
    QField q;
    auto A = trunc_poly(q, 3);
    // d/dt scaled to the basis: d(t^k) = k t^(k-1)
    Mat<QField> d(q, 3, 3);
    d.a[0][1] = q.one();
    d.a[1][2] = q.from_long(2);
    CHECK_NOTHROW(certify_derivation(A, d));
    Mat<QField> bad(q, 3, 3);
    bad.a[0][0] = q.one();  // sends 1 to 1, not a derivation
    CHECK_THROWS_AS(certify_derivation(A, bad), NotDerivation);
}

TEST_CASE("invariant form certificates on sl2") {
    QField q;
    auto L = sl_n(q, 2);
    // the trace form in basis (E12, E21, H): <E12,E21> = 1, <H,H> = 2
    Mat<QField> g(q, 3, 3);
    g.a[0][1] = q.one();
    g.a[1][0] = q.one();
    g.a[2][2] = q.from_long(2);
    CHECK_NOTHROW(certify_invariant_form(L, g));
    Mat<QField> bad = Mat<QField>::identity(q, 3);
    CHECK_THROWS_AS(certify_invariant_form(L, bad), FormNotInvariant);
}
