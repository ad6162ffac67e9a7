#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liestruct/constructors.hpp"

using namespace liestruct;

TEST_CASE("sl2 satisfies the Lie identities") {
    QField q;
    auto L = sl_n(q, 2);
    CHECK(L.dim == 3);
    CHECK(check_identity(L, Identity::Anticommutative).holds);
    CHECK(check_identity(L, Identity::Jacobi).holds);
    CHECK_FALSE(check_identity(L, Identity::Associative).holds);
}

TEST_CASE("upper triangular 2x2 is associative but not commutative") {
    QField q;
    auto A = upper_tri2(q);
    CHECK(A.dim == 3);
    CHECK(check_identity(A, Identity::Associative).holds);
    auto comm = check_identity(A, Identity::Commutative);
    CHECK_FALSE(comm.holds);
    REQUIRE(comm.tuple.size() == 2);
    // the reported pair really fails to commute
    auto [x, y] = std::pair{comm.tuple[0], comm.tuple[1]};
    CHECK_FALSE(A.sv_is_zero(A.sv_sub(A.prod(x, y), A.prod(y, x))));
    CHECK(check_identity(A, Identity::LieAdmissible).holds);
}

TEST_CASE("failed identity reports a checkable residual") {
    QField q;
    auto A = upper_tri2(q);
    auto rep = check_identity(A, Identity::Jacobi);
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(A.sv_is_zero(rep.residual));
    CHECK(rep.describe(A).find("jacobi") != std::string::npos);
}

TEST_CASE("identity names parse both ways") {
    for (auto id : {Identity::Anticommutative, Identity::Jacobi, Identity::Associative,
                    Identity::Commutative, Identity::LeftNovikov, Identity::RightNovikov,
                    Identity::LeftFermionicNovikov, Identity::RightFermionicNovikov,
                    Identity::LieAdmissible})
        CHECK(identity_parse(identity_name(id)) == id);
    CHECK_THROWS_AS(identity_parse("novikov"), ParseError);
}

TEST_CASE("novikov table satisfies the left-Novikov laws") {
    QField q;
    auto N = novikov_vi(q);
    CHECK(check_identity(N, Identity::LeftNovikov).holds);
    CHECK_FALSE(check_identity(N, Identity::Commutative).holds);
}

TEST_CASE("derived subalgebra and perfectness") {
    QField q;
    auto sl2 = sl_n(q, 2);
    CHECK(derived_subalgebra(sl2).dim() == 3);
    CHECK(is_perfect(sl2));
    auto na2 = nonabelian2(q);
    CHECK(derived_subalgebra(na2).dim() == 1);
    CHECK_FALSE(is_perfect(na2));
    auto ab = abelian_lie(q, 2);
    CHECK(derived_subalgebra(ab).dim() == 0);
}

TEST_CASE("derived subalgebra of sl2 works in characteristic 2") {
    FpField f2{2};
    // brackets are still spanning even though x*y - y*x reads x*y + y*x
    auto W = bi_zassenhaus(f2, 2, 1);
    CHECK(derived_subalgebra(W).dim() == 8);
}

TEST_CASE("centers") {
    QField q;
    CHECK(center(sl_n(q, 3)).dim() == 0);
    CHECK(center(abelian_lie(q, 2)).dim() == 2);
    CHECK(center(nonabelian2(q)).dim() == 0);
    CHECK_THROWS_AS(center(upper_tri2(q)), FlavorMismatch);
    CHECK(associative_center(upper_tri2(q)).dim() == 1);  // scalars only
    CHECK(associative_center(trunc_poly(q, 3)).dim() == 3);
}

TEST_CASE("ideal closure grows seeds to ideals") {
    QField q;
    auto sl2 = sl_n(q, 2);
    auto unit = [&](int dim, int i) {
        Vec<QField> e(dim, q.zero());
        e[i] = q.one();
        return e;
    };
    for (int i = 0; i < sl2.dim; ++i)
        CHECK(ideal_closure(sl2, {unit(3, i)}).dim() == 3);  // simple, so full
    auto na2 = nonabelian2(q);
    // [x,y] = y: the line through y is an ideal, the line through x is not
    CHECK(ideal_closure(na2, {unit(2, 1)}).dim() == 1);
    CHECK(ideal_closure(na2, {unit(2, 0)}).dim() == 2);
}

TEST_CASE("skew symmetrization of an associative algebra is Lie") {
    QField q;
    auto K = skew_symmetrize(upper_tri2(q));
    CHECK(K.flavor == Flavor::Lie);
    CHECK(check_identity(K, Identity::Anticommutative).holds);
    CHECK(check_identity(K, Identity::Jacobi).holds);
    // [E11, E12] = E12 in the commutator algebra
    auto br = K.prod(0, 1);
    REQUIRE(br.size() == 1);
    CHECK(q.eq(br.at(1), q.one()));
}

TEST_CASE("certify rejects a corrupted Lie table") {
    QField q;
    auto L = sl_n(q, 2);
    CHECK_NOTHROW(certify(L));
    auto broken = L;
    broken.set(0, 0, 2, q.one());  // [e0,e0] != 0
    CHECK_THROWS_AS(certify(broken), CertificationError);
}

TEST_CASE("sparse vector helpers") {
    QField q;
    auto L = sl_n(q, 2);
    Algebra<QField>::SparseVec v{{0, q.one()}, {2, q.from_long(2)}};
    auto w = L.sv_add(v, L.sv_neg(v));
    CHECK(L.sv_is_zero(w));
    auto dense = L.sv_dense(v);
    CHECK(dense.size() == 3);
    CHECK(q.eq(dense[2], q.from_long(2)));
    auto back = L.sv_from_dense(dense);
    CHECK(L.sv_is_zero(L.sv_sub(back, v)));
    CHECK(L.sv_str(v).find(L.label(0)) != std::string::npos);
}

TEST_CASE("mismatched moduli are rejected up front") {
    FpField f5{5}, f7{7};
    auto L = sl_n(f5, 2);
    CHECK_THROWS_AS(current_algebra(L, trunc_poly(f7, 2)), MixedFields);
}
