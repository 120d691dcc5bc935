#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidkit/rmatrix.hpp"

using namespace braidkit;

namespace {
FieldMode QF = FieldMode::qfield();
Scalar qv() { return Scalar::q_power(1, QF); }
} // namespace

TEST_CASE("qybe: identity and glq pass, mutation fails with witness") {
    CHECK(qybe_check(standard_r(RFamily::Identity, 2, QF)).passed);
    RMatrix R = standard_r(RFamily::GLq, 2, QF);
    CHECK(qybe_check(R).passed);
    RMatrix bad = R;
    bad.at(0, 0, 0, 0) = qv() * qv();
    VerificationReport rep = qybe_check(bad);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.first_failure() != nullptr);
    CHECK_FALSE(rep.first_failure()->witness.empty());
}

TEST_CASE("qybe is scale invariant") {
    RMatrix R = standard_r(RFamily::GLq, 2, QF);
    CHECK(qybe_check(R.scaled(Scalar::parse("q^2 - 3", QF))).passed);
}

TEST_CASE("permutation squares to identity") {
    RMatrix P = standard_r(RFamily::Permutation, 2, QF);
    CHECK((P.linearized() * P.linearized()).is_identity());
}

TEST_CASE("second inverse: identity, diagonal, glq contraction identity") {
    RMatrix I2 = standard_r(RFamily::Identity, 2, QF);
    CHECK(second_inverse(I2) == I2);

    // diagonal R^i_j^k_l = lambda_{ik} delta^i_j delta^k_l -> entries inverted
    RMatrix D(2, QF);
    Scalar l00 = Scalar::integer(2, QF), l01 = qv(), l10 = qv() * qv(),
           l11 = Scalar::integer(5, QF);
    D.at(0, 0, 0, 0) = l00;
    D.at(0, 0, 1, 1) = l01;
    D.at(1, 1, 0, 0) = l10;
    D.at(1, 1, 1, 1) = l11;
    RMatrix Dt = second_inverse(D);
    CHECK(Dt.at(0, 0, 0, 0) == l00.inv());
    CHECK(Dt.at(0, 0, 1, 1) == l01.inv());
    CHECK(Dt.at(1, 1, 0, 0) == l10.inv());
    CHECK(Dt.at(1, 1, 1, 1) == l11.inv());

    for (int n : {2, 3}) {
        RMatrix R = standard_r(RFamily::GLq, n, QF);
        RMatrix Rt = second_inverse(R);
        CHECK((Rt.t2().linearized() * R.t2().linearized()).is_identity());
        CHECK((R.t2().linearized() * Rt.t2().linearized()).is_identity());
    }
}

TEST_CASE("dual braidings: snake checks and triangular composition") {
    for (int n : {2, 3}) {
        DualBraidings D = dual_braidings(standard_r(RFamily::GLq, n, QF));
        CHECK(D.report.passed);
    }
    // identity R: all maps are flips
    DualBraidings Did = dual_braidings(standard_r(RFamily::Identity, 2, QF));
    CHECK(Did.report.passed);
    Mat flip(4, 4, QF);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) flip.at(b * 2 + a, a * 2 + b) = Scalar::one(QF);
    CHECK(Did.psi_vec_vec == flip);
    CHECK(Did.psi_co_co == flip);
    // triangular R (identity satisfies R21 R12 = 1): Psi_{V*,V} o Psi_{V,V*} = id
    CHECK((Did.psi_co_vec * Did.psi_vec_co).is_identity());
}

TEST_CASE("pr minimal polynomial") {
    // R = identity: PR = P, minimal polynomial (x-1)(x+1)
    auto roots = pr_minimal_polynomial(standard_r(RFamily::Identity, 2, QF));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == Scalar::integer(-1, QF));
    CHECK(roots[1].value == Scalar::one(QF));

    // R = P: PR = P^2 = 1, minimal polynomial x - 1
    auto roots2 = pr_minimal_polynomial(standard_r(RFamily::Permutation, 2, QF));
    REQUIRE(roots2.size() == 1);
    CHECK(roots2[0].value == Scalar::one(QF));

    // glq(2): Hecke roots {q, -q^-1}
    auto roots3 = pr_minimal_polynomial(standard_r(RFamily::GLq, 2, QF));
    REQUIRE(roots3.size() == 2);
    Scalar mqinv = -qv().inv();
    CHECK(((roots3[0].value == qv() && roots3[1].value == mqinv) ||
           (roots3[1].value == qv() && roots3[0].value == mqinv)));
}

TEST_CASE("minimal polynomial annihilates PR") {
    for (RFamily f : {RFamily::Identity, RFamily::Permutation, RFamily::GLq}) {
        RMatrix R = standard_r(f, 2, QF);
        Mat PR = pr_matrix(R);
        Mat acc = Mat::identity(PR.rows(), QF);
        for (const auto& root : pr_minimal_polynomial(R)) {
            for (int t = 0; t < root.multiplicity; ++t)
                acc = acc * (PR - Mat::identity(PR.rows(), QF).scaled(root.value));
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("derive_rprime: hecke branch gives R' = q^-1 R") {
    RMatrix R = standard_r(RFamily::GLq, 2, QF);
    int idx = hecke_branch_index(R);
    auto roots = pr_minimal_polynomial(R);
    CHECK(roots[idx].value == -qv().inv());
    RPrimePair pr = derive_rprime(R, idx);
    CHECK(pr.r_rescaled == R.scaled(qv()));
    CHECK(pr.r_prime == R.scaled(qv().inv()));
    // (PR+1)(PR'-1) = 0 exactly
    Mat PRr = pr_matrix(pr.r_rescaled), PRp = pr_matrix(pr.r_prime);
    Mat I = Mat::identity(4, QF);
    CHECK(((PRr + I) * (PRp - I)).is_zero());
}

TEST_CASE("derive_rprime: identity R, root 1, alpha = 1") {
    RMatrix R = standard_r(RFamily::Identity, 2, QF);
    auto roots = pr_minimal_polynomial(R);
    int idx = (roots[0].value == Scalar::one(QF)) ? 0 : 1;
    RPrimePair pr = derive_rprime(R, idx, Scalar::one(QF));
    Mat PRr = pr_matrix(pr.r_rescaled), PRp = pr_matrix(pr.r_prime);
    Mat I = Mat::identity(4, QF);
    CHECK(((PRr + I) * (PRp - I)).is_zero());
    CHECK(pr.r_prime.linearized().try_inverse().has_value());
}

TEST_CASE("derive_rprime always satisfies the factor identity") {
    for (RFamily f : {RFamily::GLq, RFamily::Identity}) {
        RMatrix R = standard_r(f, 2, QF);
        auto roots = pr_minimal_polynomial(R);
        for (int idx = 0; idx < static_cast<int>(roots.size()); ++idx) {
            RPrimePair pr = derive_rprime(R, idx);
            Mat PRr = pr_matrix(pr.r_rescaled), PRp = pr_matrix(pr.r_prime);
            Mat I = Mat::identity(PRr.rows(), QF);
            CHECK(((PRr + I) * (PRp - I)).is_zero());
        }
    }
}

TEST_CASE("glq(3) constructor self-checks pass") {
    RMatrix R = standard_r(RFamily::GLq, 3, QF);
    CHECK(qybe_check(R).passed);
    auto roots = pr_minimal_polynomial(R);
    CHECK(roots.size() == 2);
}

TEST_CASE("unknown family") {
    CHECK_THROWS_AS(parse_family("slq"), UnknownFamily);
}

TEST_CASE("v matrix of glq(2) is invertible and reported") {
    RMatrix R = standard_r(RFamily::GLq, 2, QF);
    Mat V = v_matrix(second_inverse(R));
    CHECK(V.try_inverse().has_value());
}
