#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidkit/planes.hpp"

using namespace braidkit;

namespace {
FieldMode QF = FieldMode::qfield();

BraidedPlane quantum_plane(int bound = 8) {
    RMatrix R0 = standard_r(RFamily::GLq, 2, QF);
    RPrimePair pr = derive_rprime(R0, hecke_branch_index(R0));
    return covector_algebra(pr.r_rescaled, pr.r_prime, bound);
}

BraidedPlane braided_line(int bound = 8) {
    // n = 1: R = (q), R' = (1)
    RMatrix R(1, QF), Rp(1, QF);
    R.at(0, 0, 0, 0) = Scalar::q_power(1, QF);
    Rp.at(0, 0, 0, 0) = Scalar::one(QF);
    return covector_algebra(R, Rp, bound);
}
} // namespace

TEST_CASE("quantum plane relations are exactly x_i x_j = q x_j x_i for i > j") {
    BraidedPlane P = quantum_plane();
    const auto& rules = P.bialgebra.algebra.rules();
    REQUIRE(rules.size() == 1);
    CHECK(rules[0].lhs == Word{1, 0});
    CHECK(rules[0].rhs == NCPoly::monomial(Scalar::q_power(1, QF), {0, 1}));
    CHECK(P.has_antipode); // R21 R'12 = R'21 R12 holds for R' prop. to R
}

TEST_CASE("R' = P gives the free braided plane") {
    RMatrix R0 = standard_r(RFamily::GLq, 2, QF);
    RMatrix R = R0.scaled(Scalar::q_power(1, QF)); // normalization with PR+1 factor
    RMatrix P = standard_r(RFamily::Permutation, 2, QF);
    BraidedPlane plane = covector_algebra(R, P, 5);
    CHECK(plane.bialgebra.algebra.rules().empty());
}

TEST_CASE("braided line constructs with antipode") {
    BraidedPlane L = braided_line();
    CHECK(L.bialgebra.algebra.rules().empty());
    CHECK(L.has_antipode);
}

TEST_CASE("construction refuses a bad R'") {
    RMatrix R0 = standard_r(RFamily::GLq, 2, QF);
    RMatrix bad = standard_r(RFamily::Identity, 2, QF).scaled(Scalar::integer(3, QF));
    CHECK_THROWS_AS(covector_algebra(R0.scaled(Scalar::q_power(1, QF)), bad, 4),
                    RPrimeConditionFailed);
}

TEST_CASE("braided integers") {
    // m = 1 -> identity
    RMatrix R0 = standard_r(RFamily::GLq, 2, QF);
    CHECK(braided_integer(R0, 1).is_identity());
    // n = 1, R = (q): [m;R] = 1 + q + ... + q^{m-1}
    RMatrix R1(1, QF);
    R1.at(0, 0, 0, 0) = Scalar::q_power(1, QF);
    for (int mm = 1; mm <= 6; ++mm) {
        Mat M = braided_integer(R1, mm);
        Scalar want = Scalar::zero(QF);
        for (int t = 0; t < mm; ++t) want += Scalar::q_power(t, QF);
        CHECK(M.at(0, 0) == want);
    }
    // R = P makes every summand the identity (PR = P^2 = 1): [3;P] = 3 id
    RMatrix P2 = standard_r(RFamily::Permutation, 2, QF);
    Mat M3 = braided_integer(P2, 3);
    CHECK(M3 == Mat::identity(8, QF).scaled(Scalar::integer(3, QF)));
}

TEST_CASE("partial: dx = 1 and the Jackson derivative on the braided line") {
    BraidedPlane L = braided_line();
    NCPoly x = NCPoly::monomial(Scalar::one(QF), {0});
    CHECK(partial(L, 0, x) == NCPoly::unit(QF));
    NCPoly xm = x;
    for (int mm = 2; mm <= 6; ++mm) {
        xm = xm * x;
        NCPoly d = partial(L, 0, xm);
        Scalar want = Scalar::zero(QF);
        for (int t = 0; t < mm; ++t) want += Scalar::q_power(t, QF);
        NCPoly expect(QF);
        expect.add_term(want, Word(mm - 1, 0));
        CHECK(d == expect);
    }
}

TEST_CASE("quantum plane partials, two evaluation routes") {
    BraidedPlane P = quantum_plane();
    NCPoly x0 = NCPoly::monomial(Scalar::one(QF), {0});
    NCPoly x1 = NCPoly::monomial(Scalar::one(QF), {1});
    // d^0 (x0 x1) and d^1 (x0 x1) via the [2;R] contraction
    NCPoly d0 = partial(P, 0, x0 * x1);
    NCPoly d1 = partial(P, 1, x0 * x1);
    // cross-check against the Leibniz expansion by hand:
    // d^0(x0 x1) = (d^0 x0) x1 + crossing(d^0 past x0) d(x1) = x1 + ...
    CHECK_FALSE(d0.is_zero());
    CHECK_FALSE(d1.is_zero());
    // linearity
    CHECK(partial(P, 0, x0 * x1 + x1 * x0) ==
          P.bialgebra.algebra.normal_form(d0 + partial(P, 0, x1 * x0)));
}

TEST_CASE("leibniz and operator relations on the braided line") {
    BraidedPlane L = braided_line();
    CHECK(leibniz_check(L, 4).passed);
}

TEST_CASE("leibniz and operator relations on the quantum plane") {
    BraidedPlane P = quantum_plane();
    VerificationReport rep = leibniz_check(P, 4);
    CHECK(rep.passed);
}

TEST_CASE("negative control: dropping a braided-integer term breaks the two routes") {
    BraidedPlane P = quantum_plane();
    // corrupted [2;R] = identity (the (PR)12 summand dropped): the bad
    // derivative of x0 x1 against index 1 loses its only contribution
    Mat bad = Mat::identity(4, QF);
    Word w = {0, 1};
    NCPoly direct_bad(QF);
    for (int t = 0; t < 2; ++t) {
        const Scalar& c = bad.at(1 * 2 + t, 0 * 2 + 1);
        if (c.is_zero()) continue;
        direct_bad.add_term(c, {t});
    }
    NCPoly direct_good = partial(P, 1, NCPoly::monomial(Scalar::one(QF), w));
    CHECK_FALSE(direct_good.is_zero());
    CHECK_FALSE(P.bialgebra.algebra.normal_form(direct_bad) == direct_good);
}

TEST_CASE("additive coproduct and antipode axioms") {
    BraidedPlane P = quantum_plane();
    CHECK(bialgebra_axiom_check(P.bialgebra, 3).passed);
    BraidedPlane L = braided_line();
    CHECK(bialgebra_axiom_check(L.bialgebra, 3).passed);
}

TEST_CASE("vector algebra for the quantum plane data") {
    RMatrix R0 = standard_r(RFamily::GLq, 2, QF);
    RPrimePair pr = derive_rprime(R0, hecke_branch_index(R0));
    BraidedPlane V = vector_algebra(pr.r_rescaled, pr.r_prime, 6);
    REQUIRE(V.bialgebra.algebra.rules().size() == 1);
    CHECK(V.has_antipode);
    CHECK(bialgebra_axiom_check(V.bialgebra, 3).passed);
}
