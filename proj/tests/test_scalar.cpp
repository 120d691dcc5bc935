#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidkit/scalar.hpp"

using namespace braidkit;

namespace {
FieldMode QF = FieldMode::qfield();

Scalar S(const std::string& t, const FieldMode& m = QF) { return Scalar::parse(t, m); }
} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == ZPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == ZPoly{1, 1});
    CHECK(cyclotomic_polynomial(3) == ZPoly{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == ZPoly{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == ZPoly{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == ZPoly{1, 0, -1, 0, 1});
}

TEST_CASE("parse clears negative exponents") {
    Scalar s = S("q - q^-1");
    CHECK(s.num() == ZPoly{-1, 0, 1}); // q^2 - 1
    CHECK(s.den() == ZPoly{0, 1});     // q
    CHECK(s.str() == "q - q^-1");
}

TEST_CASE("zero normalization") {
    CHECK(S("0/1").is_zero());
    CHECK(S("0").str() == "0");
    CHECK(S("q - q").is_zero());
    CHECK(S("q - q") == Scalar::zero(QF));
}

TEST_CASE("cyclotomic reduction examples") {
    FieldMode c2 = FieldMode::cyclotomic(2); // Phi_2 = q + 1
    CHECK(S("q^2", c2) == Scalar::one(c2));  // q^2 = 1 since q = -1
    FieldMode c4 = FieldMode::cyclotomic(4); // Phi_4 = q^2 + 1
    CHECK(S("q", c4) * S("q", c4) == Scalar::integer(-1, c4));
}

TEST_CASE("field arithmetic examples") {
    CHECK(S("q") * S("q^-1") == Scalar::one(QF));
    Scalar lhs = S("1", QF) / S("q - 1") + Scalar::one(QF) / S("q + 1");
    Scalar rhs = S("2*q") / S("q^2 - 1");
    CHECK(lhs == rhs);
    CHECK(lhs.str() == "(2*q)/(q^2 - 1)");
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Scalar::zero(QF).inv(), DivisionByZero);
    CHECK_THROWS_AS(S("q") / Scalar::zero(QF), DivisionByZero);
}

TEST_CASE("mode mixing is an error") {
    FieldMode c3 = FieldMode::cyclotomic(3);
    CHECK_THROWS_AS(S("q") + S("q", c3), ModeMismatch);
}

namespace {
Scalar random_scalar(std::mt19937& rng, const FieldMode& m) {
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3);
    Scalar acc = Scalar::zero(m);
    for (int t = 0; t < 3; ++t) {
        int c = coef(rng);
        if (c == 0) continue;
        acc += Scalar::integer(c, m) * Scalar::q_power(ex(rng), m);
    }
    if (m.kind() == FieldMode::Kind::QField) {
        // occasionally make a true rational function
        if (coef(rng) > 2) {
            Scalar den = Scalar::q_power(1, m) + Scalar::integer(2, m);
            acc = acc / den;
        }
    }
    return acc;
}
} // namespace

TEST_CASE("field axioms on random canonical values") {
    std::mt19937 rng(42);
    for (const FieldMode& m : {FieldMode::qfield(), FieldMode::cyclotomic(3), FieldMode::cyclotomic(4)}) {
        for (int trial = 0; trial < 40; ++trial) {
            Scalar a = random_scalar(rng, m), b = random_scalar(rng, m), c = random_scalar(rng, m);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(m));
        }
    }
}

TEST_CASE("parse-format round trip") {
    std::mt19937 rng(7);
    for (const FieldMode& m : {FieldMode::qfield(), FieldMode::cyclotomic(3), FieldMode::cyclotomic(5)}) {
        for (int trial = 0; trial < 60; ++trial) {
            Scalar a = random_scalar(rng, m);
            CHECK(Scalar::parse(a.str(), m) == a);
        }
    }
    // hand cases
    for (const char* t : {"0", "1", "-1", "q", "-1*q", "q^2 - 2*q + 1", "1/2*q^-3 + 5",
                          "(q^2 + 1)/(q^3 - q - 1)"}) {
        Scalar a = S(t);
        CHECK(Scalar::parse(a.str(), QF) == a);
    }
}

TEST_CASE("primitivity of the cyclotomic root") {
    for (int n : {2, 3, 4, 6}) {
        FieldMode m = FieldMode::cyclotomic(n);
        Scalar p = Scalar::one(m);
        Scalar qv = Scalar::q_power(1, m);
        for (int k = 1; k < n; ++k) {
            p = p * qv;
            CHECK_FALSE(p == Scalar::one(m));
        }
        CHECK(p * qv == Scalar::one(m));
    }
}

TEST_CASE("syntax errors are position annotated") {
    CHECK_THROWS_AS(S("q +"), SyntaxError);
    CHECK_THROWS_AS(S("3*"), SyntaxError);
    CHECK_THROWS_AS(S("q^"), SyntaxError);
    CHECK_THROWS_AS(S("1/0"), SyntaxError);
    try {
        S("q + #");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}
