#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braidkit/hopf.hpp"

using namespace braidkit;

TEST_CASE("zn_prime passes hopf and qt verification for n = 2, 3, 4") {
    for (int n : {2, 3, 4}) {
        FieldMode m = FieldMode::cyclotomic(n);
        auto [H, R] = zn_prime(n, m);
        CHECK(hopf_verify(H).passed);
        VerificationReport rep = qt_verify(H, R);
        CHECK(rep.passed);
        CHECK(rep.checks.size() >= 9); // 3 axioms + 6 lemma identities + delta-u
    }
    CHECK_THROWS_AS(zn_prime(3, FieldMode::cyclotomic(4)), ModeMismatch);
}

TEST_CASE("n = 1 gives the trivial Hopf algebra with R = 1 ox 1") {
    FieldMode m = FieldMode::cyclotomic(1);
    auto [H, R] = zn_prime(1, m);
    CHECK(H.d == 1);
    CHECK(hopf_verify(H).passed);
    CHECK(R.r.size() == 1);
    CHECK(R.r.begin()->second.is_one());
}

TEST_CASE("u = g for Z_2'") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    Vec u = qt_u_element(H, R);
    CHECK(u == H.basis_vec(1));
}

TEST_CASE("Z_2' R matches the displayed element") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    Scalar half = Scalar::rational(mpq_class(1, 2), m);
    SparseTensor want;
    st_add(want, {0, 0}, half);
    st_add(want, {0, 1}, half);
    st_add(want, {1, 0}, half);
    st_add(want, {1, 1}, -half);
    CHECK(R.r == want);
}

TEST_CASE("corrupted antipode fails hopf_verify at the antipode law") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    (*H.antipode)[0 * 2 + 1] = Scalar::one(m); // S(g) = 1 (wrong)
    (*H.antipode)[1 * 2 + 1] = Scalar::zero(m);
    VerificationReport rep = hopf_verify(H);
    CHECK_FALSE(rep.passed);
    CHECK(rep.first_failure()->name == "antipode");
}

TEST_CASE("group function Hopf algebra and bicharacters") {
    FieldMode m = FieldMode::cyclotomic(4);
    // G = Z_4, bicharacter q^{ab}
    Mat bi(4, 4, m);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) bi.at(a, b) = Scalar::q_power((a * b) % 4, m);
    GroupFunctionHopf G = group_function_hopf({4}, bi);
    CHECK(hopf_verify(G.fun).passed);
    CHECK(hopf_verify(G.grp).passed);
    CHECK(qt_verify(G.fun, G.qt).passed);

    // trivial bicharacter is valid and triangular
    Mat triv(4, 4, m);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) triv.at(a, b) = Scalar::one(m);
    GroupFunctionHopf G2 = group_function_hopf({4}, triv);
    CHECK(qt_verify(G2.fun, G2.qt).passed);

    // q^{ab+1} fails R(g, e) = 1
    Mat bad(4, 4, m);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) bad.at(a, b) = Scalar::q_power((a * b + 1) % 4, m);
    CHECK_THROWS_AS(group_function_hopf({4}, bad), NotABicharacter);
}

TEST_CASE("drinfeld double of kZ_2 and kZ_3") {
    {
        FieldMode m = FieldMode::cyclotomic(2);
        auto [H, R0] = zn_prime(2, m);
        auto [D, R] = drinfeld_double(H);
        CHECK(D.d == 4);
        CHECK(hopf_verify(D).passed);
        CHECK(qt_verify(D, R).passed);
    }
    {
        FieldMode m = FieldMode::cyclotomic(3);
        auto [H, R0] = zn_prime(3, m);
        auto [D, R] = drinfeld_double(H);
        CHECK(D.d == 9);
        CHECK(hopf_verify(D).passed);
        CHECK(qt_verify(D, R).passed);
    }
}

TEST_CASE("double of the trivial Hopf algebra is trivial") {
    FieldMode m = FieldMode::cyclotomic(1);
    auto [H, R0] = zn_prime(1, m);
    auto [D, R] = drinfeld_double(H);
    CHECK(D.d == 1);
    CHECK(R.r.size() == 1);
}

TEST_CASE("module braiding of Z_2' is the super flip") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    ModuleAction V = graded_module_action(H, {1, 1});
    CHECK(module_verify(H, V).passed);
    ModuleBraiding B = module_braiding(H, R, V, V);
    CHECK(B.report.passed);
    // Psi(v ox w) = (-1)^{|v||w|} w ox v on basis {v0 even, v1 odd}
    for (int v = 0; v < 2; ++v)
        for (int w = 0; w < 2; ++w)
            for (int wo = 0; wo < 2; ++wo)
                for (int vo = 0; vo < 2; ++vo) {
                    Scalar want = Scalar::zero(m);
                    if (wo == w && vo == v)
                        want = (v == 1 && w == 1) ? Scalar::integer(-1, m) : Scalar::one(m);
                    CHECK(B.psi.at(wo * 2 + vo, v * 2 + w) == want);
                }
    // triangular: Psi^2 = id
    CHECK((B.psi * B.psi).is_identity());
}

TEST_CASE("Z_n' braiding is q^{|v||w|} flip") {
    FieldMode m = FieldMode::cyclotomic(3);
    auto [H, R] = zn_prime(3, m);
    ModuleAction V = graded_module_action(H, {1, 1, 1});
    ModuleBraiding B = module_braiding(H, R, V, V);
    CHECK(B.report.passed);
    for (int v = 0; v < 3; ++v)
        for (int w = 0; w < 3; ++w) CHECK(B.psi.at(w * 3 + v, v * 3 + w) == Scalar::q_power(v * w, m));
}

TEST_CASE("trivial module braids as the plain flip") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    // counit action: 1-dim trivial module
    ModuleAction T;
    T.dv = 1;
    T.act.assign(H.d, Scalar::zero(m));
    for (int h = 0; h < H.d; ++h) T.act[h] = H.counit[h];
    ModuleAction V = graded_module_action(H, {1, 1});
    ModuleBraiding B = module_braiding(H, R, T, V);
    CHECK(B.report.passed);
    for (int w = 0; w < 2; ++w) CHECK(B.psi.at(w * 1 + 0, 0 * 2 + w).is_one());
}

TEST_CASE("hexagon identities for the module braiding") {
    FieldMode m = FieldMode::cyclotomic(3);
    auto [H, R] = zn_prime(3, m);
    ModuleAction V = graded_module_action(H, {1, 1, 1});
    const int dv = 3;
    ModuleBraiding B = module_braiding(H, R, V, V);
    // tensor product module action on V ox V
    ModuleAction VV;
    VV.dv = dv * dv;
    VV.act.assign(static_cast<size_t>(H.d) * dv * dv * dv * dv, Scalar::zero(m));
    for (int h = 0; h < H.d; ++h)
        for (const auto& [bc, c] : H.delta(h))
            for (int v = 0; v < dv; ++v)
                for (int w = 0; w < dv; ++w)
                    for (int vo = 0; vo < dv; ++vo)
                        for (int wo = 0; wo < dv; ++wo) {
                            Scalar t = c * V.a(bc.first, v, vo) * V.a(bc.second, w, wo);
                            if (!t.is_zero())
                                VV.act[(h * (dv * dv) + (v * dv + w)) * (dv * dv) +
                                       (vo * dv + wo)] += t;
                        }
    ModuleBraiding Bvw_z = module_braiding(H, R, VV, V);
    // Psi_{V ox W, Z} = (Psi_{V,Z} ox id)(id ox Psi_{W,Z})
    Mat lhs = Bvw_z.psi; // rows (z', (v,w)'), cols ((v,w), z)
    Mat rhs(dv * dv * dv, dv * dv * dv, m);
    for (int v = 0; v < dv; ++v)
        for (int w = 0; w < dv; ++w)
            for (int z = 0; z < dv; ++z)
                for (int z1 = 0; z1 < dv; ++z1)
                    for (int w1 = 0; w1 < dv; ++w1) {
                        const Scalar& c1 = B.psi.at(z1 * dv + w1, w * dv + z);
                        if (c1.is_zero()) continue;
                        for (int z2 = 0; z2 < dv; ++z2)
                            for (int v2 = 0; v2 < dv; ++v2) {
                                const Scalar& c2 = B.psi.at(z2 * dv + v2, v * dv + z1);
                                if (c2.is_zero()) continue;
                                rhs.at(z2 * dv * dv + (v2 * dv + w1), (v * dv + w) * dv + z) +=
                                    c1 * c2;
                            }
                    }
    CHECK(lhs == rhs);
}

TEST_CASE("anyonic dimension and trace") {
    {
        FieldMode m = FieldMode::cyclotomic(2);
        // superdimension p - m
        CHECK(anyonic_dim({3, 1}, 2, m) == Scalar::integer(2, m));
        // trace of identity = dim
        std::vector<Mat> id_blocks = {Mat::identity(3, m), Mat::identity(1, m)};
        CHECK(anyonic_trace(id_blocks, 2, m) == anyonic_dim({3, 1}, 2, m));
    }
    {
        FieldMode m = FieldMode::cyclotomic(3);
        // 1 + q^-1 + q^-4 reduced in Cyclotomic(3): 1 + 2 q^2 = -1 - 2q
        Scalar got = anyonic_dim({1, 1, 1}, 3, m);
        Scalar want = Scalar::one(m) + Scalar::q_power(-1, m) + Scalar::q_power(-4, m);
        CHECK(got == want);
    }
    CHECK_THROWS_AS(anyonic_dim({1, 1}, 2, FieldMode::qfield()), ModeMismatch);
}

TEST_CASE("crossed module checks") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    // Lemma 4.12 coaction on a graded module
    ModuleAction V = graded_module_action(H, {1, 1});
    Coaction co = qt_coaction(H, R, V);
    VerificationReport rep = crossed_module_check(H, V, co);
    CHECK(rep.passed);

    // trivial action + trivial coaction
    ModuleAction T;
    T.dv = 2;
    T.act.assign(static_cast<size_t>(H.d) * 4, Scalar::zero(m));
    for (int h = 0; h < H.d; ++h)
        for (int v = 0; v < 2; ++v) T.act[(h * 2 + v) * 2 + v] = H.counit[h];
    Coaction tc;
    tc.dv = 2;
    tc.dh = H.d;
    tc.co.assign(static_cast<size_t>(2) * H.d * 2, Scalar::zero(m));
    for (int v = 0; v < 2; ++v)
        for (int h = 0; h < H.d; ++h) tc.co[(v * H.d + h) * 2 + v] = H.unit[h];
    CHECK(crossed_module_check(H, T, tc).passed);

    // twist the coaction by a non-grouplike combination: compatibility fails
    Coaction badco = co;
    badco.co[(1 * H.d + 0) * 2 + 1] += Scalar::one(m);
    VerificationReport bad = crossed_module_check(H, V, badco);
    CHECK_FALSE(bad.passed);
}

TEST_CASE("nfold module algebra (Prop 4.1 instances)") {
    {
        FieldMode m = FieldMode::cyclotomic(2);
        auto [H, R] = zn_prime(2, m);
        CHECK(nfold_module_algebra_check(H, 1).passed);
        CHECK(nfold_module_algebra_check(H, 2).passed);
        auto [D, RD] = drinfeld_double(H);
        CHECK(nfold_module_algebra_check(D, 2).passed);
    }
    {
        FieldMode m = FieldMode::cyclotomic(3);
        auto [H, R] = zn_prime(3, m);
        CHECK(nfold_module_algebra_check(H, 3).passed);
    }
}

TEST_CASE("dual hopf is a hopf algebra and duality is involutive on constants") {
    FieldMode m = FieldMode::cyclotomic(3);
    auto [H, R] = zn_prime(3, m);
    FinDimHopf D = dual_hopf(H);
    CHECK(hopf_verify(D).passed);
    FinDimHopf DD = dual_hopf(D);
    CHECK(DD.product == H.product);
    CHECK(DD.coprod == H.coprod);
}

TEST_CASE("dual qt functional from the Z_2' element") {
    FieldMode m = FieldMode::cyclotomic(2);
    auto [H, R] = zn_prime(2, m);
    FinDimHopf A = dual_hopf(H);
    DualQT phi = dual_qt_from_qt(H, R, A);
    Scalar half = Scalar::rational(mpq_class(1, 2), m);
    CHECK(phi.phi.at(0, 0) == half);
    CHECK(phi.phi.at(1, 1) == -half);
}
