#include "braidkit/bmatrix.hpp"

#include <sstream>

namespace braidkit {

namespace {

std::vector<std::string> gen_names(int n, const std::string& letter) {
    std::vector<std::string> g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.push_back(letter + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
    return g;
}

} // namespace

std::vector<NCPoly> bmatrix_relations(const RMatrix& R) {
    const int n = R.n();
    const FieldMode& m = R.mode();
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    NCPoly p(m);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int c = 0; c < n; ++c)
                                for (int d = 0; d < n; ++d) {
                                    Scalar c1 = R.at(k, a, i, b) * R.at(c, j, a, d);
                                    if (!c1.is_zero()) p.add_term(c1, {b * n + c, d * n + l});
                                    Scalar c2 = R.at(a, b, i, c) * R.at(d, j, b, l);
                                    if (!c2.is_zero()) p.add_term(-c2, {k * n + a, c * n + d});
                                }
                    if (!p.is_zero()) rels.push_back(p);
                }
    return rels;
}

BraidOp bmatrix_braiding(const RMatrix& R) {
    const int n = R.n();
    const FieldMode& m = R.mode();
    RMatrix Rinv = R.inverse();
    RMatrix Rt = second_inverse(R);
    const int g = n * n;
    std::vector<std::vector<BraidOp::Entry>> table(static_cast<size_t>(g) * g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    auto& cell = table[(i * n + j) * g + (k * n + l)];
                    for (int p = 0; p < n; ++p)
                        for (int qq = 0; qq < n; ++qq)
                            for (int mm = 0; mm < n; ++mm)
                                for (int nn = 0; nn < n; ++nn) {
                                    Scalar acc = Scalar::zero(m);
                                    for (int a = 0; a < n; ++a)
                                        for (int b = 0; b < n; ++b)
                                            for (int c = 0; c < n; ++c)
                                                for (int d = 0; d < n; ++d)
                                                    acc += R.at(i, a, d, p) * Rinv.at(a, mm, qq, b) *
                                                           R.at(nn, c, b, l) * Rt.at(c, j, k, d);
                                    if (!acc.is_zero())
                                        cell.push_back({acc, p * n + qq, mm * n + nn});
                                }
                }
    return BraidOp::from_table(g, g, std::move(table), m);
}

RMatrix q_matrix(const RMatrix& R) {
    return RMatrix::from_linearized(R.r21().linearized() * R.linearized(), R.n());
}

BraidedMatrixAlgebra braided_matrix_algebra(const RMatrix& R, int degree_bound) {
    const FieldMode& m = R.mode();
    if (!R.linearized().try_inverse()) throw NotBiInvertible("R is singular");
    RMatrix Rinv = R.inverse();
    RMatrix Rt;
    try {
        Rt = second_inverse(R);
    } catch (const NotDualizable& e) {
        throw NotBiInvertible(std::string("second-inverse missing: ") + e.what());
    }
    const int n = R.n();
    QuotientAlgebra alg =
        quotient_from_relations(gen_names(n, "u"), bmatrix_relations(R), degree_bound, m);
    BraidOp psi = bmatrix_braiding(R);
    // matrix coproduct and counit
    std::vector<NCPoly> cop;
    std::vector<Scalar> cou;
    const int g = n * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCPoly d(m);
            for (int a = 0; a < n; ++a) d.add_term(Scalar::one(m), {i * n + a, g + a * n + j});
            cop.push_back(d);
            cou.push_back(i == j ? Scalar::one(m) : Scalar::zero(m));
        }
    BraidedMatrixAlgebra BM{R, Rinv, Rt,
                            make_braided_bialgebra(std::move(alg), std::move(psi), std::move(cop),
                                                   std::move(cou), std::nullopt),
                            v_matrix(Rt).try_inverse().has_value()};
    // self-verification per the type invariants
    VerificationReport desc = psi_descends(BM.bialgebra.algebra, BM.bialgebra.psi,
                                           std::min(3, degree_bound));
    if (!desc.passed)
        throw InvalidInput("B(R) braiding does not descend to the quotient: " +
                           desc.first_failure()->witness);
    VerificationReport ax = bialgebra_axiom_check(BM.bialgebra, 2);
    if (!ax.passed)
        throw InvalidInput("B(R) bialgebra axioms failed: " + ax.first_failure()->name);
    return BM;
}

Mat canonical_rep(const BraidedMatrixAlgebra& BM, const Word& mono) {
    const int n = BM.n();
    const FieldMode& m = BM.R.mode();
    RMatrix Q = q_matrix(BM.R);
    Mat acc = Mat::identity(n, m);
    for (int g : mono) {
        int i = g / n, j = g % n;
        Mat M(n, n, m);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) M.at(k, l) = Q.at(i, j, k, l);
        acc = acc * M;
    }
    return acc;
}

NCPoly transmute_monomial(const BraidedMatrixAlgebra& BM, const FRTBialgebra& A,
                          const Word& mono) {
    const int n = BM.n();
    const FieldMode& m = BM.R.mode();
    if (BM.R.n() != A.n()) throw InvalidInput("B(R) and A(R) dimensions differ");
    const RMatrix& R = BM.R;
    const RMatrix& Rt = BM.Rtilde;
    NCPoly out(m);
    switch (mono.size()) {
        case 0:
            return NCPoly::unit(m);
        case 1:
            out.add_term(Scalar::one(m), {mono[0]});
            break;
        case 2: {
            int i = mono[0] / n, j = mono[0] % n, k = mono[1] / n, l = mono[1] % n;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d) {
                            Scalar v = R.at(i, a, c, d) * Rt.at(b, j, k, c);
                            if (!v.is_zero()) out.add_term(v, {a * n + b, d * n + l});
                        }
            break;
        }
        case 3: {
            int i = mono[0] / n, j = mono[0] % n, k = mono[1] / n, l = mono[1] % n,
                mm = mono[2] / n, nn = mono[2] % n;
            // u^i_j u^k_l u^m_n = t^d_b t^s_u t^z_n R^i_a^p_q R^a_d^w_y Rt^b_c^v_w
            //                     Rt^c_j^k_p R^q_s^y_z Rt^u_l^m_v
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d)
                            for (int p = 0; p < n; ++p)
                                for (int qq = 0; qq < n; ++qq)
                                    for (int s = 0; s < n; ++s)
                                        for (int u = 0; u < n; ++u)
                                            for (int v = 0; v < n; ++v)
                                                for (int w = 0; w < n; ++w)
                                                    for (int y = 0; y < n; ++y)
                                                        for (int z = 0; z < n; ++z) {
                                                            Scalar val = R.at(i, a, p, qq) *
                                                                         R.at(a, d, w, y) *
                                                                         Rt.at(b, c, v, w) *
                                                                         Rt.at(c, j, k, p) *
                                                                         R.at(qq, s, y, z) *
                                                                         Rt.at(u, l, mm, v);
                                                            if (!val.is_zero())
                                                                out.add_term(val,
                                                                             {d * n + b, s * n + u,
                                                                              z * n + nn});
                                                        }
            break;
        }
        default:
            throw DegreeUnsupported("transmutation printed only to degree 3, got length " +
                                    std::to_string(mono.size()));
    }
    return A.algebra.normal_form(out);
}

ChiRelations chi_relations(const BraidedMatrixAlgebra& BM) {
    const int n = BM.n();
    const FieldMode& m = BM.R.mode();
    const int g = n * n;
    ChiRelations out;
    out.gens = gen_names(n, "chi");

    // substitute u^i_j = delta + chi^i_j into the u-relations
    auto substitute_u = [&](const NCPoly& urel) {
        NCPoly p(m);
        urel.for_terms([&](const Word& w, const Scalar& c) {
            // each letter expands to (delta + chi); multiply out
            std::vector<std::pair<Scalar, Word>> acc = {{c, {}}};
            for (int letter : w) {
                int i = letter / n, j = letter % n;
                std::vector<std::pair<Scalar, Word>> next;
                for (auto& [cc, ww] : acc) {
                    if (i == j) next.push_back({cc, ww});
                    Word w2 = ww;
                    w2.push_back(letter);
                    next.push_back({cc, w2});
                }
                acc = std::move(next);
            }
            for (auto& [cc, ww] : acc) p.add_term(cc, ww);
        });
        return p;
    };
    for (const NCPoly& r : bmatrix_relations(BM.R)) out.relations.push_back(substitute_u(r));

    // coproduct table: Delta chi = chi ox 1 + 1 ox chi + chi ox chi
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCPoly d(m);
            d.add_term(Scalar::one(m), {i * n + j});
            d.add_term(Scalar::one(m), {g + i * n + j});
            for (int a = 0; a < n; ++a) d.add_term(Scalar::one(m), {i * n + a, g + a * n + j});
            out.coproduct.push_back(d);
        }

    // displayed form: R21 chi1 R12 chi2 - chi2 R21 chi1 R12 = Q12 chi2 - chi2 Q12
    RMatrix Q = q_matrix(BM.R);
    std::vector<NCPoly> displayed;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    NCPoly p(m);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            for (int c = 0; c < n; ++c)
                                for (int d = 0; d < n; ++d) {
                                    Scalar c1 = BM.R.at(k, a, i, b) * BM.R.at(c, j, a, d);
                                    if (!c1.is_zero()) p.add_term(c1, {b * n + c, d * n + l});
                                    Scalar c2 = BM.R.at(a, b, i, c) * BM.R.at(d, j, b, l);
                                    if (!c2.is_zero()) p.add_term(-c2, {k * n + a, c * n + d});
                                }
                    // right side chi2 Q12 - Q12 chi2, the sign consistent with
                    // chi = u - 1 and the coproduct chi ox 1 + 1 ox chi + chi ox chi
                    for (int b = 0; b < n; ++b) {
                        Scalar c3 = Q.at(i, j, k, b);
                        if (!c3.is_zero()) p.add_term(c3, {b * n + l});
                        Scalar c4 = Q.at(i, j, b, l);
                        if (!c4.is_zero()) p.add_term(-c4, {k * n + b});
                    }
                    if (!p.is_zero()) displayed.push_back(p);
                }

    // linear equivalence over Scalar after expansion: identical row spans
    auto span_rref = [&](const std::vector<NCPoly>& rels) {
        // collect the word basis
        std::vector<Word> basis;
        for (const auto& r : rels)
            r.for_terms([&](const Word& w, const Scalar&) {
                if (std::find(basis.begin(), basis.end(), w) == basis.end()) basis.push_back(w);
            });
        std::sort(basis.begin(), basis.end(), deglex_less);
        Mat M(static_cast<int>(rels.size()), static_cast<int>(basis.size()), m);
        for (size_t r = 0; r < rels.size(); ++r)
            rels[r].for_terms([&](const Word& w, const Scalar& c) {
                auto it = std::find(basis.begin(), basis.end(), w);
                M.at(static_cast<int>(r), static_cast<int>(it - basis.begin())) = c;
            });
        return std::pair<Mat, std::vector<Word>>(M.rref(nullptr), basis);
    };
    // compare spans on the union basis by checking mutual membership via ranks
    auto rank_of = [&](const std::vector<NCPoly>& rels) {
        auto [rr, basis] = span_rref(rels);
        (void)basis;
        int nonzero = 0;
        for (int r = 0; r < rr.rows(); ++r) {
            bool z = true;
            for (int c = 0; c < rr.cols(); ++c)
                if (!rr.at(r, c).is_zero()) z = false;
            if (!z) ++nonzero;
        }
        return nonzero;
    };
    std::vector<NCPoly> unioned = out.relations;
    unioned.insert(unioned.end(), displayed.begin(), displayed.end());
    int r1 = rank_of(out.relations), r2 = rank_of(displayed), ru = rank_of(unioned);
    out.equivalence.add("chi-relations-match-display", r1 == r2 && r2 == ru,
                        "ranks " + std::to_string(r1) + ", " + std::to_string(r2) + ", union " +
                            std::to_string(ru));

    // round trip: substituting chi = u - 1 recovers the u-relations
    auto substitute_chi = [&](const NCPoly& crel) {
        NCPoly p(m);
        crel.for_terms([&](const Word& w, const Scalar& c) {
            std::vector<std::pair<Scalar, Word>> acc = {{c, {}}};
            for (int letter : w) {
                int i = letter / n, j = letter % n;
                std::vector<std::pair<Scalar, Word>> next;
                for (auto& [cc, ww] : acc) {
                    if (i == j) next.push_back({-cc, ww});
                    Word w2 = ww;
                    w2.push_back(letter);
                    next.push_back({cc, w2});
                }
                acc = std::move(next);
            }
            for (auto& [cc, ww] : acc) p.add_term(cc, ww);
        });
        return p;
    };
    std::vector<NCPoly> back;
    for (const auto& r : out.relations) back.push_back(substitute_chi(r));
    std::vector<NCPoly> urels = bmatrix_relations(BM.R);
    std::vector<NCPoly> unioned2 = back;
    unioned2.insert(unioned2.end(), urels.begin(), urels.end());
    int b1 = rank_of(back), b2 = rank_of(urels), bu = rank_of(unioned2);
    out.equivalence.add("chi-roundtrip-recovers-u", b1 == b2 && b2 == bu,
                        "ranks " + std::to_string(b1) + ", " + std::to_string(b2) + ", union " +
                            std::to_string(bu));
    return out;
}

} // namespace braidkit
