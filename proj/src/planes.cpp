#include "braidkit/planes.hpp"

#include <sstream>

namespace braidkit {

namespace {

// operator of X acting on factors (pos, pos+1) of V^{ox slots}, pos 1-based;
// the braiding-operator layout (PX)^{ab}_{cd} = X^b_c{}^a_d is NOT used here:
// this is the plain matrix embedding of the linearized X.
Mat embed_pair(const RMatrix& X, int slots, int pos) {
    const int n = X.n();
    const FieldMode& m = X.mode();
    int dim = 1;
    for (int t = 0; t < slots; ++t) dim *= n;
    Mat M(dim, dim, m);
    int left = 1;
    for (int t = 0; t < pos - 1; ++t) left *= n;
    int right = dim / (left * n * n);
    Mat lin = X.linearized(); // row (i,k), col (j,l)
    for (int a = 0; a < left; ++a)
        for (int r = 0; r < n * n; ++r)
            for (int c = 0; c < n * n; ++c) {
                const Scalar& v = lin.at(r, c);
                if (v.is_zero()) continue;
                for (int b = 0; b < right; ++b)
                    M.at((a * n * n + r) * right + b, (a * n * n + c) * right + b) += v;
            }
    return M;
}

// R13-style embedding on three factors: X on factors (1,3)
Mat embed_13(const RMatrix& X, int n) {
    const FieldMode& m = X.mode();
    int dim = n * n * n;
    Mat M(dim, dim, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const Scalar& v = X.at(i, j, k, l);
                    if (v.is_zero()) continue;
                    for (int b = 0; b < n; ++b) M.at((i * n + b) * n + k, (j * n + b) * n + l) += v;
                }
    return M;
}

// check the three R/R' compatibility conditions; returns the failing name
std::string rprime_conditions(const RMatrix& R, const RMatrix& Rp) {
    const int n = R.n();
    {
        Mat R12 = embed_pair(R, 3, 1), R13 = embed_13(R, n), Rp23 = embed_pair(Rp, 3, 2);
        if (!(R12 * (R13 * Rp23) == Rp23 * (R13 * R12))) return "R12 R13 R'23 = R'23 R13 R12";
    }
    {
        Mat R23 = embed_pair(R, 3, 2), R13 = embed_13(R, n), Rp12 = embed_pair(Rp, 3, 1);
        if (!(R23 * (R13 * Rp12) == Rp12 * (R13 * R23))) return "R23 R13 R'12 = R'12 R13 R23";
    }
    {
        Mat PR = pr_matrix(R), PRp = pr_matrix(Rp);
        Mat I = Mat::identity(n * n, R.mode());
        if (!((PR + I) * (PRp - I)).is_zero()) return "(PR+1)(PR'-1) = 0";
    }
    return "";
}

BraidedPlane make_plane(PlaneKind kind, const RMatrix& R, const RMatrix& Rp, int degree_bound) {
    const int n = R.n();
    const FieldMode& m = R.mode();
    std::string bad = rprime_conditions(R, Rp);
    if (!bad.empty()) throw RPrimeConditionFailed("R' condition failed: " + bad);

    std::vector<std::string> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back((kind == PlaneKind::Covector ? "x" : "v") + std::to_string(i));
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NCPoly p(m);
            p.add_term(Scalar::one(m), {i, j});
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const Scalar& c = (kind == PlaneKind::Covector) ? Rp.at(a, i, b, j)
                                                                    : Rp.at(i, a, j, b);
                    if (!c.is_zero()) p.add_term(-c, {b, a});
                }
            if (!p.is_zero()) rels.push_back(p);
        }
    QuotientAlgebra alg = quotient_from_relations(gens, rels, degree_bound, m);
    BraidOp psi = (kind == PlaneKind::Covector) ? BraidOp::covector(R) : BraidOp::vector_side(R);
    std::vector<NCPoly> cop;
    std::vector<Scalar> cou(n, Scalar::zero(m));
    for (int g = 0; g < n; ++g) {
        NCPoly d(m);
        d.add_term(Scalar::one(m), {g});
        d.add_term(Scalar::one(m), {n + g});
        cop.push_back(d);
    }
    // antipode condition R21 R'12 = R'21 R12
    bool symmetric = (R.r21().linearized() * Rp.linearized()) ==
                     (Rp.r21().linearized() * R.linearized());
    std::optional<std::vector<NCPoly>> S;
    if (symmetric) {
        std::vector<NCPoly> s;
        for (int g = 0; g < n; ++g) s.push_back(-NCPoly::monomial(Scalar::one(m), {g}));
        S = std::move(s);
    }
    BraidedPlane plane{kind, R, Rp,
                       make_braided_bialgebra(std::move(alg), std::move(psi), std::move(cop),
                                              std::move(cou), std::move(S)),
                       symmetric};
    return plane;
}

} // namespace

BraidedPlane covector_algebra(const RMatrix& R, const RMatrix& Rprime, int degree_bound) {
    return make_plane(PlaneKind::Covector, R, Rprime, degree_bound);
}

BraidedPlane vector_algebra(const RMatrix& R, const RMatrix& Rprime, int degree_bound) {
    return make_plane(PlaneKind::Vector, R, Rprime, degree_bound);
}

Mat braided_integer(const RMatrix& R, int m) {
    if (m < 1) throw InvalidInput("braided integer needs m >= 1");
    const int n = R.n();
    const FieldMode& fm = R.mode();
    int dim = 1;
    for (int t = 0; t < m; ++t) dim *= n;
    Mat PRs = pr_matrix(R);
    Mat total = Mat::identity(dim, fm);
    Mat cur = Mat::identity(dim, fm);
    for (int t = 1; t < m; ++t) {
        // (PR)_{t,t+1} on m slots
        Mat step(dim, dim, fm);
        int left = 1;
        for (int s = 0; s < t - 1; ++s) left *= n;
        int right = dim / (left * n * n);
        for (int a = 0; a < left; ++a)
            for (int r = 0; r < n * n; ++r)
                for (int c = 0; c < n * n; ++c) {
                    const Scalar& v = PRs.at(r, c);
                    if (v.is_zero()) continue;
                    for (int b = 0; b < right; ++b)
                        step.at((a * n * n + r) * right + b, (a * n * n + c) * right + b) += v;
                }
        cur = cur * step;
        total = total + cur;
    }
    return total;
}

namespace {

int pack(const Word& w, int n) {
    int idx = 0;
    for (int x : w) idx = idx * n + x;
    return idx;
}

NCPoly partial_word(const BraidedPlane& plane, const Mat& mR, int i, const Word& w) {
    const int n = plane.n();
    const FieldMode& m = plane.R.mode();
    NCPoly out(m);
    const int mlen = static_cast<int>(w.size());
    if (mlen == 0) return out;
    int col = pack(w, n);
    // rows (i, j2..jm)
    int sub = mR.rows() / n;
    Word jrest(mlen - 1, 0);
    for (int t = 0; t < sub; ++t) {
        int row = i * sub + t;
        const Scalar& c = mR.at(row, col);
        if (c.is_zero()) continue;
        int tt = t;
        for (int s = mlen - 2; s >= 0; --s) {
            jrest[s] = tt % n;
            tt /= n;
        }
        out.add_term(c, jrest);
    }
    return out;
}

} // namespace

NCPoly partial(const BraidedPlane& plane, int i, const NCPoly& p) {
    if (plane.kind != PlaneKind::Covector)
        throw InvalidInput("partial derivatives act on the covector algebra");
    const FieldMode& m = plane.R.mode();
    NCPoly np = plane.bialgebra.algebra.normal_form(p);
    NCPoly out(m);
    np.for_terms([&](const Word& w, const Scalar& c) {
        if (w.empty()) return;
        Mat mR = braided_integer(plane.R, static_cast<int>(w.size()));
        out = out + partial_word(plane, mR, i, w).scaled(c);
    });
    return plane.bialgebra.algebra.normal_form(out);
}

VerificationReport leibniz_check(const BraidedPlane& plane, int degree) {
    VerificationReport rep;
    const int n = plane.n();
    const FieldMode& m = plane.R.mode();
    const QuotientAlgebra& A = plane.bialgebra.algebra;
    (void)plane.R.inverse(); // Psi^{-1} data must exist

    // crossing operator: C = (PR)12..(PR)k,k+1 on k+1 slots; the derivative
    // index enters at slot k+1 of the column and exits at slot 1 of the row
    auto crossing = [&](int i, const Word& a) {
        // returns list of (a'-word, c, coeff)
        std::vector<std::tuple<Word, int, Scalar>> out;
        const int k = static_cast<int>(a.size());
        if (k == 0) {
            out.push_back({Word{}, i, Scalar::one(m)});
            return out;
        }
        // the full product (PR)12..(PR)k,k+1, not the telescoping sum
        int dim = 1;
        for (int t = 0; t <= k; ++t) dim *= n;
        Mat PRs = pr_matrix(plane.R);
        Mat cur = Mat::identity(dim, m);
        for (int t = 1; t <= k; ++t) {
            Mat step(dim, dim, m);
            int left = 1;
            for (int s = 0; s < t - 1; ++s) left *= n;
            int right = dim / (left * n * n);
            for (int aa = 0; aa < left; ++aa)
                for (int r = 0; r < n * n; ++r)
                    for (int c2 = 0; c2 < n * n; ++c2) {
                        const Scalar& v = PRs.at(r, c2);
                        if (v.is_zero()) continue;
                        for (int b = 0; b < right; ++b)
                            step.at((aa * n * n + r) * right + b, (aa * n * n + c2) * right + b) +=
                                v;
                    }
            cur = cur * step;
        }
        for (int c = 0; c < n; ++c) {
            Word colw = a;
            colw.push_back(c);
            int col = pack(colw, n);
            int sub = dim / n;
            for (int t = 0; t < sub; ++t) {
                const Scalar& v = cur.at(i * sub + t, col);
                if (v.is_zero()) continue;
                Word aprime(k, 0);
                int tt = t;
                for (int s = k - 1; s >= 0; --s) {
                    aprime[s] = tt % n;
                    tt /= n;
                }
                out.push_back({aprime, c, v});
            }
        }
        return out;
    };

    // collect normal words by degree
    std::vector<std::vector<Word>> words(degree + 1);
    for (int d = 0; d <= degree; ++d) words[d] = A.normal_words(d);

    bool ok = true;
    std::string wit;
    for (int da = 1; da < degree && ok; ++da)
        for (int db = 1; da + db <= degree && ok; ++db)
            for (const Word& a : words[da]) {
                for (const Word& b : words[db]) {
                    NCPoly pa = NCPoly::monomial(Scalar::one(m), a);
                    NCPoly pb = NCPoly::monomial(Scalar::one(m), b);
                    NCPoly ab = A.normal_form(pa * pb);
                    for (int i = 0; i < n && ok; ++i) {
                        NCPoly lhs = partial(plane, i, ab);
                        NCPoly rhs = A.normal_form(partial(plane, i, pa) * pb);
                        for (const auto& [aprime, c, v] : crossing(i, a)) {
                            NCPoly term = NCPoly::monomial(v, aprime) * partial(plane, c, pb);
                            rhs = rhs + term;
                        }
                        rhs = A.normal_form(rhs);
                        if (!(lhs == rhs)) {
                            ok = false;
                            wit = "a=" + pa.str(A.gens()) + " b=" + pb.str(A.gens()) +
                                  " i=" + std::to_string(i) + " residual " +
                                  (lhs - rhs).str(A.gens());
                        }
                    }
                    if (!ok) break;
                }
                if (!ok) break;
            }
    rep.add("braided-leibniz", ok, wit);

    // operator identity: d^i d^j = R'^i_a^j_b d^b d^a on all normal words
    ok = true;
    wit = "";
    for (int d = 0; d <= degree && ok; ++d)
        for (const Word& w : words[d]) {
            NCPoly pw = NCPoly::monomial(Scalar::one(m), w);
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j) {
                    NCPoly lhs = partial(plane, i, partial(plane, j, pw));
                    NCPoly rhs(m);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const Scalar& c = plane.Rprime.at(i, a, j, b);
                            if (c.is_zero()) continue;
                            rhs = rhs + partial(plane, b, partial(plane, a, pw)).scaled(c);
                        }
                    rhs = A.normal_form(rhs);
                    if (!(lhs == rhs)) {
                        ok = false;
                        wit = "word " + pw.str(A.gens()) + " (i,j)=(" + std::to_string(i) + "," +
                              std::to_string(j) + ")";
                    }
                }
        }
    rep.add("partials-satisfy-vector-relations", ok, wit);
    return rep;
}

} // namespace braidkit
