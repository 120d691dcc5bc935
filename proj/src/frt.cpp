#include "braidkit/frt.hpp"

#include <sstream>

namespace braidkit {

namespace {

std::vector<std::string> t_gen_names(int n, const std::string& letter = "t") {
    std::vector<std::string> g;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.push_back(letter + "[" + std::to_string(i) + "," + std::to_string(j) + "]");
    return g;
}

std::string word_str(const Word& w, const std::vector<std::string>& gens) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << gens[w[i]];
    }
    return os.str();
}

// all splittings of a word under the matrix coproduct: Delta(t^I_J) =
// sum_A t^I_A ox t^A_J; callback(upper_word, lower_word) per multi-index A
template <typename F>
void matrix_coproduct_splits(const Word& w, int n, F&& f) {
    const int len = static_cast<int>(w.size());
    Word mid(len, 0);
    while (true) {
        Word up(len), lo(len);
        for (int t = 0; t < len; ++t) {
            int i = w[t] / n, j = w[t] % n;
            up[t] = i * n + mid[t];
            lo[t] = mid[t] * n + j;
        }
        f(up, lo);
        int t = len - 1;
        while (t >= 0 && mid[t] == n - 1) {
            mid[t] = 0;
            --t;
        }
        if (t < 0) break;
        ++mid[t];
    }
}

} // namespace

std::vector<NCPoly> frt_relations(const RMatrix& R) {
    const int n = R.n();
    const FieldMode& m = R.mode();
    std::vector<NCPoly> rels;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    NCPoly p(m);
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            const Scalar& c1 = R.at(i, a, j, b);
                            if (!c1.is_zero()) p.add_term(c1, {a * n + k, b * n + l});
                            const Scalar& c2 = R.at(a, k, b, l);
                            if (!c2.is_zero()) p.add_term(-c2, {j * n + b, i * n + a});
                        }
                    if (!p.is_zero()) rels.push_back(p);
                }
    return rels;
}

NCPoly FRTBialgebra::coproduct_word(const Word& w) const {
    // element of the doubled alphabet (copy 0 for the left leg, copy 1 right)
    const int n2 = R.n() * R.n();
    NCPoly out(R.mode());
    matrix_coproduct_splits(w, R.n(), [&](const Word& up, const Word& lo) {
        Word joined = up;
        for (int x : lo) joined.push_back(n2 + x);
        out.add_term(Scalar::one(R.mode()), joined);
    });
    return out;
}

FRTBialgebra frt_algebra(const RMatrix& R, int degree_bound) {
    const FieldMode& m = R.mode();
    if (!R.linearized().try_inverse()) throw InvalidInput("A(R) needs invertible R");
    FRTBialgebra A{R, R.inverse(),
                   quotient_from_relations(t_gen_names(R.n()), frt_relations(R), degree_bound, m)};
    // invariant: the coproduct is an algebra map: Delta(r) = 0 in the ordinary
    // (flip) tensor square for each relation r
    QuotientAlgebra flip_square =
        braided_tensor_algebra(A.algebra, A.algebra, BraidOp::flip(A.algebra.n_gens(), m));
    for (const auto& rule : A.algebra.rules()) {
        NCPoly r = NCPoly::monomial(Scalar::one(m), rule.lhs) - rule.rhs;
        NCPoly img(m);
        r.for_terms([&](const Word& w, const Scalar& c) {
            img = img + A.coproduct_word(w).scaled(c);
        });
        if (!flip_square.normal_form(img).is_zero())
            throw InvalidInput("A(R) coproduct is not an algebra map; is R a QYBE solution?");
    }
    return A;
}

Mat fundamental_rep(const FRTBialgebra& A, RepSign sign, const Word& mono) {
    const int n = A.n();
    const FieldMode& m = A.R.mode();
    Mat acc = Mat::identity(n, m);
    for (int g : mono) {
        int i = g / n, j = g % n;
        Mat M(n, n, m);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                M.at(k, l) = (sign == RepSign::Plus) ? A.R.at(i, j, k, l) : A.Rinv.at(k, l, i, j);
        acc = acc * M;
    }
    return acc;
}

namespace {

// Z grid over Rx: rows (top-to-bottom) carry the horizontal chains
// rows[r].first -> rows[r].second; columns (left-to-right) carry the vertical
// chains cols[c].first (top) -> cols[c].second (bottom).
Scalar grid_eval(const RMatrix& Rx, const std::vector<std::pair<int, int>>& rows,
                 const std::vector<std::pair<int, int>>& cols) {
    const int n = Rx.n();
    const FieldMode& m = Rx.mode();
    const int N = static_cast<int>(cols.size());
    if (rows.empty()) {
        Scalar one = Scalar::one(m);
        for (const auto& c : cols)
            if (c.first != c.second) return Scalar::zero(m);
        return one;
    }
    if (cols.empty()) {
        for (const auto& r : rows)
            if (r.first != r.second) return Scalar::zero(m);
        return Scalar::one(m);
    }
    // DP over the vertical-state vector (current vertical index per column)
    size_t states = 1;
    for (int c = 0; c < N; ++c) states *= n;
    std::vector<Scalar> state(states, Scalar::zero(m));
    size_t start = 0;
    for (int c = 0; c < N; ++c) start = start * n + cols[c].first;
    state[start] = Scalar::one(m);
    std::vector<int> digits(N);
    for (const auto& row : rows) {
        std::vector<Scalar> next(states, Scalar::zero(m));
        for (size_t s = 0; s < states; ++s) {
            if (state[s].is_zero()) continue;
            size_t t = s;
            for (int c = N - 1; c >= 0; --c) {
                digits[c] = static_cast<int>(t % n);
                t /= n;
            }
            // sweep the row horizontally: partial state = (h, new vertical digits prefix)
            struct Part {
                int h;
                size_t packed;
                Scalar coeff;
            };
            std::vector<Part> parts{{row.first, 0, state[s]}};
            for (int c = 0; c < N; ++c) {
                std::vector<Part> np;
                for (const auto& p : parts) {
                    for (int h2 = 0; h2 < n; ++h2)
                        for (int v2 = 0; v2 < n; ++v2) {
                            const Scalar& rv = Rx.at(p.h, h2, digits[c], v2);
                            if (rv.is_zero()) continue;
                            np.push_back({h2, p.packed * n + v2, p.coeff * rv});
                        }
                }
                parts = std::move(np);
            }
            for (const auto& p : parts) {
                if (p.h != row.second) continue;
                next[p.packed] += p.coeff;
            }
        }
        state = std::move(next);
    }
    size_t end = 0;
    for (int c = 0; c < N; ++c) end = end * n + cols[c].second;
    return state[end];
}

std::vector<std::pair<int, int>> word_pairs(const Word& w, int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(w.size());
    for (int g : w) out.emplace_back(g / n, g % n);
    return out;
}

} // namespace

Scalar DQTPairing::pair(const Word& a, const Word& b, PairMode mode) const {
    const RMatrix& R = A_->R;
    const int n = R.n();
    const FieldMode& m = R.mode();
    if (mode == PairMode::Grid) {
        auto rows = word_pairs(a, n);
        auto cols = word_pairs(b, n);
        std::reverse(cols.begin(), cols.end());
        return grid_eval(R, rows, cols);
    }
    // recursive bicharacter oracle
    auto delta_word = [&](const Word& w) { return w; };
    (void)delta_word;
    if (a.empty()) {
        for (int g : b)
            if (g / n != g % n) return Scalar::zero(m);
        return Scalar::one(m);
    }
    if (b.empty()) {
        for (int g : a)
            if (g / n != g % n) return Scalar::zero(m);
        return Scalar::one(m);
    }
    if (a.size() == 1 && b.size() == 1)
        return R.at(a[0] / n, a[0] % n, b[0] / n, b[0] % n);
    Scalar acc = Scalar::zero(m);
    if (a.size() > 1) {
        // <R>(xy ox c) = sum <R>(x ox c1) <R>(y ox c2), x the first letter
        Word x{a[0]}, y(a.begin() + 1, a.end());
        matrix_coproduct_splits(b, n, [&](const Word& up, const Word& lo) {
            acc += pair(x, up, PairMode::Recursive) * pair(y, lo, PairMode::Recursive);
        });
        return acc;
    }
    // <R>(x ox bc) = sum <R>(x1 ox c) <R>(x2 ox b), b the first letter
    Word bb{b[0]}, cc(b.begin() + 1, b.end());
    matrix_coproduct_splits(a, n, [&](const Word& up, const Word& lo) {
        acc += pair(up, cc, PairMode::Recursive) * pair(lo, bb, PairMode::Recursive);
    });
    return acc;
}

Scalar DQTPairing::inverse_pair(const Word& a, const Word& b) const {
    // same grid layout as pair() but over R^{-1}: the barred index convention
    // of the defining display is carried by the arguments themselves
    const int n = A_->n();
    auto rows = word_pairs(a, n);
    auto cols = word_pairs(b, n);
    std::reverse(cols.begin(), cols.end());
    return grid_eval(A_->Rinv, rows, cols);
}

Scalar DQTPairing::pair_poly(const NCPoly& a, const NCPoly& b, PairMode mode) const {
    Scalar acc = Scalar::zero(A_->R.mode());
    a.for_terms([&](const Word& wa, const Scalar& ca) {
        b.for_terms([&](const Word& wb, const Scalar& cb) { acc += ca * cb * pair(wa, wb, mode); });
    });
    return acc;
}

VerificationReport dqt_verify(const DQTPairing& P, int degree) {
    VerificationReport rep;
    const FRTBialgebra& A = P.frt();
    const int n = A.n();
    const int n2 = n * n;
    const FieldMode& m = A.R.mode();
    const auto& gens = A.algebra.gens();

    auto words_of_degree = [&](int d) {
        std::vector<Word> out;
        if (d == 0) {
            out.push_back({});
            return out;
        }
        Word w(d, 0);
        while (true) {
            out.push_back(w);
            int t = d - 1;
            while (t >= 0 && w[t] == n2 - 1) {
                w[t] = 0;
                --t;
            }
            if (t < 0) break;
            ++w[t];
        }
        return out;
    };

    // (i) grid vs recursive on all monomial pairs up to the degree
    {
        bool ok = true;
        std::string wit;
        for (int da = 0; da <= degree && ok; ++da)
            for (int db = 0; db <= degree && ok; ++db)
                for (const Word& a : words_of_degree(da)) {
                    for (const Word& b : words_of_degree(db)) {
                        Scalar g = P.pair(a, b, PairMode::Grid);
                        Scalar r = P.pair(a, b, PairMode::Recursive);
                        if (!(g == r)) {
                            ok = false;
                            wit = word_str(a, gens) + " ox " + word_str(b, gens) + ": grid " +
                                  g.str() + " vs recursive " + r.str();
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("grid-recursive-agreement", ok, wit);
    }

    // (ii) convolution inverse identity on multi-indices up to the degree
    {
        bool ok = true;
        std::string wit;
        auto multi = [&](int len) {
            std::vector<std::vector<int>> out;
            std::vector<int> v(len, 0);
            while (true) {
                out.push_back(v);
                int t = len - 1;
                while (t >= 0 && v[t] == n - 1) {
                    v[t] = 0;
                    --t;
                }
                if (t < 0) break;
                ++v[t];
            }
            return out;
        };
        for (int M = 1; M <= degree && ok; ++M)
            for (int N = 1; N <= degree && ok; ++N) {
                for (const auto& I : multi(M))
                    for (const auto& J : multi(M)) {
                        for (const auto& K : multi(N))
                            for (const auto& L : multi(N)) {
                                Scalar acc = Scalar::zero(m);
                                for (const auto& Av : multi(M))
                                    for (const auto& B : multi(N)) {
                                        Word w1, w2, w3, w4;
                                        for (int t = 0; t < M; ++t)
                                            w1.push_back(I[t] * n + Av[t]);
                                        for (int t = N - 1; t >= 0; --t)
                                            w2.push_back(K[t] * n + B[t]);
                                        for (int t = M - 1; t >= 0; --t)
                                            w3.push_back(Av[t] * n + J[t]);
                                        for (int t = 0; t < N; ++t)
                                            w4.push_back(B[t] * n + L[t]);
                                        Scalar f1 = P.pair(w1, w2);
                                        if (f1.is_zero()) continue;
                                        acc += f1 * P.inverse_pair(w3, w4);
                                    }
                                Scalar want =
                                    (I == J && K == L) ? Scalar::one(m) : Scalar::zero(m);
                                if (!(acc == want)) {
                                    ok = false;
                                    wit = "multi-index (I,J,K,L) with residual " +
                                          (acc - want).str();
                                }
                                if (!ok) break;
                            }
                        if (!ok) break;
                    }
            }
        rep.add("convolution-inverse", ok, wit);
    }

    // (iii) almost-commutativity (dqua2) as an NCPoly identity mod A(R)
    {
        bool ok = true;
        std::string wit;
        for (int da = 1; da <= degree && ok; ++da)
            for (int db = 1; db <= degree && ok; ++db)
                for (const Word& a : words_of_degree(da)) {
                    for (const Word& b : words_of_degree(db)) {
                        NCPoly resi(m);
                        matrix_coproduct_splits(a, n, [&](const Word& a1, const Word& a2) {
                            matrix_coproduct_splits(b, n, [&](const Word& b1, const Word& b2) {
                                Scalar c1 = P.pair(a2, b2);
                                if (!c1.is_zero()) {
                                    Word w = b1;
                                    w.insert(w.end(), a1.begin(), a1.end());
                                    resi.add_term(c1, w);
                                }
                                Scalar c2 = P.pair(a1, b1);
                                if (!c2.is_zero()) {
                                    Word w = a2;
                                    w.insert(w.end(), b2.begin(), b2.end());
                                    resi.add_term(-c2, w);
                                }
                            });
                        });
                        NCPoly nf = A.algebra.normal_form(resi);
                        if (!nf.is_zero()) {
                            ok = false;
                            wit = word_str(a, gens) + ", " + word_str(b, gens) + ": residual " +
                                  nf.str(gens);
                            break;
                        }
                    }
                    if (!ok) break;
                }
        rep.add("almost-commutativity", ok, wit);
    }

    // (iv) well-definedness: the pairing vanishes on relations
    {
        bool ok = true;
        std::string wit;
        std::vector<NCPoly> rels;
        for (const auto& rule : A.algebra.rules())
            rels.push_back(NCPoly::monomial(Scalar::one(m), rule.lhs) - rule.rhs);
        for (const auto& r : rels) {
            if (!ok) break;
            for (int d = 0; d <= degree && ok; ++d)
                for (const Word& w : words_of_degree(d)) {
                    NCPoly mono = NCPoly::monomial(Scalar::one(m), w);
                    Scalar v1 = P.pair_poly(r, mono);
                    Scalar v2 = P.pair_poly(mono, r);
                    if (!v1.is_zero() || !v2.is_zero()) {
                        ok = false;
                        wit = "relation " + r.str(gens) + " against " + word_str(w, gens) +
                              ": values " + v1.str() + ", " + v2.str();
                        break;
                    }
                }
        }
        rep.add("vanishes-on-relations", ok, wit);
    }
    return rep;
}

} // namespace braidkit
