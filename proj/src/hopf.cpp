#include "braidkit/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace braidkit {

void st_add(SparseTensor& t, const std::vector<int>& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

SparseTensor st_clean(SparseTensor t) {
    for (auto it = t.begin(); it != t.end();) {
        if (it->second.is_zero())
            it = t.erase(it);
        else
            ++it;
    }
    return t;
}

Vec FinDimHopf::basis_vec(int a) const {
    Vec v(d, Scalar::zero(mode));
    v[a] = Scalar::one(mode);
    return v;
}

Vec FinDimHopf::mulv(const Vec& x, const Vec& y) const {
    Vec out(d, Scalar::zero(mode));
    for (int a = 0; a < d; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < d; ++b) {
            if (y[b].is_zero()) continue;
            Scalar xy = x[a] * y[b];
            for (int c = 0; c < d; ++c) {
                const Scalar& p = prod_c(a, b, c);
                if (!p.is_zero()) out[c] += xy * p;
            }
        }
    }
    return out;
}

Vec FinDimHopf::apply_antipode(const Vec& x) const {
    Vec out(d, Scalar::zero(mode));
    for (int in = 0; in < d; ++in) {
        if (x[in].is_zero()) continue;
        for (int o = 0; o < d; ++o) {
            const Scalar& s = s_mat(o, in);
            if (!s.is_zero()) out[o] += s * x[in];
        }
    }
    return out;
}

Vec FinDimHopf::apply_antipode_sq(const Vec& x) const { return apply_antipode(apply_antipode(x)); }

std::vector<std::pair<std::pair<int, int>, Scalar>> FinDimHopf::delta(int a) const {
    std::vector<std::pair<std::pair<int, int>, Scalar>> out;
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            const Scalar& v = cop_c(a, b, c);
            if (!v.is_zero()) out.push_back({{b, c}, v});
        }
    return out;
}

SparseTensor FinDimHopf::delta_pow(int a, int legs) const {
    SparseTensor t;
    t.emplace(std::vector<int>{a}, Scalar::one(mode));
    for (int step = 1; step < legs; ++step) {
        SparseTensor next;
        for (const auto& [key, v] : t) {
            int last = key.back();
            for (const auto& [bc, w] : delta(last)) {
                std::vector<int> nk(key.begin(), key.end() - 1);
                nk.push_back(bc.first);
                nk.push_back(bc.second);
                st_add(next, nk, v * w);
            }
        }
        t = std::move(next);
    }
    return t;
}

SparseTensor FinDimHopf::tensor_mul(const SparseTensor& x, const SparseTensor& y, int legs) const {
    SparseTensor out;
    for (const auto& [kx, vx] : x)
        for (const auto& [ky, vy] : y) {
            // componentwise products, expanding through structure constants
            std::vector<std::pair<std::vector<int>, Scalar>> states = {{{}, vx * vy}};
            for (int leg = 0; leg < legs; ++leg) {
                std::vector<std::pair<std::vector<int>, Scalar>> next;
                for (auto& [key, val] : states) {
                    for (int c = 0; c < d; ++c) {
                        const Scalar& p = prod_c(kx[leg], ky[leg], c);
                        if (p.is_zero()) continue;
                        std::vector<int> nk = key;
                        nk.push_back(c);
                        next.push_back({std::move(nk), val * p});
                    }
                }
                states = std::move(next);
            }
            for (auto& [key, val] : states) st_add(out, key, val);
        }
    return out;
}

SparseTensor FinDimHopf::unit_tensor(int legs) const {
    SparseTensor t;
    t.emplace(std::vector<int>{}, Scalar::one(mode));
    for (int leg = 0; leg < legs; ++leg) {
        SparseTensor next;
        for (const auto& [key, v] : t)
            for (int a = 0; a < d; ++a) {
                if (unit[a].is_zero()) continue;
                std::vector<int> nk = key;
                nk.push_back(a);
                st_add(next, nk, v * unit[a]);
            }
        t = std::move(next);
    }
    return t;
}

SparseTensor FinDimHopf::apply_delta_leg(const SparseTensor& x, int leg) const {
    SparseTensor out;
    for (const auto& [key, v] : x)
        for (const auto& [bc, w] : delta(key[leg])) {
            std::vector<int> nk(key.begin(), key.begin() + leg);
            nk.push_back(bc.first);
            nk.push_back(bc.second);
            nk.insert(nk.end(), key.begin() + leg + 1, key.end());
            st_add(out, nk, v * w);
        }
    return out;
}

SparseTensor FinDimHopf::apply_antipode_leg(const SparseTensor& x, int leg) const {
    SparseTensor out;
    for (const auto& [key, v] : x)
        for (int o = 0; o < d; ++o) {
            const Scalar& s = s_mat(o, key[leg]);
            if (s.is_zero()) continue;
            std::vector<int> nk = key;
            nk[leg] = o;
            st_add(out, nk, v * s);
        }
    return out;
}

bool FinDimHopf::is_commutative() const {
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                if (!(prod_c(a, b, c) == prod_c(b, a, c))) return false;
    return true;
}

bool FinDimHopf::is_cocommutative() const {
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c)
                if (!(cop_c(a, b, c) == cop_c(a, c, b))) return false;
    return true;
}

VerificationReport hopf_verify(const FinDimHopf& H) {
    VerificationReport rep;
    const int d = H.d;
    auto name = [&](int a) { return H.basis.empty() ? std::to_string(a) : H.basis[a]; };
    // associativity
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a)
            for (int b = 0; b < d && ok; ++b)
                for (int c = 0; c < d && ok; ++c) {
                    Vec l = H.mulv(H.mulv(H.basis_vec(a), H.basis_vec(b)), H.basis_vec(c));
                    Vec r = H.mulv(H.basis_vec(a), H.mulv(H.basis_vec(b), H.basis_vec(c)));
                    if (l != r) {
                        ok = false;
                        wit = "(" + name(a) + "," + name(b) + "," + name(c) + ")";
                    }
                }
        rep.add("associativity", ok, wit);
    }
    // unit
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a) {
            if (H.mulv(H.unit, H.basis_vec(a)) != H.basis_vec(a) ||
                H.mulv(H.basis_vec(a), H.unit) != H.basis_vec(a)) {
                ok = false;
                wit = name(a);
            }
        }
        rep.add("unit", ok, wit);
    }
    // coassociativity
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a) {
            SparseTensor x;
            x.emplace(std::vector<int>{a}, Scalar::one(H.mode));
            SparseTensor one = H.apply_delta_leg(x, 0);
            if (H.apply_delta_leg(one, 0) != H.apply_delta_leg(one, 1)) {
                ok = false;
                wit = name(a);
            }
        }
        rep.add("coassociativity", ok, wit);
    }
    // counit
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a) {
            Vec l(d, Scalar::zero(H.mode)), r(d, Scalar::zero(H.mode));
            for (const auto& [bc, v] : H.delta(a)) {
                l[bc.second] += H.counit[bc.first] * v;
                r[bc.first] += H.counit[bc.second] * v;
            }
            if (l != H.basis_vec(a) || r != H.basis_vec(a)) {
                ok = false;
                wit = name(a);
            }
        }
        rep.add("counit", ok, wit);
    }
    // bialgebra compatibility
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a)
            for (int b = 0; b < d && ok; ++b) {
                Vec ab = H.mulv(H.basis_vec(a), H.basis_vec(b));
                SparseTensor lhs;
                for (int c = 0; c < d; ++c) {
                    if (ab[c].is_zero()) continue;
                    for (const auto& [bc, v] : H.delta(c))
                        st_add(lhs, {bc.first, bc.second}, ab[c] * v);
                }
                SparseTensor xa, xb;
                xa.emplace(std::vector<int>{a}, Scalar::one(H.mode));
                xb.emplace(std::vector<int>{b}, Scalar::one(H.mode));
                SparseTensor rhs =
                    H.tensor_mul(H.apply_delta_leg(xa, 0), H.apply_delta_leg(xb, 0), 2);
                if (st_clean(std::move(lhs)) != rhs) {
                    ok = false;
                    wit = "(" + name(a) + "," + name(b) + ")";
                }
                Scalar le = Scalar::zero(H.mode);
                for (int c = 0; c < d; ++c) le += ab[c] * H.counit[c];
                if (!(le == H.counit[a] * H.counit[b])) {
                    ok = false;
                    wit = "counit on (" + name(a) + "," + name(b) + ")";
                }
            }
        // Delta(1) = 1 ox 1
        SparseTensor du;
        for (int a = 0; a < d; ++a) {
            if (H.unit[a].is_zero()) continue;
            for (const auto& [bc, v] : H.delta(a)) st_add(du, {bc.first, bc.second}, H.unit[a] * v);
        }
        if (du != H.unit_tensor(2)) {
            ok = false;
            wit = "Delta(1)";
        }
        Scalar eone = Scalar::zero(H.mode);
        for (int a = 0; a < d; ++a) eone += H.unit[a] * H.counit[a];
        if (!eone.is_one()) {
            ok = false;
            wit = "eps(1)";
        }
        rep.add("bialgebra", ok, wit);
    }
    // antipode
    if (H.antipode) {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a) {
            Vec acc1(d, Scalar::zero(H.mode)), acc2(d, Scalar::zero(H.mode));
            for (const auto& [bc, v] : H.delta(a)) {
                Vec sb = H.apply_antipode(H.basis_vec(bc.first));
                Vec t = H.mulv(sb, H.basis_vec(bc.second));
                for (int c = 0; c < d; ++c) acc1[c] += v * t[c];
                Vec sc = H.apply_antipode(H.basis_vec(bc.second));
                Vec t2 = H.mulv(H.basis_vec(bc.first), sc);
                for (int c = 0; c < d; ++c) acc2[c] += v * t2[c];
            }
            Vec want(d, Scalar::zero(H.mode));
            for (int c = 0; c < d; ++c) want[c] = H.counit[a] * H.unit[c];
            if (acc1 != want || acc2 != want) {
                ok = false;
                wit = name(a);
            }
        }
        rep.add("antipode", ok, wit);
    }
    return rep;
}

std::optional<std::vector<Scalar>> solve_antipode_tables(int d, const FieldMode& m,
                                                         const std::vector<Scalar>& product,
                                                         const std::vector<Scalar>& coprod,
                                                         const Vec& unit, const Vec& counit) {
    // unknown s[out][in]; equations: for each a, c:
    //   sum_{(b,cc)} Delta-coefs * s[x][b] * prod(x,cc,c) = eps(a) unit[c]
    auto prod_c = [&](int a, int b, int c) -> const Scalar& {
        return product[(a * d + b) * d + c];
    };
    auto cop_c = [&](int a, int b, int c) -> const Scalar& { return coprod[(a * d + b) * d + c]; };
    Mat A(d * d, d * d, m);
    std::vector<Scalar> rhs;
    rhs.reserve(static_cast<size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int c = 0; c < d; ++c) {
            int row = a * d + c;
            for (int b = 0; b < d; ++b)
                for (int cc = 0; cc < d; ++cc) {
                    const Scalar& v = cop_c(a, b, cc);
                    if (v.is_zero()) continue;
                    for (int x = 0; x < d; ++x) {
                        const Scalar& p = prod_c(x, cc, c);
                        if (!p.is_zero()) A.at(row, x * d + b) += v * p;
                    }
                }
            rhs.push_back(counit[a] * unit[c]);
        }
    }
    auto sol = A.solve(rhs);
    if (!sol) return std::nullopt;
    // verify the right antipode law as well
    for (int a = 0; a < d; ++a) {
        Vec acc(d, Scalar::zero(m));
        for (int b = 0; b < d; ++b)
            for (int cc = 0; cc < d; ++cc) {
                const Scalar& v = cop_c(a, b, cc);
                if (v.is_zero()) continue;
                for (int x = 0; x < d; ++x) {
                    const Scalar& s = (*sol)[x * d + cc];
                    if (s.is_zero()) continue;
                    for (int c = 0; c < d; ++c) {
                        const Scalar& p = prod_c(b, x, c);
                        if (!p.is_zero()) acc[c] += v * s * p;
                    }
                }
            }
        for (int c = 0; c < d; ++c)
            if (!(acc[c] == counit[a] * unit[c])) return std::nullopt;
    }
    return sol;
}

std::optional<std::vector<Scalar>> solve_antipode(const FinDimHopf& H) {
    auto sol = solve_antipode_tables(H.d, H.mode, H.product, H.coprod, H.unit, H.counit);
    if (!sol) return std::nullopt;
    FinDimHopf H2 = H;
    H2.antipode = *sol;
    VerificationReport rep = hopf_verify(H2);
    if (!rep.passed) return std::nullopt;
    return sol;
}

FinDimHopf dual_hopf(const FinDimHopf& H) {
    const int d = H.d;
    FinDimHopf D;
    D.d = d;
    D.mode = H.mode;
    for (int a = 0; a < d; ++a)
        D.basis.push_back((H.basis.empty() ? "e" + std::to_string(a) : H.basis[a]) + "*");
    D.product.assign(static_cast<size_t>(d) * d * d, Scalar::zero(H.mode));
    D.coprod.assign(static_cast<size_t>(d) * d * d, Scalar::zero(H.mode));
    D.unit.assign(d, Scalar::zero(H.mode));
    D.counit.assign(d, Scalar::zero(H.mode));
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                D.product[(a * d + b) * d + c] = H.cop_c(c, a, b);
                D.coprod[(a * d + b) * d + c] = H.prod_c(b, c, a);
            }
        D.unit[a] = H.counit[a];
        D.counit[a] = H.unit[a];
    }
    if (H.antipode) {
        std::vector<Scalar> S(static_cast<size_t>(d) * d, Scalar::zero(H.mode));
        for (int o = 0; o < d; ++o)
            for (int in = 0; in < d; ++in) S[o * d + in] = H.s_mat(in, o);
        D.antipode = std::move(S);
    }
    return D;
}

QT make_qt(const FinDimHopf& H, SparseTensor r) {
    const int d = H.d;
    r = st_clean(std::move(r));
    // solve r * x = 1 ox 1 in the tensor-square algebra
    Mat A(d * d, d * d, H.mode);
    for (const auto& [key, v] : r) {
        int a = key[0], b = key[1];
        for (int c = 0; c < d; ++c)
            for (int e = 0; e < d; ++e) {
                // (e_a ox e_b)(e_c ox e_e)
                for (int x = 0; x < d; ++x) {
                    const Scalar& p1 = H.prod_c(a, c, x);
                    if (p1.is_zero()) continue;
                    for (int y = 0; y < d; ++y) {
                        const Scalar& p2 = H.prod_c(b, e, y);
                        if (p2.is_zero()) continue;
                        A.at(x * d + y, c * d + e) += v * p1 * p2;
                    }
                }
            }
    }
    std::vector<Scalar> rhs(static_cast<size_t>(d) * d, Scalar::zero(H.mode));
    for (const auto& [key, v] : H.unit_tensor(2)) rhs[key[0] * d + key[1]] = v;
    auto sol = A.solve(rhs);
    if (!sol) throw InvalidInput("quasitriangular element is not invertible");
    QT out;
    out.r = std::move(r);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (!(*sol)[a * d + b].is_zero()) out.r_inv.emplace(std::vector<int>{a, b}, (*sol)[a * d + b]);
    // confirm the two-sided inverse
    FinDimHopf Hc = H;
    if (Hc.tensor_mul(out.r_inv, out.r, 2) != Hc.unit_tensor(2))
        throw InvalidInput("quasitriangular element inverse is one-sided");
    return out;
}

std::pair<FinDimHopf, QT> zn_prime(int n, const FieldMode& m) {
    if (m.kind() != FieldMode::Kind::Cyclotomic || m.cyclo_n() != n)
        throw ModeMismatch("zn_prime(" + std::to_string(n) + ") needs mode cyclotomic:" +
                           std::to_string(n));
    FinDimHopf H;
    H.d = n;
    H.mode = m;
    for (int a = 0; a < n; ++a) H.basis.push_back(a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    H.product.assign(static_cast<size_t>(n) * n * n, Scalar::zero(m));
    H.coprod.assign(static_cast<size_t>(n) * n * n, Scalar::zero(m));
    H.unit.assign(n, Scalar::zero(m));
    H.counit.assign(n, Scalar::zero(m));
    std::vector<Scalar> S(static_cast<size_t>(n) * n, Scalar::zero(m));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) H.product[(a * n + b) * n + (a + b) % n] = Scalar::one(m);
        H.coprod[(a * n + a) * n + a] = Scalar::one(m);
        H.counit[a] = Scalar::one(m);
        S[((n - a) % n) * n + a] = Scalar::one(m);
    }
    H.unit[0] = Scalar::one(m);
    H.antipode = std::move(S);
    Scalar ninv = Scalar::integer(n, m).inv();
    SparseTensor r;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            st_add(r, {a, b}, ninv * Scalar::q_power((-a * b) % n + n * n, m));
    return {H, make_qt(H, std::move(r))};
}

Vec qt_u_element(const FinDimHopf& H, const QT& R) {
    Vec u(H.d, Scalar::zero(H.mode));
    for (const auto& [key, v] : R.r) {
        Vec t = H.mulv(H.apply_antipode(H.basis_vec(key[1])), H.basis_vec(key[0]));
        for (int c = 0; c < H.d; ++c) u[c] += v * t[c];
    }
    return u;
}

VerificationReport qt_verify(const FinDimHopf& H, const QT& R) {
    VerificationReport rep;
    const int d = H.d;
    const FieldMode& m = H.mode;
    auto emb3 = [&](const SparseTensor& r, int pos) {
        // pos: 12, 13, 23
        SparseTensor out;
        for (const auto& [key, v] : r)
            for (int u2 = 0; u2 < d; ++u2) {
                if (H.unit[u2].is_zero()) continue;
                std::vector<int> k;
                if (pos == 12)
                    k = {key[0], key[1], u2};
                else if (pos == 13)
                    k = {key[0], u2, key[1]};
                else
                    k = {u2, key[0], key[1]};
                st_add(out, k, v * H.unit[u2]);
            }
        return out;
    };
    // axiom (Delta ox id) R = R13 R23
    {
        SparseTensor lhs;
        for (const auto& [key, v] : R.r)
            for (const auto& [bc, w] : H.delta(key[0]))
                st_add(lhs, {bc.first, bc.second, key[1]}, v * w);
        SparseTensor rhs = H.tensor_mul(emb3(R.r, 13), emb3(R.r, 23), 3);
        rep.add("qua1-left", st_clean(std::move(lhs)) == rhs);
    }
    // axiom (id ox Delta) R = R13 R12
    {
        SparseTensor lhs;
        for (const auto& [key, v] : R.r)
            for (const auto& [bc, w] : H.delta(key[1]))
                st_add(lhs, {key[0], bc.first, bc.second}, v * w);
        SparseTensor rhs = H.tensor_mul(emb3(R.r, 13), emb3(R.r, 12), 3);
        rep.add("qua1-right", st_clean(std::move(lhs)) == rhs);
    }
    // axiom (tau Delta h) R = R (Delta h)
    {
        bool ok = true;
        std::string wit;
        for (int a = 0; a < d && ok; ++a) {
            SparseTensor dl, taud;
            for (const auto& [bc, v] : H.delta(a)) {
                st_add(dl, {bc.first, bc.second}, v);
                st_add(taud, {bc.second, bc.first}, v);
            }
            if (H.tensor_mul(taud, R.r, 2) != H.tensor_mul(R.r, dl, 2)) {
                ok = false;
                wit = H.basis.empty() ? std::to_string(a) : H.basis[a];
            }
        }
        rep.add("qua2", ok, wit);
    }
    // Lemma identities
    // (1) (eps ox id) R = 1 = (id ox eps) R
    {
        Vec e1(d, Scalar::zero(m)), e2(d, Scalar::zero(m));
        for (const auto& [key, v] : R.r) {
            e1[key[1]] += H.counit[key[0]] * v;
            e2[key[0]] += H.counit[key[1]] * v;
        }
        rep.add("lemma16-counit", e1 == H.unit && e2 == H.unit);
    }
    // (2) R12 R13 R23 = R23 R13 R12
    {
        SparseTensor l = H.tensor_mul(H.tensor_mul(emb3(R.r, 12), emb3(R.r, 13), 3), emb3(R.r, 23), 3);
        SparseTensor r2 = H.tensor_mul(H.tensor_mul(emb3(R.r, 23), emb3(R.r, 13), 3), emb3(R.r, 12), 3);
        rep.add("lemma16-qybe", l == r2);
    }
    // (3) (S ox id) R = R^-1
    rep.add("lemma16-antipode-left", st_clean(H.apply_antipode_leg(R.r, 0)) == R.r_inv);
    // (4) (id ox S) R^-1 = R
    rep.add("lemma16-antipode-inv", st_clean(H.apply_antipode_leg(R.r_inv, 1)) == R.r);
    // (5) (S ox S) R = R
    rep.add("lemma16-antipode-both",
            st_clean(H.apply_antipode_leg(H.apply_antipode_leg(R.r, 0), 1)) == R.r);
    // (6) u = sum (S R2) R1 with u^-1 = sum R2 S^2 R1 and S^2(h) = u h u^-1
    {
        Vec u = qt_u_element(H, R);
        Vec uin(d, Scalar::zero(m));
        for (const auto& [key, v] : R.r) {
            Vec t = H.mulv(H.basis_vec(key[1]), H.apply_antipode_sq(H.basis_vec(key[0])));
            for (int c = 0; c < d; ++c) uin[c] += v * t[c];
        }
        bool ok = H.mulv(u, uin) == H.unit && H.mulv(uin, u) == H.unit;
        for (int a = 0; a < d && ok; ++a) {
            Vec l = H.apply_antipode_sq(H.basis_vec(a));
            Vec r2 = H.mulv(H.mulv(u, H.basis_vec(a)), uin);
            if (l != r2) ok = false;
        }
        rep.add("lemma16-u-conjugation", ok);
        // Delta u = (R21 R12)^{-1} (u ox u)
        SparseTensor r21;
        for (const auto& [key, v] : R.r) st_add(r21, {key[1], key[0]}, v);
        SparseTensor Q = H.tensor_mul(r21, R.r, 2);
        SparseTensor du;
        for (int a = 0; a < d; ++a) {
            if (u[a].is_zero()) continue;
            for (const auto& [bc, v] : H.delta(a)) st_add(du, {bc.first, bc.second}, u[a] * v);
        }
        SparseTensor uu;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) st_add(uu, {a, b}, u[a] * u[b]);
        rep.add("delta-u", H.tensor_mul(Q, du, 2) == st_clean(std::move(uu)));
    }
    return rep;
}

DualQT make_dual_qt(const FinDimHopf& A, const Mat& phi) {
    const int d = A.d;
    const FieldMode& m = A.mode;
    // convolution inverse
    Mat M(d * d, d * d, m);
    std::vector<Scalar> rhs;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            int row = a * d + b;
            for (const auto& [a12, v] : A.delta(a))
                for (const auto& [b12, w] : A.delta(b))
                    M.at(row, a12.first * d + b12.first) +=
                        v * w * phi.at(a12.second, b12.second);
            rhs.push_back(A.counit[a] * A.counit[b]);
        }
    auto sol = M.solve(rhs);
    if (!sol) throw InvalidInput("dual-qt functional is not convolution invertible");
    DualQT out{phi, Mat(d, d, m)};
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) out.phi_inv.at(a, b) = (*sol)[a * d + b];
    // (dqua1): phi(ab ox c) = sum phi(a ox c1) phi(b ox c2);
    //          phi(a ox bc) = sum phi(a1 ox c) phi(a2 ox b)
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                Scalar l1 = Scalar::zero(m);
                for (int x = 0; x < d; ++x) l1 += A.prod_c(a, b, x) * phi.at(x, c);
                Scalar r1 = Scalar::zero(m);
                for (const auto& [c12, v] : A.delta(c))
                    r1 += v * phi.at(a, c12.first) * phi.at(b, c12.second);
                if (!(l1 == r1)) throw InvalidInput("dual-qt fails the first bicharacter law");
                Scalar l2 = Scalar::zero(m);
                for (int x = 0; x < d; ++x) l2 += A.prod_c(b, c, x) * phi.at(a, x);
                Scalar r2 = Scalar::zero(m);
                for (const auto& [a12, v] : A.delta(a))
                    r2 += v * phi.at(a12.first, c) * phi.at(a12.second, b);
                if (!(l2 == r2)) throw InvalidInput("dual-qt fails the second bicharacter law");
            }
    // (dqua2): sum b1 a1 phi(a2 ox b2) = sum phi(a1 ox b1) a2 b2
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Vec l(d, Scalar::zero(m)), r(d, Scalar::zero(m));
            for (const auto& [a12, v] : A.delta(a))
                for (const auto& [b12, w] : A.delta(b)) {
                    Vec t = A.mulv(A.basis_vec(b12.first), A.basis_vec(a12.first));
                    for (int x = 0; x < d; ++x)
                        l[x] += v * w * t[x] * phi.at(a12.second, b12.second);
                    Vec t2 = A.mulv(A.basis_vec(a12.second), A.basis_vec(b12.second));
                    for (int x = 0; x < d; ++x)
                        r[x] += v * w * phi.at(a12.first, b12.first) * t2[x];
                }
            if (l != r) throw InvalidInput("dual-qt fails almost-commutativity");
        }
    return out;
}

DualQT dual_qt_from_qt(const FinDimHopf& H, const QT& R, const FinDimHopf& Hdual) {
    Mat phi(H.d, H.d, H.mode);
    for (const auto& [key, v] : R.r) phi.at(key[0], key[1]) += v;
    return make_dual_qt(Hdual, phi);
}

GroupFunctionHopf group_function_hopf(const std::vector<int>& orders, const Mat& bichar) {
    int G = 1;
    for (int o : orders) {
        if (o < 1) throw InvalidInput("group orders must be positive");
        G *= o;
    }
    const FieldMode m = bichar.mode();
    if (bichar.rows() != G || bichar.cols() != G)
        throw InvalidInput("bicharacter matrix has wrong size");
    auto add = [&](int a, int b) {
        int out = 0, mult = 1;
        int ra = a, rb = b;
        std::vector<int> da(orders.size()), db(orders.size());
        for (int t = static_cast<int>(orders.size()) - 1; t >= 0; --t) {
            da[t] = ra % orders[t];
            ra /= orders[t];
            db[t] = rb % orders[t];
            rb /= orders[t];
        }
        for (size_t t = 0; t < orders.size(); ++t) out = out * orders[t] + (da[t] + db[t]) % orders[t];
        (void)mult;
        return out;
    };
    auto neg = [&](int a) {
        int out = 0;
        std::vector<int> da(orders.size());
        int ra = a;
        for (int t = static_cast<int>(orders.size()) - 1; t >= 0; --t) {
            da[t] = ra % orders[t];
            ra /= orders[t];
        }
        for (size_t t = 0; t < orders.size(); ++t) out = out * orders[t] + (orders[t] - da[t]) % orders[t];
        return out;
    };
    // bicharacter conditions
    for (int a = 0; a < G; ++a) {
        if (!bichar.at(a, 0).is_one() || !bichar.at(0, a).is_one())
            throw NotABicharacter("bicharacter must send the identity to 1 (element " +
                                  std::to_string(a) + ")");
        for (int b = 0; b < G; ++b)
            for (int c = 0; c < G; ++c) {
                if (!(bichar.at(add(a, b), c) == bichar.at(a, c) * bichar.at(b, c)))
                    throw NotABicharacter("first-slot multiplicativity fails at (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
                if (!(bichar.at(a, add(b, c)) == bichar.at(a, b) * bichar.at(a, c)))
                    throw NotABicharacter("second-slot multiplicativity fails at (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
            }
    }
    GroupFunctionHopf out;
    // k(G): delta basis
    FinDimHopf F;
    F.d = G;
    F.mode = m;
    for (int a = 0; a < G; ++a) F.basis.push_back("d" + std::to_string(a));
    F.product.assign(static_cast<size_t>(G) * G * G, Scalar::zero(m));
    F.coprod.assign(static_cast<size_t>(G) * G * G, Scalar::zero(m));
    F.unit.assign(G, Scalar::one(m));
    F.counit.assign(G, Scalar::zero(m));
    std::vector<Scalar> S(static_cast<size_t>(G) * G, Scalar::zero(m));
    for (int a = 0; a < G; ++a) {
        F.product[(a * G + a) * G + a] = Scalar::one(m);
        for (int b = 0; b < G; ++b) F.coprod[(a * G + b) * G + add(neg(b), a)] = Scalar::one(m);
        S[neg(a) * G + a] = Scalar::one(m);
    }
    F.counit[0] = Scalar::one(m);
    F.antipode = std::move(S);
    SparseTensor r;
    for (int a = 0; a < G; ++a)
        for (int b = 0; b < G; ++b) st_add(r, {a, b}, bichar.at(a, b));
    out.qt = make_qt(F, std::move(r));
    out.fun = std::move(F);
    // group algebra kG with the bicharacter as a dual-qt functional
    FinDimHopf Gr;
    Gr.d = G;
    Gr.mode = m;
    for (int a = 0; a < G; ++a) Gr.basis.push_back("g" + std::to_string(a));
    Gr.product.assign(static_cast<size_t>(G) * G * G, Scalar::zero(m));
    Gr.coprod.assign(static_cast<size_t>(G) * G * G, Scalar::zero(m));
    Gr.unit.assign(G, Scalar::zero(m));
    Gr.counit.assign(G, Scalar::one(m));
    std::vector<Scalar> S2(static_cast<size_t>(G) * G, Scalar::zero(m));
    for (int a = 0; a < G; ++a) {
        for (int b = 0; b < G; ++b) Gr.product[(a * G + b) * G + add(a, b)] = Scalar::one(m);
        Gr.coprod[(a * G + a) * G + a] = Scalar::one(m);
        S2[neg(a) * G + a] = Scalar::one(m);
    }
    Gr.unit[0] = Scalar::one(m);
    Gr.antipode = std::move(S2);
    out.grp_dqt = make_dual_qt(Gr, bichar);
    out.grp = std::move(Gr);
    return out;
}

std::pair<FinDimHopf, QT> drinfeld_double(const FinDimHopf& H) {
    VerificationReport hv = hopf_verify(H);
    if (!hv.passed) throw InvalidInput("drinfeld_double input fails hopf_verify");
    if (!H.antipode) throw InvalidInput("drinfeld_double needs an antipode");
    const int d = H.d;
    const FieldMode& m = H.mode;
    FinDimHopf Hs = dual_hopf(H);
    const int D = d * d;
    auto di = [&](int a, int h) { return a * d + h; };
    FinDimHopf Dh;
    Dh.d = D;
    Dh.mode = m;
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < d; ++h) Dh.basis.push_back(Hs.basis[a] + "." + H.basis[h]);
    Dh.product.assign(static_cast<size_t>(D) * D * D, Scalar::zero(m));
    Dh.coprod.assign(static_cast<size_t>(D) * D * D, Scalar::zero(m));
    Dh.unit.assign(D, Scalar::zero(m));
    Dh.counit.assign(D, Scalar::zero(m));
    // product (a ox h)(b ox g) = sum b2 a ox h2 g <S h1, b1> <h3, b3>
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < d; ++h) {
            SparseTensor dh3 = H.delta_pow(h, 3);
            for (int b = 0; b < d; ++b) {
                SparseTensor db3 = Hs.delta_pow(b, 3);
                for (int g = 0; g < d; ++g) {
                    for (const auto& [hk, hv2] : dh3)
                        for (const auto& [bk, bv] : db3) {
                            // <S h1, b1>: the dual-basis pairing <f_x, e_y> = delta
                            const Scalar& sc = H.s_mat(bk[0], hk[0]);
                            if (sc.is_zero()) continue;
                            if (hk[2] != bk[2]) continue;
                            Scalar co = hv2 * bv * sc;
                            Vec ba = Hs.mulv(Hs.basis_vec(bk[1]), Hs.basis_vec(a));
                            Vec hg = H.mulv(H.basis_vec(hk[1]), H.basis_vec(g));
                            for (int x = 0; x < d; ++x) {
                                if (ba[x].is_zero()) continue;
                                for (int y = 0; y < d; ++y) {
                                    if (hg[y].is_zero()) continue;
                                    Dh.product[(di(a, h) * D + di(b, g)) * D + di(x, y)] +=
                                        co * ba[x] * hg[y];
                                }
                            }
                        }
                }
            }
        }
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < d; ++h) {
            Dh.unit[di(a, h)] = Hs.unit[a] * H.unit[h];
            Dh.counit[di(a, h)] = Hs.counit[a] * H.counit[h];
            for (const auto& [ak, av] : Hs.delta(a))
                for (const auto& [hk, hv2] : H.delta(h))
                    Dh.coprod[(di(a, h) * D + di(ak.first, hk.first)) * D +
                              di(ak.second, hk.second)] += av * hv2;
        }
    auto S = solve_antipode(Dh);
    if (!S) throw InvalidInput("drinfeld double has no antipode (input not a Hopf algebra?)");
    Dh.antipode = std::move(*S);
    VerificationReport rep = hopf_verify(Dh);
    if (!rep.passed)
        throw InvalidInput("drinfeld double failed hopf_verify: " + rep.first_failure()->name);
    // R = sum_a (f^a ox 1) ox (1 ox e_a)
    SparseTensor r;
    for (int a = 0; a < d; ++a)
        for (int u1 = 0; u1 < d; ++u1)
            for (int u2 = 0; u2 < d; ++u2)
                st_add(r, {di(a, u1), di(u2, a)}, H.unit[u1] * Hs.unit[u2]);
    QT R = make_qt(Dh, std::move(r));
    // the inverse must agree with (S ox id) R
    if (st_clean(Dh.apply_antipode_leg(R.r, 0)) != R.r_inv)
        throw InvalidInput("double's R-inverse disagrees with (S ox id) R");
    VerificationReport qr = qt_verify(Dh, R);
    if (!qr.passed)
        throw InvalidInput("drinfeld double failed qt_verify: " + qr.first_failure()->name);
    return {std::move(Dh), std::move(R)};
}

Vec ModuleAction::apply(const FinDimHopf& H, const Vec& hvec, const Vec& v) const {
    Vec out(dv, Scalar::zero(H.mode));
    for (int h = 0; h < H.d; ++h) {
        if (hvec[h].is_zero()) continue;
        for (int x = 0; x < dv; ++x) {
            if (v[x].is_zero()) continue;
            for (int o = 0; o < dv; ++o) {
                const Scalar& c = a(h, x, o);
                if (!c.is_zero()) out[o] += hvec[h] * v[x] * c;
            }
        }
    }
    return out;
}

VerificationReport module_verify(const FinDimHopf& H, const ModuleAction& V) {
    VerificationReport rep;
    bool ok = true;
    std::string wit;
    const int dv = V.dv;
    // (hg) |> v = h |> (g |> v); 1 |> v = v
    for (int h = 0; h < H.d && ok; ++h)
        for (int g = 0; g < H.d && ok; ++g) {
            Vec hg = H.mulv(H.basis_vec(h), H.basis_vec(g));
            for (int v = 0; v < dv && ok; ++v) {
                Vec vl(dv, Scalar::zero(H.mode));
                for (int c = 0; c < H.d; ++c) {
                    if (hg[c].is_zero()) continue;
                    for (int o = 0; o < dv; ++o) vl[o] += hg[c] * V.a(c, v, o);
                }
                Vec mid(dv, Scalar::zero(H.mode));
                for (int o = 0; o < dv; ++o) mid[o] = V.a(g, v, o);
                Vec vr = V.apply(H, H.basis_vec(h), mid);
                if (vl != vr) {
                    ok = false;
                    wit = "(h,g,v)=(" + std::to_string(h) + "," + std::to_string(g) + "," +
                          std::to_string(v) + ")";
                }
            }
        }
    for (int v = 0; v < dv && ok; ++v) {
        Vec one = V.apply(H, H.unit, [&] {
            Vec e(dv, Scalar::zero(H.mode));
            e[v] = Scalar::one(H.mode);
            return e;
        }());
        Vec want(dv, Scalar::zero(H.mode));
        want[v] = Scalar::one(H.mode);
        if (one != want) {
            ok = false;
            wit = "unit on v" + std::to_string(v);
        }
    }
    rep.add("module-law", ok, wit);
    return rep;
}

VerificationReport comodule_verify(const FinDimHopf& H, const Coaction& V) {
    VerificationReport rep;
    bool ok = true;
    std::string wit;
    const int dv = V.dv;
    for (int v = 0; v < dv && ok; ++v) {
        // (Delta ox id) beta = (id ox beta) beta ; (eps ox id) beta = id
        SparseTensor l, r;
        for (int h = 0; h < H.d; ++h)
            for (int o = 0; o < dv; ++o) {
                const Scalar& c = V.at(v, h, o);
                if (c.is_zero()) continue;
                for (const auto& [bc, w] : H.delta(h)) st_add(l, {bc.first, bc.second, o}, c * w);
                for (int h2 = 0; h2 < H.d; ++h2)
                    for (int o2 = 0; o2 < dv; ++o2) {
                        const Scalar& c2 = V.at(o, h2, o2);
                        if (!c2.is_zero()) st_add(r, {h, h2, o2}, c * c2);
                    }
            }
        if (st_clean(std::move(l)) != st_clean(std::move(r))) {
            ok = false;
            wit = "coassociativity on v" + std::to_string(v);
        }
        Vec e(dv, Scalar::zero(H.mode));
        for (int h = 0; h < H.d; ++h)
            for (int o = 0; o < dv; ++o) e[o] += H.counit[h] * V.at(v, h, o);
        Vec want(dv, Scalar::zero(H.mode));
        want[v] = Scalar::one(H.mode);
        if (e != want) {
            ok = false;
            wit = "counit on v" + std::to_string(v);
        }
    }
    rep.add("comodule-law", ok, wit);
    return rep;
}

ModuleBraiding module_braiding(const FinDimHopf& H, const QT& R, const ModuleAction& V,
                               const ModuleAction& W) {
    const FieldMode& m = H.mode;
    const int dv = V.dv, dw = W.dv;
    ModuleBraiding out{Mat(dw * dv, dv * dw, m), {}};
    for (const auto& [key, c] : R.r) {
        int r1 = key[0], r2 = key[1];
        for (int v = 0; v < dv; ++v)
            for (int w = 0; w < dw; ++w)
                for (int wo = 0; wo < dw; ++wo) {
                    const Scalar& cw = W.a(r2, w, wo);
                    if (cw.is_zero()) continue;
                    for (int vo = 0; vo < dv; ++vo) {
                        const Scalar& cv = V.a(r1, v, vo);
                        if (!cv.is_zero()) out.psi.at(wo * dv + vo, v * dw + w) += c * cw * cv;
                    }
                }
    }
    // intertwiner: h |> Psi(v ox w) = Psi(h |> (v ox w)) via Delta h
    bool ok = true;
    std::string wit;
    for (int h = 0; h < H.d && ok; ++h) {
        for (int v = 0; v < dv && ok; ++v)
            for (int w = 0; w < dw && ok; ++w) {
                // lhs: act on W ox V after Psi
                std::vector<Scalar> lhs(static_cast<size_t>(dw) * dv, Scalar::zero(m));
                for (int wo = 0; wo < dw; ++wo)
                    for (int vo = 0; vo < dv; ++vo) {
                        const Scalar& p = out.psi.at(wo * dv + vo, v * dw + w);
                        if (p.is_zero()) continue;
                        for (const auto& [bc, cc] : H.delta(h))
                            for (int w2 = 0; w2 < dw; ++w2)
                                for (int v2 = 0; v2 < dv; ++v2) {
                                    Scalar t = W.a(bc.first, wo, w2) * V.a(bc.second, vo, v2);
                                    if (!t.is_zero()) lhs[w2 * dv + v2] += p * cc * t;
                                }
                    }
                std::vector<Scalar> rhs(static_cast<size_t>(dw) * dv, Scalar::zero(m));
                for (const auto& [bc, cc] : H.delta(h))
                    for (int v2 = 0; v2 < dv; ++v2)
                        for (int w2 = 0; w2 < dw; ++w2) {
                            Scalar t = V.a(bc.first, v, v2) * W.a(bc.second, w, w2);
                            if (t.is_zero()) continue;
                            for (int wo = 0; wo < dw; ++wo)
                                for (int vo = 0; vo < dv; ++vo) {
                                    const Scalar& p = out.psi.at(wo * dv + vo, v2 * dw + w2);
                                    if (!p.is_zero()) rhs[wo * dv + vo] += cc * t * p;
                                }
                        }
                if (lhs != rhs) {
                    ok = false;
                    wit = "(h,v,w)=(" + std::to_string(h) + "," + std::to_string(v) + "," +
                          std::to_string(w) + ")";
                }
            }
    }
    out.report.add("braiding-intertwines", ok, wit);
    if (!out.psi.try_inverse()) out.report.add("braiding-invertible", false, "Psi singular");
    return out;
}

ModuleAction graded_module_action(const FinDimHopf& Zn, const std::vector<int>& dims) {
    const int n = Zn.d;
    int dv = 0;
    for (int x : dims) dv += x;
    ModuleAction act;
    act.dv = dv;
    act.act.assign(static_cast<size_t>(n) * dv * dv, Scalar::zero(Zn.mode));
    int off = 0;
    for (int grade = 0; grade < static_cast<int>(dims.size()); ++grade) {
        for (int t = 0; t < dims[grade]; ++t) {
            int v = off + t;
            for (int a = 0; a < n; ++a) {
                // g^a |> v = q^{a |v|} v
                act.act[(a * dv + v) * dv + v] = Scalar::q_power((a * grade) % n, Zn.mode);
            }
        }
        off += dims[grade];
    }
    return act;
}

Scalar anyonic_dim(const std::vector<int>& dims, int n, const FieldMode& m) {
    if (m.kind() != FieldMode::Kind::Cyclotomic || m.cyclo_n() != n)
        throw ModeMismatch("anyonic_dim needs mode cyclotomic:" + std::to_string(n));
    Scalar out = Scalar::zero(m);
    for (int a = 0; a < static_cast<int>(dims.size()); ++a)
        out += Scalar::q_power(-(a * a) % n + n * n, m) * Scalar::integer(dims[a], m);
    return out;
}

Scalar anyonic_trace(const std::vector<Mat>& blocks, int n, const FieldMode& m) {
    if (m.kind() != FieldMode::Kind::Cyclotomic || m.cyclo_n() != n)
        throw ModeMismatch("anyonic_trace needs mode cyclotomic:" + std::to_string(n));
    Scalar out = Scalar::zero(m);
    for (int a = 0; a < static_cast<int>(blocks.size()); ++a) {
        Scalar tr = Scalar::zero(m);
        for (int i = 0; i < blocks[a].rows(); ++i) tr += blocks[a].at(i, i);
        out += Scalar::q_power(-(a * a) % n + n * n, m) * tr;
    }
    return out;
}

VerificationReport crossed_module_check(const FinDimHopf& H, const ModuleAction& act,
                                        const Coaction& co) {
    VerificationReport rep;
    rep.merge(module_verify(H, act));
    rep.merge(comodule_verify(H, co));
    if (!rep.passed) return rep;
    const int d = H.d, dv = act.dv;
    const FieldMode& m = H.mode;
    // compatibility: sum h1 v^(1) ox h2 |> v^(2) = sum (h1|>v)^(1) h2 ox (h1|>v)^(2)
    bool ok = true;
    std::string wit;
    for (int h = 0; h < d && ok; ++h)
        for (int v = 0; v < dv && ok; ++v) {
            SparseTensor lhs, rhs;
            for (const auto& [bc, c] : H.delta(h)) {
                for (int vh = 0; vh < d; ++vh)
                    for (int vv = 0; vv < dv; ++vv) {
                        const Scalar& cw = co.at(v, vh, vv);
                        if (cw.is_zero()) continue;
                        Vec t = H.mulv(H.basis_vec(bc.first), H.basis_vec(vh));
                        for (int x = 0; x < d; ++x) {
                            if (t[x].is_zero()) continue;
                            for (int y = 0; y < dv; ++y) {
                                const Scalar& av = act.a(bc.second, vv, y);
                                if (!av.is_zero()) st_add(lhs, {x, y}, c * cw * t[x] * av);
                            }
                        }
                    }
                for (int y = 0; y < dv; ++y) {
                    const Scalar& av = act.a(bc.first, v, y);
                    if (av.is_zero()) continue;
                    for (int wh = 0; wh < d; ++wh)
                        for (int wv = 0; wv < dv; ++wv) {
                            const Scalar& cw = co.at(y, wh, wv);
                            if (cw.is_zero()) continue;
                            Vec t = H.mulv(H.basis_vec(wh), H.basis_vec(bc.second));
                            for (int x = 0; x < d; ++x)
                                if (!t[x].is_zero()) st_add(rhs, {x, wv}, c * av * cw * t[x]);
                        }
                }
            }
            if (st_clean(std::move(lhs)) != st_clean(std::move(rhs))) {
                ok = false;
                wit = "(h,v)=(" + std::to_string(h) + "," + std::to_string(v) + ")";
            }
        }
    rep.add("crossed-compatibility", ok, wit);
    // invertibility: solve gamma: V -> V ox H with both identities
    {
        const int U = dv * dv * d; // unknowns gamma[vin][vout][h]
        auto uidx = [&](int vin, int vout, int h) { return (vin * dv + vout) * d + h; };
        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhsv;
        for (int v = 0; v < dv; ++v) {
            for (int x = 0; x < d; ++x)
                for (int y = 0; y < dv; ++y) {
                    // identity 1: sum gamma(v)=(vv,hh), beta(vv)=(bh,bv):
                    //   (bh*hh -> x), bv == y
                    std::vector<Scalar> row(U, Scalar::zero(H.mode));
                    for (int vv = 0; vv < dv; ++vv)
                        for (int hh = 0; hh < d; ++hh)
                            for (int bh = 0; bh < d; ++bh) {
                                const Scalar& w = co.at(vv, bh, y);
                                if (w.is_zero()) continue;
                                Vec t = H.mulv(H.basis_vec(bh), H.basis_vec(hh));
                                if (!t[x].is_zero()) row[uidx(v, vv, hh)] += w * t[x];
                            }
                    rows.push_back(std::move(row));
                    rhsv.push_back(H.unit[x] * (y == v ? Scalar::one(H.mode) : Scalar::zero(H.mode)));
                    // identity 2: beta(v)=(vh,vv); gamma(vv)=(y,hh): (hh*vh->x) ox y
                    std::vector<Scalar> row2(U, Scalar::zero(H.mode));
                    for (int vh = 0; vh < d; ++vh)
                        for (int vv = 0; vv < dv; ++vv) {
                            const Scalar& w = co.at(v, vh, vv);
                            if (w.is_zero()) continue;
                            for (int hh = 0; hh < d; ++hh) {
                                Vec t = H.mulv(H.basis_vec(hh), H.basis_vec(vh));
                                if (!t[x].is_zero()) row2[uidx(vv, y, hh)] += w * t[x];
                            }
                        }
                    rows.push_back(std::move(row2));
                    rhsv.push_back(H.unit[x] * (y == v ? Scalar::one(H.mode) : Scalar::zero(H.mode)));
                }
        }
        Mat A(static_cast<int>(rows.size()), U, H.mode);
        for (size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < U; ++c) A.at(static_cast<int>(r), c) = rows[r][c];
        rep.add("comodule-invertible", A.solve(rhsv).has_value(),
                "no inverse comodule map exists");
    }
    return rep;
}

Coaction qt_coaction(const FinDimHopf& H, const QT& R, const ModuleAction& act) {
    Coaction co;
    co.dv = act.dv;
    co.dh = H.d;
    co.co.assign(static_cast<size_t>(act.dv) * H.d * act.dv, Scalar::zero(H.mode));
    for (const auto& [key, c] : R.r) {
        for (int b = 0; b < act.dv; ++b)
            for (int o = 0; o < act.dv; ++o) {
                const Scalar& av = act.a(key[0], b, o);
                if (!av.is_zero()) co.co[(b * H.d + key[1]) * act.dv + o] += c * av;
            }
    }
    return co;
}

VerificationReport nfold_module_algebra_check(const FinDimHopf& H, int n) {
    VerificationReport rep;
    if (n < 1) throw InvalidInput("nfold check needs n >= 1");
    const int d = H.d;
    const FieldMode& m = H.mode;
    // act(h, key): h |> (b1 ox ... ox bn) = sum prod_i h_i b_i S h_{2n+1-i}
    auto act = [&](int h, const std::vector<int>& key) {
        SparseTensor out;
        for (const auto& [ks, v] : H.delta_pow(h, 2 * n)) {
            std::vector<std::pair<std::vector<int>, Scalar>> states = {{{}, v}};
            for (int i = 0; i < n; ++i) {
                Vec t = H.mulv(H.mulv(H.basis_vec(ks[i]), H.basis_vec(key[i])),
                               H.apply_antipode(H.basis_vec(ks[2 * n - 1 - i])));
                std::vector<std::pair<std::vector<int>, Scalar>> next;
                for (auto& [kk, vv] : states)
                    for (int x = 0; x < d; ++x) {
                        if (t[x].is_zero()) continue;
                        std::vector<int> nk = kk;
                        nk.push_back(x);
                        next.push_back({std::move(nk), vv * t[x]});
                    }
                states = std::move(next);
            }
            for (auto& [kk, vv] : states) st_add(out, kk, vv);
        }
        return out;
    };
    auto act_tensor = [&](int h, const SparseTensor& t) {
        SparseTensor out;
        for (const auto& [key, v] : t)
            for (const auto& [k2, v2] : act(h, key)) st_add(out, k2, v * v2);
        return out;
    };
    std::vector<std::vector<int>> keys;
    {
        std::vector<int> k(n, 0);
        while (true) {
            keys.push_back(k);
            int t = n - 1;
            while (t >= 0 && k[t] == d - 1) {
                k[t] = 0;
                --t;
            }
            if (t < 0) break;
            ++k[t];
        }
    }
    // module law
    {
        bool ok = true;
        std::string wit;
        for (int h = 0; h < d && ok; ++h)
            for (int g = 0; g < d && ok; ++g) {
                Vec hg = H.mulv(H.basis_vec(h), H.basis_vec(g));
                for (const auto& key : keys) {
                    SparseTensor lhs;
                    for (int c = 0; c < d; ++c) {
                        if (hg[c].is_zero()) continue;
                        for (const auto& [k2, v2] : act(c, key)) st_add(lhs, k2, hg[c] * v2);
                    }
                    SparseTensor rhs = act_tensor(h, act(g, key));
                    if (st_clean(std::move(lhs)) != st_clean(std::move(rhs))) {
                        ok = false;
                        wit = "(h,g)=(" + std::to_string(h) + "," + std::to_string(g) + ")";
                        break;
                    }
                }
            }
        // h |> 1 = eps(h) 1
        SparseTensor one = H.unit_tensor(n);
        for (int h = 0; h < d && ok; ++h) {
            SparseTensor lhs = act_tensor(h, one);
            SparseTensor want;
            for (const auto& [k2, v2] : one) st_add(want, k2, H.counit[h] * v2);
            if (lhs != st_clean(std::move(want))) {
                ok = false;
                wit = "unit for h=" + std::to_string(h);
            }
        }
        rep.add("nfold-module-law", ok, wit);
    }
    // module algebra law: h |> (x y) = sum (h1 |> x)(h2 |> y)
    {
        bool ok = true;
        std::string wit;
        for (int h = 0; h < d && ok; ++h)
            for (const auto& kx : keys) {
                for (const auto& ky : keys) {
                    SparseTensor x, y;
                    x.emplace(kx, Scalar::one(m));
                    y.emplace(ky, Scalar::one(m));
                    SparseTensor lhs = act_tensor(h, H.tensor_mul(x, y, n));
                    SparseTensor rhs;
                    for (const auto& [bc, v] : H.delta(h)) {
                        SparseTensor t =
                            H.tensor_mul(act(bc.first, kx), act(bc.second, ky), n);
                        for (const auto& [k2, v2] : t) st_add(rhs, k2, v * v2);
                    }
                    if (lhs != st_clean(std::move(rhs))) {
                        ok = false;
                        wit = "h=" + std::to_string(h);
                        break;
                    }
                }
                if (!ok) break;
            }
        rep.add("nfold-module-algebra", ok, wit);
    }
    return rep;
}

} // namespace braidkit
