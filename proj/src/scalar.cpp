#include "braidkit/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace braidkit {

// ---------------------------------------------------------------- ZPoly

ZPoly zp_normalize(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zp_normalize(std::move(r));
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zp_normalize(std::move(r));
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zp_normalize(std::move(r));
}

ZPoly zp_neg(ZPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (zp_is_zero(b)) throw DivisionByZero("polynomial division by zero");
    if (zp_is_zero(a)) return {};
    if (a.size() < b.size()) throw InvalidInput("inexact polynomial division");
    ZPoly rem = a;
    ZPoly quot(a.size() - b.size() + 1, mpz_class(0));
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        mpz_class top = rem[i + b.size() - 1];
        if (top == 0) continue;
        mpz_class c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        if (r != 0) throw InvalidInput("inexact polynomial division");
        quot[i] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw InvalidInput("inexact polynomial division");
    return zp_normalize(std::move(quot));
}

static mpz_class zp_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

static ZPoly zp_scale_div(const ZPoly& p, const mpz_class& d) {
    ZPoly r = p;
    for (auto& c : r) {
        mpz_class qv, rv;
        mpz_tdiv_qr(qv.get_mpz_t(), rv.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        c = qv;
    }
    return r;
}

// pseudo-remainder of a by b (deg a >= deg b)
static ZPoly zp_prem(ZPoly a, const ZPoly& b) {
    int db = zp_deg(b);
    while (zp_deg(a) >= db && !a.empty()) {
        mpz_class lc = a.back();
        int sh = zp_deg(a) - db;
        for (auto& c : a) c *= b.back();
        for (int j = 0; j <= db; ++j) a[sh + j] -= lc * b[j];
        a = zp_normalize(std::move(a));
    }
    return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (zp_is_zero(a)) {
        if (!b.empty() && b.back() < 0) return zp_neg(b);
        return b;
    }
    if (zp_is_zero(b)) {
        if (!a.empty() && a.back() < 0) return zp_neg(a);
        return a;
    }
    mpz_class ca = zp_content(a), cb = zp_content(b);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zp_scale_div(a, ca);
    b = zp_scale_div(b, cb);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!zp_is_zero(b)) {
        ZPoly r = zp_prem(a, b);
        if (!zp_is_zero(r)) r = zp_scale_div(r, zp_content(r));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0) a = zp_neg(a);
    ZPoly g(1, cg);
    return zp_mul(g, a);
}

ZPoly cyclotomic_polynomial(int n) {
    if (n < 1) throw InvalidInput("cyclotomic index must be >= 1");
    ZPoly num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = zp_divexact(num, cyclotomic_polynomial(d));
    }
    return num;
}

// ---------------------------------------------------------------- FieldMode

FieldMode FieldMode::qfield() { return FieldMode{}; }

FieldMode FieldMode::cyclotomic(int n) {
    if (n < 1) throw InvalidInput("cyclotomic order must be >= 1");
    FieldMode m;
    m.kind_ = Kind::Cyclotomic;
    auto f = std::make_shared<CycloField>();
    f->n = n;
    ZPoly phi = cyclotomic_polynomial(n);
    f->phi.assign(phi.begin(), phi.end());
    f->deg = zp_deg(phi);
    m.field_ = std::move(f);
    return m;
}

FieldMode FieldMode::parse(std::string_view text) {
    if (text == "qfield") return qfield();
    const std::string_view pre = "cyclotomic:";
    if (text.substr(0, pre.size()) == pre) {
        int n = 0;
        try {
            n = std::stoi(std::string(text.substr(pre.size())));
        } catch (...) {
            throw InvalidInput("bad coefficient mode: " + std::string(text));
        }
        return cyclotomic(n);
    }
    throw InvalidInput("bad coefficient mode: " + std::string(text));
}

const CycloField& FieldMode::cyclo() const {
    if (!field_) throw ModeMismatch("not a cyclotomic mode");
    return *field_;
}

bool FieldMode::operator==(const FieldMode& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Cyclotomic) return field_->n == o.field_->n;
    return true;
}

std::string FieldMode::str() const {
    if (kind_ == Kind::QField) return "qfield";
    return "cyclotomic:" + std::to_string(field_->n);
}

// ---------------------------------------------------------------- Scalar

void Scalar::check_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode_ != b.mode_)
        throw ModeMismatch("mixed coefficient modes: " + a.mode_.str() + " vs " + b.mode_.str());
}

Scalar Scalar::zero(const FieldMode& m) {
    Scalar s;
    s.mode_ = m;
    if (m.kind() == FieldMode::Kind::Cyclotomic)
        s.cy_.assign(m.cyclo().deg, mpq_class(0));
    return s;
}

Scalar Scalar::one(const FieldMode& m) { return integer(1, m); }

Scalar Scalar::integer(long v, const FieldMode& m) {
    Scalar s = zero(m);
    if (m.kind() == FieldMode::Kind::QField) {
        if (v != 0) s.num_ = {mpz_class(v)};
    } else {
        if (m.cyclo().deg > 0) s.cy_[0] = v;
    }
    return s;
}

Scalar Scalar::rational(const mpq_class& v, const FieldMode& m) {
    Scalar s = zero(m);
    mpq_class c = v;
    c.canonicalize();
    if (m.kind() == FieldMode::Kind::QField) {
        if (c != 0) {
            s.num_ = {c.get_num()};
            s.den_ = {c.get_den()};
        }
    } else {
        if (m.cyclo().deg > 0) s.cy_[0] = c;
    }
    return s;
}

Scalar Scalar::q_power(int e, const FieldMode& m) {
    Scalar s = zero(m);
    if (m.kind() == FieldMode::Kind::QField) {
        if (e >= 0) {
            s.num_.assign(e + 1, mpz_class(0));
            s.num_[e] = 1;
        } else {
            s.num_ = {mpz_class(1)};
            s.den_.assign(-e + 1, mpz_class(0));
            s.den_[-e] = 1;
        }
    } else {
        int n = m.cyclo().n;
        int k = ((e % n) + n) % n;
        std::vector<mpq_class> raw(k + 1, mpq_class(0));
        raw[k] = 1;
        s.reduce_cyclo(std::move(raw));
    }
    return s;
}

void Scalar::normalize_qfield() {
    if (zp_is_zero(num_)) {
        den_ = {mpz_class(1)};
        return;
    }
    ZPoly g = zp_gcd(num_, den_);
    if (!(g.size() == 1 && g[0] == 1)) {
        num_ = zp_divexact(num_, g);
        den_ = zp_divexact(den_, g);
    }
    if (den_.back() < 0) {
        num_ = zp_neg(std::move(num_));
        den_ = zp_neg(std::move(den_));
    }
}

void Scalar::reduce_cyclo(std::vector<mpq_class> raw) {
    const CycloField& f = mode_.cyclo();
    while (static_cast<int>(raw.size()) > f.deg) {
        mpq_class lead = raw.back();
        size_t off = raw.size() - f.phi.size();
        if (lead != 0) {
            for (size_t i = 0; i < f.phi.size(); ++i) raw[off + i] -= lead * f.phi[i];
        }
        raw.pop_back();
    }
    raw.resize(f.deg, mpq_class(0));
    for (auto& c : raw) c.canonicalize();
    cy_ = std::move(raw);
}

bool Scalar::is_zero() const {
    if (mode_.kind() == FieldMode::Kind::QField) return zp_is_zero(num_);
    for (const auto& c : cy_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (mode_.kind() == FieldMode::Kind::QField)
        return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
    if (cy_.empty()) return false; // Cyclotomic(?) with deg 0 cannot occur (phi(n) >= 1)
    if (cy_[0] != 1) return false;
    for (size_t i = 1; i < cy_.size(); ++i)
        if (cy_[i] != 0) return false;
    return true;
}

bool Scalar::operator==(const Scalar& o) const {
    if (mode_ != o.mode_) return false;
    if (mode_.kind() == FieldMode::Kind::QField) return num_ == o.num_ && den_ == o.den_;
    return cy_ == o.cy_;
}

bool Scalar::operator<(const Scalar& o) const {
    check_same_mode(*this, o);
    if (mode_.kind() == FieldMode::Kind::QField) {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }
    for (size_t i = 0; i < cy_.size(); ++i)
        if (cy_[i] != o.cy_[i]) return cy_[i] < o.cy_[i];
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_mode(*this, o);
    Scalar r = zero(mode_);
    if (mode_.kind() == FieldMode::Kind::QField) {
        r.num_ = zp_add(zp_mul(num_, o.den_), zp_mul(o.num_, den_));
        r.den_ = zp_mul(den_, o.den_);
        r.normalize_qfield();
    } else {
        std::vector<mpq_class> raw = cy_;
        for (size_t i = 0; i < raw.size(); ++i) raw[i] += o.cy_[i];
        r.reduce_cyclo(std::move(raw));
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (mode_.kind() == FieldMode::Kind::QField) {
        r.num_ = zp_neg(std::move(r.num_));
    } else {
        for (auto& c : r.cy_) c = -c;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_mode(*this, o);
    Scalar r = zero(mode_);
    if (mode_.kind() == FieldMode::Kind::QField) {
        if (is_zero() || o.is_zero()) return r;
        r.num_ = zp_mul(num_, o.num_);
        r.den_ = zp_mul(den_, o.den_);
        r.normalize_qfield();
    } else {
        std::vector<mpq_class> raw(2 * mode_.cyclo().deg + 1, mpq_class(0));
        for (size_t i = 0; i < cy_.size(); ++i) {
            if (cy_[i] == 0) continue;
            for (size_t j = 0; j < o.cy_.size(); ++j) {
                if (o.cy_[j] == 0) continue;
                raw[i + j] += cy_[i] * o.cy_[j];
            }
        }
        r.reduce_cyclo(std::move(raw));
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("scalar inverse of zero");
    Scalar r = zero(mode_);
    if (mode_.kind() == FieldMode::Kind::QField) {
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_qfield();
        return r;
    }
    // extended Euclid in Q[q] modulo Phi_n
    const CycloField& f = mode_.cyclo();
    using QP = std::vector<mpq_class>;
    auto norm = [](QP p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
        return p;
    };
    auto submul = [&](QP a, const QP& qq, const QP& b) {
        // a - qq*b
        size_t need = qq.empty() || b.empty() ? a.size()
                                              : std::max(a.size(), qq.size() + b.size() - 1);
        a.resize(need, mpq_class(0));
        for (size_t i = 0; i < qq.size(); ++i) {
            if (qq[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) a[i + j] -= qq[i] * b[j];
        }
        return norm(std::move(a));
    };
    auto divmod = [&](const QP& a, const QP& b) {
        QP rem = a, quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
        while (rem.size() >= b.size() && !rem.empty()) {
            mpq_class c = rem.back() / b.back();
            size_t sh = rem.size() - b.size();
            quo[sh] += c;
            for (size_t j = 0; j < b.size(); ++j) rem[sh + j] -= c * b[j];
            rem = norm(std::move(rem));
        }
        return std::pair<QP, QP>(norm(std::move(quo)), std::move(rem));
    };
    QP r0 = f.phi, r1 = norm(QP(cy_.begin(), cy_.end()));
    QP s0 = {}, s1 = {mpq_class(1)};
    while (true) {
        auto [qq, rem] = divmod(r0, r1);
        if (rem.empty()) {
            mpq_class lead = r1.back();
            std::vector<mpq_class> out(s1.size());
            for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / lead;
            Scalar res = zero(mode_);
            res.reduce_cyclo(std::move(out));
            return res;
        }
        QP s2 = submul(s0, qq, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

const ZPoly& Scalar::num() const {
    if (mode_.kind() != FieldMode::Kind::QField) throw ModeMismatch("num(): not QField");
    return num_;
}
const ZPoly& Scalar::den() const {
    if (mode_.kind() != FieldMode::Kind::QField) throw ModeMismatch("den(): not QField");
    return den_;
}

const std::vector<mpq_class>& Scalar::cyclo_coeffs() const {
    if (mode_.kind() != FieldMode::Kind::Cyclotomic)
        throw ModeMismatch("cyclo_coeffs(): not cyclotomic");
    return cy_;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw SyntaxError("scalar parse error at position " + std::to_string(pos) + ": " + what);
    }
    mpz_class parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(std::string(s.substr(start, pos - start)));
    }
    mpz_class parse_int() {
        skip_ws();
        bool negv = accept('-');
        mpz_class v = parse_uint();
        return negv ? mpz_class(-v) : v;
    }
    long parse_int_long() {
        mpz_class v = parse_int();
        if (!v.fits_slong_p()) fail("exponent out of range");
        return v.get_si();
    }

    // term ::= coeff ('*' 'q' ('^' int)?)? | 'q' ('^' int)?
    Scalar parse_term(const FieldMode& m) {
        skip_ws();
        mpq_class coeff(1);
        bool have_coeff = false;
        if (peek() != 'q') {
            mpz_class numv = parse_int();
            mpz_class denv = 1;
            if (accept('/')) denv = parse_uint();
            if (denv == 0) fail("zero denominator in coefficient");
            coeff = mpq_class(numv, denv);
            coeff.canonicalize();
            have_coeff = true;
        }
        int expo = 0;
        bool have_q = false;
        if (have_coeff) {
            size_t save = pos;
            if (accept('*')) {
                if (accept('q')) {
                    have_q = true;
                } else {
                    pos = save; // '*' belongs to something else: error later
                    fail("expected q after '*'");
                }
            }
        } else {
            if (!accept('q')) fail("expected coefficient or q");
            have_q = true;
        }
        if (have_q) {
            expo = 1;
            if (accept('^')) expo = static_cast<int>(parse_int_long());
        }
        Scalar t = Scalar::rational(coeff, m);
        if (have_q && expo != 0) t = t * Scalar::q_power(expo, m);
        return t;
    }

    // sum ::= term (('+'|'-') term)*
    Scalar parse_sum(const FieldMode& m) {
        Scalar acc = parse_term(m);
        while (true) {
            skip_ws();
            if (accept('+')) {
                acc = acc + parse_term(m);
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                acc = acc - parse_term(m);
            } else {
                break;
            }
        }
        return acc;
    }

    Scalar parse_scalar(const FieldMode& m) {
        skip_ws();
        if (peek() == '(') {
            // '(' sum ')' ['/' '(' sum ')']  -- general field element
            accept('(');
            Scalar numpart = parse_sum(m);
            if (!accept(')')) fail("expected ')'");
            if (!accept('/')) return numpart;
            if (!accept('(')) fail("expected '('");
            Scalar denpart = parse_sum(m);
            if (!accept(')')) fail("expected ')'");
            if (denpart.is_zero()) throw DivisionByZero("zero denominator in scalar literal");
            return numpart / denpart;
        }
        return parse_sum(m);
    }
};

std::string rat_str(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// print a list of (exponent, coefficient) with coefficients nonzero,
// sorted by exponent descending
std::string terms_str(const std::map<int, mpq_class, std::greater<int>>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpq_class a = c;
        if (first) {
            if (a < 0 && e != 0 && a == -1) {
                os << "-1";
                a = 1;
                os << "*q";
                if (e != 1) os << "^" << e;
                first = false;
                continue;
            }
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        if (e == 0) {
            os << rat_str(first ? a : a);
        } else if (a == 1) {
            os << "q";
            if (e != 1) os << "^" << e;
        } else {
            os << rat_str(a) << "*q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string zpoly_str(const ZPoly& p) {
    std::map<int, mpq_class, std::greater<int>> terms;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) terms[static_cast<int>(i)] = mpq_class(p[i]);
    return terms_str(terms);
}

} // namespace

Scalar Scalar::parse(std::string_view text, const FieldMode& m) {
    Parser p{text};
    Scalar v = p.parse_scalar(m);
    if (!p.eof())
        throw SyntaxError("scalar parse error at position " + std::to_string(p.pos) +
                          ": trailing input");
    return v;
}

std::string Scalar::str() const {
    if (mode_.kind() == FieldMode::Kind::Cyclotomic) {
        std::map<int, mpq_class, std::greater<int>> terms;
        for (size_t i = 0; i < cy_.size(); ++i)
            if (cy_[i] != 0) terms[static_cast<int>(i)] = cy_[i];
        return terms_str(terms);
    }
    if (is_zero()) return "0";
    // denominator a positive monomial c*q^k ? then emit a Laurent polynomial
    int k = -1;
    for (size_t i = 0; i < den_.size(); ++i) {
        if (den_[i] != 0) {
            if (k >= 0) {
                k = -2;
                break;
            }
            k = static_cast<int>(i);
        }
    }
    if (k >= 0) {
        mpz_class c = den_[k];
        std::map<int, mpq_class, std::greater<int>> terms;
        for (size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0) continue;
            mpq_class coeff(num_[i], c);
            coeff.canonicalize();
            terms[static_cast<int>(i) - k] = coeff;
        }
        return terms_str(terms);
    }
    return "(" + zpoly_str(num_) + ")/(" + zpoly_str(den_) + ")";
}

} // namespace braidkit
