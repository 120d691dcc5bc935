#include "braidkit/ncalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace braidkit {

bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

NCPoly NCPoly::monomial(const Scalar& c, Word w) {
    NCPoly p(c.mode());
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

void NCPoly::add_term(const Scalar& c, const Word& w) {
    if (c.is_zero()) return;
    if (mode_ != c.mode() && terms_.empty()) mode_ = c.mode();
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    if (r.terms_.empty()) r.mode_ = o.mode_;
    for (const auto& [w, c] : o.terms_) r.add_term(c, w);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r(mode_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r(mode_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(c1 * c2, w);
        }
    return r;
}

bool NCPoly::operator==(const NCPoly& o) const { return terms_ == o.terms_; }

const Word& NCPoly::lead_word() const {
    if (terms_.empty()) throw InvalidInput("lead_word of zero polynomial");
    return terms_.rbegin()->first;
}
const Scalar& NCPoly::lead_coeff() const {
    if (terms_.empty()) throw InvalidInput("lead_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<std::pair<Word, Scalar>> NCPoly::terms() const {
    std::vector<std::pair<Word, Scalar>> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(it->first, it->second);
    return out;
}

std::string NCPoly::str(const std::vector<std::string>& gens) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        Scalar c = it->second;
        std::string cs = c.str();
        bool negated = false;
        if (!first && !cs.empty() && cs[0] == '-') {
            // try to print "- term" with the coefficient negated
            Scalar nc = -c;
            std::string ns = nc.str();
            if (ns[0] != '-') {
                os << " - ";
                cs = ns;
                c = nc;
                negated = true;
            }
        }
        if (!first && !negated) os << " + ";
        bool needs_parens = cs.find(' ') != std::string::npos || cs.find(")/(") != std::string::npos;
        bool coeff_is_one = c.is_one();
        if (w.empty()) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (!coeff_is_one) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << "*";
                os << gens[w[i]];
            }
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------- rewriting

namespace {

// first position where some rule lhs occurs in w; (pos, rule) or (-1, -1)
std::pair<int, int> find_redex(const Word& w, const std::vector<Rule>& rules) {
    for (int pos = 0; pos <= static_cast<int>(w.size()); ++pos) {
        for (size_t r = 0; r < rules.size(); ++r) {
            const Word& l = rules[r].lhs;
            if (l.empty() || pos + l.size() > w.size()) continue;
            if (std::equal(l.begin(), l.end(), w.begin() + pos))
                return {pos, static_cast<int>(r)};
        }
    }
    return {-1, -1};
}

NCPoly reduce_full(NCPoly p, const std::vector<Rule>& rules) {
    // repeatedly rewrite the deglex-greatest reducible word
    NCPoly out(p.mode());
    while (!p.is_zero()) {
        // work on the leading term first to guarantee termination
        Word w = p.lead_word();
        Scalar c = p.lead_coeff();
        auto [pos, ri] = find_redex(w, rules);
        if (pos < 0) {
            out.add_term(c, w);
            p.add_term(-c, w);
            continue;
        }
        p.add_term(-c, w);
        const Rule& rule = rules[ri];
        Word left(w.begin(), w.begin() + pos);
        Word right(w.begin() + pos + rule.lhs.size(), w.end());
        rule.rhs.for_terms([&](const Word& rw, const Scalar& rc) {
            Word nw = left;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), right.begin(), right.end());
            p.add_term(c * rc, nw);
        });
    }
    return out;
}

struct Ambiguity {
    // both words equal; overlap ambiguity u v w with lhs1 = u v, lhs2 = v w,
    // or containment lhs2 = u lhs1 w
    Word word;
    int r1, pos1; // rule r1 applies at pos1
    int r2, pos2;
};

std::vector<Ambiguity> ambiguities_for(const std::vector<Rule>& rules, int degree_cap) {
    std::vector<Ambiguity> out;
    for (size_t i = 0; i < rules.size(); ++i) {
        for (size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            // overlap: suffix of a = prefix of b, overlap length 1..min-1
            for (size_t ov = 1; ov < std::min(a.size(), b.size()); ++ov) {
                if (!std::equal(a.end() - ov, a.end(), b.begin())) continue;
                Word w = a;
                w.insert(w.end(), b.begin() + ov, b.end());
                if (degree_cap > 0 && static_cast<int>(w.size()) > degree_cap) continue;
                out.push_back(
                    {w, static_cast<int>(i), 0, static_cast<int>(j), static_cast<int>(a.size() - ov)});
            }
            // containment: b properly inside a
            if (i != j && b.size() < a.size()) {
                for (size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                    if (std::equal(b.begin(), b.end(), a.begin() + pos)) {
                        if (degree_cap > 0 && static_cast<int>(a.size()) > degree_cap) continue;
                        out.push_back({a, static_cast<int>(i), 0, static_cast<int>(j),
                                       static_cast<int>(pos)});
                    }
                }
            }
        }
    }
    return out;
}

NCPoly apply_rule_at(const Word& w, const Rule& rule, int pos, const FieldMode& m) {
    NCPoly r(m);
    Word left(w.begin(), w.begin() + pos);
    Word right(w.begin() + pos + rule.lhs.size(), w.end());
    rule.rhs.for_terms([&](const Word& rw, const Scalar& rc) {
        Word nw = left;
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), right.begin(), right.end());
        r.add_term(rc, nw);
    });
    return r;
}

bool max_ambiguity_degree_within(const std::vector<Rule>& rules, int bound) {
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = 0; j < rules.size(); ++j) {
            const Word& a = rules[i].lhs;
            const Word& b = rules[j].lhs;
            for (size_t ov = 1; ov < std::min(a.size(), b.size()); ++ov) {
                if (!std::equal(a.end() - ov, a.end(), b.begin())) continue;
                if (static_cast<int>(a.size() + b.size() - ov) > bound) return false;
            }
        }
    return true;
}

} // namespace

NCPoly QuotientAlgebra::normal_form(const NCPoly& p) const {
    if (p.degree() > degree_bound_)
        throw DegreeBoundExceeded("normal_form at degree " + std::to_string(p.degree()) +
                                  " exceeds completed bound " + std::to_string(degree_bound_));
    return reduce_full(p, rules_);
}

bool QuotientAlgebra::is_normal_word(const Word& w) const {
    return find_redex(w, rules_).first < 0;
}

std::vector<Word> QuotientAlgebra::normal_words(int degree) const {
    std::vector<Word> out;
    Word w(degree, 0);
    const int n = n_gens();
    if (degree == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        if (is_normal_word(w)) out.push_back(w);
        int i = degree - 1;
        while (i >= 0 && w[i] == n - 1) {
            w[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

long QuotientAlgebra::count_normal_words(int degree) const {
    return static_cast<long>(normal_words(degree).size());
}

QuotientAlgebra quotient_from_relations(std::vector<std::string> alphabet,
                                        const std::vector<NCPoly>& relations, int degree_bound,
                                        const FieldMode& m) {
    QuotientAlgebra Q;
    Q.gens_ = std::move(alphabet);
    Q.degree_bound_ = degree_bound;
    Q.mode_ = m;
    for (const auto& r : relations) {
        if (r.degree() > degree_bound)
            throw InvalidInput("relation degree exceeds degree_bound");
    }

    // linear row reduction of the relation list over the word basis
    std::vector<NCPoly> rows;
    auto reduce_row = [&](NCPoly p) {
        bool changed = true;
        while (changed && !p.is_zero()) {
            changed = false;
            for (const auto& row : rows) {
                if (p.is_zero()) break;
                // eliminate row's lead word from p if present
                for (const auto& [w, c] : p.terms()) {
                    if (w == row.lead_word()) {
                        p = p - row.scaled(c / row.lead_coeff());
                        changed = true;
                        break;
                    }
                }
            }
        }
        return p;
    };
    std::deque<NCPoly> pending(relations.begin(), relations.end());
    while (!pending.empty()) {
        NCPoly p = reduce_row(pending.front());
        pending.pop_front();
        if (p.is_zero()) continue;
        if (p.lead_word().empty())
            throw InconsistentRelations("relations force 1 = 0 (trivial algebra)");
        // back-substitute into existing rows
        for (auto& row : rows) {
            for (const auto& [w, c] : row.terms()) {
                if (w == p.lead_word()) {
                    row = row - p.scaled(c / p.lead_coeff());
                    break;
                }
            }
        }
        rows.push_back(p.scaled(p.lead_coeff().inv()));
    }

    auto orient = [&](const NCPoly& p) {
        Rule r;
        r.lhs = p.lead_word();
        NCPoly rest = p.scaled(p.lead_coeff().inv());
        rest.add_term(Scalar::integer(-1, m), r.lhs);
        r.rhs = -rest;
        return r;
    };
    for (const auto& row : rows) Q.rules_.push_back(orient(row));

    // bounded overlap completion
    bool complete = true;
    bool progress = true;
    while (progress) {
        progress = false;
        auto ambs = ambiguities_for(Q.rules_, 0);
        for (const auto& amb : ambs) {
            if (static_cast<int>(amb.word.size()) > degree_bound) {
                complete = false;
                continue;
            }
            NCPoly red1 = apply_rule_at(amb.word, Q.rules_[amb.r1], amb.pos1, m);
            NCPoly red2 = apply_rule_at(amb.word, Q.rules_[amb.r2], amb.pos2, m);
            NCPoly diff = reduce_full(red1 - red2, Q.rules_);
            if (diff.is_zero()) continue;
            if (diff.lead_word().empty())
                throw InconsistentRelations("completion derived 1 = 0 (trivial algebra)");
            Q.rules_.push_back(orient(diff));
            // inter-reduce: any rule whose lhs is now reducible gets recycled
            std::vector<Rule> kept;
            std::vector<NCPoly> recycle;
            for (size_t i = 0; i + 1 < Q.rules_.size(); ++i) {
                const Rule& rr = Q.rules_[i];
                std::vector<Rule> others;
                for (size_t j = 0; j < Q.rules_.size(); ++j)
                    if (j != i) others.push_back(Q.rules_[j]);
                if (find_redex(rr.lhs, others).first >= 0) {
                    NCPoly full = NCPoly::monomial(Scalar::one(m), rr.lhs) - rr.rhs;
                    recycle.push_back(full);
                } else {
                    Rule nr = rr;
                    nr.rhs = reduce_full(nr.rhs, Q.rules_);
                    kept.push_back(nr);
                }
            }
            Rule last = Q.rules_.back();
            last.rhs = reduce_full(last.rhs, kept.empty() ? Q.rules_ : kept);
            kept.push_back(last);
            Q.rules_ = std::move(kept);
            for (const auto& f : recycle) {
                NCPoly red = reduce_full(f, Q.rules_);
                if (!red.is_zero()) {
                    if (red.lead_word().empty())
                        throw InconsistentRelations("completion derived 1 = 0");
                    Q.rules_.push_back(orient(red));
                }
            }
            progress = true;
            break; // restart ambiguity scan with the new rule set
        }
    }
    if (complete) complete = max_ambiguity_degree_within(Q.rules_, degree_bound);
    Q.status_ = complete ? CompletionStatus::Complete : CompletionStatus::Bounded;
    std::sort(Q.rules_.begin(), Q.rules_.end(),
              [](const Rule& a, const Rule& b) { return deglex_less(a.lhs, b.lhs); });
    return Q;
}

VerificationReport completion_check(const QuotientAlgebra& Q, int degree) {
    VerificationReport rep;
    if (degree > Q.degree_bound()) {
        rep.add("completion", false, "requested degree exceeds the completed bound");
        return rep;
    }
    auto ambs = ambiguities_for(Q.rules(), degree);
    for (const auto& amb : ambs) {
        NCPoly r1 = apply_rule_at(amb.word, Q.rules()[amb.r1], amb.pos1, Q.mode());
        NCPoly r2 = apply_rule_at(amb.word, Q.rules()[amb.r2], amb.pos2, Q.mode());
        NCPoly diff = Q.normal_form(r1 - r2);
        if (!diff.is_zero()) {
            Word w = amb.word;
            std::ostringstream os;
            os << "overlap ";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) os << "*";
                os << Q.gens()[w[i]];
            }
            os << " residual " << diff.str(Q.gens());
            rep.add("completion", false, os.str());
            return rep;
        }
    }
    rep.add("completion", true);
    return rep;
}

// ------------------------------------------------------------- parsing

NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& gens,
                    const FieldMode& m) {
    NCPoly out(m);
    size_t pos = 0;
    auto skip = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw SyntaxError("polynomial parse error at position " + std::to_string(pos) + ": " + msg);
    };
    int sign = 1;
    skip();
    bool expect_term = true;
    while (pos < text.size()) {
        skip();
        if (pos >= text.size()) break;
        if (!expect_term) {
            if (text[pos] == '+') {
                sign = 1;
                ++pos;
                expect_term = true;
                continue;
            }
            if (text[pos] == '-') {
                sign = -1;
                ++pos;
                expect_term = true;
                continue;
            }
            fail("expected '+' or '-'");
        }
        // term: factors joined by '*'
        Scalar coeff = Scalar::integer(sign, m);
        Word w;
        bool more = true;
        while (more) {
            skip();
            if (pos >= text.size()) fail("unexpected end of term");
            if (text[pos] == '(') {
                // parenthesized scalar (may itself be "(..)/(..)")
                int depth = 0;
                size_t start = pos;
                size_t end = pos;
                while (end < text.size()) {
                    if (text[end] == '(') ++depth;
                    if (text[end] == ')') {
                        --depth;
                        if (depth == 0) {
                            // check for "/(" continuation
                            size_t nxt = end + 1;
                            while (nxt < text.size() &&
                                   std::isspace(static_cast<unsigned char>(text[nxt])))
                                ++nxt;
                            if (nxt + 1 < text.size() && text[nxt] == '/' &&
                                text[nxt + 1] == '(') {
                                end = nxt + 1;
                                continue;
                            }
                            break;
                        }
                    }
                    ++end;
                }
                if (depth != 0 || end >= text.size()) fail("unbalanced parenthesis");
                coeff *= Scalar::parse(text.substr(start, end - start + 1), m);
                pos = end + 1;
            } else if (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == 'q' ||
                       (text[pos] == '-' && w.empty())) {
                // a bare scalar term (single-term literal): read until '*', '+', '-' or end;
                // 'q^-2' contains '-' after '^'
                size_t start = pos;
                bool after_caret = false;
                while (pos < text.size()) {
                    char c = text[pos];
                    if (c == '^') {
                        after_caret = true;
                        ++pos;
                        continue;
                    }
                    if (c == '*' || c == '+' || std::isspace(static_cast<unsigned char>(c)))
                        break;
                    if (c == '-' && !after_caret && pos != start) break;
                    after_caret = false;
                    ++pos;
                }
                std::string lit = text.substr(start, pos - start);
                // generator names may start with a letter other than q or even be "q3";
                // resolve ambiguity: exact generator-name match wins
                auto git = std::find(gens.begin(), gens.end(), lit);
                if (git != gens.end()) {
                    w.push_back(static_cast<int>(git - gens.begin()));
                } else {
                    coeff *= Scalar::parse(lit, m);
                }
            } else {
                // generator name: letters, digits, '[', ']', ',', '_'
                size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '[' ||
                        text[pos] == ']' || text[pos] == ',' || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                if (name.empty()) fail("expected factor");
                auto git = std::find(gens.begin(), gens.end(), name);
                if (git == gens.end()) fail("unknown generator '" + name + "'");
                w.push_back(static_cast<int>(git - gens.begin()));
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                more = true;
            } else {
                more = false;
            }
        }
        out.add_term(coeff, w);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) fail("trailing operator");
    return out;
}

} // namespace braidkit
