#ifndef BRAIDKIT_NCALG_HPP
#define BRAIDKIT_NCALG_HPP

#include <map>
#include <string>
#include <vector>

#include "braidkit/report.hpp"
#include "braidkit/scalar.hpp"

namespace braidkit {

// Word in the free monoid over a declared alphabet; empty word is the unit.
using Word = std::vector<int>;

// Degree-lexicographic order, generator order = declaration order.
bool deglex_less(const Word& a, const Word& b);

// Noncommutative polynomial: distinct words with nonzero coefficients, kept
// in deglex-descending order.  The zero polynomial has no terms.
class NCPoly {
public:
    NCPoly() = default;
    explicit NCPoly(const FieldMode& m) : mode_(m) {}
    static NCPoly monomial(const Scalar& c, Word w);
    static NCPoly unit(const FieldMode& m) { return monomial(Scalar::one(m), {}); }

    const FieldMode& mode() const { return mode_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for zero
    size_t term_count() const { return terms_.size(); }

    void add_term(const Scalar& c, const Word& w);
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly scaled(const Scalar& c) const;
    bool operator==(const NCPoly& o) const;

    // leading (deglex-greatest) term
    const Word& lead_word() const;
    const Scalar& lead_coeff() const;

    // iteration in deglex-descending order
    struct TermRef {
        const Word& word;
        const Scalar& coeff;
    };
    template <typename F>
    void for_terms(F&& f) const {
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) f(it->first, it->second);
    }
    std::vector<std::pair<Word, Scalar>> terms() const;

    std::string str(const std::vector<std::string>& gens) const;

private:
    struct DeglexLess {
        bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
    };
    std::map<Word, Scalar, DeglexLess> terms_; // iterated in reverse for descending
    FieldMode mode_;
};

enum class CompletionStatus { Complete, Bounded };

struct Rule {
    Word lhs;
    NCPoly rhs; // every word deglex-smaller than lhs, irreducible by the rule set
};

// Finitely presented algebra with oriented rewrite rules, completed by
// overlap resolution up to degree_bound.
class QuotientAlgebra {
public:
    QuotientAlgebra() = default;

    const std::vector<std::string>& gens() const { return gens_; }
    int n_gens() const { return static_cast<int>(gens_.size()); }
    const std::vector<Rule>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    CompletionStatus status() const { return status_; }
    const FieldMode& mode() const { return mode_; }

    NCPoly normal_form(const NCPoly& p) const; // throws DegreeBoundExceeded
    bool is_normal_word(const Word& w) const;
    std::vector<Word> normal_words(int degree) const; // all normal words of exact degree
    long count_normal_words(int degree) const;

    friend QuotientAlgebra quotient_from_relations(std::vector<std::string> alphabet,
                                                   const std::vector<NCPoly>& relations,
                                                   int degree_bound, const FieldMode& m);

private:
    std::vector<std::string> gens_;
    std::vector<Rule> rules_;
    int degree_bound_ = 0;
    CompletionStatus status_ = CompletionStatus::Complete;
    FieldMode mode_;
};

// Row-reduces the relations over the word basis, orients each echelon row by
// its deglex-greatest word, then runs bounded Buchberger-style overlap
// completion.  Throws InconsistentRelations when 1 reduces to 0.
QuotientAlgebra quotient_from_relations(std::vector<std::string> alphabet,
                                        const std::vector<NCPoly>& relations, int degree_bound,
                                        const FieldMode& m);

// Re-checks every overlap ambiguity of leading words up to the degree.
VerificationReport completion_check(const QuotientAlgebra& Q, int degree);

// Parse a polynomial literal over named generators: scalar literals times
// '*'-joined generator names, '+'/'-' separated; parenthesized scalar sums
// allowed as coefficients.
NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& gens,
                    const FieldMode& m);

} // namespace braidkit

#endif
