#ifndef BRAIDKIT_SCALAR_HPP
#define BRAIDKIT_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "braidkit/errors.hpp"

namespace braidkit {

// Integer polynomials in q, coefficients ascending, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

ZPoly zp_normalize(ZPoly p);
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
// Exact division; throws InvalidInput if the remainder is nonzero.
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b);
ZPoly zp_gcd(ZPoly a, ZPoly b);
inline bool zp_is_zero(const ZPoly& p) { return p.empty(); }
inline int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// The n-th cyclotomic polynomial, monic over Z, via
// Phi_n = (q^n - 1) / prod_{d|n, d<n} Phi_d.
ZPoly cyclotomic_polynomial(int n);

struct CycloField {
    int n = 0;                     // q is a primitive n-th root of unity
    std::vector<mpq_class> phi;    // Phi_n, monic, ascending
    int deg = 0;                   // phi(n) = deg Phi_n
};

class FieldMode {
public:
    enum class Kind { QField, Cyclotomic };

    static FieldMode qfield();
    static FieldMode cyclotomic(int n);
    // "qfield" or "cyclotomic:<n>"
    static FieldMode parse(std::string_view text);

    Kind kind() const { return kind_; }
    int cyclo_n() const { return field_ ? field_->n : 0; }
    const CycloField& cyclo() const;
    bool operator==(const FieldMode& o) const;
    bool operator!=(const FieldMode& o) const { return !(*this == o); }
    std::string str() const;

private:
    Kind kind_ = Kind::QField;
    std::shared_ptr<const CycloField> field_;
};

// Exact coefficient field element.  QField mode holds a reduced fraction of
// integer polynomials in q; Cyclotomic(n) holds a rational polynomial of
// degree < phi(n) reduced mod Phi_n.  Values are immutable and canonical:
// equality of representations is equality in the field.
class Scalar {
public:
    Scalar() = default; // zero in QField mode

    static Scalar zero(const FieldMode& m);
    static Scalar one(const FieldMode& m);
    static Scalar integer(long v, const FieldMode& m);
    static Scalar rational(const mpq_class& v, const FieldMode& m);
    static Scalar q_power(int e, const FieldMode& m);
    static Scalar parse(std::string_view text, const FieldMode& m);

    const FieldMode& mode() const { return mode_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // Total order on canonical forms; used only for deterministic output.
    bool operator<(const Scalar& o) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inv() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Canonical text: terms by q-exponent descending, coefficients in lowest
    // terms, zero prints as "0".  Elements with a non-monomial denominator
    // print as "(num)/(den)".
    std::string str() const;

    // QField access (num, den); throws ModeMismatch in cyclotomic mode.
    const ZPoly& num() const;
    const ZPoly& den() const;
    // Cyclotomic coefficient access; throws ModeMismatch in QField mode.
    const std::vector<mpq_class>& cyclo_coeffs() const;

private:
    FieldMode mode_;
    // QField payload
    ZPoly num_ = {};        // zero is {} / {1}
    ZPoly den_ = {mpz_class(1)};
    // Cyclotomic payload: coefficients 0..deg-1
    std::vector<mpq_class> cy_;

    void normalize_qfield();
    void reduce_cyclo(std::vector<mpq_class> raw);
    static void check_same_mode(const Scalar& a, const Scalar& b);
};

} // namespace braidkit

#endif
