#ifndef BRAIDKIT_PLANES_HPP
#define BRAIDKIT_PLANES_HPP

#include "braidkit/braided.hpp"
#include "braidkit/rmatrix.hpp"

namespace braidkit {

enum class PlaneKind { Covector, Vector };

// Braided (co)vector algebra V'(R') / V(R') with additive coproduct; the
// antipode -id is attached exactly when R21 R'12 = R'21 R12.
struct BraidedPlane {
    PlaneKind kind;
    RMatrix R, Rprime;
    BraidedBialgebra bialgebra;
    bool has_antipode = false;

    int n() const { return R.n(); }
};

// Verifies the three compatibility conditions
//   R12 R13 R'23 = R'23 R13 R12,  R23 R13 R'12 = R'12 R13 R23,
//   (PR+1)(PR'-1) = 0
// and refuses construction (RPrimeConditionFailed) otherwise.
BraidedPlane covector_algebra(const RMatrix& R, const RMatrix& Rprime, int degree_bound);
BraidedPlane vector_algebra(const RMatrix& R, const RMatrix& Rprime, int degree_bound);

// [m;R] = 1 + (PR)12 + (PR)12(PR)23 + ... on V^{ox m}
Mat braided_integer(const RMatrix& R, int m);

// d^i applied to a covector polynomial (normal-formed first):
// d^i x_{i1}..x_{im} = delta^i_{j1} x_{j2}..x_{jm} [m;R]^{j1..jm}_{i1..im}
NCPoly partial(const BraidedPlane& plane, int i, const NCPoly& p);

// braided Leibniz rule d^i(ab) = (d^i a) b + . Psi^{-1}(d^i ox a) b on all
// normal-word pairs with |a|+|b| <= degree, plus the operator identity that
// the d^i satisfy the V(R') relations.
VerificationReport leibniz_check(const BraidedPlane& plane, int degree);

} // namespace braidkit

#endif
