#ifndef BRAIDKIT_BMATRIX_HPP
#define BRAIDKIT_BMATRIX_HPP

#include "braidkit/braided.hpp"
#include "braidkit/frt.hpp"
#include "braidkit/rmatrix.hpp"

namespace braidkit {

// Braided matrices B(R): n^2 generators u[i,j] with relations
// R21 u1 R12 u2 = u2 R21 u1 R12, the explicit four-R braiding, matrix
// coproduct and counit (no antipode).
struct BraidedMatrixAlgebra {
    RMatrix R, Rinv, Rtilde;
    BraidedBialgebra bialgebra;
    bool v_invertible = false; // v^i_j = Rtilde^i_a^a_j; needed for Psi^{-1} only

    int n() const { return R.n(); }
    int gen(int i, int j) const { return i * R.n() + j; }
};

// Construction self-verifies psi_descends (degree min(3, bound)) and the
// bialgebra axioms at degree 2.  Throws NotBiInvertible when R^{-1} or the
// second-inverse is missing; v-singularity is reported, not fatal.
BraidedMatrixAlgebra braided_matrix_algebra(const RMatrix& R, int degree_bound);

// the raw relation polynomials (before row reduction)
std::vector<NCPoly> bmatrix_relations(const RMatrix& R);

// the four-R generator braiding table
BraidOp bmatrix_braiding(const RMatrix& R);

// canonical representation rho(u^i_j)^k_l = Q^i_j^k_l, Q = R21 R12,
// extended multiplicatively over the word.
Mat canonical_rep(const BraidedMatrixAlgebra& BM, const Word& mono);
RMatrix q_matrix(const RMatrix& R); // Q = R21 R12

// Transmutation to A(R) at the printed degrees (<= 3); the result is
// normal-formed in A(R).  Throws DegreeUnsupported beyond length 3.
NCPoly transmute_monomial(const BraidedMatrixAlgebra& BM, const FRTBialgebra& A, const Word& mono);

struct ChiRelations {
    std::vector<std::string> gens;      // chi[i,j] names
    std::vector<NCPoly> relations;      // inhomogeneous quadratic chi-relations
    std::vector<NCPoly> coproduct;      // Delta chi = chi ox 1 + 1 ox chi + chi ox chi
    VerificationReport equivalence;     // linear equivalence with the displayed form
};
// substitute u = 1 + chi into the u-relations; verify linear equivalence with
// R21 chi1 R12 chi2 - chi2 R21 chi1 R12 = Q12 chi2 - chi2 Q12 and that
// substituting chi = u - 1 back recovers the u-relations.
ChiRelations chi_relations(const BraidedMatrixAlgebra& BM);

} // namespace braidkit

#endif
