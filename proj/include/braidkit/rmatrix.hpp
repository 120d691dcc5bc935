#ifndef BRAIDKIT_RMATRIX_HPP
#define BRAIDKIT_RMATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "braidkit/linalg.hpp"
#include "braidkit/report.hpp"
#include "braidkit/scalar.hpp"

namespace braidkit {

// R^i{}_j{}^k{}_l with the first index pair in the first M_n factor.  The
// canonical linearization has row i*n+k and column j*n+l.  Indices 0-based.
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(int n, const FieldMode& m);

    int n() const { return n_; }
    const FieldMode& mode() const { return mode_; }

    Scalar& at(int i, int j, int k, int l) { return e_[idx(i, j, k, l)]; }
    const Scalar& at(int i, int j, int k, int l) const { return e_[idx(i, j, k, l)]; }

    Mat linearized() const;                              // row (i,k), col (j,l)
    static RMatrix from_linearized(const Mat& M, int n); // inverse of linearized()

    RMatrix t2() const;  // transpose in the second factor: swap k <-> l
    RMatrix r21() const; // R21^i_j^k_l = R^k_l^i_j
    RMatrix scaled(const Scalar& c) const;
    RMatrix inverse() const; // of the linearized matrix
    bool operator==(const RMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

private:
    size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
    }
    int n_ = 0;
    FieldMode mode_;
    std::vector<Scalar> e_;
};

enum class RFamily { Identity, Permutation, GLq };
RFamily parse_family(const std::string& name); // throws UnknownFamily

// identity and permutation are exact by definition; glq runs its own QYBE,
// bi-invertibility and Hecke-root self-checks at construction.
RMatrix standard_r(RFamily family, int n, const FieldMode& m);

RMatrix permutation_r(int n, const FieldMode& m);

// Expands R12 R13 R23 and R23 R13 R12 in M_n^{x3} and compares entrywise.
VerificationReport qybe_check(const RMatrix& R);

// Second-inverse Rtilde = ((R^{t2})^{-1})^{t2}; throws NotDualizable.
RMatrix second_inverse(const RMatrix& R);

// v^i_j = Rtilde^i_a{}^a_j as an n x n matrix.
Mat v_matrix(const RMatrix& Rtilde);

// Mixed dual braidings (maps stored as n^2 x n^2 operator matrices, row =
// output basis pair, column = input pair):
//   psi_vec_vec: Psi(e_i ox e_j) = e_b ox e_a R^a_i^b_j
//   psi_co_co:   Psi(f^i ox f^j) = R^i_a^j_b f^b ox f^a
//   psi_vec_co:  Psi(e_i ox f^j) = Rtilde^a_i^j_b f^b ox e_a
//   psi_co_vec:  Psi(f^i ox e_j) = e_a ox f^b (R^-1)^i_b^a_j
struct DualBraidings {
    Mat psi_vec_vec, psi_co_co, psi_vec_co, psi_co_vec;
    VerificationReport report; // ev/coev pull-through (snake) checks
};
DualBraidings dual_braidings(const RMatrix& R);

// (PR)^{ab}_{cd} = R^b_c{}^a_d as an operator on V ox V (P the flip).
Mat pr_matrix(const RMatrix& R);

struct PRRoot {
    Scalar value;
    int multiplicity;
};
// Minimal polynomial of PR, factored into linear factors over the field.
// Roots sorted canonically.  Throws IrreducibleFactorError when a factor of
// degree > 1 has no root in the field (message carries the coefficients).
std::vector<PRRoot> pr_minimal_polynomial(const RMatrix& R);

struct RPrimePair {
    RMatrix r_rescaled;
    RMatrix r_prime;
};
// Rescale R by -1/lambda (lambda = the eigen_index-th canonical root) so the
// chosen minimal-polynomial factor becomes PR+1, then set
// PR' = 1 + alpha * prod_{j != chosen} (PR_rescaled - lambda_j').  The default
// alpha kills the constant term when the complementary product is linear in
// PR, else alpha = 1.  Throws SingularRPrime if R' is not invertible.
RPrimePair derive_rprime(const RMatrix& R, int eigen_index,
                         const std::optional<Scalar>& alpha = std::nullopt);

// Index of the Hecke root whose eigenspace has dimension n(n-1)/2 (the
// branch that reproduces the quantum plane for the glq family).
int hecke_branch_index(const RMatrix& R);

} // namespace braidkit

#endif
