#ifndef BRAIDKIT_FRT_HPP
#define BRAIDKIT_FRT_HPP

#include "braidkit/braided.hpp"
#include "braidkit/ncalg.hpp"
#include "braidkit/rmatrix.hpp"

namespace braidkit {

// FRT bialgebra A(R): n^2 generators t[i,j] with relations R t1 t2 = t2 t1 R,
// matrix coproduct Delta t^i_j = sum_a t^i_a ox t^a_j, counit delta.
struct FRTBialgebra {
    RMatrix R;
    RMatrix Rinv;
    QuotientAlgebra algebra; // generators in lexicographic (i,j) order

    int n() const { return R.n(); }
    int gen(int i, int j) const { return i * R.n() + j; }
    // coproduct into the ordinary (flip) tensor square of the free algebra
    NCPoly coproduct_word(const Word& w) const;
};

// Constructed and self-verified: relations row-reduced, coproduct an algebra
// map into the flip tensor square.
FRTBialgebra frt_algebra(const RMatrix& R, int degree_bound);

// the raw relation polynomials R t1 t2 - t2 t1 R (before row reduction)
std::vector<NCPoly> frt_relations(const RMatrix& R);

enum class RepSign { Plus, Minus };
// multiplicative extension of rho+(t^i_j)^k_l = R^i_j^k_l,
// rho-(t^i_j)^k_l = (R^-1)^k_l{}^i_j
Mat fundamental_rep(const FRTBialgebra& A, RepSign sign, const Word& mono);

// Dual quasitriangular pairing evaluated two ways: the Z_R partition-function
// grid, and the bicharacter recursion (independent oracle).
enum class PairMode { Grid, Recursive };

class DQTPairing {
public:
    explicit DQTPairing(const FRTBialgebra& A) : A_(&A) {}

    // <R>(a ox b) for words over the t alphabet
    Scalar pair(const Word& a, const Word& b, PairMode mode = PairMode::Grid) const;
    // <R^-1>(a ox b), reversed-index grid over R^-1
    Scalar inverse_pair(const Word& a, const Word& b) const;
    Scalar pair_poly(const NCPoly& a, const NCPoly& b, PairMode mode = PairMode::Grid) const;

    const FRTBialgebra& frt() const { return *A_; }

private:
    const FRTBialgebra* A_;
};

// (i) grid/recursive agreement on all monomial pairs up to the degree;
// (ii) the convolution inverse identity; (iii) the almost-commutativity
// identity as an NCPoly identity modulo the A(R) relations; (iv) the pairing
// vanishes when either argument is a relation.
VerificationReport dqt_verify(const DQTPairing& P, int degree);

} // namespace braidkit

#endif
