#ifndef BRAIDKIT_BRAIDED_HPP
#define BRAIDKIT_BRAIDED_HPP

#include <optional>

#include "braidkit/linalg.hpp"
#include "braidkit/ncalg.hpp"
#include "braidkit/report.hpp"
#include "braidkit/rmatrix.hpp"

namespace braidkit {

// Generator-level braiding Psi(c ox b) = sum coeff (b' ox c') for c a C-letter
// and b a B-letter.  Every term carries exactly one B-letter and one C-letter,
// so word crossings terminate.  When both alphabets coincide the linearization
// must satisfy the matrix QYBE (checked at construction) or word extension
// would depend on the crossing order.
class BraidOp {
public:
    struct Entry {
        Scalar coeff;
        int b_out, c_out;
    };

    static BraidOp from_table(int nc, int nb, std::vector<std::vector<Entry>> table,
                              const FieldMode& m, bool check_qybe = true);
    static BraidOp flip(int n, const FieldMode& m);
    // covector braiding Psi(x_i ox x_j) = R^a_i^b_j x_b ox x_a
    static BraidOp covector(const RMatrix& R);
    // vector braiding Psi(v^i ox v^j) = R^i_a^j_b v^b ox v^a
    static BraidOp vector_side(const RMatrix& R);

    int nc() const { return nc_; }
    int nb() const { return nb_; }
    const FieldMode& mode() const { return mode_; }
    const std::vector<Entry>& entry(int c, int b) const { return table_[c * nb_ + b]; }

    // linearization: row b_out * nc + c_out, column c * nb + b
    Mat matrix() const;
    BraidOp inverse() const; // table of Psi^{-1} (crossing the other way)

private:
    int nc_ = 0, nb_ = 0;
    FieldMode mode_;
    std::vector<std::vector<Entry>> table_;
};

// Extend the crossing to whole words by the hexagon identities.  Input: wa
// over the C alphabet, wb over the B alphabet.  The result lives over the
// union alphabet with B letters 0..nb-1 followed by C letters at offset nb,
// every term fully sorted (all B letters before all C letters).
// strategy 0 crosses the leftmost adjacency first, 1 the rightmost; the two
// agree because of the BraidOp QYBE invariant.
NCPoly psi_extend(const BraidOp& psi, const Word& wa, const Word& wb, int strategy = 0);

// B ox_ C on the disjoint-union alphabet (C generators primed) with B's
// rules, C's rules, and the cross rules c'b -> Psi(c ox b).
QuotientAlgebra braided_tensor_algebra(const QuotientAlgebra& B, const QuotientAlgebra& C,
                                       const BraidOp& psi);

// m-fold braided power of B with the same self-braiding between all copies.
QuotientAlgebra braided_power(const QuotientAlgebra& B, const BraidOp& psi, int copies,
                              int degree_bound);

// For every relation r of B and generator g up to the degree, the free
// crossings Psi(r ox g) and Psi(g ox r) must vanish after componentwise
// normal forms (the extension is consistent with the relations).
VerificationReport psi_descends(const QuotientAlgebra& B, const BraidOp& psi, int degree);

struct BraidedBialgebra {
    QuotientAlgebra algebra;
    BraidOp psi;                               // self-braiding on generators
    std::vector<NCPoly> coproduct;             // per generator, over the doubled alphabet
    std::vector<Scalar> counit;                // per generator
    std::optional<std::vector<NCPoly>> antipode; // per generator
    QuotientAlgebra square;                    // cached B ox_ B

    // algebra map into the braided square, normal-formed there
    NCPoly delta_word(const Word& w) const;
    NCPoly delta_poly(const NCPoly& p) const;
    // multiplicative extension of the counit
    Scalar counit_word(const Word& w) const;
    Scalar counit_poly(const NCPoly& p) const;
    // antipode extended to words by S(b c) = . Psi(S b ox S c), normal-formed
    NCPoly antipode_word(const Word& w) const;
    NCPoly antipode_poly(const NCPoly& p) const;
    // multiplication map applied to an element of the square
    NCPoly multiply_square(const NCPoly& sq) const;
};

BraidedBialgebra make_braided_bialgebra(QuotientAlgebra algebra, BraidOp psi,
                                        std::vector<NCPoly> coproduct, std::vector<Scalar> counit,
                                        std::optional<std::vector<NCPoly>> antipode);

// (i) Delta(r) = 0 in B ox_ B for every relation; (ii) coassociativity and
// counit laws on generators; (iii) antipode laws on normal words up to the
// degree plus braided antimultiplicativity consistency.
VerificationReport bialgebra_axiom_check(const BraidedBialgebra& BB, int degree);

// braided adjoint action Ad_a(b) = .^2 (id ox Psi)(id ox S ox id)(Delta ox id)
NCPoly braided_adjoint(const BraidedBialgebra& BB, const NCPoly& a, const NCPoly& b, int degree);

} // namespace braidkit

#endif
