#ifndef BRAIDKIT_HOPF_HPP
#define BRAIDKIT_HOPF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/linalg.hpp"
#include "braidkit/report.hpp"
#include "braidkit/scalar.hpp"

namespace braidkit {

using Vec = std::vector<Scalar>;
// sparse element of H^{ox k}: basis multi-index -> coefficient
using SparseTensor = std::map<std::vector<int>, Scalar>;

void st_add(SparseTensor& t, const std::vector<int>& key, const Scalar& c);
SparseTensor st_clean(SparseTensor t);

// Finite-dimensional Hopf algebra (or bialgebra, when the antipode is absent)
// by structure constants.  product[(a,b),c]: e_a e_b = sum_c ... e_c;
// coprod[a,(b,c)]: Delta e_a = sum e_b ox e_c; antipode[out,in].
struct FinDimHopf {
    int d = 0;
    std::vector<std::string> basis;
    FieldMode mode;
    std::vector<Scalar> product; // d*d*d, index (a*d+b)*d+c
    Vec unit;                    // d
    std::vector<Scalar> coprod;  // d*d*d, index (a*d+b)*d+c
    Vec counit;                  // d
    std::optional<std::vector<Scalar>> antipode; // d*d, index out*d+in

    const Scalar& prod_c(int a, int b, int c) const { return product[(a * d + b) * d + c]; }
    const Scalar& cop_c(int a, int b, int c) const { return coprod[(a * d + b) * d + c]; }
    Scalar s_mat(int out, int in) const { return (*antipode)[out * d + in]; }

    Vec basis_vec(int a) const;
    Vec mulv(const Vec& x, const Vec& y) const;
    Vec apply_antipode(const Vec& x) const;
    Vec apply_antipode_sq(const Vec& x) const;
    // Delta e_a as a list of ((b,c), coeff)
    std::vector<std::pair<std::pair<int, int>, Scalar>> delta(int a) const;
    // Delta^{legs-1} e_a
    SparseTensor delta_pow(int a, int legs) const;
    // multiply two elements of H^{ox legs} componentwise
    SparseTensor tensor_mul(const SparseTensor& x, const SparseTensor& y, int legs) const;
    SparseTensor unit_tensor(int legs) const; // 1 ox ... ox 1
    SparseTensor apply_delta_leg(const SparseTensor& x, int leg) const;
    SparseTensor apply_antipode_leg(const SparseTensor& x, int leg) const;
    bool is_commutative() const;
    bool is_cocommutative() const;
};

VerificationReport hopf_verify(const FinDimHopf& H);

// convolution inverse of the identity map, solved as a linear system;
// nullopt when no antipode exists
std::optional<std::vector<Scalar>> solve_antipode(const FinDimHopf& H);

// same solver on raw tables, verifying only the two antipode laws (usable for
// braided coproducts, whose tables are not ordinary bialgebras)
std::optional<std::vector<Scalar>> solve_antipode_tables(int d, const FieldMode& m,
                                                         const std::vector<Scalar>& product,
                                                         const std::vector<Scalar>& coprod,
                                                         const Vec& unit, const Vec& counit);

// dual Hopf algebra on the dual basis (structure constants transposed)
FinDimHopf dual_hopf(const FinDimHopf& H);

// quasitriangular structure: an invertible element of H ox H
struct QT {
    SparseTensor r;     // 2 legs
    SparseTensor r_inv; // solved at construction
};
QT make_qt(const FinDimHopf& H, SparseTensor r); // solves the inverse; throws InvalidInput

// Z_n' = kZ_n with R = n^{-1} sum q^{-ab} g^a ox g^b; mode must be Cyclotomic(n)
std::pair<FinDimHopf, QT> zn_prime(int n, const FieldMode& m);

// the two axioms plus the six derived identities (counit laws, the universal
// QYBE, the three antipode identities, and S^2 = u . u^{-1} conjugation with
// u = sum (S R2) R1), and Delta u = (R21 R12)^{-1} (u ox u)
VerificationReport qt_verify(const FinDimHopf& H, const QT& R);
Vec qt_u_element(const FinDimHopf& H, const QT& R);

// dual quasitriangular functional phi: H ox H -> k with its convolution inverse
struct DualQT {
    Mat phi;     // phi(e_a ox e_b)
    Mat phi_inv; // solved convolution inverse
};
// verify (dqua1), (dqua2) and convolution invertibility; throws on failure
DualQT make_dual_qt(const FinDimHopf& A, const Mat& phi);
// the dual-qt functional on H* obtained by evaluating a QT element of H
DualQT dual_qt_from_qt(const FinDimHopf& H, const QT& R, const FinDimHopf& Hdual);

// function Hopf algebra k(G) for a finite abelian group with a bicharacter:
// bichar(a,b) indexed by group elements (mixed-radix over `orders`).
// Returns k(G) with the QT element sum bichar(g,h) delta_g ox delta_h, plus
// the dual-qt functional on the group algebra side carried by the same
// bicharacter.  Throws NotABicharacter.
struct GroupFunctionHopf {
    FinDimHopf fun;     // k(G)
    QT qt;              // bicharacter as a QT element of k(G)
    FinDimHopf grp;     // kG (the dual)
    DualQT grp_dqt;     // bicharacter as a dual-qt functional on kG
};
GroupFunctionHopf group_function_hopf(const std::vector<int>& orders, const Mat& bichar);

// Drinfeld double D(H) on H* ox H with R = sum (f^a ox 1) ox (1 ox e_a);
// the antipode is solved and both hopf_verify and qt_verify run.
std::pair<FinDimHopf, QT> drinfeld_double(const FinDimHopf& H);

// left module action by structure constants act[(h*dv+v)*dv+out]
struct ModuleAction {
    int dv = 0;
    std::vector<Scalar> act;
    Scalar a(int h, int v, int out) const { return act[(h * dv + v) * dv + out]; }
    Vec apply(const FinDimHopf& H, const Vec& hvec, const Vec& v) const;
};
VerificationReport module_verify(const FinDimHopf& H, const ModuleAction& V);

// left coaction v -> sum co[(v*dh+h)*dv+out] e_h ox e_out
struct Coaction {
    int dv = 0;
    int dh = 0;
    std::vector<Scalar> co;
    const Scalar& at(int v, int h, int out) const { return co[(v * dh + h) * dv + out]; }
};
VerificationReport comodule_verify(const FinDimHopf& H, const Coaction& V);

// Psi_{V,W}(v ox w) = sum R2 |> w ox R1 |> v as a matrix with row (w', v'),
// column (v, w); the intertwiner property is checked on basis elements.
struct ModuleBraiding {
    Mat psi;
    VerificationReport report;
};
ModuleBraiding module_braiding(const FinDimHopf& H, const QT& R, const ModuleAction& V,
                               const ModuleAction& W);

// grading by g-eigenvalue g |> v = q^{|v|} v for Z_n'
ModuleAction graded_module_action(const FinDimHopf& Zn, const std::vector<int>& dims);

// anyonic dimension sum q^{-a^2} dim V_a and trace; mode must be Cyclotomic(n)
Scalar anyonic_dim(const std::vector<int>& dims, int n, const FieldMode& m);
Scalar anyonic_trace(const std::vector<Mat>& blocks, int n, const FieldMode& m);

// crossed-module compatibility and comodule invertibility (solved as a
// linear system; the inverse is attached to the report when found)
VerificationReport crossed_module_check(const FinDimHopf& H, const ModuleAction& act,
                                        const Coaction& co);

// the coaction beta(b) = sum R2 ox R1 |> b of a quasitriangular background
Coaction qt_coaction(const FinDimHopf& H, const QT& R, const ModuleAction& act);

// H^{ox n} as an H-module algebra under h |> (b1 ox .. ox bn) =
// sum h1 b1 S h_2n ox h2 b2 S h_2n-1 ox ...
VerificationReport nfold_module_algebra_check(const FinDimHopf& H, int n);

} // namespace braidkit

#endif
