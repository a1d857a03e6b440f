#ifndef OREKIT_DUALITY_HPP
#define OREKIT_DUALITY_HPP

#include "orekit/syzygy.hpp"

namespace orekit {

// Modules are presented by rows: M = D^m / D^p A for a p x m operator A.

struct DoubleDuality {
    OpMatrix adjoint;         // ad(D1)
    OpMatrix cc_of_adjoint;   // E = CC(ad(D1))
    OpMatrix parametrizing;   // ad(E), a candidate parametrization
    OpMatrix recovered;       // CC(ad(E))
    bool torsion_free = false;
    std::vector<Row> extra;   // rows of `recovered` not generated by D1: torsion elements
};

DoubleDuality double_duality_test(Context& ctx, const OpMatrix& D1);

struct Parametrization {
    OpMatrix op;
    int potentials = 0;
    int rank_bound = 0;  // m - rank(D1), the least possible number of potentials
    bool minimal = false;
};

// Throws NotParametrizable with the torsion elements when D1 has torsion.
Parametrization parametrize(Context& ctx, const OpMatrix& D1);

struct TorsionCertificate {
    Row element;                 // residue class in M
    std::vector<ScalarOp> annihilators;  // generators of the annihilator ideal
    ScalarOp witness_op;         // one nonzero annihilator P
    std::vector<ScalarOp> witness_coeffs;  // P * element = sum c_j * rows_j
};

// Torsion elements of M = coker(A) with annihilator certificates.
std::vector<TorsionCertificate> torsion(Context& ctx, const OpMatrix& A);
// Certificate for a single residue class; annihilators empty when free.
TorsionCertificate torsion_certificate(Context& ctx, const OpMatrix& A, const Row& element);
bool verify_certificate(const OpMatrix& A, const TorsionCertificate& c);

struct KernelAnalysis {
    bool injective = false;
    bool conditional = false;    // injective only under the recorded conditions
    std::vector<Polynomial> conditions;
    std::vector<Row> basis;      // Janet basis rows of the kernel system
};

// Kernel of the operator A: solutions of A y = 0.
KernelAnalysis kernel_analysis(Context& ctx, const OpMatrix& A);

struct ExtResult {
    int i = 0;
    bool vanishes = true;
    std::vector<Row> generators;  // residues not in the image
    std::vector<Row> cycles;      // all generators of the kernel module
    std::vector<Row> boundaries;  // rows of the image
    size_t ambient = 0;           // number of components
    std::vector<Proviso> provisos;
};

// Free resolution by iterated compatibility conditions, starting at A.
std::vector<OpMatrix> resolution(Context& ctx, const OpMatrix& A, int length);
// ext^i of coker(A) computed on the given resolution R[0] = A, R[1], ...
ExtResult ext(Context& ctx, const std::vector<OpMatrix>& R, int i);
ExtResult ext(Context& ctx, const OpMatrix& A, int i);

// Alternating sum of the ranks of the free modules in the resolution.
long euler_rank(const std::vector<OpMatrix>& R);

// Stack rows of several matrices with the same column count.
OpMatrix stack(const std::vector<const OpMatrix*>& parts);

}  // namespace orekit

#endif
