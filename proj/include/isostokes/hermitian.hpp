#pragma once

#include <vector>

#include "isostokes/matrix.hpp"

namespace isostokes {

/// Validated Hermitian matrix. The stored entries are exactly
/// (M + M^dagger)/2 of the input, accepted only if the Hermiticity defect
/// max |M_ij - conj(M_ji)| is within tol relative to ||M||_F.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;

    /// Throws non_hermitian_input if the defect exceeds tol*max(||m||_F, 1e-300).
    static HermitianMatrix checked(const ComplexMatrix& m, double tol = 1e-12);

    /// Symmetrizes without a defect check, for producers that are Hermitian
    /// by construction (unitary conjugation, flow steps).
    static HermitianMatrix symmetrized(const ComplexMatrix& m);

    static HermitianMatrix zero(int n) { return symmetrized(ComplexMatrix(n)); }

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }
    double diag(int i) const { return m_(i, i).real(); }

  private:
    ComplexMatrix m_;
};

double hermiticity_defect(const ComplexMatrix& m);

/// Eigendecomposition of a Hermitian matrix: values ascending, vectors
/// unitary with a deterministic phase fix (each column's largest-magnitude
/// component made real positive, smallest index on ties).
struct EigenDecomposition {
    std::vector<double> values;
    ComplexMatrix vectors; // columns are eigenvectors
};

/// Cyclic complex Jacobi iteration, off-diagonal threshold 1e-14*||A||_F,
/// capped at 30 sweeps (convergence_failure beyond).
EigenDecomposition herm_eigen(const HermitianMatrix& a);

/// Keeps entries in the upper-left k x k block and on the diagonal, zeroes
/// the rest.
HermitianMatrix delta_k(const HermitianMatrix& a, int k);

/// Mirror of delta_k: keeps the lower-right k x k block and the diagonal.
HermitianMatrix eta_k(const HermitianMatrix& a, int k);

/// Matrix exponential. Hermitian and anti-Hermitian inputs go through the
/// eigendecomposition (exactly unitary results for anti-Hermitian input up
/// to roundoff); everything else through scaling-and-squaring with a
/// Pade(13) kernel. Throws overflow_risk for ||M||_F > 700.
ComplexMatrix matrix_exp(const ComplexMatrix& m);

/// x^(s*M) := exp(ln(x) * s * M) for Hermitian M and x > 0, via the
/// eigendecomposition of M. Unitary whenever s is purely imaginary.
ComplexMatrix scaled_power(const HermitianMatrix& m, double x, cplx s);

} // namespace isostokes
