#pragma once

#include <complex>
#include <vector>

#include "isostokes/errors.hpp"

namespace isostokes {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr cplx kI = cplx(0.0, 1.0);
/// 1/(2*pi*i), the recurring spectral normalization factor.
inline const cplx kInvTwoPiI = cplx(0.0, -1.0 / (2.0 * kPi));

/// Dense square complex matrix, row-major storage, value semantics.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, cplx(0.0)) {}

    static ComplexMatrix identity(int n);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool all_finite() const;

  private:
    int n_ = 0;
    std::vector<cplx> a_;
};

/// c = a*b, dimensions must agree; c may not alias a or b.
void mul_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);

ComplexMatrix adjoint(const ComplexMatrix& m);

double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);

/// Frobenius norm of a - b.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Solves a*x = b by LU with partial pivoting. Throws conditioning_failure
/// on an (numerically) singular pivot.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix inverse(const ComplexMatrix& a);
cplx determinant(const ComplexMatrix& a);

/// Determinant of the submatrix m[rows, cols] (0-based index sets, equal
/// sizes). The empty selection has determinant 1.
cplx minor_det(const ComplexMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Anti-diagonal flip matrix P: P(i, n-1-i) = 1. P*P = Id and
/// (P*M*P)(i,j) = M(n-1-i, n-1-j).
ComplexMatrix antidiag_flip(int n);

/// Conjugation by the anti-diagonal flip, (i,j) -> (n-1-i, n-1-j).
ComplexMatrix flip_conjugate(const ComplexMatrix& m);

/// Permutation matrix of sigma (0-based images): P*e_j = e_{sigma[j]}.
ComplexMatrix permutation_matrix(const std::vector<int>& sigma);

} // namespace isostokes
