#include "isostokes/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace isostokes {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void mul_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c) {
    const int n = a.dim();
    if (c.dim() != n) c = ComplexMatrix(n);
    const cplx* pa = a.data().data();
    const cplx* pb = b.data().data();
    cplx* pc = c.data().data();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) pc[i * n + j] = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx aik = pa[i * n + k];
            for (int j = 0; j < n; ++j) pc[i * n + j] += aik * pb[k * n + j];
        }
    }
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.dim());
    mul_into(a, b, c);
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.data()) s = std::max(s, std::abs(v));
    return s;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.data().size(); ++k) s += std::norm(a.data()[k] - b.data()[k]);
    return std::sqrt(s);
}

namespace {

// In-place LU factorization with partial pivoting. Returns the pivot row
// permutation and the sign of the permutation; throws on a zero pivot.
int lu_factor(ComplexMatrix& a, std::vector<int>& piv, bool throw_on_singular) {
    const int n = a.dim();
    piv.resize(n);
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        piv[k] = p;
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        if (best == 0.0) {
            if (throw_on_singular) throw error(errc::conditioning_failure, "singular matrix in LU solve");
            continue; // determinant path: zero pivot means det = 0
        }
        const cplx inv_piv = 1.0 / a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = a(i, k) * inv_piv;
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign;
}

} // namespace

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.dim();
    ComplexMatrix lu = a;
    std::vector<int> piv;
    lu_factor(lu, piv, true);
    ComplexMatrix x = b;
    for (int k = 0; k < n; ++k)
        if (piv[k] != k)
            for (int j = 0; j < n; ++j) std::swap(x(k, j), x(piv[k], j));
    // forward substitution (unit lower factor)
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            for (int j = 0; j < n; ++j) x(i, j) -= lu(i, k) * x(k, j);
    // back substitution
    for (int k = n - 1; k >= 0; --k) {
        const cplx inv = 1.0 / lu(k, k);
        for (int j = 0; j < n; ++j) x(k, j) *= inv;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) x(i, j) -= lu(i, k) * x(k, j);
    }
    return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) { return lu_solve(a, ComplexMatrix::identity(a.dim())); }

cplx determinant(const ComplexMatrix& a) {
    if (a.dim() == 0) return 1.0;
    ComplexMatrix lu = a;
    std::vector<int> piv;
    const int sign = lu_factor(lu, piv, false);
    cplx d = static_cast<double>(sign);
    for (int k = 0; k < lu.dim(); ++k) d *= lu(k, k);
    return d;
}

cplx minor_det(const ComplexMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw error(errc::mismatched_selection, "row/col selections differ in size");
    const int k = static_cast<int>(rows.size());
    for (int idx : rows)
        if (idx < 0 || idx >= m.dim()) throw error(errc::index_out_of_range, "row index outside matrix");
    for (int idx : cols)
        if (idx < 0 || idx >= m.dim()) throw error(errc::index_out_of_range, "col index outside matrix");
    if (k == 0) return 1.0; // empty determinant
    ComplexMatrix sub(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    return determinant(sub);
}

ComplexMatrix antidiag_flip(int n) {
    ComplexMatrix p(n);
    for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1.0;
    return p;
}

ComplexMatrix flip_conjugate(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(n - 1 - i, n - 1 - j);
    return r;
}

ComplexMatrix permutation_matrix(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    ComplexMatrix p(n);
    for (int j = 0; j < n; ++j) {
        if (sigma[j] < 0 || sigma[j] >= n) throw error(errc::index_out_of_range, "permutation image outside range");
        p(sigma[j], j) = 1.0;
    }
    return p;
}

} // namespace isostokes
