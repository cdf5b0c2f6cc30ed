#include "isostokes/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isostokes {

double hermiticity_defect(const ComplexMatrix& m) {
    const int n = m.dim();
    double defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    return defect;
}

HermitianMatrix HermitianMatrix::checked(const ComplexMatrix& m, double tol) {
    if (!m.all_finite()) throw error(errc::non_hermitian_input, "matrix has non-finite entries");
    const double scale = std::max(frobenius_norm(m), 1e-300);
    if (hermiticity_defect(m) > tol * scale)
        throw error(errc::non_hermitian_input, "Hermiticity defect exceeds tolerance");
    return symmetrized(m);
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    const int n = m.dim();
    HermitianMatrix h;
    h.m_ = ComplexMatrix(n);
    for (int i = 0; i < n; ++i) {
        h.m_(i, i) = m(i, i).real();
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h.m_(i, j) = v;
            h.m_(j, i) = std::conj(v);
        }
    }
    return h;
}

namespace {

// One two-sided Jacobi rotation zeroing the (p,q) entry. The unitary is
// U = D*G with D = diag(1, e^{-i phi}) absorbing the phase of a_pq and G a
// real Givens rotation; eigenvalue updates use the stable t = s/c root.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const cplx phase = apq / abs_apq; // e^{i phi}
    // small-magnitude root of t^2 - 2*tau*t - 1 = 0
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const int n = a.dim();

    // rows: row_p' = c*row_p + s*conj(phase)^-1... U^dagger rows
    for (int j = 0; j < n; ++j) {
        const cplx rp = a(p, j);
        const cplx rq = a(q, j);
        a(p, j) = c * rp + s * phase * rq;
        a(q, j) = -s * rp + c * phase * rq;
    }
    // columns (right-multiplication by U)
    for (int i = 0; i < n; ++i) {
        const cplx cp = a(i, p);
        const cplx cq = a(i, q);
        a(i, p) = c * cp + s * std::conj(phase) * cq;
        a(i, q) = -s * cp + c * std::conj(phase) * cq;
    }
    for (int i = 0; i < n; ++i) {
        const cplx cp = v(i, p);
        const cplx cq = v(i, q);
        v(i, p) = c * cp + s * std::conj(phase) * cq;
        v(i, q) = -s * cp + c * std::conj(phase) * cq;
    }
    // exact values on the pivot pair
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app + t * abs_apq;
    a(q, q) = aqq - t * abs_apq;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace

EigenDecomposition herm_eigen(const HermitianMatrix& input) {
    const int n = input.dim();
    ComplexMatrix a = input.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(frobenius_norm(a), 1e-300);
    const double threshold = 1e-14 * scale;

    constexpr int kMaxSweeps = 30;
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > kMaxSweeps) throw error(errc::convergence_failure, "Jacobi sweep cap exceeded");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition dec;
    dec.values.resize(n);
    dec.vectors = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        dec.values[j] = a(order[j], order[j]).real();
        // phase fix: largest-magnitude component real positive, first index on ties
        int imax = 0;
        double best = -1.0;
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(v(i, order[j]));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        cplx ph(1.0, 0.0);
        if (best > 0.0) ph = std::conj(v(imax, order[j])) / best;
        for (int i = 0; i < n; ++i) dec.vectors(i, j) = v(i, order[j]) * ph;
    }
    return dec;
}

HermitianMatrix delta_k(const HermitianMatrix& a, int k) {
    const int n = a.dim();
    if (k < 0 || k > n) throw error(errc::index_out_of_range, "delta_k block size outside [0, n]");
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) r(i, i) = a(i, i);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r(i, j) = a(i, j);
    return HermitianMatrix::symmetrized(r);
}

HermitianMatrix eta_k(const HermitianMatrix& a, int k) {
    const int n = a.dim();
    if (k < 0 || k > n) throw error(errc::index_out_of_range, "eta_k block size outside [0, n]");
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i) r(i, i) = a(i, i);
    for (int i = n - k; i < n; ++i)
        for (int j = n - k; j < n; ++j) r(i, j) = a(i, j);
    return HermitianMatrix::symmetrized(r);
}

namespace {

// exp via eigendecomposition of a Hermitian H, applied to exponent f(H)
// with f(lambda) = exp(w * lambda).
ComplexMatrix exp_of_scaled_hermitian(const HermitianMatrix& h, cplx w) {
    const EigenDecomposition dec = herm_eigen(h);
    const int n = h.dim();
    ComplexMatrix d(n);
    for (int i = 0; i < n; ++i) d(i, i) = std::exp(w * dec.values[i]);
    return dec.vectors * d * adjoint(dec.vectors);
}

ComplexMatrix pade13_exp(const ComplexMatrix& m) {
    // Higham's degree-13 Pade with scaling and squaring.
    static const double b[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
    constexpr double theta13 = 5.371920351148152;
    const int n = m.dim();
    const double nrm = frobenius_norm(m);
    int squarings = 0;
    ComplexMatrix a = m;
    if (nrm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        a *= std::ldexp(1.0, -squarings);
    }
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;
    ComplexMatrix u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
    u += b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id;
    u = a * u;
    ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
    v += b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    ComplexMatrix r = lu_solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

} // namespace

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
    if (!m.all_finite()) throw error(errc::overflow_risk, "non-finite exponent");
    const double nrm = frobenius_norm(m);
    if (nrm > 700.0) throw error(errc::overflow_risk, "exponent norm above the 700 cap");
    const double scale = std::max(nrm, 1e-300);
    if (hermiticity_defect(m) <= 1e-12 * scale)
        return exp_of_scaled_hermitian(HermitianMatrix::symmetrized(m), cplx(1.0, 0.0));
    // anti-Hermitian test: M = i*H with H = -i*M Hermitian
    ComplexMatrix h = m;
    h *= cplx(0.0, -1.0);
    if (hermiticity_defect(h) <= 1e-12 * scale)
        return exp_of_scaled_hermitian(HermitianMatrix::symmetrized(h), kI);
    return pade13_exp(m);
}

ComplexMatrix scaled_power(const HermitianMatrix& m, double x, cplx s) {
    if (!(x > 0.0)) throw error(errc::non_positive_base, "scaled_power requires a positive base");
    return exp_of_scaled_hermitian(m, std::log(x) * s);
}

} // namespace isostokes
