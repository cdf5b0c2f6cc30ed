#pragma once

#include <cstdint>
#include <random>

#include "isostokes/hermitian.hpp"

namespace isostokes {

/// Seeded generator with hand-rolled variate maps so that streams depend
/// only on the (standardized) mt19937_64 sequence, not on library
/// distribution internals.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

    cplx cgauss() {
        const double re = gauss();
        const double im = gauss();
        return cplx(re, im) / std::sqrt(2.0);
    }

    HermitianMatrix hermitian(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m(i, i) = gauss();
            for (int j = i + 1; j < n; ++j) {
                const cplx v = cgauss();
                m(i, j) = v;
                m(j, i) = std::conj(v);
            }
        }
        return HermitianMatrix::symmetrized(m);
    }

    /// Random Hermitian rescaled to the requested Frobenius norm.
    HermitianMatrix hermitian_with_norm(int n, double norm) {
        HermitianMatrix h = hermitian(n);
        const double f = frobenius_norm(h.matrix());
        ComplexMatrix m = h.matrix();
        m *= (f > 0.0 ? norm / f : 0.0);
        return HermitianMatrix::symmetrized(m);
    }

    /// Strictly increasing coordinates: base in [base_lo, base_hi], gaps in
    /// [gap_lo, gap_hi].
    std::vector<double> increasing(int n, double base_lo, double base_hi, double gap_lo, double gap_hi) {
        std::vector<double> u(n);
        u[0] = uniform(base_lo, base_hi);
        for (int i = 1; i < n; ++i) u[i] = u[i - 1] + uniform(gap_lo, gap_hi);
        return u;
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace isostokes
