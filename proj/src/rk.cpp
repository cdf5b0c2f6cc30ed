#include "isostokes/rk.hpp"

#include <algorithm>
#include <cmath>

namespace isostokes {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// y5 - y4 coefficients (b - bhat), with the FSAL stage k7
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600;
constexpr double e3 = 500.0 / 1113 - 7571.0 / 16695;
constexpr double e4 = 125.0 / 192 - 393.0 / 640;
constexpr double e5 = -2187.0 / 6784 + 92097.0 / 339200;
constexpr double e6 = 11.0 / 84 - 187.0 / 2100;
constexpr double e7 = -1.0 / 40;

void combine(ComplexMatrix& out, const ComplexMatrix& y, double h,
             std::initializer_list<std::pair<double, const ComplexMatrix*>> terms) {
    out = y;
    cplx* po = out.data().data();
    const size_t sz = out.data().size();
    for (const auto& [w, k] : terms) {
        const cplx* pk = k->data().data();
        const double hw = h * w;
        for (size_t i = 0; i < sz; ++i) po[i] += hw * pk[i];
    }
}

} // namespace

ComplexMatrix rk_integrate(const OdeRhs& f, ComplexMatrix y, double t0, double t1,
                           const OdeOptions& opts, OdeDiagnostics* diag, const OdeStepHook& hook) {
    const double span = t1 - t0;
    if (span == 0.0) return y;
    const int n = y.dim();
    ComplexMatrix k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), err(n);

    double t = t0;
    double h = span / 1000.0;
    const double h_min = std::abs(span) * opts.underflow_factor;
    double prev_scaled = 1.0;
    bool have_k1 = false;
    long steps = 0;

    while ((span > 0.0) ? (t < t1) : (t > t1)) {
        if (++steps > opts.max_steps) throw error(errc::tolerance_not_met, "step budget exhausted");
        if ((span > 0.0) ? (t + h > t1) : (t + h < t1)) h = t1 - t;
        if (std::abs(h) < h_min) throw step_underflow_error(t, "step size underflow at t = " + std::to_string(t));

        if (!have_k1) {
            f(t, y, k1);
            have_k1 = true;
        }
        combine(ytmp, y, h, {{a21, &k1}});
        f(t + c2 * h, ytmp, k2);
        combine(ytmp, y, h, {{a31, &k1}, {a32, &k2}});
        f(t + c3 * h, ytmp, k3);
        combine(ytmp, y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        f(t + c4 * h, ytmp, k4);
        combine(ytmp, y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        f(t + c5 * h, ytmp, k5);
        combine(ytmp, y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        f(t + h, ytmp, k6);
        combine(ynew, y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        f(t + h, ynew, k7);
        combine(err, ComplexMatrix(n), h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

        const double scale =
            opts.abs_tol + opts.rel_tol * std::max(frobenius_norm(y), frobenius_norm(ynew));
        const double scaled_err = frobenius_norm(err) / scale;

        if (scaled_err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7; // FSAL
            if (diag) {
                ++diag->accepted;
                diag->error_accum += scaled_err * scale;
            }
            if (hook) {
                const double corr = hook(t, y);
                // a hook correction invalidates the FSAL derivative
                if (corr > 0.0) have_k1 = false;
            }
            const double e = std::max(scaled_err, 1e-10);
            double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(prev_scaled, 0.4 / 5.0);
            fac = std::clamp(fac, 0.2, 5.0);
            prev_scaled = e;
            h *= fac;
        } else {
            if (diag) ++diag->rejected;
            double fac = 0.9 * std::pow(scaled_err, -0.2);
            h *= std::clamp(fac, 0.1, 0.9);
        }
    }
    return y;
}

} // namespace isostokes
