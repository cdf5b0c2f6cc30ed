#pragma once

#include <functional>

#include "isostokes/matrix.hpp"

namespace isostokes {

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    long max_steps = 20'000'000;
    /// steps below |span| * underflow_factor abort with step_size_underflow
    double underflow_factor = 1e-14;
};

struct OdeDiagnostics {
    long accepted = 0;
    long rejected = 0;
    /// sum of accepted scaled local error estimates (crude global bound)
    double error_accum = 0.0;
};

class step_underflow_error : public error {
  public:
    step_underflow_error(double where, const std::string& what)
        : error(errc::step_size_underflow, what), where_(where) {}
    double where() const { return where_; }

  private:
    double where_;
};

/// dY/dt = f(t, Y) into the third argument; must not alias Y.
using OdeRhs = std::function<void(double, const ComplexMatrix&, ComplexMatrix&)>;

/// Called after each accepted step with (t, Y); may modify Y in place
/// (e.g. re-symmetrization) and returns the size of its correction.
using OdeStepHook = std::function<double(double, ComplexMatrix&)>;

/// Adaptive Dormand-Prince 5(4) with PI step control and FSAL reuse.
/// Integrates Y' = f(t, Y) from t0 to t1 (either direction), error norm
/// scaled by abs_tol + rel_tol * ||Y||_F.
ComplexMatrix rk_integrate(const OdeRhs& f, ComplexMatrix y0, double t0, double t1,
                           const OdeOptions& opts, OdeDiagnostics* diag = nullptr,
                           const OdeStepHook& hook = {});

} // namespace isostokes
