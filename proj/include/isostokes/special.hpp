#pragma once

#include "isostokes/matrix.hpp"

namespace isostokes {

/// Logarithm real on the positive real axis with a cut along the
/// nonnegative imaginary axis: the imaginary part lies in (-3*pi/2, pi/2],
/// equals -pi on the negative real axis, and the cut takes its boundary
/// value from the Re(z) > 0 side. Throws zero_argument at z = 0.
cplx branched_log(cplx z);

/// Principal log-Gamma (Lanczos, g = 7, 9 coefficients; reflection for
/// Re(z) < 1/2, values mirrored across the real axis so that
/// log_gamma(conj z) == conj(log_gamma(z)) exactly). Throws pole_argument
/// within 1e-14 of a nonpositive integer.
cplx log_gamma(cplx z);

} // namespace isostokes
