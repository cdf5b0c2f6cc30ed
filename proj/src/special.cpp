#include "isostokes/special.hpp"

#include <cmath>

namespace isostokes {

cplx branched_log(cplx z) {
    if (z == cplx(0.0, 0.0)) throw error(errc::zero_argument, "log of zero");
    const double principal = std::arg(z); // (-pi, pi]
    const double arg = principal > kPi / 2.0 ? principal - 2.0 * kPi : principal;
    return cplx(std::log(std::abs(z)), arg);
}

namespace {

// Lanczos g = 7 coefficients (9 terms), ~1e-13 relative accuracy.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx lanczos_log_gamma(cplx z) {
    // valid for Re(z) >= 0.5
    cplx acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z - 1.0 + static_cast<double>(i));
    const cplx t = z + (kLanczosG - 0.5);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

cplx log_gamma_upper(cplx z) {
    // Im(z) >= 0 here
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z),
    // exact modulo 2*pi*i (principal branches throughout)
    return std::log(kPi / std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
}

} // namespace

cplx log_gamma(cplx z) {
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z.real() - nearest) <= 1e-14 && std::abs(z.imag()) <= 1e-14)
        throw error(errc::pole_argument, "log_gamma pole at a nonpositive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
    return log_gamma_upper(z);
}

} // namespace isostokes
