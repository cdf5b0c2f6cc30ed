#include "isostokes/flow.hpp"

#include <algorithm>
#include <cmath>

#include "isostokes/special.hpp"

namespace isostokes {

RegularPoint RegularPoint::checked(std::vector<double> u, double gap_floor) {
    for (double v : u)
        if (!std::isfinite(v)) throw error(errc::degenerate_u, "non-finite coordinate");
    for (size_t i = 0; i + 1 < u.size(); ++i)
        if (!(u[i + 1] - u[i] >= gap_floor))
            throw error(errc::degenerate_u, "coordinates not increasing by at least the gap floor");
    RegularPoint p;
    p.u_ = std::move(u);
    return p;
}

double RegularPoint::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < u_.size(); ++i) g = std::min(g, u_[i + 1] - u_[i]);
    return g;
}

RegularPoint zone_plus_point(int n, double rho) {
    std::vector<double> u(n);
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= rho;
        u[k] = p;
    }
    return RegularPoint::checked(std::move(u));
}

RegularPoint zone_minus_point(int n, double rho) {
    std::vector<double> u(n);
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
        p *= rho;
        u[n - 1 - k] = -p;
    }
    return RegularPoint::checked(std::move(u));
}

ComplexMatrix ad_u_inverse(const RegularPoint& u, const ComplexMatrix& n_offdiag) {
    const int n = n_offdiag.dim();
    if (u.dim() != n) throw error(errc::wrong_dimension, "u and N dimensions differ");
    const double scale = std::max(frobenius_norm(n_offdiag), 1e-300);
    for (int i = 0; i < n; ++i)
        if (std::abs(n_offdiag(i, i)) > 1e-13 * scale)
            throw error(errc::nonzero_diagonal, "ad_u_inverse input must have zero diagonal");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(i, j) = n_offdiag(i, j) / (u[i] - u[j]);
    return m;
}

std::vector<HermitianMatrix> iso_vector_field(const RegularPoint& u, const HermitianMatrix& phi) {
    const int n = phi.dim();
    if (u.dim() != n) throw error(errc::wrong_dimension, "u and Phi dimensions differ");
    std::vector<HermitianMatrix> field;
    field.reserve(n);
    ComplexMatrix m(n), comm(n), tmp(n);
    for (int k = 0; k < n; ++k) {
        // ad_{E_kk} Phi lives on row/column k; ad_u^-1 divides by the gaps
        for (auto& v : m.data()) v = 0.0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            m(k, j) = phi(k, j) / (u[k] - u[j]);
            m(j, k) = -phi(j, k) / (u[j] - u[k]);
        }
        mul_into(phi.matrix(), m, comm);
        mul_into(m, phi.matrix(), tmp);
        comm -= tmp;
        comm *= kInvTwoPiI;
        field.push_back(HermitianMatrix::symmetrized(comm));
    }
    return field;
}

double Trajectory::diag_drift() const {
    const int n = samples.front().phi.dim();
    double drift = 0.0;
    for (const auto& s : samples) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) d += std::norm(s.phi(i, i) - samples.front().phi(i, i));
        drift = std::max(drift, std::sqrt(d));
    }
    return drift;
}

double Trajectory::spectrum_drift() const {
    const std::vector<double> initial = herm_eigen(samples.front().phi).values;
    double drift = 0.0;
    for (const auto& s : samples) {
        const std::vector<double> values = herm_eigen(s.phi).values;
        double d = 0.0;
        for (size_t i = 0; i < values.size(); ++i) d += (values[i] - initial[i]) * (values[i] - initial[i]);
        drift = std::max(drift, std::sqrt(d));
    }
    return drift;
}

Trajectory integrate_path(const HermitianMatrix& phi0, const PathInU& path, const FlowOptions& opts) {
    const int n = phi0.dim();
    if (path.waypoints.size() < 2) throw error(errc::degenerate_u, "path needs at least two waypoints");
    for (const auto& w : path.waypoints)
        if (w.dim() != n) throw error(errc::wrong_dimension, "waypoint dimension mismatch");

    const int segs = static_cast<int>(path.waypoints.size()) - 1;
    Trajectory traj;
    traj.samples.push_back({0.0, path.waypoints.front().coords(), phi0});

    int stride = 1, since_last = 0;
    auto record = [&](double t, const std::vector<double>& u, const HermitianMatrix& phi) {
        if (++since_last < stride) return;
        since_last = 0;
        if (static_cast<int>(traj.samples.size()) >= opts.sample_cap) {
            // halve the retained density, keep endpoints
            std::vector<TrajectorySample> kept;
            for (size_t i = 0; i < traj.samples.size(); i += 2) kept.push_back(traj.samples[i]);
            traj.samples = std::move(kept);
            stride *= 2;
        }
        traj.samples.push_back({t, u, phi});
    };

    ComplexMatrix w(n), tmp(n);
    HermitianMatrix phi = phi0;
    for (int s = 0; s < segs; ++s) {
        const std::vector<double>& ua = path.waypoints[s].coords();
        const std::vector<double>& ub = path.waypoints[s + 1].coords();
        const double t_lo = static_cast<double>(s) / segs;
        const double t_hi = static_cast<double>(s + 1) / segs;
        std::vector<double> du(n), ut(n);
        for (int i = 0; i < n; ++i) du[i] = (ub[i] - ua[i]) / (t_hi - t_lo);

        auto rhs = [&](double t, const ComplexMatrix& y, ComplexMatrix& dy) {
            const double frac = (t - t_lo) / (t_hi - t_lo);
            for (int i = 0; i < n; ++i) ut[i] = ua[i] + frac * (ub[i] - ua[i]);
            // fused field: W_ij = y_ij (du_i - du_j)/(u_i - u_j), dy = [y, W]/(2 pi i)
            for (int i = 0; i < n; ++i) {
                w(i, i) = 0.0;
                for (int j = i + 1; j < n; ++j) {
                    const double gap = ut[i] - ut[j];
                    if (std::abs(gap) < opts.gap_floor)
                        throw error(errc::degenerate_u, "gap collapsed along path");
                    const double r = (du[i] - du[j]) / gap;
                    w(i, j) = y(i, j) * r;
                    w(j, i) = y(j, i) * r;
                }
            }
            mul_into(y, w, dy);
            mul_into(w, y, tmp);
            dy -= tmp;
            dy *= kInvTwoPiI;
        };

        auto hook = [&](double t, ComplexMatrix& y) {
            const HermitianMatrix sym = HermitianMatrix::symmetrized(y);
            const double corr = distance(y, sym.matrix());
            y = sym.matrix();
            traj.max_resym = std::max(traj.max_resym, corr);
            const double frac = (t - t_lo) / (t_hi - t_lo);
            std::vector<double> u_here(n);
            for (int i = 0; i < n; ++i) u_here[i] = ua[i] + frac * (ub[i] - ua[i]);
            record(t, u_here, sym);
            return corr;
        };

        OdeOptions ode;
        ode.rel_tol = opts.tol;
        ode.abs_tol = opts.tol;
        ode.max_steps = opts.max_steps;
        const ComplexMatrix end = rk_integrate(rhs, phi.matrix(), t_lo, t_hi, ode, &traj.ode, hook);
        phi = HermitianMatrix::symmetrized(end);
    }
    if (traj.samples.back().t != 1.0) traj.samples.push_back({1.0, path.waypoints.back().coords(), phi});
    return traj;
}

ComplexMatrix conjugator_plus(const HermitianMatrix& a, const RegularPoint& u) {
    const int n = a.dim();
    if (u.dim() != n) throw error(errc::wrong_dimension, "u and A dimensions differ");
    ComplexMatrix c = ComplexMatrix::identity(n);
    double prev = 1.0; // u_0 := 1
    for (int k = 0; k < n; ++k) {
        const double ratio = prev / u[k];
        prev = u[k];
        if (!(ratio > 0.0)) throw error(errc::non_positive_ratio, "conjugator ratio not positive");
        c = c * scaled_power(delta_k(a, k), ratio, kInvTwoPiI);
    }
    return c;
}

namespace {

void require_rho(double rho) {
    if (!(rho > kRhoMin)) throw error(errc::parameter_out_of_range, "rho must exceed 10");
}

HermitianMatrix flip(const HermitianMatrix& a) { return HermitianMatrix::symmetrized(flip_conjugate(a.matrix())); }

} // namespace

ZoneSeed seed_plus(const HermitianMatrix& a_inf, double rho) {
    require_rho(rho);
    const RegularPoint u = zone_plus_point(a_inf.dim(), rho);
    const ComplexMatrix c = conjugator_plus(a_inf, u);
    const ComplexMatrix phi = adjoint(c) * a_inf.matrix() * c; // C^-1 = C^dagger
    return {Zone::plus, rho, u, HermitianMatrix::symmetrized(phi)};
}

ZoneSeed seed_minus(const HermitianMatrix& a_minus_inf, double rho) {
    require_rho(rho);
    const ZoneSeed inner = seed_plus(flip(a_minus_inf), rho);
    return {Zone::minus, rho, zone_minus_point(a_minus_inf.dim(), rho), flip(inner.phi)};
}

ZoneSeed seed_minus_direct(const HermitianMatrix& a_minus_inf, double rho) {
    require_rho(rho);
    const int n = a_minus_inf.dim();
    const RegularPoint u = zone_minus_point(n, rho);
    // ordered product with the smaller index to the right: C = T_n ... T_1,
    // T_k = (u_k/u_{k+1})^{eta_k(A)/(2 pi i)}, u_{n+1} := 1. Only the k = n
    // ratio u_n/1 = -rho is negative; branched_log supplies its branch.
    ComplexMatrix c = ComplexMatrix::identity(n);
    for (int k = n; k >= 1; --k) {
        const double num = u[k - 1];
        const double den = (k == n) ? 1.0 : u[k];
        const cplx log_ratio = branched_log(cplx(num / den, 0.0));
        const ComplexMatrix t = matrix_exp(log_ratio * kInvTwoPiI * eta_k(a_minus_inf, k).matrix());
        c = c * t;
    }
    const ComplexMatrix phi = inverse(c) * a_minus_inf.matrix() * c;
    return {Zone::minus, rho, u, HermitianMatrix::symmetrized(phi)};
}

HermitianMatrix extract_plus(const HermitianMatrix& phi, const RegularPoint& u, double fp_tol) {
    constexpr int kMaxIter = 200;
    HermitianMatrix a = phi;
    double prev_delta = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kMaxIter; ++it) {
        const ComplexMatrix c = conjugator_plus(a, u);
        const ComplexMatrix next = c * phi.matrix() * adjoint(c);
        const HermitianMatrix a_next = HermitianMatrix::symmetrized(next);
        const double delta = distance(a_next.matrix(), a.matrix());
        a = a_next;
        if (delta <= fp_tol) return a;
        // growing updates past the first few iterations signal divergence
        if (it > 10 && delta > 4.0 * prev_delta)
            throw error(errc::fixed_point_divergence, "extraction iteration diverging");
        prev_delta = delta;
    }
    throw error(errc::fixed_point_divergence, "extraction did not settle within 200 iterations");
}

HermitianMatrix extract_minus(const HermitianMatrix& phi, const RegularPoint& u, double fp_tol) {
    const int n = phi.dim();
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = -u[n - 1 - i];
    const RegularPoint flipped = RegularPoint::checked(std::move(v));
    return flip(extract_plus(flip(phi), flipped, fp_tol));
}

} // namespace isostokes
