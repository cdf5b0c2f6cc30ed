#pragma once

#include <vector>

#include "isostokes/hermitian.hpp"
#include "isostokes/rk.hpp"

namespace isostokes {

/// Point of the open chamber u_1 < u_2 < ... < u_n, gaps at least gap_floor.
class RegularPoint {
  public:
    RegularPoint() = default;

    /// Throws degenerate_u if any gap is below gap_floor.
    static RegularPoint checked(std::vector<double> u, double gap_floor = 1e-10);

    int dim() const { return static_cast<int>(u_.size()); }
    const std::vector<double>& coords() const { return u_; }
    double operator[](int i) const { return u_[i]; }
    double min_gap() const;

  private:
    std::vector<double> u_;
};

/// Piecewise-linear path through the chamber, waypoints uniformly spaced in
/// t on [0, 1]. Gaps interpolate linearly between waypoint gaps, so every
/// interior point of a segment between valid points is itself valid.
struct PathInU {
    std::vector<RegularPoint> waypoints;
};

struct TrajectorySample {
    double t;
    std::vector<double> u;
    HermitianMatrix phi;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    OdeDiagnostics ode;
    /// largest re-symmetrization correction applied after a step
    double max_resym = 0.0;

    const HermitianMatrix& final_phi() const { return samples.back().phi; }

    /// max over samples of ||diag(phi(t)) - diag(phi(0))||
    double diag_drift() const;
    /// max over samples of the eigenvalue drift against the initial spectrum
    double spectrum_drift() const;
};

enum class Zone { plus, minus };

struct ZoneSeed {
    Zone zone;
    double rho;
    RegularPoint point;
    HermitianMatrix phi;
};

/// Canonical zone families: u+(rho) = (rho, rho^2, ..., rho^n) and
/// u-(rho) = (-rho^n, ..., -rho^2, -rho); -P u-(rho) P = u+(rho) exactly.
RegularPoint zone_plus_point(int n, double rho);
RegularPoint zone_minus_point(int n, double rho);

/// The unique off-diagonal M with [diag(u), M] = N: M_ij = N_ij/(u_i - u_j).
/// N must have (numerically) zero diagonal.
ComplexMatrix ad_u_inverse(const RegularPoint& u, const ComplexMatrix& n_offdiag);

/// The n components V_k = (1/2 pi i) [Phi, ad_u^-1 ad_{E_kk} Phi]; each is
/// Hermitian with zero diagonal and they sum to zero.
std::vector<HermitianMatrix> iso_vector_field(const RegularPoint& u, const HermitianMatrix& phi);

struct FlowOptions {
    double tol = 1e-10;
    double gap_floor = 1e-10;
    long max_steps = 20'000'000;
    /// cap on stored samples (reached by stride doubling)
    int sample_cap = 4096;
};

/// Integrates dPhi/dt = sum_k V_k(u(t), Phi) du_k/dt along the path with
/// adaptive Dormand-Prince 5(4); Phi is re-symmetrized after every accepted
/// step and the correction size recorded.
Trajectory integrate_path(const HermitianMatrix& phi0, const PathInU& path, const FlowOptions& opts = {});

/// Ordered product prod_{k=0..n-1} (u_k/u_{k+1})^{delta_k(A)/(2 pi i)} with
/// u_0 := 1, factor k = 0 leftmost. Unitary (anti-Hermitian exponents);
/// requires every ratio positive.
ComplexMatrix conjugator_plus(const HermitianMatrix& a, const RegularPoint& u);

inline constexpr double kRhoMin = 10.0;

/// Leading caterpillar approximation Phi ~ C^-1 A C at u+(rho).
ZoneSeed seed_plus(const HermitianMatrix& a_inf, double rho);

/// Minus-zone seed via the flip reduction: Psi = seed_plus(P A P, rho).phi
/// at u-(rho), phi = P Psi P.
ZoneSeed seed_minus(const HermitianMatrix& a_minus_inf, double rho);

/// Reference implementation of the minus-zone seed from the literal ordered
/// product over eta_k blocks, with the branched logarithm on the single
/// negative ratio u_n/u_{n+1} (u_{n+1} := 1). Cross-check for seed_minus.
ZoneSeed seed_minus_direct(const HermitianMatrix& a_minus_inf, double rho);

/// Inverts the plus-zone asymptotics by fixed point: A <- C(A) Phi C(A)^-1,
/// stopping when the update is below fp_tol (cap 200 iterations, throws
/// fixed_point_divergence when the iteration fails to settle).
HermitianMatrix extract_plus(const HermitianMatrix& phi, const RegularPoint& u, double fp_tol = 1e-12);

/// P-flip reduction of extract_plus.
HermitianMatrix extract_minus(const HermitianMatrix& phi, const RegularPoint& u, double fp_tol = 1e-12);

} // namespace isostokes
