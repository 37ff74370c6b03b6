#pragma once

#include <optional>

#include "mildsol/reports.hpp"
#include "mildsol/types.hpp"

namespace mildsol {

class Trajectory;

// ---------------------------------------------------------------------------
// Fading weight
// ---------------------------------------------------------------------------

/// Exponential-family weight rho(theta) = exp(mu*theta) on (-inf,-tau), with
/// the shift bound P(xi) = exp(p_rate*xi). For the exact family p_rate == mu
/// and the shift inequality rho(xi+theta) <= P(xi) rho(theta) holds with
/// equality; p_rate is kept separate so deliberately broken bounds can be
/// exercised by the fading check.
struct FadingWeight {
    double tau = 1.0;
    double mu = 1.0;
    double p_rate = 1.0;

    double rho(double theta) const { return std::exp(mu * theta); }
    double p_bound(double xi) const { return std::exp(p_rate * xi); }

    /// ∫_{-inf}^{-Theta} rho = exp(-mu*Theta)/mu, finite and strictly
    /// decreasing in Theta.
    double tail_mass(double Theta) const { return std::exp(-mu * Theta) / mu; }

    void validate() const;

    /// Cutoff with tail_mass(Theta) <= eps_tail * tail_mass(tau).
    static double default_cutoff(double tau, double mu, double eps_tail);
};

// ---------------------------------------------------------------------------
// History representation
// ---------------------------------------------------------------------------

/// Closed-form tail descriptor phi(theta) = coeff * exp(rate*theta).
/// rate >= 0 keeps the sup bound finite toward -inf; rate > 0 additionally
/// makes the plain (unweighted) integral finite.
struct AnalyticTail {
    Vector coeff;
    double rate = 0.0;

    Vector eval(double theta) const { return coeff * std::exp(rate * theta); }
    bool is_zero() const { return coeff.size() == 0 || coeff.isZero(0.0); }
    static AnalyticTail zero(int dim) { return {Vector::Zero(dim), 0.0}; }
};

/// Piecewise-continuous window on [-tau, 0]. The grid value stored at a jump
/// abscissa is the left limit; the right limit lives in the jump record.
struct RecentSegment {
    struct Jump {
        double theta;
        Vector left;
        Vector right;
    };

    std::vector<double> thetas;   // sorted, front == -tau, back == 0
    std::vector<Vector> values;   // one per theta, left-limit convention
    std::vector<Jump> jumps;      // interior, sorted; each theta is a grid node

    double tau() const { return thetas.empty() ? 0.0 : -thetas.front(); }
    int dim() const { return values.empty() ? 0 : static_cast<int>(values.front().size()); }

    /// Value at theta; side=false gives the left limit at a jump, side=true
    /// the right limit. Linear interpolation between nodes.
    Vector value_at(double theta, bool right_side = false) const;

    /// Integration nodes with jump abscissae duplicated (left then right), so
    /// trapezoid panels never straddle a discontinuity.
    void integration_nodes(std::vector<double>& xs, std::vector<Vector>& ys) const;

    void validate() const;
};

/// Weighted-integrable tail on (-inf,-tau]. Either analytic (empty grid, the
/// descriptor covers all of theta <= -tau) or grid-truncated: samples on
/// [-cutoff,-tau] plus a certified analytic continuation beyond the cutoff.
/// A missing continuation means no certified bound is available.
struct TailRepresentation {
    double cutoff = 1.0;                 // Theta >= tau
    std::vector<double> thetas;          // sorted in [-cutoff,-tau]; may repeat at jumps
    std::vector<Vector> values;
    std::optional<AnalyticTail> beyond;  // theta < -cutoff (grid) / theta <= -tau (analytic)

    bool analytic() const { return thetas.empty(); }

    /// Certified sup of ||phi(theta)|| for theta < -cutoff; throws if no
    /// continuation descriptor is present.
    double sup_bound_beyond(const SpaceGrid& space) const;

    Vector value_at(double theta) const;
    void validate(double tau) const;

    static TailRepresentation analytic_tail(AnalyticTail t, double tau);
};

/// Element of the fading-memory phase space: recent window plus weighted tail.
struct History {
    RecentSegment recent;
    TailRepresentation tail;
    std::shared_ptr<const SpaceGrid> space;

    int dim() const { return recent.dim(); }
    double tau() const { return recent.tau(); }
    void validate() const;

    /// phi(theta) anywhere on (-inf, 0].
    Vector value_at(double theta, bool right_side = false) const;
};

/// Builds the history of a constant function phi == c.
History constant_history(const Vector& c, double tau, double grid_h,
                         std::shared_ptr<const SpaceGrid> space);

/// phi(theta) = coeff * exp(rate*theta) on all of (-inf, 0]; analytic tail,
/// sampled window.
History exponential_history(const Vector& coeff, double rate, double tau, double grid_h,
                            std::shared_ptr<const SpaceGrid> space);

// ---------------------------------------------------------------------------
// Phase-space constants
// ---------------------------------------------------------------------------

/// Candidate (K, M, H) for the growth and pointwise-bound checks. The space
/// does not come with canonical constants; these are shipped as a calibration
/// that the per-run reports verify, never as a derived fact.
struct PhaseSpaceConstants {
    std::function<double(double)> K;  // strictly positive, continuous
    std::function<double(double)> M;  // locally bounded
    double H = 10.0;

    /// Shipped calibration: K(s) = 2 + tail_mass(tau), M(s) = 2 + tau*rho(-tau).
    static PhaseSpaceConstants default_calibration(const FadingWeight& w, double H = 10.0);
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// (1/tau) ∫_{-tau}^0 ||psi(theta)|| dtheta, panels split at jumps.
double seminorm_recent(const RecentSegment& recent, const SpaceGrid& space);

struct TailSeminorm {
    double value = 0.0;      // quadrature (or exact, analytic mode) of rho*||phi||
    double remainder = 0.0;  // certified bound on the mass beyond the cutoff
};

/// ∫_{-inf}^{-tau} rho(theta) ||phi(theta)|| dtheta with a certified
/// remainder <= sup_bound * tail_mass(cutoff) in grid-truncated mode.
TailSeminorm seminorm_tail(const TailRepresentation& tail, const FadingWeight& weight,
                           const SpaceGrid& space);

/// Phase-space seminorm: recent part plus the tail value.
double seminorm(const History& history, const FadingWeight& weight);

/// Componentwise ∫_{-inf}^0 phi(theta) dtheta. Requires an integrable tail
/// (analytic continuation with rate > 0, or zero).
Vector weighted_history_integral(const History& history);

/// ∫_{-inf}^{-Theta} ||phi(theta)|| dtheta (unweighted), used by the
/// fading-sensitivity bound. Theta >= tau.
double tail_abs_mass_beyond(const History& history, double Theta);

/// Copy of the history with everything beyond -Theta replaced by zero.
/// Grid samples on [-Theta,-tau] are preserved; an analytic tail is sampled
/// onto a grid with spacing <= grid_h first so that the truncated and the
/// original history share quadrature panels on the kept range.
History truncate_tail(const History& history, double Theta, double grid_h);

/// Same-structure linear combinations (identical grids and jump layout);
/// used by the seminorm-law property tests and the bindings.
History add(const History& a, const History& b);
History scale(const History& h, double factor);

/// History of the solution at time t: recent window sampling y(t+theta) with
/// jump markers inherited from impulse times, tail stitched from the earlier
/// trajectory and the initial history. At t == t0 this returns the initial
/// history verbatim.
History history_at(const Trajectory& traj, double t);

/// Growth check: seminorm(y_t) <= K(t-t0) sup_{t0<=s<=t}||y(s)|| +
/// M(t-t0) seminorm(y_{t0}) at each sample time.
Check check_B3(const Trajectory& traj, const PhaseSpaceConstants& constants,
               const FadingWeight& weight, const std::vector<double>& sample_times,
               double tol = 1e-9);

/// Pointwise bound proxy: ||y(t)|| <= H * seminorm(y_t) for the configured H.
Check check_B4(const Trajectory& traj, const PhaseSpaceConstants& constants,
               const FadingWeight& weight, const std::vector<double>& sample_times);

/// Shift inequality rho(xi+theta) <= P(xi) rho(theta) on the given samples
/// (xi <= 0, theta < -tau).
Check check_fading(const FadingWeight& weight,
                   const std::vector<std::pair<double, double>>& samples);

}  // namespace mildsol
