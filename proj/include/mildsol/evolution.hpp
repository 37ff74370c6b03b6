#pragma once

#include "mildsol/reports.hpp"
#include "mildsol/types.hpp"

namespace mildsol {

// ---------------------------------------------------------------------------
// Two-parameter evolution system U(t,s) on the triangle t0 <= s <= t <= T
// ---------------------------------------------------------------------------

class EvolutionSystem {
public:
    virtual ~EvolutionSystem() = default;

    double t0() const { return t0_; }
    double t_end() const { return t_end_; }

    /// U(t,s) v; linear in v. Throws std::domain_error outside the triangle.
    virtual Vector apply(double t, double s, const Vector& v) const = 0;

    /// Norm bound D with ||U(t,s)|| <= D on the triangle.
    virtual double bound_D() const = 0;

protected:
    EvolutionSystem(double t0, double t_end) : t0_(t0), t_end_(t_end) {}
    void check_domain(double t, double s) const;

private:
    double t0_;
    double t_end_;
};

/// Multiplication evolution generated by -b(t,x):
/// [U(t,s)v](x) = exp(-(B(t,x) - B(s,x))) v(x) with B(t,x) = ∫_{t0}^t b(sigma,x) dsigma.
/// B is accumulated once by trapezoid on the construction grid and linearly
/// interpolated in t, so the composition law holds exactly by construction
/// (exponents add) and apply is O(n_space).
class MultiplicationEvolution final : public EvolutionSystem {
public:
    MultiplicationEvolution(std::vector<double> time_grid,
                            std::shared_ptr<const SpaceGrid> space,
                            const std::function<double(double, double)>& b);

    Vector apply(double t, double s, const Vector& v) const override;
    double bound_D() const override;

    /// b sampled at (grid time index, node index).
    double b_at(int time_index, int node) const { return b_(time_index, node); }
    /// Interpolated cumulative integral B(t, node).
    double cumulative(double t, int node) const;
    const std::vector<double>& time_grid() const { return tgrid_; }
    const SpaceGrid& space() const { return *space_; }
    double min_b() const { return min_b_; }
    double max_b() const { return max_b_; }

private:
    std::vector<double> tgrid_;
    std::shared_ptr<const SpaceGrid> space_;
    Eigen::MatrixXd b_;     // rows: time grid, cols: nodes
    Eigen::MatrixXd cumB_;  // same layout, nondecreasing in t per node when b >= 0
    double min_b_ = 0.0;
    double max_b_ = 0.0;
};

// ---------------------------------------------------------------------------
// Evolution-law diagnostics
// ---------------------------------------------------------------------------

/// Max deviation ||U(t,r)U(r,s)v - U(t,s)v|| over the sampled triples; rows
/// pass when the deviation is <= 1e-12 ||v||.
Check check_composition(const EvolutionSystem& ev, const SpaceGrid& space,
                        const std::vector<std::array<double, 3>>& triples,
                        const std::vector<Vector>& vs);

/// Sampled sup of the operator norm over pairs from the time samples
/// (basis-vector probes; exact for the diagonal multiplication case).
double estimate_D(const EvolutionSystem& ev, const SpaceGrid& space,
                  const std::vector<double>& time_samples);

}  // namespace mildsol
