#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mildsol {

using Vector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Malformed or inconsistent configuration; messages name the offending field.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Picard iteration failed to reach the tolerance within the iteration cap.
struct NonconvergenceError : std::runtime_error {
    NonconvergenceError(int interval_index, double last_diff)
        : std::runtime_error("picard iteration did not converge on interval " +
                             std::to_string(interval_index) +
                             " (last sup-difference " + std::to_string(last_diff) + ")"),
          interval(interval_index),
          last_difference(last_diff) {}
    int interval;
    double last_difference;
};

/// A selection strategy emitted a control outside the admissible set.
struct MembershipError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every sampled run was discarded (nonconvergent or uncertified).
struct EmptyFamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Spatial grid on [0,1]
// ---------------------------------------------------------------------------

/// Uniform discretization of the state space L^2([0,1]); state vectors are
/// pointwise samples at the nodes and norms/integrals use trapezoid weights.
/// A single-node grid degenerates to the midpoint rule (weight 1), so scalar
/// problems reduce exactly to absolute values.
class SpaceGrid {
public:
    static std::shared_ptr<const SpaceGrid> uniform(int n_nodes);

    int size() const { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const { return nodes_; }
    const Vector& weights() const { return weights_; }

    /// ∫_0^1 v(x) dx by the grid's quadrature weights.
    double integral(const Vector& v) const;
    /// L^2([0,1]) norm of the sampled function.
    double norm(const Vector& v) const;

private:
    std::vector<double> nodes_;
    Vector weights_;
};

// ---------------------------------------------------------------------------
// Quadrature helpers
// ---------------------------------------------------------------------------

/// Composite trapezoid over sorted nodes; duplicated abscissae encode jump
/// discontinuities (zero-width panels contribute nothing, so panels never
/// straddle a jump).
double trapz(const std::vector<double>& xs, const std::vector<double>& ys);
Vector trapz(const std::vector<double>& xs, const std::vector<Vector>& ys);

/// Builds the uniform grid of an interval with spacing <= h and exact endpoints.
std::vector<double> uniform_grid(double a, double b, double h);

// ---------------------------------------------------------------------------
// Misc
// ---------------------------------------------------------------------------

uint64_t fnv1a(std::string_view s);

/// Locale-independent shortest round-trip formatting for reproducible files.
std::string format_double(double v);

}  // namespace mildsol
