#pragma once

#include <optional>

#include "mildsol/phase_space.hpp"
#include "mildsol/reports.hpp"
#include "mildsol/types.hpp"

namespace mildsol {

// ---------------------------------------------------------------------------
// Single-valued nonlinearity g(t, p, q), applied pointwise in space with
// p = u(t,x) and q = ∫_{-inf}^0 u(t+theta,x) dtheta
// ---------------------------------------------------------------------------

struct Nonlinearity {
    enum class Kind { Zero, Memory, CubicDecay, Logistic };

    Kind kind = Kind::Zero;
    std::string name = "zero";

    // Kind-specific parameters.
    double cap = 0.0;        // Logistic: symmetric truncation level
    double ball = 0.0;       // CubicDecay: working-ball radius for the bounds

    /// Dominating function h with |g(t,p,q)| <= h(t) (on the working set for
    /// the memory form, which is unbounded globally).
    std::function<double(double)> growth_h = [](double) { return 0.0; };

    /// Modulus for the two-slot Lipschitz estimate, present only for the
    /// forms where it holds with respect to the phase-space seminorm.
    std::optional<std::function<double(double)>> lipschitz_q;

    double eval_scalar(double t, double p, double q) const;
    bool uses_history() const { return kind == Kind::Memory; }

    static Nonlinearity zero();
    /// g = q (pure memory); h_bound dominates |q| on the working set.
    static Nonlinearity memory(double h_bound);
    /// g = -p^3; bounds supplied on the ball |p| <= ball_radius.
    static Nonlinearity cubic_decay(double ball_radius);
    /// g = clamp(p(1-p), [-cap, cap]).
    static Nonlinearity logistic(double cap);
};

/// f(t,v,phi)(x) = g(t, v(x), (∫_{-inf}^0 phi(theta) dtheta)(x)).
Vector eval_f(const Nonlinearity& nl, double t, const Vector& v, const History& history);

/// Same with the history integral supplied by the caller (the solver keeps a
/// running integral; this is the shared evaluation path).
Vector eval_f_given_integral(const Nonlinearity& nl, double t, const Vector& v,
                             const Vector& history_integral);

// ---------------------------------------------------------------------------
// Control multimap Omega(v)
// ---------------------------------------------------------------------------

struct ControlMultimap {
    enum class Shape { Box, Ball, Finite };

    Shape shape = Shape::Box;
    double c = 0.0;                 // Box: componentwise interval [-c, c]
    double radius = 0.0;            // Ball: ||omega|| <= radius * (1 + ||v||)
    std::vector<Vector> vertices;   // Finite: polytope vertices (0 is always admitted)

    static ControlMultimap box(double c);
    static ControlMultimap ball(double radius);
    static ControlMultimap finite(std::vector<Vector> vertices);

    /// Growth constant R of ||Omega(v)|| <= R (1 + ||v||).
    double growth_R(const SpaceGrid& space) const;

    /// sup_{omega in Omega(v)} ||omega||.
    double set_bound(const Vector& v, const SpaceGrid& space) const;

    /// Membership test for emitted controls. The finite shape accepts the
    /// origin and the vertices; interior hull points are not certified.
    bool contains(const Vector& omega, const Vector& v, const SpaceGrid& space,
                  double tol = 1e-12) const;
};

// ---------------------------------------------------------------------------
// Selection strategies (step-function realizations of selections)
// ---------------------------------------------------------------------------

struct SelectionStrategy {
    enum class Kind { Zero, ConstantVertex, BangBang, FeedbackTable };

    Kind kind = Kind::Zero;
    int id = 0;
    std::string name = "zero";

    // ConstantVertex: signed fraction of the extreme level (box/ball) or an
    // explicit vertex (finite shape).
    double slevel = 0.0;
    Vector vertex;

    // BangBang: emits polarity * extreme when the spatial mean of v is >=
    // threshold, the opposite extreme otherwise.
    double threshold = 0.0;
    int polarity = 1;

    // FeedbackTable: piecewise-constant in t, (time, control) rows, sorted.
    std::vector<std::pair<double, Vector>> table;

    Vector apply(double t, const Vector& v, const ControlMultimap& omega,
                 const SpaceGrid& space) const;

    static SelectionStrategy zero_strategy();
};

/// Evaluates the strategy and verifies membership; throws MembershipError
/// naming t when the emitted control leaves the set.
Vector select_control(const ControlMultimap& omega, const SelectionStrategy& strategy,
                      double t, const Vector& v, const History& history,
                      const SpaceGrid& space);

/// Internal variant without the (unused by shipped strategies) history.
Vector select_control_at(const ControlMultimap& omega, const SelectionStrategy& strategy,
                         double t, const Vector& v, const SpaceGrid& space);

/// f + omega: one admissible right-hand-side value along a candidate state.
Vector rhs_selection(const Nonlinearity& nl, const ControlMultimap& omega,
                     const SelectionStrategy& strategy, double t, const Vector& v,
                     const History& history);

// ---------------------------------------------------------------------------
// Growth data
// ---------------------------------------------------------------------------

/// alpha for the sublinear growth check; mu is retained as metadata only (the
/// compactness modulus is not evaluable numerically).
struct GrowthData {
    bool alpha_constant = true;
    double alpha_value = 0.0;
    std::function<double(double)> alpha_fn;
    std::optional<double> mu_metadata;

    double alpha(double t) const { return alpha_constant ? alpha_value : alpha_fn(t); }
    double alpha_l1(double a, double b) const;
};

struct F3Sample {
    double t;
    Vector v;
    History history;
};

/// ||f + omega|| <= alpha(t) (1 + ||v|| + seminorm(history)) per sample.
Check check_F3(const Nonlinearity& nl, const ControlMultimap& omega, const GrowthData& growth,
               const FadingWeight& weight, const std::vector<F3Sample>& samples,
               double tol = 1e-9);

/// Deterministic strategy menu: zero first, then extreme constants, bang-bang
/// pairs and halved constant levels (box/ball), or the vertex list (finite),
/// truncated to the budget.
std::vector<SelectionStrategy> enumerate_selections(const ControlMultimap& omega, int budget);

}  // namespace mildsol
