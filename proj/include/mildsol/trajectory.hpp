#pragma once

#include <optional>

#include "mildsol/phase_space.hpp"
#include "mildsol/types.hpp"

namespace mildsol {

/// One continuous piece of the solution on [start, end] (right limit stored
/// at the start when the interval opens with an impulse, left limit at the
/// end).
struct Segment {
    std::vector<double> times;
    std::vector<Vector> values;

    double start() const { return times.front(); }
    double end() const { return times.back(); }
};

struct JumpRecord {
    double time;
    Vector left;
    Vector right;
    Vector impulse;  // right == left + impulse, exactly
};

/// Piecewise-continuous solution on [t0, T] paired with its initial history.
/// Values at impulse times follow the left-limit convention; the right limits
/// live in the jump records and in the first node of the following segment.
class Trajectory {
public:
    Trajectory(History initial_history, double t0);

    void append_segment(Segment seg, std::optional<JumpRecord> jump_at_start);

    double t0() const { return t0_; }
    double end_time() const;
    const History& initial_history() const { return initial_history_; }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::vector<JumpRecord>& jumps() const { return jumps_; }
    const SpaceGrid& space() const { return *initial_history_.space; }
    std::shared_ptr<const SpaceGrid> space_ptr() const { return initial_history_.space; }
    int dim() const { return initial_history_.dim(); }

    /// y(t) with the left-limit convention; for t <= t0 reads the initial
    /// history. Linear interpolation between grid nodes.
    Vector value(double t) const;

    /// Right limit y(t+) (differs from value(t) only at impulse times).
    Vector value_right(double t) const;

    /// sup_{t0 <= s <= t} ||y(s)|| over stored nodes (both limits at jumps).
    double sup_norm_up_to(double t) const;

    /// All stored (time, value) nodes in [a, b] in order, jump times appearing
    /// twice (left then right). Used for stitching histories and quadrature.
    void collect_nodes(double a, double b, std::vector<double>& ts,
                       std::vector<Vector>& vs) const;

private:
    History initial_history_;
    double t0_;
    std::vector<Segment> segments_;
    std::vector<JumpRecord> jumps_;
};

/// Concatenation map: extends the solution-so-far by the fixed point of one
/// interval, recording the jump at the seam. (Mutates xi; returns it for
/// chaining.)
Trajectory& glue(Trajectory& xi, Segment q, std::optional<JumpRecord> jump_at_start);

}  // namespace mildsol
