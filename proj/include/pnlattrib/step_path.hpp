#pragma once

#include "pnlattrib/time_grid.hpp"

#include <span>
#include <vector>

namespace pnlattrib {

/// Right-continuous piecewise-constant sample path on a TimeGrid: the
/// computational stand-in for a cadlag trajectory. Holds `dim` scalar channels
/// per grid point; the value on [s_k, s_{k+1}) is the value stored at s_k, and
/// the path is constant past the horizon.
class StepPath {
public:
    /// `values` is point-major: dim values for grid point 0, then point 1, ...
    StepPath(GridPtr grid, std::vector<double> values, std::size_t dim = 1);

    static StepPath constant(GridPtr grid, double v, std::size_t dim = 1);

    /// Scalar path that starts at `initial` and takes `values_after[q]` from
    /// `jump_times[q]` on. Jump times must be grid points.
    static StepPath from_jumps(GridPtr grid, std::span<const double> jump_times,
                               std::span<const double> values_after, double initial);

    const TimeGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t dim() const { return dim_; }
    std::size_t points() const { return grid_->size(); }

    /// Value at the largest grid point <= t.
    double value(double t, std::size_t channel = 0) const;

    /// Value at the largest grid point strictly < t. Throws for t <= 0.
    double left_limit(double t, std::size_t channel = 0) const;

    double at_index(std::size_t k, std::size_t channel = 0) const {
        return values_[k * dim_ + channel];
    }

    std::span<const double> values() const { return values_; }

    /// Same path re-read on another grid over the same horizon. Exact when
    /// `grid` contains every value-change point of this path.
    StepPath resampled(GridPtr grid) const;

private:
    GridPtr grid_;
    std::size_t dim_;
    std::vector<double> values_;
};

/// The stopped path: agrees with `p` on [0, t] and is frozen at p(t) after.
/// Right-continuity includes a jump at t itself. Requires 0 <= t <= horizon.
StepPath stop(const StepPath& p, double t);

} // namespace pnlattrib
