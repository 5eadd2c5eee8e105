#pragma once

#include "pnlattrib/step_path.hpp"

#include <string>
#include <vector>

namespace pnlattrib {

/// One risk factor: a (possibly multi-channel) step path plus a label.
struct Component {
    std::string label;
    StepPath path;
};

/// Ordered tuple of risk factors sharing one master grid: one realization of
/// the risk basis X = (X_1, ..., X_m).
///
/// A basis produced by apply_delay additionally carries, per component, the
/// effective observation time tau_i(s_k) at every grid point. Surfaces read
/// deterministic time kernels at the effective time; for an undelayed basis
/// the effective time of a grid point is the point itself.
class RiskBasis {
public:
    RiskBasis(GridPtr grid, std::vector<Component> components);

    std::size_t arity() const { return components_.size(); }
    const TimeGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const Component& component(std::size_t i) const { return components_[i]; }
    const std::vector<Component>& components() const { return components_; }

    bool delayed() const { return !effective_.empty(); }
    const std::string& delay_id() const { return delay_id_; }

    /// Effective observation time of component i at grid index k.
    double effective_at_index(std::size_t i, std::size_t k) const {
        return effective_.empty() ? (*grid_)[k] : effective_[i][k];
    }

    /// Largest index k0 <= k whose effective time is <= cap. Requires the
    /// effective time at index 0 (always 0) to satisfy the cap.
    std::size_t capped_index(std::size_t i, std::size_t k, double cap) const;

    /// Attach per-component effective time curves (one value per grid point,
    /// each non-decreasing with eff[k] <= s_k). Used by apply_delay.
    void set_effective(std::vector<std::vector<double>> eff, std::string delay_id);

private:
    GridPtr grid_;
    std::vector<Component> components_;
    std::vector<std::vector<double>> effective_;
    std::string delay_id_ = "identity";
};

/// Component-wise asynchronous stopping (X_1^{t_1}, ..., X_m^{t_m}).
RiskBasis stop_multi(const RiskBasis& basis, std::span<const double> times);

} // namespace pnlattrib
