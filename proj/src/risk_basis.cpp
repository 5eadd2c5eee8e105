#include "pnlattrib/risk_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace pnlattrib {

RiskBasis::RiskBasis(GridPtr grid, std::vector<Component> components)
    : grid_(std::move(grid)), components_(std::move(components)) {
    if (!grid_) throw std::invalid_argument("RiskBasis: null grid");
    if (components_.empty()) throw std::invalid_argument("RiskBasis: need at least one component");
    for (const auto& c : components_) {
        if (c.path.grid_ptr().get() != grid_.get())
            throw std::invalid_argument("RiskBasis: component '" + c.label +
                                        "' does not share the master grid");
    }
}

std::size_t RiskBasis::capped_index(std::size_t i, std::size_t k, double cap) const {
    if (effective_.empty()) {
        // identity: effective time of index k is the grid point itself
        if ((*grid_)[k] <= cap + kTimeTol) return k;
        return grid_->floor_index(cap);
    }
    const auto& eff = effective_[i];
    if (eff[k] <= cap + kTimeTol) return k;
    // eff is non-decreasing; find the last index <= k with eff <= cap
    auto begin = eff.begin();
    auto it = std::upper_bound(begin, begin + static_cast<std::ptrdiff_t>(k) + 1, cap + kTimeTol);
    if (it == begin)
        throw std::domain_error("RiskBasis::capped_index: no observation time within cap");
    return static_cast<std::size_t>(std::distance(begin, it)) - 1;
}

void RiskBasis::set_effective(std::vector<std::vector<double>> eff, std::string delay_id) {
    if (eff.size() != components_.size())
        throw std::invalid_argument("RiskBasis::set_effective: one curve per component required");
    for (const auto& curve : eff) {
        if (curve.size() != grid_->size())
            throw std::invalid_argument("RiskBasis::set_effective: curve size must match grid");
        for (std::size_t k = 0; k < curve.size(); ++k) {
            if (curve[k] > (*grid_)[k] + kTimeTol)
                throw std::invalid_argument("RiskBasis::set_effective: effective time exceeds clock time");
            if (k > 0 && curve[k] < curve[k - 1] - kTimeTol)
                throw std::invalid_argument("RiskBasis::set_effective: effective time must be non-decreasing");
        }
    }
    effective_ = std::move(eff);
    delay_id_ = std::move(delay_id);
}

RiskBasis stop_multi(const RiskBasis& basis, std::span<const double> times) {
    if (times.size() != basis.arity())
        throw std::invalid_argument("stop_multi: times count does not match component count");
    std::vector<Component> comps;
    comps.reserve(basis.arity());
    for (std::size_t i = 0; i < basis.arity(); ++i)
        comps.push_back({basis.component(i).label, stop(basis.component(i).path, times[i])});
    RiskBasis out(basis.grid_ptr(), std::move(comps));
    if (basis.delayed()) {
        std::vector<std::vector<double>> eff;
        eff.reserve(basis.arity());
        for (std::size_t i = 0; i < basis.arity(); ++i) {
            std::vector<double> curve(basis.grid().size());
            for (std::size_t k = 0; k < curve.size(); ++k) curve[k] = basis.effective_at_index(i, k);
            eff.push_back(std::move(curve));
        }
        out.set_effective(std::move(eff), basis.delay_id());
    }
    return out;
}

} // namespace pnlattrib
