#include "pnlattrib/step_path.hpp"

#include <cmath>
#include <stdexcept>

namespace pnlattrib {

StepPath::StepPath(GridPtr grid, std::vector<double> values, std::size_t dim)
    : grid_(std::move(grid)), dim_(dim), values_(std::move(values)) {
    if (!grid_) throw std::invalid_argument("StepPath: null grid");
    if (dim_ == 0) throw std::invalid_argument("StepPath: dim must be >= 1");
    if (values_.size() != grid_->size() * dim_)
        throw std::invalid_argument("StepPath: value count does not match grid size * dim");
}

StepPath StepPath::constant(GridPtr grid, double v, std::size_t dim) {
    std::vector<double> vals(grid->size() * dim, v);
    return StepPath(std::move(grid), std::move(vals), dim);
}

StepPath StepPath::from_jumps(GridPtr grid, std::span<const double> jump_times,
                              std::span<const double> values_after, double initial) {
    if (jump_times.size() != values_after.size())
        throw std::invalid_argument("StepPath::from_jumps: size mismatch");
    std::vector<double> vals(grid->size(), initial);
    for (std::size_t q = 0; q < jump_times.size(); ++q) {
        std::size_t k = grid->index_of(jump_times[q]);
        for (std::size_t j = k; j < grid->size(); ++j) vals[j] = values_after[q];
    }
    return StepPath(std::move(grid), std::move(vals), 1);
}

double StepPath::value(double t, std::size_t channel) const {
    return at_index(grid_->floor_index(t), channel);
}

double StepPath::left_limit(double t, std::size_t channel) const {
    if (t <= kTimeTol) throw std::domain_error("StepPath::left_limit: undefined at t <= 0");
    std::size_t k = grid_->floor_index(t);
    if (std::abs((*grid_)[k] - t) <= kTimeTol) {
        if (k == 0) throw std::domain_error("StepPath::left_limit: no point strictly before t");
        --k;
    }
    return at_index(k, channel);
}

StepPath StepPath::resampled(GridPtr grid) const {
    std::vector<double> vals(grid->size() * dim_);
    for (std::size_t k = 0; k < grid->size(); ++k) {
        std::size_t src = grid_->floor_index((*grid)[k]);
        for (std::size_t d = 0; d < dim_; ++d) vals[k * dim_ + d] = at_index(src, d);
    }
    return StepPath(std::move(grid), std::move(vals), dim_);
}

StepPath stop(const StepPath& p, double t) {
    if (t < -kTimeTol || t > p.grid().horizon() + kTimeTol)
        throw std::domain_error("stop: t outside [0, horizon]");
    std::size_t kt = p.grid().floor_index(std::max(t, 0.0));
    std::vector<double> vals(p.values().begin(), p.values().end());
    const std::size_t dim = p.dim();
    for (std::size_t k = kt + 1; k < p.points(); ++k)
        for (std::size_t d = 0; d < dim; ++d) vals[k * dim + d] = p.at_index(kt, d);
    return StepPath(p.grid_ptr(), std::move(vals), dim);
}

} // namespace pnlattrib
