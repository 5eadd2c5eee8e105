#include "pnlattrib/integrals.hpp"

#include <stdexcept>

namespace pnlattrib {

namespace {

std::pair<std::size_t, std::size_t> window_indices(const TimeGrid& grid, double a, double b) {
    if (a < -kTimeTol || b > grid.horizon() + kTimeTol || b < a - kTimeTol)
        throw std::domain_error("integral window outside the grid");
    return {grid.index_of(a), grid.index_of(b)};
}

} // namespace

double ito_sum(const StepPath& integrand, const StepPath& w, double a, double b,
               std::size_t channel) {
    if (integrand.grid_ptr().get() != w.grid_ptr().get())
        throw std::invalid_argument("ito_sum: integrand and W must share a grid");
    auto [ka, kb] = window_indices(integrand.grid(), a, b);
    double total = 0.0;
    for (std::size_t k = ka; k < kb; ++k)
        total += integrand.at_index(k, channel) * (w.at_index(k + 1) - w.at_index(k));
    return total;
}

double lebesgue_sum(const StepPath& integrand, double a, double b, std::size_t channel) {
    const TimeGrid& grid = integrand.grid();
    auto [ka, kb] = window_indices(grid, a, b);
    double total = 0.0;
    for (std::size_t k = ka; k < kb; ++k)
        total += integrand.at_index(k, channel) * (grid[k + 1] - grid[k]);
    return total;
}

double jump_sum(const StepPath& integrand, const StepPath& counting, double a, double b,
                std::size_t integrand_channel, std::size_t counting_channel, bool left_limit) {
    if (integrand.grid_ptr().get() != counting.grid_ptr().get())
        throw std::invalid_argument("jump_sum: paths must share a grid");
    auto [ka, kb] = window_indices(integrand.grid(), a, b);
    double total = 0.0;
    for (std::size_t k = ka + 1; k <= kb; ++k) {
        const double dn =
            counting.at_index(k, counting_channel) - counting.at_index(k - 1, counting_channel);
        if (dn != 0.0) {
            const double f = left_limit ? integrand.at_index(k - 1, integrand_channel)
                                        : integrand.at_index(k, integrand_channel);
            total += f * dn;
        }
    }
    return total;
}

} // namespace pnlattrib
