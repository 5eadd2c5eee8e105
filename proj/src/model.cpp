#include "pnlattrib/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pnlattrib {

PiecewiseRate::PiecewiseRate(double constant_rate) : knots_{0.0}, rates_{constant_rate} {
    if (constant_rate < 0.0) throw std::invalid_argument("PiecewiseRate: rate must be >= 0");
}

PiecewiseRate::PiecewiseRate(std::vector<double> knots, std::vector<double> rates)
    : knots_(std::move(knots)), rates_(std::move(rates)) {
    if (knots_.empty() || knots_.size() != rates_.size())
        throw std::invalid_argument("PiecewiseRate: knots/rates size mismatch");
    if (knots_.front() != 0.0) throw std::invalid_argument("PiecewiseRate: first knot must be 0");
    for (std::size_t k = 1; k < knots_.size(); ++k)
        if (knots_[k] <= knots_[k - 1])
            throw std::invalid_argument("PiecewiseRate: knots must strictly increase");
    for (double r : rates_)
        if (r < 0.0) throw std::invalid_argument("PiecewiseRate: rates must be >= 0");
}

double PiecewiseRate::at(double t) const {
    if (t <= 0.0) return rates_.front();
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    return rates_[static_cast<std::size_t>(std::distance(knots_.begin(), it)) - 1];
}

double PiecewiseRate::integral(double a, double b) const {
    if (b <= a) return 0.0;
    a = std::max(a, 0.0);
    double total = 0.0;
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        const double lo = std::max(a, knots_[k]);
        const double hi = (k + 1 < knots_.size()) ? std::min(b, knots_[k + 1]) : b;
        if (hi > lo) total += rates_[k] * (hi - lo);
    }
    return total;
}

double PiecewiseRate::inverse_integral(double target) const {
    if (target <= 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t k = 0; k < knots_.size(); ++k) {
        const bool last = (k + 1 == knots_.size());
        const double len = last ? std::numeric_limits<double>::infinity() : knots_[k + 1] - knots_[k];
        const double piece = rates_[k] * len;
        if (acc + piece >= target) {
            if (rates_[k] <= 0.0) return std::numeric_limits<double>::infinity();
            return knots_[k] + (target - acc) / rates_[k];
        }
        acc += piece;
    }
    return std::numeric_limits<double>::infinity();
}

bool PiecewiseRate::is_zero() const {
    for (double r : rates_)
        if (r != 0.0) return false;
    return true;
}

void ModelParams::validate() const {
    if (sigma < 0.0) throw std::invalid_argument("ModelParams: sigma must be >= 0");
    if (T <= 0.0) throw std::invalid_argument("ModelParams: T must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("ModelParams: alpha must be >= 0");
    if (policies.empty()) throw std::invalid_argument("ModelParams: need at least one policy");
}

} // namespace pnlattrib
