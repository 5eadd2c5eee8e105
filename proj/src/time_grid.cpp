#include "pnlattrib/time_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pnlattrib {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
    if (points_.size() < 2)
        throw std::invalid_argument("TimeGrid: need at least two points");
    if (std::abs(points_.front()) > kTimeTol)
        throw std::invalid_argument("TimeGrid: first point must be 0");
    points_.front() = 0.0;
    for (std::size_t k = 1; k < points_.size(); ++k) {
        if (points_[k] <= points_[k - 1] + kTimeTol)
            throw std::invalid_argument("TimeGrid: points must be strictly increasing");
    }
}

double TimeGrid::mesh() const {
    double m = 0.0;
    for (std::size_t k = 1; k < points_.size(); ++k)
        m = std::max(m, points_[k] - points_[k - 1]);
    return m;
}

std::size_t TimeGrid::floor_index(double t) const {
    if (t < -kTimeTol)
        throw std::domain_error("TimeGrid::floor_index: t < 0 (t=" + std::to_string(t) + ")");
    auto it = std::upper_bound(points_.begin(), points_.end(), t + kTimeTol);
    if (it == points_.begin()) return 0;
    return static_cast<std::size_t>(std::distance(points_.begin(), it)) - 1;
}

std::size_t TimeGrid::index_of(double t) const {
    std::size_t k = floor_index(t);
    if (std::abs(points_[k] - t) > kTimeTol)
        throw std::domain_error("TimeGrid::index_of: t=" + std::to_string(t) + " is not a grid point");
    return k;
}

bool TimeGrid::contains(double t) const {
    if (t < -kTimeTol || t > horizon() + kTimeTol) return false;
    std::size_t k = floor_index(std::max(t, 0.0));
    return std::abs(points_[k] - t) <= kTimeTol;
}

bool TimeGrid::subset_of(const TimeGrid& finer) const {
    for (double p : points_)
        if (!finer.contains(p)) return false;
    return true;
}

GridPtr make_grid(std::vector<double> points) {
    return std::make_shared<const TimeGrid>(std::move(points));
}

GridPtr make_dyadic_grid(double horizon, int mesh_exponent) {
    if (horizon <= 0.0) throw std::invalid_argument("make_dyadic_grid: horizon must be > 0");
    if (mesh_exponent < 0 || mesh_exponent > 30)
        throw std::invalid_argument("make_dyadic_grid: mesh exponent out of range");
    const double step = std::ldexp(1.0, -mesh_exponent);
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(horizon / step) + 2);
    for (std::size_t k = 0;; ++k) {
        double p = static_cast<double>(k) * step;
        if (p > horizon + kTimeTol) break;
        pts.push_back(p);
    }
    if (std::abs(pts.back() - horizon) > kTimeTol) pts.push_back(horizon);
    return make_grid(std::move(pts));
}

std::vector<double> merge_points(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    std::vector<double> dedup;
    dedup.reserve(out.size());
    for (double p : out) {
        if (dedup.empty() || p > dedup.back() + kTimeTol) dedup.push_back(p);
    }
    return dedup;
}

PartitionSequence::PartitionSequence(std::vector<GridPtr> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("PartitionSequence: empty");
    for (std::size_t n = 0; n + 1 < levels_.size(); ++n) {
        if (!levels_[n]->subset_of(*levels_[n + 1]))
            throw std::invalid_argument("PartitionSequence: level " + std::to_string(n + 1) +
                                        " does not refine level " + std::to_string(n));
        if (levels_[n + 1]->mesh() >= levels_[n]->mesh())
            throw std::invalid_argument("PartitionSequence: meshes must strictly decrease");
    }
}

PartitionSequence make_dyadic_partitions(double horizon, std::span<const int> exponents) {
    std::vector<GridPtr> levels;
    levels.reserve(exponents.size());
    for (int e : exponents) levels.push_back(make_dyadic_grid(horizon, e));
    return PartitionSequence(std::move(levels));
}

} // namespace pnlattrib
