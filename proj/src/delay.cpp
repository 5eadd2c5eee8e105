#include "pnlattrib/delay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnlattrib {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TimeMap TimeMap::identity() { return TimeMap(Kind::Identity); }

TimeMap TimeMap::floor_to_grid(std::vector<double> pts) {
    if (pts.empty() || std::abs(pts.front()) > kTimeTol)
        throw std::invalid_argument("TimeMap::floor_to_grid: grid must start at 0");
    pts.front() = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k)
        if (pts[k] <= pts[k - 1] + kTimeTol)
            throw std::invalid_argument("TimeMap::floor_to_grid: grid must be strictly increasing");
    TimeMap m(Kind::FloorToGrid);
    m.grid_ = std::move(pts);
    return m;
}

TimeMap TimeMap::lag_ramp(double lag) {
    if (lag < 0.0) throw std::invalid_argument("TimeMap::lag_ramp: lag must be >= 0");
    TimeMap m(Kind::LagRamp);
    m.lag_ = lag;
    return m;
}

TimeMap TimeMap::piecewise_linear(std::vector<double> knots, std::vector<double> values) {
    if (knots.size() != values.size() || knots.size() < 2)
        throw std::invalid_argument("TimeMap::piecewise_linear: need matching knots/values, >= 2");
    if (std::abs(knots.front()) > kTimeTol || std::abs(values.front()) > kTimeTol)
        throw std::invalid_argument("TimeMap::piecewise_linear: must pass through (0, 0)");
    for (std::size_t k = 1; k < knots.size(); ++k) {
        if (knots[k] <= knots[k - 1] + kTimeTol)
            throw std::invalid_argument("TimeMap::piecewise_linear: knots must increase");
        if (values[k] < values[k - 1] - kTimeTol)
            throw std::invalid_argument("TimeMap::piecewise_linear: values must be non-decreasing");
        if (values[k] > knots[k] + kTimeTol)
            throw std::invalid_argument("TimeMap::piecewise_linear: tau(t) <= t violated");
    }
    TimeMap m(Kind::PiecewiseLinear);
    m.knots_ = std::move(knots);
    m.vals_ = std::move(values);
    return m;
}

double TimeMap::operator()(double t) const {
    if (t < 0.0) t = 0.0;
    switch (kind_) {
        case Kind::Identity: return t;
        case Kind::FloorToGrid: {
            auto it = std::upper_bound(grid_.begin(), grid_.end(), t + kTimeTol);
            if (it == grid_.begin()) return 0.0;
            return *(it - 1);
        }
        case Kind::LagRamp: return std::max(0.0, t - lag_);
        case Kind::PiecewiseLinear: {
            if (t >= knots_.back()) {
                // extend with the last segment's slope, capped by tau <= t
                std::size_t n = knots_.size();
                double slope = (vals_[n - 1] - vals_[n - 2]) / (knots_[n - 1] - knots_[n - 2]);
                return std::min(t, vals_.back() + slope * (t - knots_.back()));
            }
            auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
            std::size_t k = static_cast<std::size_t>(std::distance(knots_.begin(), it)) - 1;
            double w = (t - knots_[k]) / (knots_[k + 1] - knots_[k]);
            return vals_[k] + w * (vals_[k + 1] - vals_[k]);
        }
    }
    return t;
}

double TimeMap::pseudo_inverse(double s) const {
    if (s <= kTimeTol) return 0.0;  // tau(0) = 0 >= s for s <= 0
    switch (kind_) {
        case Kind::Identity: return s;
        case Kind::FloorToGrid: {
            auto it = std::lower_bound(grid_.begin(), grid_.end(), s - kTimeTol);
            if (it == grid_.end()) return kInf;
            return *it;
        }
        case Kind::LagRamp: return s + lag_;
        case Kind::PiecewiseLinear: {
            for (std::size_t k = 0; k + 1 < knots_.size(); ++k) {
                if (vals_[k] >= s - kTimeTol) return knots_[k];
                if (vals_[k + 1] >= s - kTimeTol) {
                    double slope = (vals_[k + 1] - vals_[k]) / (knots_[k + 1] - knots_[k]);
                    return knots_[k] + (s - vals_[k]) / slope;
                }
            }
            std::size_t n = knots_.size();
            double slope = (vals_[n - 1] - vals_[n - 2]) / (knots_[n - 1] - knots_[n - 2]);
            if (slope <= kTimeTol) return kInf;
            return knots_.back() + (s - vals_.back()) / slope;
        }
    }
    return kInf;
}

std::vector<double> TimeMap::jump_points(double hi) const {
    std::vector<double> out;
    if (kind_ == Kind::FloorToGrid) {
        for (double g : grid_)
            if (g > kTimeTol && g <= hi + kTimeTol) out.push_back(g);
    }
    return out;
}

bool TimeMap::Image::subset_of(const Image& other) const {
    if (finite && other.finite) {
        std::size_t j = 0;
        for (double p : pts) {
            while (j < other.pts.size() && other.pts[j] < p - kTimeTol) ++j;
            if (j == other.pts.size() || std::abs(other.pts[j] - p) > kTimeTol) return false;
        }
        return true;
    }
    if (finite && !other.finite) {
        for (double p : pts)
            if (p > other.hi + kTimeTol) return false;
        return true;
    }
    if (!finite && other.finite) return hi <= kTimeTol;  // only the degenerate {0}
    return hi <= other.hi + kTimeTol;
}

TimeMap::Image TimeMap::image(double hi) const {
    Image img;
    if (kind_ == Kind::FloorToGrid) {
        img.finite = true;
        for (double g : grid_)
            if (g <= hi + kTimeTol) img.pts.push_back(g);
    } else {
        img.finite = false;
        img.hi = (*this)(hi);
    }
    return img;
}

double TimeMap::sup_lag(double hi) const {
    switch (kind_) {
        case Kind::Identity: return 0.0;
        case Kind::FloorToGrid: {
            double lag = 0.0, prev = 0.0;
            for (double g : grid_) {
                if (g > hi + kTimeTol) break;
                lag = std::max(lag, g - prev);
                prev = g;
            }
            return std::max(lag, hi - prev);
        }
        case Kind::LagRamp: return std::min(lag_, hi);
        case Kind::PiecewiseLinear: {
            double lag = 0.0;
            for (std::size_t k = 0; k < knots_.size(); ++k) {
                double t = std::min(knots_[k], hi);
                lag = std::max(lag, t - (*this)(t));
                if (knots_[k] >= hi) break;
            }
            lag = std::max(lag, hi - (*this)(hi));
            return lag;
        }
    }
    return 0.0;
}

Delay identity_delay(std::size_t m) {
    Delay d;
    d.maps.assign(m, TimeMap::identity());
    d.is_continuous = true;
    d.is_phased = true;  // vacuously: no component ever moves discretely
    d.id = "identity";
    return d;
}

RiskBasis apply_delay(const RiskBasis& basis, const Delay& delay) {
    const std::size_t m = basis.arity();
    if (delay.maps.size() != m)
        throw std::invalid_argument("apply_delay: delay component count does not match basis");
    if (basis.delayed())
        throw std::invalid_argument("apply_delay: composing delays is not supported");
    const double H = basis.grid().horizon();

    // refined grid: original points + crossing points of each tau with the
    // original grid + jump points of each tau
    std::vector<double> pts(basis.grid().points());
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> extra;
        for (double g : basis.grid().points()) {
            double u = delay.maps[i].pseudo_inverse(g);
            if (std::isfinite(u) && u <= H + kTimeTol) extra.push_back(std::min(u, H));
        }
        auto jumps = delay.maps[i].jump_points(H);
        extra.insert(extra.end(), jumps.begin(), jumps.end());
        pts = merge_points(pts, extra);
    }
    GridPtr grid = make_grid(std::move(pts));

    std::vector<Component> comps;
    comps.reserve(m);
    std::vector<std::vector<double>> eff(m);
    for (std::size_t i = 0; i < m; ++i) {
        const StepPath& src = basis.component(i).path;
        const std::size_t dim = src.dim();
        std::vector<double> vals(grid->size() * dim);
        eff[i].resize(grid->size());
        for (std::size_t k = 0; k < grid->size(); ++k) {
            double tau_t = delay.maps[i]((*grid)[k]);
            eff[i][k] = tau_t;
            for (std::size_t d = 0; d < dim; ++d) vals[k * dim + d] = src.value(tau_t, d);
        }
        comps.push_back({basis.component(i).label, StepPath(grid, std::move(vals), dim)});
    }
    RiskBasis out(grid, std::move(comps));
    out.set_effective(std::move(eff), delay.id);
    return out;
}

std::vector<Delay> make_refining_delays(DelayKind kind, int n_levels, double horizon,
                                        std::size_t m) {
    if (n_levels < 1) throw std::invalid_argument("make_refining_delays: n_levels must be >= 1");
    if (m < 1) throw std::invalid_argument("make_refining_delays: m must be >= 1");
    if (horizon <= 0.0) throw std::invalid_argument("make_refining_delays: horizon must be > 0");

    std::vector<Delay> out;
    out.reserve(static_cast<std::size_t>(n_levels));

    if (kind == DelayKind::ContinuousLag) {
        for (int n = 1; n <= n_levels; ++n) {
            Delay d;
            d.maps.assign(m, TimeMap::lag_ramp(std::ldexp(1.0, -n)));
            d.is_continuous = true;
            d.is_phased = false;
            d.id = "continuous-lag-L" + std::to_string(n);
            out.push_back(std::move(d));
        }
        return out;
    }

    // PhasedDyadic: sub-slot width 2^-B of the level mesh; odd numerators keep
    // the components' observation-point sets pairwise disjoint at all depths.
    int B = 4;
    while ((std::size_t{2} * m - 1) >= (std::size_t{1} << B)) ++B;
    std::vector<std::vector<double>> grids(m);  // cumulative per component
    for (std::size_t i = 0; i < m; ++i) grids[i].push_back(0.0);

    for (int n = 1; n <= n_levels; ++n) {
        const double step = std::ldexp(1.0, -n);
        Delay d;
        d.is_continuous = false;
        d.is_phased = true;
        d.id = "phased-dyadic-L" + std::to_string(n);
        std::vector<std::pair<double, int>> jump_owner;
        for (std::size_t i = 0; i < m; ++i) {
            const double offset = static_cast<double>(2 * i + 1) * std::ldexp(step, -B);
            std::vector<double> fresh;
            for (std::size_t k = 0;; ++k) {
                double x = static_cast<double>(k) * step + offset;
                if (x > horizon + kTimeTol) break;
                fresh.push_back(x);
            }
            grids[i] = merge_points(grids[i], fresh);
            d.maps.push_back(TimeMap::floor_to_grid(grids[i]));
            for (double g : grids[i])
                if (g > kTimeTol) jump_owner.emplace_back(g, static_cast<int>(i));
        }
        std::sort(jump_owner.begin(), jump_owner.end());
        d.witnessing.push_back(0.0);
        for (auto& [g, owner] : jump_owner) {
            d.witnessing.push_back(g);
            d.mover.push_back(owner);
        }
        if (d.witnessing.back() < horizon - kTimeTol) {
            d.witnessing.push_back(horizon);
            d.mover.push_back(-1);
        }
        out.push_back(std::move(d));
    }
    return out;
}

RefiningReport verify_refining(const std::vector<Delay>& delays, double horizon) {
    if (delays.empty()) throw std::invalid_argument("verify_refining: empty delay list");
    const std::size_t L = delays.size();
    const std::size_t m = delays.front().maps.size();
    for (const auto& d : delays)
        if (d.maps.size() != m)
            throw std::invalid_argument("verify_refining: inconsistent component counts");

    RefiningReport rep;
    rep.sup_lags.resize(L, std::vector<double>(m, 0.0));
    for (std::size_t n = 0; n < L; ++n)
        for (std::size_t i = 0; i < m; ++i)
            rep.sup_lags[n][i] = delays[n].maps[i].sup_lag(horizon);

    rep.images_nested = true;
    for (std::size_t n = 0; n + 1 < L && rep.images_nested; ++n)
        for (std::size_t i = 0; i < m; ++i) {
            if (!delays[n].maps[i].image(horizon).subset_of(delays[n + 1].maps[i].image(horizon))) {
                rep.images_nested = false;
                break;
            }
        }

    rep.lags_non_increasing = true;
    for (std::size_t n = 0; n + 1 < L; ++n)
        for (std::size_t i = 0; i < m; ++i)
            if (rep.sup_lags[n + 1][i] > rep.sup_lags[n][i] + kTimeTol) rep.lags_non_increasing = false;

    rep.lags_vanish = true;
    const double shrink = std::pow(0.75, static_cast<double>(L) - 1.0);
    for (std::size_t i = 0; i < m; ++i)
        if (rep.sup_lags.back()[i] > rep.sup_lags.front()[i] * shrink + kTimeTol)
            rep.lags_vanish = false;

    rep.pass = rep.images_nested && rep.lags_non_increasing && rep.lags_vanish;
    return rep;
}

} // namespace pnlattrib
