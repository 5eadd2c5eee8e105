#pragma once

#include "pnlattrib/risk_basis.hpp"

#include <string>
#include <vector>

namespace pnlattrib {

/// A single delay component tau_i: non-decreasing, right-continuous,
/// tau(t) <= t, tau(0) = 0. Observation lags and time quantization.
class TimeMap {
public:
    static TimeMap identity();
    /// Floor to a finite observation grid (must start at 0, strictly increasing).
    static TimeMap floor_to_grid(std::vector<double> pts);
    /// max(0, t - lag): a constant lag with a linear ramp out of 0.
    static TimeMap lag_ramp(double lag);
    /// Continuous piecewise-linear map through (knots[q], values[q]).
    static TimeMap piecewise_linear(std::vector<double> knots, std::vector<double> values);

    double operator()(double t) const;

    /// Generalized inverse inf{u >= 0 : tau(u) >= s}. Returns +infinity when
    /// s is never attained nor exceeded.
    double pseudo_inverse(double s) const;

    bool is_identity() const { return kind_ == Kind::Identity; }
    bool continuous() const { return kind_ != Kind::FloorToGrid; }

    /// Times in (0, hi] at which the map jumps (empty for continuous maps).
    std::vector<double> jump_points(double hi) const;

    /// Image tau([0, hi]): a finite point set for floor maps, the interval
    /// [0, tau(hi)] otherwise.
    struct Image {
        bool finite = false;
        std::vector<double> pts;  // when finite
        double hi = 0.0;          // when interval [0, hi]
        bool subset_of(const Image& other) const;
    };
    Image image(double hi) const;

    /// sup over [0, hi] of the lag t - tau(t).
    double sup_lag(double hi) const;

private:
    enum class Kind { Identity, FloorToGrid, LagRamp, PiecewiseLinear };
    TimeMap(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<double> grid_;   // FloorToGrid
    double lag_ = 0.0;           // LagRamp
    std::vector<double> knots_;  // PiecewiseLinear
    std::vector<double> vals_;
};

/// Componentwise delay tau = (tau_1, ..., tau_m). A phased delay carries the
/// witnessing partition on whose intervals at most one component moves.
struct Delay {
    std::vector<TimeMap> maps;
    bool is_continuous = false;
    bool is_phased = false;
    std::vector<double> witnessing;  // 0 = w_0 < w_1 < ... (phased only)
    /// Component index moving on (w_l, w_{l+1}], -1 when none (phased only).
    std::vector<int> mover;
    std::string id = "identity";
};

Delay identity_delay(std::size_t m);

/// The observed basis X diamond tau = (X_1 o tau_1, ..., X_m o tau_m).
/// The returned basis lives on a refined grid containing the original points,
/// every point where some tau_i crosses an original grid point, and the jump
/// points of the tau_i; it carries the effective observation time curves.
RiskBasis apply_delay(const RiskBasis& basis, const Delay& delay);

enum class DelayKind { PhasedDyadic, ContinuousLag };

/// Refining sequence of delays increasing to identity, n_levels entries.
///
/// PhasedDyadic: component i floors to the cumulative union over j <= level of
/// the staggered dyadic grids {(k + (2i+1)/2^B) 2^-j}, B >= 4. Components own
/// pairwise disjoint observation points (odd numerators), so every level is
/// phased; cumulative unions give the image nesting of a refining sequence,
/// and sup-lags halve per level.
///
/// ContinuousLag: every component is max(0, t - 2^-level); continuous.
std::vector<Delay> make_refining_delays(DelayKind kind, int n_levels, double horizon,
                                        std::size_t m);

/// Diagnostic report for a candidate refining sequence.
struct RefiningReport {
    std::vector<std::vector<double>> sup_lags;  // [level][component]
    bool images_nested = false;
    bool lags_non_increasing = false;
    bool lags_vanish = false;  // final <= first * 0.75^(levels-1)
    bool pass = false;
};

RefiningReport verify_refining(const std::vector<Delay>& delays, double horizon);

} // namespace pnlattrib
