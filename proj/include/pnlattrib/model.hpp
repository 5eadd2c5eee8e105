#pragma once

#include <limits>
#include <vector>

namespace pnlattrib {

/// Nonnegative piecewise-constant rate in 1/yr (hazard or interest intensity).
/// rate(t) = rates[k] on [knots[k], knots[k+1]), the last piece extending to
/// infinity. Integrals are exact.
class PiecewiseRate {
public:
    PiecewiseRate() : knots_{0.0}, rates_{0.0} {}
    /*implicit*/ PiecewiseRate(double constant_rate);
    PiecewiseRate(std::vector<double> knots, std::vector<double> rates);

    double at(double t) const;
    /// Exact integral over [a, b] (0 when b <= a).
    double integral(double a, double b) const;
    /// Smallest t with integral(0, t) >= target; +infinity when never reached.
    double inverse_integral(double target) const;
    bool is_zero() const;
    bool is_constant() const { return rates_.size() == 1; }
    double constant_value() const { return rates_.front(); }

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& rates() const { return rates_; }

private:
    std::vector<double> knots_;
    std::vector<double> rates_;
};

/// One endowment policy: lump-sum premium, survival benefit at T, and the
/// real-world / valuation / first-order hazards.
struct Policy {
    double premium = 0.0;
    double benefit = 0.0;
    PiecewiseRate hazard;       // lambda_j under P
    PiecewiseRate hazard_q;     // lambda_j under Q
    PiecewiseRate hazard_star;  // lambda*_j, first-order basis
};

struct ModelParams {
    double mu = 0.0;     // drift of Phi under Q (1/yr)
    double r = 0.0;      // drift of Phi under P (1/yr)
    double sigma = 0.0;  // volatility (1/sqrt yr)
    std::vector<Policy> policies;
    PiecewiseRate phi_star;  // technical interest intensity phi*
    PiecewiseRate phi_rate;  // realized deterministic intensity phi (first-order example)
    double T = 1.0;          // contract horizon (yr)
    double alpha = 0.0;      // safety loading

    void validate() const;  // throws std::invalid_argument
};

} // namespace pnlattrib
