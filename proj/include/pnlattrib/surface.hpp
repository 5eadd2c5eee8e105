#pragma once

#include "pnlattrib/risk_basis.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>

namespace pnlattrib {

/// Surface evaluator bound to one basis realization: arguments are indices
/// into the basis grid, one per component. This is the fast path the
/// sequential-updating engine drives.
class PreparedSurface {
public:
    virtual ~PreparedSurface() = default;
    virtual double eval_indices(std::span<const std::size_t> idx) const = 0;
};

/// Revaluation surface U(t_1, ..., t_m) = rho((X_1^{t_1}, ..., X_m^{t_m})) for
/// a realized basis. evaluate() depends on component i only through its
/// stopped path at t_i and is constant in t_i past the contract horizon;
/// time arguments clamp to the nearest not-greater grid point.
class RevaluationSurface {
public:
    virtual ~RevaluationSurface() = default;

    virtual std::size_t arity() const = 0;
    virtual double horizon() const = 0;
    virtual const std::string& label() const = 0;

    virtual double evaluate(const RiskBasis& basis, std::span<const double> times) const = 0;

    /// Bind to one basis; the default wraps evaluate().
    virtual std::unique_ptr<PreparedSurface> prepare(const RiskBasis& basis) const;

    /// Diagonal R(t) = U(t, ..., t).
    double diagonal(const RiskBasis& basis, double t) const;
};

/// Adapter for a user-supplied functional of the stopped basis. Times are
/// clamped to the horizon before stopping, so the surface is constant past it.
/// A non-finite functional value raises std::runtime_error.
std::unique_ptr<RevaluationSurface> make_black_box_surface(
    std::size_t m, double horizon, std::string label,
    std::function<double(const RiskBasis&)> functional);

} // namespace pnlattrib
