#pragma once

#include "pnlattrib/model.hpp"
#include "pnlattrib/surface.hpp"

namespace pnlattrib {

/// U(t1,t2) = sum_j p_j - sum_j b_j e^{-(T-t1)(mu-sigma^2)} / kappa(t1)
///            * e^{-int_{t2}^T lambda_j^Q} I_j(t2),
/// with kappa read off the basis Phi component. Expects a basis simulated
/// under the Q drift mu.
std::unique_ptr<RevaluationSurface> make_risk_neutral_surface(const ModelParams& params);

/// Expectation part as above with (r, lambda_j) plus the safety margin
/// alpha * sqrt(Var[A(0)-L(0) | sigma(Phi^{t1}, N^{t2})]); the variance is
/// floored at 0 before the square root. Expects a basis under the P drift r.
std::unique_ptr<RevaluationSurface> make_std_dev_surface(const ModelParams& params);

/// First-order basis surface, Doleans-Dade ratio form:
/// U(t1,t2) = sum_j p_j - sum_j b_j I_j(t2) e^{-X_1(t1)} e^{-int_0^T phi*}
///            * e^{-int_{t2}^T lambda*_j},
/// where the basis carries X_1 = Phi - Phi* and X_{2,j} = N_j - Lambda*_j.
std::unique_ptr<RevaluationSurface> make_first_order_surface(const ModelParams& params);

/// Diagnostic conditional standard deviation V(s) on the basis grid
/// (the safety margin is alpha * V).
StepPath variance_path(const ModelParams& params, const RiskBasis& basis);

} // namespace pnlattrib
