#pragma once

#include "pnlattrib/step_path.hpp"

namespace pnlattrib {

/// Left-point (Ito) sum: sum over grid points s_k in [a, b) of
/// f(s_k) * (W(s_{k+1}) - W(s_k)). Window endpoints must be grid points of
/// both paths; the paths must share the grid.
double ito_sum(const StepPath& integrand, const StepPath& w, double a, double b,
               std::size_t channel = 0);

/// Left-point Riemann sum: sum over grid points s_k in [a, b) of
/// f(s_k) * (s_{k+1} - s_k).
double lebesgue_sum(const StepPath& integrand, double a, double b, std::size_t channel = 0);

/// Sum of the integrand at the jump times of the counting channel in (a, b].
/// `left_limit` selects the predictable version f(u-); otherwise f(u).
double jump_sum(const StepPath& integrand, const StepPath& counting, double a, double b,
                std::size_t integrand_channel = 0, std::size_t counting_channel = 0,
                bool left_limit = true);

} // namespace pnlattrib
