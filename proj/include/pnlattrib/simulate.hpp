#pragma once

#include "pnlattrib/model.hpp"
#include "pnlattrib/risk_basis.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pnlattrib {

enum class Measure { P, Q };

/// One seeded realization of the risk basis plus the auxiliary paths the
/// surfaces and oracles read. Component 0 of `basis` is Phi (or Phi - Phi*
/// for the first-order model); component 1 is the vector counting component
/// N = (N_j)_j (or N_j - Lambda*_j).
struct SimulatedBasis {
    RiskBasis basis;
    StepPath w;             // driving Brownian path (identically 0 when sigma = 0)
    StepPath kappa;         // numeraire path, kappa(0) = 1
    StepPath counting;      // N_j per channel
    StepPath survival;      // I_j = 1 - N_j per channel
    StepPath comp_p;        // C_j under P-hazards
    StepPath comp_q;        // C_j under Q-hazards
    StepPath comp_star;     // C*_j under first-order hazards
    std::vector<double> death_times;  // grid-snapped; +infinity when none
    std::uint64_t seed = 0;
};

/// Grid skeleton of dPhi = drift dt + sigma dW: W a Gaussian random walk with
/// Normal(0, ds) increments, Phi(t) = drift*t + sigma*W(t). Deterministic in
/// (params, grid, seed). Returns (Phi, W).
std::pair<StepPath, StepPath> simulate_phi(const ModelParams& params, const GridPtr& grid,
                                           std::uint64_t seed, double drift);

/// kappa(t) = exp(Phi(t) - sigma^2 t / 2): the stochastic exponential of a
/// continuous Phi, evaluated on the grid.
StepPath kappa_from_phi(const StepPath& phi, double sigma);

struct DeathSim {
    StepPath counting;
    StepPath survival;
    StepPath comp_p;
    StepPath comp_q;
    StepPath comp_star;
    std::vector<double> death_times;
};

/// Inverse-hazard sampling of the death times under the chosen measure's
/// hazards, snapped to the next grid point on the right. Collisions (two
/// deaths at one grid point) are resampled with perturbed substreams so that
/// no two counting channels jump simultaneously. Compensators use the exact
/// hazard integrals against the realized survival indicators.
DeathSim simulate_deaths(const ModelParams& params, const GridPtr& grid, std::uint64_t seed,
                         Measure measure);

/// Basis X = (Phi, N) for the risk-neutral (measure Q, drift mu) or
/// standard-deviation (measure P, drift r) examples.
SimulatedBasis simulate_diffusion_basis(const ModelParams& params, const GridPtr& grid,
                                        std::uint64_t seed, Measure measure);

/// Basis X = (Phi - Phi*, (N_j - Lambda*_j)_j) for the first-order example;
/// Phi is the deterministic phi_rate integral, deaths are drawn under P.
SimulatedBasis simulate_first_order_basis(const ModelParams& params, const GridPtr& grid,
                                          std::uint64_t seed);

} // namespace pnlattrib
