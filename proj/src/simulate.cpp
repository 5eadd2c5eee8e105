#include "pnlattrib/simulate.hpp"

#include "pnlattrib/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnlattrib {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// sub-seed tags so the phi and death draws are independent streams
constexpr std::uint64_t kPhiStream = 0x0125;
constexpr std::uint64_t kDeathStream = 0x0347;
}  // namespace

std::pair<StepPath, StepPath> simulate_phi(const ModelParams& params, const GridPtr& grid,
                                           std::uint64_t seed, double drift) {
    const std::size_t n = grid->size();
    std::vector<double> w(n, 0.0), phi(n, 0.0);
    Rng rng = Rng::substream(seed, kPhiStream);
    for (std::size_t k = 1; k < n; ++k) {
        const double ds = (*grid)[k] - (*grid)[k - 1];
        w[k] = w[k - 1] + std::sqrt(ds) * rng.normal();
        phi[k] = drift * (*grid)[k] + params.sigma * w[k];
    }
    return {StepPath(grid, std::move(phi)), StepPath(grid, std::move(w))};
}

StepPath kappa_from_phi(const StepPath& phi, double sigma) {
    const std::size_t n = phi.points();
    std::vector<double> k(n);
    for (std::size_t j = 0; j < n; ++j)
        k[j] = std::exp(phi.at_index(j) - 0.5 * sigma * sigma * phi.grid()[j]);
    return StepPath(phi.grid_ptr(), std::move(k));
}

DeathSim simulate_deaths(const ModelParams& params, const GridPtr& grid, std::uint64_t seed,
                         Measure measure) {
    const std::size_t n = grid->size();
    const std::size_t np = params.policies.size();
    const double H = grid->horizon();

    // inverse-hazard sampling, snapped up to the grid
    std::vector<double> deaths(np, kInf);
    auto snap_up = [&](double t) -> double {
        if (t > H + kTimeTol) return kInf;
        std::size_t k = grid->floor_index(std::max(t, 0.0));
        if ((*grid)[k] >= t - kTimeTol) return (*grid)[k];
        return (k + 1 < n) ? (*grid)[k + 1] : kInf;
    };
    for (std::size_t j = 0; j < np; ++j) {
        const PiecewiseRate& haz = (measure == Measure::Q) ? params.policies[j].hazard_q
                                                           : params.policies[j].hazard;
        Rng rng = Rng::substream(seed, kDeathStream + j);
        deaths[j] = snap_up(haz.inverse_integral(rng.exponential()));
    }
    // resample collisions (no simultaneous jumps); deterministic in the seed
    for (std::size_t j = 0; j < np; ++j) {
        for (std::uint64_t attempt = 1;; ++attempt) {
            bool collides = false;
            for (std::size_t i = 0; i < j; ++i)
                if (std::isfinite(deaths[j]) && std::abs(deaths[i] - deaths[j]) <= kTimeTol)
                    collides = true;
            if (!collides) break;
            const PiecewiseRate& haz = (measure == Measure::Q) ? params.policies[j].hazard_q
                                                               : params.policies[j].hazard;
            Rng rng = Rng::substream(seed, kDeathStream + j + 977 * attempt);
            deaths[j] = snap_up(haz.inverse_integral(rng.exponential()));
            if (attempt > 1000)
                throw std::runtime_error("simulate_deaths: could not resolve jump collisions");
        }
    }

    std::vector<double> cnt(n * np, 0.0), surv(n * np, 1.0);
    std::vector<double> cp(n * np, 0.0), cq(n * np, 0.0), cs(n * np, 0.0);
    for (std::size_t j = 0; j < np; ++j) {
        const auto& pol = params.policies[j];
        for (std::size_t k = 0; k < n; ++k) {
            const double t = (*grid)[k];
            const bool dead = t >= deaths[j] - kTimeTol;
            cnt[k * np + j] = dead ? 1.0 : 0.0;
            surv[k * np + j] = dead ? 0.0 : 1.0;
            const double upto = std::min(t, deaths[j]);
            cp[k * np + j] = pol.hazard.integral(0.0, upto);
            cq[k * np + j] = pol.hazard_q.integral(0.0, upto);
            cs[k * np + j] = pol.hazard_star.integral(0.0, upto);
        }
    }
    DeathSim out{StepPath(grid, std::move(cnt), np), StepPath(grid, std::move(surv), np),
                 StepPath(grid, std::move(cp), np),  StepPath(grid, std::move(cq), np),
                 StepPath(grid, std::move(cs), np),  std::move(deaths)};
    return out;
}

SimulatedBasis simulate_diffusion_basis(const ModelParams& params, const GridPtr& grid,
                                        std::uint64_t seed, Measure measure) {
    params.validate();
    const double drift = (measure == Measure::Q) ? params.mu : params.r;
    auto [phi, w] = simulate_phi(params, grid, seed, drift);
    StepPath kappa = kappa_from_phi(phi, params.sigma);
    DeathSim d = simulate_deaths(params, grid, seed, measure);
    RiskBasis basis(grid, {{"phi", phi}, {"N", d.counting}});
    return SimulatedBasis{std::move(basis), std::move(w),      std::move(kappa),
                          std::move(d.counting),               std::move(d.survival),
                          std::move(d.comp_p),                 std::move(d.comp_q),
                          std::move(d.comp_star),              std::move(d.death_times),
                          seed};
}

SimulatedBasis simulate_first_order_basis(const ModelParams& params, const GridPtr& grid,
                                          std::uint64_t seed) {
    params.validate();
    const std::size_t n = grid->size();
    const std::size_t np = params.policies.size();

    // X_1 = Phi - Phi* with dPhi = phi dt: exact integrals on the grid
    std::vector<double> x1(n), phiv(n), kap(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (*grid)[k];
        phiv[k] = params.phi_rate.integral(0.0, t);
        x1[k] = phiv[k] - params.phi_star.integral(0.0, t);
        kap[k] = std::exp(phiv[k]);
    }
    DeathSim d = simulate_deaths(params, grid, seed, Measure::P);

    std::vector<double> x2(n * np);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (*grid)[k];
        for (std::size_t j = 0; j < np; ++j)
            x2[k * np + j] =
                d.counting.at_index(k, j) - params.policies[j].hazard_star.integral(0.0, t);
    }

    RiskBasis basis(grid, {{"phi", StepPath(grid, std::move(x1))},
                           {"N", StepPath(grid, std::move(x2), np)}});
    return SimulatedBasis{std::move(basis),
                          StepPath::constant(grid, 0.0),
                          StepPath(grid, std::move(kap)),
                          std::move(d.counting),
                          std::move(d.survival),
                          std::move(d.comp_p),
                          std::move(d.comp_q),
                          std::move(d.comp_star),
                          std::move(d.death_times),
                          seed};
}

} // namespace pnlattrib
