#include "pnlattrib/surface.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pnlattrib {

namespace {

class IndexWrapper final : public PreparedSurface {
public:
    IndexWrapper(const RevaluationSurface& s, const RiskBasis& b) : surface_(s), basis_(b) {}

    double eval_indices(std::span<const std::size_t> idx) const override {
        std::vector<double> times(idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) times[i] = basis_.grid()[idx[i]];
        return surface_.evaluate(basis_, times);
    }

private:
    const RevaluationSurface& surface_;
    const RiskBasis& basis_;
};

class BlackBoxSurface final : public RevaluationSurface {
public:
    BlackBoxSurface(std::size_t m, double horizon, std::string label,
                    std::function<double(const RiskBasis&)> functional)
        : m_(m), horizon_(horizon), label_(std::move(label)), functional_(std::move(functional)) {
        if (m_ == 0) throw std::invalid_argument("black-box surface: m must be >= 1");
        if (!functional_) throw std::invalid_argument("black-box surface: null functional");
    }

    std::size_t arity() const override { return m_; }
    double horizon() const override { return horizon_; }
    const std::string& label() const override { return label_; }

    double evaluate(const RiskBasis& basis, std::span<const double> times) const override {
        if (basis.arity() != m_ || times.size() != m_)
            throw std::invalid_argument("black-box surface: arity mismatch");
        std::vector<double> clamped(times.begin(), times.end());
        for (double& t : clamped) t = std::min(t, horizon_);
        const double v = functional_(stop_multi(basis, clamped));
        if (!std::isfinite(v))
            throw std::runtime_error("black-box surface '" + label_ +
                                     "': functional returned a non-finite value");
        return v;
    }

private:
    std::size_t m_;
    double horizon_;
    std::string label_;
    std::function<double(const RiskBasis&)> functional_;
};

} // namespace

std::unique_ptr<PreparedSurface> RevaluationSurface::prepare(const RiskBasis& basis) const {
    return std::make_unique<IndexWrapper>(*this, basis);
}

double RevaluationSurface::diagonal(const RiskBasis& basis, double t) const {
    std::vector<double> times(arity(), t);
    return evaluate(basis, times);
}

std::unique_ptr<RevaluationSurface> make_black_box_surface(
    std::size_t m, double horizon, std::string label,
    std::function<double(const RiskBasis&)> functional) {
    return std::make_unique<BlackBoxSurface>(m, horizon, std::move(label), std::move(functional));
}

} // namespace pnlattrib
