#include "axi/risk_analytics.hpp"

#include <cmath>

#include "axi/errors.hpp"

namespace axi::risk_analytics {

namespace {

void check_sensitivity(double c) {
    if (c < 0.0 || c > 1.0)
        throw ValidationError("credit sensitivity must lie in [0, 1]");
}

void check_params(const RarParams& params) {
    if (params.sigma_index < 0.0 || params.sigma_delta < 0.0)
        throw ValidationError("volatilities must be nonnegative");
}

} // namespace

double risk_adjusted_return(const PricingPolicy& policy, const RarParams& params) {
    check_sensitivity(policy.sensitivity);
    check_params(params);
    const double cm1 = policy.sensitivity - 1.0;
    const double variance =
        cm1 * cm1 * params.sigma_index * params.sigma_index +
        params.sigma_delta * params.sigma_delta;
    if (!(variance > 0.0))
        throw DomainError("risk_adjusted_return: profitability volatility is zero");
    return (policy.fixed_spread + cm1 * params.mean_index) / std::sqrt(variance);
}

double equivalent_spread(double fixed_spread, double sensitivity, const RarParams& params) {
    check_sensitivity(sensitivity);
    check_params(params);
    const double cm1 = sensitivity - 1.0;
    const double numerator =
        std::sqrt(cm1 * cm1 * params.sigma_index * params.sigma_index +
                  params.sigma_delta * params.sigma_delta);
    const double denominator = std::sqrt(params.sigma_index * params.sigma_index +
                                         params.sigma_delta * params.sigma_delta);
    if (!(denominator > 0.0))
        throw DomainError("equivalent_spread: zero profitability volatility");
    return (1.0 - sensitivity) * params.mean_index +
           (fixed_spread - params.mean_index) * numerator / denominator;
}

std::vector<DiscountPoint> discount_curve(double fixed_spread, const RarParams& params,
                                          std::span<const double> sensitivity_grid) {
    std::vector<DiscountPoint> curve;
    curve.reserve(sensitivity_grid.size());
    for (double c : sensitivity_grid) {
        const double s_prime = equivalent_spread(fixed_spread, c, params);
        curve.push_back({c, s_prime, (fixed_spread - s_prime) * 100.0});
    }
    return curve;
}

double sigma_delta_estimate(std::span<const index_engine::DailySpreadDecomposition> days,
                            DeltaWeightMode mode) {
    if (days.empty())
        throw NoDataError("sigma_delta_estimate: no decompositions");

    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& day : days) {
        if (!day.has_st() || !day.has_lt())
            continue;
        double lt_share;
        if (mode == DeltaWeightMode::maturity_weighted) {
            lt_share = day.lt_weight_total();
        } else {
            double lt_volume = 0.0;
            for (double v : day.lt_volumes)
                lt_volume += v;
            lt_share = lt_volume / (day.st_volume + lt_volume);
        }
        const double st_share = 1.0 - lt_share;
        sum += std::sqrt(lt_share * st_share) *
               std::abs(day.lt_spread_combined() - day.st_spread);
        ++count;
    }
    if (count == 0)
        throw NoDataError("sigma_delta_estimate: no date has both ST and LT trades");
    return sum / static_cast<double>(count);
}

double demand_impact(double discount_pct, double elasticity) {
    if (elasticity < 0.0)
        throw ValidationError("price elasticity must be nonnegative");
    return discount_pct * elasticity;
}

} // namespace axi::risk_analytics
