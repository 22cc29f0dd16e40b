#pragma once

#include <span>
#include <vector>

#include "axi/index_engine.hpp"

namespace axi::risk_analytics {

/// Moments of the index and of the bank-specific funding deviation, all in
/// percent p.a. Defaults are the calibrated June 2016 - April 2025 values.
struct RarParams {
    double mean_index = 0.5141;
    double sigma_index = 0.2987;
    double mean_delta = -0.0020;
    double sigma_delta = 0.3156;
};

/// Loan pricing policy: rate_t = R_t + s + c * index_t.
struct PricingPolicy {
    double fixed_spread = 0.0; // s, percent
    double sensitivity = 0.0;  // c in [0, 1]
};

/// Expected risk-adjusted return of a loan priced at sensitivity c:
///
///   RAR = (s + (c-1) * mean) / sqrt((c-1)^2 * sigma_index^2 + sigma_delta^2)
///
/// Throws ValidationError unless 0 <= c <= 1, DomainError when the
/// denominator vanishes (c = 1 with sigma_delta = 0).
double risk_adjusted_return(const PricingPolicy& policy, const RarParams& params);

/// Fixed spread s' at sensitivity c with the same risk-adjusted return as a
/// sensitivity-zero loan with spread s:
///
///   s' = (1-c) * mean + (s - mean) * sqrt((c-1)^2 sigma_i^2 + sigma_d^2)
///                                  / sqrt(sigma_i^2 + sigma_d^2)
double equivalent_spread(double fixed_spread, double sensitivity, const RarParams& params);

struct DiscountPoint {
    double sensitivity = 0.0;
    double spread_prime = 0.0; // percent
    double discount_bp = 0.0;  // (s - s') in basis points
};

/// equivalent_spread evaluated over a sensitivity grid (each c in [0, 1]).
std::vector<DiscountPoint> discount_curve(double fixed_spread, const RarParams& params,
                                          std::span<const double> sensitivity_grid);

/// Which volume shares play the Bernoulli probabilities in the sigma(Delta)
/// estimator: maturity-weighted (the index convention) or raw dollar volume
/// (sensitivity mode; shrinks the estimate).
enum class DeltaWeightMode { maturity_weighted, raw_volume };

/// Two-point volatility of the bank-specific deviation: the average over
/// dates of sqrt(LT share * ST share) * |LT spread - ST spread|, taken over
/// dates where both segments traded. Throws NoDataError when no date has
/// both.
double sigma_delta_estimate(std::span<const index_engine::DailySpreadDecomposition> days,
                            DeltaWeightMode mode = DeltaWeightMode::maturity_weighted);

/// Percent change in loan demand from a spread discount at the given price
/// elasticity: discount * elasticity.
double demand_impact(double discount_pct, double elasticity);

} // namespace axi::risk_analytics
