#pragma once

#include <array>
#include <string>

#include "axi/date.hpp"

namespace axi {

/// Market segment a funding trade belongs to. Bank trades feed AXI; the
/// broader FXI pool takes both.
enum class Scope { bank, nonbank };

std::string to_string(Scope scope);

/// One unsecured wholesale funding transaction.
struct Transaction {
    Date trade_date;
    double maturity = 0.0; // years, actual/365 fraction
    double volume = 0.0;   // USD
    double spread = 0.0;   // percent p.a. over matched-tenor risk-free
    Scope scope = Scope::bank;
};

/// Maturity buckets: ST = [0,1), LT1 = [1,2), LT2 = [2,3), LT3 = [3,4),
/// LT4 = [4,5]. Together they partition (0,5].
enum class Bucket : int { ST = 0, LT1 = 1, LT2 = 2, LT3 = 3, LT4 = 4 };

inline constexpr int kLtBucketCount = 4;
inline constexpr double kMaxEligibleMaturity = 5.0;

std::string to_string(Bucket bucket);

/// Bucket containing `maturity` under the half-open convention above.
/// Throws IneligibleError for maturity <= 0 or > 5.
Bucket assign_bucket(double maturity);

/// True when the trade can enter the index: maturity in (0, 5], positive
/// volume, finite spread.
bool is_eligible(const Transaction& tx);

} // namespace axi
