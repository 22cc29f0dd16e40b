#include "axi/transaction.hpp"

#include <cmath>

#include "axi/errors.hpp"

namespace axi {

std::string to_string(Scope scope) { return scope == Scope::bank ? "bank" : "nonbank"; }

std::string to_string(Bucket bucket) {
    switch (bucket) {
    case Bucket::ST: return "ST";
    case Bucket::LT1: return "LT1";
    case Bucket::LT2: return "LT2";
    case Bucket::LT3: return "LT3";
    case Bucket::LT4: return "LT4";
    }
    return "ST";
}

Bucket assign_bucket(double maturity) {
    if (!(maturity > 0.0) || maturity > kMaxEligibleMaturity)
        throw IneligibleError("maturity " + std::to_string(maturity) +
                              "y outside the eligible range (0, 5]");
    if (maturity < 1.0)
        return Bucket::ST;
    if (maturity < 2.0)
        return Bucket::LT1;
    if (maturity < 3.0)
        return Bucket::LT2;
    if (maturity < 4.0)
        return Bucket::LT3;
    return Bucket::LT4; // [4, 5]
}

bool is_eligible(const Transaction& tx) {
    return tx.maturity > 0.0 && tx.maturity <= kMaxEligibleMaturity && tx.volume > 0.0 &&
           std::isfinite(tx.spread);
}

} // namespace axi
