#include "axi/index_engine.hpp"

#include <algorithm>
#include <map>

#include "axi/errors.hpp"

namespace axi::index_engine {

double weighted_median(std::span<const WeightedValue> items) {
    std::vector<WeightedValue> sorted;
    sorted.reserve(items.size());
    for (const auto& item : items) {
        if (item.weight < 0.0)
            throw ValidationError("weighted_median: negative weight");
        if (item.weight > 0.0)
            sorted.push_back(item);
    }
    if (sorted.empty())
        throw NoDataError("weighted_median: no positive-weight observations");

    std::sort(sorted.begin(), sorted.end(),
              [](const WeightedValue& a, const WeightedValue& b) { return a.value < b.value; });

    // Merge equal values so the "next distinct value" step is well defined.
    std::vector<WeightedValue> distinct;
    distinct.reserve(sorted.size());
    for (const auto& item : sorted) {
        if (!distinct.empty() && distinct.back().value == item.value)
            distinct.back().weight += item.weight;
        else
            distinct.push_back(item);
    }

    double total = 0.0;
    for (const auto& item : distinct)
        total += item.weight;
    const double half = total / 2.0;

    double cumulative = 0.0;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        cumulative += distinct[i].weight;
        if (cumulative >= half) {
            if (cumulative == half && i + 1 < distinct.size())
                return (distinct[i].value + distinct[i + 1].value) / 2.0;
            return distinct[i].value;
        }
    }
    return distinct.back().value; // unreachable: cumulative ends at total >= half
}

BucketWeights bucket_weights(double st_volume, double st_avg_maturity,
                             std::span<const BucketVolume> lt) {
    if (st_volume < 0.0)
        throw ValidationError("bucket_weights: negative ST volume");

    // Denominator accumulates in segment order, ST first then each LT bucket,
    // matching the weight formula's layout.
    const double st_product = st_avg_maturity * st_volume;
    double total = st_product;
    std::vector<double> lt_products(lt.size(), 0.0);
    for (std::size_t j = 0; j < lt.size(); ++j) {
        if (lt[j].volume < 0.0)
            throw ValidationError("bucket_weights: negative LT volume");
        lt_products[j] = lt[j].avg_maturity * lt[j].volume;
        total += lt_products[j];
    }
    if (!(total > 0.0))
        throw NoDataError("bucket_weights: all maturity-weighted volumes are zero");

    BucketWeights out;
    out.st_weight = st_product / total;
    out.lt_weights.resize(lt.size());
    for (std::size_t j = 0; j < lt.size(); ++j)
        out.lt_weights[j] = lt_products[j] / total;
    return out;
}

bool DailySpreadDecomposition::has_lt() const {
    for (double v : lt_volumes)
        if (v > 0.0)
            return true;
    return false;
}

double DailySpreadDecomposition::lt_weight_total() const {
    double sum = 0.0;
    for (double w : lt_weights)
        sum += w;
    return sum;
}

double DailySpreadDecomposition::lt_spread_combined() const {
    const double lt_total = lt_weight_total();
    if (!(lt_total > 0.0))
        return std::nan("");
    double combined = 0.0;
    for (int j = 0; j < kLtBucketCount; ++j)
        if (lt_weights[j] > 0.0)
            combined += lt_spreads[j] * (lt_weights[j] / lt_total);
    return combined;
}

double DailySpreadDecomposition::st_maturity_volume() const {
    return has_st() ? st_avg_maturity * st_volume : 0.0;
}

double DailySpreadDecomposition::lt_maturity_volume() const {
    double sum = 0.0;
    for (int j = 0; j < kLtBucketCount; ++j)
        if (lt_volumes[j] > 0.0)
            sum += lt_avg_maturities[j] * lt_volumes[j];
    return sum;
}

namespace {

struct BucketAccumulator {
    double volume = 0.0;
    double maturity_volume = 0.0; // sum of maturity * volume
    std::vector<WeightedValue> spreads;

    bool has_data() const { return volume > 0.0; }
    double avg_maturity() const { return maturity_volume / volume; }
};

} // namespace

DailySpreadDecomposition daily_spread(Date date, std::span<const Transaction> transactions) {
    std::array<BucketAccumulator, 1 + kLtBucketCount> buckets;
    double total_volume = 0.0;
    double total_maturity_volume = 0.0;
    for (const auto& tx : transactions) {
        if (tx.trade_date != date || !is_eligible(tx))
            continue;
        auto& bucket = buckets[static_cast<int>(assign_bucket(tx.maturity))];
        bucket.volume += tx.volume;
        bucket.maturity_volume += tx.maturity * tx.volume;
        bucket.spreads.push_back({tx.spread, tx.volume});
        total_volume += tx.volume;
        total_maturity_volume += tx.maturity * tx.volume;
    }

    const auto& st = buckets[0];
    bool any_lt = false;
    for (int j = 0; j < kLtBucketCount; ++j)
        any_lt = any_lt || buckets[1 + j].has_data();
    if (!st.has_data() && !any_lt)
        throw NoDataError("no eligible transactions on " + date.to_string());

    DailySpreadDecomposition out;
    out.date = date;

    std::vector<BucketVolume> lt_volumes(kLtBucketCount);

    if (st.has_data()) {
        out.st_spread = weighted_median(st.spreads);
        out.st_volume = st.volume;
        out.st_avg_maturity = st.avg_maturity();
    }
    for (int j = 0; j < kLtBucketCount; ++j) {
        const auto& bucket = buckets[1 + j];
        if (!bucket.has_data())
            continue;
        out.lt_spreads[j] = weighted_median(bucket.spreads);
        out.lt_volumes[j] = bucket.volume;
        out.lt_avg_maturities[j] = bucket.avg_maturity();
        lt_volumes[j] = {bucket.volume, bucket.avg_maturity()};
    }

    const BucketWeights weights =
        bucket_weights(st.has_data() ? st.volume : 0.0, st.has_data() ? st.avg_maturity() : 0.0,
                       lt_volumes);
    out.st_weight = weights.st_weight;

    // Spread_t = sum_j LT spread_j * LT weight_j + ST spread * ST weight.
    double spread = 0.0;
    for (int j = 0; j < kLtBucketCount; ++j) {
        out.lt_weights[j] = weights.lt_weights[j];
        if (weights.lt_weights[j] > 0.0)
            spread += out.lt_spreads[j] * weights.lt_weights[j];
    }
    if (out.st_weight > 0.0)
        spread += out.st_spread * out.st_weight;
    out.daily_spread = spread;

    out.weighted_avg_maturity = total_maturity_volume / total_volume;
    return out;
}

RiskFreeCurve::RiskFreeCurve(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty())
        throw ValidationError("risk-free curve needs at least one point");
    std::sort(points_.begin(), points_.end(),
              [](const Point& a, const Point& b) { return a.tenor < b.tenor; });
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (points_[i].tenor == points_[i - 1].tenor)
            throw ValidationError("risk-free curve has duplicate tenor " +
                                  std::to_string(points_[i].tenor));
}

double RiskFreeCurve::rate_at(double tenor) const {
    if (tenor <= points_.front().tenor)
        return points_.front().rate;
    if (tenor >= points_.back().tenor)
        return points_.back().rate;
    const auto upper = std::upper_bound(
        points_.begin(), points_.end(), tenor,
        [](double t, const Point& p) { return t < p.tenor; });
    const auto lower = std::prev(upper);
    const double alpha = (tenor - lower->tenor) / (upper->tenor - lower->tenor);
    return lower->rate + alpha * (upper->rate - lower->rate);
}

double RiskFreeCurve::spread_over(double trade_rate, double tenor) const {
    return trade_rate - rate_at(tenor);
}

double weighted_avg_maturity(std::span<const Transaction> transactions) {
    double volume = 0.0;
    double maturity_volume = 0.0;
    for (const auto& tx : transactions) {
        if (!is_eligible(tx))
            continue;
        volume += tx.volume;
        maturity_volume += tx.maturity * tx.volume;
    }
    if (!(volume > 0.0))
        throw NoDataError("weighted_avg_maturity: no eligible volume");
    return maturity_volume / volume;
}

Series rolling_index(const Series& daily_spreads, int window, std::string name, SeriesKind kind) {
    if (window <= 0)
        throw ValidationError("rolling window must be positive");
    Series out(name.empty() ? daily_spreads.name() + "_avg" : std::move(name), kind);
    out.set_calendar_id(daily_spreads.calendar_id());
    const auto& points = daily_spreads.points();
    const auto w = static_cast<std::size_t>(window);
    for (std::size_t i = w - 1; i < points.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = i + 1 - w; j <= i; ++j)
            sum += points[j].value;
        out.append(points[i].date, sum / window);
    }
    return out;
}

Series lt_weight_fraction(std::span<const DailySpreadDecomposition> decompositions, int window) {
    if (decompositions.empty())
        throw NoDataError("lt_weight_fraction: no decompositions");
    if (window <= 0)
        throw ValidationError("rolling window must be positive");

    std::vector<double> daily_share(decompositions.size());
    for (std::size_t i = 0; i < decompositions.size(); ++i) {
        const double lt = decompositions[i].lt_maturity_volume();
        const double st = decompositions[i].st_maturity_volume();
        daily_share[i] = lt / (st + lt);
    }

    Series out("lt_weight_fraction", SeriesKind::macro);
    for (std::size_t i = static_cast<std::size_t>(window) - 1; i < decompositions.size(); ++i) {
        double sum = 0.0;
        for (std::size_t j = i + 1 - window; j <= i; ++j)
            sum += daily_share[j];
        out.append(decompositions[i].date, sum / window);
    }
    return out;
}

std::string to_string(IndexScope scope) { return scope == IndexScope::axi ? "AXI" : "FXI"; }

IndexComputation compute_index(std::span<const Transaction> transactions, IndexScope scope,
                               int window) {
    // Group by trade date, keeping the file order within each date so
    // per-date results do not depend on how the pool was concatenated.
    std::map<Date, std::vector<Transaction>> by_date;
    for (const auto& tx : transactions) {
        if (scope == IndexScope::axi && tx.scope != Scope::bank)
            continue;
        if (!is_eligible(tx))
            continue;
        by_date[tx.trade_date].push_back(tx);
    }

    IndexComputation out;
    const std::string label = to_string(scope);
    out.daily_spreads = Series(label + "_daily_spread", SeriesKind::index);
    out.underlying_volume = Series(label + "_volume", SeriesKind::macro);
    for (const auto& [date, txs] : by_date) {
        const DailySpreadDecomposition decomp = daily_spread(date, txs);
        out.daily_spreads.append(date, decomp.daily_spread);
        double volume = decomp.st_volume;
        for (double v : decomp.lt_volumes)
            volume += v;
        out.underlying_volume.append(date, volume);
        out.decompositions.push_back(decomp);
    }
    if (out.decompositions.empty())
        throw NoDataError("compute_index: no eligible transactions for " + label);

    out.index = rolling_index(out.daily_spreads, window, label);
    return out;
}

FallbackValue fallback_value(Date date, const Series& primary, const Series& fallback,
                             const Series& primary_volume, double min_volume) {
    const auto primary_value = primary.value_at(date);
    if (primary_value) {
        const auto volume = primary_volume.value_at(date);
        if (volume && *volume >= min_volume)
            return {*primary_value, BenchmarkSource::primary};
    }
    if (const auto fallback_val = fallback.value_at(date))
        return {*fallback_val, BenchmarkSource::fallback};
    throw NoDataError("no benchmark available on " + date.to_string());
}

} // namespace axi::index_engine
