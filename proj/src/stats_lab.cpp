#include "axi/stats_lab.hpp"

#include <cmath>
#include <map>

#include <Eigen/Dense>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "axi/errors.hpp"

namespace axi::stats_lab {

std::string to_string(TransformKind kind) {
    switch (kind) {
    case TransformKind::none: return "none";
    case TransformKind::difference: return "difference";
    case TransformKind::log_difference: return "log_difference";
    }
    return "none";
}

std::string to_string(Frequency freq) {
    switch (freq) {
    case Frequency::daily: return "daily";
    case Frequency::weekly: return "weekly";
    case Frequency::monthly: return "monthly";
    case Frequency::quarterly: return "quarterly";
    }
    return "daily";
}

std::optional<TransformKind> transform_kind_from_string(const std::string& text) {
    if (text == "none")
        return TransformKind::none;
    if (text == "difference" || text == "diff")
        return TransformKind::difference;
    if (text == "log_difference" || text == "logdiff")
        return TransformKind::log_difference;
    return std::nullopt;
}

std::optional<Frequency> frequency_from_string(const std::string& text) {
    if (text == "daily")
        return Frequency::daily;
    if (text == "weekly")
        return Frequency::weekly;
    if (text == "monthly")
        return Frequency::monthly;
    if (text == "quarterly")
        return Frequency::quarterly;
    return std::nullopt;
}

namespace {

double level_of(const Series& series, const SeriesPoint& p, TransformKind kind) {
    if (kind != TransformKind::log_difference)
        return p.value;
    if (!(p.value > 0.0))
        throw DomainError("log_difference needs strictly positive values; series '" +
                          series.name() + "' has " + std::to_string(p.value) + " on " +
                          p.date.to_string());
    return std::log(p.value);
}

Date period_label(Date d, Frequency freq) {
    switch (freq) {
    case Frequency::weekly: return d.iso_week_end();
    case Frequency::monthly: return d.month_end();
    case Frequency::quarterly: return d.quarter_end();
    case Frequency::daily: break;
    }
    return d;
}

/// Mean of within-period values, dated at the period's last calendar day.
Series aggregate_mean(const std::vector<SeriesPoint>& points, Frequency freq,
                      const std::string& name, SeriesKind kind) {
    std::map<Date, std::pair<double, int>> periods;
    for (const auto& p : points) {
        auto& slot = periods[period_label(p.date, freq)];
        slot.first += p.value;
        slot.second += 1;
    }
    Series out(name, kind);
    for (const auto& [label, slot] : periods)
        out.append(label, slot.first / slot.second);
    return out;
}

} // namespace

Series transform(const Series& series, const TransformSpec& spec) {
    const std::string name = series.name() + "_" + to_string(spec.kind) + "_" +
                             to_string(spec.frequency);
    const auto& points = series.points();

    if (spec.kind == TransformKind::none) {
        if (spec.frequency == Frequency::daily) {
            Series out = series;
            out.set_name(name);
            return out;
        }
        return aggregate_mean(points, spec.frequency, name, series.kind());
    }

    if (spec.frequency == Frequency::quarterly) {
        // Quarter-end levels, then differences across consecutive quarters.
        std::map<Date, double> quarter_last;
        for (const auto& p : points)
            quarter_last[p.date.quarter_end()] = level_of(series, p, spec.kind);
        Series out(name, SeriesKind::macro);
        bool have_prev = false;
        double prev_value = 0.0;
        for (const auto& [label, level] : quarter_last) {
            if (have_prev)
                out.append(label, level - prev_value);
            prev_value = level;
            have_prev = true;
        }
        if (out.empty())
            throw NoDataError("transform: series '" + series.name() +
                              "' spans fewer than two quarters");
        return out;
    }

    // Observation-to-observation changes, dated at the later observation.
    std::vector<SeriesPoint> changes;
    changes.reserve(points.size());
    for (std::size_t i = 1; i < points.size(); ++i)
        changes.push_back({points[i].date, level_of(series, points[i], spec.kind) -
                                               level_of(series, points[i - 1], spec.kind)});
    if (changes.empty())
        throw NoDataError("transform: series '" + series.name() +
                          "' has fewer than two observations");

    if (spec.frequency == Frequency::daily) {
        Series out(name, SeriesKind::macro);
        for (const auto& p : changes)
            out.append(p.date, p.value);
        return out;
    }
    return aggregate_mean(changes, spec.frequency, name, SeriesKind::macro);
}

std::vector<CorrelationResult> lagged_correlation(const Series& x, const Series& y, int max_lag) {
    if (max_lag < 0)
        throw ValidationError("max_lag must be nonnegative");

    const std::vector<Date> dates = common_dates(x, y);
    std::vector<double> xs, ys;
    xs.reserve(dates.size());
    ys.reserve(dates.size());
    for (Date d : dates) {
        xs.push_back(*x.value_at(d));
        ys.push_back(*y.value_at(d));
    }

    std::vector<CorrelationResult> results;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const int n = static_cast<int>(xs.size()) - lag;
        if (n < 3)
            throw NoDataError("lagged_correlation: only " + std::to_string(std::max(n, 0)) +
                              " pairs at lag " + std::to_string(lag));

        double mean_x = 0.0, mean_y = 0.0;
        for (int i = 0; i < n; ++i) {
            mean_x += xs[i + lag];
            mean_y += ys[i];
        }
        mean_x /= n;
        mean_y /= n;

        double sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (int i = 0; i < n; ++i) {
            const double dx = xs[i + lag] - mean_x;
            const double dy = ys[i] - mean_y;
            sxx += dx * dx;
            syy += dy * dy;
            sxy += dx * dy;
        }
        if (!(sxx > 0.0) || !(syy > 0.0))
            throw DomainError("lagged_correlation: zero variance at lag " + std::to_string(lag));

        const double r = sxy / std::sqrt(sxx * syy);
        double p = 0.0;
        if (1.0 - r * r > 0.0) {
            const double t = r * std::sqrt((n - 2) / (1.0 - r * r));
            const boost::math::students_t dist(n - 2);
            p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
        }
        results.push_back({lag, r, p, n});
    }
    return results;
}

namespace {

struct OlsFit {
    double rss = 0.0;
    int n = 0;
    int params = 0;
};

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& target) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < design.cols())
        throw DomainError("granger_test: singular design matrix");
    const Eigen::VectorXd beta = qr.solve(target);
    const double rss = (target - design * beta).squaredNorm();
    return {rss, static_cast<int>(design.rows()), static_cast<int>(design.cols())};
}

} // namespace

GrangerResult granger_direction(const std::vector<double>& cause,
                                const std::vector<double>& effect, int max_lag) {
    if (max_lag < 1)
        throw ValidationError("granger_test: lag order must be at least 1");
    const int n_obs = static_cast<int>(effect.size());
    if (static_cast<int>(cause.size()) != n_obs)
        throw ValidationError("granger_test: series lengths differ");
    const int rows = n_obs - max_lag;
    const int unrestricted_params = 2 * max_lag + 1;
    if (rows <= unrestricted_params)
        throw NoDataError("granger_test: sample too short for lag order " +
                          std::to_string(max_lag));

    Eigen::VectorXd target(rows);
    Eigen::MatrixXd restricted(rows, max_lag + 1);
    Eigen::MatrixXd unrestricted(rows, unrestricted_params);
    for (int t = 0; t < rows; ++t) {
        const int idx = t + max_lag;
        target(t) = effect[idx];
        restricted(t, 0) = 1.0;
        unrestricted(t, 0) = 1.0;
        for (int l = 1; l <= max_lag; ++l) {
            restricted(t, l) = effect[idx - l];
            unrestricted(t, l) = effect[idx - l];
            unrestricted(t, max_lag + l) = cause[idx - l];
        }
    }

    const OlsFit fit_r = ols(restricted, target);
    const OlsFit fit_u = ols(unrestricted, target);
    const int df2 = rows - unrestricted_params;
    if (!(fit_u.rss > 0.0))
        throw DomainError("granger_test: perfect fit, F statistic undefined");

    const double f = ((fit_r.rss - fit_u.rss) / max_lag) / (fit_u.rss / df2);
    const boost::math::fisher_f dist(max_lag, df2);
    const double p = boost::math::cdf(boost::math::complement(dist, std::max(f, 0.0)));
    return {f, p, max_lag, rows};
}

GrangerTest granger_test(const Series& x, const Series& y, int max_lag) {
    const std::vector<Date> dates = common_dates(x, y);
    std::vector<double> xs, ys;
    xs.reserve(dates.size());
    ys.reserve(dates.size());
    for (Date d : dates) {
        xs.push_back(*x.value_at(d));
        ys.push_back(*y.value_at(d));
    }
    GrangerTest out;
    out.x_to_y = granger_direction(xs, ys, max_lag);
    out.y_to_x = granger_direction(ys, xs, max_lag);
    return out;
}

} // namespace axi::stats_lab
