// Independent oracles used by the unit and acceptance suites. These
// deliberately avoid the library's own code paths: ranks are computed by
// O(n^2) counting, Pearson by the raw-sum formula in long double, moments by
// a two-pass central-sum loop, and quadrant categories by direct counting of
// strictly-better items.
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace oracle {

inline std::vector<double> average_ranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t less = 0, equal = 0;
        for (std::size_t j = 0; j < n; ++j) {
            less += v[j] < v[i];
            equal += v[j] == v[i];
        }
        ranks[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
    }
    return ranks;
}

inline long double pearson_raw(std::span<const double> x, std::span<const double> y) {
    const long double n = static_cast<long double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double a = x[i];
        const long double b = y[i];
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    }
    const long double num = n * sxy - sx * sy;
    const long double den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
    return num / den;
}

inline double spearman(std::span<const double> x, std::span<const double> y) {
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return static_cast<double>(pearson_raw(rx, ry));
}

struct Triple {
    std::uint64_t n = 0, covered = 0, events = 0;
    double coverage_pct = 0, density = 0, intensity = 0;
};

inline Triple triple(std::span<const std::int32_t> counts) {
    Triple t;
    t.n = counts.size();
    for (std::int32_t c : counts) {
        if (c > 0) ++t.covered;
        t.events += static_cast<std::uint64_t>(c);
    }
    t.coverage_pct = 100.0 * static_cast<double>(t.covered) / static_cast<double>(t.n);
    t.density = static_cast<double>(t.events) / static_cast<double>(t.n);
    t.intensity =
        t.covered ? static_cast<double>(t.events) / static_cast<double>(t.covered) : 0.0;
    return t;
}

struct Moments {
    double g1 = 0;        // biased Fisher-Pearson coefficient
    double adjusted = 0;  // sample-size corrected
    bool defined = false;
};

inline Moments skewness(std::span<const std::int32_t> counts) {
    Moments m;
    const std::size_t n = counts.size();
    if (n < 3) return m;
    long double mean = 0;
    for (std::int32_t c : counts) mean += c;
    mean /= static_cast<long double>(n);
    long double m2 = 0, m3 = 0;
    for (std::int32_t c : counts) {
        const long double d = c - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<long double>(n);
    m3 /= static_cast<long double>(n);
    if (m2 == 0) return m;
    const long double g1 = m3 / std::pow(m2, 1.5L);
    const long double nn = static_cast<long double>(n);
    m.g1 = static_cast<double>(g1);
    m.adjusted = static_cast<double>(g1 * std::sqrt(nn * (nn - 1)) / (nn - 2));
    m.defined = true;
    return m;
}

// Two-key competition ranks by direct counting: rank = 1 + #strictly better.
inline std::vector<int> competition_ranks(std::span<const double> value,
                                          std::span<const double> tiebreak) {
    const std::size_t n = value.size();
    std::vector<int> ranks(n);
    for (std::size_t i = 0; i < n; ++i) {
        int better = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const bool j_better = value[j] > value[i] ||
                                  (value[j] == value[i] && tiebreak[j] > tiebreak[i]);
            better += j_better;
        }
        ranks[i] = better + 1;
    }
    return ranks;
}

enum class Quadrant { hot, star_papers, popular, unpopular };

inline std::vector<Quadrant> classify(std::span<const double> coverage,
                                      std::span<const double> intensity,
                                      std::span<const double> events, double q) {
    const std::size_t m = coverage.size();
    const auto cov_rank = competition_ranks(coverage, events);
    const auto int_rank = competition_ranks(intensity, events);
    const int k = static_cast<int>(std::floor(q * static_cast<double>(m) + 1e-9));
    std::vector<Quadrant> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool broad = cov_rank[i] <= k;
        const bool deep = int_rank[i] <= k;
        out[i] = broad ? (deep ? Quadrant::hot : Quadrant::popular)
                       : (deep ? Quadrant::star_papers : Quadrant::unpopular);
    }
    return out;
}

}  // namespace oracle
