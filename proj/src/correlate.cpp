#include "altpresence/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "altpresence/indicators.hpp"
#include "altpresence/kernels.hpp"

namespace altpresence {

std::string_view to_token(Metric m) {
    switch (m) {
        case Metric::coverage: return "coverage";
        case Metric::density: return "density";
        case Metric::intensity: return "intensity";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view token) {
    for (Metric m : kAllMetrics) {
        if (token == to_token(m)) return m;
    }
    return std::nullopt;
}

namespace {

// Corpus topic indices with at least one classified publication, in corpus
// topic order, together with per-source aggregates over those topics.
struct TopicTable {
    std::vector<std::size_t> topic_index;
    std::vector<kernels::GroupSums> sums;  // for one source, aligned with topic_index
};

std::vector<std::size_t> universe_of(const Corpus& corpus) {
    const auto topic_idx = corpus.topic_index();
    std::vector<std::uint64_t> pubs_per_topic(corpus.n_topics(), 0);
    for (std::int32_t t : topic_idx) {
        if (t >= 0) ++pubs_per_topic[static_cast<std::size_t>(t)];
    }
    std::vector<std::size_t> universe;
    for (std::size_t t = 0; t < pubs_per_topic.size(); ++t) {
        if (pubs_per_topic[t] > 0) universe.push_back(t);
    }
    return universe;
}

double metric_value(const kernels::GroupSums& g, Metric metric) {
    const IndicatorTriple t = triple_from_aggregates(
        g.n_total, g.n_covered, static_cast<std::uint64_t>(g.n_events));
    switch (metric) {
        case Metric::coverage: return t.coverage_pct;
        case Metric::density: return t.density;
        case Metric::intensity: return t.intensity;
    }
    return 0.0;
}

std::vector<double> metric_vector_for(const Corpus& corpus,
                                      const std::vector<std::size_t>& universe,
                                      SourceKind source, Metric metric) {
    const auto sums = kernels::grouped_presence(corpus.counts(source),
                                                corpus.topic_index(), corpus.n_topics());
    std::vector<double> values;
    values.reserve(universe.size());
    for (std::size_t t : universe) values.push_back(metric_value(sums[t], metric));
    return values;
}

}  // namespace

TopicMetricVector topic_metric_vector(const Corpus& corpus, SourceKind source,
                                      Metric metric) {
    const auto universe = universe_of(corpus);
    if (universe.empty()) throw EmptySetError("corpus has no classified publications");
    TopicMetricVector out;
    out.source = source;
    out.metric = metric;
    out.values = metric_vector_for(corpus, universe, source, metric);
    out.topic_ids.reserve(universe.size());
    for (std::size_t t : universe) out.topic_ids.push_back(corpus.topics()[t].topic_id);
    return out;
}

std::vector<double> fractional_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

namespace {

double pearson_or_throw(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double cov = 0.0, var_x = 0.0, var_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0) {
        throw DegenerateInput("constant sequence has no rank correlation");
    }
    const double rho = cov / std::sqrt(var_x * var_y);
    return std::clamp(rho, -1.0, 1.0);
}

}  // namespace

double spearman_rho(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DegenerateInput("sequence lengths differ: " + std::to_string(x.size()) +
                              " vs " + std::to_string(y.size()));
    }
    if (x.size() < 2) throw DegenerateInput("need at least two observations");
    const auto rx = fractional_ranks(x);
    const auto ry = fractional_ranks(y);
    return pearson_or_throw(rx, ry);
}

CorrelationMatrix cross_source_matrix(const Corpus& corpus, Metric metric,
                                      bool exclude_mutual_zeros) {
    const auto universe = universe_of(corpus);
    if (universe.size() < 2) {
        throw EmptySetError("cross-source correlation needs at least 2 micro-topics");
    }

    std::array<std::vector<double>, kSourceCount> vectors;
    for (SourceKind s : kAllSources) {
        vectors[index_of(s)] = metric_vector_for(corpus, universe, s, metric);
    }

    CorrelationMatrix matrix;
    matrix.metric = metric;
    matrix.exclude_mutual_zeros = exclude_mutual_zeros;
    matrix.n_topics = universe.size();

    struct Pair {
        std::size_t a, b;
    };
    std::vector<Pair> pairs;
    for (std::size_t a = 0; a < kSourceCount; ++a) {
        for (std::size_t b = a; b < kSourceCount; ++b) pairs.push_back({a, b});
    }

    // Pairs are independent; entries land in disjoint slots, so the loop may
    // run in any order or in parallel with identical results.
    const std::int64_t n_pairs = static_cast<std::int64_t>(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (universe.size() >= 1024)
#endif
    for (std::int64_t p = 0; p < n_pairs; ++p) {
        const auto [a, b] = pairs[static_cast<std::size_t>(p)];
        const std::vector<double>& va = vectors[a];
        const std::vector<double>& vb = vectors[b];

        std::vector<double> xa, xb;
        if (exclude_mutual_zeros) {
            for (std::size_t i = 0; i < va.size(); ++i) {
                if (va[i] == 0.0 && vb[i] == 0.0) continue;
                xa.push_back(va[i]);
                xb.push_back(vb[i]);
            }
        } else {
            xa = va;
            xb = vb;
        }

        PairEntry entry;
        entry.n = xa.size();
        if (a == b) {
            // Self-correlation is exactly 1 whenever the vector still varies.
            const bool constant =
                xa.empty() || std::all_of(xa.begin(), xa.end(),
                                          [&xa](double v) { return v == xa.front(); });
            if (xa.size() >= 2 && !constant) entry.rho = 1.0;
        } else if (xa.size() >= 2) {
            try {
                entry.rho = spearman_rho(xa, xb);
            } catch (const DegenerateInput&) {
                // undefined entry, n stays recorded
            }
        }
        matrix.entries[a][b] = entry;
        matrix.entries[b][a] = entry;
    }
    return matrix;
}

IndicatorMatrix indicator_intercorrelation(const Corpus& corpus, SourceKind source) {
    const auto universe = universe_of(corpus);
    if (universe.size() < 2) {
        throw EmptySetError("indicator intercorrelation needs at least 2 micro-topics");
    }
    std::array<std::vector<double>, 3> vectors;
    for (Metric m : kAllMetrics) {
        vectors[static_cast<std::size_t>(m)] = metric_vector_for(corpus, universe, source, m);
    }

    IndicatorMatrix matrix;
    matrix.source = source;
    for (std::size_t a = 0; a < 3; ++a) {
        const auto& va = vectors[a];
        const bool constant =
            std::all_of(va.begin(), va.end(), [&va](double v) { return v == va.front(); });
        matrix.rho[a][a] = constant ? std::optional<double>{} : std::optional<double>{1.0};
        for (std::size_t b = a + 1; b < 3; ++b) {
            std::optional<double> rho;
            try {
                rho = spearman_rho(va, vectors[b]);
            } catch (const DegenerateInput&) {
            }
            matrix.rho[a][b] = rho;
            matrix.rho[b][a] = rho;
        }
    }
    return matrix;
}

}  // namespace altpresence
