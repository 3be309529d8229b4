#include "altpresence/indicators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "altpresence/kernels.hpp"

namespace altpresence {

IndicatorTriple triple_from_aggregates(std::uint64_t n_total, std::uint64_t n_covered,
                                       std::uint64_t n_events) {
    if (n_total == 0) {
        throw EmptySetError("indicator triple requested for an empty publication set");
    }
    if (n_covered > n_total) {
        throw InconsistentAggregates("n_covered " + std::to_string(n_covered) +
                                     " exceeds n_total " + std::to_string(n_total));
    }
    if (n_covered > n_events) {
        throw InconsistentAggregates("n_covered " + std::to_string(n_covered) +
                                     " exceeds n_events " + std::to_string(n_events));
    }
    IndicatorTriple t;
    t.n_total = n_total;
    t.n_covered = n_covered;
    t.n_events = n_events;
    t.coverage_pct = 100.0 * static_cast<double>(n_covered) / static_cast<double>(n_total);
    t.density = static_cast<double>(n_events) / static_cast<double>(n_total);
    t.intensity = n_covered > 0
                      ? static_cast<double>(n_events) / static_cast<double>(n_covered)
                      : 0.0;
    return t;
}

IndicatorTriple compute_triple(std::span<const std::int32_t> counts) {
    if (counts.empty()) throw EmptySetError("compute_triple over an empty count set");
    const kernels::PresenceSums sums = kernels::presence_sums(counts);
    if (sums.n_negative > 0) {
        throw std::invalid_argument("compute_triple: negative count in input");
    }
    return triple_from_aggregates(counts.size(), sums.n_covered,
                                  static_cast<std::uint64_t>(sums.n_events));
}

IndicatorTriple source_triple(const Corpus& corpus, SourceKind source,
                              const PubPredicate& filter) {
    const auto column = corpus.counts(source);
    if (!filter) return compute_triple(column);
    std::vector<std::int32_t> selected;
    selected.reserve(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (filter(corpus.publications()[i])) selected.push_back(column[i]);
    }
    if (selected.empty()) throw EmptySetError("publication filter matched nothing");
    return compute_triple(selected);
}

double share_pct(std::uint64_t part, std::uint64_t whole) {
    if (whole == 0) throw EmptySetError("share of an empty set");
    return 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace altpresence
