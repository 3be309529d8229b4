#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altpresence/corpus.hpp"
#include "altpresence/sources.hpp"

namespace altpresence {

enum class Metric { coverage, density, intensity };

inline constexpr std::array<Metric, 3> kAllMetrics = {Metric::coverage, Metric::density,
                                                      Metric::intensity};

std::string_view to_token(Metric m);
std::optional<Metric> parse_metric(std::string_view token);

// One indicator value per micro-topic with at least one classified
// publication; a topic with zero events in the source carries value 0.
struct TopicMetricVector {
    SourceKind source = SourceKind::mendeley;
    Metric metric = Metric::coverage;
    std::vector<std::string> topic_ids;  // aligned with values
    std::vector<double> values;
};

TopicMetricVector topic_metric_vector(const Corpus& corpus, SourceKind source,
                                      Metric metric);

// Fractional (average) ranks, 1-based: ties receive the mean of the rank
// positions they occupy.
std::vector<double> fractional_ranks(std::span<const double> values);

// Spearman's rank correlation with tie correction: Pearson correlation of
// fractional ranks. The shortcut 1 - 6*sum(d^2)/(n(n^2-1)) is invalid under
// ties and is deliberately not used. Throws DegenerateInput on length
// mismatch, fewer than two points, or a constant sequence.
double spearman_rho(std::span<const double> x, std::span<const double> y);

struct PairEntry {
    std::optional<double> rho;  // nullopt = undefined (degenerate pair)
    std::uint64_t n = 0;        // topic pairs actually correlated
    bool operator==(const PairEntry&) const = default;
};

// Pairwise Spearman correlations of one topic-level metric across all
// sources. With exclude_mutual_zeros set, topics where BOTH sources of a pair
// have value 0 are removed from that pair's vectors before ranking; pairs
// that become degenerate yield an undefined entry rather than an error.
struct CorrelationMatrix {
    Metric metric = Metric::coverage;
    bool exclude_mutual_zeros = false;
    std::uint64_t n_topics = 0;
    std::array<std::array<PairEntry, kSourceCount>, kSourceCount> entries{};

    const PairEntry& at(SourceKind a, SourceKind b) const {
        return entries[index_of(a)][index_of(b)];
    }
};

CorrelationMatrix cross_source_matrix(const Corpus& corpus, Metric metric,
                                      bool exclude_mutual_zeros);

// Spearman correlations among coverage, density, and intensity of one source
// at the topic level. Degenerate vectors (for example a constant coverage
// column) produce undefined entries in their rows and columns.
struct IndicatorMatrix {
    SourceKind source = SourceKind::mendeley;
    std::array<std::array<std::optional<double>, 3>, 3> rho{};

    const std::optional<double>& at(Metric a, Metric b) const {
        return rho[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
};

IndicatorMatrix indicator_intercorrelation(const Corpus& corpus, SourceKind source);

}  // namespace altpresence
