#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altpresence/corpus.hpp"
#include "altpresence/indicators.hpp"

namespace altpresence {

enum class Stratifier { year, field, doc_type };

struct StratumRow {
    std::string key;  // year digits, field token, or doc_type token
    IndicatorTriple triple;
    bool operator==(const StratumRow&) const = default;
};

// One indicator triple per stratum that contains at least one publication.
// Rows are ordered canonically: years ascending, fields and document types in
// enumeration order.
struct StratifiedReport {
    SourceKind source = SourceKind::mendeley;
    Stratifier stratifier = Stratifier::year;
    std::vector<StratumRow> rows;

    const IndicatorTriple* find(std::string_view key) const;
};

StratifiedReport triples_by_year(const Corpus& corpus, SourceKind source);

// Restricted to classified publications; throws EmptySetError when the corpus
// has none.
StratifiedReport triples_by_field(const Corpus& corpus, SourceKind source);

StratifiedReport coverage_by_doc_type(const Corpus& corpus, SourceKind source);

struct HistogramBin {
    std::int32_t lo = 0;  // inclusive
    std::int32_t hi = 0;  // inclusive; lo == hi for exact histograms
    std::uint64_t freq = 0;
    bool operator==(const HistogramBin&) const = default;
};

// Count-distribution summary for one source. Skewness is the adjusted
// Fisher-Pearson moment coefficient; it is omitted when the counts have zero
// variance (or fewer than three observations, where the adjustment is
// undefined). Log binning uses base-2 ranges [0], [1], [2,3], [4,7], ...
struct DistributionSummary {
    SourceKind source = SourceKind::mendeley;
    bool log_binned = false;
    std::vector<HistogramBin> histogram;
    std::optional<double> skewness;
    std::int32_t max_count = 0;
    std::uint64_t n_zero = 0;
};

DistributionSummary count_distribution(const Corpus& corpus, SourceKind source,
                                       bool log_binned);

}  // namespace altpresence
