#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "altpresence/corpus.hpp"
#include "altpresence/errors.hpp"
#include "altpresence/sources.hpp"

namespace altpresence {

// The three presence indicators of a publication set for one source, together
// with the exact integer aggregates they derive from:
//   coverage  C = 100 * n_covered / n_total        (percent of set covered)
//   density   D = n_events / n_total               (zeros included)
//   intensity I = n_events / n_covered, or exactly 0 for an uncovered set
// All arithmetic is double precision over exact integer aggregates; rounding
// to display precision happens only at report emission.
struct IndicatorTriple {
    std::uint64_t n_total = 0;
    std::uint64_t n_covered = 0;
    std::uint64_t n_events = 0;
    double coverage_pct = 0.0;
    double density = 0.0;
    double intensity = 0.0;
    bool operator==(const IndicatorTriple&) const = default;
};

// Throws EmptySetError for n_total == 0 and InconsistentAggregates when
// n_covered exceeds n_total or n_events.
IndicatorTriple triple_from_aggregates(std::uint64_t n_total, std::uint64_t n_covered,
                                       std::uint64_t n_events);

// Triple over raw per-publication counts; order is irrelevant. Throws
// EmptySetError on an empty set and std::invalid_argument on negative counts.
IndicatorTriple compute_triple(std::span<const std::int32_t> counts);

using PubPredicate = std::function<bool(const PublicationRecord&)>;

// Triple for one source over the (optionally filtered) corpus; a publication
// without a tally counts as zero events. Throws EmptySetError when the filter
// matches nothing.
IndicatorTriple source_triple(const Corpus& corpus, SourceKind source,
                              const PubPredicate& filter = {});

// 100 * part / whole, the share column used by stratified reports.
double share_pct(std::uint64_t part, std::uint64_t whole);

}  // namespace altpresence
