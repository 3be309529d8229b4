#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "altpresence/correlate.hpp"
#include "altpresence/corpus.hpp"
#include "altpresence/indicators.hpp"
#include "altpresence/strata.hpp"
#include "altpresence/topics.hpp"

namespace altpresence::report {

enum class Format { csv, text };

// Provenance, when non-empty, is written as a leading "# ..." comment line.
// Display precision is pinned: coverage and shares 2 decimals, density,
// intensity and rho 3 decimals. Output is byte-deterministic in the inputs.
struct Options {
    Format format = Format::csv;
    std::string provenance;
};

void emit_indicator_rows(std::ostream& out,
                         const std::vector<std::pair<std::string, IndicatorTriple>>& rows,
                         const Options& options);

// "C=.. D=.. I=.." single-line form used by the aggregates mode.
void emit_aggregate_triple(std::ostream& out, const IndicatorTriple& triple,
                           const Options& options);

// Standard stratified schema; share_base, when set, appends a share_pct
// column computed against that corpus size.
void emit_stratified(std::ostream& out, const StratifiedReport& report,
                     std::optional<std::uint64_t> share_base, const Options& options);

void emit_distribution(std::ostream& out, const DistributionSummary& summary,
                       const Options& options);

// Long form: source_a,source_b,metric,rho,n,excluded. Unordered pairs are
// emitted once, diagonal included; undefined rho becomes an empty field.
void emit_correlation_matrix(std::ostream& out, const CorrelationMatrix& matrix,
                             const Options& options);

void emit_indicator_matrix(std::ostream& out, const IndicatorMatrix& matrix,
                           const Options& options);

struct TopicRow {
    std::string field;
    std::string topic_id;
    std::string label;
    IndicatorTriple triple;
    int coverage_rank = 0;
    int intensity_rank = 0;
    AttentionCategory category = AttentionCategory::unpopular;
};

// field,topic_id,label,coverage_pct,intensity,n_pubs,n_events,coverage_rank,
// intensity_rank,category — the quadrant-scatter schema.
void emit_topic_rows(std::ostream& out, const std::vector<TopicRow>& rows,
                     const Options& options);

// Same schema restricted to hot topics, with one comment line per field
// section recording the eligible-topic count and cutoff.
void emit_hot_report(std::ostream& out, const HotTopicReport& report,
                     const Options& options);

void emit_validation(std::ostream& out, const ValidationReport& report,
                     const Options& options);

}  // namespace altpresence::report
