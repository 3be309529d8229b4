#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "altpresence/corpus.hpp"
#include "altpresence/indicators.hpp"

namespace altpresence {

// Attention quadrant of a micro-topic for one source: broad and deep (hot),
// narrow but deep (star_papers), broad but shallow (popular), neither
// (unpopular).
enum class AttentionCategory : std::uint8_t { hot, star_papers, popular, unpopular };

std::string_view to_token(AttentionCategory c);

// Competition ranks over descending values: tied items share the best rank
// and the following ranks are skipped (1,2,2,4). An optional tiebreak
// sequence orders items with equal primary values (higher is better); items
// equal on both keys still share a rank. Throws LengthMismatch when the
// tiebreak length differs.
std::vector<int> competition_rank(std::span<const double> values,
                                  std::span<const double> tiebreak = {});

// Classification core over bare per-topic statistics. Both dimensions are
// ranked with the total event count as the uniform secondary key; the cutoff
// is k = floor(q * M) and a topic qualifies on a dimension when its rank is
// at most k (boundary ties therefore all qualify).
struct ClassifyInput {
    std::vector<double> coverage;
    std::vector<double> intensity;
    std::vector<double> events;  // tiebreak for both dimensions
};

struct ClassifyResult {
    std::vector<int> coverage_rank;
    std::vector<int> intensity_rank;
    std::vector<AttentionCategory> category;
    std::size_t cutoff = 0;  // k
};

ClassifyResult rank_and_classify(const ClassifyInput& input, double quantile);

struct RankedTopic {
    std::string topic_id;
    IndicatorTriple triple;
    int coverage_rank = 0;
    int intensity_rank = 0;
    AttentionCategory category = AttentionCategory::unpopular;
    bool operator==(const RankedTopic&) const = default;
};

// Ranks and classifies the eligible micro-topics (at least one event in the
// source) of the corpus, optionally restricted to one macro field. Results
// are sorted by (coverage_rank, intensity_rank, topic_id); input order never
// affects membership. Throws EmptySetError when no topic is eligible.
std::vector<RankedTopic> classify_topics(const Corpus& corpus, SourceKind source,
                                         std::optional<MacroField> scope,
                                         double quantile);

struct HotTopicEntry {
    RankedTopic topic;
    std::string label;  // first term of the micro-topic, may be empty
};

struct HotFieldSection {
    MacroField field = MacroField::SSH;
    std::uint64_t m_topics = 0;  // eligible topics in this field
    std::size_t cutoff = 0;      // field-local k
    std::vector<HotTopicEntry> hot;
};

// Per-field hot-topic report: classification runs independently inside each
// macro field (field-local M and k); fields without eligible topics are
// omitted. Throws EmptySetError when no field has any.
struct HotTopicReport {
    SourceKind source = SourceKind::mendeley;
    double quantile = 0.1;
    std::vector<HotFieldSection> sections;
};

HotTopicReport hot_report(const Corpus& corpus, SourceKind source, double quantile);

}  // namespace altpresence
