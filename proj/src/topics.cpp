#include "altpresence/topics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "altpresence/kernels.hpp"

namespace altpresence {

std::string_view to_token(AttentionCategory c) {
    switch (c) {
        case AttentionCategory::hot: return "hot";
        case AttentionCategory::star_papers: return "star_papers";
        case AttentionCategory::popular: return "popular";
        case AttentionCategory::unpopular: return "unpopular";
    }
    return "?";
}

std::vector<int> competition_rank(std::span<const double> values,
                                  std::span<const double> tiebreak) {
    if (!tiebreak.empty() && tiebreak.size() != values.size()) {
        throw LengthMismatch("tiebreak length " + std::to_string(tiebreak.size()) +
                             " does not match value length " +
                             std::to_string(values.size()));
    }
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto key_less_desc = [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        if (!tiebreak.empty() && tiebreak[a] != tiebreak[b]) return tiebreak[a] > tiebreak[b];
        return false;
    };
    std::stable_sort(order.begin(), order.end(), key_less_desc);

    std::vector<int> ranks(n);
    int current_rank = 1;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t i = order[pos];
        if (pos > 0) {
            const std::size_t prev = order[pos - 1];
            const bool tied = values[i] == values[prev] &&
                              (tiebreak.empty() || tiebreak[i] == tiebreak[prev]);
            if (!tied) current_rank = static_cast<int>(pos) + 1;
        }
        ranks[i] = current_rank;
    }
    return ranks;
}

namespace {

// floor(q*M) with a nudge so that products like 0.3*10, which land one ulp
// under the integer, still floor to it.
std::size_t cutoff_for(double quantile, std::size_t m) {
    return static_cast<std::size_t>(
        std::floor(quantile * static_cast<double>(m) + 1e-9));
}

}  // namespace

ClassifyResult rank_and_classify(const ClassifyInput& input, double quantile) {
    if (!(quantile > 0.0 && quantile <= 1.0)) {
        throw std::invalid_argument("quantile must be in (0, 1]");
    }
    const std::size_t m = input.coverage.size();
    if (input.intensity.size() != m || input.events.size() != m) {
        throw LengthMismatch("classification inputs must have equal lengths");
    }
    ClassifyResult result;
    result.coverage_rank = competition_rank(input.coverage, input.events);
    result.intensity_rank = competition_rank(input.intensity, input.events);
    result.cutoff = cutoff_for(quantile, m);

    const int k = static_cast<int>(result.cutoff);
    result.category.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool broad = result.coverage_rank[i] <= k;
        const bool deep = result.intensity_rank[i] <= k;
        result.category[i] = broad ? (deep ? AttentionCategory::hot
                                           : AttentionCategory::popular)
                                   : (deep ? AttentionCategory::star_papers
                                           : AttentionCategory::unpopular);
    }
    return result;
}

namespace {

struct EligibleTopics {
    std::vector<std::size_t> topic_index;       // corpus topic indices
    std::vector<IndicatorTriple> triples;       // aligned
};

EligibleTopics eligible_topics(const Corpus& corpus, SourceKind source,
                               std::optional<MacroField> scope) {
    const auto sums = kernels::grouped_presence(corpus.counts(source),
                                                corpus.topic_index(), corpus.n_topics());
    EligibleTopics out;
    for (std::size_t t = 0; t < sums.size(); ++t) {
        if (sums[t].n_total == 0) continue;
        if (scope && corpus.topics()[t].field != *scope) continue;
        if (sums[t].n_events < 1) continue;  // no event in this source
        out.topic_index.push_back(t);
        out.triples.push_back(triple_from_aggregates(
            sums[t].n_total, sums[t].n_covered,
            static_cast<std::uint64_t>(sums[t].n_events)));
    }
    return out;
}

std::vector<RankedTopic> classify_eligible(const Corpus& corpus,
                                           const EligibleTopics& eligible,
                                           double quantile) {
    ClassifyInput input;
    const std::size_t m = eligible.topic_index.size();
    input.coverage.reserve(m);
    input.intensity.reserve(m);
    input.events.reserve(m);
    for (const IndicatorTriple& t : eligible.triples) {
        input.coverage.push_back(t.coverage_pct);
        input.intensity.push_back(t.intensity);
        input.events.push_back(static_cast<double>(t.n_events));
    }
    const ClassifyResult result = rank_and_classify(input, quantile);

    std::vector<RankedTopic> ranked;
    ranked.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        ranked.push_back({corpus.topics()[eligible.topic_index[i]].topic_id,
                          eligible.triples[i], result.coverage_rank[i],
                          result.intensity_rank[i], result.category[i]});
    }
    std::sort(ranked.begin(), ranked.end(),
              [](const RankedTopic& a, const RankedTopic& b) {
                  if (a.coverage_rank != b.coverage_rank)
                      return a.coverage_rank < b.coverage_rank;
                  if (a.intensity_rank != b.intensity_rank)
                      return a.intensity_rank < b.intensity_rank;
                  return a.topic_id < b.topic_id;
              });
    return ranked;
}

}  // namespace

std::vector<RankedTopic> classify_topics(const Corpus& corpus, SourceKind source,
                                         std::optional<MacroField> scope,
                                         double quantile) {
    const EligibleTopics eligible = eligible_topics(corpus, source, scope);
    if (eligible.topic_index.empty()) {
        throw EmptySetError("no eligible micro-topics (at least one event required)");
    }
    return classify_eligible(corpus, eligible, quantile);
}

HotTopicReport hot_report(const Corpus& corpus, SourceKind source, double quantile) {
    HotTopicReport report;
    report.source = source;
    report.quantile = quantile;
    for (MacroField field : kAllFields) {
        const EligibleTopics eligible = eligible_topics(corpus, source, field);
        if (eligible.topic_index.empty()) continue;  // field omitted
        const auto ranked = classify_eligible(corpus, eligible, quantile);

        HotFieldSection section;
        section.field = field;
        section.m_topics = eligible.topic_index.size();
        section.cutoff = cutoff_for(quantile, eligible.topic_index.size());
        for (const RankedTopic& topic : ranked) {
            if (topic.category != AttentionCategory::hot) continue;
            const auto idx = corpus.topic_index_of(topic.topic_id);
            std::string label;
            if (idx && !corpus.topics()[*idx].terms.empty()) {
                label = corpus.topics()[*idx].terms.front();
            }
            section.hot.push_back({topic, std::move(label)});
        }
        report.sections.push_back(std::move(section));
    }
    if (report.sections.empty()) {
        throw EmptySetError("no field has eligible micro-topics for this source");
    }
    return report;
}

}  // namespace altpresence
