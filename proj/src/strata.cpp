#include "altpresence/strata.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "altpresence/kernels.hpp"

namespace altpresence {

const IndicatorTriple* StratifiedReport::find(std::string_view key) const {
    for (const StratumRow& row : rows) {
        if (row.key == key) return &row.triple;
    }
    return nullptr;
}

namespace {

IndicatorTriple triple_from_sums(const kernels::GroupSums& g) {
    if (g.n_events < 0) {
        throw InconsistentAggregates("negative event sum in stratum");
    }
    return triple_from_aggregates(g.n_total, g.n_covered,
                                  static_cast<std::uint64_t>(g.n_events));
}

}  // namespace

StratifiedReport triples_by_year(const Corpus& corpus, SourceKind source) {
    if (corpus.n_pubs() == 0) throw EmptySetError("year stratification of an empty corpus");
    const auto years = corpus.years();
    const auto [lo_it, hi_it] = std::minmax_element(years.begin(), years.end());
    const int year_lo = *lo_it;
    const int year_hi = *hi_it;

    std::vector<std::int32_t> group(years.size());
    for (std::size_t i = 0; i < years.size(); ++i) group[i] = years[i] - year_lo;
    const auto sums = kernels::grouped_presence(
        corpus.counts(source), group, static_cast<std::size_t>(year_hi - year_lo) + 1);

    StratifiedReport report{source, Stratifier::year, {}};
    for (std::size_t g = 0; g < sums.size(); ++g) {
        if (sums[g].n_total == 0) continue;
        report.rows.push_back(
            {std::to_string(year_lo + static_cast<int>(g)), triple_from_sums(sums[g])});
    }
    return report;
}

StratifiedReport triples_by_field(const Corpus& corpus, SourceKind source) {
    const auto topic_idx = corpus.topic_index();
    std::vector<std::int32_t> group(topic_idx.size(), -1);
    bool any = false;
    for (std::size_t i = 0; i < topic_idx.size(); ++i) {
        if (topic_idx[i] < 0) continue;  // unclassified publications drop out
        group[i] = static_cast<std::int32_t>(
            index_of(corpus.topics()[static_cast<std::size_t>(topic_idx[i])].field));
        any = true;
    }
    if (!any) throw EmptySetError("corpus has no classified publications");

    const auto sums = kernels::grouped_presence(corpus.counts(source), group, kFieldCount);
    StratifiedReport report{source, Stratifier::field, {}};
    for (MacroField f : kAllFields) {
        const auto& g = sums[index_of(f)];
        if (g.n_total == 0) continue;
        report.rows.push_back({std::string(to_token(f)), triple_from_sums(g)});
    }
    return report;
}

StratifiedReport coverage_by_doc_type(const Corpus& corpus, SourceKind source) {
    if (corpus.n_pubs() == 0) {
        throw EmptySetError("doc-type stratification of an empty corpus");
    }
    const auto doc_types = corpus.doc_types();
    std::vector<std::int32_t> group(doc_types.size());
    for (std::size_t i = 0; i < doc_types.size(); ++i) {
        group[i] = static_cast<std::int32_t>(index_of(doc_types[i]));
    }
    const auto sums = kernels::grouped_presence(corpus.counts(source), group, kDocTypeCount);
    StratifiedReport report{source, Stratifier::doc_type, {}};
    for (DocType t : kAllDocTypes) {
        const auto& g = sums[index_of(t)];
        if (g.n_total == 0) continue;
        report.rows.push_back({std::string(to_token(t)), triple_from_sums(g)});
    }
    return report;
}

namespace {

// Bin index for the base-2 log binning: 0 -> bin 0, otherwise 1 + floor(log2).
int log_bin_of(std::int32_t c) {
    return c == 0 ? 0 : std::bit_width(static_cast<std::uint32_t>(c));
}

std::optional<double> adjusted_skewness(const kernels::RawMoments& m) {
    const std::uint64_t n = m.n;
    if (n < 3) return std::nullopt;
    // Zero variance detected exactly: n*s2 == s1^2 over 128-bit integers.
    if (static_cast<__int128>(n) * m.s2 == m.s1 * m.s1) return std::nullopt;
    const long double nn = static_cast<long double>(n);
    const long double mean = static_cast<long double>(m.s1) / nn;
    const long double m2 = static_cast<long double>(m.s2) / nn - mean * mean;
    const long double m3 = static_cast<long double>(m.s3) / nn -
                           3.0L * mean * static_cast<long double>(m.s2) / nn +
                           2.0L * mean * mean * mean;
    const long double g1 = m3 / std::pow(m2, 1.5L);
    const long double adjusted =
        g1 * std::sqrt(nn * (nn - 1.0L)) / (nn - 2.0L);
    return static_cast<double>(adjusted);
}

}  // namespace

DistributionSummary count_distribution(const Corpus& corpus, SourceKind source,
                                       bool log_binned) {
    if (corpus.n_pubs() == 0) throw EmptySetError("distribution of an empty corpus");
    const auto column = corpus.counts(source);
    const auto exact = kernels::histogram(column);
    if (exact.front().first < 0) {
        throw std::invalid_argument("count_distribution: negative count in corpus");
    }

    DistributionSummary summary;
    summary.source = source;
    summary.log_binned = log_binned;
    summary.max_count = exact.back().first;
    summary.n_zero = exact.front().first == 0 ? exact.front().second : 0;
    summary.skewness = adjusted_skewness(kernels::raw_moments(column));

    if (!log_binned) {
        summary.histogram.reserve(exact.size());
        for (const auto& [value, freq] : exact) {
            summary.histogram.push_back({value, value, freq});
        }
        return summary;
    }

    const int top_bin = log_bin_of(summary.max_count);
    std::vector<std::uint64_t> freq(static_cast<std::size_t>(top_bin) + 1, 0);
    for (const auto& [value, count] : exact) {
        freq[static_cast<std::size_t>(log_bin_of(value))] += count;
    }
    for (int b = 0; b <= top_bin; ++b) {
        if (freq[static_cast<std::size_t>(b)] == 0) continue;
        HistogramBin bin;
        bin.lo = b == 0 ? 0 : static_cast<std::int32_t>(std::int64_t{1} << (b - 1));
        bin.hi = b == 0 ? 0 : static_cast<std::int32_t>((std::int64_t{1} << b) - 1);
        bin.freq = freq[static_cast<std::size_t>(b)];
        summary.histogram.push_back(bin);
    }
    return summary;
}

}  // namespace altpresence
