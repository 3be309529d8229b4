#include "altpresence/report.hpp"

#include <algorithm>
#include <ostream>

#include "altpresence/csv.hpp"
#include "altpresence/format.hpp"

namespace altpresence::report {

namespace {

void emit_table(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows,
                const Options& options,
                const std::vector<std::string>& comments = {}) {
    if (!options.provenance.empty()) out << "# " << options.provenance << "\n";
    for (const std::string& c : comments) out << "# " << c << "\n";
    if (options.format == Format::csv) {
        csv::write_record(out, header);
        for (const auto& row : rows) csv::write_record(out, row);
        return;
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(width[c] - row[c].size(), ' ');
            }
        }
        out << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

std::vector<std::string> triple_cells(const IndicatorTriple& t) {
    return {std::to_string(t.n_total),       std::to_string(t.n_covered),
            std::to_string(t.n_events),      fixed(t.coverage_pct, 2),
            fixed(t.density, 3),             fixed(t.intensity, 3)};
}

}  // namespace

void emit_indicator_rows(std::ostream& out,
                         const std::vector<std::pair<std::string, IndicatorTriple>>& rows,
                         const Options& options) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& [label, triple] : rows) {
        std::vector<std::string> row = {label};
        const auto tc = triple_cells(triple);
        row.insert(row.end(), tc.begin(), tc.end());
        cells.push_back(std::move(row));
    }
    emit_table(out,
               {"source", "n_total", "n_covered", "n_events", "coverage_pct", "density",
                "intensity"},
               cells, options);
}

void emit_aggregate_triple(std::ostream& out, const IndicatorTriple& triple,
                           const Options& options) {
    if (!options.provenance.empty()) out << "# " << options.provenance << "\n";
    out << "C=" << fixed(triple.coverage_pct, 2) << " D=" << fixed(triple.density, 3)
        << " I=" << fixed(triple.intensity, 3) << "\n";
}

void emit_stratified(std::ostream& out, const StratifiedReport& report,
                     std::optional<std::uint64_t> share_base, const Options& options) {
    std::vector<std::string> header = {"stratum",      "n_total", "n_covered",
                                       "n_events",     "coverage_pct", "density",
                                       "intensity"};
    if (share_base) header.push_back("share_pct");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(report.rows.size());
    for (const StratumRow& row : report.rows) {
        std::vector<std::string> out_row = {row.key};
        const auto tc = triple_cells(row.triple);
        out_row.insert(out_row.end(), tc.begin(), tc.end());
        if (share_base) {
            out_row.push_back(fixed(share_pct(row.triple.n_total, *share_base), 2));
        }
        cells.push_back(std::move(out_row));
    }
    emit_table(out, header, cells, options);
}

void emit_distribution(std::ostream& out, const DistributionSummary& summary,
                       const Options& options) {
    std::vector<std::string> comments;
    comments.push_back("source " + std::string(to_token(summary.source)));
    comments.push_back(summary.skewness
                           ? "skewness " + fixed(*summary.skewness, 6)
                           : std::string("skewness undefined (zero variance)"));
    comments.push_back("max_count " + std::to_string(summary.max_count));
    comments.push_back("n_zero " + std::to_string(summary.n_zero));
    std::vector<std::vector<std::string>> cells;
    cells.reserve(summary.histogram.size());
    for (const HistogramBin& bin : summary.histogram) {
        cells.push_back({std::to_string(bin.lo), std::to_string(bin.hi),
                         std::to_string(bin.freq)});
    }
    emit_table(out, {"bin_lo", "bin_hi", "freq"}, cells, options, comments);
}

void emit_correlation_matrix(std::ostream& out, const CorrelationMatrix& matrix,
                             const Options& options) {
    std::vector<std::vector<std::string>> cells;
    const std::string metric_token(to_token(matrix.metric));
    const std::string excluded = matrix.exclude_mutual_zeros ? "1" : "0";
    for (std::size_t a = 0; a < kSourceCount; ++a) {
        for (std::size_t b = a; b < kSourceCount; ++b) {
            const PairEntry& e = matrix.entries[a][b];
            cells.push_back({std::string(to_token(kAllSources[a])),
                             std::string(to_token(kAllSources[b])), metric_token,
                             e.rho ? fixed(*e.rho, 3) : std::string(),
                             std::to_string(e.n), excluded});
        }
    }
    emit_table(out, {"source_a", "source_b", "metric", "rho", "n", "excluded"}, cells,
               options);
}

void emit_indicator_matrix(std::ostream& out, const IndicatorMatrix& matrix,
                           const Options& options) {
    std::vector<std::vector<std::string>> cells;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a; b < 3; ++b) {
            const auto& rho = matrix.rho[a][b];
            cells.push_back({std::string(to_token(matrix.source)),
                             std::string(to_token(kAllMetrics[a])),
                             std::string(to_token(kAllMetrics[b])),
                             rho ? fixed(*rho, 3) : std::string()});
        }
    }
    emit_table(out, {"source", "metric_a", "metric_b", "rho"}, cells, options);
}

namespace {

std::vector<std::string> topic_row_cells(const TopicRow& row) {
    return {row.field,
            row.topic_id,
            row.label,
            fixed(row.triple.coverage_pct, 2),
            fixed(row.triple.intensity, 3),
            std::to_string(row.triple.n_total),
            std::to_string(row.triple.n_events),
            std::to_string(row.coverage_rank),
            std::to_string(row.intensity_rank),
            std::string(to_token(row.category))};
}

const std::vector<std::string> kTopicHeader = {
    "field",    "topic_id",      "label",          "coverage_pct", "intensity",
    "n_pubs",   "n_events",      "coverage_rank",  "intensity_rank", "category"};

}  // namespace

void emit_topic_rows(std::ostream& out, const std::vector<TopicRow>& rows,
                     const Options& options) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const TopicRow& row : rows) cells.push_back(topic_row_cells(row));
    emit_table(out, kTopicHeader, cells, options);
}

void emit_hot_report(std::ostream& out, const HotTopicReport& report,
                     const Options& options) {
    std::vector<std::string> comments;
    std::vector<std::vector<std::string>> cells;
    for (const HotFieldSection& section : report.sections) {
        comments.push_back("field " + std::string(to_token(section.field)) +
                           " eligible_topics " + std::to_string(section.m_topics) +
                           " cutoff " + std::to_string(section.cutoff));
        for (const HotTopicEntry& entry : section.hot) {
            TopicRow row;
            row.field = std::string(to_token(section.field));
            row.topic_id = entry.topic.topic_id;
            row.label = entry.label;
            row.triple = entry.topic.triple;
            row.coverage_rank = entry.topic.coverage_rank;
            row.intensity_rank = entry.topic.intensity_rank;
            row.category = entry.topic.category;
            cells.push_back(topic_row_cells(row));
        }
    }
    emit_table(out, kTopicHeader, cells, options, comments);
}

void emit_validation(std::ostream& out, const ValidationReport& report,
                     const Options& options) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(report.checks.size());
    for (const ValidationCheck& check : report.checks) {
        cells.push_back({check.name, std::to_string(check.violations)});
    }
    emit_table(out, {"invariant", "violations"}, cells, options);
}

}  // namespace altpresence::report
