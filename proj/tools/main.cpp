// altpresence command-line tool: ingestion, indicator reports, stratified
// reports, correlation matrices, hot-topic reports, and synthetic corpora.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "altpresence/correlate.hpp"
#include "altpresence/corpus.hpp"
#include "altpresence/errors.hpp"
#include "altpresence/format.hpp"
#include "altpresence/indicators.hpp"
#include "altpresence/report.hpp"
#include "altpresence/strata.hpp"
#include "altpresence/synth.hpp"
#include "altpresence/topics.hpp"

#ifndef ALTPRESENCE_VERSION
#define ALTPRESENCE_VERSION "dev"
#endif

namespace {

namespace fs = std::filesystem;
using namespace altpresence;

constexpr const char* kGrammar =
    "altpresence <subcommand> [--pubs F --topics F --events F | --aggregates N,NP,NE |"
    " --seed S --config F] [--source S|all] [--metric coverage|density|intensity]"
    " [--q R] [--scope global|field] [--exclude-mutual-zeros] [--lenient]"
    " [--out PATH] [--format csv|text] [--no-provenance]";

struct CommonArgs {
    std::string pubs, topics, events;
    std::string source = "all";
    std::string metric = "coverage";
    std::string scope = "field";
    std::string format = "csv";
    std::string out;
    std::string aggregates;
    std::string config;
    double q = 0.10;
    bool lenient = false;
    bool exclude_mutual_zeros = false;
    bool no_provenance = false;
    bool log_binned = false;
    bool all_topics = false;
    std::optional<std::int64_t> seed;

    std::string argv_echo;  // original flags, for the provenance line
};

report::Options emit_options(const CommonArgs& args, const std::string& subcommand) {
    report::Options options;
    options.format = args.format == "text" ? report::Format::text : report::Format::csv;
    if (!args.no_provenance) {
        options.provenance =
            "altpresence " ALTPRESENCE_VERSION " " + subcommand + " " + args.argv_echo;
    }
    return options;
}

Corpus load_corpus(const CommonArgs& args) {
    if (args.pubs.empty() || args.topics.empty() || args.events.empty()) {
        throw CLI::ValidationError(
            "corpus subcommands need --pubs, --topics and --events");
    }
    IngestOptions options;
    options.mode = args.lenient ? IngestMode::lenient : IngestMode::strict;
    return ingest_files(args.pubs, args.topics, args.events, options);
}

std::vector<SourceKind> selected_sources(const CommonArgs& args) {
    if (args.source == "all") {
        return {kAllSources.begin(), kAllSources.end()};
    }
    const auto source = parse_source(args.source);
    if (!source) {
        throw CLI::ValidationError("unknown source token \"" + args.source + "\"");
    }
    return {*source};
}

// Single source: --out file or stdout. --source all: fan out one file per
// source under the --out directory.
void for_each_output(const CommonArgs& args, const std::string& subcommand,
                     const std::function<void(SourceKind, std::ostream&)>& write) {
    const auto sources = selected_sources(args);
    const bool fan_out = sources.size() > 1;
    if (fan_out) {
        if (args.out.empty()) {
            throw CLI::ValidationError("--source all needs --out DIRECTORY");
        }
        fs::create_directories(args.out);
    }
    const std::string ext = args.format == "text" ? ".txt" : ".csv";
    for (SourceKind source : sources) {
        if (fan_out) {
            const fs::path path =
                fs::path(args.out) / (subcommand + "." + std::string(to_token(source)) + ext);
            std::ofstream out(path, std::ios::binary);
            if (!out) throw IoError("cannot create " + path.string());
            write(source, out);
        } else if (!args.out.empty()) {
            std::ofstream out(args.out, std::ios::binary);
            if (!out) throw IoError("cannot create " + args.out);
            write(source, out);
        } else {
            write(source, std::cout);
        }
    }
}

int run_ingest(const CommonArgs& args) {
    const Corpus corpus = load_corpus(args);
    const ValidationReport report = validate(corpus);
    const IngestMeta& meta = corpus.meta();
    std::cout << "publications: read " << meta.pubs_read << ", accepted "
              << meta.pubs_accepted << "\n"
              << "topics:       read " << meta.topics_read << ", accepted "
              << meta.topics_accepted << "\n"
              << "events:       read " << meta.events_read << ", accepted "
              << meta.events_accepted << " (stored tallies " << corpus.stored_tallies()
              << ")\n"
              << "warnings:     " << meta.warnings.size() << "\n";
    for (const std::string& w : meta.warnings) std::cout << "  warning: " << w << "\n";
    std::cout << "validation:   " << report.total() << " violation(s)\n";
    return report.total() == 0 ? 0 : 1;
}

int run_indicators(const CommonArgs& args) {
    if (!args.aggregates.empty()) {
        std::uint64_t values[3] = {0, 0, 0};
        std::stringstream ss(args.aggregates);
        std::string part;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, part, ',')) {
                throw CLI::ValidationError("--aggregates needs N,NP,NE");
            }
            try {
                values[i] = std::stoull(part);
            } catch (const std::logic_error&) {
                throw CLI::ValidationError("--aggregates: bad number \"" + part + "\"");
            }
        }
        if (std::getline(ss, part, ',')) {
            throw CLI::ValidationError("--aggregates needs exactly three numbers");
        }
        const IndicatorTriple triple =
            triple_from_aggregates(values[0], values[1], values[2]);
        const auto options = emit_options(args, "indicators");
        if (!args.out.empty()) {
            std::ofstream out(args.out, std::ios::binary);
            if (!out) throw IoError("cannot create " + args.out);
            report::emit_aggregate_triple(out, triple, options);
        } else {
            report::emit_aggregate_triple(std::cout, triple, options);
        }
        return 0;
    }

    const Corpus corpus = load_corpus(args);
    for_each_output(args, "indicators", [&](SourceKind source, std::ostream& out) {
        const IndicatorTriple triple = source_triple(corpus, source);
        report::emit_indicator_rows(out, {{std::string(to_token(source)), triple}},
                                    emit_options(args, "indicators"));
    });
    return 0;
}

int run_stratified(const CommonArgs& args, const std::string& subcommand) {
    const Corpus corpus = load_corpus(args);
    for_each_output(args, subcommand, [&](SourceKind source, std::ostream& out) {
        StratifiedReport strata;
        std::optional<std::uint64_t> share_base;
        if (subcommand == "by-year") {
            strata = triples_by_year(corpus, source);
        } else if (subcommand == "by-field") {
            strata = triples_by_field(corpus, source);
        } else {
            strata = coverage_by_doc_type(corpus, source);
            share_base = corpus.n_pubs();
        }
        report::emit_stratified(out, strata, share_base, emit_options(args, subcommand));
    });
    return 0;
}

int run_distribution(const CommonArgs& args) {
    const Corpus corpus = load_corpus(args);
    for_each_output(args, "distribution", [&](SourceKind source, std::ostream& out) {
        report::emit_distribution(out, count_distribution(corpus, source, args.log_binned),
                                  emit_options(args, "distribution"));
    });
    return 0;
}

int run_correlate(const CommonArgs& args) {
    const Corpus corpus = load_corpus(args);
    const auto options = emit_options(args, "correlate");

    auto write_to_target = [&](const std::function<void(std::ostream&)>& write) {
        if (!args.out.empty()) {
            std::ofstream out(args.out, std::ios::binary);
            if (!out) throw IoError("cannot create " + args.out);
            write(out);
        } else {
            write(std::cout);
        }
    };

    if (args.source != "all") {
        // One source selected: C/D/I intercorrelation for that source.
        if (args.exclude_mutual_zeros) {
            throw CLI::ValidationError(
                "--exclude-mutual-zeros applies to the cross-source matrix only");
        }
        const auto source = parse_source(args.source);
        if (!source) {
            throw CLI::ValidationError("unknown source token \"" + args.source + "\"");
        }
        const IndicatorMatrix matrix = indicator_intercorrelation(corpus, *source);
        write_to_target(
            [&](std::ostream& out) { report::emit_indicator_matrix(out, matrix, options); });
        return 0;
    }

    const auto metric = parse_metric(args.metric);
    if (!metric) throw CLI::ValidationError("unknown metric \"" + args.metric + "\"");
    const CorrelationMatrix matrix =
        cross_source_matrix(corpus, *metric, args.exclude_mutual_zeros);
    write_to_target(
        [&](std::ostream& out) { report::emit_correlation_matrix(out, matrix, options); });
    return 0;
}

int run_hot_topics(const CommonArgs& args) {
    const Corpus corpus = load_corpus(args);
    for_each_output(args, "hot-topics", [&](SourceKind source, std::ostream& out) {
        const auto options = emit_options(args, "hot-topics");
        if (args.scope == "global") {
            auto ranked = classify_topics(corpus, source, std::nullopt, args.q);
            std::vector<report::TopicRow> rows;
            for (const RankedTopic& topic : ranked) {
                if (!args.all_topics && topic.category != AttentionCategory::hot) continue;
                report::TopicRow row;
                const auto idx = corpus.topic_index_of(topic.topic_id);
                const MicroTopic& t = corpus.topics()[*idx];
                row.field = std::string(to_token(t.field));
                row.topic_id = topic.topic_id;
                row.label = t.terms.empty() ? std::string() : t.terms.front();
                row.triple = topic.triple;
                row.coverage_rank = topic.coverage_rank;
                row.intensity_rank = topic.intensity_rank;
                row.category = topic.category;
                rows.push_back(std::move(row));
            }
            report::emit_topic_rows(out, rows, options);
            return;
        }
        if (args.all_topics) {
            // Field-scoped dump: field-local ranks for every eligible topic.
            std::vector<report::TopicRow> rows;
            for (MacroField field : kAllFields) {
                std::vector<RankedTopic> ranked;
                try {
                    ranked = classify_topics(corpus, source, field, args.q);
                } catch (const EmptySetError&) {
                    continue;
                }
                for (const RankedTopic& topic : ranked) {
                    report::TopicRow row;
                    const auto idx = corpus.topic_index_of(topic.topic_id);
                    const MicroTopic& t = corpus.topics()[*idx];
                    row.field = std::string(to_token(field));
                    row.topic_id = topic.topic_id;
                    row.label = t.terms.empty() ? std::string() : t.terms.front();
                    row.triple = topic.triple;
                    row.coverage_rank = topic.coverage_rank;
                    row.intensity_rank = topic.intensity_rank;
                    row.category = topic.category;
                    rows.push_back(std::move(row));
                }
            }
            if (rows.empty()) {
                throw EmptySetError("no field has eligible micro-topics for this source");
            }
            report::emit_topic_rows(out, rows, options);
            return;
        }
        report::emit_hot_report(out, hot_report(corpus, source, args.q), options);
    });
    return 0;
}

int run_generate(const CommonArgs& args) {
    if (args.config.empty()) throw CLI::ValidationError("generate needs --config FILE");
    if (args.out.empty()) throw CLI::ValidationError("generate needs --out DIRECTORY");
    GeneratorConfig config = GeneratorConfig::from_file(args.config);
    if (args.seed) config.seed = static_cast<std::uint64_t>(*args.seed);
    const Corpus corpus = generate_corpus(config);
    write_corpus_files(corpus, args.out);
    std::cout << "generated " << corpus.n_pubs() << " publications, "
              << corpus.n_topics() << " topics, " << corpus.stored_tallies()
              << " tallies into " << args.out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"altmetric presence analytics over publication corpora"};
    app.require_subcommand(1);
    app.footer(std::string("Grammar:\n  ") + kGrammar);
    app.set_version_flag("--version", ALTPRESENCE_VERSION);

    CommonArgs args;
    {
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) {
            if (i > 1) echo << ' ';
            echo << argv[i];
        }
        args.argv_echo = echo.str();
    }

    auto add_corpus_flags = [&args](CLI::App* cmd) {
        cmd->add_option("--pubs", args.pubs, "publications.csv path");
        cmd->add_option("--topics", args.topics, "topics.csv path");
        cmd->add_option("--events", args.events, "events.csv path");
        cmd->add_flag("--lenient", args.lenient,
                      "skip violating rows with warnings instead of aborting");
    };
    auto add_output_flags = [&args](CLI::App* cmd) {
        cmd->add_option("--out", args.out, "output file (or directory with --source all)");
        cmd->add_option("--format", args.format, "csv|text")
            ->check(CLI::IsMember({"csv", "text"}));
        cmd->add_flag("--no-provenance", args.no_provenance,
                      "suppress the leading provenance comment line");
    };
    auto add_source_flag = [&args](CLI::App* cmd) {
        cmd->add_option("--source", args.source,
                        "source token or `all` (fans out one file per source)");
    };

    CLI::App* ingest_cmd =
        app.add_subcommand("ingest", "validate a corpus and print snapshot statistics");
    add_corpus_flags(ingest_cmd);

    CLI::App* indicators_cmd = app.add_subcommand(
        "indicators", "coverage/density/intensity per source, or from aggregates");
    add_corpus_flags(indicators_cmd);
    add_source_flag(indicators_cmd);
    add_output_flags(indicators_cmd);
    indicators_cmd->add_option("--aggregates", args.aggregates,
                               "N,NP,NE — compute one triple from aggregates");

    for (const char* name : {"by-year", "by-field", "by-doctype"}) {
        CLI::App* cmd = app.add_subcommand(
            name, std::string("indicator triples stratified ") + name);
        add_corpus_flags(cmd);
        add_source_flag(cmd);
        add_output_flags(cmd);
    }

    CLI::App* distribution_cmd =
        app.add_subcommand("distribution", "count histogram and skewness per source");
    add_corpus_flags(distribution_cmd);
    add_source_flag(distribution_cmd);
    add_output_flags(distribution_cmd);
    distribution_cmd->add_flag("--log-binned", args.log_binned,
                               "aggregate counts into base-2 bins [0],[1],[2,3],[4,7],...");

    CLI::App* correlate_cmd = app.add_subcommand(
        "correlate",
        "topic-level Spearman matrix across sources (or C/D/I for one --source)");
    add_corpus_flags(correlate_cmd);
    add_source_flag(correlate_cmd);
    add_output_flags(correlate_cmd);
    correlate_cmd->add_option("--metric", args.metric, "coverage|density|intensity")
        ->check(CLI::IsMember({"coverage", "density", "intensity"}));
    correlate_cmd->add_flag("--exclude-mutual-zeros", args.exclude_mutual_zeros,
                            "drop topics where both sources of a pair are zero");

    CLI::App* hot_cmd = app.add_subcommand(
        "hot-topics", "rank topics by coverage and intensity; report the hot quadrant");
    add_corpus_flags(hot_cmd);
    add_source_flag(hot_cmd);
    add_output_flags(hot_cmd);
    hot_cmd->add_option("--q", args.q, "top quantile cutoff (default 0.10)")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), 1.0));
    hot_cmd->add_option("--scope", args.scope, "field (default) or global ranking")
        ->check(CLI::IsMember({"global", "field"}));
    hot_cmd->add_flag("--all-topics", args.all_topics,
                      "emit every eligible topic (quadrant-scatter data), not only hot");

    CLI::App* generate_cmd =
        app.add_subcommand("generate", "write a deterministic synthetic corpus");
    generate_cmd->add_option("--seed", args.seed, "overrides the seed in --config");
    generate_cmd->add_option("--config", args.config, "generator configuration file");
    generate_cmd->add_option("--out", args.out, "output directory for the three files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand("ingest")) return run_ingest(args);
        if (app.got_subcommand("indicators")) return run_indicators(args);
        if (app.got_subcommand("by-year")) return run_stratified(args, "by-year");
        if (app.got_subcommand("by-field")) return run_stratified(args, "by-field");
        if (app.got_subcommand("by-doctype")) return run_stratified(args, "by-doctype");
        if (app.got_subcommand("distribution")) return run_distribution(args);
        if (app.got_subcommand("correlate")) return run_correlate(args);
        if (app.got_subcommand("hot-topics")) return run_hot_topics(args);
        if (app.got_subcommand("generate")) return run_generate(args);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << kGrammar << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
