#include <doctest.h>

#include <string>
#include <vector>

#include "altpresence/rng.hpp"
#include "altpresence/strata.hpp"
#include "oracles.hpp"

using namespace altpresence;

namespace {

struct PubSpec {
    int year;
    DocType doc_type;
    const char* topic;  // nullptr = unclassified
    std::int32_t twitter;
};

Corpus make_corpus(const std::vector<PubSpec>& specs) {
    CorpusBuilder builder;
    builder.add_topic({"T-SSH", MacroField::SSH, {"ssh term"}});
    builder.add_topic({"T-BHS", MacroField::BHS, {"bhs term"}});
    builder.add_topic({"T-MCS", MacroField::MCS, {"mcs term"}});
    int next_id = 0;
    for (const PubSpec& spec : specs) {
        const std::string id = "p" + std::to_string(++next_id);
        builder.add_publication({id, "10.1/" + id, "", spec.year, spec.doc_type,
                                 spec.topic ? spec.topic : ""});
        if (spec.twitter != 0) builder.set_count(id, SourceKind::twitter, spec.twitter);
    }
    return builder.build();
}

}  // namespace

TEST_SUITE("strata") {

TEST_CASE("single-year corpus collapses to one stratum") {
    const Corpus corpus = make_corpus({{2015, DocType::article, nullptr, 2},
                                       {2015, DocType::article, nullptr, 0}});
    const StratifiedReport report = triples_by_year(corpus, SourceKind::twitter);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].key == "2015");
    CHECK(report.rows[0].triple == source_triple(corpus, SourceKind::twitter));
}

TEST_CASE("triples_by_year matches the worked example") {
    const Corpus corpus = make_corpus({{2014, DocType::article, nullptr, 1},
                                       {2014, DocType::article, nullptr, 0},
                                       {2016, DocType::article, nullptr, 3},
                                       {2016, DocType::article, nullptr, 3}});
    const StratifiedReport report = triples_by_year(corpus, SourceKind::twitter);
    REQUIRE(report.rows.size() == 2);  // 2015 has no publications and no row
    const IndicatorTriple* y2014 = report.find("2014");
    REQUIRE(y2014 != nullptr);
    CHECK(y2014->coverage_pct == doctest::Approx(50.0));
    CHECK(y2014->density == doctest::Approx(0.5));
    CHECK(y2014->intensity == doctest::Approx(1.0));
    const IndicatorTriple* y2016 = report.find("2016");
    REQUIRE(y2016 != nullptr);
    CHECK(y2016->coverage_pct == doctest::Approx(100.0));
    CHECK(y2016->density == doctest::Approx(3.0));
    CHECK(y2016->intensity == doctest::Approx(3.0));
}

TEST_CASE("triples_by_field restricts to classified publications") {
    const Corpus corpus = make_corpus({{2014, DocType::article, "T-SSH", 2},
                                       {2014, DocType::article, "T-MCS", 0},
                                       {2014, DocType::editorial, nullptr, 9}});
    const StratifiedReport report = triples_by_field(corpus, SourceKind::twitter);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].key == "SSH");  // enumeration order
    CHECK(report.rows[0].triple.coverage_pct == doctest::Approx(100.0));
    CHECK(report.rows[0].triple.density == doctest::Approx(2.0));
    CHECK(report.rows[0].triple.intensity == doctest::Approx(2.0));
    CHECK(report.rows[1].key == "MCS");
    CHECK(report.rows[1].triple.coverage_pct == 0.0);
    CHECK(report.rows[1].triple.intensity == 0.0);

    const Corpus unclassified =
        make_corpus({{2014, DocType::editorial, nullptr, 1}});
    CHECK_THROWS_AS(triples_by_field(unclassified, SourceKind::twitter), EmptySetError);
}

TEST_CASE("coverage_by_doc_type reports one row per type present") {
    const Corpus corpus = make_corpus({{2014, DocType::article, nullptr, 1},
                                       {2014, DocType::article, nullptr, 0},
                                       {2014, DocType::letter, nullptr, 0}});
    const StratifiedReport report = coverage_by_doc_type(corpus, SourceKind::twitter);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].key == "article");
    CHECK(report.rows[0].triple.coverage_pct == doctest::Approx(50.0));
    CHECK(report.rows[1].key == "letter");
    CHECK(report.rows[1].triple.coverage_pct == 0.0);
}

TEST_CASE("strata partition the corpus totals and match filtered triples") {
    std::vector<PubSpec> specs;
    SplitMix64 rng(11);
    const DocType doc_types[] = {DocType::article, DocType::review, DocType::letter,
                                 DocType::editorial};
    const char* topics[] = {"T-SSH", "T-BHS", "T-MCS", nullptr};
    for (int i = 0; i < 500; ++i) {
        PubSpec spec;
        spec.year = 2012 + static_cast<int>(rng.below(5));
        spec.doc_type = doc_types[rng.below(4)];
        spec.topic = is_citable(spec.doc_type) ? topics[rng.below(4)] : nullptr;
        spec.twitter = rng.below(3) == 0 ? static_cast<std::int32_t>(rng.below(40)) : 0;
        specs.push_back(spec);
    }
    const Corpus corpus = make_corpus(specs);
    const IndicatorTriple whole = source_triple(corpus, SourceKind::twitter);

    for (auto stratifier : {Stratifier::year, Stratifier::doc_type}) {
        const StratifiedReport report = stratifier == Stratifier::year
                                            ? triples_by_year(corpus, SourceKind::twitter)
                                            : coverage_by_doc_type(corpus, SourceKind::twitter);
        std::uint64_t total = 0, covered = 0, events = 0;
        for (const StratumRow& row : report.rows) {
            total += row.triple.n_total;
            covered += row.triple.n_covered;
            events += row.triple.n_events;
        }
        CHECK(total == whole.n_total);
        CHECK(covered == whole.n_covered);
        CHECK(events == whole.n_events);
    }

    // Field strata partition the classified subset.
    std::uint64_t classified = 0;
    for (auto t : corpus.topic_index()) classified += t >= 0;
    const StratifiedReport by_field = triples_by_field(corpus, SourceKind::twitter);
    std::uint64_t field_total = 0;
    for (const StratumRow& row : by_field.rows) field_total += row.triple.n_total;
    CHECK(field_total == classified);

    // Cross-module consistency: each stratum equals source_triple with the
    // matching filter.
    for (const StratumRow& row : triples_by_year(corpus, SourceKind::twitter).rows) {
        const int year = std::stoi(row.key);
        CHECK(row.triple ==
              source_triple(corpus, SourceKind::twitter,
                            [year](const PublicationRecord& p) { return p.year == year; }));
    }
    for (const StratumRow& row : by_field.rows) {
        const Corpus* c = &corpus;
        CHECK(row.triple ==
              source_triple(corpus, SourceKind::twitter,
                            [&row, c](const PublicationRecord& p) {
                                if (p.topic_id.empty()) return false;
                                const auto idx = c->topic_index_of(p.topic_id);
                                return std::string(to_token(
                                           c->topics()[*idx].field)) == row.key;
                            }));
    }
}

TEST_CASE("count_distribution tabulates exact histograms") {
    const Corpus corpus = make_corpus({{2014, DocType::article, nullptr, 0},
                                       {2014, DocType::article, nullptr, 0},
                                       {2014, DocType::article, nullptr, 1}});
    const DistributionSummary summary =
        count_distribution(corpus, SourceKind::twitter, false);
    REQUIRE(summary.histogram.size() == 2);
    CHECK(summary.histogram[0] == HistogramBin{0, 0, 2});
    CHECK(summary.histogram[1] == HistogramBin{1, 1, 1});
    CHECK(summary.n_zero == 2);
    CHECK(summary.max_count == 1);
}

TEST_CASE("zero variance leaves skewness undefined") {
    const Corpus corpus = make_corpus({{2014, DocType::article, nullptr, 4},
                                       {2014, DocType::article, nullptr, 4},
                                       {2014, DocType::article, nullptr, 4}});
    const DistributionSummary summary =
        count_distribution(corpus, SourceKind::twitter, false);
    CHECK(!summary.skewness.has_value());
}

TEST_CASE("skewness matches the moment-formula oracle") {
    // Nine zeros and a single 10: biased coefficient 2.6667 before adjustment.
    std::vector<PubSpec> specs(9, {2014, DocType::article, nullptr, 0});
    specs.push_back({2014, DocType::article, nullptr, 10});
    const Corpus corpus = make_corpus(specs);
    const DistributionSummary summary =
        count_distribution(corpus, SourceKind::twitter, false);

    std::vector<std::int32_t> counts(9, 0);
    counts.push_back(10);
    const auto expected = oracle::skewness(counts);
    REQUIRE(expected.defined);
    CHECK(expected.g1 == doctest::Approx(8.0 / 3.0).epsilon(1e-9));
    REQUIRE(summary.skewness.has_value());
    CHECK(*summary.skewness == doctest::Approx(expected.adjusted).epsilon(1e-9));
}

TEST_CASE("log-binned histogram aggregates the exact one") {
    std::vector<PubSpec> specs;
    SplitMix64 rng(3);
    for (int i = 0; i < 400; ++i) {
        specs.push_back({2014, DocType::article, nullptr,
                         static_cast<std::int32_t>(rng.below(70))});
    }
    const Corpus corpus = make_corpus(specs);
    const auto exact = count_distribution(corpus, SourceKind::twitter, false);
    const auto binned = count_distribution(corpus, SourceKind::twitter, true);

    std::uint64_t exact_total = 0, binned_total = 0;
    for (const auto& bin : exact.histogram) exact_total += bin.freq;
    for (const auto& bin : binned.histogram) binned_total += bin.freq;
    CHECK(exact_total == corpus.n_pubs());
    CHECK(binned_total == corpus.n_pubs());

    // Each log bin holds exactly the exact-histogram mass of its range.
    for (const auto& bin : binned.histogram) {
        std::uint64_t sum = 0;
        for (const auto& cell : exact.histogram) {
            if (cell.lo >= bin.lo && cell.hi <= bin.hi) sum += cell.freq;
        }
        CHECK(sum == bin.freq);
        if (bin.lo > 0) {
            CHECK(bin.hi == 2 * bin.lo - 1);  // [2^k, 2^{k+1}-1]
        }
    }
    CHECK(binned.skewness == exact.skewness);
}

}  // TEST_SUITE
