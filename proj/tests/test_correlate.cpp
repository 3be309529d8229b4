#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "altpresence/correlate.hpp"
#include "altpresence/rng.hpp"
#include "oracles.hpp"

using namespace altpresence;

namespace {

// Four single-publication topics per source-value vector: with one
// publication per topic, the topic density equals that publication's count.
Corpus corpus_from_topic_counts(const std::vector<std::int32_t>& source_a,
                                const std::vector<std::int32_t>& source_b) {
    CorpusBuilder builder;
    for (std::size_t t = 0; t < source_a.size(); ++t) {
        const std::string topic_id = "T" + std::to_string(t + 1);
        builder.add_topic({topic_id, MacroField::BHS, {"term " + std::to_string(t)}});
        const std::string pub_id = "p" + std::to_string(t + 1);
        builder.add_publication({pub_id, "10.1/" + pub_id, "", 2014, DocType::article,
                                 topic_id});
        if (source_a[t] != 0) builder.set_count(pub_id, SourceKind::qa, source_a[t]);
        if (source_b[t] != 0) builder.set_count(pub_id, SourceKind::peer_review, source_b[t]);
    }
    return builder.build();
}

std::vector<double> random_tied_vector(SplitMix64& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = static_cast<double>(rng.below(7));
    return v;
}

bool constant(const std::vector<double>& v) {
    for (double x : v) {
        if (x != v.front()) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("correlate") {

TEST_CASE("fractional ranks average over ties") {
    const std::vector<double> v = {1, 2, 2, 4};
    const auto ranks = fractional_ranks(v);
    CHECK(ranks == std::vector<double>{1.0, 2.5, 2.5, 4.0});
}

TEST_CASE("spearman_rho fixed cases") {
    const std::vector<double> up = {1, 2, 3};
    const std::vector<double> down = {3, 2, 1};
    CHECK(std::fabs(spearman_rho(up, up) - 1.0) < 1e-12);
    CHECK(std::fabs(spearman_rho(up, down) + 1.0) < 1e-12);

    const std::vector<double> x = {1, 2, 2, 4};
    const std::vector<double> y = {1, 3, 2, 4};
    // Average ranks [1, 2.5, 2.5, 4] vs [1, 3, 2, 4]: sqrt(0.9).
    CHECK(spearman_rho(x, y) == doctest::Approx(std::sqrt(0.9)).epsilon(1e-12));
}

TEST_CASE("spearman_rho rejects degenerate input") {
    const std::vector<double> x = {1, 2, 3};
    const std::vector<double> shorter = {1, 2};
    const std::vector<double> flat = {5, 5, 5};
    const std::vector<double> single = {1};
    CHECK_THROWS_AS(spearman_rho(x, shorter), DegenerateInput);
    CHECK_THROWS_AS(spearman_rho(single, single), DegenerateInput);
    CHECK_THROWS_AS(spearman_rho(x, flat), DegenerateInput);
    CHECK_THROWS_AS(spearman_rho(flat, x), DegenerateInput);
}

TEST_CASE("spearman_rho properties: symmetry, negation, monotone invariance") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(40);
        auto x = random_tied_vector(rng, n);
        auto y = random_tied_vector(rng, n);
        if (constant(x) || constant(y)) continue;

        CHECK(std::fabs(spearman_rho(x, x) - 1.0) < 1e-12);
        CHECK(spearman_rho(x, y) == doctest::Approx(spearman_rho(y, x)).epsilon(1e-14));

        auto neg = x;
        for (double& v : neg) v = -v;
        CHECK(spearman_rho(x, neg) == doctest::Approx(-1.0).epsilon(1e-12));

        // Strictly increasing transform preserves ranks exactly.
        auto transformed = x;
        for (double& v : transformed) v = std::exp(v / 3.0) + 5.0 * v;
        CHECK(spearman_rho(transformed, y) ==
              doctest::Approx(spearman_rho(x, y)).epsilon(1e-12));
    }
}

TEST_CASE("spearman_rho matches the rank-then-Pearson oracle on tied data") {
    SplitMix64 rng(31337);
    int tested = 0;
    while (tested < 200) {
        const std::size_t n = 2 + rng.below(49);
        const auto x = random_tied_vector(rng, n);
        const auto y = random_tied_vector(rng, n);
        if (constant(x) || constant(y)) continue;
        ++tested;
        CHECK(std::fabs(spearman_rho(x, y) - oracle::spearman(x, y)) < 1e-12);
    }
}

TEST_CASE("topic metric vectors follow the indicator definitions") {
    CorpusBuilder builder;
    builder.add_topic({"T1", MacroField::SSH, {"one"}});
    builder.add_topic({"T2", MacroField::SSH, {"two"}});
    builder.add_topic({"T-empty", MacroField::MCS, {}});  // no publications
    builder.add_publication({"p1", "10.1/p1", "", 2014, DocType::article, "T1"});
    builder.add_publication({"p2", "10.1/p2", "", 2014, DocType::article, "T1"});
    builder.add_publication({"p3", "10.1/p3", "", 2014, DocType::article, "T2"});
    builder.set_count("p2", SourceKind::twitter, 2);
    const Corpus corpus = builder.build();

    const auto coverage = topic_metric_vector(corpus, SourceKind::twitter, Metric::coverage);
    REQUIRE(coverage.topic_ids == std::vector<std::string>{"T1", "T2"});
    CHECK(coverage.values[0] == doctest::Approx(50.0));
    CHECK(coverage.values[1] == 0.0);

    const auto intensity =
        topic_metric_vector(corpus, SourceKind::twitter, Metric::intensity);
    CHECK(intensity.values[0] == doctest::Approx(2.0));
    CHECK(intensity.values[1] == 0.0);  // all-zero topic: intensity 0 by definition

    const auto density = topic_metric_vector(corpus, SourceKind::twitter, Metric::density);
    CHECK(density.values[0] == doctest::Approx(1.0));
}

TEST_CASE("topics with identical count multisets get identical metric values") {
    CorpusBuilder builder;
    builder.add_topic({"TA", MacroField::LES, {}});
    builder.add_topic({"TB", MacroField::PSE, {}});
    const std::int32_t counts[] = {0, 3, 7};
    for (int i = 0; i < 3; ++i) {
        const std::string a = "a" + std::to_string(i);
        const std::string b = "b" + std::to_string(i);
        builder.add_publication({a, "10.1/" + a, "", 2014, DocType::article, "TA"});
        builder.add_publication({b, "10.1/" + b, "", 2014, DocType::article, "TB"});
        if (counts[i]) {
            builder.set_count(a, SourceKind::news, counts[i]);
            builder.set_count(b, SourceKind::news, counts[2 - i]);  // permuted
        }
    }
    const Corpus corpus = builder.build();
    for (Metric metric : kAllMetrics) {
        const auto vec = topic_metric_vector(corpus, SourceKind::news, metric);
        CHECK(vec.values[0] == vec.values[1]);
    }
}

TEST_CASE("mutual-zero exclusion reduces the pair to its non-zero topics") {
    const Corpus corpus = corpus_from_topic_counts({0, 0, 1, 2}, {0, 0, 2, 1});

    const CorrelationMatrix with_zeros =
        cross_source_matrix(corpus, Metric::density, false);
    const PairEntry& incl = with_zeros.at(SourceKind::qa, SourceKind::peer_review);
    REQUIRE(incl.rho.has_value());
    CHECK(incl.n == 4);
    CHECK(*incl.rho == doctest::Approx(3.5 / 4.5).epsilon(1e-12));

    const CorrelationMatrix excluded =
        cross_source_matrix(corpus, Metric::density, true);
    const PairEntry& excl = excluded.at(SourceKind::qa, SourceKind::peer_review);
    REQUIRE(excl.rho.has_value());
    CHECK(excl.n == 2);
    CHECK(*excl.rho == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("identical topic vectors correlate at exactly 1") {
    const Corpus corpus = corpus_from_topic_counts({0, 1, 2, 5}, {0, 1, 2, 5});
    const CorrelationMatrix matrix = cross_source_matrix(corpus, Metric::density, false);
    const PairEntry& pair = matrix.at(SourceKind::qa, SourceKind::peer_review);
    REQUIRE(pair.rho.has_value());
    CHECK(*pair.rho == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matrix is symmetric with unit diagonal and recorded n") {
    const Corpus corpus = corpus_from_topic_counts({0, 4, 1, 2}, {3, 0, 2, 1});
    for (bool exclude : {false, true}) {
        const CorrelationMatrix matrix =
            cross_source_matrix(corpus, Metric::coverage, exclude);
        for (SourceKind a : kAllSources) {
            for (SourceKind b : kAllSources) {
                CHECK(matrix.at(a, b) == matrix.at(b, a));
            }
            const PairEntry& diag = matrix.at(a, a);
            if (diag.rho) CHECK(*diag.rho == 1.0);
        }
        // Sources with no events at all are constant-zero vectors: undefined
        // against everything, but still present with their n.
        const PairEntry& dead = matrix.at(SourceKind::video, SourceKind::qa);
        CHECK(!dead.rho.has_value());
        if (!exclude) CHECK(dead.n == 4);
    }
}

TEST_CASE("indicator intercorrelation: single-pub topics force density = intensity") {
    // Three topics, one publication each, counts 1/2/3: coverage is constant
    // (100 everywhere), so its rows are undefined; D and I coincide.
    CorpusBuilder builder;
    for (int t = 0; t < 3; ++t) {
        const std::string topic_id = "T" + std::to_string(t + 1);
        builder.add_topic({topic_id, MacroField::SSH, {}});
        const std::string pub_id = "p" + std::to_string(t + 1);
        builder.add_publication({pub_id, "10.1/" + pub_id, "", 2014, DocType::article,
                                 topic_id});
        builder.set_count(pub_id, SourceKind::blogs, t + 1);
    }
    const Corpus corpus = builder.build();
    const IndicatorMatrix matrix = indicator_intercorrelation(corpus, SourceKind::blogs);

    CHECK(!matrix.at(Metric::coverage, Metric::coverage).has_value());
    CHECK(!matrix.at(Metric::coverage, Metric::density).has_value());
    CHECK(!matrix.at(Metric::coverage, Metric::intensity).has_value());
    REQUIRE(matrix.at(Metric::density, Metric::intensity).has_value());
    CHECK(*matrix.at(Metric::density, Metric::intensity) == doctest::Approx(1.0));
    CHECK(*matrix.at(Metric::density, Metric::density) == 1.0);
    CHECK(*matrix.at(Metric::intensity, Metric::intensity) == 1.0);
    // Symmetry.
    CHECK(matrix.at(Metric::intensity, Metric::density) ==
          matrix.at(Metric::density, Metric::intensity));
}

TEST_CASE("fewer than two topics is an empty-set error") {
    CorpusBuilder builder;
    builder.add_topic({"T1", MacroField::SSH, {}});
    builder.add_publication({"p1", "10.1/p1", "", 2014, DocType::article, "T1"});
    const Corpus corpus = builder.build();
    CHECK_THROWS_AS(cross_source_matrix(corpus, Metric::coverage, false), EmptySetError);
    CHECK_THROWS_AS(indicator_intercorrelation(corpus, SourceKind::twitter), EmptySetError);

    CorpusBuilder unclassified;
    unclassified.add_publication({"p1", "10.1/p1", "", 2014, DocType::article, ""});
    CHECK_THROWS_AS(
        topic_metric_vector(unclassified.build(), SourceKind::twitter, Metric::coverage),
        EmptySetError);
}

}  // TEST_SUITE
