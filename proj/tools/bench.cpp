// Kernel benchmark: serial reference vs OpenMP versions over a synthetic
// corpus, with an equality check on every pair of results.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "altpresence/correlate.hpp"
#include "altpresence/kernels.hpp"
#include "altpresence/strata.hpp"
#include "altpresence/synth.hpp"

using namespace altpresence;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch())
        .count();
}

template <typename F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_ms();
        f();
        best = std::min(best, now_ms() - t0);
    }
    return best;
}

void print_row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-24s %10.2f ms %10.2f ms %7.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "results equal" : "MISMATCH");
}

GeneratorConfig bench_config(std::uint64_t n_pubs) {
    GeneratorConfig cfg;
    cfg.seed = 20250101;
    cfg.n_pubs = n_pubs;
    cfg.year_min = 2012;
    cfg.year_max = 2018;
    cfg.n_topics_per_field = 60;
    cfg.field_mix = {0.086, 0.402, 0.290, 0.147, 0.076};
    cfg.doc_type_mix = {0.803, 0.050, 0.049, 0.043, 0.022, 0.019, 0.015};
    const double coverages[kSourceCount] = {0.89, 0.34, 0.086, 0.04, 0.037, 0.014, 0.011,
                                            0.006, 0.006, 0.004, 0.003, 0.001, 0.77};
    for (std::size_t s = 0; s < kSourceCount; ++s) {
        SourceProfile& p = cfg.profiles[s];
        p.enabled = true;
        p.target_coverage = coverages[s];
        p.tail_exponent = 2.1;
        p.velocity = velocity_of(kAllSources[s]);
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t n_pubs = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; the parallel column runs the serial path\n");
#endif

    std::printf("generating synthetic corpus, n_pubs=%llu ...\n",
                static_cast<unsigned long long>(n_pubs));
    const double t0 = now_ms();
    const Corpus corpus = generate_corpus(bench_config(n_pubs));
    std::printf("generation: %.0f ms, stored tallies %llu\n\n", now_ms() - t0,
                static_cast<unsigned long long>(corpus.stored_tallies()));

    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    const auto counts = corpus.counts(SourceKind::mendeley);

    {
        kernels::PresenceSums a, b;
        const double ts = best_of(reps, [&] { a = kernels::presence_sums_serial(counts); });
        const double tp =
            best_of(reps, [&] { b = kernels::presence_sums_parallel(counts); });
        print_row("presence_sums", ts, tp, a == b);
    }
    {
        // Year grouping over the full corpus.
        std::vector<std::int32_t> group(corpus.n_pubs());
        const auto years = corpus.years();
        for (std::size_t i = 0; i < group.size(); ++i) group[i] = years[i] - 2012;
        std::vector<kernels::GroupSums> a, b;
        const double ts =
            best_of(reps, [&] { a = kernels::grouped_presence_serial(counts, group, 7); });
        const double tp = best_of(
            reps, [&] { b = kernels::grouped_presence_parallel(counts, group, 7); });
        print_row("grouped_presence/year", ts, tp, a == b);
    }
    {
        // Topic grouping: many groups, sparse hits.
        std::vector<kernels::GroupSums> a, b;
        const auto topic_group = corpus.topic_index();
        const double ts = best_of(reps, [&] {
            a = kernels::grouped_presence_serial(counts, topic_group, corpus.n_topics());
        });
        const double tp = best_of(reps, [&] {
            b = kernels::grouped_presence_parallel(counts, topic_group, corpus.n_topics());
        });
        print_row("grouped_presence/topic", ts, tp, a == b);
    }
    {
        std::vector<std::pair<std::int32_t, std::uint64_t>> a, b;
        const double ts = best_of(reps, [&] { a = kernels::histogram_serial(counts); });
        const double tp = best_of(reps, [&] { b = kernels::histogram_parallel(counts); });
        print_row("histogram", ts, tp, a == b);
    }
    {
        kernels::RawMoments a, b;
        const double ts = best_of(reps, [&] { a = kernels::raw_moments_serial(counts); });
        const double tp = best_of(reps, [&] { b = kernels::raw_moments_parallel(counts); });
        print_row("raw_moments", ts, tp, a == b);
    }

    {
        const double t1 = now_ms();
        const CorrelationMatrix m = cross_source_matrix(corpus, Metric::coverage, false);
        std::printf("\ncross_source_matrix over %llu topics: %.0f ms\n",
                    static_cast<unsigned long long>(m.n_topics), now_ms() - t1);
    }
    return 0;
}
