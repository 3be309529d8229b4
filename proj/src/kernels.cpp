#include "altpresence/kernels.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altpresence::kernels {

namespace {

bool go_parallel(std::size_t n) {
#ifdef _OPENMP
    return n >= kParallelThreshold && omp_get_max_threads() > 1;
#else
    (void)n;
    return false;
#endif
}

}  // namespace

PresenceSums presence_sums_serial(std::span<const std::int32_t> counts) {
    PresenceSums s;
    for (std::int32_t c : counts) {
        s.n_covered += c > 0;
        s.n_events += c;
        s.n_negative += c < 0;
    }
    return s;
}

PresenceSums presence_sums_parallel(std::span<const std::int32_t> counts) {
#ifdef _OPENMP
    std::uint64_t covered = 0, negative = 0;
    std::int64_t events = 0;
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
#pragma omp parallel for schedule(static) reduction(+ : covered, events, negative)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int32_t c = counts[static_cast<std::size_t>(i)];
        covered += c > 0;
        events += c;
        negative += c < 0;
    }
    return PresenceSums{covered, events, negative};
#else
    return presence_sums_serial(counts);
#endif
}

PresenceSums presence_sums(std::span<const std::int32_t> counts) {
    return go_parallel(counts.size()) ? presence_sums_parallel(counts)
                                      : presence_sums_serial(counts);
}

std::vector<GroupSums> grouped_presence_serial(std::span<const std::int32_t> counts,
                                               std::span<const std::int32_t> group,
                                               std::size_t n_groups) {
    std::vector<GroupSums> sums(n_groups);
    const std::size_t n = counts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t g = group[i];
        if (g < 0) continue;
        GroupSums& out = sums[static_cast<std::size_t>(g)];
        const std::int32_t c = counts[i];
        ++out.n_total;
        out.n_covered += c > 0;
        out.n_events += c;
    }
    return sums;
}

std::vector<GroupSums> grouped_presence_parallel(std::span<const std::int32_t> counts,
                                                 std::span<const std::int32_t> group,
                                                 std::size_t n_groups) {
#ifdef _OPENMP
    std::vector<GroupSums> sums(n_groups);
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
#pragma omp parallel
    {
        std::vector<GroupSums> local(n_groups);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int32_t g = group[static_cast<std::size_t>(i)];
            if (g < 0) continue;
            GroupSums& out = local[static_cast<std::size_t>(g)];
            const std::int32_t c = counts[static_cast<std::size_t>(i)];
            ++out.n_total;
            out.n_covered += c > 0;
            out.n_events += c;
        }
#pragma omp critical
        for (std::size_t g = 0; g < n_groups; ++g) {
            sums[g].n_total += local[g].n_total;
            sums[g].n_covered += local[g].n_covered;
            sums[g].n_events += local[g].n_events;
        }
    }
    return sums;
#else
    return grouped_presence_serial(counts, group, n_groups);
#endif
}

std::vector<GroupSums> grouped_presence(std::span<const std::int32_t> counts,
                                        std::span<const std::int32_t> group,
                                        std::size_t n_groups) {
    return go_parallel(counts.size()) ? grouped_presence_parallel(counts, group, n_groups)
                                      : grouped_presence_serial(counts, group, n_groups);
}

namespace {

std::vector<std::pair<std::int32_t, std::uint64_t>> sorted_pairs(
    const std::unordered_map<std::int32_t, std::uint64_t>& freq) {
    std::vector<std::pair<std::int32_t, std::uint64_t>> out(freq.begin(), freq.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<std::int32_t, std::uint64_t>> histogram_serial(
    std::span<const std::int32_t> counts) {
    std::unordered_map<std::int32_t, std::uint64_t> freq;
    for (std::int32_t c : counts) ++freq[c];
    return sorted_pairs(freq);
}

std::vector<std::pair<std::int32_t, std::uint64_t>> histogram_parallel(
    std::span<const std::int32_t> counts) {
#ifdef _OPENMP
    std::unordered_map<std::int32_t, std::uint64_t> freq;
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
#pragma omp parallel
    {
        std::unordered_map<std::int32_t, std::uint64_t> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) ++local[counts[static_cast<std::size_t>(i)]];
#pragma omp critical
        for (const auto& [value, count] : local) freq[value] += count;
    }
    return sorted_pairs(freq);
#else
    return histogram_serial(counts);
#endif
}

std::vector<std::pair<std::int32_t, std::uint64_t>> histogram(
    std::span<const std::int32_t> counts) {
    return go_parallel(counts.size()) ? histogram_parallel(counts)
                                      : histogram_serial(counts);
}

RawMoments raw_moments_serial(std::span<const std::int32_t> counts) {
    RawMoments m;
    m.n = counts.size();
    for (std::int32_t c : counts) {
        const __int128 v = c;
        m.s1 += v;
        m.s2 += v * v;
        m.s3 += v * v * v;
    }
    return m;
}

RawMoments raw_moments_parallel(std::span<const std::int32_t> counts) {
#ifdef _OPENMP
    RawMoments total;
    total.n = counts.size();
    const std::int64_t n = static_cast<std::int64_t>(counts.size());
#pragma omp parallel
    {
        __int128 s1 = 0, s2 = 0, s3 = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const __int128 v = counts[static_cast<std::size_t>(i)];
            s1 += v;
            s2 += v * v;
            s3 += v * v * v;
        }
#pragma omp critical
        {
            total.s1 += s1;
            total.s2 += s2;
            total.s3 += s3;
        }
    }
    return total;
#else
    return raw_moments_serial(counts);
#endif
}

RawMoments raw_moments(std::span<const std::int32_t> counts) {
    return go_parallel(counts.size()) ? raw_moments_parallel(counts)
                                      : raw_moments_serial(counts);
}

}  // namespace altpresence::kernels
