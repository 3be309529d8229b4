#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace altpresence::kernels {

// Columnar reduction kernels behind the indicator, stratification, and
// distribution operations. Every kernel comes in a serial reference version
// and an OpenMP version; the unsuffixed entry point dispatches by input size.
// All accumulation is integral, so the parallel results are bit-identical to
// the serial ones regardless of thread count or schedule.

struct PresenceSums {
    std::uint64_t n_covered = 0;  // elements > 0
    std::int64_t n_events = 0;    // sum of elements
    std::uint64_t n_negative = 0;
    bool operator==(const PresenceSums&) const = default;
};

PresenceSums presence_sums_serial(std::span<const std::int32_t> counts);
PresenceSums presence_sums_parallel(std::span<const std::int32_t> counts);
PresenceSums presence_sums(std::span<const std::int32_t> counts);

struct GroupSums {
    std::uint64_t n_total = 0;
    std::uint64_t n_covered = 0;
    std::int64_t n_events = 0;
    bool operator==(const GroupSums&) const = default;
};

// Accumulates per-group presence sums; group[i] < 0 skips element i.
std::vector<GroupSums> grouped_presence_serial(std::span<const std::int32_t> counts,
                                               std::span<const std::int32_t> group,
                                               std::size_t n_groups);
std::vector<GroupSums> grouped_presence_parallel(std::span<const std::int32_t> counts,
                                                 std::span<const std::int32_t> group,
                                                 std::size_t n_groups);
std::vector<GroupSums> grouped_presence(std::span<const std::int32_t> counts,
                                        std::span<const std::int32_t> group,
                                        std::size_t n_groups);

// Exact frequency table, sorted by value.
std::vector<std::pair<std::int32_t, std::uint64_t>> histogram_serial(
    std::span<const std::int32_t> counts);
std::vector<std::pair<std::int32_t, std::uint64_t>> histogram_parallel(
    std::span<const std::int32_t> counts);
std::vector<std::pair<std::int32_t, std::uint64_t>> histogram(
    std::span<const std::int32_t> counts);

// Exact raw power sums in 128-bit integers; feeds the skewness estimate.
struct RawMoments {
    std::uint64_t n = 0;
    __int128 s1 = 0;
    __int128 s2 = 0;
    __int128 s3 = 0;
    bool operator==(const RawMoments&) const = default;
};

RawMoments raw_moments_serial(std::span<const std::int32_t> counts);
RawMoments raw_moments_parallel(std::span<const std::int32_t> counts);
RawMoments raw_moments(std::span<const std::int32_t> counts);

// Inputs at or above this size dispatch to the OpenMP version.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace altpresence::kernels
