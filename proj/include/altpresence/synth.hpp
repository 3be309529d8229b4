#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "altpresence/corpus.hpp"
#include "altpresence/sources.hpp"

namespace altpresence {

// Event-generation profile for one source. Coverage probability per
// publication is target_coverage scaled by the publication's field bias and a
// velocity-dependent year factor, renormalized so the corpus-wide expectation
// stays at target_coverage. Positive counts follow a discrete power law with
// the given tail exponent, truncated to [1, 10^6].
struct SourceProfile {
    bool enabled = false;
    double target_coverage = 0.0;   // in [0, 1]
    double tail_exponent = 2.5;     // > 1
    Velocity velocity = Velocity::slow;
    std::array<double, kFieldCount> field_bias = {1.0, 1.0, 1.0, 1.0, 1.0};
};

struct GeneratorConfig {
    std::uint64_t seed = 1;
    std::uint64_t n_pubs = 0;
    int year_min = 0;
    int year_max = 0;
    std::uint32_t n_topics_per_field = 0;
    std::array<double, kFieldCount> field_mix{};     // weights, not normalized
    std::array<double, kDocTypeCount> doc_type_mix{};
    std::array<SourceProfile, kSourceCount> profiles{};

    // Throws InvalidConfig when any invariant fails.
    void check() const;

    // Key/value configuration with [field_mix], [doc_type_mix], and
    // [source.<token>] sections; see the repository README for the format.
    static GeneratorConfig from_stream(std::istream& in, std::string name = "config");
    static GeneratorConfig from_file(const std::filesystem::path& path);
};

// Deterministic in (seed, config): the random source is SplitMix64 consumed
// in a fixed documented order, so equal inputs reproduce the corpus byte for
// byte across platforms. Generation is single-threaded.
Corpus generate_corpus(const GeneratorConfig& config);

// Upper bound of the truncated power-law count support.
inline constexpr std::int32_t kMaxSynthCount = 1'000'000;

}  // namespace altpresence
