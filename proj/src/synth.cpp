#include "altpresence/synth.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "altpresence/rng.hpp"

namespace altpresence {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void config_error(const std::string& name, std::size_t line,
                               const std::string& what) {
    throw InvalidConfig(name + " line " + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& name, std::size_t line, std::string_view v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(std::string(v), &used);
        if (used != v.size()) config_error(name, line, "trailing characters in number");
        return d;
    } catch (const std::logic_error&) {
        config_error(name, line, "unparseable number \"" + std::string(v) + "\"");
    }
}

long long parse_ll(const std::string& name, std::size_t line, std::string_view v) {
    long long out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        config_error(name, line, "unparseable integer \"" + std::string(v) + "\"");
    }
    return out;
}

}  // namespace

void GeneratorConfig::check() const {
    if (n_pubs == 0) throw InvalidConfig("n_pubs must be positive");
    if (year_min > year_max) throw InvalidConfig("year_min exceeds year_max");
    if (n_topics_per_field == 0) throw InvalidConfig("n_topics_per_field must be positive");

    auto check_mix = [](const auto& mix, const char* what) {
        double total = 0.0;
        for (double w : mix) {
            if (!(w >= 0.0)) throw InvalidConfig(std::string(what) + " weights must be non-negative");
            total += w;
        }
        if (!(total > 0.0)) throw InvalidConfig(std::string(what) + " needs at least one positive weight");
    };
    check_mix(field_mix, "field_mix");
    check_mix(doc_type_mix, "doc_type_mix");

    for (SourceKind s : kAllSources) {
        const SourceProfile& p = profiles[index_of(s)];
        if (!p.enabled) continue;
        const std::string token(to_token(s));
        if (!(p.target_coverage >= 0.0 && p.target_coverage <= 1.0)) {
            throw InvalidConfig("source." + token + ": target_coverage must be in [0,1]");
        }
        if (!(p.tail_exponent > 1.0)) {
            throw InvalidConfig("source." + token + ": tail_exponent must exceed 1");
        }
        for (double b : p.field_bias) {
            if (!(b >= 0.0)) {
                throw InvalidConfig("source." + token + ": field_bias must be non-negative");
            }
        }
    }
}

GeneratorConfig GeneratorConfig::from_stream(std::istream& in, std::string name) {
    GeneratorConfig cfg;
    bool saw_n_pubs = false, saw_year_min = false, saw_year_max = false,
         saw_topics = false;

    std::string section;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view v = trim(line);
        if (v.empty() || v.front() == '#' || v.front() == ';') continue;
        if (v.front() == '[') {
            if (v.back() != ']') config_error(name, line_no, "unterminated section header");
            section = std::string(trim(v.substr(1, v.size() - 2)));
            if (section != "field_mix" && section != "doc_type_mix" &&
                !section.starts_with("source.")) {
                config_error(name, line_no, "unknown section [" + section + "]");
            }
            if (section.starts_with("source.")) {
                const auto src = parse_source(section.substr(7));
                if (!src) config_error(name, line_no, "unknown source in [" + section + "]");
                SourceProfile& p = cfg.profiles[index_of(*src)];
                p.enabled = true;
                p.velocity = velocity_of(*src);
            }
            continue;
        }
        const std::size_t eq = v.find('=');
        if (eq == std::string_view::npos) config_error(name, line_no, "expected key = value");
        const std::string key(trim(v.substr(0, eq)));
        const std::string value(trim(v.substr(eq + 1)));

        if (section.empty()) {
            if (key == "seed") {
                cfg.seed = static_cast<std::uint64_t>(parse_ll(name, line_no, value));
            } else if (key == "n_pubs") {
                cfg.n_pubs = static_cast<std::uint64_t>(parse_ll(name, line_no, value));
                saw_n_pubs = true;
            } else if (key == "year_min") {
                cfg.year_min = static_cast<int>(parse_ll(name, line_no, value));
                saw_year_min = true;
            } else if (key == "year_max") {
                cfg.year_max = static_cast<int>(parse_ll(name, line_no, value));
                saw_year_max = true;
            } else if (key == "n_topics_per_field") {
                cfg.n_topics_per_field =
                    static_cast<std::uint32_t>(parse_ll(name, line_no, value));
                saw_topics = true;
            } else {
                config_error(name, line_no, "unknown key \"" + key + "\"");
            }
        } else if (section == "field_mix") {
            const auto field = parse_field(key);
            if (!field) config_error(name, line_no, "unknown field \"" + key + "\"");
            cfg.field_mix[index_of(*field)] = parse_double(name, line_no, value);
        } else if (section == "doc_type_mix") {
            const auto dt = parse_doc_type(key);
            if (!dt) config_error(name, line_no, "unknown doc_type \"" + key + "\"");
            cfg.doc_type_mix[index_of(*dt)] = parse_double(name, line_no, value);
        } else {
            SourceProfile& p = cfg.profiles[index_of(*parse_source(section.substr(7)))];
            if (key == "target_coverage") {
                p.target_coverage = parse_double(name, line_no, value);
            } else if (key == "tail_exponent") {
                p.tail_exponent = parse_double(name, line_no, value);
            } else if (key == "velocity") {
                const auto vel = parse_velocity(value);
                if (!vel) config_error(name, line_no, "unknown velocity \"" + value + "\"");
                p.velocity = *vel;
            } else if (key.starts_with("bias.")) {
                const auto field = parse_field(key.substr(5));
                if (!field) config_error(name, line_no, "unknown field in \"" + key + "\"");
                p.field_bias[index_of(*field)] = parse_double(name, line_no, value);
            } else {
                config_error(name, line_no, "unknown key \"" + key + "\"");
            }
        }
    }

    if (!saw_n_pubs) throw InvalidConfig(name + ": missing n_pubs");
    if (!saw_year_min || !saw_year_max) throw InvalidConfig(name + ": missing year range");
    if (!saw_topics) throw InvalidConfig(name + ": missing n_topics_per_field");
    cfg.check();
    return cfg;
}

GeneratorConfig GeneratorConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return from_stream(in, path.filename().string());
}

namespace {

// Inverse-CDF table for the truncated discrete power law P(X = k) ~ k^-alpha
// on [1, kMaxSynthCount]; cached per exponent.
const std::vector<double>& power_law_cdf(double alpha) {
    static std::map<double, std::vector<double>> cache;
    auto it = cache.find(alpha);
    if (it != cache.end()) return it->second;

    std::vector<double> cdf(static_cast<std::size_t>(kMaxSynthCount));
    double total = 0.0;
    for (std::size_t k = 0; k < cdf.size(); ++k) {
        total += std::pow(static_cast<double>(k + 1), -alpha);
        cdf[k] = total;
    }
    for (double& v : cdf) v /= total;
    cdf.back() = 1.0;
    return cache.emplace(alpha, std::move(cdf)).first->second;
}

std::int32_t sample_power_law(SplitMix64& rng, const std::vector<double>& cdf) {
    const double u = rng.next_double();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::int32_t>(it - cdf.begin()) + 1;
}

std::size_t sample_categorical(SplitMix64& rng, std::span<const double> weights,
                               double total) {
    const double u = rng.next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    // Guards the u == total edge from rounding.
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) return i;
    }
    return 0;
}

double year_multiplier(Velocity velocity, int year, int year_min, int year_max) {
    if (year_min == year_max) return 1.0;
    const double t = static_cast<double>(year - year_min) /
                     static_cast<double>(year_max - year_min);
    switch (velocity) {
        case Velocity::fast:
            return 1.0 + t;          // 1.0 -> 2.0, recent years favoured
        case Velocity::slow:
            return 2.0 - t;          // 2.0 -> 1.0, older years favoured
        case Velocity::delayed:
            return 1.25 - 0.25 * t;  // mild bias toward older years
    }
    return 1.0;
}

std::string zero_pad(std::uint64_t value, int width) {
    std::string digits = std::to_string(value);
    if (digits.size() < static_cast<std::size_t>(width)) {
        digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
    }
    return digits;
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

}  // namespace

Corpus generate_corpus(const GeneratorConfig& config) {
    config.check();
    SplitMix64 rng(config.seed);
    CorpusBuilder builder;

    // Topics: fixed ids per field so corpora of equal shape share vocabulary.
    for (MacroField field : kAllFields) {
        const std::string field_token(to_token(field));
        const std::string lower = lowercase(field_token);
        for (std::uint32_t t = 1; t <= config.n_topics_per_field; ++t) {
            MicroTopic topic;
            topic.topic_id = "T-" + field_token + "-" + zero_pad(t, 4);
            topic.field = field;
            const std::string stem = lower + "-t" + zero_pad(t, 4);
            topic.terms = {stem + "-alpha", stem + "-beta", stem + "-gamma"};
            builder.add_topic(std::move(topic));
        }
    }

    const double field_total =
        std::accumulate(config.field_mix.begin(), config.field_mix.end(), 0.0);
    const double doc_total =
        std::accumulate(config.doc_type_mix.begin(), config.doc_type_mix.end(), 0.0);
    const int n_years = config.year_max - config.year_min + 1;

    // Publications. Draw order per publication: year, doc type, pmid coin,
    // then (for citable types) field and topic.
    std::vector<std::int32_t> field_of(config.n_pubs, -1);
    std::vector<int> year_of(config.n_pubs, config.year_min);
    for (std::uint64_t i = 0; i < config.n_pubs; ++i) {
        PublicationRecord pub;
        pub.pub_id = "P" + zero_pad(i + 1, 8);
        pub.year = config.year_min +
                   static_cast<int>(rng.below(static_cast<std::uint64_t>(n_years)));
        pub.doc_type = kAllDocTypes[sample_categorical(rng, config.doc_type_mix, doc_total)];
        pub.doi = "10.9999/synth." + lowercase(pub.pub_id);
        if (rng.below(2) == 0) pub.pmid = std::to_string(1'000'000 + i);
        if (is_citable(pub.doc_type)) {
            const std::size_t f = sample_categorical(rng, config.field_mix, field_total);
            const std::uint64_t t = rng.below(config.n_topics_per_field);
            pub.topic_id = "T-" + std::string(to_token(kAllFields[f])) + "-" +
                           zero_pad(t + 1, 4);
            field_of[i] = static_cast<std::int32_t>(f);
        }
        year_of[i] = pub.year;
        builder.add_publication(std::move(pub));
    }

    // Events, source by source in enumeration order. Draw order per
    // publication: one coverage draw, plus one count draw when covered.
    std::uint64_t n_tallies = 0;
    for (SourceKind source : kAllSources) {
        const SourceProfile& profile = config.profiles[index_of(source)];
        if (!profile.enabled || profile.target_coverage <= 0.0) continue;

        std::vector<double> mult(config.n_pubs);
        double mult_sum = 0.0;
        for (std::uint64_t i = 0; i < config.n_pubs; ++i) {
            const double bias =
                field_of[i] >= 0 ? profile.field_bias[static_cast<std::size_t>(field_of[i])]
                                 : 1.0;
            mult[i] = bias * year_multiplier(profile.velocity, year_of[i],
                                             config.year_min, config.year_max);
            mult_sum += mult[i];
        }
        if (!(mult_sum > 0.0)) {
            throw InvalidConfig("source." + std::string(to_token(source)) +
                                ": field_bias eliminates all coverage");
        }
        const double mean_mult = mult_sum / static_cast<double>(config.n_pubs);
        const auto& cdf = power_law_cdf(profile.tail_exponent);

        for (std::uint64_t i = 0; i < config.n_pubs; ++i) {
            const double p =
                std::min(1.0, profile.target_coverage * mult[i] / mean_mult);
            if (rng.next_double() < p) {
                builder.set_count("P" + zero_pad(i + 1, 8), source,
                                  sample_power_law(rng, cdf));
                ++n_tallies;
            }
        }
    }

    IngestMeta meta;
    meta.pub_file = "<generated>";
    meta.topic_file = "<generated>";
    meta.event_file = "<generated>";
    meta.pubs_read = meta.pubs_accepted = config.n_pubs;
    meta.topics_read = meta.topics_accepted =
        static_cast<std::uint64_t>(config.n_topics_per_field) * kFieldCount;
    meta.events_read = meta.events_accepted = n_tallies;
    Corpus corpus = builder.build(std::move(meta));
    return corpus;
}

}  // namespace altpresence
