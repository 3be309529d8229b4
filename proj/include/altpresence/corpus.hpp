#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "altpresence/errors.hpp"
#include "altpresence/sources.hpp"

namespace altpresence {

struct MicroTopic {
    std::string topic_id;
    MacroField field = MacroField::SSH;
    std::vector<std::string> terms;  // up to five label strings
    bool operator==(const MicroTopic&) const = default;
};

struct PublicationRecord {
    std::string pub_id;
    std::string doi;       // empty = absent; stored in normalized form
    std::string pmid;      // empty = absent
    int year = 0;
    DocType doc_type = DocType::other;
    std::string topic_id;  // empty = unclassified
    bool operator==(const PublicationRecord&) const = default;
};

struct IngestMeta {
    std::string pub_file;
    std::string topic_file;
    std::string event_file;
    std::uint64_t pubs_read = 0;
    std::uint64_t pubs_accepted = 0;
    std::uint64_t topics_read = 0;
    std::uint64_t topics_accepted = 0;
    std::uint64_t events_read = 0;
    std::uint64_t events_accepted = 0;
    std::vector<std::string> warnings;
};

// An immutable collection of publications, micro-topics, and per-source event
// counts. Event counts are held as one dense column per source so the
// analytic kernels can stream over them; a missing tally is count 0. Once
// built the corpus is never mutated, which makes unrestricted concurrent
// reads safe.
class Corpus {
public:
    std::size_t n_pubs() const { return pubs_.size(); }
    std::size_t n_topics() const { return topics_.size(); }

    const std::vector<PublicationRecord>& publications() const { return pubs_; }
    const std::vector<MicroTopic>& topics() const { return topics_; }

    std::span<const std::int32_t> years() const { return years_; }
    std::span<const DocType> doc_types() const { return doc_types_; }
    // Index into topics() per publication; -1 = unclassified or unresolved.
    std::span<const std::int32_t> topic_index() const { return topic_idx_; }
    std::span<const std::int32_t> counts(SourceKind s) const {
        return counts_[index_of(s)];
    }

    const IngestMeta& meta() const { return meta_; }

    std::optional<std::size_t> pub_index_of(std::string_view pub_id) const;
    std::optional<std::size_t> topic_index_of(std::string_view topic_id) const;

    // Number of stored non-zero tallies across all sources.
    std::uint64_t stored_tallies() const;

private:
    friend class CorpusBuilder;
    Corpus() = default;

    std::vector<PublicationRecord> pubs_;
    std::vector<MicroTopic> topics_;
    std::vector<std::int32_t> years_;
    std::vector<DocType> doc_types_;
    std::vector<std::int32_t> topic_idx_;
    std::array<std::vector<std::int32_t>, kSourceCount> counts_;
    std::unordered_map<std::string, std::size_t> pub_by_id_;
    std::unordered_map<std::string, std::size_t> topic_by_id_;
    IngestMeta meta_;
};

// Assembles a corpus record by record. Performs no validation beyond resolving
// references at build time; run validate() on the result when the input is not
// trusted. Used by ingest, by the synthetic generator, and by tests that need
// deliberately broken corpora.
class CorpusBuilder {
public:
    CorpusBuilder& add_topic(MicroTopic topic);
    CorpusBuilder& add_publication(PublicationRecord pub);
    // Requires the publication to exist already; later calls overwrite.
    CorpusBuilder& set_count(std::string_view pub_id, SourceKind source,
                             std::int32_t count);
    Corpus build(IngestMeta meta = {});

private:
    std::vector<PublicationRecord> pubs_;
    std::vector<MicroTopic> topics_;
    std::vector<std::array<std::int32_t, kSourceCount>> counts_;
    std::unordered_map<std::string, std::size_t> pub_by_id_;
};

// Canonical DOI form: trimmed, lowercased, URL/scheme prefixes stripped.
// Throws MalformedDoi when the remainder is not "10.<registrant>/<suffix>".
std::string normalize_doi(std::string_view raw);

// True when `pmid` is a digits-only string encoding a positive integer.
bool valid_pmid(std::string_view pmid);

enum class IngestMode { strict, lenient };

struct IngestOptions {
    IngestMode mode = IngestMode::strict;
    // Publications outside this inclusive window are accepted with a warning;
    // the window is a study filter, not a validity rule.
    std::optional<std::pair<int, int>> year_window;
};

// Reads the three canonical files (publications, topics, events). Strict mode
// aborts on the first violating row with its row number; lenient mode skips
// violating rows, reconciles duplicate tallies by keeping the maximum count,
// and records one warning per incident. Malformed UTF-8 and broken framing
// abort in both modes.
Corpus ingest(std::istream& pubs, std::istream& topics, std::istream& events,
              const IngestOptions& options = {},
              std::string pub_name = "publications.csv",
              std::string topic_name = "topics.csv",
              std::string event_name = "events.csv");

Corpus ingest_files(const std::filesystem::path& pubs,
                    const std::filesystem::path& topics,
                    const std::filesystem::path& events,
                    const IngestOptions& options = {});

struct ValidationCheck {
    std::string name;
    std::uint64_t violations = 0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::uint64_t total() const;
};

// Counts violations of every data-model invariant. Reporting only: a corpus
// produced by ingest or the generator always comes back all-zero.
ValidationReport validate(const Corpus& corpus);

// Canonical file emission; re-ingesting the output reproduces the corpus.
void write_corpus(const Corpus& corpus, std::ostream& pubs, std::ostream& topics,
                  std::ostream& events);
void write_corpus_files(const Corpus& corpus, const std::filesystem::path& dir);

// Equality of publications, topics, and counts; ingestion metadata is
// provenance and excluded from the comparison.
bool content_equal(const Corpus& a, const Corpus& b);

}  // namespace altpresence
