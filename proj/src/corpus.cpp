#include "altpresence/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "altpresence/csv.hpp"

namespace altpresence {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void lowercase_ascii(std::string& s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
}

bool parse_int(std::string_view s, long long& out) {
    s = trim(s);
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::string normalize_doi(std::string_view raw) {
    std::string s(trim(raw));
    if (s.empty()) throw MalformedDoi("empty DOI");
    lowercase_ascii(s);

    static constexpr std::string_view prefixes[] = {
        "https://doi.org/", "http://doi.org/", "https://dx.doi.org/",
        "http://dx.doi.org/", "doi:",
    };
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (std::string_view p : prefixes) {
            if (s.starts_with(p)) {
                s.erase(0, p.size());
                s = std::string(trim(s));
                stripped = true;
            }
        }
    }

    auto malformed = [&raw] {
        throw MalformedDoi("not a DOI: \"" + std::string(raw) + "\"");
    };
    if (!std::string_view(s).starts_with("10.")) malformed();
    // Registrant code: dot-separated digit groups, then "/" and a suffix.
    std::size_t i = 3;
    for (;;) {
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (i == start) malformed();
        if (i < s.size() && s[i] == '.') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= s.size() || s[i] != '/' || i + 1 >= s.size()) malformed();
    return s;
}

bool valid_pmid(std::string_view pmid) {
    if (pmid.empty()) return false;
    bool nonzero = false;
    for (char c : pmid) {
        if (c < '0' || c > '9') return false;
        if (c != '0') nonzero = true;
    }
    return nonzero;
}

std::optional<std::size_t> Corpus::pub_index_of(std::string_view pub_id) const {
    auto it = pub_by_id_.find(std::string(pub_id));
    if (it == pub_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Corpus::topic_index_of(std::string_view topic_id) const {
    auto it = topic_by_id_.find(std::string(topic_id));
    if (it == topic_by_id_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t Corpus::stored_tallies() const {
    std::uint64_t n = 0;
    for (const auto& column : counts_) {
        for (std::int32_t c : column) n += c != 0;
    }
    return n;
}

CorpusBuilder& CorpusBuilder::add_topic(MicroTopic topic) {
    topics_.push_back(std::move(topic));
    return *this;
}

CorpusBuilder& CorpusBuilder::add_publication(PublicationRecord pub) {
    pub_by_id_.emplace(pub.pub_id, pubs_.size());
    pubs_.push_back(std::move(pub));
    counts_.push_back({});
    return *this;
}

CorpusBuilder& CorpusBuilder::set_count(std::string_view pub_id, SourceKind source,
                                        std::int32_t count) {
    auto it = pub_by_id_.find(std::string(pub_id));
    if (it == pub_by_id_.end()) {
        throw ReferentialIntegrityError("set_count: unknown publication \"" +
                                        std::string(pub_id) + "\"");
    }
    counts_[it->second][index_of(source)] = count;
    return *this;
}

Corpus CorpusBuilder::build(IngestMeta meta) {
    Corpus c;
    c.pubs_ = std::move(pubs_);
    c.topics_ = std::move(topics_);
    c.meta_ = std::move(meta);

    c.topic_by_id_.reserve(c.topics_.size());
    for (std::size_t i = 0; i < c.topics_.size(); ++i) {
        c.topic_by_id_.emplace(c.topics_[i].topic_id, i);
    }
    c.pub_by_id_ = std::move(pub_by_id_);

    const std::size_t n = c.pubs_.size();
    c.years_.reserve(n);
    c.doc_types_.reserve(n);
    c.topic_idx_.reserve(n);
    for (auto& col : c.counts_) col.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const PublicationRecord& p = c.pubs_[i];
        c.years_.push_back(p.year);
        c.doc_types_.push_back(p.doc_type);
        std::int32_t ti = -1;
        if (!p.topic_id.empty()) {
            auto it = c.topic_by_id_.find(p.topic_id);
            if (it != c.topic_by_id_.end()) ti = static_cast<std::int32_t>(it->second);
        }
        c.topic_idx_.push_back(ti);
        for (std::size_t s = 0; s < kSourceCount; ++s) {
            c.counts_[s][i] = counts_[i][s];
        }
    }
    return c;
}

namespace {

constexpr std::size_t kMaxWarnings = 1000;

struct RowContext {
    const std::string& file;
    std::size_t row;  // 1-based data row number (header excluded)
    IngestMode mode;
    IngestMeta& meta;

    // Returns true when the row must be skipped (lenient), throws otherwise.
    bool reject(const std::string& why, bool referential = false) const {
        std::ostringstream os;
        os << file << " row " << row << ": " << why;
        if (mode == IngestMode::strict) {
            if (referential) throw ReferentialIntegrityError(os.str());
            throw IngestError(os.str());
        }
        if (meta.warnings.size() < kMaxWarnings) {
            meta.warnings.push_back(os.str() + " (row skipped)");
        }
        return true;
    }

    void warn(const std::string& what) const {
        if (meta.warnings.size() < kMaxWarnings) {
            std::ostringstream os;
            os << file << " row " << row << ": " << what;
            meta.warnings.push_back(os.str());
        }
    }
};

std::vector<std::string> read_header(std::istream& in, const std::string& file,
                                     const std::vector<std::string>& expected) {
    auto rec = csv::read_record(in);
    if (!rec) throw IoError(file + ": empty stream, header row required");
    if (*rec != expected) {
        std::string want;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) want += ",";
            want += expected[i];
        }
        throw IoError(file + ": bad header row, expected \"" + want + "\"");
    }
    return *rec;
}

void check_utf8(const std::vector<std::string>& fields, const std::string& file,
                std::size_t row) {
    for (const std::string& f : fields) {
        if (!csv::utf8_valid(f)) {
            throw IngestError(file + " row " + std::to_string(row) +
                              ": malformed UTF-8 sequence");
        }
    }
}

}  // namespace

Corpus ingest(std::istream& pub_stream, std::istream& topic_stream,
              std::istream& event_stream, const IngestOptions& options,
              std::string pub_name, std::string topic_name, std::string event_name) {
    if (!pub_stream || !topic_stream || !event_stream) {
        throw IoError("unreadable input stream");
    }

    IngestMeta meta;
    meta.pub_file = pub_name;
    meta.topic_file = topic_name;
    meta.event_file = event_name;

    CorpusBuilder builder;

    // Topics first: publication rows reference them.
    read_header(topic_stream, topic_name,
                {"topic_id", "field", "term1", "term2", "term3", "term4", "term5"});
    std::unordered_map<std::string, std::size_t> topic_ids;
    std::size_t row = 0;
    while (auto rec = csv::read_record(topic_stream)) {
        ++row;
        ++meta.topics_read;
        RowContext ctx{topic_name, row, options.mode, meta};
        check_utf8(*rec, topic_name, row);
        if (rec->size() != 7) {
            if (ctx.reject("expected 7 fields, got " + std::to_string(rec->size()))) continue;
        }
        MicroTopic t;
        t.topic_id = (*rec)[0];
        if (t.topic_id.empty()) {
            if (ctx.reject("empty topic_id")) continue;
        }
        if (topic_ids.contains(t.topic_id)) {
            if (ctx.reject("duplicate topic_id \"" + t.topic_id + "\"")) continue;
        }
        auto field = parse_field((*rec)[1]);
        if (!field) {
            if (ctx.reject("unknown field token \"" + (*rec)[1] + "\"")) continue;
        }
        t.field = *field;
        for (std::size_t i = 2; i < rec->size(); ++i) {
            if (!(*rec)[i].empty()) t.terms.push_back((*rec)[i]);
        }
        topic_ids.emplace(t.topic_id, meta.topics_accepted);
        builder.add_topic(std::move(t));
        ++meta.topics_accepted;
    }

    read_header(pub_stream, pub_name,
                {"pub_id", "doi", "pmid", "year", "doc_type", "topic_id"});
    std::unordered_map<std::string, bool> pub_seen;
    row = 0;
    while (auto rec = csv::read_record(pub_stream)) {
        ++row;
        ++meta.pubs_read;
        RowContext ctx{pub_name, row, options.mode, meta};
        check_utf8(*rec, pub_name, row);
        if (rec->size() != 6) {
            if (ctx.reject("expected 6 fields, got " + std::to_string(rec->size()))) continue;
        }
        PublicationRecord p;
        p.pub_id = (*rec)[0];
        if (p.pub_id.empty()) {
            if (ctx.reject("empty pub_id")) continue;
        }
        if (pub_seen.contains(p.pub_id)) {
            if (ctx.reject("duplicate pub_id \"" + p.pub_id + "\"")) continue;
        }
        const std::string& raw_doi = (*rec)[1];
        const std::string& raw_pmid = (*rec)[2];
        if (raw_doi.empty() && raw_pmid.empty()) {
            if (ctx.reject("publication needs a DOI or a PubMed ID")) continue;
        }
        if (!raw_doi.empty()) {
            try {
                p.doi = normalize_doi(raw_doi);
            } catch (const MalformedDoi& e) {
                if (ctx.reject(e.what())) continue;
            }
        }
        if (!raw_pmid.empty()) {
            if (!valid_pmid(raw_pmid)) {
                if (ctx.reject("pmid is not a positive integer: \"" + raw_pmid + "\"")) continue;
            }
            p.pmid = raw_pmid;
        }
        long long year = 0;
        if (!parse_int((*rec)[3], year)) {
            if (ctx.reject("unparseable year \"" + (*rec)[3] + "\"")) continue;
        }
        p.year = static_cast<int>(year);
        auto dt = parse_doc_type((*rec)[4]);
        if (!dt) {
            if (ctx.reject("unknown doc_type token \"" + (*rec)[4] + "\"")) continue;
        }
        p.doc_type = *dt;
        p.topic_id = (*rec)[5];
        if (!p.topic_id.empty()) {
            if (!topic_ids.contains(p.topic_id)) {
                if (ctx.reject("topic_id \"" + p.topic_id + "\" does not resolve", true))
                    continue;
            }
            if (!is_citable(p.doc_type)) {
                if (ctx.reject("doc_type \"" + std::string(to_token(p.doc_type)) +
                               "\" is not eligible for a micro-topic"))
                    continue;
            }
        }
        if (options.year_window &&
            (p.year < options.year_window->first || p.year > options.year_window->second)) {
            ctx.warn("year " + std::to_string(p.year) + " outside window [" +
                     std::to_string(options.year_window->first) + "," +
                     std::to_string(options.year_window->second) + "]");
        }
        pub_seen.emplace(p.pub_id, true);
        builder.add_publication(std::move(p));
        ++meta.pubs_accepted;
    }

    read_header(event_stream, event_name, {"pub_id", "source", "count"});
    // Already-seen (publication, source) pairs and their stored counts.
    struct TallySlots {
        std::array<std::int32_t, kSourceCount> value{};
        std::array<bool, kSourceCount> seen{};
    };
    std::unordered_map<std::string, TallySlots> tally;
    row = 0;
    while (auto rec = csv::read_record(event_stream)) {
        ++row;
        ++meta.events_read;
        RowContext ctx{event_name, row, options.mode, meta};
        check_utf8(*rec, event_name, row);
        if (rec->size() != 3) {
            if (ctx.reject("expected 3 fields, got " + std::to_string(rec->size()))) continue;
        }
        const std::string& pub_id = (*rec)[0];
        if (!pub_seen.contains(pub_id)) {
            if (ctx.reject("pub_id \"" + pub_id + "\" does not resolve", true)) continue;
        }
        auto src = parse_source((*rec)[1]);
        if (!src) {
            if (ctx.reject("unknown source token \"" + (*rec)[1] + "\"")) continue;
        }
        long long count = 0;
        if (!parse_int((*rec)[2], count)) {
            if (ctx.reject("unparseable count \"" + (*rec)[2] + "\"")) continue;
        }
        if (count < 0) {
            if (ctx.reject("negative count " + std::to_string(count))) continue;
        }
        if (count > INT32_MAX) {
            if (ctx.reject("count " + std::to_string(count) + " exceeds supported range"))
                continue;
        }
        auto& slots = tally.try_emplace(pub_id).first->second;
        const std::size_t si = index_of(*src);
        const auto c32 = static_cast<std::int32_t>(count);
        if (slots.seen[si]) {
            if (options.mode == IngestMode::strict) {
                throw IngestError(event_name + " row " + std::to_string(row) +
                                  ": duplicate tally for (" + pub_id + ", " +
                                  std::string(to_token(*src)) + ")");
            }
            // Counts are unique users; conflicting snapshots reconcile to the
            // maximum rather than the sum.
            ctx.warn("duplicate tally for (" + pub_id + ", " +
                     std::string(to_token(*src)) + "), keeping max(" +
                     std::to_string(slots.value[si]) + ", " + std::to_string(count) + ")");
            if (c32 > slots.value[si]) {
                slots.value[si] = c32;
                builder.set_count(pub_id, *src, c32);
            }
            ++meta.events_accepted;
            continue;
        }
        slots.seen[si] = true;
        slots.value[si] = c32;
        builder.set_count(pub_id, *src, c32);
        ++meta.events_accepted;
    }

    return builder.build(std::move(meta));
}

Corpus ingest_files(const std::filesystem::path& pubs,
                    const std::filesystem::path& topics,
                    const std::filesystem::path& events,
                    const IngestOptions& options) {
    std::ifstream pub_stream(pubs, std::ios::binary);
    std::ifstream topic_stream(topics, std::ios::binary);
    std::ifstream event_stream(events, std::ios::binary);
    if (!pub_stream) throw IoError("cannot open " + pubs.string());
    if (!topic_stream) throw IoError("cannot open " + topics.string());
    if (!event_stream) throw IoError("cannot open " + events.string());
    return ingest(pub_stream, topic_stream, event_stream, options,
                  pubs.filename().string(), topics.filename().string(),
                  events.filename().string());
}

std::uint64_t ValidationReport::total() const {
    std::uint64_t sum = 0;
    for (const auto& check : checks) sum += check.violations;
    return sum;
}

ValidationReport validate(const Corpus& corpus) {
    ValidationReport report;
    auto add = [&report](std::string name) -> std::uint64_t& {
        report.checks.push_back({std::move(name), 0});
        return report.checks.back().violations;
    };

    auto& pub_unique = add("pub_id unique");
    auto& pub_identifier = add("publication has doi or pmid");
    auto& pub_doi = add("doi is normalized and well-formed");
    auto& pub_pmid = add("pmid is a positive integer");
    auto& pub_topic_ref = add("topic reference resolves");
    auto& pub_citable = add("classified publication has citable doc_type");
    auto& topic_unique = add("topic_id unique");
    auto& topic_terms = add("topic has at most 5 terms");
    auto& tally_count = add("tally count is non-negative");
    add("tally references a publication");        // structurally impossible here
    add("one tally per (publication, source)");   // dense storage enforces this

    std::unordered_map<std::string, int> seen_pub;
    const auto topic_idx = corpus.topic_index();
    for (std::size_t i = 0; i < corpus.n_pubs(); ++i) {
        const PublicationRecord& p = corpus.publications()[i];
        if (++seen_pub[p.pub_id] > 1) ++pub_unique;
        if (p.doi.empty() && p.pmid.empty()) ++pub_identifier;
        if (!p.doi.empty()) {
            try {
                if (normalize_doi(p.doi) != p.doi) ++pub_doi;
            } catch (const MalformedDoi&) {
                ++pub_doi;
            }
        }
        if (!p.pmid.empty() && !valid_pmid(p.pmid)) ++pub_pmid;
        const bool classified = !p.topic_id.empty();
        if (classified && topic_idx[i] < 0) ++pub_topic_ref;
        if (classified && !is_citable(p.doc_type)) ++pub_citable;
    }

    std::unordered_map<std::string, int> seen_topic;
    for (const MicroTopic& t : corpus.topics()) {
        if (++seen_topic[t.topic_id] > 1) ++topic_unique;
        if (t.terms.size() > 5) ++topic_terms;
    }

    for (SourceKind s : kAllSources) {
        for (std::int32_t c : corpus.counts(s)) {
            if (c < 0) ++tally_count;
        }
    }
    return report;
}

void write_corpus(const Corpus& corpus, std::ostream& pubs, std::ostream& topics,
                  std::ostream& events) {
    csv::write_record(pubs, {"pub_id", "doi", "pmid", "year", "doc_type", "topic_id"});
    for (const PublicationRecord& p : corpus.publications()) {
        csv::write_record(pubs, {p.pub_id, p.doi, p.pmid, std::to_string(p.year),
                                 std::string(to_token(p.doc_type)), p.topic_id});
    }

    csv::write_record(topics,
                      {"topic_id", "field", "term1", "term2", "term3", "term4", "term5"});
    for (const MicroTopic& t : corpus.topics()) {
        std::vector<std::string> rec = {t.topic_id, std::string(to_token(t.field))};
        for (std::size_t i = 0; i < 5; ++i) {
            rec.push_back(i < t.terms.size() ? t.terms[i] : std::string());
        }
        csv::write_record(topics, rec);
    }

    csv::write_record(events, {"pub_id", "source", "count"});
    for (std::size_t i = 0; i < corpus.n_pubs(); ++i) {
        for (SourceKind s : kAllSources) {
            std::int32_t c = corpus.counts(s)[i];
            if (c != 0) {
                csv::write_record(events, {corpus.publications()[i].pub_id,
                                           std::string(to_token(s)), std::to_string(c)});
            }
        }
    }
}

void write_corpus_files(const Corpus& corpus, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream pubs(dir / "publications.csv", std::ios::binary);
    std::ofstream topics(dir / "topics.csv", std::ios::binary);
    std::ofstream events(dir / "events.csv", std::ios::binary);
    if (!pubs || !topics || !events) {
        throw IoError("cannot create corpus files under " + dir.string());
    }
    write_corpus(corpus, pubs, topics, events);
}

bool content_equal(const Corpus& a, const Corpus& b) {
    if (a.publications() != b.publications()) return false;
    if (a.topics() != b.topics()) return false;
    for (SourceKind s : kAllSources) {
        auto ca = a.counts(s);
        auto cb = b.counts(s);
        if (!std::equal(ca.begin(), ca.end(), cb.begin(), cb.end())) return false;
    }
    return true;
}

}  // namespace altpresence
