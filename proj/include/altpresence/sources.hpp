#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace altpresence {

// The thirteen event sources tracked by the engine: twelve altmetric data
// sources plus citation counts, which serve as the benchmark column.
enum class SourceKind : std::uint8_t {
    mendeley,
    twitter,
    facebook,
    news,
    blogs,
    wikipedia,
    policy,
    reddit,
    f1000,
    video,
    peer_review,
    qa,
    citations,
};

inline constexpr std::size_t kSourceCount = 13;

inline constexpr std::array<SourceKind, kSourceCount> kAllSources = {
    SourceKind::mendeley, SourceKind::twitter,     SourceKind::facebook,
    SourceKind::news,     SourceKind::blogs,       SourceKind::wikipedia,
    SourceKind::policy,   SourceKind::reddit,      SourceKind::f1000,
    SourceKind::video,    SourceKind::peer_review, SourceKind::qa,
    SourceKind::citations,
};

// How quickly a source accumulates events after publication. Fast sources
// favour recent publications, slow ones favour older publications, and the
// delayed class models readership that trails publication by a short lag.
enum class Velocity : std::uint8_t { fast, slow, delayed };

enum class DocType : std::uint8_t {
    article,
    review,
    editorial,
    meeting_abstract,
    letter,
    book_review,
    other,
};

inline constexpr std::size_t kDocTypeCount = 7;

inline constexpr std::array<DocType, kDocTypeCount> kAllDocTypes = {
    DocType::article, DocType::review,      DocType::editorial,
    DocType::meeting_abstract, DocType::letter, DocType::book_review,
    DocType::other,
};

enum class MacroField : std::uint8_t { SSH, BHS, PSE, LES, MCS };

inline constexpr std::size_t kFieldCount = 5;

inline constexpr std::array<MacroField, kFieldCount> kAllFields = {
    MacroField::SSH, MacroField::BHS, MacroField::PSE, MacroField::LES,
    MacroField::MCS,
};

std::string_view to_token(SourceKind s);
std::string_view to_token(DocType t);
std::string_view to_token(MacroField f);
std::string_view to_token(Velocity v);

// Token parsers accept exactly the tokens emitted by to_token; anything else
// yields nullopt (the enumerations are closed sets).
std::optional<SourceKind> parse_source(std::string_view token);
std::optional<DocType> parse_doc_type(std::string_view token);
std::optional<MacroField> parse_field(std::string_view token);
std::optional<Velocity> parse_velocity(std::string_view token);

Velocity velocity_of(SourceKind s);

// Only these document types carry micro-topic assignments.
constexpr bool is_citable(DocType t) {
    return t == DocType::article || t == DocType::review || t == DocType::letter;
}

constexpr std::size_t index_of(SourceKind s) { return static_cast<std::size_t>(s); }
constexpr std::size_t index_of(DocType t) { return static_cast<std::size_t>(t); }
constexpr std::size_t index_of(MacroField f) { return static_cast<std::size_t>(f); }

}  // namespace altpresence
