#include "altpresence/sources.hpp"

namespace altpresence {

std::string_view to_token(SourceKind s) {
    switch (s) {
        case SourceKind::mendeley: return "mendeley";
        case SourceKind::twitter: return "twitter";
        case SourceKind::facebook: return "facebook";
        case SourceKind::news: return "news";
        case SourceKind::blogs: return "blogs";
        case SourceKind::wikipedia: return "wikipedia";
        case SourceKind::policy: return "policy";
        case SourceKind::reddit: return "reddit";
        case SourceKind::f1000: return "f1000";
        case SourceKind::video: return "video";
        case SourceKind::peer_review: return "peer_review";
        case SourceKind::qa: return "qa";
        case SourceKind::citations: return "citations";
    }
    return "?";
}

std::string_view to_token(DocType t) {
    switch (t) {
        case DocType::article: return "article";
        case DocType::review: return "review";
        case DocType::editorial: return "editorial";
        case DocType::meeting_abstract: return "meeting_abstract";
        case DocType::letter: return "letter";
        case DocType::book_review: return "book_review";
        case DocType::other: return "other";
    }
    return "?";
}

std::string_view to_token(MacroField f) {
    switch (f) {
        case MacroField::SSH: return "SSH";
        case MacroField::BHS: return "BHS";
        case MacroField::PSE: return "PSE";
        case MacroField::LES: return "LES";
        case MacroField::MCS: return "MCS";
    }
    return "?";
}

std::string_view to_token(Velocity v) {
    switch (v) {
        case Velocity::fast: return "fast";
        case Velocity::slow: return "slow";
        case Velocity::delayed: return "delayed";
    }
    return "?";
}

std::optional<SourceKind> parse_source(std::string_view token) {
    for (SourceKind s : kAllSources) {
        if (token == to_token(s)) return s;
    }
    return std::nullopt;
}

std::optional<DocType> parse_doc_type(std::string_view token) {
    for (DocType t : kAllDocTypes) {
        if (token == to_token(t)) return t;
    }
    return std::nullopt;
}

std::optional<MacroField> parse_field(std::string_view token) {
    for (MacroField f : kAllFields) {
        if (token == to_token(f)) return f;
    }
    return std::nullopt;
}

std::optional<Velocity> parse_velocity(std::string_view token) {
    if (token == "fast") return Velocity::fast;
    if (token == "slow") return Velocity::slow;
    if (token == "delayed") return Velocity::delayed;
    return std::nullopt;
}

Velocity velocity_of(SourceKind s) {
    switch (s) {
        case SourceKind::twitter:
        case SourceKind::facebook:
        case SourceKind::news:
        case SourceKind::blogs:
        case SourceKind::reddit:
            return Velocity::fast;
        case SourceKind::mendeley:
            return Velocity::delayed;
        default:
            return Velocity::slow;
    }
}

}  // namespace altpresence
