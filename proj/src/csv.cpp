#include "altpresence/csv.hpp"

#include <istream>
#include <ostream>

#include "altpresence/errors.hpp"

namespace altpresence::csv {

std::optional<std::vector<std::string>> read_record(std::istream& in) {
    int c = in.get();
    // Swallow the line terminator left over from the previous record.
    while (c == '\n' || c == '\r') c = in.get();
    if (c == std::char_traits<char>::eof()) return std::nullopt;

    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (;; c = in.get()) {
        if (c == std::char_traits<char>::eof()) {
            if (quoted) throw IoError("unterminated quoted field at end of input");
            break;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        if (ch == '"' && field.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (ch == '\n') {
            break;
        } else if (ch == '\r') {
            if (in.peek() == '\n') in.get();
            break;
        } else {
            field.push_back(ch);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string escape(std::string_view field) {
    bool needs_quotes = false;
    for (char ch : field) {
        if (ch == ',' || ch == '"' || ch == '\n' || ch == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        out << escape(fields[i]);
    }
    out.put('\n');
}

bool utf8_valid(std::string_view s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        unsigned char b = static_cast<unsigned char>(s[i]);
        std::size_t len;
        unsigned cp_min;
        if (b < 0x80) {
            ++i;
            continue;
        } else if ((b & 0xe0) == 0xc0) {
            len = 2;
            cp_min = 0x80;
        } else if ((b & 0xf0) == 0xe0) {
            len = 3;
            cp_min = 0x800;
        } else if ((b & 0xf8) == 0xf0) {
            len = 4;
            cp_min = 0x10000;
        } else {
            return false;
        }
        if (i + len > n) return false;
        unsigned cp = b & (0x7f >> len);
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char cont = static_cast<unsigned char>(s[i + k]);
            if ((cont & 0xc0) != 0x80) return false;
            cp = (cp << 6) | (cont & 0x3f);
        }
        if (cp < cp_min) return false;                    // overlong encoding
        if (cp > 0x10ffff) return false;
        if (cp >= 0xd800 && cp <= 0xdfff) return false;   // surrogate range
        i += len;
    }
    return true;
}

}  // namespace altpresence::csv
