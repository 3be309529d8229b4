#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace altpresence::csv {

// Comma-delimited records with double-quote escaping; quoted fields may span
// newlines. read_record returns nullopt at end of stream and throws IoError
// on broken framing (unterminated quote).
std::optional<std::vector<std::string>> read_record(std::istream& in);

void write_record(std::ostream& out, const std::vector<std::string>& fields);

std::string escape(std::string_view field);

bool utf8_valid(std::string_view s);

}  // namespace altpresence::csv
