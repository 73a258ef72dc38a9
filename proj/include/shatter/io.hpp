#pragma once

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include "shatter/elimination.hpp"
#include "shatter/family.hpp"
#include "shatter/sperner.hpp"

namespace shatter::io {

// Text family format:
//   # comment
//   n=3
//   3
//   1,2
//   -          (the empty set)
// Elements are 1-based; out-of-range elements and repeated sets are errors
// reported as ParseError with "line L, column C".
SetFamily parse_family_text(std::string_view text);
std::string format_family_text(const SetFamily& fam);

// {"n": 3, "sets": [[3], [1, 2]]}
SetFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const SetFamily& fam);

// {"n": 3, "members": [{"S": [1, 2], "H": [1]}, ...]}
SpernerSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const SpernerSystem& sys);

nlohmann::json certificate_to_json(const EliminationCertificate& cert);
EliminationCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json peel_certificate_to_json(const PeelCertificate& cert);
PeelCertificate peel_certificate_from_json(const nlohmann::json& j);

nlohmann::json subset_to_json(Subset s);
Subset subset_from_json(const nlohmann::json& j, GroundSet ground);

// Elements as "1,2,3", "-" for the empty set.
std::string format_subset(Subset s);

// Structured when the first non-blank character is '{', text otherwise.
SetFamily parse_family(std::string_view text);
nlohmann::json parse_json(std::string_view text);

std::string read_file(const std::filesystem::path& path);

// parse, serialize in the same encoding, parse again; true iff both parses agree
bool roundtrip(const std::filesystem::path& path);

}  // namespace shatter::io
