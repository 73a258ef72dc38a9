#include "shatter/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace shatter::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

[[noreturn]] void json_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto end = text.find('\n');
    out.push_back({number++, text.substr(0, end)});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

// Offsets of the first and one-past-last non-blank characters.
std::pair<std::size_t, std::size_t> trimmed(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_blank(s[b])) ++b;
  while (e > b && is_blank(s[e - 1])) --e;
  return {b, e};
}

int parse_int_at(const Line& line, std::size_t begin, std::size_t end) {
  int value = 0;
  const char* first = line.text.data() + begin;
  const char* last = line.text.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || begin == end) {
    parse_fail(line.number, begin + 1, "expected an integer, got '" + std::string(line.text.substr(begin, end - begin)) + "'");
  }
  return value;
}

Subset parse_set_line(const Line& line, std::size_t begin, std::size_t end, GroundSet ground) {
  if (line.text.substr(begin, end - begin) == "-") return Subset();
  std::uint32_t bits = 0;
  std::size_t pos = begin;
  while (pos <= end) {
    std::size_t comma = line.text.find(',', pos);
    if (comma == std::string_view::npos || comma > end) comma = end;
    auto [tb, te] = trimmed(line.text.substr(pos, comma - pos));
    const int e = parse_int_at(line, pos + tb, pos + te);
    if (e < 1 || e > ground.n()) {
      parse_fail(line.number, pos + tb + 1,
                 "element " + std::to_string(e) + " outside 1.." + std::to_string(ground.n()));
    }
    const std::uint32_t bit = 1u << (e - 1);
    if (bits & bit) parse_fail(line.number, pos + tb + 1, "element " + std::to_string(e) + " repeated");
    bits |= bit;
    pos = comma + 1;
  }
  return Subset(bits);
}

}  // namespace

std::string format_subset(Subset s) {
  if (s.empty()) return "-";
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

SetFamily parse_family_text(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Subset> members;
  std::vector<std::size_t> origin;
  for (const Line& line : split_lines(text)) {
    auto [b, e] = trimmed(line.text);
    if (b == e || line.text[b] == '#') continue;
    if (!ground) {
      const std::string_view body = line.text.substr(b, e - b);
      if (body.size() < 2 || body[0] != 'n') parse_fail(line.number, b + 1, "expected header n=<int>");
      std::size_t p = b + 1;
      while (p < e && is_blank(line.text[p])) ++p;
      if (p == e || line.text[p] != '=') parse_fail(line.number, p + 1, "expected '=' in header");
      ++p;
      while (p < e && is_blank(line.text[p])) ++p;
      const int n = parse_int_at(line, p, e);
      if (n < 0 || n > kMaxGround) {
        parse_fail(line.number, p + 1, "n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxGround));
      }
      ground = GroundSet(n);
      continue;
    }
    const Subset s = parse_set_line(line, b, e, *ground);
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] == s) {
        parse_fail(line.number, b + 1, "duplicate set " + s.to_string() + " (first on line " +
                                           std::to_string(origin[i]) + ")");
      }
    members.push_back(s);
    origin.push_back(line.number);
  }
  if (!ground) throw Error(Errc::ParseError, "line 1, column 1: missing header n=<int>");
  return SetFamily::from_members_strict(*ground, std::move(members));
}

std::string format_family_text(const SetFamily& fam) {
  std::string out = "n=" + std::to_string(fam.ground().n()) + "\n";
  for (Subset s : fam) out += format_subset(s) + "\n";
  return out;
}

json subset_to_json(Subset s) { return s.elements(); }

Subset subset_from_json(const json& j, GroundSet ground) {
  if (!j.is_array()) json_fail("expected an array of elements");
  std::uint32_t bits = 0;
  for (const auto& v : j) {
    if (!v.is_number_integer()) json_fail("set elements must be integers");
    const auto e = v.get<long long>();
    if (e < 1 || e > ground.n()) {
      json_fail("element " + std::to_string(e) + " outside 1.." + std::to_string(ground.n()));
    }
    const std::uint32_t bit = 1u << (e - 1);
    if (bits & bit) json_fail("element " + std::to_string(e) + " repeated");
    bits |= bit;
  }
  return Subset(bits);
}

namespace {

GroundSet ground_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) json_fail("missing integer field 'n'");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > kMaxGround) json_fail("n=" + std::to_string(n) + " outside 0.." + std::to_string(kMaxGround));
  return GroundSet(static_cast<int>(n));
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) json_fail(std::string("missing field '") + name + "'");
  return j[name];
}

}  // namespace

SetFamily family_from_json(const json& j) {
  const GroundSet g = ground_from_json(j);
  const json& sets = field(j, "sets");
  if (!sets.is_array()) json_fail("'sets' must be an array");
  std::vector<Subset> members;
  for (const auto& s : sets) members.push_back(subset_from_json(s, g));
  try {
    return SetFamily::from_members_strict(g, std::move(members));
  } catch (const Error& e) {
    json_fail(e.what());
  }
}

json family_to_json(const SetFamily& fam) {
  json sets = json::array();
  for (Subset s : fam) sets.push_back(subset_to_json(s));
  return {{"n", fam.ground().n()}, {"sets", sets}};
}

SpernerSystem system_from_json(const json& j) {
  const GroundSet g = ground_from_json(j);
  const json& ms = field(j, "members");
  if (!ms.is_array()) json_fail("'members' must be an array");
  std::vector<SpernerMember> members;
  for (const auto& m : ms) members.push_back({subset_from_json(field(m, "S"), g), subset_from_json(field(m, "H"), g)});
  return SpernerSystem(g, std::move(members));
}

json system_to_json(const SpernerSystem& sys) {
  json ms = json::array();
  for (const auto& m : sys.members()) ms.push_back({{"S", subset_to_json(m.support)}, {"H", subset_to_json(m.pattern)}});
  return {{"n", sys.ground().n()}, {"members", ms}};
}

json certificate_to_json(const EliminationCertificate& cert) {
  return {{"kind", "elimination_certificate"},
          {"original", system_to_json(cert.original)},
          {"chosen_s0", subset_to_json(cert.chosen_s0)},
          {"witness_f", subset_to_json(cert.witness_f)},
          {"successor", system_to_json(cert.successor)},
          {"augmented_family", family_to_json(cert.augmented_family)}};
}

EliminationCertificate certificate_from_json(const json& j) {
  EliminationCertificate cert;
  cert.original = system_from_json(field(j, "original"));
  const GroundSet g = cert.original.ground();
  cert.chosen_s0 = subset_from_json(field(j, "chosen_s0"), g);
  cert.witness_f = subset_from_json(field(j, "witness_f"), g);
  cert.successor = system_from_json(field(j, "successor"));
  cert.augmented_family = family_from_json(field(j, "augmented_family"));
  require_same_ground(g, cert.successor.ground());
  require_same_ground(g, cert.augmented_family.ground());
  return cert;
}

json peel_certificate_to_json(const PeelCertificate& cert) {
  return {{"kind", "peel_certificate"},
          {"original", family_to_json(cert.original)},
          {"removed", subset_to_json(cert.removed)},
          {"peeled", family_to_json(cert.peeled)}};
}

PeelCertificate peel_certificate_from_json(const json& j) {
  PeelCertificate cert;
  cert.original = family_from_json(field(j, "original"));
  cert.removed = subset_from_json(field(j, "removed"), cert.original.ground());
  cert.peeled = family_from_json(field(j, "peeled"));
  require_same_ground(cert.original.ground(), cert.peeled.ground());
  return cert;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offsets are 1-based
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    parse_fail(line, column, "malformed JSON");
  }
}

namespace {

bool looks_structured(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  return looks_structured(text) ? family_from_json(parse_json(text)) : parse_family_text(text);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool roundtrip(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (!looks_structured(text)) {
    const SetFamily first = parse_family_text(text);
    return parse_family_text(format_family_text(first)) == first;
  }
  const json j = parse_json(text);
  if (j.contains("sets")) {
    const SetFamily first = family_from_json(j);
    return family_from_json(parse_json(family_to_json(first).dump())) == first;
  }
  if (j.contains("members")) {
    const SpernerSystem first = system_from_json(j);
    return system_from_json(parse_json(system_to_json(first).dump())) == first;
  }
  if (j.value("kind", "") == "elimination_certificate") {
    const auto first = certificate_from_json(j);
    const auto second = certificate_from_json(parse_json(certificate_to_json(first).dump()));
    return certificate_to_json(first) == certificate_to_json(second);
  }
  if (j.value("kind", "") == "peel_certificate") {
    const auto first = peel_certificate_from_json(j);
    const auto second = peel_certificate_from_json(parse_json(peel_certificate_to_json(first).dump()));
    return peel_certificate_to_json(first) == peel_certificate_to_json(second);
  }
  json_fail("unrecognized structured document");
}

}  // namespace shatter::io
