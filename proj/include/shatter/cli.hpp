#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shatter::cli {

enum class Command { Check, Decompose, Construct, Balance, Graph, Augment, Peel, Groebner, Audit };
enum class Format { Text, Structured };

struct RunConfig {
  Command command = Command::Check;
  std::optional<std::string> input_path;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> count;
  Format format = Format::Text;
  // 1-based variable priority for the lex order, most significant first
  std::optional<std::vector<int>> order;
  // augment: use h_A with this anchor over the input's supports
  std::optional<std::vector<int>> anchor;
  std::size_t s0 = 1;
  // audit: experimental (S,h)-pair mode
  bool pairs = false;
  // groebner: prime-field coefficients
  bool prime_field = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPropertyFalse = 2;

std::optional<Command> parse_command(const std::string& name);

// Executes one command. Input comes from config.input_path or `in`; the report
// goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// argv front end (CLI11); returns the exit code.
int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shatter::cli
