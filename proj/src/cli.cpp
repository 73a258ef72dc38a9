#include "shatter/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "shatter/cube_calculus.hpp"
#include "shatter/elimination.hpp"
#include "shatter/groebner.hpp"
#include "shatter/io.hpp"

namespace shatter::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table = {
      {"check", Command::Check},       {"decompose", Command::Decompose}, {"construct", Command::Construct},
      {"balance", Command::Balance},   {"graph", Command::Graph},         {"augment", Command::Augment},
      {"peel", Command::Peel},         {"groebner", Command::Groebner},   {"audit", Command::Audit},
  };
  return table;
}

// Exit 2 with a message: the input was fine but the property does not hold.
struct PropertyFalse {
  std::string message;
};

struct Document {
  enum class Kind { Family, System, Certificate, PeelCertificate } kind;
  json structured;
  SetFamily family;
};

Document load_document(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") != std::string::npos && text[text.find_first_not_of(" \t\r\n")] == '{') {
    json j = io::parse_json(text);
    if (j.is_object() && j.contains("kind")) {
      const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
      if (kind == "elimination_certificate") return {Document::Kind::Certificate, std::move(j), {}};
      if (kind == "peel_certificate") return {Document::Kind::PeelCertificate, std::move(j), {}};
      throw Error(Errc::ParseError, "unknown document kind '" + kind + "'");
    }
    if (j.is_object() && j.contains("members")) return {Document::Kind::System, std::move(j), {}};
    SetFamily fam = io::family_from_json(j);
    return {Document::Kind::Family, {}, std::move(fam)};
  }
  return {Document::Kind::Family, {}, io::parse_family_text(text)};
}

class Runner {
 public:
  Runner(const RunConfig& config, std::istream& in, std::ostream& out) : config_(config), in_(in), out_(out) {}

  int dispatch() {
    switch (config_.command) {
      case Command::Check: return check();
      case Command::Decompose: return decompose();
      case Command::Construct: return construct();
      case Command::Balance: return balance();
      case Command::Graph: return graph();
      case Command::Augment: return augment_cmd();
      case Command::Peel: return peel_cmd();
      case Command::Groebner: return groebner();
      case Command::Audit: return audit();
    }
    return kExitInputError;
  }

 private:
  bool structured() const { return config_.format == Format::Structured; }

  Document input() {
    std::string text;
    if (config_.input_path) {
      text = io::read_file(*config_.input_path);
    } else {
      text.assign(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
    }
    Document doc = load_document(text);
    if (config_.n) {
      int n = 0;
      switch (doc.kind) {
        case Document::Kind::Family: n = doc.family.ground().n(); break;
        case Document::Kind::System: n = io::system_from_json(doc.structured).ground().n(); break;
        default: return doc;
      }
      if (n != *config_.n) {
        throw Error(Errc::GroundMismatch, "--n " + std::to_string(*config_.n) + " but the input has n=" + std::to_string(n));
      }
    }
    return doc;
  }

  SetFamily family_input() {
    Document doc = input();
    if (doc.kind != Document::Kind::Family) throw Error(Errc::InvalidArgument, "expected a set family");
    return std::move(doc.family);
  }

  SpernerSystem system_input() {
    Document doc = input();
    if (doc.kind != Document::Kind::System) throw Error(Errc::InvalidArgument, "expected a Sperner system");
    return io::system_from_json(doc.structured);
  }

  static std::string member_line(const SpernerMember& m) {
    return "S=" + io::format_subset(m.support) + " H=" + io::format_subset(m.pattern);
  }

  // -- check

  int check() {
    Document doc = input();
    switch (doc.kind) {
      case Document::Kind::Certificate: {
        const auto cert = io::certificate_from_json(doc.structured);
        return certificate_verdict("elimination", [&] { verify_certificate(cert); });
      }
      case Document::Kind::PeelCertificate: {
        const auto cert = io::peel_certificate_from_json(doc.structured);
        return certificate_verdict("peel", [&] { verify_peel(cert); });
      }
      case Document::Kind::System: {
        const SpernerSystem sys = io::system_from_json(doc.structured);
        return check_family(build_f(sys), &sys);
      }
      case Document::Kind::Family: return check_family(doc.family, nullptr);
    }
    return kExitInputError;
  }

  template <typename Verify>
  int certificate_verdict(const char* kind, Verify verify) {
    std::string failure;
    try {
      verify();
    } catch (const Error& e) {
      if (e.code() != Errc::VerificationFailed) throw;
      failure = e.what();
    }
    if (structured()) {
      json j = {{"certificate", kind}, {"verified", failure.empty()}};
      if (!failure.empty()) j["reason"] = failure;
      out_ << j.dump() << "\n";
    } else {
      out_ << "certificate: " << kind << "\n";
      out_ << "verified: " << (failure.empty() ? "true" : "false") << "\n";
      if (!failure.empty()) out_ << "reason: " << failure << "\n";
    }
    return failure.empty() ? kExitOk : kExitPropertyFalse;
  }

  int check_family(const SetFamily& fam, const SpernerSystem* sys) {
    const SetFamily sh = shattered_sets(fam);
    const bool extremal = sh.size() == fam.size();
    const auto vc = vc_dimension(fam);
    std::optional<bool> matches_h;
    if (sys) matches_h = sh == h_complement(*sys);
    if (structured()) {
      json j = {{"s_extremal", extremal},
                {"size", fam.size()},
                {"shattered", sh.size()},
                {"vc_dimension", vc ? json(*vc) : json(nullptr)},
                {"shattered_sets", io::family_to_json(sh)}};
      if (matches_h) j["sh_equals_h"] = *matches_h;
      out_ << j.dump() << "\n";
    } else {
      out_ << "s-extremal: " << (extremal ? "true" : "false") << "\n";
      out_ << "|F|: " << fam.size() << "\n";
      out_ << "|Sh|: " << sh.size() << "\n";
      out_ << "VCdim: " << (vc ? std::to_string(*vc) : "none") << "\n";
      if (matches_h) out_ << "Sh=H(S): " << (*matches_h ? "true" : "false") << "\n";
    }
    const bool ok = extremal && matches_h.value_or(true);
    return ok ? kExitOk : kExitPropertyFalse;
  }

  // -- decompose / construct

  int decompose() {
    const SetFamily fam = family_input();
    SpernerSystem sys;
    try {
      sys = canonical_decomposition(fam);
    } catch (const Error& e) {
      if (e.code() == Errc::NotExtremal || e.code() == Errc::FullFamily) throw PropertyFalse{e.what()};
      throw;
    }
    out_ << io::system_to_json(sys).dump(structured() ? -1 : 2) << "\n";
    return kExitOk;
  }

  int construct() {
    const SpernerSystem sys = system_input();
    const SetFamily f = build_f(sys);
    const SetFamily h = h_complement(sys);
    if (structured()) {
      out_ << io::family_to_json(f).dump() << "\n";
    } else {
      out_ << "# |F(S,h)|=" << f.size() << " |H(S)|=" << h.size() << "\n";
      out_ << io::format_family_text(f);
    }
    return kExitOk;
  }

  // -- cube calculus

  int balance() {
    const SpernerSystem sys = system_input();
    const BalanceReport r = ie_balance_report(sys);
    if (structured()) {
      json by_size = json::array();
      for (std::size_t k = 1; k < r.by_size.size(); ++k) by_size.push_back(r.by_size[k]);
      out_ << json{{"balance", r.balance}, {"by_size", by_size}}.dump() << "\n";
    } else {
      out_ << "balance: " << r.balance << "\n";
      for (std::size_t k = 1; k < r.by_size.size(); ++k) out_ << "|I|=" << k << ": " << r.by_size[k] << "\n";
    }
    return r.balance == 0 ? kExitOk : kExitPropertyFalse;
  }

  int graph() {
    const SpernerSystem sys = system_input();
    const AuxGraph g = build_aux_graph(sys);
    const std::string_view cls = graph_class_name(classify_graph(g));
    if (structured()) {
      json vertices = json::array(), edges = json::array();
      for (const auto& m : sys.members()) vertices.push_back({{"S", io::subset_to_json(m.support)}, {"H", io::subset_to_json(m.pattern)}});
      for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
      out_ << json{{"vertex_count", g.vertex_count}, {"vertices", vertices}, {"edges", edges}, {"classification", cls}}.dump()
           << "\n";
    } else {
      out_ << "vertices: " << g.vertex_count << "\n";
      for (std::size_t i = 0; i < sys.size(); ++i) out_ << "vertex " << i + 1 << ": " << member_line(sys[i]) << "\n";
      out_ << "edges:";
      for (auto [i, j] : g.edges()) out_ << " " << i + 1 << "-" << j + 1;
      out_ << "\n";
      out_ << "classification: " << cls << "\n";
    }
    return kExitOk;
  }

  // -- elimination

  void print_certificate(const EliminationCertificate& cert) {
    if (structured()) {
      out_ << io::certificate_to_json(cert).dump() << "\n";
      return;
    }
    out_ << "chosen_s0: " << io::format_subset(cert.chosen_s0) << "\n";
    out_ << "witness_f: " << io::format_subset(cert.witness_f) << "\n";
    out_ << "successor:\n";
    for (const auto& m : cert.successor.members()) out_ << "  " << member_line(m) << "\n";
    out_ << "|F|: " << build_f(cert.original).size() << "\n";
    out_ << "|F'|: " << cert.augmented_family.size() << "\n";
    out_ << "augmented_family: " << to_string(cert.augmented_family) << "\n";
  }

  int augment_cmd() {
    Document doc = input();
    SpernerSystem sys;
    try {
      if (doc.kind == Document::Kind::Family) {
        sys = canonical_decomposition(doc.family);
      } else if (doc.kind == Document::Kind::System) {
        sys = io::system_from_json(doc.structured);
      } else {
        throw Error(Errc::InvalidArgument, "expected a set family or a Sperner system");
      }
      if (config_.anchor) {
        std::vector<int> elems = *config_.anchor;
        const Subset anchor = elems.empty() ? Subset() : Subset::of(elems);
        if (!sys.ground().valid(anchor)) throw Error(Errc::InvalidArgument, "anchor outside the ground set");
        if (config_.s0 < 1 || config_.s0 > sys.size()) {
          throw Error(Errc::InvalidArgument, "--s0 must lie in 1.." + std::to_string(sys.size()));
        }
        const auto supports = sys.supports();
        print_certificate(augment_hA(sys.ground(), supports, anchor, config_.s0 - 1));
        return kExitOk;
      }
      const auto cert = augment(sys);
      if (!cert) throw PropertyFalse{"no uncovered cube: counterexample candidate"};
      print_certificate(*cert);
      return kExitOk;
    } catch (const Error& e) {
      if (e.code() == Errc::FullFamily) throw PropertyFalse{e.what()};
      throw;
    }
  }

  int peel_cmd() {
    const SetFamily fam = family_input();
    std::optional<Subset> removed;
    try {
      removed = peel(fam);
    } catch (const Error& e) {
      if (e.code() == Errc::EmptyFamily) throw PropertyFalse{e.what()};
      throw;
    }
    if (!removed) throw PropertyFalse{"no removable member found via the dual witness search"};
    const PeelCertificate cert{fam, *removed, fam.without(*removed)};
    verify_peel(cert);
    if (structured()) {
      out_ << io::peel_certificate_to_json(cert).dump() << "\n";
    } else {
      out_ << "removed: " << io::format_subset(cert.removed) << "\n";
      out_ << "|F|: " << fam.size() << "\n";
      out_ << "|F'|: " << cert.peeled.size() << "\n";
      out_ << "peeled: " << to_string(cert.peeled) << "\n";
    }
    return kExitOk;
  }

  // -- groebner

  poly::TermOrder term_order(int n) const {
    if (!config_.order) return poly::TermOrder::lex(n);
    if (static_cast<int>(config_.order->size()) != n) {
      throw Error(Errc::InvalidArgument, "--order must list all " + std::to_string(n) + " variables");
    }
    std::vector<int> priority;
    for (int v : *config_.order) priority.push_back(v - 1);
    return poly::TermOrder::lex(std::move(priority));
  }

  int groebner() {
    const SpernerSystem sys = system_input();
    const poly::TermOrder ord = term_order(sys.ground().n());
    return config_.prime_field ? groebner_with<poly::DefaultPrime>(sys, ord) : groebner_with<poly::Rational>(sys, ord);
  }

  template <typename K>
  int groebner_with(const SpernerSystem& sys, const poly::TermOrder& ord) {
    const int n = sys.ground().n();
    const auto gens = poly::generator_set<K>(sys);
    const poly::EquivalenceReport r = poly::equivalence_check<K>(sys, ord);
    std::vector<std::string> gen_text, lead_text;
    for (const auto& g : gens) {
      gen_text.push_back(poly::to_string(g, ord));
      lead_text.push_back(poly::monomial_string(poly::leading_monomial(g, ord), n));
    }
    const bool holds = r.equivalence_holds();
    if (structured()) {
      out_ << json{{"order", ord.to_string()},
                   {"field", config_.prime_field ? "prime" : "rational"},
                   {"generators", gen_text},
                   {"leading_monomials", lead_text},
                   {"standard_monomials", r.standard_monomials},
                   {"h_size", r.h_size},
                   {"f_size", r.f_size},
                   {"counting_equal", r.counting_equal},
                   {"groebner", r.is_groebner},
                   {"rank", r.rank},
                   {"rank_full", r.rank_full},
                   {"equivalence_holds", holds}}
                  .dump()
           << "\n";
    } else {
      out_ << "order: " << ord.to_string() << "\n";
      out_ << "field: " << (config_.prime_field ? "prime" : "rational") << "\n";
      out_ << "generators:\n";
      for (const auto& g : gen_text) out_ << "  " << g << "\n";
      out_ << "leading monomials:";
      for (std::size_t i = 0; i < lead_text.size(); ++i) out_ << (i ? ", " : " ") << lead_text[i];
      out_ << "\n";
      out_ << "standard monomials: " << r.standard_monomials << "\n";
      out_ << "|H(S)|: " << r.h_size << "\n";
      out_ << "|F(S,h)|: " << r.f_size << "\n";
      out_ << "counting equality: " << (r.counting_equal ? "true" : "false") << "\n";
      out_ << "groebner: " << (r.is_groebner ? "true" : "false") << "\n";
      out_ << "evaluation rank: " << r.rank << "\n";
      out_ << "rank full: " << (r.rank_full ? "true" : "false") << "\n";
      out_ << "equivalence: " << (holds ? "holds" : "VIOLATED") << "\n";
    }
    return holds && r.is_groebner ? kExitOk : kExitPropertyFalse;
  }

  // -- audit

  int audit() {
    if (!config_.n) throw Error(Errc::InvalidArgument, "audit needs --n");
    const int n = *config_.n;
    if (config_.pairs) {
      if (!config_.seed) throw Error(Errc::InvalidArgument, "--pairs needs --seed");
      return pair_audit(n);
    }
    if (config_.count && !config_.seed) throw Error(Errc::InvalidArgument, "--count needs --seed (random mode)");
    const AuditMode mode =
        config_.seed ? AuditMode::random(config_.count.value_or(1000), *config_.seed) : AuditMode::exhaustive();
    const AuditReport r = audit_conjecture(n, mode);
    const bool random = mode.kind == AuditMode::Kind::Random;
    const std::vector<std::pair<std::string, std::uint64_t>> counters = {
        {"families", r.families_examined},         {"extremal_proper", r.extremal_proper},
        {"bruteforce_addable", r.bruteforce_addable}, {"witness_found", r.witness_found},
        {"augment_verified", r.augment_verified},  {"peel_checked", r.peel_checked},
        {"peel_verified", r.peel_verified},        {"conjecture_failures", r.conjecture_failures},
        {"discrepancies", r.discrepancies},
    };
    if (structured()) {
      json j = {{"mode", random ? "random" : "exhaustive"}, {"n", n}};
      if (random) {
        j["count"] = mode.count;
        j["seed"] = mode.seed;
      }
      for (const auto& [k, v] : counters) j[k] = v;
      json failures = json::array();
      for (const auto& f : r.failures) failures.push_back({{"index", f.index}, {"reason", f.reason}});
      j["failures"] = failures;
      j["clean"] = r.clean();
      out_ << j.dump() << "\n";
    } else {
      out_ << "mode: " << (random ? "random" : "exhaustive") << "\n";
      out_ << "n: " << n << "\n";
      if (random) out_ << "count: " << mode.count << "\nseed: " << mode.seed << "\n";
      for (const auto& [k, v] : counters) out_ << k << ": " << v << "\n";
      for (const auto& f : r.failures) out_ << "failure " << f.index << ": " << f.reason << "\n";
      out_ << "clean: " << (r.clean() ? "true" : "false") << "\n";
    }
    return r.clean() ? kExitOk : kExitPropertyFalse;
  }

  int pair_audit(int n) {
    const PairAuditReport r = audit_pairs(n, config_.count.value_or(1000), *config_.seed);
    const std::vector<std::pair<std::string, std::uint64_t>> counters = {
        {"systems", r.systems},
        {"extremal", r.extremal},
        {"witness_found", r.witness_found},
        {"extremal_without_witness", r.extremal_without_witness},
        {"non_extremal_without_witness", r.non_extremal_without_witness},
    };
    if (structured()) {
      json j = {{"mode", "pairs"}, {"experimental", true}, {"n", n}, {"count", r.count}, {"seed", r.seed}};
      for (const auto& [k, v] : counters) j[k] = v;
      out_ << j.dump() << "\n";
    } else {
      out_ << "mode: pairs (experimental)\n";
      out_ << "n: " << n << "\ncount: " << r.count << "\nseed: " << r.seed << "\n";
      for (const auto& [k, v] : counters) out_ << k << ": " << v << "\n";
    }
    // only extremal pairs without a witness contradict anything
    return r.extremal_without_witness == 0 ? kExitOk : kExitPropertyFalse;
  }

  const RunConfig& config_;
  std::istream& in_;
  std::ostream& out_;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  if (text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidArgument, std::string(flag) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  const auto it = command_table().find(name);
  if (it == command_table().end()) return std::nullopt;
  return it->second;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    return Runner(config, in, out).dispatch();
  } catch (const PropertyFalse& p) {
    err << p.message << "\n";
    return kExitPropertyFalse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInputError;
  }
}

int main_entry(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shattering-extremal set systems: construction, checks, elimination and Groebner tools", "shatter"};
  std::string command, format = "text", order, anchor;
  std::string input;
  int n = 0;
  std::uint64_t seed = 0, count = 0;
  std::size_t s0 = 1;
  bool pairs = false, prime = false;

  std::vector<std::string> names;
  for (const auto& [k, v] : command_table()) names.push_back(k);
  app.add_option("command", command, "check|decompose|construct|balance|graph|augment|peel|groebner|audit")
      ->required()
      ->check(CLI::IsMember(names));
  auto* input_opt = app.add_option("--input", input, "input file (standard input when absent)");
  auto* n_opt = app.add_option("--n", n, "ground set size");
  auto* seed_opt = app.add_option("--seed", seed, "audit: random mode seed");
  auto* count_opt = app.add_option("--count", count, "audit: number of random families");
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  auto* order_opt = app.add_option("--order", order, "groebner: lex variable priority, e.g. 3,1,2");
  auto* anchor_opt = app.add_option("--anchor", anchor, "augment: anchor set A for h_A, e.g. 1,2 or -");
  app.add_option("--s0", s0, "augment with --anchor: 1-based member to extend");
  app.add_flag("--pairs", pairs, "audit: experimental (S,h)-pair mode");
  app.add_flag("--prime", prime, "groebner: coefficients mod 2^31-1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  RunConfig config;
  config.command = *parse_command(command);
  config.format = format == "structured" ? Format::Structured : Format::Text;
  if (*input_opt) config.input_path = input;
  if (*n_opt) config.n = n;
  if (*seed_opt) config.seed = seed;
  if (*count_opt) config.count = count;
  config.s0 = s0;
  config.pairs = pairs;
  config.prime_field = prime;
  try {
    if (*order_opt) config.order = parse_int_list(order, "--order");
    if (*anchor_opt) config.anchor = parse_int_list(anchor, "--anchor");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return run(config, in, out, err);
}

}  // namespace shatter::cli
