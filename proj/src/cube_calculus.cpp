#include "shatter/cube_calculus.hpp"

#include "shatter/kernels.hpp"

namespace shatter {

int indicator(Subset si, Subset hi, Subset sj, Subset hj) {
  if (!hi.subset_of(si) || !hj.subset_of(sj)) {
    throw Error(Errc::PatternNotInSupport, "indicator needs patterns inside their supports");
  }
  return (si & hj) == (sj & hi) ? 1 : 0;
}

std::optional<Cube> q_intersect(const Cube& a, const Cube& b) {
  require_same_ground(a.ground, b.ground);
  if (!indicator(a.support, a.pattern, b.support, b.pattern)) return std::nullopt;
  return Cube{a.ground, a.support | b.support, a.pattern | b.pattern};
}

std::optional<Cube> multi_intersect(std::span<const Cube> cubes) {
  if (cubes.empty()) throw Error(Errc::EmptyList, "multi_intersect needs at least one cube");
  Cube acc = cubes[0];
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    require_same_ground(cubes[0].ground, cubes[i].ground);
    for (std::size_t j = i + 1; j < cubes.size(); ++j)
      if (!indicator(cubes[i].support, cubes[i].pattern, cubes[j].support, cubes[j].pattern)) return std::nullopt;
    acc.support |= cubes[i].support;
    acc.pattern |= cubes[i].pattern;
  }
  return acc;
}

BalanceReport ie_balance_report(const SpernerSystem& sys) {
  const std::size_t count = sys.size();
  if (count > kMaxBalanceMembers) {
    throw Error(Errc::TooManyMembers, std::to_string(count) + " members exceed the cap of " +
                                          std::to_string(kMaxBalanceMembers));
  }
  std::vector<std::uint32_t> incompatible(count, 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (i != j && !indicator(sys[i].support, sys[i].pattern, sys[j].support, sys[j].pattern))
        incompatible[i] |= 1u << j;
  const auto supports = sys.supports();
  const auto terms = kernels::ie_terms(sys.ground(), supports, incompatible);
  // The raw sum is |Up(S)| - |union Q| = |F(S,h)| - |H(S)|; report its negation.
  BalanceReport report;
  report.by_size.resize(terms.by_size.size());
  for (std::size_t k = 0; k < terms.by_size.size(); ++k) report.by_size[k] = -terms.by_size[k];
  report.balance = -terms.total();
  return report;
}

std::int64_t ie_balance(const SpernerSystem& sys) { return ie_balance_report(sys).balance; }

int AuxGraph::degree(std::size_t i) const { return std::popcount(adjacency[i]); }

std::vector<std::pair<std::size_t, std::size_t>> AuxGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertex_count; ++i)
    for (std::size_t j = i + 1; j < vertex_count; ++j)
      if (edge(i, j)) out.emplace_back(i, j);
  return out;
}

AuxGraph build_aux_graph(const SpernerSystem& sys) {
  if (sys.size() > 32) throw Error(Errc::TooManyMembers, "aux graph supports at most 32 vertices");
  AuxGraph g;
  g.vertex_count = sys.size();
  g.adjacency.assign(sys.size(), 0);
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = i + 1; j < sys.size(); ++j)
      if (indicator(sys[i].support, sys[i].pattern, sys[j].support, sys[j].pattern)) {
        g.adjacency[i] |= 1u << j;
        g.adjacency[j] |= 1u << i;
      }
  return g;
}

std::string_view graph_class_name(GraphClass c) {
  switch (c) {
    case GraphClass::HasIsolated: return "HasIsolated";
    case GraphClass::HasDegreeOne: return "HasDegreeOne";
    case GraphClass::Complete: return "Complete";
    case GraphClass::C4: return "C4";
    case GraphClass::K4Minus: return "K4Minus";
    case GraphClass::Other: return "Other";
  }
  return "Other";
}

GraphClass classify_graph(const AuxGraph& g) {
  const std::size_t n = g.vertex_count;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(i) == 0) return GraphClass::HasIsolated;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(i) == 1) return GraphClass::HasDegreeOne;
  std::size_t edge_count = 0;
  bool all_two = true;
  for (std::size_t i = 0; i < n; ++i) {
    edge_count += g.degree(i);
    all_two = all_two && g.degree(i) == 2;
  }
  edge_count /= 2;
  if (n == 0 || edge_count == n * (n - 1) / 2) return GraphClass::Complete;
  if (n == 4 && all_two) return GraphClass::C4;
  if (n == 4 && edge_count == 5) return GraphClass::K4Minus;
  return GraphClass::Other;
}

std::optional<Subset> anchor_from_complete(const SpernerSystem& sys) {
  const AuxGraph g = build_aux_graph(sys);
  for (std::size_t i = 0; i < g.vertex_count; ++i)
    if (static_cast<std::size_t>(g.degree(i)) + 1 != g.vertex_count) {
      throw Error(Errc::NotComplete, "aux graph is not complete");
    }
  Subset anchor;
  for (const auto& m : sys.members()) anchor |= m.pattern;
  for (const auto& m : sys.members())
    if ((m.support & anchor) != m.pattern) return std::nullopt;
  return anchor;
}

SExtremalityReport s_extremality_wrt(const SetFamily& fam, std::span<const Subset> antichain) {
  for (Subset s : antichain) fam.ground().validate(s);
  require_antichain(antichain);
  SExtremalityReport r;
  r.shatters_none = true;
  for (Subset s : antichain)
    if (is_shattered(fam, s)) {
      r.shatters_none = false;
      break;
    }
  r.family_size = fam.size();
  r.h_size = h_complement(fam.ground(), antichain).size();
  r.generalized_sauer = r.family_size <= r.h_size;
  r.extremal = r.shatters_none && r.family_size == r.h_size;
  return r;
}

bool is_S_extremal_wrt(const SetFamily& fam, std::span<const Subset> antichain) {
  return s_extremality_wrt(fam, antichain).extremal;
}

}  // namespace shatter
