#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "shatter/sperner.hpp"

namespace shatter {

// 1 iff si & hj == sj & hi, i.e. the cubes Q_{si,hi} and Q_{sj,hj} meet.
int indicator(Subset si, Subset hi, Subset sj, Subset hj);

std::optional<Cube> q_intersect(const Cube& a, const Cube& b);
// Nonempty iff every pairwise indicator is 1; then Q_{union S, union H}.
std::optional<Cube> multi_intersect(std::span<const Cube> cubes);

inline constexpr std::size_t kMaxBalanceMembers = 20;

struct BalanceReport {
  // |H(S)| - |F(S,h)|
  std::int64_t balance = 0;
  // contribution of the |I| = k terms to `balance`, index k (0 unused)
  std::vector<std::int64_t> by_size;
};

// |H(S)| - |F(S,h)| through the inclusion-exclusion sum over I subset of [N];
// zero exactly when F(S,h) is s-extremal with Sh = H(S).
std::int64_t ie_balance(const SpernerSystem& sys);
BalanceReport ie_balance_report(const SpernerSystem& sys);

struct AuxGraph {
  std::size_t vertex_count = 0;
  // adjacency[i] bit j set iff edge {i, j}; no loops
  std::vector<std::uint32_t> adjacency;

  bool edge(std::size_t i, std::size_t j) const { return (adjacency[i] >> j) & 1u; }
  int degree(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

AuxGraph build_aux_graph(const SpernerSystem& sys);

enum class GraphClass { HasIsolated, HasDegreeOne, Complete, C4, K4Minus, Other };
std::string_view graph_class_name(GraphClass c);
GraphClass classify_graph(const AuxGraph& g);

// A = union of H_i for a system whose aux graph is complete (NotComplete
// otherwise); nullopt if S_i & A != H_i for some i.
std::optional<Subset> anchor_from_complete(const SpernerSystem& sys);

struct SExtremalityReport {
  bool shatters_none = false;      // fam shatters no member of the antichain
  bool generalized_sauer = false;  // |fam| <= |H(S)|
  std::size_t family_size = 0;
  std::size_t h_size = 0;
  bool extremal = false;  // shatters_none && |fam| == |H(S)|
};

SExtremalityReport s_extremality_wrt(const SetFamily& fam, std::span<const Subset> antichain);
bool is_S_extremal_wrt(const SetFamily& fam, std::span<const Subset> antichain);

}  // namespace shatter
