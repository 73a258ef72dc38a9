#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shatter/sperner.hpp"

namespace shatter {

struct EliminationCertificate {
  SpernerSystem original;
  Subset chosen_s0;
  Subset witness_f;
  SpernerSystem successor;
  SetFamily augmented_family;
};

// Re-derives every certificate invariant from scratch; throws VerificationFailed
// with the first broken one.
void verify_certificate(const EliminationCertificate& cert);

struct Witness {
  std::size_t index;  // member i with Q_i not covered by the other cubes
  Subset set;         // smallest F in Q_i \ union_{j != i} Q_j
};

// First member (canonical order) whose cube is not covered by the others,
// with its minimum-mask witness. Throws EmptySystem for N = 0.
std::optional<Witness> uncovered_witness(const SpernerSystem& sys);
// Sets lying in exactly one cube: union over i of Q_i \ union_{j != i} Q_j.
SetFamily uncovered_sets(const SpernerSystem& sys);

// The sets S_0 + {v} containing no other member, ascending.
std::vector<Subset> successor_sperner(const SpernerSystem& sys, std::size_t s0_index);

// Replaces S_0 by its successors, each getting H_0 or H_0 + {v}, whichever
// cube misses the witness.
SpernerSystem extend_assignment(const SpernerSystem& sys, std::size_t s0_index, Subset witness);

// Adds one set to the s-extremal F(S,h) keeping it s-extremal, or nullopt when
// no cube is uncovered. Throws NotExtremalInput, or FullFamily when N = 0.
std::optional<EliminationCertificate> augment(const SpernerSystem& sys);

// Same step for h = h_A with the successor assignment restricted from A;
// succeeds for every s0_index.
EliminationCertificate augment_hA(GroundSet ground, std::span<const Subset> antichain, Subset anchor,
                                  std::size_t s0_index);

// A member whose removal keeps fam s-extremal, found by augmenting the
// complement. Throws NotExtremal, EmptyFamily.
std::optional<Subset> peel(const SetFamily& fam);

struct PeelCertificate {
  SetFamily original;
  Subset removed;
  SetFamily peeled;
};
void verify_peel(const PeelCertificate& cert);

// ---------------------------------------------------------------------------
// audit

struct AuditMode {
  enum class Kind { Exhaustive, Random } kind = Kind::Exhaustive;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;

  static AuditMode exhaustive() { return {}; }
  static AuditMode random(std::uint64_t count, std::uint64_t seed) { return {Kind::Random, count, seed}; }
};

struct AuditFailure {
  std::uint64_t index;  // family index (exhaustive: its bit pattern over 2^n)
  std::string reason;
  bool operator==(const AuditFailure&) const = default;
};

struct AuditReport {
  int n = 0;
  AuditMode mode;
  std::uint64_t families_examined = 0;
  std::uint64_t extremal_proper = 0;      // s-extremal and not 2^[n]
  std::uint64_t bruteforce_addable = 0;   // some F keeps it s-extremal
  std::uint64_t witness_found = 0;        // uncovered_witness on the decomposition
  std::uint64_t augment_verified = 0;     // certificate verified, added set addable
  std::uint64_t peel_checked = 0;         // nonempty s-extremal families peeled
  std::uint64_t peel_verified = 0;
  std::uint64_t conjecture_failures = 0;  // no addable set at all
  std::uint64_t discrepancies = 0;        // machinery disagrees with brute force
  std::vector<AuditFailure> failures;     // ascending by index

  bool clean() const { return conjecture_failures == 0 && discrepancies == 0; }
};

inline constexpr int kMaxExhaustiveAudit = 4;
inline constexpr int kMaxRandomAudit = 10;

AuditReport audit_conjecture(int n, AuditMode mode);
AuditReport audit_conjecture_serial(int n, AuditMode mode);

// Experimental: witness-existence check on arbitrary (S,h) pairs, extremal
// or not.
struct PairAuditReport {
  int n = 0;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::uint64_t systems = 0;
  std::uint64_t extremal = 0;
  std::uint64_t witness_found = 0;
  std::uint64_t extremal_without_witness = 0;
  std::uint64_t non_extremal_without_witness = 0;
};

PairAuditReport audit_pairs(int n, std::uint64_t count, std::uint64_t seed);

// The family whose members are the set bits of `index` over 2^n.
SetFamily family_from_index(GroundSet ground, std::uint64_t index);
// Families sampled by including each subset independently with probability 1/2,
// from std::mt19937_64 seeded with seed + k for the k-th family.
SetFamily random_family_at(GroundSet ground, std::uint64_t seed, std::uint64_t k);

}  // namespace shatter
