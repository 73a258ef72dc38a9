#include "shatter/elimination.hpp"

#include <algorithm>
#include <random>

#include "shatter/kernels.hpp"

namespace shatter {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::VerificationFailed, what); }

bool covered_by_others(const SpernerSystem& sys, std::size_t skip, Subset f) {
  for (std::size_t j = 0; j < sys.size(); ++j)
    if (j != skip && sys.q_cube_at(j).contains(f)) return true;
  return false;
}

void check_index(const SpernerSystem& sys, std::size_t index) {
  if (index >= sys.size()) {
    throw Error(Errc::InvalidArgument, "member index " + std::to_string(index) + " out of range for " +
                                           std::to_string(sys.size()) + " members");
  }
}

}  // namespace

std::optional<Witness> uncovered_witness(const SpernerSystem& sys) {
  if (sys.empty()) throw Error(Errc::EmptySystem, "uncovered_witness needs at least one member");
  const Subset full = sys.ground().full();
  for (std::size_t i = 0; i < sys.size(); ++i) {
    const auto& m = sys[i];
    std::optional<Subset> found;
    // ascending free parts give ascending members of Q_i
    for_each_subset(full - m.support, [&](Subset free) {
      if (found) return;
      const Subset f = m.pattern | free;
      if (!covered_by_others(sys, i, f)) found = f;
    });
    if (found) return Witness{i, *found};
  }
  return std::nullopt;
}

SetFamily uncovered_sets(const SpernerSystem& sys) {
  const std::uint64_t size = sys.ground().universe_size();
  std::vector<std::uint8_t> hits(size, 0);
  const Subset full = sys.ground().full();
  for (const auto& m : sys.members())
    for_each_subset(full - m.support, [&](Subset free) {
      auto& h = hits[(m.pattern | free).bits()];
      if (h < 2) ++h;
    });
  for (auto& h : hits) h = (h == 1);
  return SetFamily::from_indicator(sys.ground(), hits);
}

std::vector<Subset> successor_sperner(const SpernerSystem& sys, std::size_t s0_index) {
  check_index(sys, s0_index);
  const Subset s0 = sys[s0_index].support;
  std::vector<Subset> out;
  for (int v = 1; v <= sys.ground().n(); ++v) {
    if (s0.has(v)) continue;
    const Subset candidate = s0 | Subset::singleton(v);
    bool blocked = false;
    for (std::size_t j = 0; j < sys.size() && !blocked; ++j)
      blocked = j != s0_index && sys[j].support.subset_of(candidate);
    if (!blocked) out.push_back(candidate);
  }
  return out;
}

SpernerSystem extend_assignment(const SpernerSystem& sys, std::size_t s0_index, Subset witness) {
  check_index(sys, s0_index);
  const auto& m0 = sys[s0_index];
  if (!sys.q_cube_at(s0_index).contains(witness) || covered_by_others(sys, s0_index, witness)) {
    throw Error(Errc::WitnessNotEligible,
                witness.to_string() + " is not in Q_0 alone for S_0 = " + m0.support.to_string());
  }
  std::vector<SpernerMember> members;
  for (std::size_t j = 0; j < sys.size(); ++j)
    if (j != s0_index) members.push_back(sys[j]);
  for (Subset s : successor_sperner(sys, s0_index)) {
    const Subset v = s - m0.support;
    // Q_{S',H_0} and Q_{S',H_0+v} split Q_0; keep the half that misses the witness
    const Subset h = (witness & v).empty() ? (m0.pattern | v) : m0.pattern;
    members.push_back({s, h});
  }
  return SpernerSystem(sys.ground(), std::move(members));
}

void verify_certificate(const EliminationCertificate& cert) {
  const SpernerSystem& sys = cert.original;
  const SetFamily base = build_f(sys);
  if (base.contains(cert.witness_f)) fail("witness already in the original family");
  if (!(cert.augmented_family == base.with(cert.witness_f))) fail("augmented family is not F + {witness}");
  if (!(build_f(cert.successor) == cert.augmented_family)) fail("F(S',h') differs from the augmented family");
  const SetFamily sh = shattered_sets(cert.augmented_family);
  if (sh.size() != cert.augmented_family.size()) fail("augmented family is not s-extremal");
  const SetFamily expected_h = h_complement(sys).with(cert.chosen_s0);
  if (!(h_complement(cert.successor) == expected_h)) fail("H(S') != H(S) + {S_0}");
  if (!(sh == expected_h)) fail("Sh(F') != H(S')");
}

std::optional<EliminationCertificate> augment(const SpernerSystem& sys) {
  if (sys.empty()) throw Error(Errc::FullFamily, "the empty system gives F = 2^[n]; nothing to add");
  const SetFamily f = build_f(sys);
  if (!(shattered_sets(f) == h_complement(sys))) {
    throw Error(Errc::NotExtremalInput, "F(S,h) is not s-extremal with Sh = H(S)");
  }
  const auto w = uncovered_witness(sys);
  if (!w) return std::nullopt;
  EliminationCertificate cert{sys, sys[w->index].support, w->set, extend_assignment(sys, w->index, w->set), {}};
  cert.augmented_family = build_f(cert.successor);
  verify_certificate(cert);
  return cert;
}

EliminationCertificate augment_hA(GroundSet ground, std::span<const Subset> antichain, Subset anchor,
                                  std::size_t s0_index) {
  const SpernerSystem sys = h_from_anchor(ground, antichain, anchor);
  check_index(sys, s0_index);
  std::vector<Subset> next;
  for (std::size_t j = 0; j < sys.size(); ++j)
    if (j != s0_index) next.push_back(sys[j].support);
  for (Subset s : successor_sperner(sys, s0_index)) next.push_back(s);
  const SpernerSystem successor = h_from_anchor(ground, next, anchor);

  const SetFamily before = build_f(sys);
  const SetFamily after = build_f(successor);
  if (after.size() != before.size() + 1 || !is_subfamily(before, after)) {
    fail("h_A step did not add exactly one set");
  }
  const SetFamily added = set_difference(after, before);
  EliminationCertificate cert{sys, sys[s0_index].support, added.members()[0], successor, after};
  verify_certificate(cert);
  return cert;
}

std::optional<Subset> peel(const SetFamily& fam) {
  if (fam.empty()) throw Error(Errc::EmptyFamily, "nothing to peel from the empty family");
  if (!is_s_extremal(fam)) throw Error(Errc::NotExtremal, "peel needs an s-extremal family");
  const SetFamily dual = complement_family(fam);
  const auto cert = augment(canonical_decomposition(dual));
  if (!cert) return std::nullopt;
  const Subset removed = cert->witness_f;
  verify_peel(PeelCertificate{fam, removed, fam.without(removed)});
  return removed;
}

void verify_peel(const PeelCertificate& cert) {
  if (!cert.original.contains(cert.removed)) fail("removed set is not a member");
  if (!(cert.peeled == cert.original.without(cert.removed))) fail("peeled family is not F - {removed}");
  if (!is_s_extremal(cert.original)) fail("original family is not s-extremal");
  if (!is_s_extremal(cert.peeled)) fail("peeled family is not s-extremal");
}

// ---------------------------------------------------------------------------
// audit

SetFamily family_from_index(GroundSet ground, std::uint64_t index) {
  std::vector<Subset> members;
  for (std::uint64_t x = 0; x < ground.universe_size(); ++x)
    if ((index >> x) & 1u) members.emplace_back(static_cast<std::uint32_t>(x));
  return SetFamily::from_members(ground, std::move(members));
}

SetFamily random_family_at(GroundSet ground, std::uint64_t seed, std::uint64_t k) {
  std::mt19937_64 rng(seed + k);
  std::vector<Subset> members;
  std::uint64_t word = 0;
  for (std::uint64_t x = 0; x < ground.universe_size(); ++x) {
    if (x % 64 == 0) word = rng();
    if ((word >> (x % 64)) & 1u) members.emplace_back(static_cast<std::uint32_t>(x));
  }
  return SetFamily::from_members(ground, std::move(members));
}

namespace {

std::string describe(const SetFamily& fam, const std::string& what) { return what + " for " + to_string(fam); }

// One family's contribution; failures carry the family index.
void audit_one_unguarded(const SetFamily& fam, std::uint64_t index, AuditReport& r) {
  ++r.families_examined;
  if (!is_s_extremal(fam)) return;

  auto record = [&](std::uint64_t& counter, const std::string& why) {
    ++counter;
    r.failures.push_back({index, describe(fam, why)});
  };

  if (!fam.empty()) {
    ++r.peel_checked;
    bool removable = false;
    for (Subset f : fam)
      if (is_s_extremal(fam.without(f))) {
        removable = true;
        break;
      }
    try {
      const auto removed = peel(fam);
      if (removed) ++r.peel_verified;
      if (removed.has_value() != removable) record(r.discrepancies, "peel disagrees with brute-force removal");
    } catch (const Error& e) {
      record(r.discrepancies, std::string("peel raised ") + e.what());
    }
  }

  if (fam.is_full()) return;
  ++r.extremal_proper;

  std::vector<Subset> addable;
  for (std::uint64_t x = 0; x < fam.ground().universe_size(); ++x) {
    const Subset f(static_cast<std::uint32_t>(x));
    if (!fam.contains(f) && is_s_extremal(fam.with(f))) addable.push_back(f);
  }
  if (addable.empty())
    record(r.conjecture_failures, "no addable set");
  else
    ++r.bruteforce_addable;

  const SpernerSystem sys = canonical_decomposition(fam);
  if (!(build_f(sys) == fam)) record(r.discrepancies, "decomposition does not rebuild the family");
  // every addable set is an uncovered point of some cube and conversely
  if (!(uncovered_sets(sys) == SetFamily::from_members(fam.ground(), addable))) {
    record(r.discrepancies, "uncovered cube points differ from brute-force addable sets");
  }
  const auto witness = uncovered_witness(sys);
  if (witness) ++r.witness_found;
  if (witness.has_value() != !addable.empty()) record(r.discrepancies, "witness existence disagrees with brute force");
  if (witness) {
    try {
      const auto cert = augment(sys);
      if (!cert) {
        record(r.discrepancies, "augment found no witness");
      } else if (!std::binary_search(addable.begin(), addable.end(), cert->witness_f)) {
        record(r.discrepancies, "augment added a set brute force rejects");
      } else {
        ++r.augment_verified;
      }
    } catch (const Error& e) {
      record(r.discrepancies, std::string("augment raised ") + e.what());
    }
  }
}

void audit_one(const SetFamily& fam, std::uint64_t index, AuditReport& r) {
  try {
    audit_one_unguarded(fam, index, r);
  } catch (const Error& e) {
    ++r.discrepancies;
    r.failures.push_back({index, describe(fam, std::string("raised ") + e.what())});
  }
}

void merge(AuditReport& into, AuditReport&& part) {
  into.families_examined += part.families_examined;
  into.extremal_proper += part.extremal_proper;
  into.bruteforce_addable += part.bruteforce_addable;
  into.witness_found += part.witness_found;
  into.augment_verified += part.augment_verified;
  into.peel_checked += part.peel_checked;
  into.peel_verified += part.peel_verified;
  into.conjecture_failures += part.conjecture_failures;
  into.discrepancies += part.discrepancies;
  into.failures.insert(into.failures.end(), std::make_move_iterator(part.failures.begin()),
                       std::make_move_iterator(part.failures.end()));
}

struct AuditPlan {
  GroundSet ground;
  std::uint64_t total;
};

AuditPlan plan_audit(int n, const AuditMode& mode) {
  if (mode.kind == AuditMode::Kind::Exhaustive && (n < 0 || n > kMaxExhaustiveAudit)) {
    throw Error(Errc::TooLarge, "exhaustive audit supports n <= " + std::to_string(kMaxExhaustiveAudit) +
                                    "; use random mode with --seed for larger n");
  }
  if (mode.kind == AuditMode::Kind::Random && (n < 0 || n > kMaxRandomAudit)) {
    throw Error(Errc::TooLarge, "random audit supports n <= " + std::to_string(kMaxRandomAudit));
  }
  const GroundSet g(n);
  const std::uint64_t total =
      mode.kind == AuditMode::Kind::Exhaustive ? (std::uint64_t{1} << g.universe_size()) : mode.count;
  return {g, total};
}

SetFamily audit_family(const AuditPlan& plan, const AuditMode& mode, std::uint64_t k) {
  return mode.kind == AuditMode::Kind::Exhaustive ? family_from_index(plan.ground, k)
                                                  : random_family_at(plan.ground, mode.seed, k);
}

void finish(AuditReport& r) {
  std::sort(r.failures.begin(), r.failures.end(),
            [](const AuditFailure& a, const AuditFailure& b) { return a.index < b.index; });
}

}  // namespace

AuditReport audit_conjecture_serial(int n, AuditMode mode) {
  const AuditPlan plan = plan_audit(n, mode);
  AuditReport r;
  r.n = n;
  r.mode = mode;
  for (std::uint64_t k = 0; k < plan.total; ++k) audit_one(audit_family(plan, mode, k), k, r);
  finish(r);
  return r;
}

AuditReport audit_conjecture(int n, AuditMode mode) {
  const AuditPlan plan = plan_audit(n, mode);
  AuditReport r;
  r.n = n;
  r.mode = mode;
  const auto total = static_cast<std::int64_t>(plan.total);
#pragma omp parallel
  {
    AuditReport local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t k = 0; k < total; ++k) {
      const auto idx = static_cast<std::uint64_t>(k);
      audit_one(audit_family(plan, mode, idx), idx, local);
    }
#pragma omp critical
    merge(r, std::move(local));
  }
  finish(r);
  return r;
}

PairAuditReport audit_pairs(int n, std::uint64_t count, std::uint64_t seed) {
  if (n < 1 || n > kMaxRandomAudit) {
    throw Error(Errc::TooLarge, "pair audit supports 1 <= n <= " + std::to_string(kMaxRandomAudit));
  }
  const GroundSet g(n);
  PairAuditReport r;
  r.n = n;
  r.count = count;
  r.seed = seed;
  for (std::uint64_t k = 0; k < count; ++k) {
    std::mt19937_64 rng(seed + k);
    // antichain of up to 6 sets drawn element-wise with probability 1/2
    std::vector<Subset> supports;
    std::uniform_int_distribution<std::size_t> size_dist(1, 6);
    const std::size_t target = size_dist(rng);
    for (int attempt = 0; attempt < 64 && supports.size() < target; ++attempt) {
      const Subset s(static_cast<std::uint32_t>(rng()) & g.full().bits());
      if (std::none_of(supports.begin(), supports.end(), [&](Subset t) { return t.comparable(s); }))
        supports.push_back(s);
    }
    std::vector<SpernerMember> members;
    for (Subset s : supports) members.push_back({s, Subset(static_cast<std::uint32_t>(rng())) & s});
    const SpernerSystem sys(g, std::move(members));
    ++r.systems;
    const bool extremal = build_f(sys).size() == h_complement(sys).size();
    if (extremal) ++r.extremal;
    if (uncovered_witness(sys)) {
      ++r.witness_found;
    } else if (extremal) {
      ++r.extremal_without_witness;
    } else {
      ++r.non_extremal_without_witness;
    }
  }
  return r;
}

}  // namespace shatter
