#include <omp.h>

#include "doctest.h"
#include "oracles.hpp"
#include "shatter/cube_calculus.hpp"
#include "shatter/elimination.hpp"
#include "shatter/random.hpp"

using namespace shatter;

namespace {

const GroundSet G3(3);

SetFamily fam3(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> v;
  for (auto s : sets) v.push_back(Subset::of(s));
  return SetFamily::from_members(G3, v);
}

SpernerSystem example1() {
  return SpernerSystem(G3, {{Subset::of({1, 2}), Subset::of({1})},
                            {Subset::of({1, 3}), Subset()},
                            {Subset::of({2, 3}), Subset()}});
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InvalidArgument;
}

// Q_i minus the union of the other cubes, by enumeration.
oracle::Masks lonely_points(int n, const oracle::Pairs& ps, std::size_t i) {
  oracle::Masks out;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if ((x & ps[i].first) != ps[i].second) continue;
    bool other = false;
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j != i && (x & ps[j].first) == ps[j].second) other = true;
    if (!other) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("uncovered_witness examples") {
  const auto w = uncovered_witness(example1());
  REQUIRE(w);
  CHECK(w->index == 0);
  CHECK(w->set == Subset::of({1, 3}));
  const SpernerSystem single(G3, {{Subset::of({2}), Subset::of({2})}});
  const auto ws = uncovered_witness(single);
  REQUIRE(ws);
  CHECK(ws->index == 0);
  CHECK(ws->set == Subset::of({2}));
  CHECK(lonely_points(3, oracle::pairs(example1()), 2).empty());
  CHECK(code_of([] { uncovered_witness(SpernerSystem(G3)); }) == Errc::EmptySystem);
}

TEST_CASE("uncovered_witness matches the enumeration oracle") {
  sample::Rng rng(51);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 6;
    const auto sys = sample::random_system(GroundSet(n), 5, rng);
    const auto ps = oracle::pairs(sys);
    std::optional<std::pair<std::size_t, std::uint32_t>> expect;
    for (std::size_t i = 0; i < ps.size() && !expect; ++i) {
      const auto pts = lonely_points(n, ps, i);
      if (!pts.empty()) expect = {{i, pts.front()}};
    }
    const auto got = uncovered_witness(sys);
    REQUIRE(got.has_value() == expect.has_value());
    if (got) {
      REQUIRE(got->index == expect->first);
      REQUIRE(got->set.bits() == expect->second);
    }
    oracle::Masks all;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (auto x : lonely_points(n, ps, i)) all.push_back(x);
    std::sort(all.begin(), all.end());
    REQUIRE(oracle::masks(uncovered_sets(sys)) == all);
  }
}

TEST_CASE("successor_sperner examples") {
  CHECK(successor_sperner(example1(), 0).empty());
  const GroundSet g2(2);
  const SpernerSystem one(g2, {{Subset::of({1}), Subset()}});
  CHECK(successor_sperner(one, 0) == std::vector<Subset>{Subset::of({1, 2})});
  const SpernerSystem top(G3, {{G3.full(), Subset()}});
  CHECK(successor_sperner(top, 0).empty());
  CHECK(code_of([] { successor_sperner(example1(), 3); }) == Errc::InvalidArgument);
}

TEST_CASE("property: successor postcondition, exhaustive n <= 4, N <= 3") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& ac : oracle::antichains(n, 3)) {
      std::vector<SpernerMember> ms;
      for (auto s : ac) ms.push_back({Subset(s), Subset()});
      const SpernerSystem sys(GroundSet(n), ms);
      for (std::size_t i = 0; i < sys.size(); ++i) {
        oracle::Masks next;
        for (std::size_t j = 0; j < sys.size(); ++j)
          if (j != i) next.push_back(sys[j].support.bits());
        for (Subset s : successor_sperner(sys, i)) next.push_back(s.bits());
        REQUIRE(oracle::is_antichain(next));
        auto expect = oracle::h_of(n, oracle::supports_of(oracle::pairs(sys)));
        expect.push_back(sys[i].support.bits());
        std::sort(expect.begin(), expect.end());
        REQUIRE(oracle::h_of(n, next) == expect);
      }
    }
}

TEST_CASE("extend_assignment examples") {
  const auto next = extend_assignment(example1(), 0, Subset::of({1, 3}));
  CHECK(next == SpernerSystem(G3, {{Subset::of({1, 3}), Subset()}, {Subset::of({2, 3}), Subset()}}));
  const GroundSet g2(2);
  const SpernerSystem one(g2, {{Subset::of({1}), Subset::of({1})}});
  const auto grown = extend_assignment(one, 0, Subset::of({1}));
  REQUIRE(grown.size() == 1);
  CHECK(grown[0].support == Subset::of({1, 2}));
  CHECK(grown[0].pattern == Subset::of({1, 2}));
  const SpernerSystem top(G3, {{G3.full(), Subset::of({2})}});
  CHECK(extend_assignment(top, 0, Subset::of({2})).empty());
  CHECK(code_of([] { extend_assignment(example1(), 0, Subset::of({1})); }) == Errc::WitnessNotEligible);
  CHECK(code_of([] { extend_assignment(example1(), 0, Subset::of({2})); }) == Errc::WitnessNotEligible);
}

TEST_CASE("augment examples") {
  const auto cert = augment(example1());
  REQUIRE(cert);
  CHECK(cert->augmented_family == fam3({{3}, {1, 3}, {1, 2}, {2, 3}, {1, 2, 3}}));
  CHECK(shattered_sets(cert->augmented_family) == fam3({{}, {1}, {2}, {3}, {1, 2}}));
  CHECK(cert->chosen_s0 == Subset::of({1, 2}));
  CHECK_NOTHROW(verify_certificate(*cert));

  const SpernerSystem almost(G3, {{G3.full(), Subset::of({1, 3})}});
  const auto top = augment(almost);
  REQUIRE(top);
  CHECK(top->augmented_family == SetFamily::full(G3));
  CHECK(top->witness_f == Subset::of({1, 3}));

  const SpernerSystem two(G3, {{Subset::of({1, 2}), Subset::of({1})}, {Subset::of({2, 3}), Subset::of({2})}});
  CHECK(code_of([&] { augment(two); }) == Errc::NotExtremalInput);
  CHECK(code_of([] { augment(SpernerSystem(G3)); }) == Errc::FullFamily);
}

TEST_CASE("verify_certificate rejects tampered certificates") {
  const auto cert = *augment(example1());
  auto bad = cert;
  bad.witness_f = Subset::of({3});
  CHECK(code_of([&] { verify_certificate(bad); }) == Errc::VerificationFailed);
  bad = cert;
  bad.augmented_family = bad.augmented_family.with(Subset());
  CHECK(code_of([&] { verify_certificate(bad); }) == Errc::VerificationFailed);
  bad = cert;
  bad.chosen_s0 = Subset::of({2, 3});
  CHECK(code_of([&] { verify_certificate(bad); }) == Errc::VerificationFailed);
  bad = cert;
  bad.successor = example1();
  CHECK(code_of([&] { verify_certificate(bad); }) == Errc::VerificationFailed);
}

TEST_CASE("augment_hA examples") {
  const std::vector<Subset> s = {Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  const auto cert = augment_hA(G3, s, Subset::of({1}), 0);
  CHECK(build_f(cert.original) == fam3({{2}, {3}, {2, 3}, {1, 2, 3}}));
  CHECK(cert.augmented_family == fam3({{2}, {3}, {1, 3}, {2, 3}, {1, 2, 3}}));
  CHECK(cert.successor == h_from_anchor(G3, std::vector<Subset>{Subset::of({1, 3}), Subset::of({2, 3})}, Subset::of({1})));

  const std::vector<Subset> top = {G3.full()};
  for (std::uint32_t a = 0; a < 8; ++a) CHECK(augment_hA(G3, top, Subset(a), 0).augmented_family == SetFamily::full(G3));
  for (std::size_t i = 0; i < 3; ++i) {
    const auto c = augment_hA(G3, s, Subset(), i);
    CHECK(c.augmented_family.size() == 5);
  }
  const std::vector<Subset> chain = {Subset::of({1}), Subset::of({1, 2})};
  CHECK(code_of([&] { augment_hA(G3, chain, Subset(), 0); }) == Errc::NotAntichain);
}

TEST_CASE("peel examples") {
  CHECK(peel(fam3({{}})) == Subset());
  const auto down = fam3({{}, {1}, {2}, {1, 2}, {3}});
  const auto r = peel(down);
  REQUIRE(r);
  CHECK(is_s_extremal(down.without(*r)));
  const auto ex = build_f(example1());
  const auto removed = peel(ex);
  REQUIRE(removed);
  const auto oracle_ok = oracle::removable(oracle::masks(ex), 3);
  CHECK(std::find(oracle_ok.begin(), oracle_ok.end(), removed->bits()) != oracle_ok.end());
  CHECK(code_of([] { peel(SetFamily(G3)); }) == Errc::EmptyFamily);
  CHECK(code_of([] { peel(fam3({{}, {1, 2}})); }) == Errc::NotExtremal);
  CHECK(code_of([&] { verify_peel(PeelCertificate{ex, Subset::of({1}), ex}); }) == Errc::VerificationFailed);
}

TEST_CASE("property: graph claims and witness existence on random systems") {
  sample::Rng rng(52);
  int low_degree = 0, extremal = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const GroundSet g(1 + trial % 7);
    const auto sys = sample::random_system(g, 4, rng);
    const auto ps = oracle::pairs(sys);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i == j) continue;
        // Q_i inside Q_j would make every lonely point of i vanish
        REQUIRE_FALSE(lonely_points(g.n(), {ps[i], ps[j]}, 0).empty());
      }
    const auto graph = build_aux_graph(sys);
    bool low = false;
    for (std::size_t i = 0; i < graph.vertex_count; ++i) low = low || graph.degree(i) <= 1;
    if (low) {
      ++low_degree;
      REQUIRE(uncovered_witness(sys));
    }
    if (build_f(sys).size() == h_complement(sys).size()) {
      ++extremal;
      REQUIRE(uncovered_witness(sys));
    }
  }
  CHECK(low_degree > 100);
  CHECK(extremal > 100);
}

TEST_CASE("property: certificate chain |F| <= |F'| <= |Sh(F')| <= |H(S')| = |F|+1") {
  sample::Rng rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const GroundSet g(1 + trial % 7);
    const auto draw = sample::random_extremal_system(g, 5, rng);
    const auto cert = augment(draw.system);
    REQUIRE(cert);
    const auto f = build_f(draw.system);
    const auto& fp = cert->augmented_family;
    const std::size_t sh = shattered_sets(fp).size();
    const std::size_t hp = h_complement(cert->successor).size();
    REQUIRE(f.size() <= fp.size());
    REQUIRE(fp.size() <= sh);
    REQUIRE(sh <= hp);
    REQUIRE(hp == f.size() + 1);
    REQUIRE_FALSE(f.contains(cert->witness_f));
  }
}

TEST_CASE("property: peel/augment duality, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const GroundSet g(n);
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << g.universe_size()); ++idx) {
      const auto fam = family_from_index(g, idx);
      if (!is_s_extremal(fam)) continue;
      const bool removable = !oracle::removable(oracle::masks(fam), n).empty();
      const auto dual = complement_family(fam);
      const bool dual_success = dual.is_full() ? false : augment(canonical_decomposition(dual)).has_value();
      if (dual.is_full()) continue;  // fam = {} never reaches here
      REQUIRE(dual_success == removable);
      const auto r = peel(fam);
      REQUIRE(r.has_value() == removable);
      if (r) REQUIRE(is_s_extremal(fam.without(*r)));
    }
  }
}

TEST_CASE("family indexing and random sampling scheme") {
  CHECK(family_from_index(GroundSet(2), 0b1001) == SetFamily::from_members(GroundSet(2), {Subset(), Subset(3)}));
  std::mt19937_64 rng(17 + 3);
  const std::uint64_t word = rng();
  const auto fam = random_family_at(GroundSet(3), 17, 3);
  CHECK(fam == family_from_index(GroundSet(3), word & 0xff));
}

TEST_CASE("audit: exhaustive n <= 3 counts match brute force") {
  for (int n = 0; n <= 3; ++n) {
    const auto r = audit_conjecture(n, AuditMode::exhaustive());
    std::uint64_t extremal_proper = 0, nonempty_extremal = 0;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx) {
      oracle::Masks ms;
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        if ((idx >> x) & 1) ms.push_back(x);
      if (!oracle::extremal(ms, n)) continue;
      nonempty_extremal += !ms.empty();
      extremal_proper += ms.size() != (1u << n);
    }
    CHECK(r.families_examined == (std::uint64_t{1} << (1u << n)));
    CHECK(r.extremal_proper == extremal_proper);
    CHECK(r.bruteforce_addable == extremal_proper);
    CHECK(r.witness_found == extremal_proper);
    CHECK(r.augment_verified == extremal_proper);
    CHECK(r.peel_checked == nonempty_extremal);
    CHECK(r.peel_verified == nonempty_extremal);
    CHECK(r.clean());
    CHECK(r.failures.empty());
  }
}

TEST_CASE("audit: parallel equals serial reference and is reproducible") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto par = audit_conjecture(3, AuditMode::exhaustive());
  const auto ser = audit_conjecture_serial(3, AuditMode::exhaustive());
  CHECK(par.families_examined == ser.families_examined);
  CHECK(par.augment_verified == ser.augment_verified);
  CHECK(par.peel_verified == ser.peel_verified);
  CHECK(par.failures == ser.failures);
  const auto a = audit_conjecture(6, AuditMode::random(200, 9));
  const auto b = audit_conjecture_serial(6, AuditMode::random(200, 9));
  const auto c = audit_conjecture(6, AuditMode::random(200, 9));
  CHECK(a.families_examined == 200);
  CHECK(a.extremal_proper == b.extremal_proper);
  CHECK(a.augment_verified == b.augment_verified);
  CHECK(a.extremal_proper == c.extremal_proper);
  CHECK(a.clean());
  omp_set_num_threads(saved);
}

TEST_CASE("audit limits and pair mode") {
  CHECK(code_of([] { audit_conjecture(5, AuditMode::exhaustive()); }) == Errc::TooLarge);
  CHECK(code_of([] { audit_conjecture(11, AuditMode::random(1, 1)); }) == Errc::TooLarge);
  const auto p = audit_pairs(4, 300, 5);
  CHECK(p.systems == 300);
  CHECK(p.extremal_without_witness == 0);
  CHECK(p.witness_found + p.extremal_without_witness + p.non_extremal_without_witness == p.systems);
  const auto q = audit_pairs(4, 300, 5);
  CHECK(q.witness_found == p.witness_found);
}
