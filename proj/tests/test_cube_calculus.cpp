#include "doctest.h"
#include "oracles.hpp"
#include "shatter/cube_calculus.hpp"
#include "shatter/random.hpp"

using namespace shatter;

namespace {

const GroundSet G3(3);

SpernerSystem example1() {
  return SpernerSystem(G3, {{Subset::of({1, 2}), Subset::of({1})},
                            {Subset::of({1, 3}), Subset()},
                            {Subset::of({2, 3}), Subset()}});
}

AuxGraph graph_of(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  AuxGraph g;
  g.vertex_count = n;
  g.adjacency.assign(n, 0);
  for (auto [a, b] : edges) {
    g.adjacency[a] |= 1u << b;
    g.adjacency[b] |= 1u << a;
  }
  return g;
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

}  // namespace

TEST_CASE("indicator examples") {
  const auto e = example1();
  CHECK(indicator(e[0].support, e[0].pattern, e[1].support, e[1].pattern) == 0);
  CHECK(indicator(Subset::of({1}), Subset::of({1}), Subset::of({2, 3}), Subset::of({3})) == 1);
  CHECK(indicator(e[0].support, e[0].pattern, e[0].support, e[0].pattern) == 1);
  CHECK(code_of([] { indicator(Subset::of({1}), Subset::of({2}), Subset(), Subset()); }) ==
        Errc::PatternNotInSupport);
}

TEST_CASE("q_intersect examples") {
  const Cube a = q_cube(G3, Subset::of({1, 2}), Subset::of({1}));
  const Cube b = q_cube(G3, Subset::of({2, 3}), Subset());
  const auto ab = q_intersect(a, b);
  REQUIRE(ab);
  CHECK(*ab == q_cube(G3, G3.full(), Subset::of({1})));
  CHECK(cube_members(*ab) == SetFamily::from_members(G3, {Subset::of({1})}));
  CHECK_FALSE(q_intersect(a, q_cube(G3, Subset::of({1, 3}), Subset())));
  CHECK(q_intersect(a, a) == a);
  CHECK(code_of([&] { q_intersect(a, q_cube(GroundSet(4), Subset(), Subset())); }) == Errc::GroundMismatch);
  // rule (i): P-cubes intersect in P of the union
  CHECK(q_intersect(p_cube(G3, Subset::of({1})), p_cube(G3, Subset::of({2}))) == p_cube(G3, Subset::of({1, 2})));
}

TEST_CASE("multi_intersect examples") {
  const auto cubes = example1().q_cubes();
  CHECK_FALSE(multi_intersect(cubes));
  const std::vector<Cube> q13 = {cubes[0], cubes[2]};
  CHECK(multi_intersect(q13) == q_cube(G3, G3.full(), Subset::of({1})));
  const std::vector<Cube> one = {cubes[1]};
  CHECK(multi_intersect(one) == cubes[1]);
  CHECK(code_of([] { multi_intersect(std::vector<Cube>{}); }) == Errc::EmptyList);
}

TEST_CASE("property: rule (ii) soundness over all cube pairs, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const GroundSet g(n);
    std::vector<Cube> all;
    for (std::uint32_t s = 0; s < (1u << n); ++s) for_each_subset(Subset(s), [&](Subset h) { all.push_back(q_cube(g, Subset(s), h)); });
    for (const Cube& a : all)
      for (const Cube& b : all) {
        const auto ma = cube_members(a), mb = cube_members(b);
        const auto both = set_intersection(ma, mb);
        const auto c = q_intersect(a, b);
        REQUIRE(c.has_value() == !both.empty());
        if (c) REQUIRE(cube_members(*c) == both);
        const std::vector<Cube> pair = {a, b};
        REQUIRE(multi_intersect(pair) == c);
      }
  }
}

TEST_CASE("property: multi_intersect agrees with folding q_intersect") {
  sample::Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const GroundSet g(1 + trial % 6);
    const auto cubes = sample::random_system(g, 5, rng).q_cubes();
    std::optional<Cube> folded = cubes[0];
    for (std::size_t i = 1; i < cubes.size() && folded; ++i) folded = q_intersect(*folded, cubes[i]);
    REQUIRE(multi_intersect(cubes) == folded);
  }
}

TEST_CASE("ie_balance examples") {
  CHECK(ie_balance(example1()) == 0);
  const auto r = ie_balance_report(example1());
  REQUIRE(r.by_size.size() == 4);
  CHECK(r.by_size[1] == 0);
  CHECK(r.by_size[2] == 1);
  CHECK(r.by_size[3] == -1);
  const SpernerSystem two(G3, {{Subset::of({1, 2}), Subset::of({1})}, {Subset::of({2, 3}), Subset::of({2})}});
  CHECK(ie_balance(two) == 1);
  const std::vector<Subset> s = {Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  for (std::uint32_t a = 0; a < 8; ++a) CHECK(ie_balance(h_from_anchor(G3, s, Subset(a))) == 0);
  CHECK(ie_balance(SpernerSystem(G3)) == 0);
}

TEST_CASE("ie_balance member cap") {
  const GroundSet g(20);
  std::vector<SpernerMember> ms;
  for (int i = 1; i <= 20; ++i) ms.push_back({Subset::singleton(i), Subset()});
  CHECK_NOTHROW(ie_balance(SpernerSystem(g, ms)));
  const GroundSet g21(21);
  ms.push_back({Subset::singleton(21), Subset()});
  CHECK(code_of([&] { ie_balance(SpernerSystem(g21, ms)); }) == Errc::TooManyMembers);
}

TEST_CASE("property: IE identity against independent counting") {
  sample::Rng rng(42);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 8;
    const SpernerSystem sys = sample::random_system(GroundSet(n), 6, rng);
    const auto ps = oracle::pairs(sys);
    const std::int64_t h = oracle::h_of(n, oracle::supports_of(ps)).size();
    const std::int64_t f = oracle::build_f(n, ps).size();
    const std::int64_t b = ie_balance(sys);
    REQUIRE(b == h - f);
    REQUIRE(b >= 0);
    const auto fam = build_f(sys);
    REQUIRE((b == 0) == (is_s_extremal(fam) && shattered_sets(fam) == h_complement(sys)));
    const auto r = ie_balance_report(sys);
    std::int64_t sum = 0;
    for (auto v : r.by_size) sum += v;
    REQUIRE(sum == b);
  }
}

TEST_CASE("aux graph examples") {
  const auto g = build_aux_graph(example1());
  CHECK(g.vertex_count == 3);
  CHECK(g.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(g.degree(0) == 1);
  CHECK(classify_graph(g) == GraphClass::HasDegreeOne);
  const std::vector<Subset> s = {Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  CHECK(classify_graph(build_aux_graph(h_from_anchor(G3, s, Subset::of({2})))) == GraphClass::Complete);
  const auto single = build_aux_graph(SpernerSystem(G3, {{Subset::of({1}), Subset()}}));
  CHECK(single.edges().empty());
  CHECK(classify_graph(single) == GraphClass::HasIsolated);
}

TEST_CASE("classify_graph categories") {
  CHECK(classify_graph(graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == GraphClass::Complete);
  CHECK(classify_graph(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == GraphClass::C4);
  CHECK(classify_graph(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})) == GraphClass::K4Minus);
  CHECK(classify_graph(graph_of(4, {{0, 1}, {1, 2}, {2, 0}})) == GraphClass::HasIsolated);
  CHECK(classify_graph(graph_of(4, {{0, 1}, {1, 2}, {2, 3}})) == GraphClass::HasDegreeOne);
  CHECK(classify_graph(graph_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == GraphClass::Other);
  CHECK(classify_graph(graph_of(0, {})) == GraphClass::Complete);
  CHECK(graph_class_name(GraphClass::K4Minus) == "K4Minus");
}

TEST_CASE("property: edge iff cubes meet iff member lists meet") {
  sample::Rng rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroundSet g(1 + trial % 6);
    const auto sys = sample::random_system(g, 6, rng);
    const auto graph = build_aux_graph(sys);
    for (std::size_t i = 0; i < sys.size(); ++i)
      for (std::size_t j = 0; j < sys.size(); ++j) {
        if (i == j) {
          REQUIRE_FALSE(graph.edge(i, j));
          continue;
        }
        const bool meet = !set_intersection(cube_members(sys.q_cube_at(i)), cube_members(sys.q_cube_at(j))).empty();
        REQUIRE(graph.edge(i, j) == meet);
        REQUIRE(q_intersect(sys.q_cube_at(i), sys.q_cube_at(j)).has_value() == meet);
      }
  }
}

TEST_CASE("anchor_from_complete examples") {
  const std::vector<Subset> s = {Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  CHECK(anchor_from_complete(h_from_anchor(G3, s, Subset::of({1}))) == Subset::of({1}));
  CHECK(anchor_from_complete(h_from_anchor(G3, s, Subset())) == Subset());
  CHECK(anchor_from_complete(h_from_anchor(G3, s, G3.full())) == G3.full());
  CHECK(code_of([] { anchor_from_complete(example1()); }) == Errc::NotComplete);
}

TEST_CASE("property: complete graphs come from an anchor") {
  sample::Rng rng(44);
  int complete = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const GroundSet g(1 + trial % 6);
    const auto sys = sample::random_system(g, 5, rng);
    if (classify_graph(build_aux_graph(sys)) != GraphClass::Complete) continue;
    ++complete;
    const auto a = anchor_from_complete(sys);
    REQUIRE(a);
    const auto supports = sys.supports();
    REQUIRE(build_f(sys) == build_f(h_from_anchor(g, supports, *a)));
  }
  CHECK(complete > 100);
}

TEST_CASE("S-extremality examples") {
  const std::vector<Subset> s = {Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  CHECK(is_S_extremal_wrt(build_f(example1()), s));
  const auto down = SetFamily::from_members(G3, {Subset(), Subset::of({1}), Subset::of({2}), Subset::of({3})});
  CHECK(is_S_extremal_wrt(down, s));
  const auto r = s_extremality_wrt(SetFamily::full(G3), s);
  CHECK_FALSE(r.extremal);
  CHECK_FALSE(r.shatters_none);
  CHECK(r.family_size == 8);
  CHECK(r.h_size == 4);
  const std::vector<Subset> chain = {Subset::of({1}), Subset::of({1, 2})};
  CHECK(code_of([&] { is_S_extremal_wrt(down, chain); }) == Errc::NotAntichain);
}

TEST_CASE("property: generalized Sauer inequality") {
  sample::Rng rng(45);
  int applicable = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const GroundSet g(1 + trial % 7);
    const auto ac = sample::random_antichain(g, 4, rng);
    SetFamily fam = sample::random_family(g, rng);
    std::vector<Subset> v;
    for (Subset x : fam)
      if (rng() % 3 == 0) v.push_back(x);
    fam = SetFamily::from_members(g, v);
    const auto r = s_extremality_wrt(fam, ac);
    REQUIRE(r.generalized_sauer == (r.family_size <= r.h_size));
    if (!r.shatters_none) continue;
    ++applicable;
    REQUIRE(r.family_size <= r.h_size);
  }
  CHECK(applicable > 100);
}

TEST_CASE("property: s-extremal iff S-extremal w.r.t. minimal non-shattered sets, n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (1u << n);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      oracle::Masks ms;
      for (std::uint32_t x = 0; x < (1u << n); ++x)
        if ((idx >> x) & 1) ms.push_back(x);
      const auto fam = oracle::family(n, ms);
      const auto s = minimal_elements(complement_family(shattered_sets(fam)));
      REQUIRE(is_s_extremal(fam) == is_S_extremal_wrt(fam, s.members()));
    }
  }
}
