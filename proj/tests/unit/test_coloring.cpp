#include <doctest.h>

#include "oracles.hpp"

using namespace sgraph;
using namespace sgraph::testing;

namespace {
const Sign P = Sign::Plus;
const Sign M = Sign::Minus;

bool proper_oracle(const SignedGraph& g, const std::vector<int>& c) {
  for (const auto& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Loose: return false;
      case EdgeKind::Half:
        if (c[static_cast<std::size_t>(e.u)] == 0) return false;
        break;
      default:
        if (c[static_cast<std::size_t>(e.v)] == to_int(e.sign) * c[static_cast<std::size_t>(e.u)]) return false;
    }
  }
  return true;
}

// Counts proper colorations with colors in {-k..k} by full enumeration.
long long brute_count(const SignedGraph& g, int k, bool zero_free) {
  const int n = g.order();
  std::vector<int> c(static_cast<std::size_t>(n), -k);
  long long count = 0;
  while (true) {
    bool skip = false;
    if (zero_free)
      for (int x : c) skip = skip || x == 0;
    if (!skip && proper_oracle(g, c)) ++count;
    int i = 0;
    while (i < n && c[static_cast<std::size_t>(i)] == k) c[static_cast<std::size_t>(i++)] = -k;
    if (i == n) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return count;
}
}  // namespace

TEST_CASE("is_proper") {
  auto pk2 = GraphBuilder(2).link(0, 1, P).build();
  CHECK(is_proper(pk2, {1, 2}));
  auto mk2 = GraphBuilder(2).link(0, 1, M).build();
  CHECK_FALSE(is_proper(mk2, {1, -1}));
  CHECK_FALSE(is_proper(GraphBuilder(1).half(0).build(), {0}));
  CHECK(is_proper(GraphBuilder(1).half(0).build(), {3}));
}

TEST_CASE("count_proper") {
  CHECK(count_proper(SignedGraph(2, {}), 1, false) == 9);
  CHECK(count_proper(SignedGraph(2, {}), 1, true) == 4);
  auto full = fixture("pmk2full.sg");
  CHECK(count_proper(full, 1, false) == 0);
  CHECK(count_proper(full, 2, false) == 8);
  CHECK(count_proper(full, 3, false, {}, 1) == count_proper(full, 3, false, {}, 4));
}

TEST_CASE("count_proper matches enumeration and both polynomials") {
  std::mt19937_64 rng(61);
  RandomSpec spec;
  spec.max_order = 4;
  spec.max_edges = 7;
  spec.loose = true;
  for (int t = 0; t < 50; ++t) {
    auto g = random_graph(rng, spec);
    auto chi = chromatic_poly_delcon(g, false);
    auto star = chromatic_poly_delcon(g, true);
    CHECK(chi == chromatic_poly_subset(g, false));
    CHECK(star == chromatic_poly_subset(g, true));
    for (int k = 0; k <= 2; ++k) {
      CHECK(count_proper(g, k, false) == brute_count(g, k, false));
      CHECK(chi(2LL * k + 1) == brute_count(g, k, false));
      if (k > 0) CHECK(star(2LL * k) == brute_count(g, k, true));
    }
  }
}

TEST_CASE("chromatic polynomial closed forms") {
  auto k3 = all_signed(complete_graph(3), P);
  auto want = IntPolynomial::from_roots({0, 1, 2});
  CHECK(chromatic_poly_delcon(k3, false) == want);
  CHECK(chromatic_poly_delcon(k3, true) == want);

  auto pm3full = catalog(Family::PlusMinusKnFull, 3).graph;
  CHECK(chromatic_poly_delcon(pm3full, false) == IntPolynomial::from_roots({1, 3, 5}));

  auto pl = GraphBuilder(2).link(0, 1, M).loop(1, P).build();
  CHECK(chromatic_poly_delcon(pl, false).is_zero());
  CHECK(chromatic_poly_delcon(pl, true).is_zero());
  CHECK(chromatic_poly_delcon(fixture("loose.sg"), false).is_zero());
}

TEST_CASE("subset expansion") {
  CHECK(chromatic_poly_subset(SignedGraph(4, {}), false) == IntPolynomial::monomial(4));
  auto g = sigma4();
  CHECK(chromatic_poly_subset(g, false) == chromatic_poly_delcon(g, false));
  CHECK(chromatic_poly_subset(g, true, {}, 3) == chromatic_poly_delcon(g, true));
  auto negc4 = fixture("neg_c4.sg");
  auto star = chromatic_poly_subset(negc4, true);
  CHECK(star(2) == brute_count(negc4, 1, true));
  CHECK(star(4) == brute_count(negc4, 2, true));
}

TEST_CASE("expansion over stable sets") {
  auto full = fixture("pmk2full.sg");
  CHECK(chromatic_via_expansion(full) == chromatic_poly_delcon(full, true).substitute(1, -1));
  CHECK(chromatic_via_expansion(SignedGraph(1, {})) == IntPolynomial::lambda());

  // Signed K_n: only the empty set and single vertices are stable.
  auto k4 = switch_graph(complete_graph(4), SwitchingFunction::from_set(4, {0}));
  k4 = k4.with_signs({M, P, M, P, M, P});
  IntPolynomial want = chromatic_poly_delcon(k4, true).substitute(1, -1);
  for (int v = 0; v < 4; ++v) want += chromatic_poly_delcon(delete_vertices(k4, {v}), true).substitute(1, -1);
  CHECK(chromatic_via_expansion(k4) == want);

  std::mt19937_64 rng(67);
  RandomSpec spec;
  spec.max_order = 5;
  spec.max_edges = 8;
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(rng, spec);
    CHECK(chromatic_via_expansion(g) == chromatic_poly_delcon(g, false));
  }
}

TEST_CASE("is_stable") {
  auto g = sigma4();
  CHECK(is_stable(g, {}));
  CHECK(is_stable(g, {1, 3}));
  CHECK_FALSE(is_stable(g, {0, 1}));
  CHECK_FALSE(is_stable(g, {2}));  // carries a half edge
}

TEST_CASE("chromatic numbers") {
  for (int n = 1; n <= 4; ++n) {
    auto full = chromatic_numbers(catalog(Family::PlusMinusKnFull, n).graph);
    CHECK(full.chi == n);
    CHECK(full.chi_star == n);
    auto pm = chromatic_numbers(catalog(Family::PlusMinusKn, n).graph);
    CHECK(pm.chi == n - 1);
    CHECK(pm.chi_star == n);
  }
  for (int n = 1; n <= 5; ++n) {
    auto cn = chromatic_numbers(all_signed(complete_graph(n), P));
    CHECK(cn.chi == n / 2);
    CHECK(cn.chi_star == (n + 1) / 2);
  }
  auto zero = chromatic_numbers(GraphBuilder(1).loop(0, P).build());
  CHECK_FALSE(zero.chi.has_value());
  CHECK_FALSE(zero.chi_star.has_value());
}

TEST_CASE("catalog closed forms match the graphs they describe") {
  std::vector<SignedGraph> bases{path_graph(3), cycle_graph(4), complete_graph(3), complete_graph(4)};
  for (const auto& base : bases) {
    for (Family f : {Family::Full, Family::FullLoops, Family::AllPositive, Family::AllPositiveFull,
                     Family::SignedExpansion, Family::SignedExpansionFull}) {
      auto entry = catalog(f, base);
      REQUIRE(entry.chi);
      REQUIRE(entry.chi_star);
      CHECK(*entry.chi == chromatic_poly_delcon(entry.graph, false));
      CHECK(*entry.chi_star == chromatic_poly_delcon(entry.graph, true));
    }
    auto neg = catalog(Family::AllNegative, base);
    REQUIRE(neg.chi_star);
    CHECK(*neg.chi_star == chromatic_poly_delcon(neg.graph, true));
  }
  for (int n = 0; n <= 4; ++n)
    for (Family f : {Family::PlusMinusKn, Family::PlusMinusKnFull}) {
      auto entry = catalog(f, n);
      CHECK(*entry.chi == chromatic_poly_delcon(entry.graph, false));
      CHECK(*entry.chi_star == chromatic_poly_delcon(entry.graph, true));
    }
  CHECK_THROWS_AS(catalog(Family::AllPositive, sigma4()), InvalidArgument);
  CHECK_THROWS_AS(parse_family("nope"), InvalidArgument);
  CHECK(parse_family("pmknfull") == Family::PlusMinusKnFull);
}

TEST_CASE("unsigned helpers") {
  CHECK(unsigned_chromatic(complete_graph(4)) == IntPolynomial::from_roots({0, 1, 2, 3}));
  CHECK(unsigned_chromatic(cycle_graph(4)) == IntPolynomial({0, -3, 6, -4, 1}));
  CHECK(unsigned_flats(complete_graph(3)).size() == 5);
  CHECK(complement_max_matching(path_graph(4)) == 2);
  CHECK(complement_max_matching(complete_graph(4)) == 0);
}

TEST_CASE("the unweighted flat sum disagrees with the negative graph") {
  auto base = complete_graph(2);
  auto printed = negative_flat_sum(base, false);
  auto weighted = negative_flat_sum(base, true);
  auto actual = chromatic_poly_delcon(base.negated(), true);
  CHECK(weighted == actual);
  CHECK(actual == IntPolynomial::from_roots({0, 1}));
  CHECK_FALSE(printed == 4LL * actual);
}
