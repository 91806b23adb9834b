#include "doctest.h"

#include <bit>
#include <initializer_list>
#include <random>

#include "alphadom/alpha_mds.hpp"
#include "alphadom/oracle.hpp"

#include "helpers.hpp"

using namespace alphadom;

namespace {

const Alpha kHalf(1, 2);

NodeSet mask_of(std::initializer_list<int> nodes) {
  NodeSet s = 0;
  for (int v : nodes) s |= NodeSet{1} << v;
  return s;
}

}  // namespace

TEST_CASE("alpha domination examples") {
  const Graph p3 = Graph::path(3);
  CHECK(is_alpha_dominating(p3, mask_of({1}), kHalf));
  CHECK_FALSE(is_alpha_dominating(p3, 0, kHalf));
  CHECK(is_alpha_dominating(p3, mask_of({0, 1, 2}), kHalf));
  const Graph k5 = Graph::complete(5);
  CHECK(is_alpha_dominating(k5, mask_of({0, 1, 2, 3, 4}), Alpha(1, 1)));
}

TEST_CASE("minimality examples") {
  const Graph c4 = Graph::cycle(4);
  CHECK(is_minimal_alpha_dominating(c4, mask_of({0, 2}), kHalf));
  const Graph p3 = Graph::path(3);
  CHECK_FALSE(is_minimal_alpha_dominating(p3, mask_of({0, 1}), kHalf));
  CHECK(is_minimal_alpha_dominating(p3, mask_of({1}), kHalf));
  const Graph k5 = Graph::complete(5);
  CHECK(is_minimal_alpha_dominating(k5, mask_of({0, 1, 2, 3}), Alpha(1, 1)));
  CHECK(is_minimal_alpha_dominating(k5, mask_of({1, 2, 3, 4}), Alpha(1, 1)));
  CHECK_FALSE(is_minimal_alpha_dominating(k5, mask_of({0, 1, 2}), Alpha(1, 1)));
}

TEST_CASE("minimum cardinality examples") {
  CHECK(minimum_cardinality(Graph::path(3), kHalf) == 1);
  CHECK(minimum_cardinality(Graph::complete(5), Alpha(1, 1)) == 4);
  CHECK(minimum_cardinality(Graph::star(5), kHalf) == 1);
  CHECK(minimum_cardinality(Graph::cycle(4), kHalf) == 2);
}

TEST_CASE("classical domination examples") {
  const Graph p3 = Graph::path(3);
  CHECK(is_minimal_dominating_classical(p3, mask_of({1})));
  CHECK(is_minimal_dominating_classical(p3, mask_of({0, 2})));
  CHECK_FALSE(is_minimal_dominating_classical(p3, mask_of({0, 1, 2})));
  CHECK_FALSE(is_dominating_classical(p3, 0));
  CHECK(is_dominating_classical(p3, mask_of({0, 1})));
}

TEST_CASE("budget guards") {
  const Graph big = Graph::random_connected(30, 0.2, 3);
  CHECK(testutil::code_of([&] { minimum_cardinality(big, kHalf); }) == Errc::BudgetExceeded);
  CHECK(testutil::code_of([&] {
          is_minimal_alpha_dominating(big, (NodeSet{1} << 30) - 1, kHalf);
        }) == Errc::BudgetExceeded);
  // The removal-based form handles the same instance.
  CHECK_NOTHROW(is_minimal_alpha_dominating_removal(big, (NodeSet{1} << 30) - 1, kHalf));
  const Graph huge = Graph::random_connected(61, 0.1, 3);
  CHECK(testutil::code_of([&] { adjacency_masks(huge); }) == Errc::BudgetExceeded);
  CHECK(testutil::code_of([&] { all_minimal_alpha_dominating(big, kHalf); }) ==
        Errc::BudgetExceeded);
}

TEST_CASE("minimal implies dominating; removal check equals full subset check") {
  std::mt19937_64 rng(555);
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testutil::all_connected_graphs(n))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        for (const Alpha& a : {Alpha(1, 3), kHalf, Alpha(1, 1)}) {
          const bool full = is_minimal_alpha_dominating(g, mask, a);
          CHECK(full == is_minimal_alpha_dominating_removal(g, mask, a));
          if (full) CHECK(is_alpha_dominating(g, mask, a));
        }
  for (int i = 0; i < 30; ++i) {
    const Graph g = Graph::random_connected(12, 0.3, rng());
    const NodeSet mask = rng() & ((NodeSet{1} << 12) - 1);
    for (const Alpha& a : {Alpha(2, 3), kHalf}) {
      CHECK(is_minimal_alpha_dominating(g, mask, a) ==
            is_minimal_alpha_dominating_removal(g, mask, a));
    }
  }
}

TEST_CASE("alpha domination is monotone in both the set and alpha") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 60; ++i) {
    const int n = 3 + static_cast<int>(rng_below(rng, 14));
    const Graph g = Graph::random_connected(n, 0.4, rng());
    const NodeSet s = rng() & ((NodeSet{1} << n) - 1);
    if (is_alpha_dominating(g, s, kHalf)) {
      // weaker alpha keeps it dominating
      CHECK(is_alpha_dominating(g, s, Alpha(1, 3)));
      CHECK(is_alpha_dominating(g, s, Alpha(1, 2 * n)));
      // supersets keep it dominating
      const int extra = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
      CHECK(is_alpha_dominating(g, s | (NodeSet{1} << extra), kHalf));
    }
  }
}

TEST_CASE("enumeration of all minimal sets") {
  const Graph p3 = Graph::path(3);
  const auto sets = all_minimal_alpha_dominating(p3, kHalf);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0] == mask_of({1}));
  CHECK(sets[1] == mask_of({0, 2}));
  // every enumerated set passes the point checks
  const Graph g = Graph::random_connected(9, 0.35, 10);
  for (const NodeSet s : all_minimal_alpha_dominating(g, Alpha(2, 3)))
    CHECK(is_minimal_alpha_dominating(g, s, Alpha(2, 3)));
}

TEST_CASE("minimum is a lower bound for any minimal set") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 20; ++i) {
    const int n = 4 + static_cast<int>(rng_below(rng, 9));
    const Graph g = Graph::random_connected(n, 0.4, rng());
    for (const Alpha& a : {Alpha(1, 3), kHalf, Alpha(4, 5)}) {
      const int best = minimum_cardinality(g, a);
      for (const NodeSet s : all_minimal_alpha_dominating(g, a))
        CHECK(std::popcount(s) >= best);
    }
  }
}

TEST_CASE("set mask round trip from configurations") {
  Configuration c(5);
  c.set_state(1, NodeState::In);
  c.set_state(4, NodeState::In);
  CHECK(in_set_mask(c) == mask_of({1, 4}));
  CHECK(in_set_mask(Configuration::all_out(5)) == 0);
}
