#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "wellcovered/errors.hpp"
#include "wellcovered/harness.hpp"
#include "wellcovered/independence.hpp"

using namespace wellcovered;
using namespace testing_graphs;

namespace {

using Sets = std::vector<std::vector<int>>;

Sets enumerated(const Graph& g) {
  Sets out;
  for (const VertexSet& s : maximal_independent_sets(g)) out.push_back(as_ints(s));
  return out;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Graph> small_corpus(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (Graph& g : generate_all_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

// All graphs up to order 6 plus random graphs of orders 7 and 8.
std::vector<Graph> property_corpus() {
  std::vector<Graph> out = small_corpus(6);
  std::mt19937 rng(99);
  for (int i = 0; i < 150; ++i) out.push_back(random_graph(rng, 7 + (i % 2), 0.2 + 0.004 * i));
  return out;
}

}  // namespace

TEST_CASE("is_independent and is_maximal_independent") {
  const Graph c4 = cycle(4);
  CHECK(is_independent(c4, set_of(c4, {0, 2})));
  const Graph k3 = complete(3);
  CHECK_FALSE(is_independent(k3, set_of(k3, {0, 1})));
  CHECK(is_independent(k3, k3.empty_set()));

  const Graph p3 = path(3);
  CHECK(is_maximal_independent(p3, set_of(p3, {1})));
  CHECK_FALSE(is_maximal_independent(p3, set_of(p3, {0})));
  const Graph c5 = cycle(5);
  CHECK(is_maximal_independent(c5, set_of(c5, {0, 2})));
}

TEST_CASE("maximal independent set enumeration examples") {
  CHECK(enumerated(path(3)) == Sets{{0, 2}, {1}});
  CHECK(enumerated(cycle(4)) == Sets{{0, 2}, {1, 3}});
  CHECK(enumerated(complete(3)) == Sets{{0}, {1}, {2}});
  CHECK(enumerated(Graph(0)) == Sets{{}});
  CHECK(enumerated(Graph(3)) == Sets{{0, 1, 2}});
}

TEST_CASE("enumeration honours the cap before emitting anything") {
  int visited = 0;
  CHECK_THROWS_AS(for_each_maximal_independent_set(
                      path(10), [&](const VertexSet&) { return ++visited > 0; }, 9),
                  CapExceeded);
  CHECK(visited == 0);
  CHECK_THROWS_AS(maximal_independent_sets(Graph(37)), CapExceeded);
  CHECK_THROWS_AS(maximal_independent_sets(path(3), 65), CapExceeded);
  CHECK(maximal_independent_sets(Graph(64), 64).size() == 1);
}

TEST_CASE("enumeration stops when the visitor asks") {
  int visited = 0;
  for_each_maximal_independent_set(cycle(8), [&](const VertexSet&) { return ++visited < 3; });
  CHECK(visited == 3);
}

TEST_CASE("enumeration matches the subset oracle on every graph up to order 7") {
  std::vector<Graph> corpus = small_corpus(6);
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_graph(rng, 7, 0.1 + 0.004 * i));
  for (const Graph& g : corpus) {
    const Sets sets = enumerated(g);
    REQUIRE(sets == oracle::all_maximal_independent_sets(g));  // same sets, same order
    for (const VertexSet& s : maximal_independent_sets(g)) CHECK(is_maximal_independent(g, s));
  }
}

TEST_CASE("independence_number") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(independence_number(complete(n)) == 1);
  CHECK(independence_number(path(3)) == 2);
  CHECK(independence_number(cartesian_product(path(3), path(3)).graph) == 5);
  CHECK(independence_number(Graph(0)) == 0);
}

TEST_CASE("is_well_covered examples") {
  const WellCoveredReport c4 = is_well_covered(cycle(4));
  CHECK(c4.verdict);
  CHECK(c4.alpha == 2);

  const WellCoveredReport p3 = is_well_covered(path(3));
  CHECK_FALSE(p3.verdict);
  CHECK(p3.alpha == 2);
  CHECK(p3.min_maximal == 1);
  CHECK(as_ints(*p3.witness_max) == std::vector<int>{0, 2});
  CHECK(as_ints(*p3.witness_min) == std::vector<int>{1});

  const WellCoveredReport c6 = is_well_covered(cycle(6));
  CHECK_FALSE(c6.verdict);
  CHECK(c6.alpha == 3);
  CHECK(c6.min_maximal == 2);
  CHECK(as_ints(*c6.witness_max) == std::vector<int>{0, 2, 4});
  CHECK(as_ints(*c6.witness_min) == std::vector<int>{0, 3});
}

TEST_CASE("fast well-covered mode agrees on the verdict") {
  for (const Graph& g : small_corpus(6)) {
    const WellCoveredReport full = is_well_covered(g);
    const WellCoveredReport fast = is_well_covered(g, {.want_witnesses = false});
    REQUIRE(full.verdict == fast.verdict);
    CHECK(full.exhaustive);
    CHECK_FALSE(fast.witness_max.has_value());
    if (fast.verdict) CHECK(fast.alpha == full.alpha);
  }
}

TEST_CASE("well-covered verdict matches the size spectrum of the oracle") {
  for (const Graph& g : small_corpus(6)) {
    const WellCoveredReport r = is_well_covered(g);
    const Sets sets = oracle::all_maximal_independent_sets(g);
    std::size_t lo = sets.front().size();
    std::size_t hi = lo;
    for (const auto& s : sets) {
      lo = std::min(lo, s.size());
      hi = std::max(hi, s.size());
    }
    REQUIRE(r.verdict == (lo == hi));
    CHECK(r.alpha == hi);
    CHECK(r.min_maximal == lo);
    CHECK(r.witness_max->size() == hi);
    CHECK(r.witness_min->size() == lo);
    CHECK(is_maximal_independent(g, *r.witness_max));
    CHECK(is_maximal_independent(g, *r.witness_min));
  }
}

TEST_CASE("isolatable_vertices examples") {
  const Graph p3 = path(3);
  const auto iso = isolatable_vertices(p3);
  REQUIRE(iso.size() == 2);
  CHECK(iso[0] == IsolatableWitness{0, set_of(p3, {2})});
  CHECK(iso[1] == IsolatableWitness{2, set_of(p3, {0})});
  CHECK(isolatable_vertices(cycle(5)).empty());
  const auto k1 = isolatable_vertices(Graph(1));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].x == 0);
  CHECK(k1[0].certificate.empty());
  const auto c4 = isolatable_vertices(cycle(4));
  CHECK(c4.size() == 4);
}

TEST_CASE("isolatable witnesses are valid and match the independent-set oracle") {
  for (const Graph& g : small_corpus(6)) {
    std::vector<int> xs;
    for (const IsolatableWitness& w : isolatable_vertices(g)) {
      REQUIRE(is_valid_isolatable_witness(g, w));
      CHECK(is_independent(g, w.certificate));
      CHECK_FALSE(w.certificate.intersects(closed_neighborhood(g, w.x)));
      const Subgraph rest = delete_closed_neighborhood(g, w.certificate);
      CHECK(rest.map.kept() == std::vector<Vertex>{w.x});
      xs.push_back(static_cast<int>(w.x));
    }
    REQUIRE(xs == oracle::isolatable_vertices(g));
  }
}

TEST_CASE("greedy_decomposition examples") {
  const Graph p3 = path(3);
  const GreedyDecomposition natural = greedy_decomposition(p3);
  REQUIRE(natural.length() == 2);
  CHECK(as_ints(natural.blocks[0]) == std::vector<int>{0, 2});
  CHECK(as_ints(natural.blocks[1]) == std::vector<int>{1});

  const std::vector<Vertex> from_center{1, 0, 2};
  const GreedyDecomposition centered = greedy_decomposition(p3, from_center);
  REQUIRE(centered.length() == 2);
  CHECK(as_ints(centered.blocks[0]) == std::vector<int>{1});
  CHECK(as_ints(centered.blocks[1]) == std::vector<int>{0, 2});

  const GreedyDecomposition k3 = greedy_decomposition(complete(3));
  CHECK(k3.length() == 3);

  const std::vector<Vertex> repeated{0, 0, 2};
  CHECK_THROWS_AS(greedy_decomposition(p3, repeated), InputError);
  const std::vector<Vertex> short_order{0, 1};
  CHECK_THROWS_AS(greedy_decomposition(p3, short_order), InputError);
}

TEST_CASE("greedy decompositions from random orders satisfy the invariants") {
  std::mt19937 rng(3);
  for (const Graph& g : property_corpus()) {
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    REQUIRE(is_greedy_decomposition(g, greedy_decomposition(g, order)));
  }
}

TEST_CASE("enumerate_greedy_decompositions examples") {
  const Graph p3 = path(3);
  const auto p3_all = enumerate_greedy_decompositions(p3);
  REQUIRE(p3_all.size() == 2);
  CHECK(p3_all[0] == GreedyDecomposition{{set_of(p3, {0, 2}), set_of(p3, {1})}});
  CHECK(p3_all[1] == GreedyDecomposition{{set_of(p3, {1}), set_of(p3, {0, 2})}});

  const Graph k2 = complete(2);
  const auto k2_all = enumerate_greedy_decompositions(k2);
  REQUIRE(k2_all.size() == 2);
  CHECK(k2_all[0] == GreedyDecomposition{{set_of(k2, {0}), set_of(k2, {1})}});
  CHECK(k2_all[1] == GreedyDecomposition{{set_of(k2, {1}), set_of(k2, {0})}});

  CHECK(enumerate_greedy_decompositions(Graph(1)).size() == 1);
  CHECK(enumerate_greedy_decompositions(complete(4)).size() == 24);
  CHECK(enumerate_greedy_decompositions(complete(4), 5).size() == 5);
  CHECK(enumerate_greedy_decompositions(complete(4), 0).empty());
  CHECK_THROWS_AS(enumerate_greedy_decompositions(path(11)), CapExceeded);
}

TEST_CASE("enumerated greedy decompositions are valid and distinct") {
  for (const Graph& g : small_corpus(5)) {
    const auto all = enumerate_greedy_decompositions(g);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE(is_greedy_decomposition(g, all[i]));
      if (i > 0) CHECK_FALSE(all[i] == all[i - 1]);
    }
    // every random-order greedy decomposition appears in the enumeration
    const GreedyDecomposition natural = greedy_decomposition(g);
    CHECK(std::find(all.begin(), all.end(), natural) != all.end());
  }
}

TEST_CASE("diagonal_set examples") {
  const Graph p3 = path(3);
  const GreedyDecomposition d = greedy_decomposition(p3);
  const Product grid = cartesian_product(p3, p3);
  const VertexSet diag = diagonal_set(d, d, grid.map);
  CHECK(diag.size() == 5);
  const VertexSet expected = grid.map.product_of(set_of(p3, {0, 2}), set_of(p3, {0, 2})) |
                             grid.map.product_of(set_of(p3, {1}), set_of(p3, {1}));
  CHECK(diag == expected);
  CHECK(is_maximal_independent(grid.graph, diag));

  const Graph k2 = complete(2);
  const GreedyDecomposition dk = greedy_decomposition(k2);
  const Product c4 = cartesian_product(k2, k2);
  const VertexSet dk_diag = diagonal_set(dk, dk, c4.map);
  CHECK(as_ints(dk_diag) == std::vector<int>{0, 3});
  CHECK(is_maximal_independent(c4.graph, dk_diag));

  const Graph c5 = cycle(5);
  const GreedyDecomposition dc = greedy_decomposition(c5);
  const Product k1c5 = cartesian_product(Graph(1), c5);
  const VertexSet k1_diag = diagonal_set(greedy_decomposition(Graph(1)), dc, k1c5.map);
  CHECK(k1_diag.size() == dc.blocks[0].size());

  CHECK_THROWS_AS(diagonal_set(dk, dc, c4.map), PreconditionError);
}

TEST_CASE("diagonal sets are maximal independent with the product size formula") {
  const auto corpus = small_corpus(5);
  for (const Graph& g : corpus) {
    for (const Graph& h : corpus) {
      if (g.order() * h.order() > 30 || g.order() > h.order()) continue;
      const Product p = cartesian_product(g, h);
      const auto dgs = enumerate_greedy_decompositions(g, 6);
      const auto dhs = enumerate_greedy_decompositions(h, 6);
      for (const auto& dg : dgs) {
        for (const auto& dh : dhs) {
          const VertexSet diag = diagonal_set(dg, dh, p.map);
          REQUIRE(is_maximal_independent(p.graph, diag));
          std::size_t expected = 0;
          for (std::size_t i = 0; i < std::min(dg.length(), dh.length()); ++i) {
            expected += dg.blocks[i].size() * dh.blocks[i].size();
          }
          CHECK(diag.size() == expected);
        }
      }
    }
  }
}

TEST_CASE("greedy block two and swapped leading blocks without isolatable vertices") {
  std::size_t graphs_checked = 0;
  for (const Graph& g : small_corpus(6)) {
    if (!isolatable_vertices(g).empty()) continue;
    ++graphs_checked;
    for_each_greedy_decomposition(g, [&](const GreedyDecomposition& d) {
      REQUIRE(second_block_is_maximal(g, d));
      REQUIRE(is_greedy_decomposition(g, swap_leading_blocks(d)));
      return true;
    });
  }
  CHECK(graphs_checked > 0);
  // K2 plus an isolated vertex: vertex 2 is isolatable and block two {1}
  // leaves it undominated.
  const Graph p2_plus_k1 = Graph::from_edges(3, {{0, 1}});
  const GreedyDecomposition d = greedy_decomposition(p2_plus_k1);
  CHECK_FALSE(second_block_is_maximal(p2_plus_k1, d));
}

TEST_CASE("clique_remainder examples") {
  const Graph c5 = cycle(5);
  const Subgraph r5 = clique_remainder(c5, set_of(c5, {0, 2}), 0);
  CHECK(r5.map.kept() == std::vector<Vertex>{0, 4});
  CHECK(r5.graph == complete(2));

  const Graph c6 = cycle(6);
  const Subgraph r6 = clique_remainder(c6, set_of(c6, {0, 2, 4}), 0);
  CHECK(r6.map.kept() == std::vector<Vertex>{0});

  const Graph k2 = complete(2);
  CHECK(clique_remainder(k2, set_of(k2, {0}), 0).graph == k2);
}

TEST_CASE("clique_remainder reports each precondition distinctly") {
  const Graph c6 = cycle(6);
  auto which = [](auto&& fn) {
    try {
      fn();
    } catch (const PreconditionError& e) {
      return e.which();
    }
    FAIL("expected a precondition error");
    return Precondition::kHostMismatch;
  };
  CHECK(which([&] { clique_remainder(c6, set_of(c6, {0, 3}), 0); }) == Precondition::kNotMaximum);
  CHECK(which([&] { clique_remainder(c6, set_of(c6, {0, 2}), 0); }) == Precondition::kNotMaximal);
  CHECK(which([&] { clique_remainder(c6, set_of(c6, {0, 1}), 0); }) ==
        Precondition::kNotIndependent);
  CHECK(which([&] { clique_remainder(c6, set_of(c6, {0, 2, 4}), 1); }) ==
        Precondition::kNotMember);
}

TEST_CASE("clique remainders are cliques of order two without isolatable vertices") {
  std::size_t checked = 0;
  for (const Graph& g : property_corpus()) {
    const bool isolatable_free = isolatable_vertices(g).empty();
    const std::size_t alpha = independence_number(g);
    for (const VertexSet& s : maximal_independent_sets(g)) {
      if (s.size() != alpha) continue;
      s.for_each([&](Vertex x) {
        const Subgraph f = clique_remainder(g, s, x);
        REQUIRE(is_clique(f.graph, f.graph.vertices()));
        REQUIRE(f.map.forward(x).has_value());
        if (isolatable_free) {
          REQUIRE(f.graph.order() >= 2);
          ++checked;
        }
      });
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("swap_step examples") {
  const Graph c5 = cycle(5);
  const VertexSet i5 = swap_step(c5, set_of(c5, {0, 2}), 0, set_of(c5, {0, 3}));
  CHECK(as_ints(i5) == std::vector<int>{2, 4});
  CHECK_FALSE(i5.intersects(set_of(c5, {0, 3})));

  const Graph k2 = complete(2);
  CHECK(as_ints(swap_step(k2, set_of(k2, {0}), 0, set_of(k2, {0}))) == std::vector<int>{1});

  const Graph c6 = cycle(6);
  try {
    swap_step(c6, set_of(c6, {0, 2, 4}), 0, set_of(c6, {0, 3}));
    FAIL("expected remainder error");
  } catch (const PreconditionError& e) {
    CHECK(e.which() == Precondition::kRemainderTooSmall);
  }
  CHECK_THROWS_AS(swap_step(c5, set_of(c5, {0, 2}), 0, set_of(c5, {0})), PreconditionError);
}

TEST_CASE("swap_step keeps size and shrinks the intersection") {
  for (const Graph& g : property_corpus()) {
    if (!isolatable_vertices(g).empty()) continue;
    const auto sets = maximal_independent_sets(g);
    const std::size_t alpha = independence_number(g);
    for (const VertexSet& i : sets) {
      if (i.size() != alpha) continue;
      for (const VertexSet& j : sets) {
        i.for_each([&](Vertex v) {
          const VertexSet swapped = swap_step(g, i, v, j);
          REQUIRE(is_independent(g, swapped));
          REQUIRE(swapped.size() == i.size());
          if (j.contains(v)) REQUIRE((swapped & j).size() + 1 == (i & j).size());
        });
      }
    }
  }
}
