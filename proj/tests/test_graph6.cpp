#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "test_support.hpp"
#include "wellcovered/errors.hpp"
#include "wellcovered/graph6.hpp"
#include "wellcovered/harness.hpp"

using namespace wellcovered;
using namespace testing_graphs;

TEST_CASE("graph6 decodes small graphs") {
  CHECK(from_graph6("A_") == complete(2));
  CHECK(from_graph6("Bw") == complete(3));
  CHECK(from_graph6("Bg") == path(3));
  CHECK(from_graph6("@") == Graph(1));
  CHECK(from_graph6("?") == Graph(0));
  CHECK(from_graph6(">>graph6<<Bg\n") == path(3));
}

TEST_CASE("graph6 encodes small graphs") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), InputError);
  CHECK_THROWS_AS(from_graph6("B"), InputError);      // body too short
  CHECK_THROWS_AS(from_graph6("Bgg"), InputError);    // body too long
  CHECK_THROWS_AS(from_graph6("A "), InputError);     // character below 63
  CHECK_THROWS_AS(from_graph6("A\x7f"), InputError);  // character above 126
  CHECK_THROWS_AS(from_graph6("A`"), InputError);     // nonzero padding
  CHECK_THROWS_AS(from_graph6("~?@A"), CapExceeded);  // multi-byte size form
  CHECK_THROWS_AS(to_graph6(Graph(63)), CapExceeded);
}

TEST_CASE("graph6 round-trips random graphs up to order 62") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 63;
    std::vector<Edge> edges;
    const double density = static_cast<double>(rng() % 101) / 100.0;
    std::bernoulli_distribution coin(density);
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const std::string text = to_graph6(g);
    REQUIRE(from_graph6(text) == g);
    REQUIRE(to_graph6(from_graph6(text)) == text);
    REQUIRE(text == oracle::graph6_encode(oracle::matrix_of(g)));
  }
}

TEST_CASE("graph6 agrees with the reference codec on all graphs of order 5") {
  for (const Graph& g : generate_all_graphs(5)) {
    const std::string text = to_graph6(g);
    CHECK(oracle::graph6_decode(text) == oracle::matrix_of(g));
    CHECK(oracle::graph6_encode(oracle::matrix_of(from_graph6(text))) == text);
  }
}
