#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wellcovered {

/// Default and hard ceilings on the order of a graph whose maximal
/// independent sets get enumerated. The enumerator works on 64-bit masks.
inline constexpr std::size_t kDefaultEnumerationCap = 36;
inline constexpr std::size_t kMaxEnumerationCap = 64;
/// Default ceiling for enumerating greedy independent decompositions.
inline constexpr std::size_t kDefaultDecompositionCap = 10;

bool is_independent(const Graph& g, const VertexSet& s);
/// Independent and dominating.
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Adds vertices of `candidates` in ascending order whenever they keep the
/// set independent. `s` must be independent.
VertexSet extend_to_maximal(const Graph& g, VertexSet s, const VertexSet& candidates);
inline VertexSet extend_to_maximal(const Graph& g, VertexSet s) {
  return extend_to_maximal(g, std::move(s), g.vertices());
}

/// Receives each maximal independent set; return false to stop early.
using SetVisitor = std::function<bool(const VertexSet&)>;

/// Visits every maximal independent set exactly once, in lexicographic
/// order of the ascending member sequence. Throws CapExceeded before
/// visiting anything if g.order() > cap (or cap > 64).
void for_each_maximal_independent_set(const Graph& g, const SetVisitor& visit,
                                      std::size_t cap = kDefaultEnumerationCap);

std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                std::size_t cap = kDefaultEnumerationCap);

/// alpha(G).
std::size_t independence_number(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Number of maximal independent sets of each cardinality.
std::map<std::size_t, std::size_t> maximal_set_size_histogram(
    const Graph& g, std::size_t cap = kDefaultEnumerationCap);

struct WellCoveredOptions {
  /// With witnesses the enumeration always runs to completion so both
  /// extremes are certified; without them it stops at the first pair of
  /// maximal sets with different sizes.
  bool want_witnesses = true;
  std::size_t cap = kDefaultEnumerationCap;
};

struct WellCoveredReport {
  bool verdict = true;
  /// Independence number. When `exhaustive` is false these two are only
  /// the largest and smallest sizes seen before the scan stopped.
  std::size_t alpha = 0;
  std::size_t min_maximal = 0;
  /// First alpha-set and first minimum maximal set in enumeration order.
  std::optional<VertexSet> witness_max;
  std::optional<VertexSet> witness_min;
  bool exhaustive = true;
};

WellCoveredReport is_well_covered(const Graph& g, const WellCoveredOptions& options = {});

/// x together with an independent set I such that G - N[I] = {x}.
struct IsolatableWitness {
  Vertex x = 0;
  VertexSet certificate;

  friend bool operator==(const IsolatableWitness&, const IsolatableWitness&) = default;
};

bool is_valid_isolatable_witness(const Graph& g, const IsolatableWitness& w);

/// Certificate for x, if x is isolatable: the first maximal independent set
/// of G - N[x] that also dominates N(x).
std::optional<IsolatableWitness> isolatable_witness(const Graph& g, Vertex x,
                                                    std::size_t cap = kDefaultEnumerationCap);

/// One witness per isolatable vertex, ascending by vertex.
std::vector<IsolatableWitness> isolatable_vertices(const Graph& g,
                                                   std::size_t cap = kDefaultEnumerationCap);

/// Ordered partition A_1, ..., A_t of V(G) where each A_i is maximal
/// independent in G - (A_1 u ... u A_{i-1}).
struct GreedyDecomposition {
  std::vector<VertexSet> blocks;

  std::size_t length() const noexcept { return blocks.size(); }
  friend bool operator==(const GreedyDecomposition&, const GreedyDecomposition&) = default;
};

bool is_greedy_decomposition(const Graph& g, const GreedyDecomposition& d);

/// Builds each block by scanning the remaining vertices in `order`. Throws
/// InputError unless `order` is a permutation of 0..n-1.
GreedyDecomposition greedy_decomposition(const Graph& g, std::span<const Vertex> order);
GreedyDecomposition greedy_decomposition(const Graph& g);

using DecompositionVisitor = std::function<bool(const GreedyDecomposition&)>;

/// Backtracks over the choice of maximal independent set at each stage.
/// Decompositions are ordered lists; stops after `limit` emissions.
void for_each_greedy_decomposition(const Graph& g, const DecompositionVisitor& visit,
                                   std::size_t limit = std::numeric_limits<std::size_t>::max(),
                                   std::size_t cap = kDefaultDecompositionCap);

std::vector<GreedyDecomposition> enumerate_greedy_decompositions(
    const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max(),
    std::size_t cap = kDefaultDecompositionCap);

/// A_2, A_1, A_3, ..., A_t. Decompositions with fewer than two blocks are
/// returned unchanged.
GreedyDecomposition swap_leading_blocks(const GreedyDecomposition& d);

/// True when the decomposition has fewer than two blocks or A_2 is maximal
/// independent in G itself.
bool second_block_is_maximal(const Graph& g, const GreedyDecomposition& d);

/// Union of A_i x B_i for i <= min(s, t), in product coordinates.
VertexSet diagonal_set(const GreedyDecomposition& dg, const GreedyDecomposition& dh,
                       const ProductIndexMap& map);

/// G - N[I - {x}] for a maximum independent set I containing x. The
/// remainder is always a clique containing x.
Subgraph clique_remainder(const Graph& g, const VertexSet& alpha_set, Vertex x,
                          std::size_t cap = kDefaultEnumerationCap);

/// I' = (I - {v}) u {w} where w is the least vertex of the clique remainder
/// F = G - N[I - {v}] other than v and outside J (if every such vertex is
/// in J, the least one other than v). Throws
/// PreconditionError(kRemainderTooSmall) when F = {v}.
VertexSet swap_step(const Graph& g, const VertexSet& alpha_set, Vertex v,
                    const VertexSet& maximal_set, std::size_t cap = kDefaultEnumerationCap);

}  // namespace wellcovered
