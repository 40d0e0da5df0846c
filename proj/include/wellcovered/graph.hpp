#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wellcovered/vertex_set.hpp"

namespace wellcovered {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
/// every constructor validates symmetry, irreflexivity and range.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n.
  explicit Graph(std::size_t n);
  /// Takes ownership of per-vertex open neighborhoods. Throws InputError if
  /// they are asymmetric, contain loops, or belong to another host.
  explicit Graph(std::vector<VertexSet> adjacency);

  /// Throws InputError on loops, duplicate edges, or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
  std::size_t num_edges_ = 0;
};

/// Row-major numbering of the vertex set V(G) x V(H): (g, h) <-> g*nH + h.
class ProductIndexMap {
 public:
  ProductIndexMap() = default;
  ProductIndexMap(std::size_t g_order, std::size_t h_order)
      : g_order_(g_order), h_order_(h_order) {}

  std::size_t g_order() const noexcept { return g_order_; }
  std::size_t h_order() const noexcept { return h_order_; }
  std::size_t product_order() const noexcept { return g_order_ * h_order_; }

  Vertex encode(Vertex g, Vertex h) const;
  std::pair<Vertex, Vertex> decode(Vertex p) const;

  /// Image of gs x hs in product coordinates.
  VertexSet product_of(const VertexSet& gs, const VertexSet& hs) const;

  friend bool operator==(const ProductIndexMap&, const ProductIndexMap&) = default;

 private:
  std::size_t g_order_ = 0;
  std::size_t h_order_ = 0;
};

/// Correspondence between the vertices of an induced subgraph and the
/// original graph. kept[i] is the original vertex that became vertex i.
class SubgraphMap {
 public:
  SubgraphMap() = default;
  SubgraphMap(std::size_t host_order, std::vector<Vertex> kept);

  std::size_t host_order() const noexcept { return forward_.size(); }
  const std::vector<Vertex>& kept() const noexcept { return kept_; }
  Vertex original(Vertex sub) const;
  std::optional<Vertex> forward(Vertex original) const;

  /// Maps a set of the subgraph back to original vertices.
  VertexSet lift(const VertexSet& sub) const;
  /// Maps the kept part of an original set into the subgraph.
  VertexSet restrict(const VertexSet& original) const;

 private:
  std::vector<Vertex> kept_;
  std::vector<std::optional<Vertex>> forward_;
};

struct Subgraph {
  Graph graph;
  SubgraphMap map;
};

struct Product {
  Graph graph;
  ProductIndexMap map;
};

inline constexpr std::size_t kDefaultProductCap = 4096;

/// N[S]: S together with every neighbor of a member of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// G - N[S]. S must be independent in G.
Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s);

Product cartesian_product(const Graph& g, const Graph& h,
                          std::size_t product_cap = kDefaultProductCap);

bool is_clique(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);

}  // namespace wellcovered
