#include "wellcovered/graph.hpp"

#include <string>

#include "wellcovered/errors.hpp"

namespace wellcovered {

namespace {

void require_host(const Graph& g, const VertexSet& s) {
  if (s.host_size() != g.order()) {
    throw PreconditionError(Precondition::kHostMismatch,
                            "set over " + std::to_string(s.host_size()) +
                                " vertices used with a graph of order " +
                                std::to_string(g.order()));
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj_[v].host_size() != n) {
      throw InputError("neighborhood of vertex " + std::to_string(v) + " has the wrong host");
    }
    if (adj_[v].contains(static_cast<Vertex>(v))) {
      throw InputError("loop at vertex " + std::to_string(v));
    }
    adj_[v].for_each([&](Vertex u) {
      if (!adj_[u].contains(static_cast<Vertex>(v))) {
        throw InputError("asymmetric adjacency between " + std::to_string(v) + " and " +
                         std::to_string(u));
      }
    });
    degree_sum += adj_[v].size();
  }
  num_edges_ = degree_sum / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for order " + std::to_string(n));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (adj[u].contains(v)) {
      throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return Graph(std::move(adj));
}

const VertexSet& Graph::neighbors(Vertex v) const {
  require_vertex(*this, v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require_vertex(*this, u);
  return neighbors(v).contains(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = adj_[u].next(u); v < order(); v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Vertex ProductIndexMap::encode(Vertex g, Vertex h) const {
  if (g >= g_order_ || h >= h_order_) {
    throw InputError("product coordinate (" + std::to_string(g) + ", " + std::to_string(h) +
                     ") out of range");
  }
  return static_cast<Vertex>(static_cast<std::size_t>(g) * h_order_ + h);
}

std::pair<Vertex, Vertex> ProductIndexMap::decode(Vertex p) const {
  if (p >= product_order()) {
    throw InputError("product vertex " + std::to_string(p) + " out of range");
  }
  return {static_cast<Vertex>(p / h_order_), static_cast<Vertex>(p % h_order_)};
}

VertexSet ProductIndexMap::product_of(const VertexSet& gs, const VertexSet& hs) const {
  if (gs.host_size() != g_order_ || hs.host_size() != h_order_) {
    throw PreconditionError(Precondition::kHostMismatch, "factor sets do not match the product");
  }
  VertexSet out(product_order());
  gs.for_each([&](Vertex g) { hs.for_each([&](Vertex h) { out.insert(encode(g, h)); }); });
  return out;
}

SubgraphMap::SubgraphMap(std::size_t host_order, std::vector<Vertex> kept)
    : kept_(std::move(kept)), forward_(host_order) {
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    if (kept_[i] >= host_order || forward_[kept_[i]].has_value()) {
      throw InputError("subgraph map keeps an invalid or repeated vertex");
    }
    forward_[kept_[i]] = static_cast<Vertex>(i);
  }
}

Vertex SubgraphMap::original(Vertex sub) const {
  if (sub >= kept_.size()) {
    throw InputError("subgraph vertex " + std::to_string(sub) + " out of range");
  }
  return kept_[sub];
}

std::optional<Vertex> SubgraphMap::forward(Vertex original) const {
  if (original >= forward_.size()) return std::nullopt;
  return forward_[original];
}

VertexSet SubgraphMap::lift(const VertexSet& sub) const {
  if (sub.host_size() != kept_.size()) {
    throw PreconditionError(Precondition::kHostMismatch, "set does not belong to the subgraph");
  }
  VertexSet out(host_order());
  sub.for_each([&](Vertex v) { out.insert(kept_[v]); });
  return out;
}

VertexSet SubgraphMap::restrict(const VertexSet& original) const {
  if (original.host_size() != host_order()) {
    throw PreconditionError(Precondition::kHostMismatch, "set does not belong to the host");
  }
  VertexSet out(kept_.size());
  original.for_each([&](Vertex v) {
    if (forward_[v]) out.insert(*forward_[v]);
  });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  VertexSet out = s;
  s.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  SubgraphMap map(g.order(), s.members());
  const std::size_t k = map.kept().size();
  std::vector<VertexSet> adj;
  adj.reserve(k);
  for (Vertex original : map.kept()) adj.push_back(map.restrict(g.neighbors(original)));
  return {Graph(std::move(adj)), std::move(map)};
}

Subgraph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  s.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(s)) {
      throw PreconditionError(Precondition::kNotIndependent,
                              "cannot delete the closed neighborhood of a dependent set");
    }
  });
  return induced_subgraph(g, closed_neighborhood(g, s).complement());
}

Product cartesian_product(const Graph& g, const Graph& h, std::size_t product_cap) {
  const std::size_t n = g.order() * h.order();
  if (n > product_cap) {
    throw CapExceeded("product of orders " + std::to_string(g.order()) + " and " +
                      std::to_string(h.order()) + " exceeds the product cap " +
                      std::to_string(product_cap));
  }
  ProductIndexMap map(g.order(), h.order());
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = 0; y < h.order(); ++y) {
      VertexSet& row = adj[map.encode(x, y)];
      h.neighbors(y).for_each([&](Vertex y2) { row.insert(map.encode(x, y2)); });
      g.neighbors(x).for_each([&](Vertex x2) { row.insert(map.encode(x2, y)); });
    }
  }
  return {Graph(std::move(adj)), map};
}

bool is_clique(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  bool clique = true;
  s.for_each([&](Vertex v) {
    if (!clique) return;
    VertexSet missing = s - g.neighbors(v);
    missing.erase(v);
    clique = missing.empty();
  });
  return clique;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  VertexSet frontier(g.order());
  frontier.insert(0);
  while (!frontier.empty()) {
    seen |= frontier;
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    frontier = next - seen;
  }
  return seen.size() == g.order();
}

}  // namespace wellcovered
