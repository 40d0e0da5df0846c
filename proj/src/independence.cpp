#include "wellcovered/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "wellcovered/errors.hpp"

namespace wellcovered {

namespace {

using Mask = std::uint64_t;

void require_host(const Graph& g, const VertexSet& s) {
  if (s.host_size() != g.order()) {
    throw PreconditionError(Precondition::kHostMismatch,
                            "set over " + std::to_string(s.host_size()) +
                                " vertices used with a graph of order " +
                                std::to_string(g.order()));
  }
}

Mask bit(std::size_t v) { return Mask{1} << v; }

// Closed neighborhoods as 64-bit masks; the enumerator's working form.
struct MaskGraph {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> closed;
};

MaskGraph to_masks(const Graph& g, std::size_t cap) {
  if (cap > kMaxEnumerationCap) {
    throw CapExceeded("enumeration cap " + std::to_string(cap) + " exceeds the hard limit of " +
                      std::to_string(kMaxEnumerationCap));
  }
  if (g.order() > cap) {
    throw CapExceeded("graph of order " + std::to_string(g.order()) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
  MaskGraph mg;
  mg.n = g.order();
  mg.all = mg.n == 64 ? ~Mask{0} : bit(mg.n) - 1;
  mg.closed.resize(mg.n);
  for (Vertex v = 0; v < mg.n; ++v) {
    Mask m = bit(v);
    g.neighbors(v).for_each([&](Vertex u) { m |= bit(u); });
    mg.closed[v] = m;
  }
  return mg;
}

VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

// Depth-first search adding vertices in ascending order, so sets come out in
// lexicographic order. A branch dies as soon as some undominated vertex has
// no remaining candidate in its closed neighborhood.
template <typename Fn>
class MaskEnumerator {
 public:
  MaskEnumerator(const MaskGraph& mg, Fn& fn) : mg_(mg), fn_(fn) {}

  void run() { descend(0, 0, 0); }

 private:
  bool descend(Mask set, Mask dominated, std::size_t next) {
    const Mask undominated = mg_.all & ~dominated;
    if (undominated == 0) return fn_(set);
    const Mask candidates = next >= 64 ? 0 : undominated & (~Mask{0} << next);
    for (Mask u = undominated; u != 0; u &= u - 1) {
      if ((mg_.closed[std::countr_zero(u)] & candidates) == 0) return true;
    }
    for (Mask c = candidates; c != 0; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      if (!descend(set | bit(v), dominated | mg_.closed[v], v + 1)) return false;
    }
    return true;
  }

  const MaskGraph& mg_;
  Fn& fn_;
};

template <typename Fn>
void enumerate_masks(const MaskGraph& mg, Fn fn) {
  MaskEnumerator<Fn>(mg, fn).run();
}

void check_alpha_set(const Graph& g, const VertexSet& s, std::size_t cap) {
  require_host(g, s);
  if (!is_independent(g, s)) {
    throw PreconditionError(Precondition::kNotIndependent, "expected a maximum independent set");
  }
  if (!is_maximal_independent(g, s)) {
    throw PreconditionError(Precondition::kNotMaximal, "expected a maximum independent set");
  }
  const std::size_t alpha = independence_number(g, cap);
  if (s.size() != alpha) {
    throw PreconditionError(Precondition::kNotMaximum,
                            "set has " + std::to_string(s.size()) + " vertices but alpha is " +
                                std::to_string(alpha));
  }
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  require_host(g, s);
  bool independent = true;
  s.for_each([&](Vertex v) { independent = independent && !g.neighbors(v).intersects(s); });
  return independent;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && closed_neighborhood(g, s).size() == g.order();
}

VertexSet extend_to_maximal(const Graph& g, VertexSet s, const VertexSet& candidates) {
  require_host(g, s);
  require_host(g, candidates);
  VertexSet blocked = closed_neighborhood(g, s);
  candidates.for_each([&](Vertex v) {
    if (!blocked.contains(v)) {
      s.insert(v);
      blocked |= g.neighbors(v);
      blocked.insert(v);
    }
  });
  return s;
}

void for_each_maximal_independent_set(const Graph& g, const SetVisitor& visit, std::size_t cap) {
  const MaskGraph mg = to_masks(g, cap);
  enumerate_masks(mg, [&](Mask m) { return visit(to_set(m, mg.n)); });
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> out;
  for_each_maximal_independent_set(
      g,
      [&](const VertexSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

std::size_t independence_number(const Graph& g, std::size_t cap) {
  const MaskGraph mg = to_masks(g, cap);
  int alpha = 0;
  enumerate_masks(mg, [&](Mask m) {
    alpha = std::max(alpha, std::popcount(m));
    return true;
  });
  return static_cast<std::size_t>(alpha);
}

std::map<std::size_t, std::size_t> maximal_set_size_histogram(const Graph& g, std::size_t cap) {
  const MaskGraph mg = to_masks(g, cap);
  std::map<std::size_t, std::size_t> histogram;
  enumerate_masks(mg, [&](Mask m) {
    ++histogram[static_cast<std::size_t>(std::popcount(m))];
    return true;
  });
  return histogram;
}

WellCoveredReport is_well_covered(const Graph& g, const WellCoveredOptions& options) {
  const MaskGraph mg = to_masks(g, options.cap);
  bool seen = false;
  int largest = 0;
  int smallest = 0;
  Mask largest_set = 0;
  Mask smallest_set = 0;
  bool stopped = false;
  enumerate_masks(mg, [&](Mask m) {
    const int k = std::popcount(m);
    if (!seen || k > largest) {
      largest = k;
      largest_set = m;
    }
    if (!seen || k < smallest) {
      smallest = k;
      smallest_set = m;
    }
    seen = true;
    if (!options.want_witnesses && largest != smallest) {
      stopped = true;
      return false;
    }
    return true;
  });

  WellCoveredReport report;
  report.verdict = largest == smallest;
  report.alpha = static_cast<std::size_t>(largest);
  report.min_maximal = static_cast<std::size_t>(smallest);
  report.exhaustive = !stopped;
  if (options.want_witnesses) {
    report.witness_max = to_set(largest_set, mg.n);
    report.witness_min = to_set(smallest_set, mg.n);
  }
  return report;
}

bool is_valid_isolatable_witness(const Graph& g, const IsolatableWitness& w) {
  if (w.x >= g.order() || w.certificate.host_size() != g.order()) return false;
  if (!is_independent(g, w.certificate)) return false;
  VertexSet rest = closed_neighborhood(g, w.certificate).complement();
  return rest.size() == 1 && rest.contains(w.x);
}

std::optional<IsolatableWitness> isolatable_witness(const Graph& g, Vertex x, std::size_t cap) {
  const VertexSet closed_x = closed_neighborhood(g, x);
  const Subgraph residual = induced_subgraph(g, closed_x.complement());
  const VertexSet& open_x = g.neighbors(x);
  std::optional<IsolatableWitness> found;
  for_each_maximal_independent_set(
      residual.graph,
      [&](const VertexSet& m) {
        VertexSet lifted = residual.map.lift(m);
        if (open_x.is_subset_of(closed_neighborhood(g, lifted))) {
          found = IsolatableWitness{x, std::move(lifted)};
          return false;
        }
        return true;
      },
      cap);
  return found;
}

std::vector<IsolatableWitness> isolatable_vertices(const Graph& g, std::size_t cap) {
  std::vector<IsolatableWitness> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (auto w = isolatable_witness(g, x, cap)) out.push_back(std::move(*w));
  }
  return out;
}

bool is_greedy_decomposition(const Graph& g, const GreedyDecomposition& d) {
  VertexSet remaining = g.vertices();
  for (const VertexSet& block : d.blocks) {
    if (block.host_size() != g.order() || block.empty()) return false;
    if (!block.is_subset_of(remaining)) return false;
    if (!is_independent(g, block)) return false;
    if (!(remaining - closed_neighborhood(g, block)).empty()) return false;
    remaining -= block;
  }
  return remaining.empty();
}

GreedyDecomposition greedy_decomposition(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw InputError("order is not a permutation of the vertices");
  VertexSet seen(n);
  for (Vertex v : order) {
    if (v >= n || seen.contains(v)) throw InputError("order is not a permutation of the vertices");
    seen.insert(v);
  }

  GreedyDecomposition d;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    VertexSet block(n);
    for (Vertex v : order) {
      if (remaining.contains(v) && !g.neighbors(v).intersects(block)) block.insert(v);
    }
    remaining -= block;
    d.blocks.push_back(std::move(block));
  }
  return d;
}

GreedyDecomposition greedy_decomposition(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  return greedy_decomposition(g, order);
}

namespace {

class DecompositionSearch {
 public:
  DecompositionSearch(const Graph& g, const DecompositionVisitor& visit, std::size_t limit)
      : g_(g), visit_(visit), limit_(limit) {}

  void run() {
    if (limit_ > 0) descend(g_.vertices());
  }

 private:
  bool descend(const VertexSet& remaining) {
    if (remaining.empty()) {
      ++emitted_;
      return visit_(current_) && emitted_ < limit_;
    }
    const Subgraph residual = induced_subgraph(g_, remaining);
    bool keep_going = true;
    for_each_maximal_independent_set(
        residual.graph,
        [&](const VertexSet& m) {
          VertexSet block = residual.map.lift(m);
          const VertexSet next = remaining - block;
          current_.blocks.push_back(std::move(block));
          keep_going = descend(next);
          current_.blocks.pop_back();
          return keep_going;
        },
        kMaxEnumerationCap);
    return keep_going;
  }

  const Graph& g_;
  const DecompositionVisitor& visit_;
  std::size_t limit_;
  std::size_t emitted_ = 0;
  GreedyDecomposition current_;
};

}  // namespace

void for_each_greedy_decomposition(const Graph& g, const DecompositionVisitor& visit,
                                   std::size_t limit, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("graph of order " + std::to_string(g.order()) +
                      " exceeds the decomposition cap " + std::to_string(cap));
  }
  DecompositionSearch(g, visit, limit).run();
}

std::vector<GreedyDecomposition> enumerate_greedy_decompositions(const Graph& g,
                                                                 std::size_t limit,
                                                                 std::size_t cap) {
  std::vector<GreedyDecomposition> out;
  for_each_greedy_decomposition(
      g,
      [&](const GreedyDecomposition& d) {
        out.push_back(d);
        return true;
      },
      limit, cap);
  return out;
}

GreedyDecomposition swap_leading_blocks(const GreedyDecomposition& d) {
  GreedyDecomposition out = d;
  if (out.blocks.size() >= 2) std::swap(out.blocks[0], out.blocks[1]);
  return out;
}

bool second_block_is_maximal(const Graph& g, const GreedyDecomposition& d) {
  return d.blocks.size() < 2 || is_maximal_independent(g, d.blocks[1]);
}

VertexSet diagonal_set(const GreedyDecomposition& dg, const GreedyDecomposition& dh,
                       const ProductIndexMap& map) {
  VertexSet out(map.product_order());
  const std::size_t p = std::min(dg.length(), dh.length());
  for (std::size_t i = 0; i < p; ++i) {
    if (dg.blocks[i].host_size() != map.g_order() || dh.blocks[i].host_size() != map.h_order()) {
      throw PreconditionError(Precondition::kHostMismatch,
                              "decomposition blocks do not match the product factors");
    }
    out |= map.product_of(dg.blocks[i], dh.blocks[i]);
  }
  return out;
}

Subgraph clique_remainder(const Graph& g, const VertexSet& alpha_set, Vertex x, std::size_t cap) {
  check_alpha_set(g, alpha_set, cap);
  if (!alpha_set.contains(x)) {
    throw PreconditionError(Precondition::kNotMember,
                            "vertex " + std::to_string(x) + " is not in the set");
  }
  VertexSet rest = alpha_set;
  rest.erase(x);
  return delete_closed_neighborhood(g, rest);
}

VertexSet swap_step(const Graph& g, const VertexSet& alpha_set, Vertex v,
                    const VertexSet& maximal_set, std::size_t cap) {
  require_host(g, maximal_set);
  if (!is_maximal_independent(g, maximal_set)) {
    throw PreconditionError(Precondition::kNotMaximal, "J must be maximal independent");
  }
  const Subgraph remainder = clique_remainder(g, alpha_set, v, cap);
  if (remainder.graph.order() < 2) {
    throw PreconditionError(Precondition::kRemainderTooSmall,
                            "G - N[I - {" + std::to_string(v) + "}] is the single vertex " +
                                std::to_string(v));
  }
  // Prefer a replacement outside J; when v is in J one always exists since
  // the remainder is a clique and meets J in at most v.
  std::optional<Vertex> replacement;
  for (Vertex w : remainder.map.kept()) {
    if (w == v) continue;
    if (!maximal_set.contains(w)) {
      replacement = w;
      break;
    }
    if (!replacement) replacement = w;
  }
  VertexSet out = alpha_set;
  out.erase(v);
  out.insert(*replacement);
  return out;
}

}  // namespace wellcovered
