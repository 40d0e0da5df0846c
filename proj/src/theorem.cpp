#include "wellcovered/theorem.hpp"

#include <string>
#include <utility>

#include "wellcovered/errors.hpp"

namespace wellcovered {

namespace {

VertexSet singleton(std::size_t n, Vertex v) {
  VertexSet s(n);
  s.insert(v);
  return s;
}

// Maximal independence of s inside the subgraph of p induced by region.
bool maximal_within(const Graph& p, const VertexSet& s, const VertexSet& region) {
  return s.is_subset_of(region) && is_independent(p, s) &&
         region.is_subset_of(closed_neighborhood(p, s));
}

template <typename Fn>
auto naming_side(const char* side, Fn&& fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    throw CapExceeded(std::string(side) + " cannot be checked: " + e.what());
  }
}

}  // namespace

bool WitnessChecks::all() const noexcept {
  return j_contains_i_times_a && j_maximal_in_region && j_avoids_closed_neighborhood &&
         j1_j2_gap && xb_subset_of_xa && xa_avoids_a_columns && l_maximal_in_xb &&
         m_maximal_in_xa && big_maximal && small_maximal && big_larger;
}

ProductWitness build_product_witness(const Graph& g, const IsolatableWitness& iso,
                                     const Graph& h, const VertexSet& a, const VertexSet& b,
                                     std::size_t product_cap) {
  if (!is_valid_isolatable_witness(g, iso)) {
    throw PreconditionError(Precondition::kInvalidIsolatableWitness,
                            "G - N[I] must be exactly {" + std::to_string(iso.x) + "}");
  }
  if (a.host_size() != h.order() || b.host_size() != h.order()) {
    throw PreconditionError(Precondition::kHostMismatch, "A and B must be subsets of V(H)");
  }
  if (!is_maximal_independent(h, a) || !is_maximal_independent(h, b)) {
    throw PreconditionError(Precondition::kNotMaximal, "A and B must be maximal independent in H");
  }
  if (a.size() <= b.size()) {
    throw PreconditionError(Precondition::kNotStrictlyLarger, "|A| must exceed |B|");
  }

  const Product product = cartesian_product(g, h, product_cap);
  const Graph& p = product.graph;
  const ProductIndexMap& map = product.map;
  const std::size_t n = p.order();
  const VertexSet x_only = singleton(g.order(), iso.x);
  const VertexSet region = map.product_of(closed_neighborhood(g, iso.x).complement(), h.vertices());
  const VertexSet around_x = map.product_of(g.neighbors(iso.x), h.vertices());

  ProductWitness w{iso, a, b, map, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  w.j = extend_to_maximal(p, map.product_of(iso.certificate, a), region);
  w.j1 = w.j | map.product_of(x_only, a);
  w.j2 = w.j | map.product_of(x_only, b);
  w.xa = around_x - closed_neighborhood(p, w.j1);
  w.xb = around_x - closed_neighborhood(p, w.j2);
  w.l = extend_to_maximal(p, VertexSet(n), w.xb);
  w.m = extend_to_maximal(p, w.l, w.xa);
  w.big = w.j1 | w.m;
  w.small = w.j2 | w.l;
  return w;
}

WitnessChecks check_product_witness(const Graph& g, const Graph& h, const ProductWitness& w) {
  const Product product = cartesian_product(g, h, w.map.product_order());
  const Graph& p = product.graph;
  const ProductIndexMap& map = product.map;
  const VertexSet x_only = singleton(g.order(), w.iso.x);
  const VertexSet closed_x = closed_neighborhood(g, w.iso.x);
  const VertexSet region = map.product_of(closed_x.complement(), h.vertices());

  WitnessChecks c;
  c.j_contains_i_times_a = map.product_of(w.iso.certificate, w.a).is_subset_of(w.j);
  c.j_maximal_in_region = maximal_within(p, w.j, region);
  c.j_avoids_closed_neighborhood = !w.j.intersects(map.product_of(closed_x, h.vertices()));
  c.j1_j2_gap = w.j1 == (w.j | map.product_of(x_only, w.a)) &&
                w.j2 == (w.j | map.product_of(x_only, w.b)) && w.a.size() > w.b.size() &&
                w.j1.size() - w.j2.size() == w.a.size() - w.b.size();
  c.xb_subset_of_xa = w.xb.is_subset_of(w.xa);
  c.xa_avoids_a_columns = !w.xa.intersects(map.product_of(g.vertices(), w.a));
  c.l_maximal_in_xb = maximal_within(p, w.l, w.xb);
  c.m_maximal_in_xa = w.l.is_subset_of(w.m) && maximal_within(p, w.m, w.xa);
  c.big_maximal = is_maximal_independent(p, w.big);
  c.small_maximal = is_maximal_independent(p, w.small);
  c.big_larger = w.big.size() > w.small.size();
  return c;
}

std::optional<Theorem31Inputs> theorem31_applies(const Graph& g, const Graph& h,
                                                 std::size_t cap) {
  const WellCoveredReport h_report = is_well_covered(h, {.want_witnesses = true, .cap = cap});
  if (h_report.verdict) return std::nullopt;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (auto iso = isolatable_witness(g, x, cap)) {
      return Theorem31Inputs{std::move(*iso), *h_report.witness_max, *h_report.witness_min};
    }
  }
  return std::nullopt;
}

DisjointSetFacts disjoint_set_facts(const Graph& g, std::size_t cap) {
  const std::vector<VertexSet> sets = maximal_independent_sets(g, cap);
  DisjointSetFacts facts;
  for (const VertexSet& s : sets) {
    bool partnered = false;
    for (const VertexSet& t : sets) {
      if (s.intersects(t)) continue;
      partnered = true;
      if (s.size() != t.size() && facts.disjoint_sets_equal_size) {
        facts.disjoint_sets_equal_size = false;
        facts.unequal_disjoint_pair = std::pair{s, t};
      }
    }
    if (!partnered && facts.every_set_has_disjoint_partner) {
      facts.every_set_has_disjoint_partner = false;
      facts.set_without_partner = s;
    }
  }
  return facts;
}

Lemma32Report check_lemma_3_2(const Graph& g, const Graph& h, std::size_t cap) {
  auto has_isolatable = [cap](const Graph& f) {
    for (Vertex x = 0; x < f.order(); ++x) {
      if (isolatable_witness(f, x, cap)) return true;
    }
    return false;
  };
  Lemma32Report r;
  r.g_has_isolatable = has_isolatable(g);
  r.h_has_isolatable = has_isolatable(h);
  const Product product = cartesian_product(g, h, cap);
  r.product_well_covered =
      is_well_covered(product.graph, {.want_witnesses = false, .cap = cap}).verdict;
  r.hypotheses_hold = !r.g_has_isolatable && !r.h_has_isolatable && r.product_well_covered;
  if (!r.hypotheses_hold) return r;

  r.g_facts = disjoint_set_facts(g, cap);
  r.h_facts = disjoint_set_facts(h, cap);
  r.conclusion_holds = r.g_facts->every_set_has_disjoint_partner &&
                       r.h_facts->every_set_has_disjoint_partner &&
                       (r.g_facts->disjoint_sets_equal_size || r.h_facts->disjoint_sets_equal_size);
  return r;
}

PairVerdict verify_main_theorem(const Graph& g, const Graph& h, std::size_t cap) {
  PairVerdict v;
  v.g_report = naming_side("G", [&] { return is_well_covered(g, {.cap = cap}); });
  v.h_report = naming_side("H", [&] { return is_well_covered(h, {.cap = cap}); });
  const Product product = naming_side("product", [&] { return cartesian_product(g, h, cap); });
  v.product_order = product.graph.order();
  v.product_edges = product.graph.num_edges();
  v.product_report = naming_side("product", [&] { return is_well_covered(product.graph, {.cap = cap}); });
  v.g_isolatable = isolatable_vertices(g, cap);
  v.h_isolatable = isolatable_vertices(h, cap);

  v.theorem_consistent =
      !(v.product_report.verdict && !v.g_report.verdict && !v.h_report.verdict);
  if (!v.theorem_consistent) {
    v.violation = "product is well-covered (alpha " + std::to_string(v.product_report.alpha) +
                  ") while G (alpha " + std::to_string(v.g_report.alpha) + ", min maximal " +
                  std::to_string(v.g_report.min_maximal) + ") and H (alpha " +
                  std::to_string(v.h_report.alpha) + ", min maximal " +
                  std::to_string(v.h_report.min_maximal) + ") are not";
  }

  if (!v.g_isolatable.empty() && !v.h_report.verdict) {
    OrientedWitness ow{false,
                       build_product_witness(g, v.g_isolatable.front(), h,
                                             *v.h_report.witness_max, *v.h_report.witness_min,
                                             v.product_order),
                       {}};
    ow.checks = check_product_witness(g, h, ow.witness);
    v.witness = std::move(ow);
  } else if (!v.h_isolatable.empty() && !v.g_report.verdict) {
    OrientedWitness ow{true,
                       build_product_witness(h, v.h_isolatable.front(), g,
                                             *v.g_report.witness_max, *v.g_report.witness_min,
                                             v.product_order),
                       {}};
    ow.checks = check_product_witness(h, g, ow.witness);
    v.witness = std::move(ow);
  }
  if (v.witness) v.witness_agrees = v.witness->checks.all() && !v.product_report.verdict;
  return v;
}

}  // namespace wellcovered
