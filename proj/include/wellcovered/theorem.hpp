#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wellcovered/graph.hpp"
#include "wellcovered/independence.hpp"

namespace wellcovered {

/// Constructive certificate that G x H is not well-covered, built from an
/// isolatable vertex x of G and maximal independent sets A, B of H with
/// |A| > |B|. All sets other than `iso.certificate`, `a` and `b` are in
/// product coordinates.
struct ProductWitness {
  IsolatableWitness iso;
  VertexSet a;
  VertexSet b;
  ProductIndexMap map;

  /// Maximal independent in (G - N[x]) x H, containing I x A.
  VertexSet j;
  VertexSet j1;  ///< J u ({x} x A)
  VertexSet j2;  ///< J u ({x} x B)
  /// Vertices of N(x) x V(H) not dominated by J1, resp. J2.
  VertexSet xa;
  VertexSet xb;
  VertexSet l;  ///< maximal independent in the subgraph induced by XB
  VertexSet m;  ///< maximal independent in the subgraph induced by XA, containing L
  VertexSet big;    ///< J1 u M
  VertexSet small;  ///< J2 u L
};

/// Individually checked witness invariants. Every flag is true for a
/// correctly built witness.
struct WitnessChecks {
  bool j_contains_i_times_a = false;
  bool j_maximal_in_region = false;
  bool j_avoids_closed_neighborhood = false;
  bool j1_j2_gap = false;  ///< |J1| - |J2| = |A| - |B| > 0
  bool xb_subset_of_xa = false;
  bool xa_avoids_a_columns = false;
  bool l_maximal_in_xb = false;
  bool m_maximal_in_xa = false;
  bool big_maximal = false;
  bool small_maximal = false;
  bool big_larger = false;

  bool all() const noexcept;
};

/// Extends I x A to J by scanning (G - N[x]) x V(H) in ascending product
/// index, then assembles J1, J2, XA, XB, L, M the same way. Uses only
/// independence and domination tests on the product, never enumeration.
ProductWitness build_product_witness(const Graph& g, const IsolatableWitness& iso,
                                     const Graph& h, const VertexSet& a, const VertexSet& b,
                                     std::size_t product_cap = kDefaultProductCap);

/// Rechecks every invariant of `w` against the product of g and h.
WitnessChecks check_product_witness(const Graph& g, const Graph& h, const ProductWitness& w);

/// Inputs that satisfy the hypotheses of the isolatable-vertex construction.
struct Theorem31Inputs {
  IsolatableWitness iso;
  VertexSet a;
  VertexSet b;
};

/// First isolatable witness of g with the witness pair of h, if g has an
/// isolatable vertex and h is not well-covered.
std::optional<Theorem31Inputs> theorem31_applies(const Graph& g, const Graph& h,
                                                 std::size_t cap = kDefaultEnumerationCap);

/// Outcome of checking the disjoint-maximal-set conclusions for one factor.
struct DisjointSetFacts {
  /// Every maximal independent set has a disjoint maximal independent set.
  bool every_set_has_disjoint_partner = true;
  std::optional<VertexSet> set_without_partner;
  /// Any two disjoint maximal independent sets have equal size.
  bool disjoint_sets_equal_size = true;
  std::optional<std::pair<VertexSet, VertexSet>> unequal_disjoint_pair;
};

DisjointSetFacts disjoint_set_facts(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

struct Lemma32Report {
  bool g_has_isolatable = false;
  bool h_has_isolatable = false;
  bool product_well_covered = false;
  bool hypotheses_hold = false;
  /// Populated only when the hypotheses hold.
  std::optional<DisjointSetFacts> g_facts;
  std::optional<DisjointSetFacts> h_facts;
  /// Both factors admit disjoint partners and at least one factor has all
  /// disjoint pairs of equal size. True when the hypotheses fail.
  bool conclusion_holds = true;
};

Lemma32Report check_lemma_3_2(const Graph& g, const Graph& h,
                              std::size_t cap = kDefaultEnumerationCap);

/// Constructive witness attached to a pair, oriented so that `swapped`
/// means the witness lives in H x G coordinates.
struct OrientedWitness {
  bool swapped = false;
  ProductWitness witness;
  WitnessChecks checks;
};

struct PairVerdict {
  WellCoveredReport g_report;
  WellCoveredReport h_report;
  WellCoveredReport product_report;
  std::size_t product_order = 0;
  std::size_t product_edges = 0;
  std::vector<IsolatableWitness> g_isolatable;
  std::vector<IsolatableWitness> h_isolatable;
  /// False exactly when the product is well-covered while neither factor is.
  bool theorem_consistent = true;
  std::optional<std::string> violation;
  std::optional<OrientedWitness> witness;
  /// The constructive witness and the product enumeration agree (true when
  /// there is no witness).
  bool witness_agrees = true;
};

/// Enumerates both factors and the product. Throws CapExceeded naming the
/// side that could not be enumerated.
PairVerdict verify_main_theorem(const Graph& g, const Graph& h,
                                std::size_t cap = kDefaultEnumerationCap);

}  // namespace wellcovered
