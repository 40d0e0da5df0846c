#include "wellcovered/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "wellcovered/errors.hpp"
#include "wellcovered/graph6.hpp"
#include "wellcovered/independence.hpp"
#include "wellcovered/theorem.hpp"

namespace wellcovered {

namespace {

// Pair (i, j), i < j, occupies bit position j(j-1)/2 + i of the graph6 bit
// string. Codes store that string with its first bit most significant, so
// numeric order is lexicographic order of the strings.
std::size_t pair_index(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

struct CodeLayout {
  std::size_t n;
  std::size_t bits;

  explicit CodeLayout(std::size_t order) : n(order), bits(order * (order - (order > 0)) / 2) {}

  std::uint64_t bit_for(std::size_t i, std::size_t j) const {
    return std::uint64_t{1} << (bits - 1 - pair_index(i, j));
  }
};

std::uint64_t relabeled_code(const CodeLayout& layout, const std::vector<Edge>& edges,
                             const std::vector<Vertex>& perm) {
  std::uint64_t code = 0;
  for (const auto& [u, v] : edges) code |= layout.bit_for(perm[u], perm[v]);
  return code;
}

Graph graph_from_code(const CodeLayout& layout, std::uint64_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < layout.n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (code & layout.bit_for(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(layout.n, edges);
}

std::vector<Edge> edges_of_code(const CodeLayout& layout, std::uint64_t code) {
  return graph_from_code(layout, code).edges();
}

// True when no relabeling yields a smaller code.
bool is_canonical(const CodeLayout& layout, std::uint64_t code) {
  const std::vector<Edge> edges = edges_of_code(layout, code);
  std::vector<Vertex> perm(layout.n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (relabeled_code(layout, edges, perm) < code) return false;
  }
  return true;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw CapExceeded("canonical form is limited to order " + std::to_string(kMaxCanonicalOrder));
  }
  const CodeLayout layout(g.order());
  const std::vector<Edge> edges = g.edges();
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t best = relabeled_code(layout, edges, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, relabeled_code(layout, edges, perm));
  }
  return graph_from_code(layout, best);
}

std::vector<Graph> generate_all_graphs(std::size_t n) {
  if (n < 1 || n > kMaxGenerationOrder) {
    throw InputError("generation order must be between 1 and " +
                     std::to_string(kMaxGenerationOrder) + ", got " + std::to_string(n));
  }
  const CodeLayout layout(n);
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << layout.bits); ++code) {
    if (is_canonical(layout, code)) out.push_back(graph_from_code(layout, code));
  }
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const CapExceeded& e) {
      throw CapExceeded("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void validate(const ScanConfig& config) {
  if (config.max_factor_order == 0 || config.max_product_order == 0) {
    throw InputError("scan caps must be positive");
  }
  if (config.max_product_order > kMaxEnumerationCap) {
    throw InputError("product cap cannot exceed " + std::to_string(kMaxEnumerationCap));
  }
  if (config.generate_up_to > kMaxGenerationOrder) {
    throw InputError("built-in generation is limited to order " +
                     std::to_string(kMaxGenerationOrder));
  }
  if (config.parallelism == 0) throw InputError("parallelism must be positive");
}

std::vector<CorpusEntry> build_corpus(const ScanConfig& config) {
  validate(config);
  std::vector<Graph> graphs;
  const std::size_t gen_cap = std::min(config.generate_up_to, config.max_factor_order);
  for (std::size_t n = 1; n <= gen_cap; ++n) {
    auto batch = generate_all_graphs(n);
    graphs.insert(graphs.end(), batch.begin(), batch.end());
  }
  for (const std::string& path : config.corpus_paths) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open corpus file " + path);
    try {
      auto batch = read_graph6_lines(in);
      graphs.insert(graphs.end(), batch.begin(), batch.end());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  std::vector<CorpusEntry> corpus;
  std::set<std::string> seen;
  for (Graph& g : graphs) {
    if (g.order() == 0 || g.order() > config.max_factor_order) continue;
    if (config.connected_only && !is_connected(g)) continue;
    std::string g6 = to_graph6(g);
    if (seen.insert(g6).second) corpus.push_back({std::move(g6), std::move(g)});
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.g6 < b.g6; });
  return corpus;
}

std::string cell_key(bool g_wc, bool h_wc, bool product_wc) {
  auto part = [](bool wc) { return wc ? std::string("wc") : std::string("nwc"); };
  return part(g_wc) + "," + part(h_wc) + "," + part(product_wc);
}

ScanRecord scan_pair(const CorpusEntry& g, const CorpusEntry& h) {
  const PairVerdict v = verify_main_theorem(g.graph, h.graph, kMaxEnumerationCap);
  ScanRecord r;
  r.g6_g = g.g6;
  r.g6_h = h.g6;
  r.order_g = g.graph.order();
  r.order_h = h.graph.order();
  r.product_order = v.product_order;
  r.product_edges = v.product_edges;
  r.g_well_covered = v.g_report.verdict;
  r.h_well_covered = v.h_report.verdict;
  r.product_well_covered = v.product_report.verdict;
  r.g_alpha = v.g_report.alpha;
  r.g_min_maximal = v.g_report.min_maximal;
  r.h_alpha = v.h_report.alpha;
  r.h_min_maximal = v.h_report.min_maximal;
  r.product_alpha = v.product_report.alpha;
  r.product_min_maximal = v.product_report.min_maximal;
  r.g_isolatable = v.g_isolatable.size();
  r.h_isolatable = v.h_isolatable.size();
  r.theorem_consistent = v.theorem_consistent;
  if (v.violation) r.violation = g.g6 + " x " + h.g6 + ": " + *v.violation;
  if (v.witness) {
    r.witness_side = v.witness->swapped ? "h" : "g";
    r.witness_big = v.witness->witness.big.size();
    r.witness_small = v.witness->witness.small.size();
    r.witness_verified = v.witness->checks.all();
  }
  r.witness_agrees = v.witness_agrees;

  if (v.g_isolatable.empty() && v.h_isolatable.empty() && v.product_report.verdict) {
    const Lemma32Report lemma = check_lemma_3_2(g.graph, h.graph, kMaxEnumerationCap);
    r.lemma32 = lemma.hypotheses_hold && lemma.conclusion_holds ? "pass" : "fail";
  }
  return r;
}

ScanResult scan_corpus(const std::vector<CorpusEntry>& corpus, const ScanConfig& config) {
  validate(config);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      if (corpus[i].graph.order() * corpus[j].graph.order() <= config.max_product_order) {
        pairs.emplace_back(i, j);
      }
    }
  }

  ScanResult result;
  result.config = config;
  result.records.resize(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < pairs.size(); k = next++) {
      result.records[k] = scan_pair(corpus[pairs[k].first], corpus[pairs[k].second]);
    }
  };
  const std::size_t workers = std::min(config.parallelism, std::max<std::size_t>(pairs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  ScanSummary& s = result.summary;
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      for (bool c : {false, true}) s.cells[cell_key(a, b, c)] = 0;
    }
  }
  s.pairs = result.records.size();
  for (const ScanRecord& r : result.records) {
    ++s.cells[cell_key(r.g_well_covered, r.h_well_covered, r.product_well_covered)];
    if (r.violation) s.violations.push_back(*r.violation);
    if (r.witness_side != "none") ++s.witness_applicable;
    if (!r.witness_agrees) ++s.witness_failures;
    if (r.lemma32 != "n/a") ++s.lemma32_checked;
    if (r.lemma32 == "fail") ++s.lemma32_failures;
  }
  return result;
}

ScanResult run_scan(const ScanConfig& config) { return scan_corpus(build_corpus(config), config); }

int ScanResult::exit_code() const noexcept {
  const bool bad = !summary.violations.empty() || summary.witness_failures > 0 ||
                   summary.lemma32_failures > 0;
  return bad ? 1 : 0;
}

}  // namespace wellcovered
