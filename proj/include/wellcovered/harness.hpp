#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wellcovered/graph.hpp"

namespace wellcovered {

inline constexpr std::size_t kMaxGenerationOrder = 6;
inline constexpr std::size_t kMaxCanonicalOrder = 8;

/// Relabeling of g whose graph6 bit string (upper triangle, column by
/// column) is lexicographically least. Brute force over all permutations,
/// so limited to order 8.
Graph canonical_form(const Graph& g);

/// One canonical representative per isomorphism class of graphs of order n
/// (1 <= n <= 6), sorted by graph6 string.
std::vector<Graph> generate_all_graphs(std::size_t n);

/// Reads graph6 lines, skipping blank lines. Throws InputError with the
/// 1-based line number on a malformed line.
std::vector<Graph> read_graph6_lines(std::istream& in);

enum class OutputFormat { kJson, kCsv };

struct ScanConfig {
  std::size_t max_factor_order = 5;
  std::size_t max_product_order = 30;
  std::vector<std::string> corpus_paths;
  /// 0 disables built-in generation.
  std::size_t generate_up_to = 5;
  bool connected_only = false;
  std::size_t parallelism = 1;
  OutputFormat output_format = OutputFormat::kJson;
};

/// Throws InputError when caps are zero or generate_up_to exceeds 6.
void validate(const ScanConfig& config);

struct CorpusEntry {
  std::string g6;
  Graph graph;
};

/// Generated and ingested graphs within the factor cap, deduplicated by
/// graph6 string and sorted.
std::vector<CorpusEntry> build_corpus(const ScanConfig& config);

struct ScanRecord {
  std::string g6_g;
  std::string g6_h;
  std::size_t order_g = 0;
  std::size_t order_h = 0;
  std::size_t product_order = 0;
  std::size_t product_edges = 0;
  bool g_well_covered = false;
  bool h_well_covered = false;
  bool product_well_covered = false;
  std::size_t g_alpha = 0;
  std::size_t g_min_maximal = 0;
  std::size_t h_alpha = 0;
  std::size_t h_min_maximal = 0;
  std::size_t product_alpha = 0;
  std::size_t product_min_maximal = 0;
  std::size_t g_isolatable = 0;
  std::size_t h_isolatable = 0;
  bool theorem_consistent = true;
  /// "none", "g" (G supplies the isolatable vertex) or "h".
  std::string witness_side = "none";
  std::size_t witness_big = 0;
  std::size_t witness_small = 0;
  bool witness_verified = false;
  bool witness_agrees = true;
  /// "n/a" when the hypotheses fail, otherwise "pass" or "fail".
  std::string lemma32 = "n/a";
  std::optional<std::string> violation;
};

struct ScanSummary {
  std::size_t pairs = 0;
  /// Keys "<g>,<h>,<product>" with each part "wc" or "nwc"; all eight present.
  std::map<std::string, std::size_t> cells;
  std::vector<std::string> violations;
  std::size_t witness_applicable = 0;
  std::size_t witness_failures = 0;
  std::size_t lemma32_checked = 0;
  std::size_t lemma32_failures = 0;
};

struct ScanResult {
  ScanConfig config;
  std::vector<ScanRecord> records;
  ScanSummary summary;

  /// 0 when consistent, 1 when any pair contradicts the theorem or one of
  /// the constructive cross-checks.
  int exit_code() const noexcept;
};

std::string cell_key(bool g_wc, bool h_wc, bool product_wc);

/// Evaluates one unordered pair.
ScanRecord scan_pair(const CorpusEntry& g, const CorpusEntry& h);

/// All unordered pairs (including a graph with itself) whose product is
/// within the cap. Output is independent of config.parallelism.
ScanResult scan_corpus(const std::vector<CorpusEntry>& corpus, const ScanConfig& config);

ScanResult run_scan(const ScanConfig& config);

}  // namespace wellcovered
