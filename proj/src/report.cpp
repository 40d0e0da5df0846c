#include "wellcovered/report.hpp"

#include <sstream>

#include "wellcovered/graph6.hpp"

namespace wellcovered::report {

namespace {

const char* format_name(OutputFormat f) { return f == OutputFormat::kJson ? "json" : "csv"; }

json isolatable_json(const std::vector<IsolatableWitness>& list) {
  json vertices = json::array();
  json certificates = json::array();
  for (const auto& w : list) {
    vertices.push_back(w.x);
    certificates.push_back({{"x", w.x}, {"certificate", set_json(w.certificate)}});
  }
  return {{"vertices", vertices}, {"certificates", certificates}};
}

json record_json(const ScanRecord& r) {
  json j = {{"g6_g", r.g6_g},
            {"g6_h", r.g6_h},
            {"order_g", r.order_g},
            {"order_h", r.order_h},
            {"product_order", r.product_order},
            {"product_edges", r.product_edges},
            {"g_well_covered", r.g_well_covered},
            {"h_well_covered", r.h_well_covered},
            {"product_well_covered", r.product_well_covered},
            {"g_alpha", r.g_alpha},
            {"g_min_maximal", r.g_min_maximal},
            {"h_alpha", r.h_alpha},
            {"h_min_maximal", r.h_min_maximal},
            {"product_alpha", r.product_alpha},
            {"product_min_maximal", r.product_min_maximal},
            {"g_isolatable", r.g_isolatable},
            {"h_isolatable", r.h_isolatable},
            {"theorem_consistent", r.theorem_consistent},
            {"witness_side", r.witness_side},
            {"witness_big", r.witness_big},
            {"witness_small", r.witness_small},
            {"witness_verified", r.witness_verified},
            {"witness_agrees", r.witness_agrees},
            {"lemma32", r.lemma32}};
  j["violation"] = r.violation ? json(*r.violation) : json(nullptr);
  return j;
}

}  // namespace

json set_json(const VertexSet& s) { return s.members(); }

json pairs_json(const VertexSet& s, const ProductIndexMap& map) {
  json out = json::array();
  s.for_each([&](Vertex v) {
    const auto [g, h] = map.decode(v);
    out.push_back({g, h});
  });
  return out;
}

json well_covered_json(const WellCoveredReport& r) {
  json j = {{"well_covered", r.verdict},
            {"alpha", r.alpha},
            {"min_maximal", r.min_maximal},
            {"exhaustive", r.exhaustive}};
  j["witness_max"] = r.witness_max ? set_json(*r.witness_max) : json(nullptr);
  j["witness_min"] = r.witness_min ? set_json(*r.witness_min) : json(nullptr);
  return j;
}

json analyze(const Graph& g, std::size_t cap) {
  json j = {{"graph6", to_graph6(g)}, {"order", g.order()}, {"edges", g.num_edges()}};
  j.update(well_covered_json(is_well_covered(g, {.want_witnesses = true, .cap = cap})));
  const json iso = isolatable_json(isolatable_vertices(g, cap));
  j["isolatable"] = iso["vertices"];
  j["isolatable_certificates"] = iso["certificates"];
  json histogram = json::object();
  for (const auto& [size, count] : maximal_set_size_histogram(g, cap)) {
    histogram[std::to_string(size)] = count;
  }
  j["maximal_set_sizes"] = histogram;
  return j;
}

json product(const Graph& g, const Graph& h, std::size_t cap) {
  const PairVerdict v = verify_main_theorem(g, h, cap);
  json factor_g = well_covered_json(v.g_report);
  factor_g["graph6"] = to_graph6(g);
  factor_g["isolatable"] = isolatable_json(v.g_isolatable)["vertices"];
  json factor_h = well_covered_json(v.h_report);
  factor_h["graph6"] = to_graph6(h);
  factor_h["isolatable"] = isolatable_json(v.h_isolatable)["vertices"];
  json prod = well_covered_json(v.product_report);
  prod["order"] = v.product_order;
  prod["edges"] = v.product_edges;

  json verdict = {{"g_well_covered", v.g_report.verdict},
                  {"h_well_covered", v.h_report.verdict},
                  {"product_well_covered", v.product_report.verdict},
                  {"theorem_consistent", v.theorem_consistent},
                  {"witness_agrees", v.witness_agrees}};
  verdict["violation"] = v.violation ? json(*v.violation) : json(nullptr);
  if (v.witness) {
    verdict["witness"] = {{"side", v.witness->swapped ? "h" : "g"},
                          {"big_size", v.witness->witness.big.size()},
                          {"small_size", v.witness->witness.small.size()},
                          {"verified", v.witness->checks.all()}};
  } else {
    verdict["witness"] = nullptr;
  }
  return {{"g", factor_g}, {"h", factor_h}, {"product", prod}, {"verdict", verdict}};
}

json witness_json(const ProductWitness& w, const WitnessChecks& c) {
  json sets = json::object();
  auto add = [&](const char* name, const VertexSet& s) {
    sets[name] = {{"indices", set_json(s)}, {"pairs", pairs_json(s, w.map)}, {"size", s.size()}};
  };
  add("J", w.j);
  add("J1", w.j1);
  add("J2", w.j2);
  add("XA", w.xa);
  add("XB", w.xb);
  add("L", w.l);
  add("M", w.m);
  add("big", w.big);
  add("small", w.small);
  json checks = {{"j_contains_i_times_a", c.j_contains_i_times_a},
                 {"j_maximal_in_region", c.j_maximal_in_region},
                 {"j_avoids_closed_neighborhood", c.j_avoids_closed_neighborhood},
                 {"j1_j2_gap", c.j1_j2_gap},
                 {"xb_subset_of_xa", c.xb_subset_of_xa},
                 {"xa_avoids_a_columns", c.xa_avoids_a_columns},
                 {"l_maximal_in_xb", c.l_maximal_in_xb},
                 {"m_maximal_in_xa", c.m_maximal_in_xa},
                 {"big_maximal", c.big_maximal},
                 {"small_maximal", c.small_maximal},
                 {"big_larger", c.big_larger},
                 {"all", c.all()}};
  return {{"x", w.iso.x},
          {"certificate", set_json(w.iso.certificate)},
          {"A", set_json(w.a)},
          {"B", set_json(w.b)},
          {"product_order", w.map.product_order()},
          {"sets", sets},
          {"checks", checks}};
}

json scan_json(const ScanResult& result) {
  const ScanConfig& c = result.config;
  json config = {{"max_factor_order", c.max_factor_order},
                 {"max_product_order", c.max_product_order},
                 {"corpus_paths", c.corpus_paths},
                 {"generate_up_to", c.generate_up_to},
                 {"connected_only", c.connected_only},
                 {"output_format", format_name(c.output_format)}};
  json records = json::array();
  for (const ScanRecord& r : result.records) records.push_back(record_json(r));
  const ScanSummary& s = result.summary;
  json summary = {{"pairs", s.pairs},
                  {"cells", s.cells},
                  {"violations", s.violations},
                  {"witness_applicable", s.witness_applicable},
                  {"witness_failures", s.witness_failures},
                  {"lemma32_checked", s.lemma32_checked},
                  {"lemma32_failures", s.lemma32_failures}};
  return {{"config", config}, {"records", records}, {"summary", summary}};
}

std::string scan_csv(const ScanResult& result) {
  std::ostringstream out;
  bool first = true;
  const json header = record_json(ScanRecord{});
  for (const auto& item : header.items()) {
    out << (first ? "" : ",") << item.key();
    first = false;
  }
  out << '\n';
  for (const ScanRecord& r : result.records) {
    const json j = record_json(r);
    first = true;
    for (const auto& item : j.items()) {
      const json& value = item.value();
      out << (first ? "" : ",");
      first = false;
      if (value.is_string()) {
        std::string text = value.get<std::string>();
        if (text.find_first_of(",\"\n") != std::string::npos) {
          std::string quoted = "\"";
          for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          text = quoted + "\"";
        }
        out << text;
      } else if (!value.is_null()) {
        out << value.dump();
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wellcovered::report
