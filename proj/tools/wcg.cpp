// wcg: well-coveredness of graphs and their Cartesian products.
//
//   wcg analyze <g6|->            report on one graph (or each stdin line)
//   wcg product <g6> <g6>         enumerate factors and product, check the theorem
//   wcg witness <g6> <g6>         constructive certificate for non-well-coveredness
//   wcg scan [options]            all pairs of a generated / ingested corpus
//   wcg gen <n>                   canonical graph6 of every graph of order n
//
// Exit codes: 0 ok, 1 theorem violation, 2 input error, 3 cap exceeded,
// 4 witness hypotheses not met.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wellcovered/errors.hpp"
#include "wellcovered/graph6.hpp"
#include "wellcovered/harness.hpp"
#include "wellcovered/report.hpp"
#include "wellcovered/theorem.hpp"

namespace wc = wellcovered;

namespace {

int json_indent = 2;

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kNotApplicable = 4,
};

std::size_t env_or(const char* name, std::size_t fallback) {
  if (const char* value = std::getenv(name)) {
    try {
      return static_cast<std::size_t>(std::stoul(value));
    } catch (const std::exception&) {
      throw wc::InputError(std::string("environment variable ") + name + " is not a number");
    }
  }
  return fallback;
}

std::vector<wc::Graph> read_graphs(const std::string& arg) {
  if (arg == "-") return wc::read_graph6_lines(std::cin);
  return {wc::from_graph6(arg)};
}

wc::Graph read_one(const std::string& arg) {
  auto graphs = read_graphs(arg);
  if (graphs.empty()) throw wc::InputError("no graph6 line on standard input");
  return std::move(graphs.front());
}

int cmd_analyze(const std::string& input, std::size_t cap) {
  for (const wc::Graph& g : read_graphs(input)) {
    std::cout << wc::report::analyze(g, cap).dump(json_indent) << '\n';
  }
  return kOk;
}

int cmd_product(const std::string& a, const std::string& b, std::size_t cap) {
  const wc::Graph g = read_one(a);
  const wc::Graph h = read_one(b);
  const auto j = wc::report::product(g, h, cap);
  std::cout << j.dump(json_indent) << '\n';
  return j["verdict"]["theorem_consistent"].get<bool>() ? kOk : kViolation;
}

int cmd_witness(const std::string& a, const std::string& b, std::size_t product_cap) {
  const wc::Graph g = read_one(a);
  const wc::Graph h = read_one(b);
  bool swapped = false;
  auto inputs = wc::theorem31_applies(g, h);
  if (!inputs) {
    inputs = wc::theorem31_applies(h, g);
    swapped = inputs.has_value();
  }
  if (!inputs) {
    std::cerr << "witness: not applicable; neither factor has an isolatable vertex while the "
                 "other factor is not well-covered\n";
    return kNotApplicable;
  }
  const wc::Graph& first = swapped ? h : g;
  const wc::Graph& second = swapped ? g : h;
  const wc::ProductWitness w =
      wc::build_product_witness(first, inputs->iso, second, inputs->a, inputs->b, product_cap);
  const wc::WitnessChecks checks = wc::check_product_witness(first, second, w);
  auto j = wc::report::witness_json(w, checks);
  j["swapped"] = swapped;
  j["g6_isolatable_factor"] = wc::to_graph6(first);
  j["g6_other_factor"] = wc::to_graph6(second);
  std::cout << j.dump(json_indent) << '\n';
  return checks.all() ? kOk : kViolation;
}

int cmd_scan(const wc::ScanConfig& config, const std::string& out_path) {
  const wc::ScanResult result = wc::run_scan(config);
  const std::string text = config.output_format == wc::OutputFormat::kJson
                               ? wc::report::scan_json(result).dump(json_indent) + "\n"
                               : wc::report::scan_csv(result);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw wc::InputError("cannot write " + out_path);
    out << text;
  }
  for (const std::string& v : result.summary.violations) std::cerr << "violation: " << v << '\n';
  return result.exit_code();
}

int cmd_gen(std::size_t n) {
  for (const wc::Graph& g : wc::generate_all_graphs(n)) std::cout << wc::to_graph6(g) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-coveredness of graphs and their Cartesian products"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--compact", compact, "Single-line JSON output");
  app.fallthrough();

  std::size_t enum_cap = wc::kDefaultEnumerationCap;
  std::size_t product_cap = wc::kDefaultEnumerationCap;
  std::size_t witness_cap = wc::kDefaultProductCap;
  std::string input = "-";
  std::string g6_a;
  std::string g6_b;
  std::size_t gen_n = 0;
  wc::ScanConfig scan;
  std::string scan_format = "json";
  std::string scan_out;

  try {
    product_cap = env_or("WCG_PRODUCT_CAP", product_cap);
    scan.max_product_order = env_or("WCG_PRODUCT_CAP", scan.max_product_order);
    scan.max_factor_order = env_or("WCG_MAX_N", scan.max_factor_order);
    scan.parallelism = env_or("WCG_JOBS", scan.parallelism);
  } catch (const wc::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  auto* analyze = app.add_subcommand("analyze", "Well-coveredness and isolatable vertices");
  analyze->add_option("graph", input, "graph6 line, or - for standard input");
  analyze->add_option("--cap", enum_cap, "Enumeration cap");

  auto* product = app.add_subcommand("product", "Check the theorem on G x H by enumeration");
  product->add_option("G", g6_a, "graph6 of G")->required();
  product->add_option("H", g6_b, "graph6 of H")->required();
  product->add_option("--product-cap", product_cap, "Largest product order to enumerate");

  auto* witness = app.add_subcommand("witness", "Constructive non-well-coveredness certificate");
  witness->add_option("G", g6_a, "graph6 of G")->required();
  witness->add_option("H", g6_b, "graph6 of H")->required();
  witness->add_option("--product-cap", witness_cap, "Largest product order to build");

  auto* scan_cmd = app.add_subcommand("scan", "Verify the theorem over all pairs of a corpus");
  scan_cmd->add_option("--max-n", scan.max_factor_order, "Largest factor order");
  scan_cmd->add_option("--product-cap", scan.max_product_order, "Largest product order");
  scan_cmd->add_option("--corpus", scan.corpus_paths, "graph6 corpus file (repeatable)");
  scan_cmd->add_option("--gen-up-to", scan.generate_up_to,
                       "Generate all graphs up to this order (0 disables, max 6)");
  scan_cmd->add_flag("--connected-only", scan.connected_only, "Keep only connected graphs");
  scan_cmd->add_option("--jobs", scan.parallelism, "Worker threads");
  scan_cmd->add_option("--format", scan_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--out", scan_out, "Output path (default standard output)");

  auto* gen = app.add_subcommand("gen", "Canonical graph6 per isomorphism class");
  gen->add_option("n", gen_n, "Order, 1..6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (compact) json_indent = -1;
  try {
    if (*analyze) return cmd_analyze(input, enum_cap);
    if (*product) return cmd_product(g6_a, g6_b, product_cap);
    if (*witness) return cmd_witness(g6_a, g6_b, witness_cap);
    if (*scan_cmd) {
      scan.output_format = scan_format == "csv" ? wc::OutputFormat::kCsv : wc::OutputFormat::kJson;
      return cmd_scan(scan, scan_out);
    }
    if (*gen) return cmd_gen(gen_n);
  } catch (const wc::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const wc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
