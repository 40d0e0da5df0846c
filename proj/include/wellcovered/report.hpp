#pragma once

#include <string>

#include <json.hpp>

#include "wellcovered/harness.hpp"
#include "wellcovered/independence.hpp"
#include "wellcovered/theorem.hpp"

namespace wellcovered::report {

using nlohmann::json;

json set_json(const VertexSet& s);
/// Product vertices as [g, h] coordinate pairs.
json pairs_json(const VertexSet& s, const ProductIndexMap& map);

json well_covered_json(const WellCoveredReport& r);

/// Well-coveredness, isolatable vertices with certificates, and the
/// histogram of maximal independent set sizes.
json analyze(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Product order and size, its well-covered report, and the pair verdict.
json product(const Graph& g, const Graph& h, std::size_t cap = kDefaultEnumerationCap);

json witness_json(const ProductWitness& w, const WitnessChecks& checks);

json scan_json(const ScanResult& result);
/// Header line plus one line per record; summary is left to the JSON form.
std::string scan_csv(const ScanResult& result);

}  // namespace wellcovered::report
