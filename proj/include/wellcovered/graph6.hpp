#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wellcovered/graph.hpp"

namespace wellcovered {

/// Largest order expressible with the single-byte graph6 size prefix.
inline constexpr std::size_t kGraph6MaxOrder = 62;

/// Parses one graph6 line. A leading ">>graph6<<" header and trailing
/// whitespace are tolerated. Throws InputError on malformed text and
/// CapExceeded on orders that need the multi-byte size forms.
Graph from_graph6(std::string_view text);

/// Encodes without header or newline. Throws CapExceeded when order > 62.
std::string to_graph6(const Graph& g);

}  // namespace wellcovered
