#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperkey/hypergraph.hpp"

namespace hyperkey {

// Line-oriented text format, one statement per line:
//
//   # comment
//   vertices: 1 2 3
//   edge a: 1 2 weight 3/2
//
// Weights are integers, p/q or decimals and are read exactly.

/// Throws Error(ParseError) with "line L, column C" for malformed input,
/// Error(DuplicateEdgeId) and Error(NonpositiveWeight) for those defects.
Hypergraph parse_hypergraph(std::string_view text);

/// Inverse of parse_hypergraph; weights are written as p/q or integers.
std::string serialize(const Hypergraph& h);

Hypergraph load_hypergraph(const std::filesystem::path& path);

}  // namespace hyperkey
