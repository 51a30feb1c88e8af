#ifndef LEC_IO_HPP
#define LEC_IO_HPP

#include <optional>
#include <string>

#include "lec/edge_cover.hpp"
#include "lec/graph.hpp"

namespace lec {

struct GraphFile {
  MultiGraph g;
  /// Present iff any edge line carried a cost (then all must).
  std::optional<CostVector> costs;
};

/// DIMACS-inspired text format:
///   c <comment>
///   p graph <n> <m> <directed: 0|1>
///   e <tail> <head> [cost]
/// Edge ids equal edge-line order; costs are "p" or "p/q" rationals.
/// Throws parse_error with a 1-based line number on malformed input.
GraphFile parse_graph(const std::string& text);

/// Normalized serialization; parse(serialize(f)) round-trips exactly.
std::string serialize_graph(const GraphFile& f);

GraphFile load_graph(const std::string& path);
void save_graph(const std::string& path, const GraphFile& f);

/// FNV-1a hash of the normalized serialization, as 16 hex digits.
std::string instance_digest(const GraphFile& f);

}  // namespace lec

#endif  // LEC_IO_HPP
