#ifndef LEC_CONNECTIVITY_HPP
#define LEC_CONNECTIVITY_HPP

#include <vector>

#include "lec/graph.hpp"
#include "lec/matching.hpp"
#include "lec/rational.hpp"

namespace lec {

struct ConnReport {
  enum class Kind { Edge, Node };
  Kind kind;
  int value = 0;
  /// Edge kind: a minimum cut delta(cut_side) of size `value`.
  EdgeSet cut_edges;
  std::vector<NodeId> cut_side;
  /// Node kind: a separator of size `value`; empty when value = n-1
  /// (complete graphs, by convention).
  std::vector<NodeId> separator;
};

/// Global edge connectivity by max-flow sweeps (fix node 0, minimize over
/// the other terminal; both directions for directed graphs).
ConnReport edge_connectivity(const MultiGraph& g);

/// Global node connectivity via vertex-split max-flow over all non-adjacent
/// pairs; parallel edges are collapsed first. Complete graphs report n-1.
ConnReport node_connectivity(const MultiGraph& g);

/// True iff node connectivity >= k; flows are capped at k for early exit.
bool is_k_connected(const MultiGraph& g, int k);

struct FracCut {
  Rat value;
  /// Minimizing side, lexicographically smallest mask among minima for the
  /// enumeration route.
  NodeMask side = 0;
};

/// min over nonempty proper S of x(delta(S)), exact. Enumeration for
/// n <= 20 (the reference route), rational Stoer-Wagner above (undirected
/// only). Throws on box-bound violations.
FracCut fractional_edge_connectivity(const MultiGraph& g,
                                     const std::vector<Rat>& x);

/// Enumeration kernels; parallel must agree with serial exactly.
FracCut min_frac_cut_enum_serial(const MultiGraph& g,
                                 const std::vector<Rat>& x);
FracCut min_frac_cut_enum_parallel(const MultiGraph& g,
                                   const std::vector<Rat>& x);

/// Global minimum cut of an undirected graph with nonnegative rational
/// weights (Stoer-Wagner); requires n >= 2 and a connected graph is not
/// assumed (a disconnected graph yields value 0).
FracCut stoer_wagner_min_cut(const MultiGraph& g, const std::vector<Rat>& w);

}  // namespace lec

#endif  // LEC_CONNECTIVITY_HPP
