#ifndef LEC_MATCHING_HPP
#define LEC_MATCHING_HPP

#include <optional>
#include <vector>

#include "lec/graph.hpp"
#include "lec/rational.hpp"

namespace lec {

/// Per-edge nonnegative capacities; exact rationals in lowest terms.
using Capacity = std::vector<Rat>;

/// Degree bounds b : V -> Z>=0.
using DegreeBound = std::vector<int>;

struct FlowResult {
  Rat value;
  /// Source side of a minimum cut certifying the value.
  std::vector<NodeId> cut_side;
};

/// Exact maximum s-t flow with rational capacities (augmenting paths, BFS
/// order fixed by edge insertion). Undirected edges carry their capacity in
/// both directions. Asserted max-flow = min-cut before returning.
FlowResult max_flow(const MultiGraph& g, const Capacity& cap, NodeId s,
                    NodeId t);

/// Residual flow network used by the connectivity module as well; arcs are
/// added in caller order, which fixes the augmenting-path scan order.
class FlowNet {
 public:
  explicit FlowNet(int n) : head_(n) {}
  /// Adds arc u->v with the given capacity; when undirected, the reverse
  /// arc gets the same capacity instead of zero.
  void add_arc(int u, int v, Rat cap, bool undirected = false);
  /// Augments until exhaustion or until the flow value reaches `limit`.
  Rat run(int s, int t, std::optional<Rat> limit = std::nullopt);
  /// Nodes reachable from s in the residual graph (call after run()).
  std::vector<int> residual_side(int s) const;
  /// Arcs (by insertion index) saturated across the returned cut.
  bool arc_saturated_across(int arc_index, const std::vector<char>& in_side) const;
  int node_count() const { return (int)head_.size(); }
  int arc_count() const { return (int)to_.size() / 2; }

 private:
  std::vector<std::vector<int>> head_;  // node -> arc indices
  std::vector<int> to_;
  std::vector<Rat> cap_;
};

/// Maximum cardinality matching in a general undirected graph (blossom
/// shrinking). Deterministic for a fixed instance. Parallel edges add
/// nothing and are skipped; the returned set maps each matched pair to the
/// smallest edge id joining it.
EdgeSet max_matching(const MultiGraph& g);

struct BMatchingResult {
  EdgeSet edges;
  int size = 0;
  /// Size of the maximum matching on the vertex-copy gadget (= m + size).
  int gadget_matching_size = 0;
};

/// Maximum cardinality b-matching via the vertex-copy gadget: node v becomes
/// b(v) copies, edge e=uv becomes a pair e_u-e_v with e_u joined to all
/// copies of u and e_v to all copies of v; solved with max_matching.
BMatchingResult max_b_matching(const MultiGraph& g, const DegreeBound& b);

/// Minimum-cost edge subset of a bipartite graph with deg(v) >= b(v) for all
/// v. Solved as c(E) minus a maximum-weight complement b'-matching computed
/// by successive shortest paths. Throws std::invalid_argument when the graph
/// is not bipartite and infeasible_error when deg(v) < b(v) somewhere.
struct BEdgeCoverResult {
  EdgeSet edges;
  Rat cost;
};
BEdgeCoverResult min_cost_bipartite_b_edge_cover(const MultiGraph& g,
                                                 const std::vector<Rat>& cost,
                                                 const DegreeBound& b);

/// 2-coloring; empty when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const MultiGraph& g);

}  // namespace lec

#endif  // LEC_MATCHING_HPP
