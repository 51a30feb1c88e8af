#ifndef LEC_ORACLE_HPP
#define LEC_ORACLE_HPP

#include <optional>

#include "lec/edge_cover.hpp"
#include "lec/graph.hpp"
#include "lec/rational.hpp"

namespace lec {

/// Independent brute-force reference solvers. These share nothing with the
/// main solvers beyond graph-core and the is_edge_cover / is_k_connected
/// predicates; they exist as correctness anchors, not for scale.
namespace oracle {

struct CoverAnswer {
  Rat cost;
  EdgeSet witness;
};

/// Exact minimum over all 2^m subsets; ties by lexicographic edge-id order.
/// Requires m <= 20.
CoverAnswer brute_min_cost_edge_cover(const MultiGraph& g, const CostVector& c,
                                      const CoverSpec& spec);

/// Enumeration kernels behind the cover oracle; parallel must match serial.
CoverAnswer brute_cover_serial(const MultiGraph& g, const CostVector& c,
                               const CoverSpec& spec);
CoverAnswer brute_cover_parallel(const MultiGraph& g, const CostVector& c,
                                 const CoverSpec& spec);

struct KcsAnswer {
  int size;
  Rat cost;
  EdgeSet witness;
};

/// Minimum cardinality (or cost, when costs are given) edge subset spanning
/// a k-connected subgraph. Exhaustive search with exact admissible pruning
/// (degree demands and edge-count lower bounds); requires m <= 24.
KcsAnswer brute_opt_kcs(const MultiGraph& g, int k,
                        const std::optional<CostVector>& c = std::nullopt);

/// Exact k* = max connectivity achievable with at most m edges.
int brute_max_conn_m_edges(const MultiGraph& g, int m);

/// Cut/separator enumeration references for the connectivity module.
int brute_edge_connectivity(const MultiGraph& g);
int brute_node_connectivity(const MultiGraph& g);

}  // namespace oracle
}  // namespace lec

#endif  // LEC_ORACLE_HPP
