#ifndef LEC_KCS_HPP
#define LEC_KCS_HPP

#include <optional>
#include <vector>

#include "lec/edge_cover.hpp"
#include "lec/graph.hpp"
#include "lec/rational.hpp"

namespace lec {

struct KcsSolution {
  EdgeSet cover;         ///< I, the (k-1)-edge-cover from step 1
  EdgeSet augmentation;  ///< F, inclusion-minimal completion to k-connected
  int k = 0;
  int total_size = 0;
  Rat total_cost;  ///< meaningful when costs were supplied (else = size)
  /// ceil(kn/2) for undirected, kn for directed instances.
  Rat lower_bound;
  bool forest_ok = false;  ///< F acyclic (double image for directed)

  EdgeSet solution() const {
    EdgeSet s = cover;
    s |= augmentation;
    return s;
  }
};

struct BudgetSolution {
  int k_achieved = 0;
  EdgeSet subgraph;
  int m_used = 0;
};

/// Inclusion-minimal F subseteq E\I with (V, I u F) k-connected, by
/// reverse-delete over E\I in decreasing cost (ties by ascending edge id;
/// unit costs degenerate to pure id order). Requires g itself k-connected.
EdgeSet minimal_augmentation(const MultiGraph& g, const EdgeSet& i, int k,
                             const std::optional<CostVector>& c = std::nullopt);

/// Cover-then-augment: I = minimum size (or cost) (k-1)-edge-cover,
/// F = minimal_augmentation(g, I, k).
KcsSolution algorithm1(const MultiGraph& g, int k,
                       const std::optional<CostVector>& c = std::nullopt);

/// Algorithm 1 run with k-1 in place of k: a (k-1)-connected spanning
/// subgraph with at most opt(k) edges. Requires k >= 2 and g k-connected.
KcsSolution kcs_relaxed(const MultiGraph& g, int k);

/// Largest k for which the relaxed run fits the edge budget; the result is
/// (k_achieved)-connected with k_achieved >= k* - 1.
BudgetSolution max_connectivity_m_edge_subgraph(const MultiGraph& g, int m);

struct RatioBounds {
  Rat additive;        ///< (1 - 1/k) opt + n (undirected) or + 2n (directed)
  Rat multiplicative;  ///< (1 + 1/k) opt
  /// Raw threshold quantities kn/2 + k/(2(k-1)) and kn/2 + 1, reported
  /// without choosing between them.
  Rat raw_threshold_a;
  Rat raw_threshold_b;
};

RatioBounds theorem2_size_bounds(int k, int n, bool directed, const Rat& opt);

/// (1 - 1/k + 1/(kn) + 2 beta / (k (1-beta))) * opt.
Rat theorem2_beta_bound(int k, int n, const Rat& beta, const Rat& opt);

}  // namespace lec

#endif  // LEC_KCS_HPP
