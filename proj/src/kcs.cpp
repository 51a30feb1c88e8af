#include "lec/kcs.hpp"

#include <algorithm>
#include <numeric>

#include "lec/connectivity.hpp"

namespace lec {

EdgeSet minimal_augmentation(const MultiGraph& g, const EdgeSet& i, int k,
                             const std::optional<CostVector>& c) {
  if (k < 1) throw std::invalid_argument("minimal_augmentation: k < 1");
  if (!is_k_connected(g, k))
    throw std::invalid_argument(
        "minimal_augmentation: graph is not k-connected, no feasible F");
  EdgeSet f(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!i.contains(e)) f.add(e);

  std::vector<EdgeId> order = f.ids();
  if (c) {
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      if ((*c)[a] != (*c)[b]) return (*c)[b] < (*c)[a];
      return a < b;
    });
  }
  for (EdgeId e : order) {
    f.remove(e);
    EdgeSet candidate = i;
    candidate |= f;
    if (!is_k_connected(edge_subgraph(g, candidate), k)) f.add(e);
  }
  return f;
}

KcsSolution algorithm1(const MultiGraph& g, int k,
                       const std::optional<CostVector>& c) {
  if (k < 1) throw std::invalid_argument("algorithm1: k < 1");
  if (!is_k_connected(g, k))
    throw std::invalid_argument("algorithm1: graph is not k-connected");
  CoverSpec spec(k - 1, g.directed());
  EdgeSet cover =
      c ? min_cost_edge_cover(g, *c, spec).edges : min_size_edge_cover(g, spec);
  EdgeSet f = minimal_augmentation(g, cover, k, c);

  KcsSolution sol;
  sol.cover = cover;
  sol.augmentation = f;
  sol.k = k;
  sol.total_size = cover.count() + f.count();
  if (c) {
    sol.total_cost = total_cost(*c, cover) + total_cost(*c, f);
  } else {
    sol.total_cost = Rat(sol.total_size);
  }
  const long long n = g.node_count();
  sol.lower_bound = g.directed() ? Rat(k * n) : Rat(Rat(k * n, 2).ceil());
  sol.forest_ok = is_forest(g, f);
  return sol;
}

KcsSolution kcs_relaxed(const MultiGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("kcs_relaxed: k < 2");
  if (!is_k_connected(g, k))
    throw std::invalid_argument("kcs_relaxed: graph is not k-connected");
  return algorithm1(g, k - 1);
}

BudgetSolution max_connectivity_m_edge_subgraph(const MultiGraph& g, int m) {
  const int n = g.node_count();
  if (!is_k_connected(g, 1))
    throw std::invalid_argument("max_connectivity: graph is not connected");
  KcsSolution base = algorithm1(g, 1);
  if (base.total_size > m)
    throw infeasible_error(
        "max_connectivity: budget below any spanning connected subgraph");
  BudgetSolution best{1, base.solution(), base.total_size};
  // Linear scan over all feasible k; the relaxed output size is not assumed
  // monotone in k, so no early break.
  for (int k = 2; k <= n - 1 && is_k_connected(g, k); ++k) {
    KcsSolution sol = kcs_relaxed(g, k);
    if (sol.total_size <= m)
      best = {k - 1, sol.solution(), sol.total_size};
  }
  return best;
}

RatioBounds theorem2_size_bounds(int k, int n, bool directed, const Rat& opt) {
  RatioBounds b;
  Rat add = directed ? Rat(2LL * n) : Rat(n);
  b.additive = (Rat(1) - Rat(1, k)) * opt + add;
  b.multiplicative = (Rat(1) + Rat(1, k)) * opt;
  b.raw_threshold_a = Rat((long long)k * n, 2) + Rat(k, 2LL * (k - 1));
  b.raw_threshold_b = Rat((long long)k * n, 2) + Rat(1);
  return b;
}

Rat theorem2_beta_bound(int k, int n, const Rat& beta, const Rat& opt) {
  Rat ratio = Rat(1) - Rat(1, k) + Rat(1, (long long)k * n) +
              (Rat(2) * beta) / (Rat(k) * (Rat(1) - beta));
  return ratio * opt;
}

}  // namespace lec
