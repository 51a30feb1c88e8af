#include "lec/generators.hpp"

#include "lec/connectivity.hpp"

namespace lec {

MultiGraph harary(int k, int n) {
  if (k < 2 || k >= n)
    throw std::invalid_argument("harary: need 2 <= k < n");
  MultiGraph g(n, false);
  const int r = k / 2;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= r; ++j) g.add_edge(i, (i + j) % n);
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    } else {
      for (int i = 0; i <= (n - 1) / 2; ++i)
        g.add_edge(i, (i + (n - 1) / 2) % n);
    }
  }
  if (g.edge_count() != ((long long)k * n + 1) / 2)
    throw std::logic_error("harary: unexpected edge count");
  if (node_connectivity(g).value != k)
    throw std::logic_error("harary: connectivity check failed");
  return g;
}

MultiGraph random_k_edge_connected(int n, int k, int extra,
                                   unsigned int seed) {
  if (n < 2 || k < 1 || extra < 0)
    throw std::invalid_argument("random_k_edge_connected: parameter range");
  MultiGraph g(n, false);
  if (k == 1) {
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  } else if (n <= k) {
    if (n == 2) {
      for (int i = 0; i < k; ++i) g.add_edge(0, 1);
    } else {
      // ceil(k/2) stacked Hamiltonian cycles: 2*ceil(k/2)-regular.
      for (int copy = 0; copy < (k + 1) / 2; ++copy)
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    }
  } else {
    g = harary(k, n);
  }
  Rng rng(seed);
  for (int i = 0; i < extra; ++i) {
    int u = (int)rng.below((unsigned)n);
    int t = (int)rng.below((unsigned)(n - 1));
    int v = t + (t >= u ? 1 : 0);
    g.add_edge(u, v);
  }
  if (edge_connectivity(g).value < k)
    throw std::logic_error("random_k_edge_connected: verification failed");
  return g;
}

BetaMetricInstance beta_metric_instance(int n, const Rat& beta,
                                        unsigned int seed) {
  if (beta < Rat(1, 2) || beta >= Rat(1))
    throw std::invalid_argument("beta_metric_instance: beta outside [1/2, 1)");
  if (n < 3) throw std::invalid_argument("beta_metric_instance: n < 3");
  MultiGraph g(n, false);
  CostVector c;
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  Rng rng(seed);
  const Rat span = Rat(2) * beta - Rat(1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      idx[u][v] = idx[v][u] = g.add_edge(u, v);
      long long grid = rng.below(1025);
      c.push_back(Rat(1) + Rat(grid, 1024) * span);
    }
  }
  // Exhaustive beta-triangle audit over all ordered triples.
  for (int u = 0; u < n; ++u)
    for (int a = 0; a < n; ++a)
      for (int v = 0; v < n; ++v) {
        if (u == a || a == v || u == v) continue;
        if (!(c[idx[u][v]] <= beta * (c[idx[u][a]] + c[idx[a][v]])))
          throw std::logic_error("beta_metric_instance: triangle audit failed");
      }
  return {g, c, beta};
}

}  // namespace lec
