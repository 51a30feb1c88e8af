#include "lec/connectivity.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lec {

namespace {

EdgeSet cut_edges_of_side(const MultiGraph& g, const std::vector<char>& in) {
  EdgeSet cut(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    if (g.directed()) {
      if (in[ed.tail] && !in[ed.head]) cut.add(e);
    } else {
      if (in[ed.tail] != in[ed.head]) cut.add(e);
    }
  }
  return cut;
}

}  // namespace

ConnReport edge_connectivity(const MultiGraph& g) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("edge_connectivity: n < 2");
  Capacity unit(g.edge_count(), Rat(1));
  Rat best(-1);
  std::vector<NodeId> best_side;
  auto probe = [&](NodeId s, NodeId t) {
    FlowResult f = max_flow(g, unit, s, t);
    if (best < Rat(0) || f.value < best) {
      best = f.value;
      best_side = f.cut_side;
    }
  };
  for (NodeId t = 1; t < n; ++t) {
    probe(0, t);
    if (g.directed()) probe(t, 0);
  }
  std::vector<char> in(n, 0);
  for (NodeId v : best_side) in[v] = 1;
  ConnReport r;
  r.kind = ConnReport::Kind::Edge;
  r.value = (int)best.num();
  r.cut_edges = cut_edges_of_side(g, in);
  r.cut_side = best_side;
  return r;
}

namespace {

std::vector<std::vector<char>> simple_adjacency(const MultiGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    adj[e.tail][e.head] = 1;
    if (!g.directed()) adj[e.head][e.tail] = 1;
  }
  return adj;
}

struct PairFlow {
  int value;
  std::vector<NodeId> separator;
};

// Vertex-split max flow: each node w gets w_in = w and w_out = w + n joined
// by a unit arc; adjacency arcs u_out -> v_in carry effectively infinite
// capacity. Internally disjoint u-v paths = flow from u_out to v_in.
PairFlow vertex_flow(const std::vector<std::vector<char>>& adj, int n, NodeId u,
                     NodeId v, std::optional<Rat> limit) {
  FlowNet net(2 * n);
  const Rat inf(n + 1);
  for (int w = 0; w < n; ++w)
    net.add_arc(w, w + n, (w == u || w == v) ? inf : Rat(1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (adj[a][b]) net.add_arc(a + n, b, inf);
  Rat f = net.run(u + n, v, limit);
  PairFlow out{(int)f.num(), {}};
  std::vector<char> side(2 * n, 0);
  for (int w : net.residual_side(u + n)) side[w] = 1;
  for (int w = 0; w < n; ++w)
    if (side[w] && !side[w + n]) out.separator.push_back(w);
  return out;
}

// Minimum over non-adjacent pairs; early exit below `stop_below` when given.
ConnReport node_conn_sweep(const MultiGraph& g, std::optional<int> stop_below) {
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("node_connectivity: n < 2");
  auto adj = simple_adjacency(g);
  ConnReport r;
  r.kind = ConnReport::Kind::Node;
  r.value = n - 1;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = g.directed() ? 0 : u + 1; v < n; ++v) {
      if (u == v || adj[u][v]) continue;
      std::optional<Rat> limit;
      if (stop_below) limit = Rat(std::min(*stop_below, r.value));
      PairFlow pf = vertex_flow(adj, n, u, v, limit);
      if (pf.value < r.value) {
        r.value = pf.value;
        r.separator = pf.separator;
        if (stop_below && r.value < *stop_below) return r;
      }
    }
  }
  return r;
}

}  // namespace

ConnReport node_connectivity(const MultiGraph& g) {
  return node_conn_sweep(g, std::nullopt);
}

bool is_k_connected(const MultiGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_connected: k < 1");
  const int n = g.node_count();
  if (n < 2) return false;
  if (k > n - 1) return false;
  return node_conn_sweep(g, k).value >= k;
}

namespace {

void check_box(const MultiGraph& g, const std::vector<Rat>& x) {
  if ((int)x.size() != g.edge_count())
    throw std::invalid_argument("fractional cut: vector size mismatch");
  for (const Rat& v : x)
    if (v < Rat(0) || v > Rat(1))
      throw std::invalid_argument("fractional cut: x outside [0,1]");
}

Rat cut_value(const MultiGraph& g, const std::vector<Rat>& x, NodeMask s) {
  Rat total(0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    if (((s >> ed.tail) ^ (s >> ed.head)) & 1) total += x[e];
  }
  return total;
}

}  // namespace

FracCut min_frac_cut_enum_serial(const MultiGraph& g,
                                 const std::vector<Rat>& x) {
  const int n = g.node_count();
  if (n < 2 || n > 20)
    throw too_large_error("fractional cut enumeration requires 2 <= n <= 20");
  // Node n-1 stays outside S, so each cut appears exactly once.
  const NodeMask top = (NodeMask{1} << (n - 1));
  FracCut best{cut_value(g, x, 1), 1};
  for (NodeMask s = 2; s < top; ++s) {
    Rat v = cut_value(g, x, s);
    if (v < best.value) best = {v, s};
  }
  return best;
}

FracCut min_frac_cut_enum_parallel(const MultiGraph& g,
                                   const std::vector<Rat>& x) {
  const int n = g.node_count();
  if (n < 2 || n > 20)
    throw too_large_error("fractional cut enumeration requires 2 <= n <= 20");
  const long long top = 1LL << (n - 1);
  FracCut best{cut_value(g, x, 1), 1};
#ifdef _OPENMP
#pragma omp parallel
  {
    FracCut local{best.value, best.side};
#pragma omp for schedule(static)
    for (long long s = 2; s < top; ++s) {
      Rat v = cut_value(g, x, (NodeMask)s);
      if (v < local.value || (v == local.value && (NodeMask)s < local.side))
        local = {v, (NodeMask)s};
    }
#pragma omp critical
    {
      if (local.value < best.value ||
          (local.value == best.value && local.side < best.side))
        best = local;
    }
  }
#else
  for (long long s = 2; s < top; ++s) {
    Rat v = cut_value(g, x, (NodeMask)s);
    if (v < best.value) best = {v, (NodeMask)s};
  }
#endif
  return best;
}

FracCut stoer_wagner_min_cut(const MultiGraph& g, const std::vector<Rat>& w) {
  if (g.directed())
    throw std::invalid_argument("stoer_wagner: undirected only");
  const int n = g.node_count();
  if (n < 2) throw std::invalid_argument("stoer_wagner: n < 2");
  if (n > 64) throw too_large_error("stoer_wagner: n > 64");
  if ((int)w.size() != g.edge_count())
    throw std::invalid_argument("stoer_wagner: weight size mismatch");

  std::vector<std::vector<Rat>> wt(n, std::vector<Rat>(n, Rat(0)));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    wt[ed.tail][ed.head] += w[e];
    wt[ed.head][ed.tail] += w[e];
  }
  std::vector<NodeMask> members(n);
  for (int v = 0; v < n; ++v) members[v] = NodeMask{1} << v;
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;

  FracCut best{Rat(0), 0};
  bool have_best = false;
  while (active.size() > 1) {
    // One minimum-cut phase.
    std::vector<int> order;
    std::vector<char> added(n, 0);
    std::vector<Rat> conn(n, Rat(0));
    int first = active[0];
    added[first] = 1;
    order.push_back(first);
    for (int v : active)
      if (v != first) conn[v] = wt[first][v];
    for (size_t step = 1; step < active.size(); ++step) {
      int pick = -1;
      for (int v : active) {
        if (added[v]) continue;
        if (pick == -1 || conn[pick] < conn[v]) pick = v;
      }
      added[pick] = 1;
      order.push_back(pick);
      for (int v : active)
        if (!added[v]) conn[v] += wt[pick][v];
    }
    int t = order.back(), s = order[order.size() - 2];
    Rat phase_cut = conn[t];
    if (!have_best || phase_cut < best.value) {
      best = {phase_cut, members[t]};
      have_best = true;
    }
    // Merge t into s.
    members[s] |= members[t];
    for (int v : active) {
      if (v == s || v == t) continue;
      wt[s][v] += wt[t][v];
      wt[v][s] = wt[s][v];
    }
    active.erase(std::find(active.begin(), active.end(), t));
  }
  return best;
}

FracCut fractional_edge_connectivity(const MultiGraph& g,
                                     const std::vector<Rat>& x) {
  check_box(g, x);
  const int n = g.node_count();
  if (n < 2)
    throw std::invalid_argument("fractional_edge_connectivity: n < 2");
  if (n <= 20) return min_frac_cut_enum_parallel(g, x);
  if (g.directed())
    throw too_large_error("directed fractional cuts limited to n <= 20");
  return stoer_wagner_min_cut(g, x);
}

}  // namespace lec
