#include "lec/matching.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>

namespace lec {

// ---------------------------------------------------------------------------
// Max flow
// ---------------------------------------------------------------------------

void FlowNet::add_arc(int u, int v, Rat cap, bool undirected) {
  if (cap < Rat(0)) throw std::invalid_argument("FlowNet: negative capacity");
  head_[u].push_back((int)to_.size());
  to_.push_back(v);
  cap_.push_back(cap);
  head_[v].push_back((int)to_.size());
  to_.push_back(u);
  cap_.push_back(undirected ? cap : Rat(0));
}

Rat FlowNet::run(int s, int t, std::optional<Rat> limit) {
  Rat value(0);
  const int n = (int)head_.size();
  std::vector<int> pre(n);
  while (!limit || value < *limit) {
    std::fill(pre.begin(), pre.end(), -1);
    pre[s] = -2;
    std::deque<int> q{s};
    while (!q.empty() && pre[t] == -1) {
      int v = q.front();
      q.pop_front();
      for (int a : head_[v]) {
        if (cap_[a].is_zero() || pre[to_[a]] != -1) continue;
        pre[to_[a]] = a;
        q.push_back(to_[a]);
      }
    }
    if (pre[t] == -1) break;
    Rat bottleneck = cap_[pre[t]];
    for (int v = t; v != s; v = to_[pre[v] ^ 1])
      if (cap_[pre[v]] < bottleneck) bottleneck = cap_[pre[v]];
    if (limit && value + bottleneck > *limit) bottleneck = *limit - value;
    for (int v = t; v != s; v = to_[pre[v] ^ 1]) {
      cap_[pre[v]] -= bottleneck;
      cap_[pre[v] ^ 1] += bottleneck;
    }
    value += bottleneck;
  }
  return value;
}

std::vector<int> FlowNet::residual_side(int s) const {
  std::vector<char> seen(head_.size(), 0);
  std::deque<int> q{s};
  seen[s] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : head_[v]) {
      if (cap_[a].is_zero() || seen[to_[a]]) continue;
      seen[to_[a]] = 1;
      q.push_back(to_[a]);
    }
  }
  std::vector<int> side;
  for (int v = 0; v < (int)head_.size(); ++v)
    if (seen[v]) side.push_back(v);
  return side;
}

bool FlowNet::arc_saturated_across(int arc_index,
                                   const std::vector<char>& in_side) const {
  int a = 2 * arc_index;
  int u = to_[a ^ 1], v = to_[a];
  return in_side[u] && !in_side[v] && cap_[a].is_zero();
}

FlowResult max_flow(const MultiGraph& g, const Capacity& cap, NodeId s,
                    NodeId t) {
  if (s == t) throw std::invalid_argument("max_flow: s == t");
  if (s < 0 || s >= g.node_count() || t < 0 || t >= g.node_count())
    throw std::out_of_range("max_flow: terminal out of range");
  if ((int)cap.size() != g.edge_count())
    throw std::invalid_argument("max_flow: capacity size mismatch");
  FlowNet net(g.node_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    net.add_arc(g.edge(e).tail, g.edge(e).head, cap[e], !g.directed());
  Rat value = net.run(s, t);
  std::vector<int> side = net.residual_side(s);
  std::vector<char> in(g.node_count(), 0);
  for (int v : side) in[v] = 1;
  // Max-flow = min-cut, checked on the returned cut.
  Rat cut_cap(0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    if (in[ed.tail] && !in[ed.head]) cut_cap += cap[e];
    if (!g.directed() && in[ed.head] && !in[ed.tail]) cut_cap += cap[e];
  }
  assert(cut_cap == value);
  return {value, side};
}

// ---------------------------------------------------------------------------
// Blossom matching
// ---------------------------------------------------------------------------

namespace {

// Classic O(V^3) blossom-shrinking search, adjacency-list based.
class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<int>> adj)
      : n_((int)adj.size()), adj_(std::move(adj)), match_(n_, -1) {}

  const std::vector<int>& solve() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) find_path(v);
    return match_;
  }

 private:
  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void find_path(int root) {
    parent_.assign(n_, -1);
    used_.assign(n_, 0);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = find_lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur_base;
            if (!used_[i]) {
              used_[i] = 1;
              q.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            augment(to);
            return;
          }
          used_[match_[to]] = 1;
          q.push_back(match_[to]);
        }
      }
    }
  }

  void augment(int v) {
    while (v != -1) {
      int pv = parent_[v], next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

std::vector<std::vector<int>> dedup_adjacency(const MultiGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    if (seen[e.tail][e.head]) continue;
    seen[e.tail][e.head] = seen[e.head][e.tail] = 1;
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  return adj;
}

}  // namespace

EdgeSet max_matching(const MultiGraph& g) {
  if (g.directed()) throw std::invalid_argument("max_matching: undirected only");
  Blossom solver(dedup_adjacency(g));
  const std::vector<int>& match = solver.solve();
  std::map<std::pair<int, int>, EdgeId> min_id;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    std::pair<int, int> key = std::minmax(ed.tail, ed.head);
    if (!min_id.count(key)) min_id[key] = e;
  }
  EdgeSet out(g.edge_count());
  for (int v = 0; v < g.node_count(); ++v)
    if (match[v] > v) out.add(min_id.at({v, match[v]}));
  return out;
}

BMatchingResult max_b_matching(const MultiGraph& g, const DegreeBound& b) {
  if (g.directed())
    throw std::invalid_argument("max_b_matching: undirected only");
  if ((int)b.size() != g.node_count())
    throw std::invalid_argument("max_b_matching: bound size mismatch");
  for (int x : b)
    if (x < 0) throw std::invalid_argument("max_b_matching: negative bound");

  const int n = g.node_count(), m = g.edge_count();
  std::vector<int> copy_off(n + 1, 0);
  for (int v = 0; v < n; ++v) copy_off[v + 1] = copy_off[v] + b[v];
  const int pair_base = copy_off[n];
  const int gadget_n = pair_base + 2 * m;
  auto pu = [&](EdgeId e) { return pair_base + 2 * e; };
  auto pv = [&](EdgeId e) { return pair_base + 2 * e + 1; };

  std::vector<std::vector<int>> adj(gadget_n);
  auto link = [&](int a, int c) {
    adj[a].push_back(c);
    adj[c].push_back(a);
  };
  for (EdgeId e = 0; e < m; ++e) {
    link(pu(e), pv(e));
    const Edge ed = g.edge(e);
    for (int c = copy_off[ed.tail]; c < copy_off[ed.tail + 1]; ++c)
      link(pu(e), c);
    for (int c = copy_off[ed.head]; c < copy_off[ed.head + 1]; ++c)
      link(pv(e), c);
  }

  Blossom solver(std::move(adj));
  std::vector<int> match = solver.solve();
  int gadget_size = 0;
  for (int v = 0; v < gadget_n; ++v) gadget_size += (match[v] > v);

  // Normalize: a pair with exactly one side matched to a copy is rewired to
  // the internal pair edge, which keeps the matching size.
  for (EdgeId e = 0; e < m; ++e) {
    int a = pu(e), c = pv(e);
    bool a_copy = match[a] != -1 && match[a] != c;
    bool c_copy = match[c] != -1 && match[c] != a;
    if (a_copy != c_copy) {
      int copy = a_copy ? match[a] : match[c];
      match[copy] = -1;
      match[a] = c;
      match[c] = a;
    } else if (match[a] == -1 && match[c] == -1) {
      match[a] = c;
      match[c] = a;
    }
  }

  BMatchingResult res{EdgeSet(m), 0, gadget_size};
  for (EdgeId e = 0; e < m; ++e) {
    assert(match[pu(e)] != -1 && match[pv(e)] != -1);
    if (match[pu(e)] != pv(e)) {
      res.edges.add(e);
      ++res.size;
    }
  }
  assert(res.size == gadget_size - m);
  return res;
}

// ---------------------------------------------------------------------------
// Bipartite min-cost b-edge-cover
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> bipartition(const MultiGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Successive-shortest-path min-cost flow with integer capacities and exact
// rational costs; SPFA tolerates the negative arc costs used for profit
// maximization.
class Mcmf {
 public:
  explicit Mcmf(int n) : head_(n) {}

  int add(int u, int v, int cap, Rat cost) {
    int idx = (int)to_.size();
    head_[u].push_back(idx);
    to_.push_back(v);
    cap_.push_back(cap);
    cost_.push_back(cost);
    head_[v].push_back(idx + 1);
    to_.push_back(u);
    cap_.push_back(0);
    cost_.push_back(-cost);
    return idx;
  }

  // Augments while the shortest s-t path has negative total cost.
  void run_profit(int s, int t) {
    const int n = (int)head_.size();
    for (;;) {
      std::vector<Rat> dist(n, Rat(0));
      std::vector<char> reached(n, 0), in_queue(n, 0);
      std::vector<int> pre(n, -1);
      reached[s] = 1;
      std::deque<int> q{s};
      in_queue[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        in_queue[v] = 0;
        for (int a : head_[v]) {
          if (cap_[a] == 0) continue;
          int w = to_[a];
          Rat nd = dist[v] + cost_[a];
          if (!reached[w] || nd < dist[w]) {
            reached[w] = 1;
            dist[w] = nd;
            pre[w] = a;
            if (!in_queue[w]) {
              in_queue[w] = 1;
              q.push_back(w);
            }
          }
        }
      }
      if (!reached[t] || !(dist[t] < Rat(0))) break;
      int bottleneck = cap_[pre[t]];
      for (int v = t; v != s; v = to_[pre[v] ^ 1])
        bottleneck = std::min(bottleneck, cap_[pre[v]]);
      for (int v = t; v != s; v = to_[pre[v] ^ 1]) {
        cap_[pre[v]] -= bottleneck;
        cap_[pre[v] ^ 1] += bottleneck;
      }
    }
  }

  int flow_on(int arc) const { return cap_[arc ^ 1]; }

 private:
  std::vector<std::vector<int>> head_;
  std::vector<int> to_, cap_;
  std::vector<Rat> cost_;
};

}  // namespace

BEdgeCoverResult min_cost_bipartite_b_edge_cover(const MultiGraph& g,
                                                 const std::vector<Rat>& cost,
                                                 const DegreeBound& b) {
  if (g.directed())
    throw std::invalid_argument("b_edge_cover: undirected only");
  if ((int)cost.size() != g.edge_count() || (int)b.size() != g.node_count())
    throw std::invalid_argument("b_edge_cover: size mismatch");
  for (const Rat& c : cost)
    if (c < Rat(0)) throw std::invalid_argument("b_edge_cover: negative cost");
  auto color = bipartition(g);
  if (!color) throw std::invalid_argument("b_edge_cover: graph not bipartite");
  const int n = g.node_count(), m = g.edge_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < b[v])
      throw infeasible_error("b_edge_cover: degree demand exceeds degree");

  // Complement route: deg_I(v) >= b(v) iff J = E\I is a b'-matching with
  // b'(v) = deg(v) - b(v); maximize c(J) by min-cost flow with costs -c.
  const int s = n, t = n + 1;
  Mcmf net(n + 2);
  for (int v = 0; v < n; ++v) {
    int slack = g.degree(v) - b[v];
    if ((*color)[v] == 0)
      net.add(s, v, slack, Rat(0));
    else
      net.add(v, t, slack, Rat(0));
  }
  std::vector<int> edge_arc(m);
  for (EdgeId e = 0; e < m; ++e) {
    Edge ed = g.edge(e);
    int u = (*color)[ed.tail] == 0 ? ed.tail : ed.head;
    int v = (*color)[ed.tail] == 0 ? ed.head : ed.tail;
    edge_arc[e] = net.add(u, v, 1, -cost[e]);
  }
  net.run_profit(s, t);

  BEdgeCoverResult res{EdgeSet(m), Rat(0)};
  for (EdgeId e = 0; e < m; ++e) {
    if (net.flow_on(edge_arc[e]) == 0) {
      res.edges.add(e);
      res.cost += cost[e];
    }
  }
  return res;
}

}  // namespace lec
