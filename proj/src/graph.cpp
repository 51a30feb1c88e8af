#include "lec/graph.hpp"

#include <numeric>

namespace lec {

int MultiGraph::degree(NodeId v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("degree: node out of range");
  int d = 0;
  for (const auto& e : edges_) d += (e.tail == v) + (e.head == v);
  return d;
}

int MultiGraph::out_degree(NodeId v) const {
  if (!directed_) throw std::invalid_argument("out_degree: undirected graph");
  if (v < 0 || v >= n_) throw std::out_of_range("out_degree: node out of range");
  int d = 0;
  for (const auto& e : edges_) d += (e.tail == v);
  return d;
}

int MultiGraph::in_degree(NodeId v) const {
  if (!directed_) throw std::invalid_argument("in_degree: undirected graph");
  if (v < 0 || v >= n_) throw std::out_of_range("in_degree: node out of range");
  int d = 0;
  for (const auto& e : edges_) d += (e.head == v);
  return d;
}

int MultiGraph::min_degree() const {
  if (n_ == 0) return 0;
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.tail];
    ++deg[e.head];
  }
  int d = deg[0];
  for (int v = 1; v < n_; ++v) d = std::min(d, deg[v]);
  return d;
}

void check_mask(const MultiGraph& g, NodeMask s) {
  if (g.node_count() > 64)
    throw too_large_error("node subsets as bitmasks require n <= 64");
  if (g.node_count() < 64 && (s >> g.node_count()) != 0)
    throw std::out_of_range("node subset: node index out of range");
}

EdgeSet delta(const MultiGraph& g, NodeMask s, CutSide mode) {
  check_mask(g, s);
  EdgeSet out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    bool t = (s >> ed.tail) & 1, h = (s >> ed.head) & 1;
    if (t == h) continue;
    if (!g.directed() || mode == CutSide::All)
      out.add(e);
    else if (mode == CutSide::Leaving && t)
      out.add(e);
    else if (mode == CutSide::Entering && h)
      out.add(e);
  }
  return out;
}

EdgeSet zeta(const MultiGraph& g, NodeMask s) {
  check_mask(g, s);
  EdgeSet out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    if (((s >> ed.tail) & 1) || ((s >> ed.head) & 1)) out.add(e);
  }
  return out;
}

MultiGraph bipartite_double(const MultiGraph& g) {
  if (!g.directed())
    throw std::invalid_argument("bipartite_double: input must be directed");
  const int n = g.node_count();
  MultiGraph d(2 * n, false);
  for (const auto& e : g.edges()) d.add_edge(e.tail, e.head + n);
  return d;
}

MultiGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep) {
  MultiGraph h(g.node_count(), g.directed());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (keep.contains(e)) h.add_edge(g.edge(e).tail, g.edge(e).head);
  return h;
}

int degree_in(const MultiGraph& g, const EdgeSet& s, NodeId v, CutSide mode) {
  if (v < 0 || v >= g.node_count())
    throw std::out_of_range("degree_in: node out of range");
  int d = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(e)) continue;
    const Edge ed = g.edge(e);
    if (g.directed() && mode == CutSide::Leaving)
      d += (ed.tail == v);
    else if (g.directed() && mode == CutSide::Entering)
      d += (ed.head == v);
    else
      d += (ed.tail == v) + (ed.head == v);
  }
  return d;
}

namespace {
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};
}  // namespace

bool is_forest(const MultiGraph& g, const EdgeSet& s) {
  const int n = g.directed() ? 2 * g.node_count() : g.node_count();
  const int shift = g.directed() ? g.node_count() : 0;
  Dsu dsu(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(e)) continue;
    const Edge ed = g.edge(e);
    if (!dsu.unite(ed.tail, ed.head + shift)) return false;
  }
  return true;
}

}  // namespace lec
