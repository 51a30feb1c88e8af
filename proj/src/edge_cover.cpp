#include "lec/edge_cover.hpp"

#include <algorithm>
#include <numeric>

#include "lec/connectivity.hpp"

namespace lec {

bool is_edge_cover(const MultiGraph& g, const EdgeSet& i,
                   const CoverSpec& spec) {
  if (spec.directed != g.directed())
    throw std::invalid_argument("is_edge_cover: directedness mismatch");
  std::vector<int> out(g.node_count(), 0), in(g.node_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!i.contains(e)) continue;
    ++out[g.edge(e).tail];
    ++in[g.edge(e).head];
  }
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.directed()) {
      if (out[v] < spec.ell || in[v] < spec.ell) return false;
    } else {
      if (out[v] + in[v] < spec.ell) return false;
    }
  }
  return true;
}

namespace {

void check_feasible(const MultiGraph& g, const CoverSpec& spec) {
  if (spec.directed != g.directed())
    throw std::invalid_argument("edge cover: directedness mismatch");
  for (int v = 0; v < g.node_count(); ++v) {
    bool ok = g.directed()
                  ? g.out_degree(v) >= spec.ell && g.in_degree(v) >= spec.ell
                  : g.degree(v) >= spec.ell;
    if (!ok)
      throw infeasible_error("edge cover: node " + std::to_string(v) +
                             " has degree below ell");
  }
}

// Complement of a maximum b-matching with b = deg - ell on the given
// undirected graph; ids are the caller's.
EdgeSet complement_cover(const MultiGraph& g, int ell) {
  DegreeBound b(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) b[v] = g.degree(v) - ell;
  return max_b_matching(g, b).edges.complement();
}

}  // namespace

EdgeSet min_size_edge_cover(const MultiGraph& g, const CoverSpec& spec) {
  check_feasible(g, spec);
  if (spec.ell == 0) return EdgeSet(g.edge_count());
  if (!g.directed()) return complement_cover(g, spec.ell);
  // Directed: covers correspond 1-1 to covers of the bipartite double.
  return complement_cover(bipartite_double(g), spec.ell);
}

namespace {

// Exact branch-and-bound for weighted undirected instances. Edges are
// scanned in decreasing cost (ties by id); admissible bound = cost of the
// ceil(total residual demand / 2) cheapest undecided edges.
class CoverBnb {
 public:
  CoverBnb(const MultiGraph& g, const CostVector& c, int ell)
      : g_(g), c_(c), ell_(ell), m_(g.edge_count()) {
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      if (c_[a] != c_[b]) return c_[b] < c_[a];
      return a < b;
    });
    tail_sum_.assign(m_ + 1, Rat(0));
    for (int i = m_ - 1; i >= 0; --i)
      tail_sum_[i] = tail_sum_[i + 1] + c_[order_[i]];
    deg_sel_.assign(g.node_count(), 0);
    undecided_.assign(g.node_count(), 0);
    for (const auto& e : g.edges()) {
      ++undecided_[e.tail];
      ++undecided_[e.head];
    }
    chosen_.assign(m_, 0);
  }

  CoverResult solve() {
    best_cost_ = Rat(0);
    for (EdgeId e = 0; e < m_; ++e) best_cost_ += c_[e];
    best_ = std::vector<char>(m_, 1);
    recurse(0, Rat(0));
    CoverResult res{EdgeSet(m_), Rat(0)};
    for (EdgeId e = 0; e < m_; ++e)
      if (best_[e]) {
        res.edges.add(e);
        res.cost += c_[e];
      }
    return res;
  }

 private:
  int demand_total() const {
    int r = 0;
    for (int v = 0; v < g_.node_count(); ++v)
      r += std::max(0, ell_ - deg_sel_[v]);
    return r;
  }

  void recurse(int idx, Rat cur) {
    int demand = demand_total();
    if (demand == 0) {
      if (cur < best_cost_) {
        best_cost_ = cur;
        best_ = chosen_;
        for (int i = idx; i < m_; ++i) best_[order_[i]] = 0;
      }
      return;
    }
    if (idx == m_) return;
    for (int v = 0; v < g_.node_count(); ++v)
      if (deg_sel_[v] + undecided_[v] < ell_) return;
    int need = (demand + 1) / 2;
    if (need > m_ - idx) return;
    // Bound via the `need` cheapest undecided edges (the order suffix).
    Rat lb = cur + tail_sum_[std::max(idx, m_ - need)];
    if (!(lb < best_cost_)) return;
    EdgeId e = order_[idx];
    const Edge ed = g_.edge(e);
    // Exclude first: expensive edges are dropped before cheap ones.
    --undecided_[ed.tail];
    --undecided_[ed.head];
    recurse(idx + 1, cur);
    ++deg_sel_[ed.tail];
    ++deg_sel_[ed.head];
    chosen_[e] = 1;
    recurse(idx + 1, cur + c_[e]);
    chosen_[e] = 0;
    --deg_sel_[ed.tail];
    --deg_sel_[ed.head];
    ++undecided_[ed.tail];
    ++undecided_[ed.head];
  }

  const MultiGraph& g_;
  const CostVector& c_;
  int ell_, m_;
  std::vector<EdgeId> order_;
  std::vector<Rat> tail_sum_;
  std::vector<int> deg_sel_, undecided_;
  std::vector<char> chosen_, best_;
  Rat best_cost_;
};

}  // namespace

CoverResult min_cost_edge_cover(const MultiGraph& g, const CostVector& c,
                                const CoverSpec& spec, int bb_edge_cap) {
  if ((int)c.size() != g.edge_count())
    throw std::invalid_argument("min_cost_edge_cover: cost size mismatch");
  for (const Rat& x : c)
    if (x < Rat(0))
      throw std::invalid_argument("min_cost_edge_cover: negative cost");
  check_feasible(g, spec);
  if (spec.ell == 0) return {EdgeSet(g.edge_count()), Rat(0)};

  if (g.directed()) {
    MultiGraph d = bipartite_double(g);
    DegreeBound b(d.node_count(), spec.ell);
    BEdgeCoverResult r = min_cost_bipartite_b_edge_cover(d, c, b);
    return {r.edges, r.cost};
  }

  bool uniform = true;
  for (const Rat& x : c) uniform = uniform && x == c[0];
  if (uniform) {
    EdgeSet cover = min_size_edge_cover(g, spec);
    Rat cost = c.empty() ? Rat(0) : Rat(cover.count()) * c[0];
    return {cover, cost};
  }
  if (g.edge_count() > bb_edge_cap)
    throw too_large_error(
        "min_cost_edge_cover: instance exceeds branch-and-bound cap of " +
        std::to_string(bb_edge_cap) + " edges");
  return CoverBnb(g, c, spec.ell).solve();
}

CoverBound corollary3_bound(const MultiGraph& g, const CostVector& c, int k,
                            int ell) {
  if (ell < 1 || ell > k - 1)
    throw std::invalid_argument("corollary3_bound: need 1 <= ell <= k-1");
  if ((int)c.size() != g.edge_count())
    throw std::invalid_argument("corollary3_bound: cost size mismatch");
  if (edge_connectivity(g).value < k)
    throw std::invalid_argument("corollary3_bound: graph is not k-edge-connected");
  const int n = g.node_count(), m = g.edge_count();
  Rat ce(0);
  for (const Rat& x : c) ce += x;
  bool even_or_large =
      ((long long)ell * n) % 2 == 0 ||
      Rat(m) >= Rat((long long)k * n, 2) + Rat(k, 2LL * ell);
  CoverBound out;
  out.bound_case = even_or_large ? BoundCase::EvenOrLarge : BoundCase::OddSmall;
  out.value = even_or_large ? Rat(ell, k) * ce
                            : Rat((long long)ell * n + 1, 2LL * m) * ce;
  out.relaxed_value = (Rat(ell, k) + Rat(1, (long long)k * n)) * ce;
  return out;
}

}  // namespace lec
