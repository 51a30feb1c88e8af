#include "lec/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lec/connectivity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lec {
namespace oracle {

namespace {

// True iff the subset encoded by mask a precedes mask b in lexicographic
// sorted-id-sequence order.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  int d = __builtin_ctz(a ^ b);
  bool a_has = (a >> d) & 1;
  std::uint32_t other_rest = (a_has ? b : a) >> (d + 1);
  // The set missing id d wins only when it is a proper prefix.
  return a_has == (other_rest != 0);
}

bool mask_is_cover(const MultiGraph& g, std::uint32_t mask,
                   const CoverSpec& spec) {
  std::vector<int> out(g.node_count(), 0), in(g.node_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!((mask >> e) & 1)) continue;
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

Rat mask_cost(const CostVector& c, std::uint32_t mask) {
  Rat t(0);
  for (size_t e = 0; e < c.size(); ++e)
    if ((mask >> e) & 1) t += c[e];
  return t;
}

EdgeSet mask_to_set(int m, std::uint32_t mask) {
  EdgeSet s(m);
  for (int e = 0; e < m; ++e)
    if ((mask >> e) & 1) s.add(e);
  return s;
}

struct Best {
  bool found = false;
  Rat cost;
  std::uint32_t mask = 0;
  void offer(const Rat& c, std::uint32_t m) {
    if (!found || c < cost || (c == cost && lex_less(m, mask))) {
      found = true;
      cost = c;
      mask = m;
    }
  }
};

void check_cover_input(const MultiGraph& g, const CostVector& c) {
  if (g.edge_count() > 20)
    throw too_large_error("brute cover oracle: m > 20");
  if ((int)c.size() != g.edge_count())
    throw std::invalid_argument("brute cover oracle: cost size mismatch");
}

}  // namespace

CoverAnswer brute_cover_serial(const MultiGraph& g, const CostVector& c,
                               const CoverSpec& spec) {
  check_cover_input(g, c);
  const std::uint64_t total = std::uint64_t{1} << g.edge_count();
  Best best;
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (mask_is_cover(g, (std::uint32_t)mask, spec))
      best.offer(mask_cost(c, (std::uint32_t)mask), (std::uint32_t)mask);
  if (!best.found) throw infeasible_error("brute cover oracle: no cover");
  return {best.cost, mask_to_set(g.edge_count(), best.mask)};
}

CoverAnswer brute_cover_parallel(const MultiGraph& g, const CostVector& c,
                                 const CoverSpec& spec) {
  check_cover_input(g, c);
  const long long total = 1LL << g.edge_count();
  Best best;
#ifdef _OPENMP
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(static)
    for (long long mask = 0; mask < total; ++mask)
      if (mask_is_cover(g, (std::uint32_t)mask, spec))
        local.offer(mask_cost(c, (std::uint32_t)mask), (std::uint32_t)mask);
#pragma omp critical
    {
      if (local.found) best.offer(local.cost, local.mask);
    }
  }
#else
  for (long long mask = 0; mask < total; ++mask)
    if (mask_is_cover(g, (std::uint32_t)mask, spec))
      best.offer(mask_cost(c, (std::uint32_t)mask), (std::uint32_t)mask);
#endif
  if (!best.found) throw infeasible_error("brute cover oracle: no cover");
  return {best.cost, mask_to_set(g.edge_count(), best.mask)};
}

CoverAnswer brute_min_cost_edge_cover(const MultiGraph& g, const CostVector& c,
                                      const CoverSpec& spec) {
  return brute_cover_parallel(g, c, spec);
}

namespace {

// Exhaustive search over edge subsets for the cheapest k-connected spanning
// subgraph. Edges are decided in decreasing cost order, exclusion first;
// prunes are exact: cost of the cheapest completion meeting the degree
// demands and the kn/2 (kn directed) size floor, and per-node degree
// feasibility. A branch whose partial choice is already k-connected is
// closed immediately (supersets cannot be cheaper).
class KcsSearch {
 public:
  KcsSearch(const MultiGraph& g, int k, const CostVector& c)
      : g_(g), k_(k), c_(c), m_(g.edge_count()), n_(g.node_count()) {
    order_.resize(m_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](EdgeId a, EdgeId b) {
      if (c_[a] != c_[b]) return c_[b] < c_[a];
      return a < b;
    });
    tail_sum_.assign(m_ + 1, Rat(0));
    for (int i = m_ - 1; i >= 0; --i)
      tail_sum_[i] = tail_sum_[i + 1] + c_[order_[i]];
    out_sel_.assign(n_, 0);
    in_sel_.assign(n_, 0);
    out_avail_.assign(n_, 0);
    in_avail_.assign(n_, 0);
    for (const auto& e : g.edges()) {
      ++out_avail_[e.tail];
      ++in_avail_[e.head];
    }
    size_floor_ = g.directed() ? (long long)k * n_
                               : ((long long)k * n_ + 1) / 2;
    chosen_.assign(m_, 0);
  }

  KcsAnswer solve() {
    seed_incumbent();
    recurse(0, Rat(0), 0, true);
    EdgeSet w(m_);
    Rat cost(0);
    int size = 0;
    for (EdgeId e = 0; e < m_; ++e)
      if (best_set_[e]) {
        w.add(e);
        cost += c_[e];
        ++size;
      }
    return {size, cost, w};
  }

 private:
  bool connected_enough(const std::vector<char>& mask) const {
    EdgeSet s(m_);
    for (EdgeId e = 0; e < m_; ++e)
      if (mask[e]) s.add(e);
    return is_k_connected(edge_subgraph(g_, s), k_);
  }

  // Greedy feasible solution: satisfy degree demands cheapest-first, add
  // edges until k-connected, then reverse-delete.
  void seed_incumbent() {
    std::vector<EdgeId> asc(order_.rbegin(), order_.rend());
    std::vector<char> sel(m_, 0);
    std::vector<int> out(n_, 0), in(n_, 0);
    for (EdgeId e : asc) {
      const Edge ed = g_.edge(e);
      bool need = g_.directed()
                      ? out[ed.tail] < k_ || in[ed.head] < k_
                      : out[ed.tail] + in[ed.tail] < k_ ||
                            out[ed.head] + in[ed.head] < k_;
      if (need) {
        sel[e] = 1;
        ++out[ed.tail];
        ++in[ed.head];
      }
    }
    for (EdgeId e : asc) {
      if (connected_enough(sel)) break;
      if (!sel[e]) sel[e] = 1;
    }
    for (EdgeId e : order_) {
      if (!sel[e]) continue;
      sel[e] = 0;
      if (!connected_enough(sel)) sel[e] = 1;
    }
    best_set_ = sel;
    best_cost_ = Rat(0);
    for (EdgeId e = 0; e < m_; ++e)
      if (sel[e]) best_cost_ += c_[e];
  }

  // `dirty` marks that chosen_ gained an edge since the last connectivity
  // probe; along pure-exclusion chains the probe result cannot change.
  void recurse(int idx, Rat cur, int picked, bool dirty) {
    if (!(cur < best_cost_)) return;
    long long out_def = 0, in_def = 0;
    for (int v = 0; v < n_; ++v) {
      if (out_sel_[v] + out_avail_[v] < k_ || in_sel_[v] + in_avail_[v] < k_)
        return;
      if (!g_.directed()) {
        int deg = out_sel_[v] + in_sel_[v];
        out_def += std::max(0, k_ - deg);
      } else {
        out_def += std::max(0, k_ - out_sel_[v]);
        in_def += std::max(0, k_ - in_sel_[v]);
      }
    }
    long long need_deg = g_.directed() ? std::max(out_def, in_def)
                                       : (out_def + 1) / 2;
    long long need = std::max(need_deg, size_floor_ - picked);
    if (need > m_ - idx) return;
    if (need > 0) {
      Rat lb = cur + tail_sum_[m_ - (int)need];
      if (!(lb < best_cost_)) return;
    }
    if (out_def == 0 && in_def == 0 && dirty) {
      if (connected_enough(chosen_)) {
        // Feasible already; nonnegative costs make any superset no better.
        best_cost_ = cur;
        best_set_ = chosen_;
        return;
      }
      dirty = false;
    }
    if (idx == m_) return;
    EdgeId e = order_[idx];
    const Edge ed = g_.edge(e);
    --out_avail_[ed.tail];
    --in_avail_[ed.head];
    recurse(idx + 1, cur, picked, dirty);
    ++out_sel_[ed.tail];
    ++in_sel_[ed.head];
    chosen_[e] = 1;
    recurse(idx + 1, cur + c_[e], picked + 1, true);
    chosen_[e] = 0;
    --out_sel_[ed.tail];
    --in_sel_[ed.head];
    ++out_avail_[ed.tail];
    ++in_avail_[ed.head];
  }

  const MultiGraph& g_;
  int k_;
  const CostVector& c_;
  int m_, n_;
  long long size_floor_;
  std::vector<EdgeId> order_;
  std::vector<Rat> tail_sum_;
  std::vector<int> out_sel_, in_sel_, out_avail_, in_avail_;
  std::vector<char> chosen_, best_set_;
  Rat best_cost_;
};

}  // namespace

KcsAnswer brute_opt_kcs(const MultiGraph& g, int k,
                        const std::optional<CostVector>& c) {
  if (g.edge_count() > 24) throw too_large_error("brute_opt_kcs: m > 24");
  if (k < 1) throw std::invalid_argument("brute_opt_kcs: k < 1");
  if (!is_k_connected(g, k))
    throw std::invalid_argument("brute_opt_kcs: graph is not k-connected");
  CostVector costs = c ? *c : CostVector(g.edge_count(), Rat(1));
  return KcsSearch(g, k, costs).solve();
}

int brute_max_conn_m_edges(const MultiGraph& g, int m) {
  if (g.edge_count() > 24) throw too_large_error("brute_max_conn: m > 24");
  int k_star = 0;
  for (int k = 1; k <= g.node_count() - 1; ++k) {
    if (!is_k_connected(g, k)) break;
    // opt(k) is nondecreasing in k, so stop at the first budget overflow.
    if (brute_opt_kcs(g, k).size > m) break;
    k_star = k;
  }
  return k_star;
}

int brute_edge_connectivity(const MultiGraph& g) {
  const int n = g.node_count();
  if (n < 2 || n > 20)
    throw too_large_error("brute_edge_connectivity: need 2 <= n <= 20");
  int best = g.edge_count() + 1;
  for (NodeMask s = 1; s < (NodeMask{1} << n) - 1; ++s) {
    int cut = g.directed() ? delta(g, s, CutSide::Leaving).count()
                           : delta(g, s).count();
    best = std::min(best, cut);
  }
  return best;
}

namespace {

bool connected_without(const MultiGraph& g, NodeMask removed) {
  const int n = g.node_count();
  std::vector<char> alive(n);
  int start = -1, alive_count = 0;
  for (int v = 0; v < n; ++v) {
    alive[v] = !((removed >> v) & 1);
    if (alive[v]) {
      ++alive_count;
      if (start < 0) start = v;
    }
  }
  if (alive_count <= 1) return true;
  auto reaches_all = [&](int s, bool forward) {
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::deque<int> q{s};
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const auto& e : g.edges()) {
        int a = forward ? e.tail : e.head, b = forward ? e.head : e.tail;
        if (!g.directed() && a != v && b == v) std::swap(a, b);
        if (a != v) continue;
        if (!alive[b] || seen[b]) continue;
        seen[b] = 1;
        ++cnt;
        q.push_back(b);
      }
    }
    return cnt == alive_count;
  };
  if (!reaches_all(start, true)) return false;
  if (g.directed() && !reaches_all(start, false)) return false;
  return true;
}

}  // namespace

int brute_node_connectivity(const MultiGraph& g) {
  const int n = g.node_count();
  if (n < 2 || n > 20)
    throw too_large_error("brute_node_connectivity: need 2 <= n <= 20");
  int best = n - 1;
  for (NodeMask w = 0; w < (NodeMask{1} << n); ++w) {
    int size = __builtin_popcountll(w);
    if (n - size < 2 || size >= best) continue;
    if (!connected_without(g, w)) best = size;
  }
  return best;
}

}  // namespace oracle
}  // namespace lec
