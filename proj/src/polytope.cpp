#include "lec/polytope.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lec {

ScaleFactor theorem1_mu(int n, int k, int ell, const Rat& xE) {
  if (ell < 1 || ell > k - 1)
    throw std::invalid_argument("theorem1_mu: need 1 <= ell <= k-1");
  if (n < 2) throw std::invalid_argument("theorem1_mu: n < 2");
  if (xE < Rat((long long)k * n, 2))
    throw std::invalid_argument("theorem1_mu: x(E) below kn/2");
  bool even_or_large = ((long long)ell * n) % 2 == 0 ||
                       xE >= Rat((long long)k * n, 2) + Rat(k, 2LL * ell);
  if (even_or_large) return {Rat(ell, k), MuCase::EvenOrLarge};
  return {Rat((long long)ell * n + 1) / (Rat(2) * xE), MuCase::OddSmall};
}

namespace {

struct SResult {
  std::optional<Constraint> violation;
  std::vector<Constraint> tight;
};

// Constraints of family (2) for one S. Fast mode: for each feasible |F| = f
// only the F maximizing x(F) is binding; that F is the f largest x-values
// on delta(S) (ties by edge id). Full mode enumerates every F.
SResult check_s(const MultiGraph& g, const FracVector& x, int ell, NodeMask s,
                const PolytopeOptions& opts) {
  SResult res;
  const int m = g.edge_count();
  std::vector<EdgeId> ds;
  Rat zeta_sum(0);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge ed = g.edge(e);
    bool t = (s >> ed.tail) & 1, h = (s >> ed.head) & 1;
    if (t || h) zeta_sum += x[e];
    if (t != h) ds.push_back(e);
  }
  const long long size_s = __builtin_popcountll(s);
  const long long ls = (long long)ell * size_s;

  auto record = [&](const std::vector<EdgeId>& f_edges, const Rat& xf) {
    long long f = (long long)f_edges.size();
    Rat lhs = zeta_sum - xf;
    Rat rhs = Rat(ls, 2) - Rat(f - 1, 2);
    if (lhs < rhs && !res.violation) {
      Constraint c{s, EdgeSet(m), lhs, rhs};
      for (EdgeId e : f_edges) c.f.add(e);
      res.violation = c;
    } else if (lhs == rhs) {
      Constraint c{s, EdgeSet(m), lhs, rhs};
      for (EdgeId e : f_edges) c.f.add(e);
      res.tight.push_back(c);
    }
  };

  if (!opts.full_enumeration) {
    std::vector<EdgeId> order = ds;
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      if (x[a] != x[b]) return x[b] < x[a];
      return a < b;
    });
    Rat prefix(0);
    std::vector<EdgeId> top;
    for (long long f = 0; f <= (long long)order.size() && ls - f >= 1; ++f) {
      if (f > 0) {
        top.push_back(order[f - 1]);
        prefix += x[order[f - 1]];
      }
      if ((ls - f) % 2 == 1) record(top, prefix);
      if (res.violation) return res;
    }
    return res;
  }

  if ((int)ds.size() > opts.max_cut_edges)
    throw too_large_error("cover polytope: |delta(S)| exceeds enumeration cap");
  for (std::uint64_t fm = 0; fm < (std::uint64_t{1} << ds.size()); ++fm) {
    long long f = __builtin_popcountll(fm);
    if (ls - f < 1 || (ls - f) % 2 == 0) continue;
    std::vector<EdgeId> f_edges;
    Rat xf(0);
    for (size_t i = 0; i < ds.size(); ++i)
      if ((fm >> i) & 1) {
        f_edges.push_back(ds[i]);
        xf += x[ds[i]];
      }
    record(f_edges, xf);
    if (res.violation) return res;
  }
  return res;
}

}  // namespace

MembershipVerdict in_integral_cover_polytope(const MultiGraph& g,
                                             const FracVector& x, int ell,
                                             const PolytopeOptions& opts) {
  if (g.directed())
    throw std::invalid_argument("cover polytope: undirected only");
  if (ell < 1) throw std::invalid_argument("cover polytope: ell < 1");
  if ((int)x.size() != g.edge_count())
    throw std::invalid_argument("cover polytope: vector size mismatch");
  for (const Rat& v : x)
    if (v < Rat(0) || v > Rat(1))
      throw std::invalid_argument("cover polytope: x outside [0,1]");
  const int n = g.node_count();
  if (n > opts.max_nodes)
    throw too_large_error("cover polytope: n exceeds enumeration cap");

  MembershipVerdict verdict;
  // Degree constraints (the fractional polytope part).
  for (NodeId v = 0; v < n && verdict.ok; ++v) {
    Rat dv(0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge ed = g.edge(e);
      if (ed.tail == v || ed.head == v) dv += x[e];
    }
    Constraint c{NodeMask{1} << v, EdgeSet(g.edge_count()), dv, Rat(ell)};
    if (dv < Rat(ell)) {
      verdict.ok = false;
      verdict.violation = c;
    } else if (dv == Rat(ell)) {
      verdict.tight.push_back(c);
    }
  }
  if (!verdict.ok) return verdict;

  const long long total = 1LL << n;
  std::vector<SResult> results((size_t)total);
  bool use_parallel = opts.parallel && !opts.full_enumeration;
#ifdef _OPENMP
  if (use_parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long s = 1; s < total; ++s)
      results[(size_t)s] = check_s(g, x, ell, (NodeMask)s, opts);
  } else
#endif
  {
    (void)use_parallel;
    for (long long s = 1; s < total; ++s) {
      results[(size_t)s] = check_s(g, x, ell, (NodeMask)s, opts);
      if (results[(size_t)s].violation) break;
    }
  }
  for (long long s = 1; s < total; ++s) {
    SResult& r = results[(size_t)s];
    if (r.violation) {
      verdict.ok = false;
      verdict.violation = r.violation;
      return verdict;
    }
    for (auto& c : r.tight) verdict.tight.push_back(std::move(c));
  }
  return verdict;
}

FracConVerdict in_frac_con(const MultiGraph& g, const FracVector& x, int k) {
  if (k < 1) throw std::invalid_argument("in_frac_con: k < 1");
  FracCut cut = fractional_edge_connectivity(g, x);
  return {cut.value >= Rat(k), cut.value, cut.side};
}

Theorem1Report verify_theorem1(const MultiGraph& g, const FracVector& x, int k,
                               int ell, const PolytopeOptions& opts) {
  FracConVerdict fc = in_frac_con(g, x, k);
  if (!fc.ok)
    throw hypothesis_error("verify_theorem1: x is not in P^f_con(G,k)",
                           fc.min_cut, fc.witness);
  Rat xE(0);
  for (const Rat& v : x) xE += v;

  Theorem1Report report;
  report.mu = theorem1_mu(g.node_count(), k, ell, xE);
  report.xE = xE;
  FracVector scaled(x.size());
  for (size_t e = 0; e < x.size(); ++e) scaled[e] = report.mu.mu * x[e];
  report.primary = in_integral_cover_polytope(g, scaled, ell, opts);
  if (report.mu.mu_case == MuCase::OddSmall) {
    Rat factor = Rat(ell, k) + Rat(1, (long long)k * g.node_count());
    for (size_t e = 0; e < x.size(); ++e) scaled[e] = factor * x[e];
    report.relaxed = in_integral_cover_polytope(g, scaled, ell, opts);
  }
  return report;
}

}  // namespace lec
