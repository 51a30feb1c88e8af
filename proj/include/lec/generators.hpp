#ifndef LEC_GENERATORS_HPP
#define LEC_GENERATORS_HPP

#include <random>

#include "lec/edge_cover.hpp"
#include "lec/graph.hpp"
#include "lec/rational.hpp"

namespace lec {

/// Deterministic source of bounded draws: std::mt19937 (C++ standard
/// Mersenne Twister) with rejection-free modulo reduction, so the stream is
/// reproducible bit-for-bit from the seed on any platform.
class Rng {
 public:
  explicit Rng(unsigned int seed) : engine_(seed) {}
  /// Uniform-ish value in [0, bound); bound >= 1.
  unsigned int below(unsigned int bound) { return engine_() % bound; }

 private:
  std::mt19937 engine_;
};

/// Circulant Harary graph H(k,n): ceil(kn/2) edges, node connectivity
/// exactly k (verified post-construction). Requires 2 <= k < n.
MultiGraph harary(int k, int n);

/// harary(k,n) (or a regular multigraph when n <= k) plus `extra` random
/// non-loop edges; edge connectivity >= k re-verified before returning.
MultiGraph random_k_edge_connected(int n, int k, int extra, unsigned int seed);

struct BetaMetricInstance {
  MultiGraph g;  ///< complete undirected graph on n nodes
  CostVector c;
  Rat beta;
};

/// Complete graph with costs on the 1/1024 rational grid drawn from
/// [1, 2 beta]; any such costs satisfy the beta-triangle inequality, and
/// beta = 1/2 degenerates to uniform cost 1. The triple inequality is
/// re-checked exhaustively before returning.
BetaMetricInstance beta_metric_instance(int n, const Rat& beta,
                                        unsigned int seed);

}  // namespace lec

#endif  // LEC_GENERATORS_HPP
