#ifndef LEC_GRAPH_HPP
#define LEC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "lec/errors.hpp"

namespace lec {

using NodeId = int;
using EdgeId = int;

/// Node subsets are bitmasks; every subset-taking operation requires n <= 64.
using NodeMask = std::uint64_t;

inline NodeMask full_mask(int n) {
  return n >= 64 ? ~NodeMask{0} : ((NodeMask{1} << n) - 1);
}

struct Edge {
  NodeId tail;
  NodeId head;
};

/// Subset of the edge ids of one graph, with exact cardinality queries.
class EdgeSet {
 public:
  EdgeSet() : m_(0) {}
  explicit EdgeSet(int m) : m_(m), bits_((m + 63) / 64, 0) {}

  static EdgeSet full(int m) {
    EdgeSet s(m);
    for (int e = 0; e < m; ++e) s.add(e);
    return s;
  }

  int capacity() const { return m_; }

  void add(EdgeId e) {
    check(e);
    bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void remove(EdgeId e) {
    check(e);
    bits_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }
  bool contains(EdgeId e) const {
    check(e);
    return (bits_[e >> 6] >> (e & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (auto w : bits_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const { return count() == 0; }

  /// Member ids in increasing order.
  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    for (int e = 0; e < m_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  EdgeSet& operator|=(const EdgeSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  EdgeSet complement() const {
    EdgeSet s(m_);
    for (int e = 0; e < m_; ++e)
      if (!contains(e)) s.add(e);
    return s;
  }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.m_ == b.m_ && a.bits_ == b.bits_;
  }

 private:
  void check(EdgeId e) const {
    if (e < 0 || e >= m_) throw std::out_of_range("EdgeSet: edge id out of range");
  }
  int m_;
  std::vector<std::uint64_t> bits_;
};

/// Directed or undirected graph with parallel edges. Edge ids are positions
/// in the edge list and stay stable for the lifetime of the instance.
/// Self-loops are rejected at construction. Undirected edges are stored with
/// tail <= head. Values are treated as immutable once built.
class MultiGraph {
 public:
  MultiGraph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 0) throw std::invalid_argument("MultiGraph: negative node count");
  }

  EdgeId add_edge(NodeId u, NodeId v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::out_of_range("MultiGraph: endpoint out of range");
    if (u == v) throw std::invalid_argument("MultiGraph: self-loops rejected");
    if (!directed_ && u > v) std::swap(u, v);
    edges_.push_back({u, v});
    return (EdgeId)edges_.size() - 1;
  }

  int node_count() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  bool directed() const { return directed_; }
  Edge edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Undirected degree, or total degree (in+out) for directed graphs.
  int degree(NodeId v) const;
  int out_degree(NodeId v) const;  // directed only
  int in_degree(NodeId v) const;   // directed only
  int min_degree() const;

 private:
  int n_;
  bool directed_;
  std::vector<Edge> edges_;
};

enum class CutSide { All, Leaving, Entering };

/// Edges with exactly one endnode in s. For directed graphs the mode selects
/// all crossing arcs, arcs leaving s, or arcs entering s.
EdgeSet delta(const MultiGraph& g, NodeMask s, CutSide mode = CutSide::All);

/// Edges with at least one endnode in s.
EdgeSet zeta(const MultiGraph& g, NodeMask s);

/// Undirected bipartite graph on 2n nodes (originals then copies): arc u->v
/// of the input becomes edge {u, v+n}, keeping the same edge id.
MultiGraph bipartite_double(const MultiGraph& g);

/// Same node set, edges restricted to the given subset (ids are remapped to
/// positions within the subset's increasing id order).
MultiGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep);

/// Degree of v in (V, s); directed graphs report out/in via the mode.
int degree_in(const MultiGraph& g, const EdgeSet& s, NodeId v,
              CutSide mode = CutSide::All);

/// True iff the selected edges contain no cycle, parallel edges counting as
/// a cycle of length two. Directed inputs are judged through their bipartite
/// double, i.e. as undirected forests on 2n nodes.
bool is_forest(const MultiGraph& g, const EdgeSet& s);

void check_mask(const MultiGraph& g, NodeMask s);

}  // namespace lec

#endif  // LEC_GRAPH_HPP
