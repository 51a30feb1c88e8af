#ifndef LEC_POLYTOPE_HPP
#define LEC_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "lec/connectivity.hpp"
#include "lec/graph.hpp"
#include "lec/rational.hpp"

namespace lec {

/// Fractional point on the edges, componentwise in [0,1].
using FracVector = std::vector<Rat>;

enum class MuCase { EvenOrLarge, OddSmall };

struct ScaleFactor {
  Rat mu;
  MuCase mu_case;
};

/// mu = ell/k when ell*n is even or xE >= kn/2 + k/(2 ell), otherwise
/// (ell*n + 1) / (2 xE). Requires 1 <= ell <= k-1 and xE >= kn/2.
ScaleFactor theorem1_mu(int n, int k, int ell, const Rat& xE);

struct Constraint {
  NodeMask s;
  EdgeSet f;
  Rat lhs;
  Rat rhs;
};

struct MembershipVerdict {
  bool ok = true;
  std::optional<Constraint> violation;  ///< lhs < rhs exactly, when !ok
  std::vector<Constraint> tight;        ///< lhs = rhs pairs found
};

struct PolytopeOptions {
  int max_nodes = 10;        ///< enumeration cap on n (hard error beyond)
  int max_cut_edges = 16;    ///< per-S cap on |delta(S)| in full-enum mode
  bool full_enumeration = false;  ///< enumerate every F instead of the
                                  ///< per-cardinality worst case
  bool parallel = true;
};

/// Membership of x in the integral ell-edge-cover polytope, decided by the
/// complete description: degree constraints plus, for every S and every
/// F subseteq delta(S) with ell|S| - |F| >= 1 odd,
/// x(zeta(S)\F) >= ell|S|/2 - (|F|-1)/2. The default mode checks, for each
/// cardinality f, only the F maximizing x(F) (the f largest x-values on
/// delta(S)), which dominates every other F of that size exactly; the
/// full-enumeration mode checks all F and is kept as the reference.
MembershipVerdict in_integral_cover_polytope(const MultiGraph& g,
                                             const FracVector& x, int ell,
                                             const PolytopeOptions& opts = {});

struct FracConVerdict {
  bool ok;
  Rat min_cut;
  NodeMask witness;  ///< minimizing cut side when !ok
};

/// x in P^f_con(g,k), i.e. every cut has x-value >= k.
FracConVerdict in_frac_con(const MultiGraph& g, const FracVector& x, int k);

/// Thrown when the x handed to verify_theorem1 is not fractionally
/// k-edge-connected; carries the violated cut.
struct hypothesis_error : std::runtime_error {
  hypothesis_error(const std::string& what, Rat cut_value, NodeMask cut_side)
      : std::runtime_error(what), value(cut_value), side(cut_side) {}
  Rat value;
  NodeMask side;
};

struct Theorem1Report {
  ScaleFactor mu;
  Rat xE;
  MembershipVerdict primary;               ///< mu * x in P_cov
  std::optional<MembershipVerdict> relaxed;  ///< (ell/k + 1/(kn)) x, odd-small
  bool ok() const {
    return primary.ok && (!relaxed || relaxed->ok);
  }
};

/// Scales x by mu and checks integral cover-polytope membership; in the
/// odd-small case also checks the weaker factor ell/k + 1/(kn).
Theorem1Report verify_theorem1(const MultiGraph& g, const FracVector& x, int k,
                               int ell, const PolytopeOptions& opts = {});

}  // namespace lec

#endif  // LEC_POLYTOPE_HPP
