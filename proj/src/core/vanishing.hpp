#ifndef HH2_VANISHING_HPP
#define HH2_VANISHING_HPP

#include <string>
#include <vector>

#include "core/resolution.hpp"

namespace hh2 {

struct BoundarySet {
  std::vector<std::pair<int, int>> pairs;  // sorted, unique
};

BoundarySet boundary_set(const RelationSet& f2);

// Union of v NonTip(I) w over the boundary pairs, lenlex sorted.
std::vector<Path> g2_set(const QuotientAlgebra& A, const RelationSet& f2);

// Layer decomposition: L_0(X) holds the paths owning a private arrow, and
// L_i(X) = L_0(X minus the earlier layers). Separated iff the layers exhaust X.
struct SeparationAnalysis {
  std::vector<Path> set;                  // deduplicated input
  std::vector<std::vector<Path>> layers;  // L_0, L_1, ... (no trailing empties)
  bool separated = false;
};

SeparationAnalysis l_layers(const std::vector<Path>& X);

struct VanishingWitness {
  int rel;     // index into f2, a relation of shape p - q
  Path p, q;
  int arrow;   // associated arrow of q, occurring exactly once
};

struct VanishingVerdict {
  bool applicable = false;
  std::vector<Path> g2;
  std::vector<VanishingWitness> witnesses;
  std::string failure_reason;  // first failed hypothesis when not applicable
};

// Sufficient condition for HH^2 = 0: every boundary pair has v Lambda w zero or
// a single nontip p, the relations there are differences p - q, the p's and
// q's form a set with L_0(Y) = Y, and each q owns a once-occurring private
// arrow. Requires f2 minimal.
VanishingVerdict vanishing_check(const QuotientAlgebra& A, const RelationSet& f2);

}  // namespace hh2

#endif
