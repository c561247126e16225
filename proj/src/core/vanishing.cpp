#include "core/vanishing.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hh2 {

BoundarySet boundary_set(const RelationSet& f2) {
  std::set<std::pair<int, int>> s;
  for (int i = 0; i < f2.size(); ++i) s.emplace(f2.origin(i), f2.terminus(i));
  BoundarySet b;
  b.pairs.assign(s.begin(), s.end());
  return b;
}

std::vector<Path> g2_set(const QuotientAlgebra& A, const RelationSet& f2) {
  std::vector<Path> out;
  for (auto [v, w] : boundary_set(f2).pairs)
    for (const Path& p : A.hom_basis_paths(v, w)) out.push_back(p);
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    return A.order().less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool occurs_in(int arrow, const Path& p) {
  return std::find(p.arrows.begin(), p.arrows.end(), arrow) != p.arrows.end();
}

int occurrence_count(int arrow, const Path& p) {
  return static_cast<int>(std::count(p.arrows.begin(), p.arrows.end(), arrow));
}

std::vector<Path> layer0(const std::vector<Path>& X) {
  std::vector<Path> out;
  for (const Path& p : X) {
    bool has_private = false;
    for (int a : p.arrows) {
      bool elsewhere = false;
      for (const Path& q : X) {
        if (q == p) continue;
        if (occurs_in(a, q)) {
          elsewhere = true;
          break;
        }
      }
      if (!elsewhere) {
        has_private = true;
        break;
      }
    }
    if (has_private) out.push_back(p);
  }
  return out;
}

}  // namespace

SeparationAnalysis l_layers(const std::vector<Path>& X) {
  SeparationAnalysis an;
  for (const Path& p : X)
    if (std::find(an.set.begin(), an.set.end(), p) == an.set.end()) an.set.push_back(p);
  std::vector<Path> rest = an.set;
  while (!rest.empty()) {
    std::vector<Path> layer = layer0(rest);
    if (layer.empty()) break;
    std::vector<Path> next;
    for (const Path& p : rest)
      if (std::find(layer.begin(), layer.end(), p) == layer.end()) next.push_back(p);
    an.layers.push_back(std::move(layer));
    rest = std::move(next);
  }
  an.separated = rest.empty();
  return an;
}

VanishingVerdict vanishing_check(const QuotientAlgebra& A, const RelationSet& f2) {
  const Field& F = A.field();
  VanishingVerdict v;
  v.g2 = g2_set(A, f2);

  // Hypothesis (1): each boundary pair has v Lambda w = 0 or a single nontip.
  struct PairData {
    Path p;
    std::vector<std::pair<int, Path>> qs;  // (relation index, q)
  };
  std::map<std::pair<int, int>, PairData> pairs;
  for (auto [o, t] : boundary_set(f2).pairs) {
    const auto& basis = A.hom_basis(o, t);
    if (basis.empty()) continue;
    if (basis.size() > 1) {
      v.failure_reason = "dim vLw > 1 at (" + A.quiver().vertex_name(o) + ", " +
                         A.quiver().vertex_name(t) + ")";
      return v;
    }
    pairs[{o, t}] = PairData{A.nontips()[basis.front()], {}};
  }

  // Hypothesis (2): relations at those pairs are differences p - q.
  for (int i = 0; i < f2.size(); ++i) {
    auto it = pairs.find({f2.origin(i), f2.terminus(i)});
    if (it == pairs.end()) continue;
    const Path& p = it->second.p;
    const FreeElement& x = f2.elements[i];
    Scalar cp;
    for (const auto& [c, q] : x.terms())
      if (q == p) cp = c;
    if (cp.is_zero() || x.terms().size() != 2) {
      v.failure_reason = "relation " + f2.labels[i] + " is not of the form p - q";
      return v;
    }
    for (const auto& [c, q] : x.terms()) {
      if (q == p) continue;
      if (F.div(c, cp) != F.from_long(-1)) {
        v.failure_reason = "relation " + f2.labels[i] + " is not of the form p - q";
        return v;
      }
      it->second.qs.emplace_back(i, q);
    }
  }

  // Hypothesis (3): Y = {p_i} u {q_ij} satisfies L_0(Y) = Y.
  std::vector<Path> Y;
  auto push_unique = [&](const Path& p) {
    if (std::find(Y.begin(), Y.end(), p) == Y.end()) Y.push_back(p);
  };
  for (const auto& [k, d] : pairs) {
    push_unique(d.p);
    for (const auto& [i, q] : d.qs) push_unique(q);
  }
  std::vector<Path> l0 = layer0(Y);
  if (l0.size() != Y.size()) {
    for (const Path& p : Y)
      if (std::find(l0.begin(), l0.end(), p) == l0.end()) {
        v.failure_reason = "L0(Y) != Y: path " + p.str(A.quiver()) + " owns no private arrow";
        return v;
      }
  }

  // Hypothesis (4): each q has an associated arrow occurring exactly once.
  for (const auto& [k, d] : pairs) {
    for (const auto& [i, q] : d.qs) {
      int best = -1;
      for (int a : q.arrows) {
        if (occurrence_count(a, q) != 1) continue;
        bool elsewhere = false;
        for (const Path& other : Y) {
          if (other == q) continue;
          if (occurs_in(a, other)) {
            elsewhere = true;
            break;
          }
        }
        if (elsewhere) continue;
        // lenlex-least arrow = largest rank number
        if (best < 0 || A.order().arrow_rank(a) > A.order().arrow_rank(best)) best = a;
      }
      if (best < 0) {
        v.failure_reason = "no associated arrow occurring exactly once in " + q.str(A.quiver());
        return v;
      }
      v.witnesses.push_back(VanishingWitness{i, d.p, q, best});
    }
  }

  v.applicable = true;
  return v;
}

}  // namespace hh2
