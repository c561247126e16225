#ifndef HH2_QUIVER_HPP
#define HH2_QUIVER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/field.hpp"

namespace hh2 {

struct Arrow {
  std::string name;
  int src = -1;
  int dst = -1;
};

// Finite quiver: named vertices and named arrows. Declaration order is kept;
// it doubles as the default path-order precedence.
class Quiver {
 public:
  int add_vertex(const std::string& name);
  int add_arrow(const std::string& name, int src, int dst);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  int find_vertex(const std::string& name) const;  // -1 if absent
  int find_arrow(const std::string& name) const;
  const std::vector<int>& arrows_from(int v) const { return out_[v]; }
  const std::vector<int>& arrows_to(int v) const { return in_[v]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
  std::vector<std::vector<int>> out_, in_;
};

// A path: either a trivial path at a vertex or a composable arrow sequence,
// written left to right (arrows[0] is traversed first).
struct Path {
  int origin = -1;
  int terminus = -1;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a) {
    return Path{q.arrow(a).src, q.arrow(a).dst, {a}};
  }

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  bool operator==(const Path& o) const {
    return origin == o.origin && arrows == o.arrows;
  }
  bool operator!=(const Path& o) const { return !(*this == o); }
  std::string str(const Quiver& q) const;
};

// Structural total order on paths, independent of any declared precedence.
// Used only for canonical storage of linear combinations.
bool structural_less(const Path& p, const Path& q);

// Concatenation; nullopt when the endpoints do not match (the product is 0 in KQ).
std::optional<Path> compose(const Path& p, const Path& q);

// Length-lexicographic order induced by a precedence on vertices and arrows.
// Rank 0 is the greatest; any vertex sits below every path of length >= 1.
class PathOrder {
 public:
  static PathOrder declaration(const Quiver& q);
  static PathOrder from_ranks(std::vector<int> arrow_rank, std::vector<int> vertex_rank);

  bool less(const Path& p, const Path& q) const;
  bool greater(const Path& p, const Path& q) const { return less(q, p); }
  int arrow_rank(int a) const { return arrow_rank_[a]; }
  const std::vector<int>& arrow_ranks() const { return arrow_rank_; }
  const std::vector<int>& vertex_ranks() const { return vertex_rank_; }

 private:
  std::vector<int> arrow_rank_;
  std::vector<int> vertex_rank_;
};

// K-linear combination of paths in the free path algebra, canonically sorted
// (structural order) with non-zero coefficients and distinct paths.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement zero() { return {}; }
  static FreeElement of_path(const Field& f, Path p) {
    FreeElement e;
    e.terms_.emplace_back(f.one(), std::move(p));
    return e;
  }
  static FreeElement make(const Field& f, std::vector<std::pair<Scalar, Path>> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Scalar, Path>>& terms() const { return terms_; }
  bool is_uniform() const;  // zero counts as uniform
  int origin() const { return terms_.empty() ? -1 : terms_.front().second.origin; }
  int terminus() const { return terms_.empty() ? -1 : terms_.front().second.terminus; }
  int max_term_length() const;
  int min_term_length() const;
  bool operator==(const FreeElement& o) const;
  std::string str(const Quiver& q) const;

 private:
  std::vector<std::pair<Scalar, Path>> terms_;
};

FreeElement add(const Field& f, const FreeElement& a, const FreeElement& b);
FreeElement scale(const Field& f, const Scalar& c, const FreeElement& a);
FreeElement kq_multiply(const Field& f, const FreeElement& a, const FreeElement& b);

bool lenlex_less(const Path& p, const Path& q, const PathOrder& ord);
// Largest path occurring in f; f must be non-zero.
Path tip(const FreeElement& f, const PathOrder& ord);
Scalar tip_coefficient(const FreeElement& f, const PathOrder& ord);
// All paths of length <= max_len, sorted ascending by lenlex.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len, const PathOrder& ord);

}  // namespace hh2

#endif
