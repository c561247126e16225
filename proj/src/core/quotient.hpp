#ifndef HH2_QUOTIENT_HPP
#define HH2_QUOTIENT_HPP

#include <map>
#include <vector>

#include "core/matrix.hpp"
#include "core/presentation.hpp"

namespace hh2 {

// Element of the quotient algebra written in the nontip basis:
// (nontip index, coefficient) pairs sorted by index.
struct AlgElement {
  SparseVec terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgElement& o) const { return terms == o.terms; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }
};

// One summand of a two-sided expression over the defining relations:
// coefficient * (u . relation[rel] . v).
struct DivisionTerm {
  Scalar c;
  Path u;
  int rel = -1;
  Path v;
};

// The finite-dimensional algebra KQ/I presented by relations under a fixed
// length-lexicographic order. Construction certifies, exactly:
//   * J^N is contained in I for the reported nilpotency index N (and N is least),
//   * the non-pivot paths of length < N are precisely NonTip(I) below N,
// by row-reducing the two-sided relation multiples inside a length window
// [0, L] and checking (a) every path of length N..L reduces to zero and
// (b) the short reduction rows stay reduced-to-zero under one-arrow
// multiplication on either side. Immutable once built.
class QuotientAlgebra {
 public:
  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const Field& field() const { return pres_.field; }
  const PathOrder& order() const { return pres_.order; }

  int nilpotency_index() const { return nilp_; }
  int truncation_length() const { return trunc_; }
  int dimension() const { return static_cast<int>(nontips_.size()); }
  const std::vector<Path>& nontips() const { return nontips_; }  // ascending lenlex
  const std::vector<Path>& minimal_tips() const { return min_tips_; }
  int nontip_index(const Path& p) const;  // -1 when p is not a nontip
  const std::vector<int>& hom_basis(int v, int w) const;
  std::vector<Path> hom_basis_paths(int v, int w) const;

  AlgElement normal_form(const FreeElement& f) const;
  AlgElement normal_form(const Path& p) const;
  AlgElement of_vertex(int v) const;
  FreeElement lift(const AlgElement& x) const;
  AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
  AlgElement scalar_multiple(const Scalar& c, const AlgElement& x) const;
  AlgElement add_elements(const AlgElement& x, const AlgElement& y) const;
  AlgElement right_mult_arrow(const AlgElement& x, int a) const;
  AlgElement left_mult_arrow(int a, const AlgElement& x) const;
  std::string element_str(const AlgElement& x) const;

  // Exact two-sided expression of f over the presentation's relations.
  // Requires a division-tracking build; throws if f is not in the ideal.
  bool tracks_divisions() const { return tracked_; }
  std::vector<DivisionTerm> divide(const FreeElement& f) const;

  friend QuotientAlgebra build_quotient(const Presentation&, int, bool);

 private:
  struct DivPayload {
    std::vector<DivisionTerm> t;
    void axpy(const Field& f, const Scalar& c, const DivPayload& o);
    void scale(const Field& f, const Scalar& c);
  };

  explicit QuotientAlgebra(Presentation p)
      : pres_(std::move(p)), rref_(pres_.field, 0) {}

  using PathKey = std::vector<int>;  // origin followed by arrow indices
  static PathKey key_of(const Path& p);
  int col_of(const Path& p) const;  // -1 when beyond the window

  Presentation pres_;
  bool tracked_ = false;
  int nilp_ = 0;
  int trunc_ = 0;
  std::vector<Path> cols_;  // all paths of length <= trunc_, descending lenlex
  std::map<PathKey, int> col_index_;
  Rref<DivPayload> rref_;
  std::vector<Path> nontips_;
  std::vector<int> nontip_of_col_;
  std::vector<Path> min_tips_;
  std::map<std::pair<int, int>, std::vector<int>> hom_;
  std::vector<int> empty_;
};

QuotientAlgebra build_quotient(const Presentation& p, int cap = 64, bool track_divisions = false);

}  // namespace hh2

#endif
