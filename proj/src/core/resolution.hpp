#ifndef HH2_RESOLUTION_HPP
#define HH2_RESOLUTION_HPP

#include <string>
#include <tuple>
#include <vector>

#include "core/quotient.hpp"

namespace hh2 {

// A minimal generating set of the defining ideal, kept in declaration order.
struct RelationSet {
  std::vector<FreeElement> elements;
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(elements.size()); }
  int origin(int i) const { return elements[i].origin(); }
  int terminus(int i) const { return elements[i].terminus(); }
};

// Greedy subset of `gens` whose images form a basis of I/(JI + IJ), certified
// against the syzygy multiplicities of the simple right modules.
RelationSet minimalize_relations(const QuotientAlgebra& A, const std::vector<FreeElement>& gens,
                                 const std::vector<std::string>& labels = {});

// Degree-3 element of the Green-Solberg-Zacharia construction:
//   y = sum_i f2[right[i].rel] * right[i].cofactor          (cofactors unique)
//     = sum_k left[k].c * left[k].q * f2[left[k].rel] * left[k].r
// with every right cofactor and every q inside the arrow ideal.
struct F3Element {
  FreeElement y;
  int origin = -1, terminus = -1;
  std::string label;
  struct RightPart {
    int rel;
    FreeElement cofactor;
  };
  struct LeftPart {
    Scalar c;
    Path q;
    int rel;
    Path r;
  };
  std::vector<RightPart> right;
  std::vector<LeftPart> left;
};

// Requires A to have been built from exactly the relations in f2, with
// division tracking on.
std::vector<F3Element> compute_f3(const QuotientAlgebra& A, const RelationSet& f2);

// One term lambda (x)_summand mu of a bimodule-map image.
struct TensorTerm {
  AlgElement left;
  int summand;
  AlgElement right;
};

// Vector-space basis of a projective bimodule (+)_s Lambda o(s) (x) t(s) Lambda:
// triples (left nontip, summand, right nontip).
struct BimodBasis {
  std::vector<std::tuple<int, int, int>> items;
  std::vector<int> summand_offset;           // per summand, start of its block
  std::vector<std::vector<int>> left_list;   // per summand: nontips with terminus o(s)
  std::vector<std::vector<int>> right_list;  // per summand: nontips with origin t(s)

  int dim() const { return static_cast<int>(items.size()); }
  int flat_index(int left_nontip, int summand, int right_nontip) const;
};

// The front Q^3 -> Q^2 -> Q^1 -> Q^0 -> Lambda of the minimal projective
// bimodule resolution, as formal maps plus realized matrices.
struct ResolutionFront {
  RelationSet f2;
  std::vector<F3Element> f3;
  std::vector<std::pair<int, int>> q_summands[4];  // (origin, terminus) per degree

  std::vector<std::vector<TensorTerm>> a1, a2, a3;  // images of generators
  BimodBasis basis[4];
  Matrix mat_a1, mat_a2, mat_a3;  // realized, rows = Q^{i-1} basis, cols = Q^i basis
  Matrix mat_g;                   // multiplication map Q^0 -> Lambda

  ResolutionFront(const Field& f)
      : mat_a1(f, 0, 0), mat_a2(f, 0, 0), mat_a3(f, 0, 0), mat_g(f, 0, 0) {}
};

ResolutionFront build_front(const QuotientAlgebra& A, const RelationSet& f2);

struct ExactnessReport {
  bool ok = false;
  int dim_lambda = 0;
  int dim_q[4] = {0, 0, 0, 0};
  int rank_a1 = 0, rank_a2 = 0, rank_a3 = 0;
  bool g_a1_zero = false, a1_a2_zero = false, a2_a3_zero = false;
  bool rank1_ok = false, rank2_ok = false, rank3_ok = false;
  std::string str() const;
};

ExactnessReport check_exactness(const QuotientAlgebra& A, const ResolutionFront& front);

// Internal helper shared with the cohomology layer and tests: apply the formal
// map `images` (defined on generators of the domain) to a realized basis
// element of `dom`, writing the result into column `col` of `out` over the
// codomain basis `cod`.
void realize_map_column(const QuotientAlgebra& A, const std::vector<std::vector<TensorTerm>>& images,
                        const BimodBasis& dom, const BimodBasis& cod, int dom_flat, Matrix& out,
                        int col);

}  // namespace hh2

#endif
