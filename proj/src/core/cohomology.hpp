#ifndef HH2_COHOMOLOGY_HPP
#define HH2_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "core/resolution.hpp"

namespace hh2 {

// Basis of Hom(Q^i, Lambda): a map is determined by the images of the summand
// generators, so the basis items are (summand, nontip in o(s) Lambda t(s)).
struct HomBasis {
  std::vector<std::pair<int, int>> items;  // (summand, nontip index)

  int dim() const { return static_cast<int>(items.size()); }
  int flat_index(int summand, int nontip) const;  // -1 when absent
};

HomBasis hom_basis_of(const QuotientAlgebra& A, const ResolutionFront& front, int degree);

// A vector over the Hom(Q^2, Lambda) basis.
struct Cocycle {
  SparseVec vec;
};

// d1, d2, d3 matrices plus their Hom bases; rows of mat_d[i] are indexed by
// Hom(Q^i) and columns by Hom(Q^{i-1}).
struct CochainData {
  HomBasis hom[4];
  Matrix d1, d2, d3;
  CochainData(const Field& f) : d1(f, 0, 0), d2(f, 0, 0), d3(f, 0, 0) {}
};

CochainData cochain_data(const QuotientAlgebra& A, const ResolutionFront& front);
Matrix matrix_of_d(const QuotientAlgebra& A, const ResolutionFront& front, int i);

struct CohomologyReport {
  int hh0 = 0, hh1 = 0, hh2 = 0;
  int dim_hom[4] = {0, 0, 0, 0};
  int rank_d1 = 0, rank_d2 = 0, rank_d3 = 0;
  std::vector<Cocycle> basis;  // representatives of a basis of HH^2
};

CohomologyReport hh_report(const QuotientAlgebra& A, const ResolutionFront& front,
                           const CochainData& data);

// True iff c lies in the column span of the d2 matrix.
bool cocycle_is_coboundary(const QuotientAlgebra& A, const CochainData& data, const Cocycle& c);

bool is_cocycle(const QuotientAlgebra& A, const CochainData& data, const Cocycle& c);

// Assemble a cocycle from (relation index, value) pairs.
Cocycle make_cocycle(const QuotientAlgebra& A, const CochainData& data,
                     const std::vector<std::pair<int, AlgElement>>& values);

// Pretty form: per-relation values, zero summands skipped.
std::vector<std::pair<int, AlgElement>> cocycle_values(const QuotientAlgebra& A,
                                                       const CochainData& data, const Cocycle& c);

}  // namespace hh2

#endif
