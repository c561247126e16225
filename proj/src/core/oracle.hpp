#ifndef HH2_ORACLE_HPP
#define HH2_ORACLE_HPP

#include "core/quotient.hpp"

namespace hh2 {

struct BarDims {
  int hh0 = 0, hh1 = 0, hh2 = 0;
};

// Brute-force HH^0..HH^2 from the vertex-relative reduced bar complex
// C^n = Hom_{E,E}(J^{(x)_E n}, Lambda) with the standard alternating-sum
// differential. Independent of the resolution pipeline. Throws
// Error::Kind::limit when dim Lambda exceeds the limit.
BarDims bar_hh(const QuotientAlgebra& A, int dim_limit = 60);

}  // namespace hh2

#endif
