#include "core/cohomology.hpp"

#include <algorithm>

namespace hh2 {

int HomBasis::flat_index(int summand, int nontip) const {
  auto it = std::lower_bound(items.begin(), items.end(), std::make_pair(summand, nontip));
  if (it == items.end() || *it != std::make_pair(summand, nontip)) return -1;
  return static_cast<int>(it - items.begin());
}

HomBasis hom_basis_of(const QuotientAlgebra& A, const ResolutionFront& front, int degree) {
  HomBasis b;
  const auto& summands = front.q_summands[degree];
  for (size_t s = 0; s < summands.size(); ++s)
    for (int nt : A.hom_basis(summands[s].first, summands[s].second))
      b.items.emplace_back(static_cast<int>(s), nt);
  return b;
}

// Column of d_i at the basis map phi_{(s', b')}: evaluate phi . A_i on each
// generator of Q^i.
static Matrix build_d(const QuotientAlgebra& A, const ResolutionFront& front, int i,
                      const HomBasis& dom, const HomBasis& cod) {
  const auto& images = i == 1 ? front.a1 : i == 2 ? front.a2 : front.a3;
  Matrix m(A.field(), cod.dim(), dom.dim());
  for (int col = 0; col < dom.dim(); ++col) {
    auto [sp, bp] = dom.items[col];
    AlgElement value{SparseVec{{bp, A.field().one()}}};
    for (size_t s = 0; s < images.size(); ++s) {
      AlgElement acc;
      for (const TensorTerm& t : images[s]) {
        if (t.summand != sp) continue;
        acc = A.add_elements(acc, A.multiply(A.multiply(t.left, value), t.right));
      }
      for (const auto& [nt, c] : acc.terms) {
        int row = cod.flat_index(static_cast<int>(s), nt);
        if (row < 0) throw Error(Error::Kind::internal, "cochain value outside Hom basis");
        m.add_to(row, col, c);
      }
    }
  }
  return m;
}

CochainData cochain_data(const QuotientAlgebra& A, const ResolutionFront& front) {
  CochainData d(A.field());
  for (int i = 0; i < 4; ++i) d.hom[i] = hom_basis_of(A, front, i);
  d.d1 = build_d(A, front, 1, d.hom[0], d.hom[1]);
  d.d2 = build_d(A, front, 2, d.hom[1], d.hom[2]);
  d.d3 = build_d(A, front, 3, d.hom[2], d.hom[3]);
  return d;
}

Matrix matrix_of_d(const QuotientAlgebra& A, const ResolutionFront& front, int i) {
  if (i < 1 || i > 3) throw Error(Error::Kind::invalid, "d index must be 1, 2 or 3");
  HomBasis dom = hom_basis_of(A, front, i - 1);
  HomBasis cod = hom_basis_of(A, front, i);
  return build_d(A, front, i, dom, cod);
}

CohomologyReport hh_report(const QuotientAlgebra& A, const ResolutionFront& front,
                           const CochainData& data) {
  CohomologyReport rep;
  for (int i = 0; i < 4; ++i) rep.dim_hom[i] = data.hom[i].dim();
  rep.rank_d1 = rank(data.d1);
  rep.rank_d2 = rank(data.d2);
  rep.rank_d3 = rank(data.d3);
  rep.hh0 = rep.dim_hom[0] - rep.rank_d1;
  rep.hh1 = rep.dim_hom[1] - rep.rank_d1 - rep.rank_d2;
  rep.hh2 = rep.dim_hom[2] - rep.rank_d2 - rep.rank_d3;
  if (rep.hh2 < 0 || rep.hh1 < 0)
    throw Error(Error::Kind::consistency, "negative cohomology dimension (complex not a complex?)");

  // Representatives: extend a basis of Im d2 to Ker d3, preferring unit maps
  // phi_{p,x} (single Hom-basis coordinates) and then reduced kernel vectors.
  Rref<> span(A.field(), data.hom[2].dim());
  for (const auto& col : matrix_columns(data.d2)) span.add_row(col);

  std::vector<SparseVec> candidates;
  for (int k = 0; k < data.hom[2].dim(); ++k)
    if (sv_is_zero(data.d3.sparse_col(k)))
      candidates.push_back(SparseVec{{k, A.field().one()}});
  for (auto& v : nullspace_basis(data.d3)) candidates.push_back(std::move(v));

  for (const auto& cand : candidates) {
    if (static_cast<int>(rep.basis.size()) == rep.hh2) break;
    if (span.add_row(cand)) rep.basis.push_back(Cocycle{cand});
  }
  if (static_cast<int>(rep.basis.size()) != rep.hh2)
    throw Error(Error::Kind::internal, "failed to complete a basis of HH^2");
  return rep;
}

bool cocycle_is_coboundary(const QuotientAlgebra& A, const CochainData& data, const Cocycle& c) {
  if (!c.vec.empty() && c.vec.back().first >= data.hom[2].dim())
    throw Error(Error::Kind::invalid, "cocycle dimension mismatch");
  return in_span(A.field(), c.vec, matrix_columns(data.d2), data.hom[2].dim());
}

bool is_cocycle(const QuotientAlgebra& A, const CochainData& data, const Cocycle& c) {
  (void)A;
  return sv_is_zero(data.d3.apply(c.vec));
}

Cocycle make_cocycle(const QuotientAlgebra& A, const CochainData& data,
                     const std::vector<std::pair<int, AlgElement>>& values) {
  std::map<int, Scalar> entries;
  for (const auto& [rel, val] : values)
    for (const auto& [nt, c] : val.terms) {
      int flat = data.hom[2].flat_index(rel, nt);
      if (flat < 0)
        throw Error(Error::Kind::invalid, "cocycle value outside o(x) Lambda t(x)");
      entries[flat] = A.field().add(entries[flat], c);
    }
  Cocycle c;
  for (auto& [k, v] : entries)
    if (!v.is_zero()) c.vec.emplace_back(k, v);
  return c;
}

std::vector<std::pair<int, AlgElement>> cocycle_values(const QuotientAlgebra& A,
                                                       const CochainData& data, const Cocycle& c) {
  std::map<int, AlgElement> per_rel;
  for (const auto& [flat, coeff] : c.vec) {
    auto [s, nt] = data.hom[2].items[flat];
    AlgElement t{SparseVec{{nt, coeff}}};
    per_rel[s] = A.add_elements(per_rel[s], t);
  }
  std::vector<std::pair<int, AlgElement>> out;
  for (auto& [s, v] : per_rel)
    if (!v.is_zero()) out.emplace_back(s, std::move(v));
  return out;
}

}  // namespace hh2
