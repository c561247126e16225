#include "core/oracle.hpp"

#include <algorithm>
#include <array>

namespace hh2 {

namespace {

// Flat basis over a list of E-bimodule "slots", each carrying the values
// o Lambda t: items are (slot, nontip).
struct SlotBasis {
  std::vector<std::pair<int, int>> slot_endpoints;  // (o, t) per slot
  std::vector<int> offset;
  std::vector<std::vector<int>> values;  // per slot: nontip indices (ascending)
  int dim = 0;

  void build(const QuotientAlgebra& A) {
    for (auto [o, t] : slot_endpoints) {
      offset.push_back(dim);
      values.push_back(A.hom_basis(o, t));
      dim += static_cast<int>(values.back().size());
    }
  }
  int flat(int slot, int nontip) const {
    const auto& list = values[slot];
    auto it = std::lower_bound(list.begin(), list.end(), nontip);
    if (it == list.end() || *it != nontip)
      throw Error(Error::Kind::internal, "bar complex: value outside slot");
    return offset[slot] + static_cast<int>(it - list.begin());
  }
};

}  // namespace

BarDims bar_hh(const QuotientAlgebra& A, int dim_limit) {
  if (A.dimension() > dim_limit)
    throw Error(Error::Kind::limit,
                "bar oracle limit exceeded: dim = " + std::to_string(A.dimension()) +
                    " > " + std::to_string(dim_limit));
  const Field& F = A.field();

  std::vector<int> rad;  // nontips of length >= 1
  for (int i = 0; i < A.dimension(); ++i)
    if (!A.nontips()[i].is_trivial()) rad.push_back(i);
  int R = static_cast<int>(rad.size());
  auto nt = [&](int r) -> const Path& { return A.nontips()[rad[r]]; };
  auto elem = [&](int r) { return AlgElement{SparseVec{{rad[r], F.one()}}}; };

  // Composable pairs and triples, with cached products of adjacent factors.
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_id;
  std::map<std::pair<int, int>, AlgElement> prod;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      if (nt(i).terminus == nt(j).origin) {
        pair_id[{i, j}] = static_cast<int>(pairs.size());
        pairs.emplace_back(i, j);
        prod[{i, j}] = A.multiply(elem(i), elem(j));
      }
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      if (nt(i).terminus != nt(j).origin) continue;
      for (int k = 0; k < R; ++k)
        if (nt(j).terminus == nt(k).origin) triples.push_back({i, j, k});
    }

  SlotBasis c0, c1, c2, c3;
  for (int v = 0; v < A.quiver().vertex_count(); ++v) c0.slot_endpoints.emplace_back(v, v);
  for (int r = 0; r < R; ++r) c1.slot_endpoints.emplace_back(nt(r).origin, nt(r).terminus);
  for (auto [i, j] : pairs) c2.slot_endpoints.emplace_back(nt(i).origin, nt(j).terminus);
  for (auto& t : triples) c3.slot_endpoints.emplace_back(nt(t[0]).origin, nt(t[2]).terminus);
  c0.build(A);
  c1.build(A);
  c2.build(A);
  c3.build(A);

  // delta0: (d z)(b) = b z - z b
  Matrix d0(F, c1.dim, c0.dim);
  for (int slot = 0; slot < static_cast<int>(c0.slot_endpoints.size()); ++slot) {
    int v = c0.slot_endpoints[slot].first;
    for (size_t vi = 0; vi < c0.values[slot].size(); ++vi) {
      int col = c0.offset[slot] + static_cast<int>(vi);
      AlgElement z{SparseVec{{c0.values[slot][vi], F.one()}}};
      for (int r = 0; r < R; ++r) {
        AlgElement val;
        if (nt(r).terminus == v) val = A.add_elements(val, A.multiply(elem(r), z));
        if (nt(r).origin == v)
          val = A.add_elements(val, A.scalar_multiple(F.from_long(-1), A.multiply(z, elem(r))));
        for (const auto& [ntv, c] : val.terms) d0.add_to(c1.flat(r, ntv), col, c);
      }
    }
  }

  // delta1: (d f)(b1, b2) = b1 f(b2) - f(b1 b2) + f(b1) b2
  Matrix d1(F, c2.dim, c1.dim);
  for (int slot = 0; slot < R; ++slot) {
    for (size_t vi = 0; vi < c1.values[slot].size(); ++vi) {
      int col = c1.offset[slot] + static_cast<int>(vi);
      AlgElement cval{SparseVec{{c1.values[slot][vi], F.one()}}};
      for (int pid = 0; pid < static_cast<int>(pairs.size()); ++pid) {
        auto [b1, b2] = pairs[pid];
        AlgElement val;
        if (b2 == slot) val = A.add_elements(val, A.multiply(elem(b1), cval));
        if (b1 == slot) val = A.add_elements(val, A.multiply(cval, elem(b2)));
        for (const auto& [d, coeff] : prod.at({b1, b2}).terms)
          if (d == rad[slot])
            val = A.add_elements(val, A.scalar_multiple(F.neg(coeff), cval));
        for (const auto& [ntv, c] : val.terms) d1.add_to(c2.flat(pid, ntv), col, c);
      }
    }
  }

  // delta2: (d f)(b1,b2,b3) = b1 f(b2,b3) - f(b1 b2, b3) + f(b1, b2 b3) - f(b1,b2) b3
  Matrix d2(F, c3.dim, c2.dim);
  for (int slot = 0; slot < static_cast<int>(pairs.size()); ++slot) {
    auto [sb, sb2] = pairs[slot];
    for (size_t vi = 0; vi < c2.values[slot].size(); ++vi) {
      int col = c2.offset[slot] + static_cast<int>(vi);
      AlgElement cval{SparseVec{{c2.values[slot][vi], F.one()}}};
      for (int tid = 0; tid < static_cast<int>(triples.size()); ++tid) {
        auto [b1, b2, b3] = triples[tid];
        AlgElement val;
        if (b2 == sb && b3 == sb2) val = A.add_elements(val, A.multiply(elem(b1), cval));
        if (b1 == sb && b2 == sb2)
          val = A.add_elements(val, A.scalar_multiple(F.from_long(-1), A.multiply(cval, elem(b3))));
        if (b3 == sb2)
          for (const auto& [d, coeff] : prod.at({b1, b2}).terms)
            if (d == rad[sb]) val = A.add_elements(val, A.scalar_multiple(F.neg(coeff), cval));
        if (b1 == sb)
          for (const auto& [d, coeff] : prod.at({b2, b3}).terms)
            if (d == rad[sb2]) val = A.add_elements(val, A.scalar_multiple(coeff, cval));
        for (const auto& [ntv, c] : val.terms) d2.add_to(c3.flat(tid, ntv), col, c);
      }
    }
  }

  int r0 = rank(d0), r1 = rank(d1), r2 = rank(d2);
  BarDims dims;
  dims.hh0 = c0.dim - r0;
  dims.hh1 = c1.dim - r0 - r1;
  dims.hh2 = c2.dim - r1 - r2;
  if (dims.hh0 < 0 || dims.hh1 < 0 || dims.hh2 < 0)
    throw Error(Error::Kind::internal, "bar complex produced negative dimensions");
  return dims;
}

}  // namespace hh2
