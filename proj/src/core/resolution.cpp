#include "core/resolution.hpp"

#include <algorithm>
#include <map>

namespace hh2 {

// Grouping of a KQ element by the first arrow of each term: f = sum_a a * w_a.
static std::map<int, FreeElement> split_by_first_arrow(const Quiver& Q, const Field& F,
                                                       const FreeElement& f) {
  std::map<int, std::vector<std::pair<Scalar, Path>>> raw;
  for (const auto& [c, p] : f.terms()) {
    if (p.is_trivial()) throw Error(Error::Kind::internal, "cannot strip arrow from trivial path");
    int a = p.arrows.front();
    Path rest;
    rest.arrows.assign(p.arrows.begin() + 1, p.arrows.end());
    rest.origin = Q.arrow(a).dst;
    rest.terminus = p.terminus;
    raw[a].emplace_back(c, std::move(rest));
  }
  std::map<int, FreeElement> out;
  for (auto& [a, terms] : raw) {
    FreeElement w = FreeElement::make(F, std::move(terms));
    if (!w.is_zero()) out.emplace(a, std::move(w));
  }
  return out;
}

namespace {

// Flat basis of a direct sum of right projectives (+)_k t_k Lambda.
struct RightProjBasis {
  std::vector<int> summand_target;           // t_k
  std::vector<std::vector<int>> nontip_list;  // per summand: nontips with origin t_k
  std::vector<int> offset;
  int dim = 0;

  static RightProjBasis build(const QuotientAlgebra& A, const std::vector<int>& targets) {
    RightProjBasis b;
    b.summand_target = targets;
    for (int t : targets) {
      std::vector<int> list;
      for (int w = 0; w < A.quiver().vertex_count(); ++w)
        for (int i : A.hom_basis(t, w)) list.push_back(i);
      std::sort(list.begin(), list.end());
      b.offset.push_back(b.dim);
      b.dim += static_cast<int>(list.size());
      b.nontip_list.push_back(std::move(list));
    }
    return b;
  }

  int flat(int k, int nontip) const {
    const auto& list = nontip_list[k];
    auto it = std::lower_bound(list.begin(), list.end(), nontip);
    if (it == list.end() || *it != nontip)
      throw Error(Error::Kind::internal, "nontip not present in projective summand");
    return offset[k] + static_cast<int>(it - list.begin());
  }
};

// Kernel of a right-module map (+)_k t_k Lambda -> (+)_j u_j Lambda given by
// generator images, split by terminus. Returns, per terminus w, the kernel
// vectors in flat domain coordinates.
struct BlockKernels {
  std::vector<std::vector<SparseVec>> by_terminus;
};

BlockKernels module_map_kernels(const QuotientAlgebra& A, const RightProjBasis& dom,
                                const RightProjBasis& cod,
                                const std::vector<std::vector<std::pair<int, AlgElement>>>& images) {
  const int nv = A.quiver().vertex_count();
  BlockKernels out;
  out.by_terminus.resize(nv);
  for (int w = 0; w < nv; ++w) {
    // local column list: domain items with terminus w
    std::vector<int> cols;  // flat domain indices
    for (size_t k = 0; k < dom.summand_target.size(); ++k)
      for (size_t i = 0; i < dom.nontip_list[k].size(); ++i) {
        int nt = dom.nontip_list[k][i];
        if (A.nontips()[nt].terminus == w) cols.push_back(dom.offset[k] + static_cast<int>(i));
      }
    if (cols.empty()) continue;
    std::map<int, int> row_local;  // cod flat -> local row
    auto local_row = [&](int flat) {
      auto it = row_local.find(flat);
      if (it != row_local.end()) return it->second;
      int id = static_cast<int>(row_local.size());
      row_local.emplace(flat, id);
      return id;
    };
    std::vector<std::map<int, Scalar>> entries;  // per local column: row -> value
    entries.resize(cols.size());
    for (size_t ci = 0; ci < cols.size(); ++ci) {
      int flat = cols[ci];
      // locate (k, nontip) for this flat index
      size_t k = 0;
      while (k + 1 < dom.offset.size() && dom.offset[k + 1] <= flat) ++k;
      int nt = dom.nontip_list[k][flat - dom.offset[k]];
      AlgElement b{SparseVec{{nt, A.field().one()}}};
      for (const auto& [j, val] : images[k]) {
        AlgElement prod = A.multiply(val, b);
        for (const auto& [cnt, coeff] : prod.terms)
          entries[ci][local_row(cod.flat(j, cnt))] =
              A.field().add(entries[ci][local_row(cod.flat(j, cnt))], coeff);
      }
    }
    int nrows = static_cast<int>(row_local.size());
    Matrix m(A.field(), std::max(nrows, 1), static_cast<int>(cols.size()));
    for (size_t ci = 0; ci < cols.size(); ++ci)
      for (const auto& [r, val] : entries[ci]) m.add_to(r, static_cast<int>(ci), val);
    for (auto& vec : nullspace_basis(m)) {
      SparseVec global;
      for (auto& [local, c] : vec) global.emplace_back(cols[local], c);
      std::sort(global.begin(), global.end());
      out.by_terminus[w].push_back(std::move(global));
    }
  }
  return out;
}

// Right action by an arrow on a flat domain vector.
SparseVec act_by_arrow(const QuotientAlgebra& A, const RightProjBasis& dom, const SparseVec& v,
                       int a) {
  std::map<int, Scalar> acc;
  for (const auto& [flat, c] : v) {
    size_t k = 0;
    while (k + 1 < dom.offset.size() && dom.offset[k + 1] <= flat) ++k;
    int nt = dom.nontip_list[k][flat - dom.offset[k]];
    AlgElement b{SparseVec{{nt, A.field().one()}}};
    AlgElement ba = A.right_mult_arrow(b, a);
    for (const auto& [nt2, c2] : ba.terms) {
      int f2 = dom.flat(static_cast<int>(k), nt2);
      auto it = acc.find(f2);
      Scalar add = A.field().mul(c, c2);
      if (it == acc.end())
        acc.emplace(f2, std::move(add));
      else {
        it->second = A.field().add(it->second, add);
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return SparseVec(acc.begin(), acc.end());
}

// Representatives of a basis of (kernel at w) / (kernel . J at w).
std::vector<SparseVec> minimal_generators_at(const QuotientAlgebra& A, const RightProjBasis& dom,
                                             const BlockKernels& K, int w) {
  Rref<> rad(A.field(), dom.dim);
  for (int a : A.quiver().arrows_to(w)) {
    int src = A.quiver().arrow(a).src;
    for (const auto& kappa : K.by_terminus[src]) rad.add_row(act_by_arrow(A, dom, kappa, a));
  }
  std::vector<SparseVec> chosen;
  for (const auto& kappa : K.by_terminus[w])
    if (rad.add_row(kappa)) chosen.push_back(kappa);
  return chosen;
}

}  // namespace

RelationSet minimalize_relations(const QuotientAlgebra& A, const std::vector<FreeElement>& gens,
                                 const std::vector<std::string>& labels) {
  const Field& F = A.field();
  const Quiver& Q = A.quiver();
  const PathOrder& ord = A.order();
  const int L = A.truncation_length();
  const int N = A.nilpotency_index();
  int max_rel_len = 0;
  for (const auto& g : gens) max_rel_len = std::max(max_rel_len, g.max_term_length());

  // Fast certainty filter: a generator whose image in I/(JI + IJ) is
  // independent of the others can never be dropped. The converse fails for
  // mixed-length relations (a generator x can satisfy x in JI + IJ through
  // terms like x*j and still be needed), so dependent generators are only
  // candidates and get probed below.
  std::vector<Path> paths = enumerate_paths(Q, L, ord);
  std::map<std::vector<int>, int> col_of;
  auto key_of = [](const Path& p) {
    std::vector<int> k{p.origin};
    k.insert(k.end(), p.arrows.begin(), p.arrows.end());
    return k;
  };
  for (size_t i = 0; i < paths.size(); ++i) col_of[key_of(paths[i])] = static_cast<int>(i);
  auto to_vec = [&](const FreeElement& f) {
    std::map<int, Scalar> m;
    for (const auto& [c, p] : f.terms()) m.emplace(col_of.at(key_of(p)), c);
    return SparseVec(m.begin(), m.end());
  };

  Rref<> span(F, static_cast<int>(paths.size()));
  std::vector<std::vector<Path>> by_terminus(Q.vertex_count()), by_origin(Q.vertex_count());
  for (const auto& p : paths) {
    by_terminus[p.terminus].push_back(p);
    by_origin[p.origin].push_back(p);
  }
  for (const auto& g : gens) {
    int mg = g.max_term_length();
    for (const auto& u : by_terminus[g.origin()]) {
      if (u.length() + mg > L) continue;
      FreeElement ug = kq_multiply(F, FreeElement::of_path(F, u), g);
      for (const auto& v : by_origin[g.terminus()]) {
        if (u.length() + v.length() == 0 || u.length() + mg + v.length() > L) continue;
        span.add_row(to_vec(kq_multiply(F, ug, FreeElement::of_path(F, v))));
      }
    }
  }
  for (const auto& p : paths)
    if (p.length() > N) span.add_row(to_vec(FreeElement::of_path(F, p)));

  std::vector<bool> certain(gens.size(), false);
  for (size_t i = 0; i < gens.size(); ++i) certain[i] = span.add_row(to_vec(gens[i]));

  // Greedy removal in declaration order: drop a candidate only when the
  // remaining generators provably cut out the same algebra (equal certified
  // nontip data forces equal ideals, both being certified complements).
  std::vector<bool> kept(gens.size(), true);
  int probe_cap = L + max_rel_len + 2;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (certain[i]) continue;
    Presentation probe;
    probe.quiver = Q;
    probe.field = F;
    probe.order = ord;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (!kept[j] || j == i) continue;
      probe.relations.push_back(gens[j]);
      probe.relation_labels.push_back("p" + std::to_string(j));
    }
    try {
      QuotientAlgebra B = build_quotient(probe, probe_cap);
      if (B.nilpotency_index() == N && B.nontips() == A.nontips()) kept[i] = false;
    } catch (const Error&) {
      // the subset fails to certify the same algebra; keep the generator
    }
  }

  RelationSet out;
  std::map<std::pair<int, int>, int> kept_count;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!kept[i]) continue;
    out.elements.push_back(gens[i]);
    out.labels.push_back(i < labels.size() ? labels[i] : "f2_" + std::to_string(i + 1));
    ++kept_count[{gens[i].origin(), gens[i].terminus()}];
  }

  // Sanity floor: at every endpoint pair the kept count covers the number of
  // minimal second-syzygy generators of the simple right modules.
  for (int v = 0; v < Q.vertex_count(); ++v) {
    std::vector<int> targets;
    std::vector<std::vector<std::pair<int, AlgElement>>> images;
    for (int a : Q.arrows_from(v)) targets.push_back(Q.arrow(a).dst);
    RightProjBasis dom = RightProjBasis::build(A, targets);
    RightProjBasis cod = RightProjBasis::build(A, {v});
    for (int a : Q.arrows_from(v))
      images.push_back({{0, A.normal_form(Path::of_arrow(Q, a))}});
    BlockKernels K = module_map_kernels(A, dom, cod, images);
    for (int w = 0; w < Q.vertex_count(); ++w) {
      int m = static_cast<int>(minimal_generators_at(A, dom, K, w).size());
      if (m > kept_count[{v, w}])
        throw Error(Error::Kind::internal,
                    "relation minimalization kept fewer generators than the syzygy multiplicity");
    }
  }
  return out;
}

std::vector<F3Element> compute_f3(const QuotientAlgebra& A, const RelationSet& f2) {
  const Field& F = A.field();
  const Quiver& Q = A.quiver();
  if (A.presentation().relations.size() != f2.elements.size() ||
      !std::equal(A.presentation().relations.begin(), A.presentation().relations.end(),
                  f2.elements.begin()))
    throw Error(Error::Kind::internal, "compute_f3: algebra was not built from the given f2");

  std::vector<F3Element> out;
  for (int v = 0; v < Q.vertex_count(); ++v) {
    std::vector<int> rel_here;  // indices into f2 with origin v
    for (int i = 0; i < f2.size(); ++i)
      if (f2.origin(i) == v) rel_here.push_back(i);

    std::vector<int> dom_targets, cod_targets;
    for (int i : rel_here) dom_targets.push_back(f2.terminus(i));
    for (int a : Q.arrows_from(v)) cod_targets.push_back(Q.arrow(a).dst);
    if (rel_here.empty()) continue;
    RightProjBasis dom = RightProjBasis::build(A, dom_targets);
    RightProjBasis cod = RightProjBasis::build(A, cod_targets);

    // Generator of the x-summand maps to sum_a (a-summand, nf(w_a^x)).
    std::vector<std::vector<std::pair<int, AlgElement>>> images;
    for (int i : rel_here) {
      auto groups = split_by_first_arrow(Q, F, f2.elements[i]);
      std::vector<std::pair<int, AlgElement>> img;
      for (auto& [a, w] : groups) {
        int j = -1;
        for (size_t t = 0; t < cod_targets.size(); ++t)
          if (Q.arrows_from(v)[t] == a) j = static_cast<int>(t);
        AlgElement nfw = A.normal_form(w);
        if (j < 0) throw Error(Error::Kind::internal, "arrow summand missing");
        if (!nfw.is_zero()) img.emplace_back(j, std::move(nfw));
      }
      images.push_back(std::move(img));
    }

    BlockKernels K = module_map_kernels(A, dom, cod, images);
    for (int w = 0; w < Q.vertex_count(); ++w) {
      for (const SparseVec& kappa : minimal_generators_at(A, dom, K, w)) {
        // Read off the right cofactors p_x, then build y = sum x * p_x.
        // When f2 carries a generator that is JI+IJ-redundant yet needed to
        // generate (mixed-length relations), the cover is not minimal and a
        // cofactor may pick up a constant term; that is fine downstream.
        std::map<int, FreeElement> cofactor;  // f2 index -> p
        for (const auto& [flat, c] : kappa) {
          size_t k = 0;
          while (k + 1 < dom.offset.size() && dom.offset[k + 1] <= flat) ++k;
          int nt = dom.nontip_list[k][flat - dom.offset[k]];
          int rel = rel_here[k];
          FreeElement t = FreeElement::make(F, {{c, A.nontips()[nt]}});
          auto it = cofactor.find(rel);
          if (it == cofactor.end())
            cofactor.emplace(rel, std::move(t));
          else
            it->second = add(F, it->second, t);
        }
        FreeElement y;
        for (const auto& [rel, p] : cofactor)
          y = add(F, y, kq_multiply(F, f2.elements[rel], p));
        if (y.is_zero())
          throw Error(Error::Kind::internal, "degree-3 lift evaluated to zero in KQ");

        // Normalize: lenlex-least term gets coefficient 1.
        const auto& terms = y.terms();
        const Path* least = &terms.front().second;
        Scalar least_c = terms.front().first;
        for (const auto& [c, p] : terms)
          if (A.order().less(p, *least)) {
            least = &p;
            least_c = c;
          }
        Scalar scale_by = F.inv(least_c);
        y = scale(F, scale_by, y);

        F3Element e;
        e.y = y;
        e.origin = v;
        e.terminus = w;
        for (auto& [rel, p] : cofactor)
          e.right.push_back({rel, scale(F, scale_by, p)});

        // Left decomposition through exact division of each arrow group.
        for (auto& [a, w_a] : split_by_first_arrow(Q, F, y)) {
          if (!A.normal_form(w_a).is_zero())
            throw Error(Error::Kind::internal, "left decomposition failed: cofactor not in ideal");
          for (auto& d : A.divide(w_a)) {
            Path q = Path::of_arrow(Q, a);
            auto qa = compose(q, d.u);
            if (!qa)
              throw Error(Error::Kind::internal, "left decomposition failed: non-composable");
            e.left.push_back({d.c, std::move(*qa), d.rel, d.v});
          }
        }

        // Both decompositions must reproduce y on the nose.
        FreeElement check;
        for (const auto& lp : e.left)
          check = add(F, check,
                      scale(F, lp.c,
                            kq_multiply(F, kq_multiply(F, FreeElement::of_path(F, lp.q),
                                                       f2.elements[lp.rel]),
                                        FreeElement::of_path(F, lp.r))));
        if (!(check == y))
          throw Error(Error::Kind::internal, "left decomposition failed: evaluation mismatch");

        e.label = "f3_" + std::to_string(out.size() + 1);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

int BimodBasis::flat_index(int left_nontip, int summand, int right_nontip) const {
  const auto& ll = left_list[summand];
  const auto& rl = right_list[summand];
  auto li = std::lower_bound(ll.begin(), ll.end(), left_nontip);
  auto ri = std::lower_bound(rl.begin(), rl.end(), right_nontip);
  if (li == ll.end() || *li != left_nontip || ri == rl.end() || *ri != right_nontip)
    throw Error(Error::Kind::internal, "tensor term outside the bimodule basis");
  return summand_offset[summand] +
         static_cast<int>(li - ll.begin()) * static_cast<int>(rl.size()) +
         static_cast<int>(ri - rl.begin());
}

namespace {

BimodBasis build_bimod_basis(const QuotientAlgebra& A,
                             const std::vector<std::pair<int, int>>& summands) {
  BimodBasis b;
  int flat = 0;
  for (size_t s = 0; s < summands.size(); ++s) {
    auto [o, t] = summands[s];
    std::vector<int> lefts, rights;
    for (int v = 0; v < A.quiver().vertex_count(); ++v) {
      for (int i : A.hom_basis(v, o)) lefts.push_back(i);
      for (int i : A.hom_basis(t, v)) rights.push_back(i);
    }
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    b.summand_offset.push_back(flat);
    for (int l : lefts)
      for (int r : rights) b.items.emplace_back(l, static_cast<int>(s), r);
    flat += static_cast<int>(lefts.size() * rights.size());
    b.left_list.push_back(std::move(lefts));
    b.right_list.push_back(std::move(rights));
  }
  return b;
}

}  // namespace

void realize_map_column(const QuotientAlgebra& A, const std::vector<std::vector<TensorTerm>>& images,
                        const BimodBasis& dom, const BimodBasis& cod, int dom_flat, Matrix& out,
                        int col) {
  auto [l, s, r] = dom.items[dom_flat];
  AlgElement le{SparseVec{{l, A.field().one()}}};
  AlgElement re{SparseVec{{r, A.field().one()}}};
  for (const TensorTerm& term : images[s]) {
    AlgElement la = A.multiply(le, term.left);
    AlgElement rb = A.multiply(term.right, re);
    for (const auto& [ln, lc] : la.terms)
      for (const auto& [rn, rc] : rb.terms)
        out.add_to(cod.flat_index(ln, term.summand, rn), col, A.field().mul(lc, rc));
  }
}

ResolutionFront build_front(const QuotientAlgebra& A, const RelationSet& f2) {
  const Field& F = A.field();
  const Quiver& Q = A.quiver();
  ResolutionFront front(F);
  front.f2 = f2;
  front.f3 = compute_f3(A, f2);

  for (int v = 0; v < Q.vertex_count(); ++v) front.q_summands[0].emplace_back(v, v);
  for (int a = 0; a < Q.arrow_count(); ++a)
    front.q_summands[1].emplace_back(Q.arrow(a).src, Q.arrow(a).dst);
  for (int i = 0; i < f2.size(); ++i)
    front.q_summands[2].emplace_back(f2.origin(i), f2.terminus(i));
  for (const auto& y : front.f3) front.q_summands[3].emplace_back(y.origin, y.terminus);

  // A1: o(a) (x) t(a) |-> o(a) (x)_{o(a)} a - a (x)_{t(a)} t(a)
  for (int a = 0; a < Q.arrow_count(); ++a) {
    const Arrow& ar = Q.arrow(a);
    std::vector<TensorTerm> img;
    img.push_back({A.of_vertex(ar.src), ar.src, A.normal_form(Path::of_arrow(Q, a))});
    img.push_back({A.scalar_multiple(F.from_long(-1), A.normal_form(Path::of_arrow(Q, a))), ar.dst,
                   A.of_vertex(ar.dst)});
    front.a1.push_back(std::move(img));
  }

  // A2: each term c * a_1..a_s of a relation contributes
  //     sum_k c * (a_1..a_{k-1}) (x)_{a_k} (a_{k+1}..a_s)
  for (int i = 0; i < f2.size(); ++i) {
    std::vector<TensorTerm> img;
    for (const auto& [c, p] : f2.elements[i].terms()) {
      for (int k = 0; k < p.length(); ++k) {
        Path prefix, suffix;
        prefix.arrows.assign(p.arrows.begin(), p.arrows.begin() + k);
        prefix.origin = p.origin;
        prefix.terminus = k == 0 ? p.origin : Q.arrow(p.arrows[k - 1]).dst;
        suffix.arrows.assign(p.arrows.begin() + k + 1, p.arrows.end());
        suffix.origin = Q.arrow(p.arrows[k]).dst;
        suffix.terminus = p.terminus;
        AlgElement left = A.scalar_multiple(c, A.normal_form(prefix));
        AlgElement right = A.normal_form(suffix);
        if (left.is_zero() || right.is_zero()) continue;
        img.push_back({std::move(left), p.arrows[k], std::move(right)});
      }
    }
    front.a2.push_back(std::move(img));
  }

  // A3: o(y) (x)_{f2_i} p_i - q (x)_{f2_i} r, summed over both decompositions.
  for (const auto& y : front.f3) {
    std::vector<TensorTerm> img;
    for (const auto& rp : y.right) {
      AlgElement cof = A.normal_form(rp.cofactor);
      if (!cof.is_zero()) img.push_back({A.of_vertex(y.origin), rp.rel, std::move(cof)});
    }
    for (const auto& lp : y.left) {
      AlgElement q = A.scalar_multiple(F.neg(lp.c), A.normal_form(lp.q));
      AlgElement r = A.normal_form(lp.r);
      if (q.is_zero() || r.is_zero()) continue;
      img.push_back({std::move(q), lp.rel, std::move(r)});
    }
    front.a3.push_back(std::move(img));
  }

  for (int d = 0; d < 4; ++d) front.basis[d] = build_bimod_basis(A, front.q_summands[d]);

  auto realize = [&](const std::vector<std::vector<TensorTerm>>& images, const BimodBasis& dom,
                     const BimodBasis& cod) {
    Matrix m(F, cod.dim(), dom.dim());
    for (int c = 0; c < dom.dim(); ++c) realize_map_column(A, images, dom, cod, c, m, c);
    return m;
  };
  front.mat_a1 = realize(front.a1, front.basis[1], front.basis[0]);
  front.mat_a2 = realize(front.a2, front.basis[2], front.basis[1]);
  front.mat_a3 = realize(front.a3, front.basis[3], front.basis[2]);

  front.mat_g = Matrix(F, A.dimension(), front.basis[0].dim());
  for (int c = 0; c < front.basis[0].dim(); ++c) {
    auto [l, s, r] = front.basis[0].items[c];
    AlgElement prod = A.multiply(AlgElement{SparseVec{{l, F.one()}}},
                                 AlgElement{SparseVec{{r, F.one()}}});
    for (const auto& [nt, coeff] : prod.terms) front.mat_g.add_to(nt, c, coeff);
  }
  return front;
}

ExactnessReport check_exactness(const QuotientAlgebra& A, const ResolutionFront& front) {
  ExactnessReport rep;
  rep.dim_lambda = A.dimension();
  for (int d = 0; d < 4; ++d) rep.dim_q[d] = front.basis[d].dim();
  rep.rank_a1 = rank(front.mat_a1);
  rep.rank_a2 = rank(front.mat_a2);
  rep.rank_a3 = rank(front.mat_a3);
  rep.g_a1_zero = front.mat_g.multiply(front.mat_a1).is_zero();
  rep.a1_a2_zero = front.mat_a1.multiply(front.mat_a2).is_zero();
  rep.a2_a3_zero = front.mat_a2.multiply(front.mat_a3).is_zero();
  rep.rank1_ok = rep.rank_a1 == rep.dim_q[0] - rep.dim_lambda;
  rep.rank2_ok = rep.rank_a2 == rep.dim_q[1] - rep.rank_a1;
  rep.rank3_ok = rep.rank_a3 == rep.dim_q[2] - rep.rank_a2;
  rep.ok = rep.g_a1_zero && rep.a1_a2_zero && rep.a2_a3_zero && rep.rank1_ok && rep.rank2_ok &&
           rep.rank3_ok;
  return rep;
}

std::string ExactnessReport::str() const {
  std::string s;
  s += "dim Q0..Q3 = " + std::to_string(dim_q[0]) + ", " + std::to_string(dim_q[1]) + ", " +
       std::to_string(dim_q[2]) + ", " + std::to_string(dim_q[3]) + "; dim = " +
       std::to_string(dim_lambda) + "\n";
  s += "rank A1 = " + std::to_string(rank_a1) + " (want " + std::to_string(dim_q[0] - dim_lambda) +
       "), rank A2 = " + std::to_string(rank_a2) + " (want " +
       std::to_string(dim_q[1] - rank_a1) + "), rank A3 = " + std::to_string(rank_a3) + " (want " +
       std::to_string(dim_q[2] - rank_a2) + ")\n";
  s += std::string("gA1=0: ") + (g_a1_zero ? "yes" : "NO") + ", A1A2=0: " +
       (a1_a2_zero ? "yes" : "NO") + ", A2A3=0: " + (a2_a3_zero ? "yes" : "NO") + "\n";
  return s;
}

}  // namespace hh2
