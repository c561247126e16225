#include "core/quotient.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace hh2 {

namespace {

bool div_term_less(const DivisionTerm& a, const DivisionTerm& b) {
  if (a.rel != b.rel) return a.rel < b.rel;
  if (a.u != b.u) return structural_less(a.u, b.u);
  return structural_less(a.v, b.v);
}

}  // namespace

void QuotientAlgebra::DivPayload::axpy(const Field& f, const Scalar& c, const DivPayload& o) {
  if (c.is_zero() || o.t.empty()) return;
  std::vector<DivisionTerm> merged;
  merged.reserve(t.size() + o.t.size());
  size_t i = 0, j = 0;
  while (i < t.size() || j < o.t.size()) {
    if (j == o.t.size() || (i < t.size() && div_term_less(t[i], o.t[j]))) {
      merged.push_back(std::move(t[i++]));
    } else if (i == t.size() || div_term_less(o.t[j], t[i])) {
      DivisionTerm d = o.t[j++];
      d.c = f.mul(c, d.c);
      if (!d.c.is_zero()) merged.push_back(std::move(d));
    } else {
      DivisionTerm d = std::move(t[i++]);
      d.c = f.add(d.c, f.mul(c, o.t[j++].c));
      if (!d.c.is_zero()) merged.push_back(std::move(d));
    }
  }
  t = std::move(merged);
}

void QuotientAlgebra::DivPayload::scale(const Field& f, const Scalar& c) {
  for (auto& d : t) d.c = f.mul(d.c, c);
}

QuotientAlgebra::PathKey QuotientAlgebra::key_of(const Path& p) {
  PathKey k;
  k.reserve(p.arrows.size() + 1);
  k.push_back(p.origin);
  k.insert(k.end(), p.arrows.begin(), p.arrows.end());
  return k;
}

int QuotientAlgebra::col_of(const Path& p) const {
  auto it = col_index_.find(key_of(p));
  return it == col_index_.end() ? -1 : it->second;
}

int QuotientAlgebra::nontip_index(const Path& p) const {
  int c = col_of(p);
  return c < 0 ? -1 : nontip_of_col_[c];
}

const std::vector<int>& QuotientAlgebra::hom_basis(int v, int w) const {
  auto it = hom_.find({v, w});
  return it == hom_.end() ? empty_ : it->second;
}

std::vector<Path> QuotientAlgebra::hom_basis_paths(int v, int w) const {
  std::vector<Path> out;
  for (int i : hom_basis(v, w)) out.push_back(nontips_[i]);
  return out;
}

AlgElement QuotientAlgebra::normal_form(const FreeElement& f) const {
  std::map<int, Scalar> by_col;
  for (const auto& [c, p] : f.terms()) {
    if (p.length() >= nilp_) continue;  // J^N lies in I
    int col = col_of(p);
    auto it = by_col.find(col);
    if (it == by_col.end())
      by_col.emplace(col, c);
    else {
      it->second = field().add(it->second, c);
      if (it->second.is_zero()) by_col.erase(it);
    }
  }
  SparseVec v(by_col.begin(), by_col.end());
  rref_.reduce(v);
  std::map<int, Scalar> out;
  for (auto& [col, c] : v) out.emplace(nontip_of_col_[col], std::move(c));
  AlgElement r;
  r.terms.assign(out.begin(), out.end());
  return r;
}

AlgElement QuotientAlgebra::normal_form(const Path& p) const {
  return normal_form(FreeElement::of_path(field(), p));
}

AlgElement QuotientAlgebra::of_vertex(int v) const {
  return normal_form(Path::trivial(v));
}

FreeElement QuotientAlgebra::lift(const AlgElement& x) const {
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& [i, c] : x.terms) terms.emplace_back(c, nontips_[i]);
  return FreeElement::make(field(), std::move(terms));
}

AlgElement QuotientAlgebra::multiply(const AlgElement& x, const AlgElement& y) const {
  std::map<int, Scalar> by_col;
  for (const auto& [i, a] : x.terms)
    for (const auto& [j, b] : y.terms) {
      auto p = compose(nontips_[i], nontips_[j]);
      if (!p || p->length() >= nilp_) continue;
      Scalar c = field().mul(a, b);
      int col = col_of(*p);
      auto it = by_col.find(col);
      if (it == by_col.end())
        by_col.emplace(col, std::move(c));
      else {
        it->second = field().add(it->second, c);
        if (it->second.is_zero()) by_col.erase(it);
      }
    }
  SparseVec v(by_col.begin(), by_col.end());
  rref_.reduce(v);
  std::map<int, Scalar> out;
  for (auto& [col, c] : v) out.emplace(nontip_of_col_[col], std::move(c));
  AlgElement r;
  r.terms.assign(out.begin(), out.end());
  return r;
}

AlgElement QuotientAlgebra::scalar_multiple(const Scalar& c, const AlgElement& x) const {
  AlgElement r;
  if (c.is_zero()) return r;
  for (const auto& [i, a] : x.terms) r.terms.emplace_back(i, field().mul(c, a));
  return r;
}

AlgElement QuotientAlgebra::add_elements(const AlgElement& x, const AlgElement& y) const {
  AlgElement r;
  r.terms = sv_axpy(field(), x.terms, field().one(), y.terms);
  return r;
}

AlgElement QuotientAlgebra::right_mult_arrow(const AlgElement& x, int a) const {
  AlgElement arrow;
  int idx = nontip_index(Path::of_arrow(quiver(), a));
  if (idx < 0) return AlgElement{};  // arrows are never in an admissible ideal
  arrow.terms = {{idx, field().one()}};
  return multiply(x, arrow);
}

AlgElement QuotientAlgebra::left_mult_arrow(int a, const AlgElement& x) const {
  AlgElement arrow;
  int idx = nontip_index(Path::of_arrow(quiver(), a));
  if (idx < 0) return AlgElement{};
  arrow.terms = {{idx, field().one()}};
  return multiply(arrow, x);
}

std::string QuotientAlgebra::element_str(const AlgElement& x) const {
  return lift(x).str(quiver());
}

std::vector<DivisionTerm> QuotientAlgebra::divide(const FreeElement& f) const {
  if (!tracked_)
    throw Error(Error::Kind::internal, "divide() requires a division-tracking build");
  SparseVec v;
  {
    std::map<int, Scalar> by_col;
    for (const auto& [c, p] : f.terms()) {
      int col = col_of(p);
      if (col < 0)
        throw Error(Error::Kind::internal,
                    "divide(): term of length " + std::to_string(p.length()) +
                        " exceeds the truncation window " + std::to_string(trunc_));
      by_col.emplace(col, c);
    }
    v.assign(by_col.begin(), by_col.end());
  }
  DivPayload acc;
  rref_.reduce(v, [&](const Scalar& c, const Rref<DivPayload>::Row& row) {
    acc.axpy(field(), c, row.payload);
  });
  if (!v.empty())
    throw Error(Error::Kind::internal, "divide(): element is not in the ideal");
  return acc.t;
}

QuotientAlgebra build_quotient(const Presentation& p, int cap, bool track_divisions) {
  if (cap < 2) throw Error(Error::Kind::invalid, "cap must be at least 2");
  for (size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    if (r.is_zero()) throw Error(Error::Kind::invalid, "zero relation");
    if (!r.is_uniform())
      throw Error(Error::Kind::invalid, "relation " + p.relation_labels[i] + " is not uniform");
    if (r.min_term_length() < 2)
      throw Error(Error::Kind::invalid,
                  "relation " + p.relation_labels[i] + " is not inside the arrow ideal squared");
  }

  int max_rel_len = 0;
  for (const auto& r : p.relations) max_rel_len = std::max(max_rel_len, r.max_term_length());

  const Field& F = p.field;
  for (int L = std::max(1, max_rel_len); L <= cap + max_rel_len; ++L) {
    QuotientAlgebra A(p);
    A.tracked_ = track_divisions;
    A.trunc_ = L;

    std::vector<Path> asc = enumerate_paths(p.quiver, L, p.order);
    if (asc.size() > 200000)
      throw Error(Error::Kind::not_admissible,
                  "path window exploded before a nilpotency bound was certified "
                  "(length " + std::to_string(L) + ", " + std::to_string(asc.size()) + " paths)");
    A.cols_.assign(asc.rbegin(), asc.rend());  // descending lenlex
    for (size_t i = 0; i < A.cols_.size(); ++i)
      A.col_index_[QuotientAlgebra::key_of(A.cols_[i])] = static_cast<int>(i);
    int P = static_cast<int>(A.cols_.size());
    A.rref_ = Rref<QuotientAlgebra::DivPayload>(F, P);

    // Bucket paths for the generator double loop.
    std::vector<std::vector<Path>> by_terminus(p.quiver.vertex_count()),
        by_origin(p.quiver.vertex_count());
    for (const auto& q : asc) {
      by_terminus[q.terminus].push_back(q);
      by_origin[q.origin].push_back(q);
    }

    // Span of all u*f*v whose full expansion stays inside the window.
    for (size_t ri = 0; ri < p.relations.size(); ++ri) {
      const FreeElement& f = p.relations[ri];
      int mf = f.max_term_length();
      for (const auto& u : by_terminus[f.origin()]) {
        if (u.length() + mf > L) continue;
        FreeElement uf = kq_multiply(F, FreeElement::of_path(F, u), f);
        for (const auto& v : by_origin[f.terminus()]) {
          if (u.length() + mf + v.length() > L) continue;
          FreeElement ufv = kq_multiply(F, uf, FreeElement::of_path(F, v));
          SparseVec row;
          {
            std::map<int, Scalar> by_col;
            for (const auto& [c, q] : ufv.terms()) by_col.emplace(A.col_of(q), c);
            row.assign(by_col.begin(), by_col.end());
          }
          QuotientAlgebra::DivPayload payload;
          if (track_divisions) payload.t = {DivisionTerm{F.one(), u, static_cast<int>(ri), v}};
          A.rref_.add_row(std::move(row), std::move(payload));
        }
      }
    }
    A.rref_.normalize_tails();

    // Candidate nilpotency index: the least N with every path of length N a
    // zero-tail pivot (hence literally inside the ideal). With mixed-length
    // relations, longer lengths beyond the certified window may lag behind;
    // they are still inside the ideal via a length-N subpath.
    std::vector<bool> len_ok(L + 2, true);
    for (int c = 0; c < P; ++c) {
      int len = A.cols_[c].length();
      int r = A.rref_.pivot_row_of(c);
      if (r < 0 || A.rref_.rows()[r].v.size() != 1) len_ok[len] = false;
    }
    int N = -1;
    for (int n = 1; n <= L; ++n)
      if (len_ok[n]) {
        N = n;
        break;
      }
    if (std::getenv("HH2_DEBUG")) {
      std::fprintf(stderr, "[build_quotient] L=%d paths=%d rank=%d N=%d len_ok:", L, P,
                   A.rref_.rank(), N);
      for (int n = 1; n <= L; ++n) std::fprintf(stderr, " %d", len_ok[n] ? 1 : 0);
      std::fprintf(stderr, "\n");
    }
    if (N < 0 || N > cap) continue;

    // Division tracking downstream reduces cofactors of f^3 elements, whose
    // terms reach length N + maxRelLen - 2; certify that whole window.
    int window_top = N;
    if (track_divisions && !p.relations.empty()) {
      window_top = N + max_rel_len - 2;
      if (L < N + max_rel_len - 1) continue;
      bool window_ok = true;
      for (int n = N; n <= std::min(window_top, L); ++n) window_ok = window_ok && len_ok[n];
      if (!window_ok) continue;
    }

    // Rows with long pivots must carry no terms below length N, so that
    // truncating at N commutes with reduction.
    bool spread_ok = true;
    for (const auto& row : A.rref_.rows()) {
      if (A.cols_[sv_lead(row.v)].length() < N) continue;
      for (const auto& [col, c] : row.v)
        if (A.cols_[col].length() < N) {
          spread_ok = false;
          break;
        }
      if (!spread_ok) break;
    }
    if (!spread_ok) continue;

    // Closure check on the short reduction rows: multiplying by one arrow on
    // either side must stay inside the row space.
    bool closed = true;
    for (const auto& row : A.rref_.rows()) {
      const Path& lead = A.cols_[sv_lead(row.v)];
      if (lead.length() >= N) continue;
      auto check_side = [&](bool left_side) {
        const auto& arrows = left_side ? p.quiver.arrows_to(lead.origin)
                                       : p.quiver.arrows_from(lead.terminus);
        for (int a : arrows) {
          std::map<int, Scalar> by_col;
          for (const auto& [col, c] : row.v) {
            Path q = A.cols_[col];
            if (left_side) {
              q.arrows.insert(q.arrows.begin(), a);
              q.origin = p.quiver.arrow(a).src;
            } else {
              q.arrows.push_back(a);
              q.terminus = p.quiver.arrow(a).dst;
            }
            by_col.emplace(A.col_of(q), c);
          }
          SparseVec v(by_col.begin(), by_col.end());
          A.rref_.reduce(v);
          if (!v.empty()) return false;
        }
        return true;
      };
      if (!check_side(true) || !check_side(false)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;

    A.nilp_ = N;
    A.nontip_of_col_.assign(P, -1);
    for (int c = P - 1; c >= 0; --c) {  // ascending lenlex
      if (A.cols_[c].length() >= N) continue;  // inside the ideal via a length-N subpath
      if (A.rref_.pivot_row_of(c) >= 0) continue;
      A.nontip_of_col_[c] = static_cast<int>(A.nontips_.size());
      A.nontips_.push_back(A.cols_[c]);
    }
    for (size_t i = 0; i < A.nontips_.size(); ++i) {
      const Path& q = A.nontips_[i];
      A.hom_[{q.origin, q.terminus}].push_back(static_cast<int>(i));
    }

    // Minimal tips: pivot paths with no proper pivot subpath.
    for (int c = 0; c < P; ++c) {
      if (A.rref_.pivot_row_of(c) < 0) continue;
      const Path& t = A.cols_[c];
      if (t.length() > N) continue;
      bool minimal = true;
      for (int i = 0; i < t.length() && minimal; ++i)
        for (int j = i + 2; j <= t.length() && minimal; ++j) {
          if (j - i == t.length()) continue;
          Path sub;
          sub.arrows.assign(t.arrows.begin() + i, t.arrows.begin() + j);
          sub.origin = p.quiver.arrow(sub.arrows.front()).src;
          sub.terminus = p.quiver.arrow(sub.arrows.back()).dst;
          int sc = A.col_of(sub);
          if (sc >= 0 && A.rref_.pivot_row_of(sc) >= 0) minimal = false;
        }
      if (minimal) A.min_tips_.push_back(t);
    }
    std::sort(A.min_tips_.begin(), A.min_tips_.end(),
              [&](const Path& a, const Path& b) { return p.order.less(a, b); });
    return A;
  }
  throw Error(Error::Kind::not_admissible,
              "ideal is not admissible within cap " + std::to_string(cap) +
                  " (no nilpotency bound certified)");
}

}  // namespace hh2
