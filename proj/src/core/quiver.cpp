#include "core/quiver.hpp"

#include <algorithm>

namespace hh2 {

int Quiver::add_vertex(const std::string& name) {
  if (vertex_index_.count(name))
    throw Error(Error::Kind::parse, "duplicate vertex name '" + name + "'");
  int id = vertex_count();
  vertices_.push_back(name);
  vertex_index_[name] = id;
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Quiver::add_arrow(const std::string& name, int src, int dst) {
  if (arrow_index_.count(name))
    throw Error(Error::Kind::parse, "duplicate arrow name '" + name + "'");
  if (src < 0 || src >= vertex_count() || dst < 0 || dst >= vertex_count())
    throw Error(Error::Kind::parse, "arrow '" + name + "' references an undeclared vertex");
  int id = arrow_count();
  arrows_.push_back(Arrow{name, src, dst});
  arrow_index_[name] = id;
  out_[src].push_back(id);
  in_[dst].push_back(id);
  return id;
}

int Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  return it == arrow_index_.end() ? -1 : it->second;
}

std::string Path::str(const Quiver& q) const {
  if (is_trivial()) return "e_" + q.vertex_name(origin);
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(arrows[i]).name;
  }
  return s;
}

bool structural_less(const Path& p, const Path& q) {
  if (p.length() != q.length()) return p.length() < q.length();
  if (p.is_trivial()) return p.origin < q.origin;
  return p.arrows < q.arrows;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.terminus != q.origin) return std::nullopt;
  Path r;
  r.origin = p.origin;
  r.terminus = q.terminus;
  r.arrows = p.arrows;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

PathOrder PathOrder::declaration(const Quiver& q) {
  std::vector<int> ar(q.arrow_count()), vr(q.vertex_count());
  for (int i = 0; i < q.arrow_count(); ++i) ar[i] = i;
  for (int i = 0; i < q.vertex_count(); ++i) vr[i] = i;
  return from_ranks(std::move(ar), std::move(vr));
}

PathOrder PathOrder::from_ranks(std::vector<int> arrow_rank, std::vector<int> vertex_rank) {
  PathOrder ord;
  ord.arrow_rank_ = std::move(arrow_rank);
  ord.vertex_rank_ = std::move(vertex_rank);
  return ord;
}

bool PathOrder::less(const Path& p, const Path& q) const {
  if (p.length() != q.length()) return p.length() < q.length();
  if (p.is_trivial()) return vertex_rank_[p.origin] > vertex_rank_[q.origin];
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    int rp = arrow_rank_[p.arrows[i]], rq = arrow_rank_[q.arrows[i]];
    if (rp != rq) return rp > rq;  // larger rank number = later in precedence = smaller
  }
  return false;
}

bool lenlex_less(const Path& p, const Path& q, const PathOrder& ord) { return ord.less(p, q); }

FreeElement FreeElement::make(const Field& f, std::vector<std::pair<Scalar, Path>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return structural_less(a.second, b.second); });
  FreeElement e;
  for (auto& [c, p] : terms) {
    if (!e.terms_.empty() && e.terms_.back().second == p) {
      e.terms_.back().first = f.add(e.terms_.back().first, c);
      if (e.terms_.back().first.is_zero()) e.terms_.pop_back();
    } else if (!c.is_zero()) {
      e.terms_.emplace_back(std::move(c), std::move(p));
    }
  }
  return e;
}

bool FreeElement::is_uniform() const {
  for (const auto& [c, p] : terms_)
    if (p.origin != origin() || p.terminus != terminus()) return false;
  return true;
}

int FreeElement::max_term_length() const {
  int m = 0;
  for (const auto& [c, p] : terms_) m = std::max(m, p.length());
  return m;
}

int FreeElement::min_term_length() const {
  if (terms_.empty()) return 0;
  int m = terms_.front().second.length();
  for (const auto& [c, p] : terms_) m = std::min(m, p.length());
  return m;
}

bool FreeElement::operator==(const FreeElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
      return false;
  return true;
}

std::string FreeElement::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& [c, p] = terms_[i];
    mpq_class v = c.v;
    bool neg = sgn(v) < 0;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    mpq_class a = abs(v);
    if (a != 1) s += Scalar(a).str() + "*";
    s += p.str(q);
  }
  return s;
}

FreeElement add(const Field& f, const FreeElement& a, const FreeElement& b) {
  std::vector<std::pair<Scalar, Path>> terms(a.terms().begin(), a.terms().end());
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return FreeElement::make(f, std::move(terms));
}

FreeElement scale(const Field& f, const Scalar& c, const FreeElement& a) {
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& [s, p] : a.terms()) terms.emplace_back(f.mul(c, s), p);
  return FreeElement::make(f, std::move(terms));
}

FreeElement kq_multiply(const Field& f, const FreeElement& a, const FreeElement& b) {
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& [ca, pa] : a.terms())
    for (const auto& [cb, pb] : b.terms())
      if (auto p = compose(pa, pb)) terms.emplace_back(f.mul(ca, cb), std::move(*p));
  return FreeElement::make(f, std::move(terms));
}

Path tip(const FreeElement& f, const PathOrder& ord) {
  if (f.is_zero()) throw Error(Error::Kind::internal, "tip of zero element");
  const Path* best = &f.terms().front().second;
  for (const auto& [c, p] : f.terms())
    if (ord.less(*best, p)) best = &p;
  return *best;
}

Scalar tip_coefficient(const FreeElement& f, const PathOrder& ord) {
  Path t = tip(f, ord);
  for (const auto& [c, p] : f.terms())
    if (p == t) return c;
  return Scalar();
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len, const PathOrder& ord) {
  std::vector<Path> all, frontier;
  for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::trivial(v));
  all = frontier;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a : q.arrows_from(p.terminus)) {
        Path r = p;
        r.arrows.push_back(a);
        r.terminus = q.arrow(a).dst;
        next.push_back(std::move(r));
      }
    if (next.empty()) break;
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [&](const Path& a, const Path& b) { return ord.less(a, b); });
  return all;
}

}  // namespace hh2
