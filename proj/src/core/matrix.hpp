#ifndef HH2_MATRIX_HPP
#define HH2_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "core/field.hpp"

namespace hh2 {

// Sparse vector: (column, coefficient) pairs, sorted by column, no zeros.
using SparseVec = std::vector<std::pair<int, Scalar>>;

inline bool sv_is_zero(const SparseVec& v) { return v.empty(); }

inline int sv_lead(const SparseVec& v) { return v.empty() ? -1 : v.front().first; }

// v + c*w
inline SparseVec sv_axpy(const Field& f, const SparseVec& v, const Scalar& c, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      Scalar s = f.mul(c, w[j].second);
      if (!s.is_zero()) out.emplace_back(w[j].first, std::move(s));
      ++j;
    } else {
      Scalar s = f.add(v[i].second, f.mul(c, w[j].second));
      if (!s.is_zero()) out.emplace_back(v[i].first, std::move(s));
      ++i, ++j;
    }
  }
  return out;
}

inline void sv_scale(const Field& f, SparseVec& v, const Scalar& c) {
  if (c.is_zero()) {
    v.clear();
    return;
  }
  for (auto& [col, s] : v) s = f.mul(s, c);
}

// Incremental reduced row echelon structure. Rows keep their leading column as
// pivot (the smallest column index present); tails are cleared of pivot
// columns once normalize_tails() has run. A payload type may ride along with
// each row so downstream code can track how rows were formed.
struct NoPayload {
  void axpy(const Field&, const Scalar&, const NoPayload&) {}
  void scale(const Field&, const Scalar&) {}
};

template <class Payload = NoPayload>
class Rref {
 public:
  struct Row {
    SparseVec v;
    Payload payload;
  };

  explicit Rref(const Field& f, int cols) : field_(f), pivot_of_col_(cols, -1) {}

  const Field& field() const { return field_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return static_cast<int>(pivot_of_col_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  int pivot_row_of(int col) const { return pivot_of_col_[col]; }

  // Eliminates all pivot columns from v; `hook(c, row)` is invoked for each
  // subtraction step v -= c * row.v.
  void reduce(SparseVec& v, const std::function<void(const Scalar&, const Row&)>& hook = {}) const {
    size_t i = 0;
    while (i < v.size()) {
      int col = v[i].first;
      int r = pivot_of_col_[col];
      if (r < 0) {
        ++i;
        continue;
      }
      Scalar c = v[i].second;
      if (hook) hook(c, rows_[r]);
      v = sv_axpy(field_, v, field_.neg(c), rows_[r].v);
    }
  }

  // Returns true if the row added a new pivot, false if it was dependent.
  bool add_row(SparseVec v, Payload payload = {}) {
    reduce(v, [&](const Scalar& c, const Row& row) {
      payload.axpy(field_, field_.neg(c), row.payload);
    });
    if (v.empty()) return false;
    Scalar lead_inv = field_.inv(v.front().second);
    sv_scale(field_, v, lead_inv);
    payload.scale(field_, lead_inv);
    pivot_of_col_[v.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(Row{std::move(v), std::move(payload)});
    return true;
  }

  // Full back-substitution: clears every pivot column from every tail.
  void normalize_tails() {
    for (auto& row : rows_) {
      size_t i = 1;
      while (i < row.v.size()) {
        int col = row.v[i].first;
        int r = pivot_of_col_[col];
        if (r < 0) {
          ++i;
          continue;
        }
        Scalar c = row.v[i].second;
        row.payload.axpy(field_, field_.neg(c), rows_[r].payload);
        row.v = sv_axpy(field_, row.v, field_.neg(c), rows_[r].v);
      }
    }
  }

  bool contains(SparseVec v) const {
    reduce(v);
    return v.empty();
  }

 private:
  Field field_;
  std::vector<Row> rows_;
  std::vector<int> pivot_of_col_;
};

// Dense-indexed sparse matrix with fixed dimensions.
class Matrix {
 public:
  Matrix(Field f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows) {}

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add_to(int r, int c, const Scalar& s) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    if (s.is_zero()) return;
    auto& row = data_[r];
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, s);
    } else {
      it->second = field_.add(it->second, s);
      if (it->second.is_zero()) row.erase(it);
    }
  }
  void set(int r, int c, const Scalar& s) {
    auto& row = data_[r];
    row.erase(c);
    if (!s.is_zero()) row.emplace(c, s);
  }
  Scalar get(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar() : it->second;
  }

  SparseVec sparse_row(int r) const {
    SparseVec v;
    v.reserve(data_[r].size());
    for (const auto& [c, s] : data_[r]) v.emplace_back(c, s);
    return v;
  }
  SparseVec sparse_col(int c) const {
    SparseVec v;
    for (int r = 0; r < rows_; ++r) {
      auto it = data_[r].find(c);
      if (it != data_[r].end()) v.emplace_back(r, it->second);
    }
    return v;
  }

  bool is_zero() const {
    for (const auto& row : data_)
      if (!row.empty()) return false;
    return true;
  }

  // this * other
  Matrix multiply(const Matrix& other) const {
    assert(cols_ == other.rows_);
    Matrix out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, a] : data_[i])
        for (const auto& [k, b] : other.data_[j]) out.add_to(i, k, field_.mul(a, b));
    return out;
  }

  // Matrix * column vector.
  SparseVec apply(const SparseVec& x) const {
    std::map<int, Scalar> acc;
    for (const auto& [j, c] : x)
      for (int i = 0; i < rows_; ++i) {
        auto it = data_[i].find(j);
        if (it == data_[i].end()) continue;
        Scalar t = field_.mul(it->second, c);
        auto jt = acc.find(i);
        if (jt == acc.end())
          acc.emplace(i, std::move(t));
        else {
          jt->second = field_.add(jt->second, t);
          if (jt->second.is_zero()) acc.erase(jt);
        }
      }
    return SparseVec(acc.begin(), acc.end());
  }

 private:
  Field field_;
  int rows_, cols_;
  std::vector<std::map<int, Scalar>> data_;
};

int rank(const Matrix& m);
std::vector<SparseVec> nullspace_basis(const Matrix& m);
bool in_span(const Field& f, const SparseVec& v, const std::vector<SparseVec>& span, int cols);
std::vector<SparseVec> matrix_columns(const Matrix& m);

inline int rank(const Matrix& m) {
  Rref<> e(m.field(), m.cols());
  for (int r = 0; r < m.rows(); ++r) e.add_row(m.sparse_row(r));
  return e.rank();
}

inline std::vector<SparseVec> nullspace_basis(const Matrix& m) {
  Rref<> e(m.field(), m.cols());
  for (int r = 0; r < m.rows(); ++r) e.add_row(m.sparse_row(r));
  e.normalize_tails();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& row : e.rows()) is_pivot[sv_lead(row.v)] = true;
  std::vector<SparseVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::map<int, Scalar> entries;
    entries.emplace(c, m.field().one());
    for (const auto& row : e.rows())
      for (size_t i = 1; i < row.v.size(); ++i)
        if (row.v[i].first == c) entries.emplace(sv_lead(row.v), m.field().neg(row.v[i].second));
    basis.emplace_back(entries.begin(), entries.end());
  }
  return basis;
}

inline bool in_span(const Field& f, const SparseVec& v, const std::vector<SparseVec>& span, int cols) {
  Rref<> e(f, cols);
  for (const auto& s : span) e.add_row(s);
  return e.contains(v);
}

inline std::vector<SparseVec> matrix_columns(const Matrix& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) cols.push_back(m.sparse_col(c));
  return cols;
}

}  // namespace hh2

#endif
