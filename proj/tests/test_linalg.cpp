#include <doctest.h>

#include <random>

#include "core/matrix.hpp"

using namespace hh2;

namespace {

Matrix random_matrix(const Field& f, int rows, int cols, std::mt19937& rng) {
  Matrix m(f, rows, cols);
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> fill(0, 2);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (fill(rng) == 0) m.set(r, c, f.from_long(val(rng)));
  return m;
}

}  // namespace

TEST_CASE("field arithmetic is exact and canonical") {
  Field q(0);
  Scalar a = q.from_fraction(1, 3), b = q.from_fraction(2, 6);
  CHECK(a == b);
  CHECK(q.add(a, b) == q.from_fraction(2, 3));
  CHECK(q.mul(a, q.from_long(3)).is_one());

  Field f2(2);
  CHECK(f2.from_long(2).is_zero());
  CHECK(f2.from_long(-1).is_one());
  CHECK(f2.add(f2.one(), f2.one()).is_zero());

  Field f7(7);
  Scalar inv3 = f7.inv(f7.from_long(3));
  CHECK(f7.mul(inv3, f7.from_long(3)).is_one());
  CHECK(f7.from_fraction(1, 3) == inv3);

  CHECK_THROWS_AS(Field(6), Error);
}

TEST_CASE("rank on pinned examples") {
  Field q(0);
  Matrix id2(q, 2, 2);
  id2.set(0, 0, q.one());
  id2.set(1, 1, q.one());
  CHECK(rank(id2) == 2);

  Field f2(2);
  Matrix two(f2, 1, 1);
  two.set(0, 0, f2.from_long(2));
  CHECK(rank(two) == 0);

  Matrix zero3(q, 3, 3);
  CHECK(rank(zero3) == 0);
  CHECK(nullspace_basis(zero3).size() == 3);
  CHECK(nullspace_basis(id2).empty());
}

TEST_CASE("rank + nullity = cols, and permutation invariance") {
  std::mt19937 rng(12345);
  for (unsigned long p : {0ul, 2ul, 3ul}) {
    Field f(p);
    for (int trial = 0; trial < 20; ++trial) {
      int rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
      Matrix m = random_matrix(f, rows, cols, rng);
      int r = rank(m);
      auto ns = nullspace_basis(m);
      CHECK(r + static_cast<int>(ns.size()) == cols);
      for (const auto& v : ns) CHECK(sv_is_zero(m.apply(v)));

      // permute rows and columns
      std::vector<int> rp(rows), cp(cols);
      for (int i = 0; i < rows; ++i) rp[i] = i;
      for (int i = 0; i < cols; ++i) cp[i] = i;
      std::shuffle(rp.begin(), rp.end(), rng);
      std::shuffle(cp.begin(), cp.end(), rng);
      Matrix pm(f, rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) pm.set(rp[i], cp[j], m.get(i, j));
      CHECK(rank(pm) == r);
    }
  }
}

TEST_CASE("in_span membership") {
  Field q(0);
  SparseVec e1{{0, q.one()}}, e2{{1, q.one()}};
  CHECK(in_span(q, SparseVec{}, {e2}, 2));       // zero vector
  CHECK_FALSE(in_span(q, e1, {e2}, 2));
  CHECK(in_span(q, sv_axpy(q, e1, q.from_long(2), e2), {e1, e2}, 2));
}

TEST_CASE("nullspace vectors solve the system over F_p") {
  Field f5(5);
  Matrix m(f5, 2, 4);
  m.set(0, 0, f5.from_long(1));
  m.set(0, 2, f5.from_long(3));
  m.set(1, 1, f5.from_long(2));
  m.set(1, 3, f5.from_long(4));
  auto ns = nullspace_basis(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(sv_is_zero(m.apply(v)));
}
