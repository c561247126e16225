#ifndef HH2_FIELD_HPP
#define HH2_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hh2 {

// Error hierarchy shared across the engine.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse,
    invalid,
    not_admissible,
    limit,
    consistency,
    internal,
  };
  Error(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Exact field element. Canonical form: reduced fraction over the rationals,
// least non-negative residue (denominator 1) over a prime field.
struct Scalar {
  mpq_class v;

  Scalar() : v(0) {}
  explicit Scalar(mpq_class x) : v(std::move(x)) {}

  bool is_zero() const { return sgn(v) == 0; }
  bool is_one() const { return v == 1; }
  bool operator==(const Scalar& o) const { return v == o.v; }
  bool operator!=(const Scalar& o) const { return v != o.v; }
  bool operator<(const Scalar& o) const { return v < o.v; }
  std::string str() const;
};

// Ground field: the rationals (characteristic 0) or a prime field F_p.
// All scalar arithmetic is routed through the field so residues stay canonical.
class Field {
 public:
  explicit Field(unsigned long characteristic = 0);

  unsigned long characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_long(1); }
  Scalar from_long(long n) const;
  Scalar from_fraction(long num, long den) const;
  Scalar from_mpq(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

 private:
  Scalar reduce(mpq_class q) const;
  unsigned long p_;  // 0 or prime
};

bool is_prime(unsigned long n);

}  // namespace hh2

#endif
