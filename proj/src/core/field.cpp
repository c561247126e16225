#include "core/field.hpp"

namespace hh2 {

std::string Scalar::str() const {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(unsigned long characteristic) : p_(characteristic) {
  if (p_ != 0 && !is_prime(p_))
    throw Error(Error::Kind::invalid,
                "field characteristic must be 0 or prime, got " + std::to_string(p_));
}

Scalar Field::reduce(mpq_class q) const {
  if (p_ == 0) return Scalar(std::move(q));
  // q has denominator coprime to p for valid inputs; fold into a residue.
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error(Error::Kind::invalid, "denominator divisible by characteristic");
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(Error::Kind::invalid, "denominator not invertible mod p");
    num = (num * dinv) % p;
  }
  return Scalar(mpq_class(num));
}

Scalar Field::from_long(long n) const { return reduce(mpq_class(n)); }

Scalar Field::from_fraction(long num, long den) const {
  if (den == 0) throw Error(Error::Kind::invalid, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return reduce(std::move(q));
}

Scalar Field::from_mpq(const mpq_class& q) const {
  mpq_class c = q;
  c.canonicalize();
  return reduce(std::move(c));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const { return reduce(mpq_class(a.v + b.v)); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return reduce(mpq_class(a.v - b.v)); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return reduce(mpq_class(a.v * b.v)); }

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (b.is_zero()) throw Error(Error::Kind::internal, "division by zero scalar");
  return mul(a, inv(b));
}

Scalar Field::neg(const Scalar& a) const { return reduce(mpq_class(-a.v)); }

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error(Error::Kind::internal, "inverse of zero scalar");
  if (p_ == 0) return Scalar(mpq_class(1 / a.v));
  mpz_class p(static_cast<unsigned long>(p_)), x = a.v.get_num(), r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(Error::Kind::internal, "non-invertible residue");
  return Scalar(mpq_class(r));
}

}  // namespace hh2
