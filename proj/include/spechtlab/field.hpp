#ifndef SPECHTLAB_FIELD_HPP
#define SPECHTLAB_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace spechtlab {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n);

// Integers mod a prime p, 2 <= p <= 2^31 - 1. Elements are canonical
// representatives in [0, p).
class PrimeField
{
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }

  Scalar from_int(std::int64_t v) const
  {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }

  Scalar add(Scalar a, Scalar b) const
  {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const
  { return a >= b ? a - b : static_cast<Scalar>(std::uint64_t(a) + p_ - b); }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const
  { return static_cast<Scalar>(std::uint64_t(a) * b % p_); }

  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar inv(Scalar a) const;

  template<class Rng>
  Scalar random(Rng &rng) const
  { return std::uniform_int_distribution<Scalar>(0, p_ - 1)(rng); }

  bool operator==(PrimeField const &o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

// F_{p^e} with table arithmetic. The defining polynomial is the
// lexicographically least monic irreducible of degree e, where a
// polynomial x^e + c_{e-1} x^{e-1} + ... + c_0 is ordered by the integer
// sum c_i p^i. Elements are encoded as 0 (zero) or 1 + log_g(x) for a
// fixed primitive element g, so add and mul are both table lookups
// (Zech logarithms). Field order is capped at 2^24.
class ExtField
{
public:
  ExtField(std::uint32_t p, unsigned degree);

  // Smallest extension of F_p with at least `min_order` elements.
  static ExtField at_least(std::uint32_t p, std::uint64_t min_order);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  // Coefficients c_0..c_{e-1} of the defining polynomial (leading 1 implied).
  std::vector<std::uint32_t> const &modulus() const { return modulus_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }

  Scalar from_int(std::int64_t v) const
  {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return prime_image_[static_cast<std::size_t>(r < 0 ? r + p_ : r)];
  }

  Scalar mul(Scalar a, Scalar b) const
  {
    if (a == 0 || b == 0)
      return 0;
    std::uint32_t s = (a - 1) + (b - 1);
    if (s >= q_ - 1)
      s -= static_cast<std::uint32_t>(q_ - 1);
    return s + 1;
  }

  Scalar add(Scalar a, Scalar b) const
  {
    if (a == 0)
      return b;
    if (b == 0)
      return a;
    // g^i + g^j = g^i (1 + g^(j-i))
    std::uint32_t i = a - 1, j = b - 1;
    std::uint32_t d = j >= i ? j - i : j + static_cast<std::uint32_t>(q_ - 1) - i;
    std::uint32_t z = zech_[d];
    if (z == 0)
      return 0;
    return mul(a, z);
  }

  Scalar neg(Scalar a) const { return mul(a, minus_one_); }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const;

  // Base-p digit vector (polynomial coefficients) of an element, and back.
  std::vector<std::uint32_t> to_digits(Scalar a) const;
  Scalar from_digits(std::vector<std::uint32_t> const &digits) const;

  template<class Rng>
  Scalar random(Rng &rng) const
  {
    return std::uniform_int_distribution<Scalar>(
        0, static_cast<Scalar>(q_ - 1))(rng);
  }

private:
  std::uint32_t p_;
  unsigned e_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_digits_; // log -> packed base-p integer
  std::vector<std::uint32_t> log_of_packed_;
  std::vector<std::uint32_t> zech_;       // 1 + g^k, encoded
  std::vector<Scalar> prime_image_;
  Scalar minus_one_ = 1;
};

// Lexicographically least monic irreducible polynomial of degree e over
// F_p, returned as coefficients c_0..c_{e-1}.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned e);

} // namespace spechtlab

#endif
