#include "spechtlab/field.hpp"

#include <algorithm>
#include <string>

namespace spechtlab {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
  if (p < 2 || p > 0x7fffffffu || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                " is not a supported prime");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const
{
  Scalar r = 1 % p_;
  Scalar b = a % p_;
  while (e) {
    if (e & 1)
      r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Scalar PrimeField::inv(Scalar a) const
{
  if (a % p_ == 0)
    throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

namespace {

// Dense univariate polynomials over F_p, coefficient i at index i.
using Poly = std::vector<std::uint32_t>;

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_mod(Poly a, Poly const &m, PrimeField const &f)
{
  trim(a);
  std::size_t dm = m.size() - 1;
  Scalar lead_inv = f.inv(m.back());
  while (a.size() >= m.size()) {
    Scalar c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(Poly const &a, Poly const &b, Poly const &m, PrimeField const &f)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return poly_mod(std::move(r), m, f);
}

Poly poly_powmod(Poly base, std::uint64_t e, Poly const &m, PrimeField const &f)
{
  Poly r{1};
  base = poly_mod(std::move(base), m, f);
  while (e) {
    if (e & 1)
      r = poly_mulmod(r, base, m, f);
    base = poly_mulmod(base, base, m, f);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, PrimeField const &f)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly sub_x(Poly a, PrimeField const &f)
{
  if (a.size() < 2)
    a.resize(2, 0);
  a[1] = f.sub(a[1], 1);
  trim(a);
  return a;
}

bool is_irreducible(Poly const &m, std::uint32_t p)
{
  PrimeField f(p);
  unsigned e = static_cast<unsigned>(m.size() - 1);
  if (e == 1)
    return true;
  // x^(p^k) mod m for k = 0..e
  std::vector<Poly> frob{Poly{0, 1}};
  for (unsigned k = 1; k <= e; ++k)
    frob.push_back(poly_powmod(frob.back(), p, m, f));
  if (!sub_x(frob[e], f).empty())
    return false;
  for (unsigned q = 2; q <= e; ++q) {
    if (e % q != 0 || !is_prime(q))
      continue;
    Poly g = poly_gcd(m, sub_x(frob[e / q], f), f);
    if (g.size() > 1)
      return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned e)
{
  if (e == 0)
    throw std::invalid_argument("least_irreducible: degree must be >= 1");
  std::uint64_t count = ipow(p, e);
  for (std::uint64_t t = 0; t < count; ++t) {
    Poly m(e + 1, 0);
    std::uint64_t v = t;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    m[e] = 1;
    if (is_irreducible(m, p))
      return Poly(m.begin(), m.begin() + e);
  }
  throw std::logic_error("least_irreducible: none found");
}

ExtField::ExtField(std::uint32_t p, unsigned degree) : p_(p), e_(degree)
{
  if (!is_prime(p))
    throw std::invalid_argument("ExtField: characteristic must be prime");
  if (degree == 0)
    throw std::invalid_argument("ExtField: degree must be >= 1");
  long double qd = 1;
  for (unsigned i = 0; i < degree; ++i)
    qd *= p;
  if (qd > static_cast<long double>(1u << 24))
    throw std::invalid_argument("ExtField: order exceeds 2^24 table limit");
  q_ = ipow(p, degree);
  modulus_ = least_irreducible(p, degree);

  PrimeField f(p);
  Poly m(modulus_);
  m.push_back(1);
  auto pack = [&](Poly const &a) {
    std::uint64_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
      v = v * p_ + a[i];
    return static_cast<std::uint32_t>(v);
  };
  auto unpack = [&](std::uint64_t v) {
    Poly a(e_, 0);
    for (unsigned i = 0; i < e_; ++i) {
      a[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    trim(a);
    return a;
  };

  // find a primitive element by checking its order against prime factors
  std::uint64_t group_order = q_ - 1;
  std::vector<std::uint64_t> factors;
  {
    std::uint64_t n = group_order;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        factors.push_back(d);
        while (n % d == 0)
          n /= d;
      }
    if (n > 1)
      factors.push_back(n);
  }
  Poly gen;
  for (std::uint64_t t = 1; t < q_; ++t) {
    Poly cand = unpack(t);
    bool primitive = true;
    for (auto r : factors) {
      Poly x = poly_powmod(cand, group_order / r, m, f);
      if (x.size() == 1 && x[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }

  exp_digits_.assign(q_ - 1, 0);
  log_of_packed_.assign(q_, 0);
  Poly cur{1};
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    std::uint32_t packed = pack(cur);
    exp_digits_[k] = packed;
    log_of_packed_[packed] = static_cast<std::uint32_t>(k + 1);
    cur = poly_mulmod(cur, gen, m, f);
  }

  // zech_[k] = encoding of 1 + g^k
  zech_.assign(q_ - 1, 0);
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    Poly a = unpack(exp_digits_[k]);
    if (a.empty())
      a.push_back(0);
    a[0] = f.add(a[0], 1);
    trim(a);
    zech_[k] = a.empty() ? 0 : log_of_packed_[pack(a)];
  }

  prime_image_.assign(p_, 0);
  for (std::uint32_t c = 1; c < p_; ++c)
    prime_image_[c] = log_of_packed_[c];
  minus_one_ = prime_image_[p_ - 1];
}

ExtField ExtField::at_least(std::uint32_t p, std::uint64_t min_order)
{
  unsigned e = 1;
  std::uint64_t q = p;
  while (q < min_order) {
    q *= p;
    ++e;
  }
  return ExtField(p, e);
}

Scalar ExtField::inv(Scalar a) const
{
  if (a == 0)
    throw std::domain_error("ExtField: inverse of zero");
  std::uint32_t k = a - 1;
  return k == 0 ? 1 : static_cast<Scalar>(q_ - 1 - k) + 1;
}

Scalar ExtField::pow(Scalar a, std::uint64_t e) const
{
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  std::uint64_t k = (std::uint64_t(a - 1) * (e % (q_ - 1))) % (q_ - 1);
  return static_cast<Scalar>(k + 1);
}

std::vector<std::uint32_t> ExtField::to_digits(Scalar a) const
{
  std::vector<std::uint32_t> d(e_, 0);
  if (a == 0)
    return d;
  std::uint64_t v = exp_digits_[a - 1];
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return d;
}

Scalar ExtField::from_digits(std::vector<std::uint32_t> const &digits) const
{
  std::uint64_t v = 0;
  for (std::size_t i = std::min<std::size_t>(digits.size(), e_); i-- > 0;)
    v = v * p_ + digits[i] % p_;
  return log_of_packed_[v];
}

} // namespace spechtlab
