#include "spechtlab/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spechtlab {

std::uint64_t binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::uint64_t b = 1;
  for (unsigned i = 1; i <= k; ++i)
    b = b * (n - k + i) / i;
  return b;
}

WedgeBasis::WedgeBasis(unsigned n, unsigned r) : n_(n), r_(r)
{
  dim_ = static_cast<std::size_t>(binomial(n, r)); // 0 when r > n
  all_.reserve(dim_);
  MultiIndex cur(r);
  for (unsigned a = 0; a < r; ++a)
    cur[a] = a + 1;
  for (std::size_t k = 0; k < dim_; ++k) {
    all_.push_back(cur);
    // next r-subset in lex order
    int a = static_cast<int>(r) - 1;
    while (a >= 0 && cur[static_cast<std::size_t>(a)] == n - r + static_cast<unsigned>(a) + 1)
      --a;
    if (a < 0)
      break;
    ++cur[static_cast<std::size_t>(a)];
    for (unsigned b = static_cast<unsigned>(a) + 1; b < r; ++b)
      cur[b] = cur[b - 1] + 1;
  }
}

std::shared_ptr<WedgeBasis const> WedgeBasis::get(unsigned n, unsigned r)
{
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<WedgeBasis const>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto &slot = cache[{n, r}];
  if (!slot)
    slot = std::make_shared<WedgeBasis const>(n, r);
  return slot;
}

std::size_t WedgeBasis::rank(MultiIndex const &i) const
{
  if (i.size() != r_)
    throw std::invalid_argument("WedgeBasis::rank: wrong length");
  std::size_t k = 0;
  unsigned prev = 0;
  for (unsigned a = 0; a < r_; ++a) {
    if (i[a] <= prev || i[a] > n_)
      throw std::invalid_argument("WedgeBasis::rank: not a strictly increasing index in 1..n");
    for (unsigned v = prev + 1; v < i[a]; ++v)
      k += static_cast<std::size_t>(binomial(n_ - v, r_ - a - 1));
    prev = i[a];
  }
  return k;
}

MultiIndex WedgeBasis::unrank(std::size_t k) const
{
  if (k >= dim_)
    throw std::out_of_range("WedgeBasis::unrank");
  MultiIndex out;
  unsigned v = 1;
  for (unsigned a = 0; a < r_; ++a) {
    for (;; ++v) {
      std::size_t block = static_cast<std::size_t>(binomial(n_ - v, r_ - a - 1));
      if (k < block)
        break;
      k -= block;
    }
    out.push_back(v++);
  }
  return out;
}

namespace {

// Sorts `pts` in place; returns the sign of the sorting permutation, or 0
// if two points coincide.
int sort_sign(std::vector<unsigned> &pts)
{
  int sign = 1;
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = i; j > 0 && pts[j - 1] >= pts[j]; --j) {
      if (pts[j - 1] == pts[j])
        return 0;
      std::swap(pts[j - 1], pts[j]);
      sign = -sign;
    }
  return sign;
}

} // namespace

WedgeVector::WedgeVector(unsigned n, unsigned r, std::uint32_t p)
    : n_(n), r_(r), p_(p), basis_(WedgeBasis::get(n, r)), c_(basis_->dim(), 0)
{}

WedgeVector::WedgeVector(unsigned n, unsigned r, std::uint32_t p, Vector coeffs)
    : n_(n), r_(r), p_(p), basis_(WedgeBasis::get(n, r)), c_(std::move(coeffs))
{
  if (c_.size() != basis_->dim())
    throw std::invalid_argument("WedgeVector: coefficient vector has wrong length");
  for (auto &x : c_)
    x %= p_;
}

WedgeVector WedgeVector::monomial(unsigned n, std::uint32_t p, std::vector<unsigned> const &points)
{
  WedgeVector v(n, static_cast<unsigned>(points.size()), p);
  for (auto x : points)
    if (x < 1 || x > n)
      throw std::invalid_argument("WedgeVector::monomial: point outside 1..n");
  std::vector<unsigned> pts = points;
  int s = sort_sign(pts);
  if (s != 0)
    v.c_[v.basis_->rank(pts)] = s > 0 ? 1 : p - 1;
  return v;
}

WedgeVector WedgeVector::scalar(unsigned n, std::uint32_t p, Scalar c)
{
  return WedgeVector(n, 0, p, Vector{c % p});
}

void WedgeVector::check_same_space(WedgeVector const &o) const
{
  if (n_ != o.n_ || r_ != o.r_ || p_ != o.p_)
    throw std::invalid_argument("WedgeVector: shape mismatch");
}

WedgeVector WedgeVector::operator+(WedgeVector const &o) const
{
  check_same_space(o);
  WedgeVector out = *this;
  PrimeField f(p_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = f.add(c_[i], o.c_[i]);
  return out;
}

WedgeVector WedgeVector::operator-(WedgeVector const &o) const
{
  check_same_space(o);
  WedgeVector out = *this;
  PrimeField f(p_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = f.sub(c_[i], o.c_[i]);
  return out;
}

WedgeVector WedgeVector::scaled(Scalar s) const
{
  WedgeVector out = *this;
  PrimeField f(p_);
  s %= p_;
  for (auto &x : out.c_)
    x = f.mul(x, s);
  return out;
}

bool WedgeVector::is_zero() const
{
  return std::all_of(c_.begin(), c_.end(), [](Scalar x) { return x == 0; });
}

std::string WedgeVector::to_string() const
{
  std::string s;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k])
      continue;
    if (!s.empty())
      s += " + ";
    s += std::to_string(c_[k]) + "*[";
    auto const &idx = basis_->index(k);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      if (a)
        s += ',';
      s += std::to_string(idx[a]);
    }
    s += ']';
  }
  return s.empty() ? "0" : s;
}

WedgeVector act(Perm const &sigma, WedgeVector const &v)
{
  if (sigma.degree() != v.n())
    throw std::invalid_argument("act: permutation degree does not match n");
  WedgeVector out(v.n(), v.r(), v.p());
  PrimeField f(v.p());
  auto const &basis = v.basis();
  std::vector<unsigned> pts(v.r());
  for (std::size_t k = 0; k < v.dim(); ++k) {
    Scalar c = v.coeffs()[k];
    if (!c)
      continue;
    auto const &idx = basis.index(k);
    for (unsigned a = 0; a < v.r(); ++a)
      pts[a] = sigma.image(idx[a]);
    int s = sort_sign(pts);
    std::size_t t = basis.rank(pts);
    out.coeffs()[t] = s > 0 ? f.add(out.coeffs()[t], c) : f.sub(out.coeffs()[t], c);
  }
  return out;
}

Matrix wedge_action_matrix(Perm const &sigma, unsigned r, std::uint32_t p)
{
  auto basis = WedgeBasis::get(sigma.degree(), r);
  Matrix m(basis->dim(), basis->dim(), p);
  std::vector<unsigned> pts(r);
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    auto const &idx = basis->index(k);
    for (unsigned a = 0; a < r; ++a)
      pts[a] = sigma.image(idx[a]);
    int s = sort_sign(pts);
    m(basis->rank(pts), k) = s > 0 ? 1 : p - 1;
  }
  return m;
}

WedgeVector delta(WedgeVector const &v)
{
  if (v.r() == 0)
    throw std::invalid_argument("delta: degree 0 has no boundary");
  WedgeVector out(v.n(), v.r() - 1, v.p());
  PrimeField f(v.p());
  auto const &basis = v.basis();
  auto const &lower = out.basis();
  MultiIndex face(v.r() - 1);
  for (std::size_t k = 0; k < v.dim(); ++k) {
    Scalar c = v.coeffs()[k];
    if (!c)
      continue;
    auto const &idx = basis.index(k);
    for (unsigned a = 0; a < v.r(); ++a) {
      for (unsigned b = 0, t = 0; b < v.r(); ++b)
        if (b != a)
          face[t++] = idx[b];
      std::size_t j = lower.rank(face);
      out.coeffs()[j] = a % 2 == 0 ? f.add(out.coeffs()[j], c) : f.sub(out.coeffs()[j], c);
    }
  }
  return out;
}

Matrix delta_matrix(unsigned n, unsigned r, std::uint32_t p)
{
  if (r == 0)
    throw std::invalid_argument("delta_matrix: degree 0 has no boundary");
  auto upper = WedgeBasis::get(n, r);
  auto lower = WedgeBasis::get(n, r - 1);
  Matrix m(lower->dim(), upper->dim(), p);
  MultiIndex face(r - 1);
  for (std::size_t k = 0; k < upper->dim(); ++k) {
    auto const &idx = upper->index(k);
    for (unsigned a = 0; a < r; ++a) {
      for (unsigned b = 0, t = 0; b < r; ++b)
        if (b != a)
          face[t++] = idx[b];
      m(lower->rank(face), k) = a % 2 == 0 ? 1 : p - 1;
    }
  }
  return m;
}

WedgeVector wedge(WedgeVector const &u, WedgeVector const &v)
{
  if (u.n() != v.n() || u.p() != v.p())
    throw std::invalid_argument("wedge: shape mismatch");
  unsigned n = u.n();
  WedgeVector out(n, u.r() + v.r(), u.p());
  PrimeField f(u.p());
  std::vector<unsigned> pts(u.r() + v.r());
  for (std::size_t a = 0; a < u.dim(); ++a) {
    Scalar ca = u.coeffs()[a];
    if (!ca)
      continue;
    auto const &ia = u.basis().index(a);
    for (std::size_t b = 0; b < v.dim(); ++b) {
      Scalar cb = v.coeffs()[b];
      if (!cb)
        continue;
      auto const &ib = v.basis().index(b);
      std::copy(ia.begin(), ia.end(), pts.begin());
      std::copy(ib.begin(), ib.end(), pts.begin() + ia.size());
      int s = sort_sign(pts);
      if (!s)
        continue;
      std::size_t t = out.basis().rank(pts);
      Scalar c = f.mul(ca, cb);
      out.coeffs()[t] = s > 0 ? f.add(out.coeffs()[t], c) : f.sub(out.coeffs()[t], c);
    }
  }
  return out;
}

bool delta_product_rule_check(WedgeVector const &u, WedgeVector const &v)
{
  unsigned n = u.n();
  std::uint32_t p = u.p();
  unsigned deg = u.r() + v.r();
  if (deg > n || deg == 0)
    return true; // both sides vanish identically
  WedgeVector lhs = delta(wedge(u, v));
  WedgeVector rhs(n, deg - 1, p);
  if (u.r() > 0)
    rhs = rhs + wedge(delta(u), v);
  if (v.r() > 0) {
    WedgeVector t = wedge(u, delta(v));
    rhs = u.r() % 2 == 0 ? rhs + t : rhs - t;
  }
  return lhs == rhs;
}

HookSpechtModule::HookSpechtModule(unsigned n, unsigned r, std::uint32_t p) : n_(n), r_(r), p_(p)
{
  if (r < 1 || r + 1 > n)
    throw std::invalid_argument("hook_specht: need 1 <= r <= n-1");
  auto all = WedgeBasis::get(n, r);
  for (std::size_t k = 0; k < all->dim(); ++k)
    if (all->index(k)[0] > 1)
      standard_.push_back(all->index(k));
  basis_ = Matrix(standard_.size(), all->dim(), p);
  for (std::size_t k = 0; k < standard_.size(); ++k) {
    std::vector<unsigned> pts{1};
    pts.insert(pts.end(), standard_[k].begin(), standard_[k].end());
    WedgeVector s = delta(WedgeVector::monomial(n, p, pts));
    std::copy(s.coeffs().begin(), s.coeffs().end(), basis_.row(k).begin());
  }
}

WedgeVector HookSpechtModule::standard_vector(std::size_t k) const
{
  return WedgeVector(n_, r_, p_, basis_.row_vector(k));
}

HookSpechtModule hook_specht(unsigned n, unsigned r, std::uint32_t p)
{
  return HookSpechtModule(n, r, p);
}

Vector rewrite_to_standard(HookSpechtModule const &m, WedgeVector const &u)
{
  if (u.n() != m.n() || u.r() != m.r() || u.p() != m.p())
    throw std::invalid_argument("rewrite_to_standard: shape mismatch");
  if (!delta(u).is_zero())
    throw std::invalid_argument("rewrite_to_standard: vector is not in the kernel of delta");
  Vector mu;
  mu.reserve(m.dim());
  for (auto const &j : m.standard_indices())
    mu.push_back(u.coefficient(j));
  return mu;
}

WedgeVector from_standard(HookSpechtModule const &m, Vector const &mu)
{
  if (mu.size() != m.dim())
    throw std::invalid_argument("from_standard: wrong number of coefficients");
  Matrix row(1, mu.size(), m.p(), mu);
  Matrix v = row * m.basis();
  return WedgeVector(m.n(), m.r(), m.p(), v.row_vector(0));
}

Perm alpha_perm(std::uint32_t p, unsigned n)
{
  if (n < p * p)
    throw std::invalid_argument("alpha_perm: need n >= p^2");
  std::vector<std::vector<unsigned>> cycles;
  for (unsigned i = 0; i < p; ++i) {
    std::vector<unsigned> c;
    for (unsigned j = 0; j < p; ++j)
      c.push_back(i * p + j + 1);
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cycles);
}

Perm beta_perm(std::uint32_t p, unsigned n)
{
  if (n < p * p)
    throw std::invalid_argument("beta_perm: need n >= p^2");
  std::vector<std::vector<unsigned>> cycles;
  for (unsigned i = 0; i < p; ++i) {
    std::vector<unsigned> c;
    for (unsigned j = 0; j < p; ++j)
      c.push_back(j * p + i + 1);
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(n, cycles);
}

WedgeVector vector_w(std::uint32_t p, unsigned k)
{
  if (k < p)
    throw std::invalid_argument("vector_w: need k >= p");
  unsigned n = k * p;
  WedgeVector w = WedgeVector::scalar(n, p, 1);
  for (unsigned t = 1; t <= p; ++t) {
    WedgeVector f(n, 1, p);
    for (unsigned s = 0; s < p; ++s)
      f.coeffs()[s * p + t - 1] = 1;
    w = wedge(w, f);
  }
  return w;
}

WedgeVector vector_z(std::uint32_t p, unsigned m, unsigned n)
{
  if (m < 2 || m > p)
    throw std::invalid_argument("vector_z: need 2 <= m <= p");
  if (n < p * p)
    throw std::invalid_argument("vector_z: need n >= p^2");
  WedgeVector z(n, p, p);
  for (unsigned x = 0; x < (1u << p); ++x) {
    std::vector<unsigned> pts;
    unsigned size = 0;
    for (unsigned a = 1; a <= p; ++a) {
      bool in = (x >> (a - 1)) & 1u;
      size += in;
      pts.push_back(in ? a : (m - 1) * p + a);
    }
    WedgeVector e = WedgeVector::monomial(n, p, pts);
    z = size % 2 == 0 ? z + e : z - e;
  }
  return z;
}

WedgeVector vector_wj(std::uint32_t p, MultiIndex const &j, unsigned n)
{
  if (j.size() != p)
    throw std::invalid_argument("vector_wj: j must have length p");
  if (j.front() == 1)
    throw std::invalid_argument("vector_wj: j must avoid 1");
  std::vector<unsigned> pts{1};
  pts.insert(pts.end(), j.begin(), j.end());
  WedgeVector base = delta(WedgeVector::monomial(n, p, pts));
  Perm a = alpha_perm(p, n);
  WedgeVector sum(n, p, p);
  WedgeVector cur = base;
  for (unsigned l = 0; l < p; ++l) {
    sum = sum + cur;
    cur = act(a, cur);
  }
  return sum;
}

unsigned filtration_level(MultiIndex const &i, std::uint32_t p)
{
  unsigned c = 0;
  for (auto x : i)
    c += x <= p;
  return c;
}

std::vector<WedgeVector> filtration_component(WedgeVector const &v, std::uint32_t p)
{
  if (v.r() != p)
    throw std::invalid_argument("filtration_component: vector must have degree p");
  std::vector<WedgeVector> out(p + 1, WedgeVector(v.n(), v.r(), v.p()));
  for (std::size_t k = 0; k < v.dim(); ++k)
    if (v.coeffs()[k])
      out[filtration_level(v.basis().index(k), p)].coeffs()[k] = v.coeffs()[k];
  return out;
}

Scalar bilinear_form(WedgeVector const &u, WedgeVector const &v)
{
  if (u.n() != v.n() || u.r() != v.r() || u.p() != v.p())
    throw std::invalid_argument("bilinear_form: shape mismatch");
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < u.dim(); ++k)
    s = (s + std::uint64_t(u.coeffs()[k]) * v.coeffs()[k]) % u.p();
  return static_cast<Scalar>(s);
}

} // namespace spechtlab
