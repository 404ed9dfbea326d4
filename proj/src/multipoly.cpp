#include "spechtlab/multipoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spechtlab/random.hpp"

namespace spechtlab {

namespace {

// Whether every byte of `a` is >= the matching byte of `b`.
bool bytes_dominate(std::uint64_t a, std::uint64_t b)
{
  for (unsigned i = 0; i < 8; ++i) {
    if (((a >> (8 * i)) & 0xff) < ((b >> (8 * i)) & 0xff))
      return false;
  }
  return true;
}

unsigned byte_sum(std::uint64_t m)
{
  unsigned s = 0;
  for (unsigned i = 0; i < 8; ++i)
    s += (m >> (8 * i)) & 0xff;
  return s;
}

// Whether adding the two packed exponent vectors overflows any byte.
bool bytes_overflow(std::uint64_t a, std::uint64_t b)
{
  for (unsigned i = 0; i < 8; ++i)
    if (((a >> (8 * i)) & 0xff) + ((b >> (8 * i)) & 0xff) > 0xff)
      return true;
  return false;
}

} // namespace

MultiPoly::MultiPoly(std::uint32_t p, unsigned nvars) : p_(p), nvars_(nvars)
{
  if (nvars > max_vars)
    throw PolyOverflow("MultiPoly: at most 8 variables are supported");
}

MultiPoly MultiPoly::constant(std::uint32_t p, unsigned nvars, Scalar c)
{
  MultiPoly r(p, nvars);
  if (c % p)
    r.terms_.push_back({0, c % p});
  return r;
}

MultiPoly MultiPoly::variable(std::uint32_t p, unsigned nvars, unsigned index)
{
  if (index >= nvars)
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  MultiPoly r(p, nvars);
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  r.terms_.push_back({monomial(e), 1 % p});
  return r;
}

MultiPoly::Monomial MultiPoly::monomial(std::vector<unsigned> const &exponents)
{
  if (exponents.size() > max_vars)
    throw PolyOverflow("MultiPoly: too many variables");
  Monomial m = 0;
  for (unsigned v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > 0xff)
      throw PolyOverflow("MultiPoly: exponent above 255");
    m |= Monomial(exponents[v]) << (8 * (max_vars - 1 - v));
  }
  return m;
}

unsigned MultiPoly::total_degree() const
{
  unsigned d = 0;
  for (auto const &t : terms_)
    d = std::max(d, byte_sum(t.first));
  return d;
}

Scalar MultiPoly::coefficient(Monomial m) const
{
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](Term const &t, Monomial key) { return t.first > key; });
  return (it != terms_.end() && it->first == m) ? it->second : 0;
}

void MultiPoly::check_compatible(MultiPoly const &o) const
{
  if (p_ != o.p_ || nvars_ != o.nvars_)
    throw std::invalid_argument("MultiPoly: operands from different rings");
}

MultiPoly MultiPoly::operator+(MultiPoly const &o) const
{
  check_compatible(o);
  PrimeField f(p_);
  MultiPoly r(p_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar c = f.add(terms_[i].second, o.terms_[j].second);
      if (c)
        r.terms_.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(Scalar c) const
{
  PrimeField f(p_);
  MultiPoly r(p_, nvars_);
  c %= p_;
  if (c == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (auto const &t : terms_)
    r.terms_.push_back({t.first, f.mul(t.second, c)});
  return r;
}

MultiPoly MultiPoly::operator-(MultiPoly const &o) const
{
  return *this + o.scaled(p_ - 1);
}

MultiPoly MultiPoly::operator*(MultiPoly const &o) const
{
  check_compatible(o);
  MultiPoly r(p_, nvars_);
  if (is_zero() || o.is_zero())
    return r;
  if (total_degree() + o.total_degree() > 0xff) {
    // byte-wise check only when the cheap bound fails
    for (auto const &a : terms_)
      for (auto const &b : o.terms_)
        if (bytes_overflow(a.first, b.first))
          throw PolyOverflow("MultiPoly: exponent above 255 in product");
  }
  PrimeField f(p_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (auto const &a : terms_)
    for (auto const &b : o.terms_)
      prod.push_back({a.first + b.first, f.mul(a.second, b.second)});
  std::sort(prod.begin(), prod.end(),
            [](Term const &x, Term const &y) { return x.first > y.first; });
  for (std::size_t i = 0; i < prod.size();) {
    Monomial m = prod[i].first;
    Scalar c = 0;
    for (; i < prod.size() && prod[i].first == m; ++i)
      c = f.add(c, prod[i].second);
    if (c)
      r.terms_.push_back({m, c});
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(MultiPoly const &d) const
{
  check_compatible(d);
  if (d.is_zero())
    throw std::domain_error("MultiPoly: division by zero");
  PrimeField f(p_);
  MultiPoly quotient(p_, nvars_);
  MultiPoly rem = *this;
  auto const &lead = d.terms_.front();
  Scalar lead_inv = f.inv(lead.second);
  std::vector<Term> qterms;
  while (!rem.is_zero()) {
    auto const &lt = rem.terms_.front();
    if (!bytes_dominate(lt.first, lead.first))
      throw std::domain_error("MultiPoly: division is not exact");
    MultiPoly t(p_, nvars_);
    t.terms_.push_back({lt.first - lead.first, f.mul(lt.second, lead_inv)});
    qterms.push_back(t.terms_.front());
    rem = rem - t * d;
  }
  // leading terms come out in decreasing order
  quotient.terms_ = std::move(qterms);
  return quotient;
}

std::string MultiPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const &[m, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    bool wrote = false;
    if (c != 1 || m == 0) {
      os << c;
      wrote = true;
    }
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = exponent(m, v);
      if (!e)
        continue;
      if (wrote)
        os << '*';
      os << 'a' << (v + 1);
      if (e > 1)
        os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, unsigned nvars)
: rows_(rows), cols_(cols), p_(p), nvars_(nvars), e_(rows * cols, MultiPoly(p, nvars))
{}

PolyMatrix PolyMatrix::linear_pencil(std::vector<Matrix> const &coeffs)
{
  if (coeffs.empty())
    throw std::invalid_argument("PolyMatrix::linear_pencil: no coefficients");
  auto const &m0 = coeffs.front();
  unsigned n = static_cast<unsigned>(coeffs.size());
  PolyMatrix r(m0.rows(), m0.cols(), m0.p(), n);
  for (unsigned v = 0; v < n; ++v) {
    auto const &c = coeffs[v];
    if (c.rows() != m0.rows() || c.cols() != m0.cols() || c.p() != m0.p())
      throw std::invalid_argument("PolyMatrix::linear_pencil: shape mismatch");
    MultiPoly x = MultiPoly::variable(m0.p(), n, v);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j)
        if (c(i, j))
          r(i, j) = r(i, j) + x.scaled(c(i, j));
  }
  return r;
}

PolyMatrix PolyMatrix::constant(Matrix const &m, unsigned nvars)
{
  PolyMatrix r(m.rows(), m.cols(), m.p(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r(i, j) = MultiPoly::constant(m.p(), nvars, m(i, j));
  return r;
}

unsigned PolyMatrix::max_degree() const
{
  unsigned d = 0;
  for (auto const &x : e_)
    d = std::max(d, x.total_degree());
  return d;
}

PolyMatrix PolyMatrix::operator*(PolyMatrix const &o) const
{
  if (cols_ != o.rows_ || p_ != o.p_ || nvars_ != o.nvars_)
    throw std::invalid_argument("PolyMatrix: shape mismatch in product");
  PolyMatrix r(rows_, o.cols_, p_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      auto const &a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        auto const &b = o(k, j);
        if (!b.is_zero())
          r(i, j) = r(i, j) + a * b;
      }
    }
  return r;
}

std::size_t bareiss_rank(PolyMatrix const &m, std::uint64_t work_budget)
{
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<MultiPoly> a;
  a.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a.push_back(m(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> MultiPoly & { return a[i * cols + j]; };

  std::uint64_t work = 0;
  auto charge = [&](MultiPoly const &x, MultiPoly const &y) {
    work += std::uint64_t(x.size()) * y.size();
    if (work > work_budget)
      throw PolyOverflow("bareiss_rank: work budget exceeded");
  };

  MultiPoly prev = MultiPoly::constant(m.p(), m.nvars(), 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // prefer the sparsest nonzero pivot
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!at(i, c).is_zero() && (piv == rows || at(i, c).size() < at(piv, c).size()))
        piv = i;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(at(piv, j), at(r, j));
    MultiPoly const pivot = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      MultiPoly const lead = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        MultiPoly const &x = at(i, j);
        MultiPoly const &y = at(r, j);
        charge(pivot, x);
        charge(lead, y);
        MultiPoly num = pivot * x;
        if (!lead.is_zero() && !y.is_zero())
          num = num - lead * y;
        charge(num, prev);
        at(i, j) = num.divide_exact(prev);
      }
      at(i, c) = MultiPoly(m.p(), m.nvars());
    }
    prev = pivot;
    ++r;
  }
  return r;
}

namespace {

template<class Field>
std::vector<Scalar> field_matmul(Field const &f, std::vector<Scalar> const &a,
                                 std::vector<Scalar> const &b, std::size_t n)
{
  std::vector<Scalar> c(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar x = a[i * n + k];
      if (x == f.zero())
        continue;
      Scalar const *brow = b.data() + k * n;
      Scalar *crow = c.data() + i * n;
      for (std::size_t j = 0; j < n; ++j)
        if (brow[j] != f.zero())
          crow[j] = f.add(crow[j], f.mul(x, brow[j]));
    }
  return c;
}

// Runs `trial(index)` for each trial and returns the maximum. Trials run
// under OpenMP; the max is order-independent so results are reproducible.
std::size_t max_over_trials(unsigned trials, std::function<std::size_t(unsigned)> const &trial)
{
  std::size_t best = 0;
  int nt = static_cast<int>(trials);
#pragma omp parallel for schedule(dynamic) reduction(max : best)
  for (int t = 0; t < nt; ++t)
    best = std::max(best, trial(static_cast<unsigned>(t)));
  return best;
}

std::uint64_t evaluation_field_order(std::uint32_t p, unsigned degree, std::size_t rows,
                                     std::size_t cols)
{
  std::uint64_t need = 4ull * std::max(1u, degree) * std::max<std::size_t>(1, std::min(rows, cols));
  std::uint64_t q = p;
  while (q < need)
    q *= p;
  return q;
}

void certify(GenericRankResult &res, PolyMatrix const &symbolic, GenericRankOptions const &opts)
{
  try {
    std::size_t exact = bareiss_rank(symbolic, opts.certify_work_budget);
    if (exact != res.rank)
      throw std::logic_error("generic_rank: randomized rank " + std::to_string(res.rank) +
                             " disagrees with certified rank " + std::to_string(exact));
    res.certified = true;
  } catch (PolyOverflow const &) {
    res.certified = false;
  }
}

} // namespace

GenericRankResult generic_rank(PolyMatrix const &m, GenericRankOptions const &opts)
{
  GenericRankResult res;
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) {
    res.certified = true;
    return res;
  }
  unsigned degree = m.max_degree();
  std::uint32_t p = m.p();
  unsigned nvars = m.nvars();
  unsigned trials = std::max(1u, opts.trials);

  if (degree == 0 || nvars == 0) {
    std::vector<unsigned> zero;
    Matrix c(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        c(i, j) = m(i, j).coefficient(0);
    res.rank = rank(c);
    res.certified = true;
    res.field_order = p;
    return res;
  }

  std::uint64_t q = evaluation_field_order(p, degree, rows, cols);
  res.field_order = q;
  if (q == p) {
    PrimeField f(p);
    res.rank = max_over_trials(trials, [&](unsigned t) {
      Rng rng = make_rng(opts.seed, t);
      std::vector<Scalar> point(nvars);
      for (auto &x : point)
        x = f.random(rng);
      auto data = m.evaluate(f, point);
      return rank(Matrix(rows, cols, p, std::move(data)));
    });
  } else {
    ExtField f = ExtField::at_least(p, q);
    res.rank = max_over_trials(trials, [&](unsigned t) {
      Rng rng = make_rng(opts.seed, t);
      std::vector<Scalar> point(nvars);
      for (auto &x : point)
        x = f.random(rng);
      auto data = m.evaluate(f, point);
      return rank_in_field(f, data, rows, cols);
    });
  }
  if (rows <= opts.certify_cutoff && cols <= opts.certify_cutoff)
    certify(res, m, opts);
  return res;
}

GenericRankResult generic_rank_of_pencil_power(std::vector<Matrix> const &coeffs, unsigned power,
                                               GenericRankOptions const &opts)
{
  if (coeffs.empty())
    throw std::invalid_argument("generic_rank_of_pencil_power: empty pencil");
  std::size_t n = coeffs.front().rows();
  for (auto const &c : coeffs)
    if (c.rows() != n || c.cols() != n || c.p() != coeffs.front().p())
      throw std::invalid_argument("generic_rank_of_pencil_power: pencil must be square");
  GenericRankResult res;
  if (n == 0 || power == 0) {
    res.rank = power == 0 ? n : 0;
    res.certified = true;
    return res;
  }
  std::uint32_t p = coeffs.front().p();
  unsigned nvars = static_cast<unsigned>(coeffs.size());
  std::uint64_t q = evaluation_field_order(p, power, n, n);
  res.field_order = q;
  unsigned trials = std::max(1u, opts.trials);

  auto run = [&](auto const &f) {
    return max_over_trials(trials, [&](unsigned t) {
      Rng rng = make_rng(opts.seed, t);
      std::vector<Scalar> point(nvars);
      for (auto &x : point)
        x = f.random(rng);
      std::vector<Scalar> pencil(n * n, f.zero());
      for (unsigned v = 0; v < nvars; ++v) {
        auto const &c = coeffs[v].data();
        for (std::size_t i = 0; i < n * n; ++i)
          if (c[i])
            pencil[i] = f.add(pencil[i], f.mul(point[v], f.from_int(c[i])));
      }
      std::vector<Scalar> acc = pencil;
      for (unsigned k = 1; k < power; ++k)
        acc = field_matmul(f, acc, pencil, n);
      return rank_in_field(f, acc, n, n);
    });
  };
  if (q == p)
    res.rank = run(PrimeField(p));
  else
    res.rank = run(ExtField::at_least(p, q));

  if (n <= opts.certify_cutoff) {
    try {
      PolyMatrix base = PolyMatrix::linear_pencil(coeffs);
      PolyMatrix sym = base;
      for (unsigned k = 1; k < power; ++k)
        sym = sym * base;
      certify(res, sym, opts);
    } catch (PolyOverflow const &) {
      res.certified = false;
    }
  }
  return res;
}

} // namespace spechtlab
