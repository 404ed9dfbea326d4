#include "spechtlab/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spechtlab {

namespace {

// Number of (p-1)^2 products that can be added to a reduced value
// without overflowing 64 bits.
std::uint64_t accumulation_limit(std::uint64_t p)
{
  std::uint64_t sq = (p - 1) * (p - 1);
  if (sq == 0)
    return std::uint64_t(1) << 30;
  return std::min<std::uint64_t>((~std::uint64_t(0) - p) / sq, std::uint64_t(1) << 30);
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
: rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0)
{}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Scalar> data)
: rows_(rows), cols_(cols), p_(p), data_(std::move(data))
{
  if (data_.size() != rows * cols)
    throw std::invalid_argument("Matrix: data length does not match shape");
  for (auto &x : data_)
    x %= p_;
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p)
{
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<std::int64_t>> const &rows, std::uint32_t p)
{
  PrimeField f(p);
  std::size_t nc = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), nc, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc)
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j)
      m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_row_vectors(std::vector<Vector> const &rows, std::size_t cols, std::uint32_t p)
{
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("Matrix::from_row_vectors: wrong row length");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j] % p;
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const
{
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::col_vector(std::size_t c) const
{
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v[i] = (*this)(i, c);
  return v;
}

void Matrix::check_same_shape(Matrix const &o, char const *what) const
{
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument(std::string("Matrix: shape mismatch in ") + what);
}

Matrix Matrix::transpose() const
{
  Matrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(Matrix const &o) const
{
  if (cols_ != o.rows_ || p_ != o.p_)
    throw std::invalid_argument("Matrix: shape mismatch in product");
  Matrix r(rows_, o.cols_, p_);
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rows_);
  std::uint64_t const p = p_;
  [[maybe_unused]] bool big = rows_ * cols_ * o.cols_ >= (1u << 18);
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    std::size_t i = static_cast<std::size_t>(ii);
    std::vector<std::uint64_t> acc(o.cols_, 0);
    std::uint64_t const limit = accumulation_limit(p);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0)
        continue;
      Scalar const *orow = o.data_.data() + k * o.cols_;
      for (std::size_t j = 0; j < o.cols_; ++j)
        acc[j] += a * orow[j];
      if (++pending == limit) {
        for (auto &x : acc)
          x %= p;
        pending = 0;
      }
    }
    for (std::size_t j = 0; j < o.cols_; ++j)
      r(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return r;
}

Matrix Matrix::operator+(Matrix const &o) const
{
  check_same_shape(o, "sum");
  PrimeField f(p_);
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = f.add(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::operator-(Matrix const &o) const
{
  check_same_shape(o, "difference");
  PrimeField f(p_);
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = f.sub(data_[i], o.data_[i]);
  return r;
}

Matrix Matrix::scaled(Scalar c) const
{
  PrimeField f(p_);
  Matrix r(*this);
  for (auto &x : r.data_)
    x = f.mul(x, c % p_);
  return r;
}

Vector Matrix::apply(std::span<Scalar const> v) const
{
  if (v.size() != cols_)
    throw std::invalid_argument("Matrix::apply: vector length mismatch");
  Vector out(rows_, 0);
  std::uint64_t const limit = accumulation_limit(p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0, pending = 0;
    Scalar const *r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += std::uint64_t(r[j]) * (v[j] % p_);
      if (++pending == limit) {
        acc %= p_;
        pending = 0;
      }
    }
    out[i] = static_cast<Scalar>(acc % p_);
  }
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const
{
  if (rows_ != cols_)
    throw std::invalid_argument("Matrix::pow: matrix not square");
  Matrix r = identity(rows_, p_);
  Matrix b = *this;
  while (e) {
    if (e & 1)
      r = r * b;
    e >>= 1;
    if (e)
      b = b * b;
  }
  return r;
}

bool Matrix::is_zero() const
{
  for (auto x : data_)
    if (x)
      return false;
  return true;
}

void Matrix::append_rows(Matrix const &o)
{
  if (o.rows_ == 0)
    return;
  if (rows_ == 0 && cols_ == 0) {
    *this = o;
    return;
  }
  if (o.cols_ != cols_ || o.p_ != p_)
    throw std::invalid_argument("Matrix::append_rows: shape mismatch");
  data_.insert(data_.end(), o.data_.begin(), o.data_.end());
  rows_ += o.rows_;
}

void Matrix::append_row(std::span<Scalar const> v)
{
  if (v.size() != cols_)
    throw std::invalid_argument("Matrix::append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::string Matrix::to_string() const
{
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

namespace {

// Odd-p elimination: one reduction per updated entry, 64-bit products.
std::vector<std::size_t> eliminate_prime(PrimeField const &f, std::vector<Scalar> &data,
                                         std::size_t rows, std::size_t cols, bool reduce)
{
  std::uint64_t const p = f.characteristic();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (data[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j)
        std::swap(data[piv * cols + j], data[r * cols + j]);
    Scalar *prow = data.data() + r * cols;
    Scalar inv = f.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j)
      prow[j] = f.mul(prow[j], inv);

    std::size_t first = reduce ? 0 : r + 1;
    std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(rows);
    [[maybe_unused]] bool big =
        (rows - first) * (cols - c) >= detail::parallel_update_threshold;
#pragma omp parallel for schedule(static) if (big)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(first); ii < nrows; ++ii) {
      std::size_t i = static_cast<std::size_t>(ii);
      if (i == r)
        continue;
      Scalar *row = data.data() + i * cols;
      std::uint64_t factor = row[c];
      if (!factor)
        continue;
      std::uint64_t negf = p - factor;
      for (std::size_t j = c; j < cols; ++j)
        row[j] = static_cast<Scalar>((row[j] + negf * prow[j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// F_2 elimination on bit-packed rows.
std::vector<std::size_t> eliminate_gf2(std::vector<std::uint64_t> &bits, std::size_t rows,
                                       std::size_t cols, std::size_t words, bool reduce)
{
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t w = c / 64;
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (bits[i * words + w] & mask) {
        piv = i;
        break;
      }
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t k = w; k < words; ++k)
        std::swap(bits[piv * words + k], bits[r * words + k]);
    std::uint64_t const *prow = bits.data() + r * words;
    std::size_t first = reduce ? 0 : r + 1;
    std::ptrdiff_t nrows = static_cast<std::ptrdiff_t>(rows);
    [[maybe_unused]] bool big =
        (rows - first) * (words - w) * 64 >= detail::parallel_update_threshold;
#pragma omp parallel for schedule(static) if (big)
    for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(first); ii < nrows; ++ii) {
      std::size_t i = static_cast<std::size_t>(ii);
      if (i == r)
        continue;
      std::uint64_t *row = bits.data() + i * words;
      if (row[w] & mask)
        for (std::size_t k = w; k < words; ++k)
          row[k] ^= prow[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon echelon_impl(Matrix const &m, bool reduce)
{
  std::size_t rows = m.rows(), cols = m.cols();
  if (m.p() == 2) {
    std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (m(i, j) & 1)
          bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
    auto piv = eliminate_gf2(bits, rows, cols, words, reduce);
    Matrix out(piv.size(), cols, 2);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        out(i, j) = (bits[i * words + j / 64] >> (j % 64)) & 1;
    return {std::move(out), std::move(piv)};
  }
  std::vector<Scalar> data = m.data();
  auto piv = eliminate_prime(m.field(), data, rows, cols, reduce);
  data.resize(piv.size() * cols);
  return {Matrix(piv.size(), cols, m.p(), std::move(data)), std::move(piv)};
}

} // namespace

std::size_t rank(Matrix const &m)
{
  if (m.empty())
    return 0;
  if (m.p() == 2) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> bits(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (m(i, j) & 1)
          bits[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
    return eliminate_gf2(bits, rows, cols, words, false).size();
  }
  std::vector<Scalar> data = m.data();
  return eliminate_prime(m.field(), data, m.rows(), m.cols(), false).size();
}

Echelon rref(Matrix const &m)
{
  if (m.empty())
    return {Matrix(0, m.cols(), m.p()), {}};
  return echelon_impl(m, true);
}

Matrix nullspace(Matrix const &m)
{
  std::size_t cols = m.cols();
  Echelon e = rref(m);
  PrimeField f(m.p());
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivots)
    is_pivot[c] = true;
  Matrix basis(0, cols, m.p());
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Vector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

std::optional<Vector> solve(Matrix const &a, std::span<Scalar const> b)
{
  if (b.size() != a.rows())
    throw std::invalid_argument("solve: right-hand side length mismatch");
  std::size_t cols = a.cols();
  Matrix aug(a.rows(), cols + 1, a.p());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      aug(i, j) = a(i, j);
    aug(i, cols) = b[i] % a.p();
  }
  Echelon e = rref(aug);
  Vector x(cols, 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == cols)
      return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, cols);
  }
  return x;
}

std::optional<Matrix> inverse(Matrix const &m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix is not square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.p());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    return std::nullopt;
  Matrix inv(n, n, m.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix row_space_basis(Matrix const &m)
{
  return rref(m).reduced;
}

bool in_row_space(Matrix const &basis, std::span<Scalar const> v)
{
  if (basis.rows() == 0) {
    for (auto x : v)
      if (x)
        return false;
    return true;
  }
  Matrix ext = basis;
  std::size_t r0 = rank(basis);
  ext.append_row(v);
  return rank(ext) == r0;
}

Matrix intersect_row_spaces(Matrix const &a, Matrix const &b)
{
  if (a.cols() != b.cols() || a.p() != b.p())
    throw std::invalid_argument("intersect_row_spaces: shape mismatch");
  std::size_t n = a.cols();
  Matrix ba = row_space_basis(a), bb = row_space_basis(b);
  if (ba.rows() == 0 || bb.rows() == 0)
    return Matrix(0, n, a.p());
  // x A = y B  <=>  [x | y] [A; -B] = 0
  Matrix stacked = ba;
  stacked.append_rows(bb.scaled(a.p() - 1));
  Matrix kernel = nullspace(stacked.transpose());
  Matrix out(0, n, a.p());
  PrimeField f(a.p());
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    Vector v(n, 0);
    for (std::size_t i = 0; i < ba.rows(); ++i) {
      Scalar c = kernel(k, i);
      if (!c)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = f.add(v[j], f.mul(c, ba(i, j)));
    }
    out.append_row(v);
  }
  return row_space_basis(out);
}

namespace reference {

std::size_t rank_serial(Matrix const &m)
{
  PrimeField f(m.p());
  std::vector<std::vector<Scalar>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    a[i] = m.row_vector(i);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0)
      ++piv;
    if (piv == a.size())
      continue;
    std::swap(a[piv], a[r]);
    Scalar inv = f.inv(a[r][c]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Scalar factor = f.mul(a[i][c], inv);
      for (std::size_t j = 0; j < m.cols(); ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    if (++r == a.size())
      break;
  }
  return r;
}

Matrix nullspace_serial(Matrix const &m)
{
  PrimeField f(m.p());
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows);
  for (std::size_t i = 0; i < rows; ++i)
    a[i] = m.row_vector(i);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[r]);
    Scalar inv = f.inv(a[r][c]);
    for (auto &x : a[r])
      x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0)
        continue;
      Scalar factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix basis(0, cols, m.p());
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc])
      continue;
    Vector v(cols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = f.neg(a[i][fc]);
    basis.append_row(v);
  }
  return basis;
}

} // namespace reference

} // namespace spechtlab
