#ifndef SPECHTLAB_MATRIX_HPP
#define SPECHTLAB_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spechtlab/field.hpp"

namespace spechtlab {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over F_p.
class Matrix
{
public:
  Matrix() : p_(2) {}
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::vector<Scalar> data);

  static Matrix identity(std::size_t n, std::uint32_t p);
  // Rows given as integer lists, reduced mod p.
  static Matrix from_rows(std::vector<std::vector<std::int64_t>> const &rows, std::uint32_t p);
  // Matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_row_vectors(std::vector<Vector> const &rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Scalar const> row(std::size_t r) const
  { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector col_vector(std::size_t c) const;

  std::vector<Scalar> const &data() const { return data_; }
  std::vector<Scalar> &data() { return data_; }

  Matrix transpose() const;
  Matrix operator*(Matrix const &o) const;
  Matrix operator+(Matrix const &o) const;
  Matrix operator-(Matrix const &o) const;
  Matrix scaled(Scalar c) const;
  Vector apply(std::span<Scalar const> v) const;
  Matrix pow(std::uint64_t e) const;
  bool is_zero() const;

  // Append the rows of `o` below this matrix.
  void append_rows(Matrix const &o);
  void append_row(std::span<Scalar const> v);

  bool operator==(Matrix const &o) const
  { return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_; }

  std::string to_string() const;

private:
  void check_same_shape(Matrix const &o, char const *what) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_;
  std::vector<Scalar> data_;
};

struct Echelon
{
  Matrix reduced;                 // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row of `reduced`
};

// Row rank by Gaussian elimination. F_2 uses bit-packed rows; odd p uses
// 32-bit entries. Row updates below a pivot run under OpenMP.
std::size_t rank(Matrix const &m);

// Reduced row echelon form.
Echelon rref(Matrix const &m);

// Basis of {x : M x = 0}, one basis vector per row of the result.
Matrix nullspace(Matrix const &m);

// One solution of A x = b, or std::nullopt when the system is inconsistent.
// Throws std::invalid_argument when b has the wrong length.
std::optional<Vector> solve(Matrix const &a, std::span<Scalar const> b);

// Inverse of a square matrix, or std::nullopt when singular.
std::optional<Matrix> inverse(Matrix const &m);

// Rows of `m` reduced to a basis of their span (reduced echelon rows).
Matrix row_space_basis(Matrix const &m);

// Whether v lies in the row space of `basis`.
bool in_row_space(Matrix const &basis, std::span<Scalar const> v);

// Intersection of the row spaces of a and b, as a row basis.
Matrix intersect_row_spaces(Matrix const &a, Matrix const &b);

// Generic elimination over any field type with add/sub/mul/inv; used with
// ExtField for randomized generic ranks. `data` is row-major and destroyed.
template<class Field>
std::size_t rank_in_field(Field const &f, std::vector<Scalar> &data, std::size_t rows,
                          std::size_t cols);

namespace reference {

// Plain serial elimination over F_p with no packing or threading.
// Kept as the oracle for the optimized kernels.
std::size_t rank_serial(Matrix const &m);
Matrix nullspace_serial(Matrix const &m);

} // namespace reference

} // namespace spechtlab

#include "spechtlab/detail/elimination.hpp"

#endif
