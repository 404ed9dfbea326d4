#ifndef SPECHTLAB_MULTIPOLY_HPP
#define SPECHTLAB_MULTIPOLY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spechtlab/field.hpp"
#include "spechtlab/matrix.hpp"

namespace spechtlab {

// Thrown when a polynomial computation leaves the supported range
// (more than 8 variables, a per-variable exponent above 255, or a work
// budget running out).
struct PolyOverflow : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Sparse polynomial over F_p in variables a_1..a_n (n <= 8). Exponent
// vectors are packed one byte per variable with a_1 in the most
// significant byte, so integer order on the packed key is lex order.
// Terms are kept sorted by decreasing key with no zero coefficients.
class MultiPoly
{
public:
  using Monomial = std::uint64_t;
  using Term = std::pair<Monomial, Scalar>;

  static constexpr unsigned max_vars = 8;

  MultiPoly(std::uint32_t p, unsigned nvars);

  static MultiPoly constant(std::uint32_t p, unsigned nvars, Scalar c);
  // The variable a_{index+1}.
  static MultiPoly variable(std::uint32_t p, unsigned nvars, unsigned index);
  static Monomial monomial(std::vector<unsigned> const &exponents);
  static unsigned exponent(Monomial m, unsigned var)
  { return static_cast<unsigned>((m >> (8 * (max_vars - 1 - var))) & 0xff); }

  std::uint32_t p() const { return p_; }
  unsigned nvars() const { return nvars_; }
  std::vector<Term> const &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;
  Scalar coefficient(Monomial m) const;

  MultiPoly operator+(MultiPoly const &o) const;
  MultiPoly operator-(MultiPoly const &o) const;
  MultiPoly operator*(MultiPoly const &o) const;
  MultiPoly scaled(Scalar c) const;
  bool operator==(MultiPoly const &o) const
  { return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Exact quotient; throws std::domain_error if `d` does not divide.
  MultiPoly divide_exact(MultiPoly const &d) const;

  // Value at a point of any field whose prime subfield is F_p.
  template<class Field>
  Scalar evaluate(Field const &f, std::vector<Scalar> const &point) const;

  std::string to_string() const;

private:
  void check_compatible(MultiPoly const &o) const;

  std::uint32_t p_;
  unsigned nvars_;
  std::vector<Term> terms_;
};

// Matrix with MultiPoly entries, all over the same ring.
class PolyMatrix
{
public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, unsigned nvars);

  // sum_i a_i * coeffs[i]
  static PolyMatrix linear_pencil(std::vector<Matrix> const &coeffs);
  static PolyMatrix constant(Matrix const &m, unsigned nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t p() const { return p_; }
  unsigned nvars() const { return nvars_; }
  unsigned max_degree() const;

  MultiPoly const &operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  MultiPoly &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  PolyMatrix operator*(PolyMatrix const &o) const;

  template<class Field>
  std::vector<Scalar> evaluate(Field const &f, std::vector<Scalar> const &point) const;

private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  unsigned nvars_;
  std::vector<MultiPoly> e_;
};

struct GenericRankOptions
{
  unsigned trials = 8;
  std::uint64_t seed = 0;
  // Fraction-free certification is attempted when both dimensions are at
  // most this size.
  std::size_t certify_cutoff = 64;
  // Budget, in monomial products, for the certification run.
  std::uint64_t certify_work_budget = 40'000'000;
};

struct GenericRankResult
{
  std::size_t rank = 0;
  bool certified = false;
  std::uint64_t field_order = 0; // order of the evaluation field
};

// Rank over the rational function field F_p(a_1..a_n). Maximum rank over
// random evaluations in F_{p^e} with p^e >= 4 * degree * min(rows, cols);
// certified by fraction-free elimination when small enough.
GenericRankResult generic_rank(PolyMatrix const &m, GenericRankOptions const &opts = {});

// Rank of (sum_i a_i coeffs[i])^power over F_p(a). Evaluates the pencil
// numerically and powers the evaluated matrix; the symbolic power is only
// formed for certification.
GenericRankResult generic_rank_of_pencil_power(std::vector<Matrix> const &coeffs,
                                               unsigned power,
                                               GenericRankOptions const &opts = {});

// Exact rank by fraction-free (Bareiss) elimination over F_p[a].
// Throws PolyOverflow if the work budget is exceeded.
std::size_t bareiss_rank(PolyMatrix const &m, std::uint64_t work_budget);

template<class Field>
Scalar MultiPoly::evaluate(Field const &f, std::vector<Scalar> const &point) const
{
  if (point.size() != nvars_)
    throw std::invalid_argument("MultiPoly::evaluate: point has wrong dimension");
  Scalar acc = f.zero();
  for (auto const &[mono, c] : terms_) {
    Scalar t = f.from_int(c);
    for (unsigned v = 0; v < nvars_ && t != f.zero(); ++v) {
      unsigned e = exponent(mono, v);
      if (e)
        t = f.mul(t, f.pow(point[v], e));
    }
    acc = f.add(acc, t);
  }
  return acc;
}

template<class Field>
std::vector<Scalar> PolyMatrix::evaluate(Field const &f, std::vector<Scalar> const &point) const
{
  std::vector<Scalar> out(rows_ * cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    out[i] = e_[i].evaluate(f, point);
  return out;
}

} // namespace spechtlab

#endif
