#ifndef SPECHTLAB_EXTERIOR_HPP
#define SPECHTLAB_EXTERIOR_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spechtlab/matrix.hpp"
#include "spechtlab/perm.hpp"

namespace spechtlab {

// Strictly increasing 1-based tuple (i_1 < ... < i_r).
using MultiIndex = std::vector<unsigned>;

std::uint64_t binomial(unsigned n, unsigned k);

// The r-subsets of {1..n} in lexicographic order, with rank/unrank.
class WedgeBasis
{
public:
  WedgeBasis(unsigned n, unsigned r);

  // Shared instance per (n, r).
  static std::shared_ptr<WedgeBasis const> get(unsigned n, unsigned r);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::size_t dim() const { return dim_; }

  std::size_t rank(MultiIndex const &i) const;
  MultiIndex unrank(std::size_t k) const;
  MultiIndex const &index(std::size_t k) const { return all_[k]; }

private:
  unsigned n_, r_;
  std::size_t dim_;
  std::vector<MultiIndex> all_;
};

// Element of the r-th exterior power of F_p^n in the monomial basis.
class WedgeVector
{
public:
  WedgeVector(unsigned n, unsigned r, std::uint32_t p);
  WedgeVector(unsigned n, unsigned r, std::uint32_t p, Vector coeffs);

  // e_{i_1} ^ ... ^ e_{i_r} for an arbitrary tuple of distinct points (the
  // tuple need not be increasing; the sign of the sorting permutation is
  // applied). Repeated points give 0.
  static WedgeVector monomial(unsigned n, std::uint32_t p, std::vector<unsigned> const &points);
  // Degree-0 scalar.
  static WedgeVector scalar(unsigned n, std::uint32_t p, Scalar c);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return c_.size(); }
  WedgeBasis const &basis() const { return *basis_; }

  Vector const &coeffs() const { return c_; }
  Vector &coeffs() { return c_; }
  Scalar coefficient(MultiIndex const &i) const { return c_[basis_->rank(i)]; }

  WedgeVector operator+(WedgeVector const &o) const;
  WedgeVector operator-(WedgeVector const &o) const;
  WedgeVector scaled(Scalar s) const;
  bool operator==(WedgeVector const &o) const
  { return n_ == o.n_ && r_ == o.r_ && p_ == o.p_ && c_ == o.c_; }
  bool is_zero() const;

  // `c1*[i1,..,ir] + c2*[...]`, coefficients in 0..p-1; "0" for zero.
  std::string to_string() const;

private:
  void check_same_space(WedgeVector const &o) const;

  unsigned n_, r_;
  std::uint32_t p_;
  std::shared_ptr<WedgeBasis const> basis_;
  Vector c_;
};

// sigma . e_i = sign(pi) e_{sort(sigma(i))}
WedgeVector act(Perm const &sigma, WedgeVector const &v);
// Matrix of the action on the monomial basis (column k = image of basis k).
Matrix wedge_action_matrix(Perm const &sigma, unsigned r, std::uint32_t p);

// Boundary map to degree r-1 (r >= 1); delta of a degree-1 monomial is 1.
WedgeVector delta(WedgeVector const &v);
// Matrix of delta_r : C(n,r) columns, C(n,r-1) rows.
Matrix delta_matrix(unsigned n, unsigned r, std::uint32_t p);

WedgeVector wedge(WedgeVector const &u, WedgeVector const &v);

// delta(u ^ v) == delta(u) ^ v + (-1)^r u ^ delta(v); degree-0 inputs have
// delta = 0.
bool delta_product_rule_check(WedgeVector const &u, WedgeVector const &v);

// The hook Specht module as the span of delta(e_1 ^ e_j), j in J^(r).
class HookSpechtModule
{
public:
  HookSpechtModule(unsigned n, unsigned r, std::uint32_t p);

  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return standard_.size(); }

  // J^(r): multi-indices avoiding 1, lexicographic.
  std::vector<MultiIndex> const &standard_indices() const { return standard_; }
  // Rows are the standard basis vectors in monomial coordinates.
  Matrix const &basis() const { return basis_; }
  WedgeVector standard_vector(std::size_t k) const;

private:
  unsigned n_, r_;
  std::uint32_t p_;
  std::vector<MultiIndex> standard_;
  Matrix basis_;
};

HookSpechtModule hook_specht(unsigned n, unsigned r, std::uint32_t p);

// Coefficients of u in the standard basis: the monomial coefficients of u
// at the indices in J^(r). Throws if delta(u) != 0.
Vector rewrite_to_standard(HookSpechtModule const &m, WedgeVector const &u);
WedgeVector from_standard(HookSpechtModule const &m, Vector const &mu);

// The explicit vectors on {1..p^2} inside a degree n >= p^2:
// alpha = p row cycles (1..p)(p+1..2p)..., beta = p column cycles.
Perm alpha_perm(std::uint32_t p, unsigned n);
Perm beta_perm(std::uint32_t p, unsigned n);

// (e_1 + e_{p+1} + ...)^(e_2 + e_{p+2} + ...)^...^(e_p + ... + e_{p^2}), n = kp.
WedgeVector vector_w(std::uint32_t p, unsigned k);
// sum over X subset {1..p} of (-1)^|X| e_{i(X)}, i(X)_a = a if a in X else (m-1)p + a.
WedgeVector vector_z(std::uint32_t p, unsigned m, unsigned n);
// sum_{l<p} alpha^l delta(e_1 ^ e_j), j in J^(p).
WedgeVector vector_wj(std::uint32_t p, MultiIndex const &j, unsigned n);

// Components v_0..v_p with v_c supported on indices meeting {1..p} in c points.
std::vector<WedgeVector> filtration_component(WedgeVector const &v, std::uint32_t p);
unsigned filtration_level(MultiIndex const &i, std::uint32_t p);

Scalar bilinear_form(WedgeVector const &u, WedgeVector const &v);

} // namespace spechtlab

#endif
