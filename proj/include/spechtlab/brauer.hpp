#ifndef SPECHTLAB_BRAUER_HPP
#define SPECHTLAB_BRAUER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spechtlab/exterior.hpp"
#include "spechtlab/matrix.hpp"
#include "spechtlab/permgroup.hpp"

namespace spechtlab {

// A representation of a permutation group on F_p^N. Vectors are always in
// ambient coordinates; when `subspace` is set the module is that invariant
// subspace (rows of the matrix) with the ambient action restricted.
class ModuleRep
{
public:
  using Apply = std::function<Vector(Perm const &, std::span<Scalar const>)>;

  ModuleRep(std::uint32_t p, std::size_t ambient_dim, Apply apply, std::string tag);

  // Exterior power of the natural module, r = 1 is the natural module itself.
  static ModuleRep wedge(unsigned n, unsigned r, std::uint32_t p);
  // The hook Specht module inside the r-th exterior power.
  static ModuleRep hook(unsigned n, unsigned r, std::uint32_t p);
  // Given matrices for generators of g; every element's matrix is obtained
  // by closure. Matrices act on column vectors.
  static ModuleRep from_generators(PermGroup const &g, std::vector<Matrix> const &mats,
                                   std::string tag = "matrices");
  static ModuleRep trivial(unsigned degree, std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return subspace_ ? subspace_->rows() : n_; }
  std::string const &tag() const { return tag_; }
  std::optional<Matrix> const &subspace() const { return subspace_; }

  ModuleRep restricted_to(Matrix subspace_rows, std::string tag) const;

  Vector apply(Perm const &g, std::span<Scalar const> v) const { return apply_(g, v); }
  // Ambient matrix (column k = image of e_k).
  Matrix ambient_matrix(Perm const &g) const;
  // Matrix on subspace coordinates (column k = coordinates of g * row k).
  Matrix matrix(Perm const &g) const;
  // Rows of the module in ambient coordinates (identity if no subspace).
  Matrix basis() const;

private:
  std::uint32_t p_;
  std::size_t n_;
  Apply apply_;
  std::string tag_;
  std::optional<Matrix> subspace_;
  // columns where the subspace basis is invertible, and that inverse
  std::vector<std::size_t> pivots_;
  Matrix pivot_inverse_;
};

// Coordinates of v in the row basis `rows`; throws if v is outside the span.
Vector coordinates(Matrix const &rows, std::span<Scalar const> v);

// V^Q as a row basis in ambient coordinates.
Matrix fixed_space(ModuleRep const &v, PermGroup const &q);

// Left coset representatives of r in q: greedy over q's element order.
std::vector<Perm> coset_representatives(PermGroup const &q, PermGroup const &r);

// Tr_R^Q(v), v fixed by R (checked).
Vector relative_trace(ModuleRep const &v, PermGroup const &r, PermGroup const &q,
                      std::span<Scalar const> x);
// Row basis of Tr_R^Q V^R.
Matrix trace_image(ModuleRep const &v, PermGroup const &r, PermGroup const &q);

struct BrauerReport
{
  std::size_t dim_fixed = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_quotient = 0;
  Matrix fixed_basis;
  Matrix kernel_basis;
  std::size_t maximal_subgroups = 0;
  std::vector<std::string> orbit_labels;
  nlohmann::ordered_json to_json() const;
};

// V(Q) with kernel summed over maximal subgroups of the p-group Q.
BrauerReport brauer_quotient(ModuleRep const &v, PermGroup const &q, std::uint32_t p);
// Same, kernel summed over every proper subgroup (tiny Q only).
BrauerReport brauer_quotient_all_subgroups(ModuleRep const &v, PermGroup const &q,
                                           std::uint32_t p);
// Every subgroup of a small group, ordered by size then element indices.
std::vector<PermGroup> all_subgroups(PermGroup const &q);

// The r-th exterior power as a module induced from sgn x trivial of
// S_r x S_{n-r}; orbit sums on r-subsets give bases of fixed points.
struct MonomialModuleSpec
{
  unsigned n = 0;
  unsigned r = 0;
  std::uint32_t p = 2;
};

struct OrbitSum
{
  MultiIndex representative; // least subset of the orbit
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  WedgeVector vector;
  std::string label() const;
};

std::vector<OrbitSum> monomial_orbit_basis(MonomialModuleSpec const &spec, PermGroup const &q);
// Orbit sums whose Q-stabilizer lies in R, a basis of Tr_R^Q of the
// monomial module.
std::vector<OrbitSum> trace_image_basis(MonomialModuleSpec const &spec, PermGroup const &r,
                                        PermGroup const &q);
// Setwise stabilizer of a subset of points.
PermGroup set_stabilizer(PermGroup const &q, std::vector<unsigned> const &points);

// g normalizes Q and maps V^Q and the Brauer kernel into themselves.
bool normalizer_action_check(ModuleRep const &v, PermGroup const &q, std::uint32_t p,
                             Perm const &g);

// The group generated by alpha, beta and a Sylow p-subgroup T of the
// symmetric group on {p^2+1..kp}.
PermGroup grid_group(std::uint32_t p, unsigned k);
// <alpha, T>
PermGroup grid_alpha_t(std::uint32_t p, unsigned k);

} // namespace spechtlab

#endif
