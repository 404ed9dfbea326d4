#ifndef SPECHTLAB_PERMGROUP_HPP
#define SPECHTLAB_PERMGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spechtlab/perm.hpp"

namespace spechtlab {

struct GroupTooLarge : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Finitely generated permutation group. The element set is enumerated on
// first use (closure under the generators) and shared between copies.
class PermGroup
{
public:
  static constexpr std::size_t max_order = std::size_t(1) << 22;

  PermGroup(unsigned degree, std::vector<Perm> generators);
  // Trusts that `elements` is a subgroup; generators are picked greedily.
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements);
  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(unsigned n);
  static PermGroup alternating(unsigned n);

  unsigned degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return gens_; }

  // Identity first, then breadth-first order from the generators.
  std::vector<Perm> const &elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(Perm const &g) const;
  std::optional<std::size_t> index_of(Perm const &g) const;

  bool is_subgroup_of(PermGroup const &g) const;
  bool is_p_group(std::uint32_t p) const;
  bool is_abelian() const;
  bool is_elementary_abelian(std::uint32_t p) const;
  // Whether g normalizes this group (checked on generators).
  bool is_normalized_by(Perm const &g) const;
  bool same_elements(PermGroup const &o) const;

  // Subgroup of elements satisfying the predicate (assumed closed).
  template<class Pred>
  PermGroup filter(Pred pred) const
  {
    std::vector<Perm> keep;
    for (auto const &e : elements())
      if (pred(e))
        keep.push_back(e);
    return from_elements(degree_, std::move(keep));
  }

private:
  struct Cache;

  unsigned degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<Cache> cache_;
};

struct OrbitProfile
{
  std::vector<std::vector<unsigned>> orbits; // 1-based, sorted, ordered by least point
  std::vector<bool> regular;                 // per orbit
  std::vector<unsigned> sizes;               // descending
  unsigned fixed_points = 0;
};

OrbitProfile orbits(PermGroup const &g);

// Index-p subgroups of a p-group, as preimages of the hyperplanes of
// Q / Phi(Q).
std::vector<PermGroup> maximal_subgroups_p_group(PermGroup const &q, std::uint32_t p);
PermGroup frattini_subgroup(PermGroup const &q, std::uint32_t p);

// E(m_1..m_r) on an initial segment of {1..n}: m_i regular orbits of size
// p^i, each block identified with F_p^i and acted on by translations.
PermGroup construct_E(std::uint32_t p, std::vector<unsigned> const &m, unsigned n);
// Even part of E(m_1..m_r); p = 2 and m_1 != 2 required.
PermGroup construct_F(std::uint32_t p, std::vector<unsigned> const &m, unsigned n);
// Sylow p-subgroup of S_n: for each base-p digit d_i of n, d_i iterated
// wreath products on consecutive blocks, largest blocks last; leftover
// points fixed at the end.
PermGroup sylow_sym(unsigned n, std::uint32_t p);
// Exponent of p in n!.
unsigned legendre_exponent(unsigned n, std::uint32_t p);

} // namespace spechtlab

#endif
