#ifndef SPECHTLAB_ELEM_ABELIAN_HPP
#define SPECHTLAB_ELEM_ABELIAN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spechtlab/permgroup.hpp"

namespace spechtlab {

enum class Flavor { SYM, ALT };

std::string flavor_name(Flavor f);
Flavor parse_flavor(std::string const &s);

// A composition n' = m_1 p + m_2 p^2 + ... + m_r p^r naming a class of
// maximal elementary abelian subgroups. Stored without trailing zeros.
struct ElemAbelianClass
{
  std::uint32_t p = 2;
  std::vector<unsigned> m;
  unsigned n = 0;
  Flavor flavor = Flavor::SYM;

  unsigned rank() const;           // sum i * m_i, so |E(m)| = p^rank
  unsigned support() const;        // sum m_i p^i
  PermGroup representative() const; // E(m) or F(m) on {1..n}
  // "(m_1,...,m_w)" padded with zeros to width w (at least the stored length)
  std::string to_string(std::size_t width = 0) const;
};

// Raised for A_n with odd p, where the maximal classes are those of S_n.
struct ReducesToSym : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

// Compositions with sum m_i p^i = p*floor(n/p) (SYM) or = n with m_1 != 2
// (ALT, p = 2, n even), ordered by decreasing m_1, m_2, ...
std::vector<ElemAbelianClass> classify_elem_abelian(std::uint32_t p, unsigned n, Flavor flavor);

// Largest r with p^r <= n, the display width for compositions.
std::size_t composition_width(std::uint32_t p, unsigned n);

struct ElemAbelianSubgroup
{
  std::vector<Perm> basis;    // independent generators
  std::vector<Perm> elements; // sorted
  bool maximal = false;       // no commuting order-p element of H extends it
  PermGroup group(unsigned degree) const { return PermGroup(degree, basis); }
};

// Elementary abelian p-subgroups of H by iterative extension. With
// `from_class_reps` the search starts from H-class representatives of
// elements of order p, which yields every subgroup up to H-conjugacy;
// otherwise it starts from every element of order p and yields all.
std::vector<ElemAbelianSubgroup> enumerate_elem_abelian(PermGroup const &h, std::uint32_t p,
                                                        bool from_class_reps = true);

// Orbit-profile test for S_n-conjugacy to E(c): exactly m_i orbits of size
// p^i, all regular, |E| = product of orbit sizes. ALT classes fall back to
// the exact test against F(c). Throws if E is not elementary abelian.
bool is_conjugate_to_class(PermGroup const &e, ElemAbelianClass const &c);

// Exact S_n-conjugacy of two elementary abelian p-groups of the same
// degree: a search for an isomorphism matching the multisets of point
// stabilizers (for abelian groups the action on an orbit is determined by
// its stabilizer).
bool are_conjugate_in_sym(PermGroup const &a, PermGroup const &b, std::uint32_t p);

// Maximal elementary abelian p-subgroups of S_n (or A_n) up to
// S_n-conjugacy, by exhaustive enumeration.
std::vector<PermGroup> brute_force_maximal_classes(std::uint32_t p, unsigned n, Flavor flavor);

struct SylowReport
{
  struct Forward
  {
    ElemAbelianClass cls;
    bool found = false;
    std::vector<Perm> witness; // basis of a conjugate inside P
  };
  struct Converse
  {
    std::vector<Perm> generators; // of the maximal subgroup M
    std::size_t order = 0;
    std::optional<ElemAbelianClass> missing; // class with no conjugate in M
  };

  std::uint32_t p = 2;
  unsigned n = 0;
  Flavor flavor = Flavor::SYM;
  std::size_t sylow_order = 0;
  std::vector<Perm> sylow_generators;
  std::vector<ElemAbelianClass> classes;
  std::vector<Forward> forward;
  std::vector<Converse> converse;

  bool forward_pass() const;
  bool converse_pass() const;
  bool pass() const { return forward_pass() && converse_pass(); }
};

// Characterization check at desk scale: a Sylow p-subgroup P of S_n (or A_n)
// contains a conjugate of every maximal class, and every maximal subgroup
// of P misses some class.
SylowReport verify_sylow_characterization(std::uint32_t p, unsigned n, Flavor flavor);

} // namespace spechtlab

#endif
