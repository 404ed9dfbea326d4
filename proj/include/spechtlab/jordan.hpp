#ifndef SPECHTLAB_JORDAN_HPP
#define SPECHTLAB_JORDAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spechtlab/brauer.hpp"

namespace spechtlab {

// [1]^{s_1} ... [p-1]^{s_{p-1}}; empty (all zero) means generically free.
struct StableJordanType
{
  std::uint32_t p = 2;
  std::vector<std::size_t> s; // s[r-1] = number of blocks of size r, r < p

  bool is_free() const;
  std::string to_string() const;
  bool operator==(StableJordanType const &o) const { return p == o.p && s == o.s; }
  // [1]^{s_{p-1}} ... [p-1]^{s_1}
  StableJordanType complement() const;
};

// [1]^{s_1} ... [p]^{s_p}
struct JordanType
{
  std::uint32_t p = 2;
  std::vector<std::size_t> s;     // s[r-1] for r = 1..p
  std::vector<std::size_t> ranks; // rank of N^j for j = 0..p
  bool certified = false;         // every rank certified exactly

  std::size_t dim() const;
  std::string to_string() const;
  bool operator==(JordanType const &o) const { return p == o.p && s == o.s; }
  nlohmann::ordered_json to_json() const;
};

StableJordanType stable_type(JordanType const &t);
bool is_generically_free(JordanType const &t);
JordanType direct_sum(JordanType const &a, JordanType const &b);

struct JordanOptions
{
  unsigned trials = 8;
  std::uint64_t seed = 0;
  std::size_t certify_cutoff = 64;
};

// Jordan type of 1 + sum a_i (g_i - 1) over F_p(a_1..a_n) for the ordered
// generators g_i of an elementary abelian E (checked: independent, order p).
JordanType generic_jordan_type(ModuleRep const &m, std::vector<Perm> const &gens, std::uint32_t p,
                               JordanOptions const &opts = {});
JordanType generic_jordan_type(ModuleRep const &m, PermGroup const &e, std::uint32_t p,
                               JordanOptions const &opts = {});
// Same, from explicit action matrices of the generators.
JordanType generic_jordan_type(std::vector<Matrix> const &gen_matrices, std::uint32_t p,
                               JordanOptions const &opts = {});

// [1]^s with s the number of r-subsets fixed by E.
StableJordanType monomial_stable_type(MonomialModuleSpec const &spec, PermGroup const &e);

struct ChainRow
{
  unsigned i = 0;
  StableJordanType direct;
  bool certified = false;
  bool middle_free = false; // the i-th exterior power of the natural module
  StableJordanType middle;
  std::optional<StableJordanType> recursive; // rows i < p
  std::optional<bool> recursive_not_free;    // row i = p
  bool agree = false;
};

struct ChainReport
{
  std::uint32_t p = 3;
  unsigned k = 0;
  std::vector<ChainRow> rows;
  bool top_not_free = false; // direct computation of the last row
  bool agree() const;
  nlohmann::ordered_json to_json() const;
};

// Stable types of the i-th exterior power of S^(kp-1,1) restricted to E,
// i = 1..p, directly and through the short exact sequences with the
// exterior powers of the natural module.
ChainReport stable_chain_report(std::uint32_t p, unsigned k, PermGroup const &e,
                                JordanOptions const &opts = {});

// Independent generators of an elementary abelian p-group (greedy over the
// stored generators).
std::vector<Perm> independent_generators(PermGroup const &e, std::uint32_t p);

} // namespace spechtlab

#endif
