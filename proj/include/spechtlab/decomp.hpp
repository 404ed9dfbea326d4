#ifndef SPECHTLAB_DECOMP_HPP
#define SPECHTLAB_DECOMP_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "spechtlab/brauer.hpp"
#include "spechtlab/matrix.hpp"

namespace spechtlab {

// Matrices commuting with every generator, as a basis of the commutant.
struct EndoAlgebra
{
  std::size_t module_dim = 0;
  std::uint32_t p = 2;
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

EndoAlgebra endomorphism_algebra(std::vector<Matrix> const &gens);
// Module restricted to the generators of q, in module coordinates.
std::vector<Matrix> generator_matrices(ModuleRep const &m, PermGroup const &q);

struct SplitResult
{
  enum class Status { decomposed, no_split };
  Status status = Status::no_split;
  // Row bases (module coordinates) of ker phi^d and im phi^d.
  Matrix first, second;
  unsigned trials = 0; // trials used
  bool decomposed() const { return status == Status::decomposed; }
  nlohmann::ordered_json to_json() const;
};

// Random endomorphisms phi, split by Fitting's lemma into ker phi^d + im phi^d.
// no_split does not prove indecomposability.
SplitResult fitting_split(std::vector<Matrix> const &gens, unsigned trials, std::uint64_t seed);
SplitResult fitting_split(EndoAlgebra const &alg, std::vector<Matrix> const &gens, unsigned trials,
                          std::uint64_t seed);

// Both parts invariant under every generator, complementary, spanning.
bool verify_split(std::vector<Matrix> const &gens, SplitResult const &r);

} // namespace spechtlab

#endif
