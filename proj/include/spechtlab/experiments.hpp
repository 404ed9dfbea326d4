#ifndef SPECHTLAB_EXPERIMENTS_HPP
#define SPECHTLAB_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "spechtlab/elem_abelian.hpp"
#include "spechtlab/permgroup.hpp"

namespace spechtlab {

using Json = nlohmann::ordered_json;

// Bad parameters; the CLI maps it to exit code 2.
struct UsageError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

// Records produced by one command. `pass` is false when an assertion made
// by the command failed (exit code 1).
struct ExperimentOutput
{
  std::vector<Json> records;
  bool pass = true;
};

// Subgroup of S_n from a text spec:
//   sylow | trivial | Q9 | alpha-t | E(m1,m2,..) | F(m1,..) | gens:(1,2,3);(4,5,6)
// Q9 and alpha-t need n = kp with k >= p.
PermGroup parse_subgroup(std::string const &spec, std::uint32_t p, unsigned n);

struct ElemAbelianParams
{
  std::uint32_t p = 2;
  unsigned n = 0;
  Flavor flavor = Flavor::SYM;
  bool brute_force = false;
};
ExperimentOutput run_elem_abelian(ElemAbelianParams const &a);

struct SylowParams
{
  std::uint32_t p = 2;
  unsigned n = 0;
  Flavor flavor = Flavor::SYM;
};
ExperimentOutput run_sylow_verify(SylowParams const &a);

struct BrauerParams
{
  std::uint32_t p = 3;
  unsigned k = 3;
  std::optional<unsigned> n; // defaults to kp
  std::string subgroup = "Q9";
  std::string module;        // "hook:r" or "wedge:r", default hook:p
};
ExperimentOutput run_brauer(BrauerParams const &a);

struct JordanParams
{
  std::uint32_t p = 3;
  unsigned n = 0;
  unsigned r = 1;
  std::string subgroup;
  std::string module = "hook"; // or "wedge"
  std::uint64_t seed = 0;
};
ExperimentOutput run_jordan(JordanParams const &a);

struct DecomposeParams
{
  std::uint32_t p = 5;
  unsigned n = 0;
  unsigned r = 1;
  std::string subgroup;
  unsigned trials = 200;
  std::uint64_t seed = 0;
};
ExperimentOutput run_decompose(DecomposeParams const &a);

struct VertexParams
{
  std::uint32_t p = 3;
  unsigned k = 4;
  std::uint64_t seed = 0;
};
ExperimentOutput run_vertex_evidence(VertexParams const &a);

struct AuditParams
{
  std::uint32_t p = 3;
  unsigned k = 3;
};
ExperimentOutput run_grid_audit(AuditParams const &a);

} // namespace spechtlab

#endif
