// spechtlab: command-line driver for the experiments.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "spechtlab/experiments.hpp"

using namespace spechtlab;

namespace {

// schema and experiment first, then the seed, then the rest in order
Json with_seed(Json const &r, std::uint64_t seed)
{
  Json out;
  out["schema"] = r.at("schema");
  out["experiment"] = r.at("experiment");
  out["seed"] = seed;
  for (auto it = r.begin(); it != r.end(); ++it)
    if (it.key() != "schema" && it.key() != "experiment")
      out[it.key()] = it.value();
  return out;
}

std::string tsv_cell(Json const &v)
{
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  for (auto &c : s)
    if (c == '\t' || c == '\n')
      c = ' ';
  return s;
}

void print_records(std::vector<Json> const &records, std::string const &format)
{
  std::vector<std::string> header;
  for (auto const &r : records) {
    if (format == "json") {
      std::cout << r.dump() << '\n';
      continue;
    }
    std::vector<std::string> keys;
    for (auto it = r.begin(); it != r.end(); ++it)
      keys.push_back(it.key());
    if (keys != header) {
      header = keys;
      for (std::size_t i = 0; i < keys.size(); ++i)
        std::cout << (i ? "\t" : "") << keys[i];
      std::cout << '\n';
    }
    std::size_t i = 0;
    for (auto it = r.begin(); it != r.end(); ++it, ++i)
      std::cout << (i ? "\t" : "") << tsv_cell(it.value());
    std::cout << '\n';
  }
}

Flavor flavor_of(std::string const &g)
{
  if (g == "sym")
    return Flavor::SYM;
  if (g == "alt")
    return Flavor::ALT;
  throw UsageError("--group must be sym or alt");
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"spechtlab: experiments on hook Specht modules and elementary abelian subgroups"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int threads = 0;
  std::string format = "json";
  bool timing = false;
  app.add_option("--seed", seed, "seed for randomized steps")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP worker cap (default: $SPECHTLAB_THREADS)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "append wall-clock seconds (breaks byte-identical output)");

  ElemAbelianParams ea;
  std::string ea_group = "sym";
  auto *c_ea = app.add_subcommand("elem-abelian", "maximal elementary abelian classes");
  c_ea->add_option("--p", ea.p)->required();
  c_ea->add_option("--n", ea.n)->required();
  c_ea->add_option("--group", ea_group)->capture_default_str();
  c_ea->add_flag("--brute-force", ea.brute_force, "cross-check by exhaustive enumeration");

  SylowParams sy;
  std::string sy_group = "sym";
  auto *c_sy = app.add_subcommand("sylow-verify", "Sylow subgroup characterization check");
  c_sy->add_option("--p", sy.p)->required();
  c_sy->add_option("--n", sy.n)->required();
  c_sy->add_option("--group", sy_group)->capture_default_str();

  BrauerParams br;
  unsigned br_n = 0;
  auto *c_br = app.add_subcommand("brauer", "Brauer quotient of a hook or exterior power module");
  c_br->add_option("--p", br.p)->required();
  c_br->add_option("--k", br.k)->required();
  auto *br_n_opt = c_br->add_option("--n", br_n, "degree (default kp)");
  c_br->add_option("--subgroup", br.subgroup)->capture_default_str();
  c_br->add_option("--module", br.module, "hook:r or wedge:r (default hook:p)");

  JordanParams jo;
  auto *c_jo = app.add_subcommand("jordan", "generic Jordan type on an elementary abelian subgroup");
  c_jo->add_option("--p", jo.p)->required();
  c_jo->add_option("--n", jo.n)->required();
  c_jo->add_option("--r", jo.r)->required();
  c_jo->add_option("--subgroup", jo.subgroup)->required();
  c_jo->add_option("--module", jo.module, "hook or wedge")->capture_default_str();

  DecomposeParams de;
  auto *c_de = app.add_subcommand("decompose", "random Fitting splitting of a restricted hook module");
  c_de->add_option("--p", de.p)->required();
  c_de->add_option("--n", de.n)->required();
  c_de->add_option("--r", de.r)->required();
  c_de->add_option("--subgroup", de.subgroup)->required();
  c_de->add_option("--trials", de.trials)->capture_default_str();

  VertexParams ve;
  auto *c_ve = app.add_subcommand("vertex-evidence", "per-class evidence that the vertex is Sylow");
  c_ve->add_option("--p", ve.p)->required();
  c_ve->add_option("--k", ve.k)->required();

  AuditParams au;
  auto *c_au = app.add_subcommand("section9-audit", "checks of the grid-group construction");
  c_au->add_option("--p", au.p)->required();
  c_au->add_option("--k", au.k)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (threads == 0)
      if (char const *env = std::getenv("SPECHTLAB_THREADS")) {
        try {
          threads = std::stoi(env);
        } catch (std::exception const &) {
          throw UsageError("SPECHTLAB_THREADS must be a positive integer");
        }
      }
    if (threads < 0)
      throw UsageError("--threads must be positive");
    if (threads > 0)
      omp_set_num_threads(threads);

    auto t0 = std::chrono::steady_clock::now();
    ExperimentOutput out;
    if (*c_ea) {
      ea.flavor = flavor_of(ea_group);
      out = run_elem_abelian(ea);
    } else if (*c_sy) {
      sy.flavor = flavor_of(sy_group);
      out = run_sylow_verify(sy);
    } else if (*c_br) {
      if (*br_n_opt)
        br.n = br_n;
      out = run_brauer(br);
    } else if (*c_jo) {
      jo.seed = seed;
      out = run_jordan(jo);
    } else if (*c_de) {
      de.seed = seed;
      out = run_decompose(de);
    } else if (*c_ve) {
      ve.seed = seed;
      out = run_vertex_evidence(ve);
    } else if (*c_au) {
      out = run_grid_audit(au);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<Json> recs;
    for (auto const &r : out.records)
      recs.push_back(with_seed(r, seed));
    if (timing && !recs.empty())
      recs.back()["wall_clock_s"] = secs;
    print_records(recs, format);
    return out.pass ? 0 : 1;
  } catch (UsageError const &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
