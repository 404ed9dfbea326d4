#include "doctest.h"

#include "spechtlab/experiments.hpp"

using namespace spechtlab;

namespace {

Json const &last(ExperimentOutput const &o)
{
  REQUIRE(!o.records.empty());
  return o.records.back();
}

} // namespace

TEST_CASE("subgroup specs")
{
  CHECK(parse_subgroup("Sylow", 2, 6).order() == 16);
  CHECK(parse_subgroup("sylow", 3, 9).order() == 81);
  CHECK(parse_subgroup("trivial", 3, 5).order() == 1);
  CHECK(parse_subgroup("E(2)", 3, 6).order() == 9);
  CHECK(parse_subgroup(" E(0, 1) ", 3, 9).order() == 9);
  CHECK(parse_subgroup("F(0,2)", 2, 8).order() == 16);
  CHECK(parse_subgroup("Q9", 3, 12).order() == 27);
  CHECK(parse_subgroup("alpha-t", 3, 12).order() == 9);
  CHECK(parse_subgroup("gens:(1,2,3,4,5);(6,7,8,9,10)", 5, 10).order() == 25);
  CHECK_THROWS_AS(parse_subgroup("Q9", 3, 6), UsageError);
  CHECK_THROWS_AS(parse_subgroup("E(x)", 3, 6), UsageError);
  CHECK_THROWS_AS(parse_subgroup("gens:(1,2", 3, 6), UsageError);
  CHECK_THROWS_AS(parse_subgroup("nonsense", 3, 6), UsageError);
}

TEST_CASE("records carry the schema and an outcome")
{
  auto a = run_elem_abelian({2, 6, Flavor::SYM, true});
  CHECK(a.pass);
  CHECK(a.records.size() == 3);
  for (auto const &r : a.records) {
    CHECK(r.begin().key() == "schema");
    CHECK(r["schema"] == "spechtlab/1");
    CHECK(r["experiment"] == "elem-abelian");
  }
  CHECK(last(a)["classes"] == 2);
  CHECK(last(a)["outcome"] == "PASS");
  CHECK(last(run_elem_abelian({3, 9, Flavor::SYM, false}))["classes"] == 2);
  CHECK(last(run_elem_abelian({2, 8, Flavor::ALT, false}))["classes"] == 3);
  CHECK(last(run_elem_abelian({3, 6, Flavor::ALT, false}))["reduces_to_sym"] == true);
  CHECK(last(run_elem_abelian({2, 30, Flavor::SYM, true}))["brute_force_classes"] ==
        "skipped: exceeds desk scale");

  CHECK(run_sylow_verify({2, 6, Flavor::SYM}).pass);
  CHECK(last(run_sylow_verify({3, 9, Flavor::SYM}))["outcome"] == "PASS");
}

TEST_CASE("experiment commands")
{
  BrauerParams b;
  b.p = 3;
  b.k = 3;
  CHECK(last(run_brauer(b))["dim_quotient"] >= 1);
  b.p = 2;
  b.n = 6;
  b.module = "hook:2";
  b.subgroup = "Sylow";
  CHECK(last(run_brauer(b))["dim_quotient"] == 0);
  b.module = "wedge:9";
  CHECK_THROWS_AS(run_brauer(b), UsageError);

  JordanParams j;
  j.p = 3;
  j.n = 6;
  j.subgroup = "E(2)";
  j.r = 1;
  CHECK(last(run_jordan(j))["jordan_type"] == "[3][2]");
  j.r = 2;
  CHECK(last(run_jordan(j))["stable_type"] == "[1]");
  j.r = 3;
  CHECK(last(run_jordan(j))["generically_free"] == false);
  // dihedral of order 8 is not elementary abelian
  j.p = 2;
  j.n = 4;
  j.r = 1;
  j.subgroup = "Sylow";
  CHECK_THROWS_AS(run_jordan(j), UsageError);

  DecomposeParams d;
  d.p = 3;
  d.n = 3;
  d.r = 1;
  d.subgroup = "Sylow";
  CHECK(last(run_decompose(d))["status"] == "no_split");

  auto v = run_vertex_evidence({3, 4, 0});
  CHECK(v.pass);
  CHECK(v.records.size() == 4);
  CHECK(v.records[1]["route"] == "jordan");
  CHECK(v.records[2]["route"] == "brauer");
  CHECK(last(v)["outcome"] == "PASS");
  auto v1 = run_vertex_evidence({3, 1, 0});
  CHECK(v1.records[0]["hypothesis"] == false);

  auto au = run_grid_audit({3, 3});
  CHECK(au.pass);
  CHECK(au.records.size() == 5);
  CHECK(last(run_grid_audit({3, 5}))["outcome"] == "skipped: exceeds desk scale");
  CHECK_THROWS_AS(run_grid_audit({4, 4}), UsageError);
}
