#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "spechtlab/brauer.hpp"
#include "spechtlab/random.hpp"

using namespace spechtlab;

namespace {

// Orbit count on r-subsets by Burnside: average number of fixed subsets.
std::size_t burnside_subset_orbits(PermGroup const &q, unsigned r)
{
  auto basis = WedgeBasis::get(q.degree(), r);
  std::size_t total = 0;
  for (auto const &g : q.elements())
    for (std::size_t k = 0; k < basis->dim(); ++k) {
      auto const &s = basis->index(k);
      std::vector<unsigned> img;
      for (auto x : s)
        img.push_back(g.image(x));
      std::sort(img.begin(), img.end());
      total += img == s;
    }
  return total / q.order();
}

Vector random_combination(Matrix const &rows, Rng &rng)
{
  Vector v(rows.cols(), 0);
  PrimeField f(rows.p());
  for (std::size_t k = 0; k < rows.rows(); ++k) {
    Scalar c = static_cast<Scalar>(rng() % rows.p());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = f.add(v[i], f.mul(c, rows(k, i)));
  }
  return v;
}

bool same_span(Matrix const &a, Matrix const &b)
{
  if (rank(a) != rank(b))
    return false;
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (!in_row_space(b, a.row(k)))
      return false;
  return true;
}

Matrix rows_of(std::vector<OrbitSum> const &sums, std::size_t dim, std::uint32_t p)
{
  Matrix m(0, dim, p);
  for (auto const &o : sums)
    m.append_row(o.vector.coeffs());
  return m;
}

} // namespace

TEST_CASE("fixed spaces")
{
  ModuleRep nat = ModuleRep::wedge(6, 1, 3);
  CHECK(fixed_space(nat, PermGroup::trivial(6)).rows() == 6);
  PermGroup q(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)", 6)});
  Matrix f = fixed_space(nat, q);
  CHECK(f.rows() == 2);
  CHECK(in_row_space(f, Vector{1, 1, 1, 0, 0, 0}));

  PermGroup ab(9, {alpha_perm(3, 9), beta_perm(3, 9)});
  std::size_t n_orbits = burnside_subset_orbits(ab, 3);
  CHECK(n_orbits == 12);
  CHECK(fixed_space(ModuleRep::wedge(9, 3, 3), ab).rows() == n_orbits);

  // permutation module: fixed dimension equals the number of orbits
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    PermGroup s = sylow_sym(8, 2);
    std::vector<Perm> gens;
    for (int i = 0; i < 2; ++i)
      gens.push_back(s.elements()[rng() % s.order()]);
    PermGroup h(8, gens);
    CHECK(fixed_space(ModuleRep::wedge(8, 1, 2), h).rows() == orbits(h).orbits.size());
  }
}

TEST_CASE("fixed space of a subspace module")
{
  ModuleRep w = ModuleRep::hook(6, 2, 3);
  CHECK(w.dim() == 10);
  PermGroup q(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)", 6)});
  Matrix f = fixed_space(w, q);
  // oracle: intersect the hook subspace with the ambient fixed space
  Matrix both = intersect_row_spaces(w.basis(), fixed_space(ModuleRep::wedge(6, 2, 3), q));
  CHECK(same_span(f, both));
  Matrix m = w.matrix(parse_cycles("(1,2,3)", 6));
  CHECK(m.rows() == 10);
  CHECK(m.pow(3) == Matrix::identity(10, 3));
}

TEST_CASE("relative traces")
{
  ModuleRep nat = ModuleRep::wedge(3, 1, 3);
  PermGroup c3(3, {parse_cycles("(1,2,3)", 3)});
  PermGroup one = PermGroup::trivial(3);
  CHECK(relative_trace(nat, one, c3, Vector{1, 0, 0}) == Vector{1, 1, 1});
  CHECK(relative_trace(nat, c3, c3, Vector{2, 2, 2}) == Vector{2, 2, 2});
  CHECK_THROWS(relative_trace(nat, c3, c3, Vector{1, 0, 0}));
  CHECK_THROWS(relative_trace(nat, c3, one, Vector{1, 1, 1}));

  // transitivity along chains R <= S <= Q in a Sylow 3-subgroup of S_9
  ModuleRep v = ModuleRep::wedge(9, 2, 3);
  PermGroup q = sylow_sym(9, 3);
  Rng rng(17);
  auto qmax = maximal_subgroups_p_group(q, 3);
  for (int trial = 0; trial < 6; ++trial) {
    PermGroup const &s = qmax[rng() % qmax.size()];
    auto smax = maximal_subgroups_p_group(s, 3);
    PermGroup const &r = smax[rng() % smax.size()];
    Vector x = random_combination(fixed_space(v, r), rng);
    Vector direct = relative_trace(v, r, q, x);
    CHECK(direct == relative_trace(v, s, q, relative_trace(v, r, s, x)));
    for (auto const &g : q.generators())
      CHECK(v.apply(g, direct) == direct);
  }
}

TEST_CASE("Brauer quotients")
{
  PermGroup c3(3, {parse_cycles("(1,2,3)", 3)});
  BrauerReport t = brauer_quotient(ModuleRep::trivial(3, 3), c3, 3);
  CHECK(t.dim_fixed == 1);
  CHECK(t.dim_kernel == 0);
  CHECK(t.dim_quotient == 1);

  BrauerReport s411 = brauer_quotient(ModuleRep::hook(6, 2, 2), sylow_sym(6, 2), 2);
  CHECK(s411.dim_quotient == 0);
  CHECK(s411.dim_fixed == s411.dim_kernel);

  PermGroup ab(9, {alpha_perm(3, 9), beta_perm(3, 9)});
  BrauerReport w = brauer_quotient(ModuleRep::hook(9, 3, 3), ab, 3);
  CHECK(w.dim_quotient >= 1);
  CHECK(w.to_json()["dim_quotient"] == w.dim_quotient);

  CHECK_THROWS(brauer_quotient(ModuleRep::wedge(6, 1, 3), sylow_sym(6, 2), 3));
}

TEST_CASE("maximal subgroups suffice for the Brauer kernel")
{
  PermGroup q = sylow_sym(6, 2);
  CHECK(all_subgroups(PermGroup(4, {parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)})).size() == 5);
  for (auto const &v : {ModuleRep::wedge(6, 1, 2), ModuleRep::wedge(6, 2, 2), ModuleRep::hook(6, 2, 2),
                        ModuleRep::wedge(6, 3, 2)}) {
    BrauerReport a = brauer_quotient(v, q, 2);
    BrauerReport b = brauer_quotient_all_subgroups(v, q, 2);
    CHECK(a.dim_quotient == b.dim_quotient);
    CHECK(same_span(a.kernel_basis, b.kernel_basis));
  }
  PermGroup e9 = construct_E(3, {0, 1}, 9);
  BrauerReport a = brauer_quotient(ModuleRep::wedge(9, 3, 3), e9, 3);
  BrauerReport b = brauer_quotient_all_subgroups(ModuleRep::wedge(9, 3, 3), e9, 3);
  CHECK(a.dim_quotient == b.dim_quotient);
}

TEST_CASE("orbit-sum bases of exterior powers")
{
  MonomialModuleSpec spec{4, 2, 3};
  auto triv = monomial_orbit_basis(spec, PermGroup::trivial(4));
  REQUIRE(triv.size() == 6);
  for (std::size_t k = 0; k < triv.size(); ++k)
    CHECK(triv[k].vector == WedgeVector::monomial(4, 3, triv[k].representative));

  auto one = monomial_orbit_basis({3, 1, 3}, PermGroup(3, {parse_cycles("(1,2,3)", 3)}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].vector.coeffs() == Vector{1, 1, 1});
  CHECK(one[0].label() == "{1}:orbit=3:stab=1");

  std::vector<std::pair<PermGroup, std::uint32_t>> cases{
      {sylow_sym(6, 2), 2}, {sylow_sym(9, 3), 3}, {grid_group(3, 4), 3},
      {construct_E(2, {2, 1}, 8), 2}};
  for (auto const &[q, p] : cases)
    for (unsigned r = 1; r <= 3; ++r) {
      MonomialModuleSpec sp{q.degree(), r, p};
      auto sums = monomial_orbit_basis(sp, q);
      CHECK(sums.size() == burnside_subset_orbits(q, r));
      Matrix m = rows_of(sums, binomial(q.degree(), r), p);
      CHECK(same_span(m, fixed_space(ModuleRep::wedge(q.degree(), r, p), q)));
    }
}

TEST_CASE("orbit sums split along the extra points")
{
  PermGroup at = grid_alpha_t(3, 4);
  auto sums = monomial_orbit_basis({12, 3, 3}, at);
  std::size_t inner = 0;
  for (auto const &o : sums)
    inner += o.representative.back() <= 9;
  PermGroup alpha9(9, {alpha_perm(3, 9)});
  CHECK(inner == burnside_subset_orbits(alpha9, 3));
  CHECK(sums.size() == burnside_subset_orbits(at, 3));
}

TEST_CASE("trace images of orbit sums")
{
  PermGroup q = grid_group(3, 3);
  ModuleRep v = ModuleRep::wedge(9, 3, 3);
  MonomialModuleSpec spec{9, 3, 3};
  CHECK(trace_image_basis(spec, q, q).size() == monomial_orbit_basis(spec, q).size());
  std::size_t free_orbits = 0;
  for (auto const &o : monomial_orbit_basis(spec, q))
    free_orbits += o.stabilizer_order == 1;
  CHECK(trace_image_basis(spec, PermGroup::trivial(9), q).size() == free_orbits);

  PermGroup at = grid_alpha_t(3, 3);
  auto rs = maximal_subgroups_p_group(q, 3);
  CHECK(rs.size() == 4);
  std::size_t holders = 0;
  for (auto const &r : rs) {
    auto sel = trace_image_basis(spec, r, q);
    CHECK(same_span(rows_of(sel, 84, 3), trace_image(v, r, q)));
    bool has = std::any_of(sel.begin(), sel.end(), [](OrbitSum const &o) {
      return o.representative == MultiIndex{1, 2, 3};
    });
    CHECK(has == r.same_elements(at));
    holders += has;
  }
  CHECK(holders == 1);
  CHECK(set_stabilizer(q, {1, 2, 3}).same_elements(at));

  PermGroup q4 = grid_group(3, 4);
  CHECK(set_stabilizer(q4, {1, 2, 3}).same_elements(grid_alpha_t(3, 4)));
  for (auto const &r : maximal_subgroups_p_group(q4, 3)) {
    auto sel = trace_image_basis({12, 3, 3}, r, q4);
    CHECK(same_span(rows_of(sel, 220, 3), trace_image(ModuleRep::wedge(12, 3, 3), r, q4)));
  }
}

TEST_CASE("normalizer preserves fixed points and the Brauer kernel")
{
  PermGroup q(9, {alpha_perm(3, 9), beta_perm(3, 9)});
  ModuleRep w = ModuleRep::hook(9, 3, 3);
  CHECK(normalizer_action_check(w, q, 3, Perm(9)));
  CHECK(normalizer_action_check(w, q, 3, alpha_perm(3, 9)));
  // transpose of the 3x3 grid swaps alpha and beta
  std::vector<std::uint8_t> img(9);
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned c = 0; c < 3; ++c)
      img[r * 3 + c] = static_cast<std::uint8_t>(c * 3 + r);
  Perm t(img);
  CHECK(!q.contains(t));
  CHECK(q.is_normalized_by(t));
  CHECK(normalizer_action_check(w, q, 3, t));
  CHECK_THROWS(normalizer_action_check(w, q, 3, parse_cycles("(1,2)", 9)));
}

TEST_CASE("the group <alpha, beta, T>")
{
  CHECK(grid_group(3, 3).order() == 9);
  CHECK(grid_group(3, 4).order() == 27);
  CHECK(grid_group(2, 3).order() == 8);
  CHECK(grid_alpha_t(3, 4).order() == 9);
  CHECK_THROWS(grid_group(3, 2));
}

TEST_CASE("traces from maximal subgroups never reach e1^e2^e3")
{
  for (unsigned k : {3u, 4u}) {
    PermGroup q = grid_group(3, k);
    ModuleRep w = ModuleRep::hook(3 * k, 3, 3);
    WedgeVector e123 = WedgeVector::monomial(3 * k, 3, {1, 2, 3});
    for (auto const &r : maximal_subgroups_p_group(q, 3)) {
      Matrix img = trace_image(w, r, q);
      for (std::size_t i = 0; i < img.rows(); ++i)
        CHECK(bilinear_form(WedgeVector(3 * k, 3, 3, img.row_vector(i)), e123) == 0);
    }
    WedgeVector wv = vector_w(3, k);
    CHECK(in_row_space(fixed_space(w, q), wv.coeffs()));
    CHECK(brauer_quotient(w, q, 3).dim_quotient >= 1);
  }
}
