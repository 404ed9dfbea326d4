#include "doctest.h"

#include <algorithm>

#include "spechtlab/elem_abelian.hpp"
#include "spechtlab/jordan.hpp"
#include "spechtlab/random.hpp"

using namespace spechtlab;

namespace {

Matrix random_invertible(std::size_t n, std::uint32_t p, Rng &rng)
{
  for (;;) {
    Matrix m(n, n, p);
    for (auto &x : m.data())
      x = static_cast<Scalar>(rng() % p);
    if (rank(m) == n)
      return m;
  }
}

Matrix block_diag(Matrix const &a, Matrix const &b)
{
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

// Kronecker product a (x) b.
Matrix kron(Matrix const &a, Matrix const &b)
{
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.p());
  PrimeField f(a.p());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return m;
}

// Cyclic shift on F_p^p, the regular module of C_p.
Matrix shift(std::uint32_t p)
{
  Matrix m(p, p, p);
  for (std::uint32_t i = 0; i < p; ++i)
    m((i + 1) % p, i) = 1;
  return m;
}

// Unipotent Jordan block of size s.
Matrix unipotent(std::size_t s, std::uint32_t p)
{
  Matrix m = Matrix::identity(s, p);
  for (std::size_t i = 0; i + 1 < s; ++i)
    m(i, i + 1) = 1;
  return m;
}

std::vector<Matrix> conjugate_all(std::vector<Matrix> const &mats, Rng &rng)
{
  Matrix c = random_invertible(mats[0].rows(), mats[0].p(), rng);
  Matrix ci = *inverse(c);
  std::vector<Matrix> out;
  for (auto const &m : mats)
    out.push_back(c * m * ci);
  return out;
}

std::vector<Matrix> module_matrices(ModuleRep const &m, std::vector<Perm> const &gens)
{
  std::vector<Matrix> out;
  for (auto const &g : gens)
    out.push_back(m.matrix(g));
  return out;
}

// E-fixed r-subsets by scanning every subset against every element.
std::size_t scan_fixed_subsets(PermGroup const &e, unsigned r)
{
  auto basis = WedgeBasis::get(e.degree(), r);
  std::size_t count = 0;
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    auto const &s = basis->index(k);
    bool fixed = std::all_of(e.elements().begin(), e.elements().end(), [&](Perm const &g) {
      return std::all_of(s.begin(), s.end(), [&](unsigned x) {
        return std::find(s.begin(), s.end(), g.image(x)) != s.end();
      });
    });
    count += fixed;
  }
  return count;
}

StableJordanType st(std::uint32_t p, std::vector<std::size_t> s)
{
  return StableJordanType{p, std::move(s)};
}

} // namespace

TEST_CASE("Jordan types of small modules")
{
  for (std::uint32_t p : {2u, 3u, 5u}) {
    JordanType t = generic_jordan_type({shift(p)}, p);
    std::vector<std::size_t> want(p, 0);
    want[p - 1] = 1;
    CHECK(t.s == want);
    CHECK(t.certified);
    CHECK(is_generically_free(t));
  }
  PermGroup e2 = construct_E(3, {2}, 6);
  JordanType nat = generic_jordan_type(ModuleRep::wedge(6, 1, 3), e2, 3);
  CHECK(nat.s == std::vector<std::size_t>{0, 0, 2});
  CHECK(nat.to_string() == "[3]^2");
  CHECK(stable_type(nat).is_free());

  JordanType h = generic_jordan_type(ModuleRep::hook(6, 1, 3), e2, 3);
  CHECK(h.s == std::vector<std::size_t>{0, 1, 1});
  CHECK(h.dim() == 5);
  CHECK(stable_type(h) == st(3, {0, 1}));
  CHECK(!is_generically_free(h));
  CHECK(h.to_json()["blocks"]["2"] == 1);
  CHECK(h.to_json()["stable_free"] == false);

  CHECK_THROWS(generic_jordan_type({shift(3), unipotent(3, 3).pow(2) * shift(3)}, 3));
  CHECK_THROWS(generic_jordan_type({unipotent(4, 3)}, 3));
  CHECK_THROWS(generic_jordan_type(ModuleRep::wedge(6, 1, 3),
                                   std::vector<Perm>{parse_cycles("(1,2,3)", 6), parse_cycles("(1,3,2)", 6)}, 3));
}

TEST_CASE("stable types")
{
  JordanType t{3, {0, 0, 2}, {}, true};
  CHECK(stable_type(t).is_free());
  JordanType u{3, {0, 1, 1}, {}, true};
  CHECK(stable_type(u) == st(3, {0, 1}));
  CHECK(stable_type(u).complement() == st(3, {1, 0}));
  CHECK(stable_type(u).to_string() == "[2]");
  CHECK(st(3, {4, 0}).to_string() == "[1]^4");
}

TEST_CASE("rank profiles are convex and account for the dimension")
{
  Rng rng(41);
  PermGroup e = construct_E(3, {0, 1}, 9);
  for (unsigned r = 1; r <= 3; ++r) {
    JordanType t = generic_jordan_type(ModuleRep::hook(9, r, 3), e, 3);
    CHECK(t.dim() == binomial(8, r));
    for (unsigned j = 1; j < 3; ++j)
      CHECK(t.ranks[j - 1] - t.ranks[j] >= t.ranks[j] - t.ranks[j + 1]);
  }
}

TEST_CASE("fixed subsets of elementary abelian groups")
{
  CHECK(monomial_stable_type({9, 3, 3}, construct_E(3, {2}, 9)) == st(3, {3, 0}));
  CHECK(scan_fixed_subsets(construct_E(3, {2}, 9), 3) == 3);
  // a regular group of order 9 fixes no 3-subset
  CHECK(scan_fixed_subsets(construct_E(3, {0, 1}, 9), 3) == 0);
  CHECK(monomial_stable_type({9, 3, 3}, construct_E(3, {0, 1}, 9)) == st(3, {0, 0}));
  for (auto const &c : classify_elem_abelian(3, 9, Flavor::SYM))
    CHECK(monomial_stable_type({9, 2, 3}, c.representative()).is_free());
  CHECK(monomial_stable_type({12, 3, 3}, construct_E(3, {4}, 12)) == st(3, {4, 0}));
}

TEST_CASE("fixed-subset count matches the linear algebra")
{
  for (std::uint32_t p : {2u, 3u})
    for (unsigned n = p; n <= 9; ++n)
      for (auto const &c : classify_elem_abelian(p, n, Flavor::SYM)) {
        PermGroup e = c.representative();
        for (unsigned r = 1; r <= std::min(3u, n - 1); ++r) {
          JordanType t = generic_jordan_type(ModuleRep::wedge(n, r, p), e, p);
          StableJordanType combinatorial = monomial_stable_type({n, r, p}, e);
          INFO("p=", p, " n=", n, " class=", c.to_string(), " r=", r);
          CHECK(stable_type(t) == combinatorial);
          CHECK(combinatorial.s[0] == scan_fixed_subsets(e, r));
        }
      }
}

TEST_CASE("Jordan type of a direct sum")
{
  Rng rng(43);
  PermGroup e = construct_E(3, {2}, 6);
  auto gens = independent_generators(e, 3);
  std::vector<ModuleRep> mods{ModuleRep::wedge(6, 1, 3), ModuleRep::hook(6, 1, 3),
                              ModuleRep::hook(6, 2, 3), ModuleRep::wedge(6, 3, 3)};
  for (int trial = 0; trial < 6; ++trial) {
    ModuleRep const &m = mods[rng() % mods.size()];
    ModuleRep const &n = mods[rng() % mods.size()];
    auto a = module_matrices(m, gens), b = module_matrices(n, gens);
    std::vector<Matrix> sum;
    for (std::size_t i = 0; i < gens.size(); ++i)
      sum.push_back(block_diag(a[i], b[i]));
    sum = conjugate_all(sum, rng);
    JordanType ts = generic_jordan_type(sum, 3);
    CHECK(ts == direct_sum(generic_jordan_type(a, 3), generic_jordan_type(b, 3)));
  }
}

TEST_CASE("modules induced from a proper subgroup are generically free")
{
  // E = <g1> x <g2> at p = 3; U a module for D = <g1>; U induced to E is
  // F[E/D] (x) U with g2 permuting the cosets
  Rng rng(47);
  std::uint32_t p = 3;
  for (int trial = 0; trial < 8; ++trial) {
    Matrix u(0, 0, p);
    std::size_t blocks = 1 + rng() % 3;
    for (std::size_t b = 0; b < blocks; ++b)
      u = u.rows() ? block_diag(u, unipotent(1 + rng() % 3, p)) : unipotent(1 + rng() % 3, p);
    Matrix c = random_invertible(u.rows(), p, rng);
    u = c * u * *inverse(c);
    Matrix g1 = kron(Matrix::identity(p, p), u);
    Matrix g2 = kron(shift(p), Matrix::identity(u.rows(), p));
    std::vector<Matrix> gens{g1, g2};
    // a random generating pair of E as well
    Matrix h1 = g1 * g2, h2 = g1 * g2 * g2;
    for (auto const &gs : {gens, std::vector<Matrix>{h1, h2}}) {
      JordanType t = generic_jordan_type(gs, p);
      CHECK(t.dim() == p * u.rows());
      CHECK(is_generically_free(t));
    }
  }
}

TEST_CASE("Jordan type does not depend on the generators")
{
  Rng rng(53);
  struct Case
  {
    PermGroup e;
    ModuleRep m;
    std::uint32_t p;
  };
  std::vector<Case> cases{{construct_E(3, {2}, 6), ModuleRep::hook(6, 2, 3), 3},
                          {construct_E(3, {0, 1}, 9), ModuleRep::hook(9, 3, 3), 3},
                          {construct_E(2, {2}, 4), ModuleRep::wedge(4, 2, 2), 2},
                          {construct_E(5, {1}, 5), ModuleRep::hook(5, 2, 5), 5}};
  for (auto const &c : cases) {
    auto gens = independent_generators(c.e, c.p);
    JordanType base = generic_jordan_type(c.m, gens, c.p);
    for (int trial = 0; trial < 20; ++trial) {
      Matrix a = random_invertible(gens.size(), c.p, rng);
      std::vector<Perm> changed;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm h(c.e.degree());
        for (std::size_t j = 0; j < gens.size(); ++j)
          h = h * gens[j].pow(a(i, j));
        changed.push_back(h);
      }
      JordanOptions o;
      o.seed = static_cast<std::uint64_t>(trial);
      CHECK(generic_jordan_type(c.m, changed, c.p, o) == base);
    }
  }
}

TEST_CASE("exterior powers of S^(kp-1,1) along the short exact sequences")
{
  ChainReport r = stable_chain_report(3, 2, construct_E(3, {2}, 6));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].direct == st(3, {0, 1}));
  CHECK(r.rows[1].direct == st(3, {1, 0}));
  CHECK(!r.rows[2].direct.is_free());
  CHECK(r.rows[2].middle == st(3, {2, 0}));
  CHECK(r.top_not_free);
  CHECK(r.agree());
  CHECK(r.to_json()["agree"] == true);
}

TEST_CASE("the chain at k = 4")
{
  ChainReport r = stable_chain_report(3, 4, construct_E(3, {4}, 12));
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].direct == st(3, {0, 1}));
  CHECK(r.rows[1].direct == st(3, {1, 0}));
  CHECK(r.rows[2].middle == st(3, {4, 0}));
  CHECK(r.top_not_free);
  CHECK(r.agree());
}

TEST_CASE("S^(6,1^3) restricted to E(3) is not generically free")
{
  JordanType t = generic_jordan_type(ModuleRep::hook(9, 3, 3), construct_E(3, {3}, 9), 3);
  CHECK(!is_generically_free(t));
}
