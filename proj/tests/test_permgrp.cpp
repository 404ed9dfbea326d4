#include "doctest.h"

#include <algorithm>
#include <set>

#include "spechtlab/elem_abelian.hpp"
#include "spechtlab/permgroup.hpp"
#include "spechtlab/random.hpp"

using namespace spechtlab;

namespace {

std::size_t ipow(std::size_t b, unsigned e)
{
  std::size_t r = 1;
  while (e--)
    r *= b;
  return r;
}

Perm random_perm(unsigned n, Rng &rng)
{
  std::vector<std::uint8_t> img(n);
  for (unsigned i = 0; i < n; ++i)
    img[i] = static_cast<std::uint8_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

PermGroup conjugated(PermGroup const &g, Perm const &s)
{
  std::vector<Perm> gens;
  for (auto const &x : g.generators())
    gens.push_back(s.conjugate(x));
  return PermGroup(g.degree(), gens);
}

// alpha and beta on {1..p^2} (p row cycles and p column cycles) padded to n
PermGroup alpha_beta(unsigned p, unsigned n)
{
  std::vector<std::vector<unsigned>> rows, cols;
  for (unsigned i = 0; i < p; ++i) {
    std::vector<unsigned> r, c;
    for (unsigned j = 0; j < p; ++j) {
      r.push_back(i * p + j + 1);
      c.push_back(j * p + i + 1);
    }
    rows.push_back(r);
    cols.push_back(c);
  }
  return PermGroup(n, {Perm::from_cycles(n, rows), Perm::from_cycles(n, cols)});
}

} // namespace

TEST_CASE("cycle notation")
{
  Perm a = parse_cycles("(1,2,3)(4,5,6)");
  CHECK(a.degree() == 6);
  CHECK(format_cycles(a) == "(1,2,3)(4,5,6)");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(format_cycles(Perm(5)) == "()");
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0,1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1,7)", 6), ParseError);
  CHECK(format_cycles(parse_cycles(" ( 3 , 1 ,2 ) ", 5)) == "(1,2,3)");

  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    Perm x = random_perm(9, rng);
    CHECK(parse_cycles(format_cycles(x), 9) == x);
  }
  auto list = parse_perm_list("(1,2,3,4,5);(6,7,8,9,10)", 10);
  CHECK(list.size() == 2);
}

TEST_CASE("perm algebra")
{
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    Perm a = random_perm(7, rng), b = random_perm(7, rng), c = random_perm(7, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.sign() * b.sign() == (a * b).sign());
    CHECK(a.conjugate(b) == a * b * a.inverse());
    CHECK(a.pow(static_cast<long long>(a.order())).is_identity());
  }
  // composition is right to left
  Perm s = parse_cycles("(1,2)", 3), u = parse_cycles("(2,3)", 3);
  CHECK((s * u).image(3) == 1);
  CHECK(parse_cycles("(1,2)").sign() == -1);
  CHECK(parse_cycles("(1,2,3,4,5)").sign() == 1);
  CHECK(parse_cycles("(1,2,3)(4,5,6)(7,8,9)").is_even());
}

TEST_CASE("group enumeration")
{
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::alternating(6).order() == 360);
  CHECK(PermGroup::trivial(4).order() == 1);
  PermGroup d8(4, {parse_cycles("(1,2,3,4)"), parse_cycles("(1,3)", 4)});
  CHECK(d8.order() == 8);
  CHECK(d8.is_p_group(2));
  CHECK_FALSE(d8.is_abelian());
  auto sub = d8.filter([](Perm const &g) { return g.is_even(); });
  CHECK(sub.order() == 4);
  CHECK(sub.is_subgroup_of(d8));
  CHECK_THROWS_AS(PermGroup::from_elements(4, {parse_cycles("(1,2,3,4)")}), std::invalid_argument);
}

TEST_CASE("construct_E examples")
{
  PermGroup e = construct_E(3, {2}, 6);
  CHECK(e.order() == 9);
  CHECK(e.same_elements(PermGroup(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)")})));

  PermGroup r = construct_E(3, {0, 1}, 9);
  CHECK(r.order() == 9);
  CHECK(r.same_elements(alpha_beta(3, 9)));

  PermGroup t = construct_E(2, {3}, 6);
  CHECK(t.same_elements(PermGroup(6, {parse_cycles("(1,2)", 6), parse_cycles("(3,4)", 6),
                                      parse_cycles("(5,6)")})));
  CHECK_THROWS_AS(construct_E(2, {2, 1}, 7), std::invalid_argument);
}

TEST_CASE("construct_E order and orbit profile")
{
  struct Case
  {
    std::uint32_t p;
    std::vector<unsigned> m;
    unsigned n;
  };
  std::vector<Case> cases{{2, {1, 1}, 7}, {2, {0, 0, 1}, 9}, {3, {1, 1}, 13}, {2, {3, 1}, 10},
                          {5, {2}, 11},   {3, {0, 1}, 9},   {2, {0, 2}, 8}};
  for (auto const &c : cases) {
    PermGroup e = construct_E(c.p, c.m, c.n);
    unsigned total = 0, support = 0;
    for (std::size_t i = 0; i < c.m.size(); ++i) {
      total += static_cast<unsigned>(i + 1) * c.m[i];
      support += c.m[i] * static_cast<unsigned>(ipow(c.p, static_cast<unsigned>(i + 1)));
    }
    CHECK(e.order() == ipow(c.p, total));
    CHECK(e.is_elementary_abelian(c.p));
    auto prof = orbits(e);
    CHECK(prof.fixed_points == c.n - support);
    for (std::size_t i = 0; i < c.m.size(); ++i) {
      auto size = static_cast<unsigned>(ipow(c.p, static_cast<unsigned>(i + 1)));
      CHECK(std::count(prof.sizes.begin(), prof.sizes.end(), size) == c.m[i]);
    }
    for (bool reg : prof.regular)
      CHECK(reg);
  }
}

TEST_CASE("construct_F")
{
  CHECK(construct_F(2, {1}, 4).order() == 1);
  // every element of a regular Klein four group is even
  CHECK(construct_F(2, {0, 2}, 8).order() == 16);
  CHECK(construct_F(2, {4}, 8).order() == 8);
  CHECK(construct_F(2, {0, 0, 1}, 8).order() == 8);
  CHECK_THROWS_AS(construct_F(2, {2, 1}, 8), std::invalid_argument);
  // brute-force count of even elements agrees
  PermGroup e = construct_E(2, {0, 2}, 8);
  std::size_t even = 0;
  for (auto const &g : e.elements())
    even += g.is_even();
  CHECK(even == 16);
}

TEST_CASE("sylow_sym")
{
  CHECK(sylow_sym(6, 2).order() == 16);
  CHECK(sylow_sym(9, 3).order() == 81);
  CHECK(sylow_sym(5, 5).same_elements(PermGroup(5, {parse_cycles("(1,2,3,4,5)")})));
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 12; ++n) {
      PermGroup s = sylow_sym(n, p);
      CHECK(s.order() == ipow(p, legendre_exponent(n, p)));
      CHECK(s.is_p_group(p));
    }
}

TEST_CASE("E(m) is normal in the Sylow subgroup and the quotient acts faithfully on orbits")
{
  struct Case
  {
    std::uint32_t p;
    unsigned m;
  };
  for (auto c : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{3, 3}}) {
    unsigned n = c.p * c.m;
    PermGroup e = construct_E(c.p, {c.m}, n);
    PermGroup s = sylow_sym(n, c.p);
    CHECK(e.is_subgroup_of(s));
    for (auto const &g : s.generators())
      CHECK(e.is_normalized_by(g));
    // kernel of the action on the orbits {1..p}, {p+1..2p}, ...
    auto kernel = s.filter([&](Perm const &g) {
      for (unsigned x = 0; x < n; ++x)
        if (g(x) / c.p != x / c.p)
          return false;
      return true;
    });
    CHECK(kernel.same_elements(e));
  }
}

TEST_CASE("regular E_A inside a p-group containing the base group acts regularly on base orbits")
{
  // P = Sylow subgroup of S_{p^d}; E_A = translations of F_p^d; base group
  // E(p^{d-1}) has orbits the p^{d-1} blocks {1..p}, {p+1..2p}, ...
  struct Case
  {
    std::uint32_t p;
    unsigned d;
  };
  for (auto c : {Case{2, 2}, Case{2, 3}, Case{3, 2}}) {
    unsigned n = static_cast<unsigned>(ipow(c.p, c.d));
    std::vector<unsigned> top(c.d, 0);
    top[c.d - 1] = 1;
    PermGroup ea = construct_E(c.p, top, n);
    PermGroup base = construct_E(c.p, {n / c.p}, n);
    PermGroup p = sylow_sym(n, c.p);
    CHECK(ea.is_subgroup_of(p));
    CHECK(base.is_subgroup_of(p));
    // induced action on blocks
    std::set<std::vector<unsigned>> images;
    for (auto const &g : ea.elements()) {
      std::vector<unsigned> blocks;
      for (unsigned b = 0; b < n / c.p; ++b)
        blocks.push_back(g(b * c.p) / c.p);
      images.insert(blocks);
    }
    // transitive on the p^{d-1} blocks with |image| = number of blocks
    CHECK(images.size() == n / c.p);
    std::set<unsigned> reach;
    for (auto const &im : images)
      reach.insert(im[0]);
    CHECK(reach.size() == n / c.p);
  }
}

TEST_CASE("orbits examples")
{
  auto a = orbits(construct_E(3, {2}, 6));
  CHECK(a.sizes == std::vector<unsigned>{3, 3});
  CHECK(a.regular == std::vector<bool>{true, true});
  auto b = orbits(PermGroup::trivial(4));
  CHECK(b.fixed_points == 4);
  auto k = orbits(PermGroup(4, {parse_cycles("(1,2)(3,4)"), parse_cycles("(1,3)(2,4)")}));
  CHECK(k.sizes == std::vector<unsigned>{4});
  CHECK(k.regular[0]);
  auto s3 = orbits(PermGroup::symmetric(3));
  CHECK_FALSE(s3.regular[0]);
}

TEST_CASE("maximal subgroups of p-groups")
{
  CHECK(maximal_subgroups_p_group(construct_E(3, {2}, 6), 3).size() == 4);
  PermGroup d8(4, {parse_cycles("(1,2,3,4)"), parse_cycles("(1,3)", 4)});
  auto md = maximal_subgroups_p_group(d8, 2);
  CHECK(md.size() == 3);
  for (auto const &m : md)
    CHECK(m.order() == 4);

  PermGroup s = sylow_sym(6, 2);
  PermGroup phi = frattini_subgroup(s, 2);
  unsigned d = 0;
  for (std::size_t q = s.order() / phi.order(); q > 1; q /= 2)
    ++d;
  auto ms = maximal_subgroups_p_group(s, 2);
  CHECK(ms.size() == ipow(2, d) - 1);
  for (auto const &m : ms) {
    CHECK(m.order() == 8);
    for (auto const &g : s.generators())
      CHECK(m.is_normalized_by(g));
  }
  // Phi is the intersection of the maximal subgroups
  for (auto const &x : s.elements()) {
    bool in_all = true;
    for (auto const &m : ms)
      in_all = in_all && m.contains(x);
    CHECK(in_all == phi.contains(x));
  }
  CHECK_THROWS_AS(maximal_subgroups_p_group(PermGroup::symmetric(3), 2), std::invalid_argument);
}

TEST_CASE("classify_elem_abelian")
{
  auto strs = [](std::vector<ElemAbelianClass> const &cs, std::size_t w) {
    std::vector<std::string> out;
    for (auto const &c : cs)
      out.push_back(c.to_string(w));
    return out;
  };
  CHECK(strs(classify_elem_abelian(2, 6, Flavor::SYM), 2) == std::vector<std::string>{"(3,0)", "(1,1)"});
  CHECK(strs(classify_elem_abelian(3, 9, Flavor::SYM), 2) == std::vector<std::string>{"(3,0)", "(0,1)"});
  CHECK(strs(classify_elem_abelian(2, 8, Flavor::ALT), 3) ==
        std::vector<std::string>{"(4,0,0)", "(0,2,0)", "(0,0,1)"});
  CHECK(classify_elem_abelian(2, 7, Flavor::SYM).size() == classify_elem_abelian(2, 6, Flavor::SYM).size());
  CHECK_THROWS_AS(classify_elem_abelian(3, 9, Flavor::ALT), ReducesToSym);
  CHECK_THROWS_AS(classify_elem_abelian(2, 7, Flavor::ALT), std::invalid_argument);
}

TEST_CASE("enumerate_elem_abelian")
{
  PermGroup c4(4, {parse_cycles("(1,2,3,4)")});
  auto subs = enumerate_elem_abelian(c4, 2);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].maximal);
  CHECK(subs[0].elements.size() == 2);
  CHECK(subs[0].elements[1] == parse_cycles("(1,3)(2,4)"));

  // all subgroups versus conjugacy representatives in S_4
  auto all = enumerate_elem_abelian(PermGroup::symmetric(4), 2, false);
  // 9 subgroups of order 2, 4 Klein fours (3 non-normal + 1 normal)
  std::size_t two = 0, four = 0;
  for (auto const &s : all) {
    two += s.elements.size() == 2;
    four += s.elements.size() == 4;
  }
  CHECK(two == 9);
  CHECK(four == 4);
}

TEST_CASE("brute-force class counts equal composition counts (small cases)")
{
  CHECK(brute_force_maximal_classes(2, 4, Flavor::SYM).size() == 2);
  CHECK(brute_force_maximal_classes(3, 6, Flavor::SYM).size() == 1);
  CHECK(brute_force_maximal_classes(2, 6, Flavor::SYM).size() == 2);
  CHECK(brute_force_maximal_classes(2, 4, Flavor::ALT).size() == 1);
  CHECK(brute_force_maximal_classes(2, 6, Flavor::ALT).size() ==
        classify_elem_abelian(2, 6, Flavor::ALT).size());
}

TEST_CASE("conjugacy tests")
{
  ElemAbelianClass c2{3, {2}, 6, Flavor::SYM};
  CHECK(is_conjugate_to_class(PermGroup(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5,6)")}), c2));
  CHECK_FALSE(is_conjugate_to_class(PermGroup(6, {parse_cycles("(1,2,3)(4,5,6)")}), c2));
  ElemAbelianClass c01{3, {0, 1}, 9, Flavor::SYM};
  CHECK(is_conjugate_to_class(alpha_beta(3, 9), c01));
  CHECK_THROWS(is_conjugate_to_class(PermGroup::symmetric(3), ElemAbelianClass{3, {1}, 3, Flavor::SYM}));

  // the orbit criterion agrees with the exact search on random conjugates
  Rng rng(8);
  std::vector<std::pair<std::uint32_t, std::vector<unsigned>>> comps{
      {2, {4}}, {2, {2, 1}}, {2, {0, 2}}, {2, {0, 0, 1}}, {3, {3}}, {3, {0, 1}}};
  for (auto const &[p, m] : comps) {
    unsigned n = p == 2 ? 8 : 9;
    PermGroup e = construct_E(p, m, n);
    for (int t = 0; t < 5; ++t) {
      PermGroup g = conjugated(e, random_perm(n, rng));
      for (auto const &[p2, m2] : comps) {
        if (p2 != p)
          continue;
        ElemAbelianClass c{p, m2, n, Flavor::SYM};
        bool crit = is_conjugate_to_class(g, c);
        bool exact = are_conjugate_in_sym(g, construct_E(p, m2, n), p);
        CHECK(crit == exact);
        CHECK(crit == (m2 == m));
      }
    }
  }
  // same order and orbit sizes but different stabilizers
  PermGroup x(8, {parse_cycles("(1,2)(3,4)", 8), parse_cycles("(5,6)(7,8)", 8)});
  PermGroup y(8, {parse_cycles("(1,2)(3,4)(5,6)(7,8)", 8), parse_cycles("(5,6)(7,8)", 8)});
  CHECK(are_conjugate_in_sym(x, y, 2));
  PermGroup z(8, {parse_cycles("(1,2)(3,4)", 8), parse_cycles("(1,3)(2,4)(5,6)", 8)});
  CHECK_FALSE(are_conjugate_in_sym(x, z, 2));
}

TEST_CASE("F(m) lies in a conjugate of E(m') only when the compositions coincide (n = 8)")
{
  auto alt = classify_elem_abelian(2, 8, Flavor::ALT);
  auto sym = classify_elem_abelian(2, 8, Flavor::SYM);
  for (auto const &f : alt) {
    PermGroup fg = f.representative();
    for (auto const &e : sym) {
      PermGroup eg = e.representative();
      bool contained = false;
      for (auto const &s : enumerate_elem_abelian(eg, 2, false))
        if (s.elements.size() == fg.order() && are_conjugate_in_sym(s.group(8), fg, 2)) {
          contained = true;
          break;
        }
      CHECK_MESSAGE(contained == (f.m == e.m), "F", f.to_string(), " in E", e.to_string());
    }
  }
}

TEST_CASE("Sylow characterization on small cases")
{
  auto r = verify_sylow_characterization(2, 6, Flavor::SYM);
  CHECK(r.sylow_order == 16);
  CHECK(r.forward_pass());
  CHECK(r.converse_pass());
  for (auto const &c : r.converse)
    CHECK(c.order == 8);

  auto a4 = verify_sylow_characterization(2, 4, Flavor::ALT);
  CHECK(a4.sylow_order == 4);
  CHECK(a4.classes.size() == 1);
  CHECK(a4.pass());

  CHECK(verify_sylow_characterization(5, 10, Flavor::SYM).pass());
}
