#include "spechtlab/permgroup.hpp"

#include "spechtlab/field.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace spechtlab {

struct PermGroup::Cache
{
  std::once_flag once;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
};

namespace {

void check_degree(unsigned degree, std::vector<Perm> const &gens)
{
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("PermGroup: generator of degree " + std::to_string(g.degree()) +
                                  " in a group of degree " + std::to_string(degree));
}

// Breadth-first closure of `seed` under right multiplication by `gens`.
void close_under(std::vector<Perm> &elems, std::unordered_map<Perm, std::size_t, PermHash> &index,
                 std::vector<Perm> const &gens, std::size_t start)
{
  for (std::size_t i = start; i < elems.size(); ++i) {
    for (auto const &g : gens) {
      Perm h = elems[i] * g;
      if (index.find(h) != index.end())
        continue;
      if (elems.size() >= PermGroup::max_order)
        throw GroupTooLarge("group order exceeds 2^22; enumeration refused");
      index.emplace(h, elems.size());
      elems.push_back(std::move(h));
    }
  }
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), cache_(std::make_shared<Cache>())
{
  check_degree(degree, generators);
  for (auto &g : generators)
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements)
{
  check_degree(degree, elements);
  std::vector<Perm> gens;
  std::vector<Perm> sub{Perm(degree)};
  std::unordered_map<Perm, std::size_t, PermHash> index{{Perm(degree), 0}};
  for (auto const &e : elements) {
    if (index.count(e))
      continue;
    gens.push_back(e);
    // the new closure must restart from every old element, since left
    // cosets of the old subgroup appear only through products with e
    close_under(sub, index, gens, 0);
  }
  if (sub.size() != elements.size() + (std::find(elements.begin(), elements.end(), Perm(degree)) ==
                                               elements.end()
                                           ? 1
                                           : 0))
    throw std::invalid_argument("PermGroup::from_elements: element set is not a subgroup");
  PermGroup g(degree, std::move(gens));
  std::call_once(g.cache_->once, [&] {
    g.cache_->elements = std::move(sub);
    g.cache_->index = std::move(index);
  });
  return g;
}

PermGroup PermGroup::symmetric(unsigned n)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{1, 2}}));
    std::vector<unsigned> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1u);
    if (n > 2)
      gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(unsigned n)
{
  std::vector<Perm> gens;
  for (unsigned k = 3; k <= n; ++k)
    gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  return PermGroup(n, std::move(gens));
}

std::vector<Perm> const &PermGroup::elements() const
{
  std::call_once(cache_->once, [this] {
    std::vector<Perm> elems{Perm(degree_)};
    std::unordered_map<Perm, std::size_t, PermHash> index{{elems[0], 0}};
    close_under(elems, index, gens_, 0);
    cache_->elements = std::move(elems);
    cache_->index = std::move(index);
  });
  return cache_->elements;
}

std::optional<std::size_t> PermGroup::index_of(Perm const &g) const
{
  elements();
  auto it = cache_->index.find(g);
  if (it == cache_->index.end())
    return std::nullopt;
  return it->second;
}

bool PermGroup::contains(Perm const &g) const
{
  return g.degree() == degree_ && index_of(g).has_value();
}

bool PermGroup::is_subgroup_of(PermGroup const &g) const
{
  if (g.degree() != degree_)
    return false;
  for (auto const &x : gens_)
    if (!g.contains(x))
      return false;
  return true;
}

bool PermGroup::is_p_group(std::uint32_t p) const
{
  std::size_t n = order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool PermGroup::is_abelian() const
{
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!gens_[i].commutes_with(gens_[j]))
        return false;
  return true;
}

bool PermGroup::is_elementary_abelian(std::uint32_t p) const
{
  if (!is_abelian())
    return false;
  for (auto const &g : gens_)
    if (g.order() != p)
      return false;
  return true;
}

bool PermGroup::is_normalized_by(Perm const &g) const
{
  for (auto const &x : gens_)
    if (!contains(g.conjugate(x)))
      return false;
  return true;
}

bool PermGroup::same_elements(PermGroup const &o) const
{
  if (o.degree() != degree_ || o.order() != order())
    return false;
  return is_subgroup_of(o);
}

OrbitProfile orbits(PermGroup const &g)
{
  unsigned n = g.degree();
  std::vector<unsigned> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto const &s : g.generators())
    for (unsigned x = 0; x < n; ++x) {
      unsigned a = find(x), b = find(s(x));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }

  OrbitProfile prof;
  std::vector<int> orbit_of(n, -1);
  for (unsigned x = 0; x < n; ++x) {
    unsigned r = find(x);
    if (orbit_of[r] < 0) {
      orbit_of[r] = static_cast<int>(prof.orbits.size());
      prof.orbits.emplace_back();
    }
    prof.orbits[static_cast<std::size_t>(orbit_of[r])].push_back(x + 1);
  }

  bool need_elements = false;
  for (auto const &o : prof.orbits)
    if (o.size() > 1)
      need_elements = true;
  for (auto const &o : prof.orbits) {
    bool regular = true;
    if (o.size() > 1 && need_elements) {
      // regular on the orbit iff the stabilizer of one point fixes it all
      unsigned base = o.front() - 1;
      for (auto const &e : g.elements()) {
        if (e(base) != base)
          continue;
        for (auto pt : o)
          if (e(pt - 1) != pt - 1) {
            regular = false;
            break;
          }
        if (!regular)
          break;
      }
    }
    prof.regular.push_back(regular);
    prof.sizes.push_back(static_cast<unsigned>(o.size()));
    if (o.size() == 1)
      ++prof.fixed_points;
  }
  std::sort(prof.sizes.rbegin(), prof.sizes.rend());
  return prof;
}

PermGroup frattini_subgroup(PermGroup const &q, std::uint32_t p)
{
  if (!q.is_p_group(p))
    throw std::invalid_argument("frattini_subgroup: not a p-group");
  unsigned n = q.degree();
  std::vector<Perm> gens;
  for (auto const &x : q.elements()) {
    Perm y = x.pow(p);
    if (!y.is_identity())
      gens.push_back(y);
  }
  auto const &qg = q.generators();
  for (std::size_t i = 0; i < qg.size(); ++i)
    for (std::size_t j = i + 1; j < qg.size(); ++j) {
      Perm c = qg[i].inverse() * qg[j].inverse() * qg[i] * qg[j];
      if (!c.is_identity())
        gens.push_back(c);
    }
  // normal closure under conjugation by the generators of q
  for (;;) {
    PermGroup phi(n, gens);
    std::vector<Perm> extra;
    for (auto const &s : qg)
      for (auto const &x : phi.generators()) {
        Perm c = s.conjugate(x);
        if (!phi.contains(c))
          extra.push_back(c);
      }
    if (extra.empty())
      return phi;
    gens.insert(gens.end(), extra.begin(), extra.end());
  }
}

std::vector<PermGroup> maximal_subgroups_p_group(PermGroup const &q, std::uint32_t p)
{
  if (!q.is_p_group(p))
    throw std::invalid_argument("maximal_subgroups_p_group: group is not a p-group");
  unsigned n = q.degree();
  if (q.order() == 1)
    return {};
  PermGroup phi = frattini_subgroup(q, p);

  // basis of Q/Phi chosen among the generators of q
  std::vector<Perm> basis;
  std::vector<Perm> span_gens = phi.generators();
  std::size_t span_order = phi.order();
  for (auto const &g : q.generators()) {
    PermGroup cur(n, span_gens);
    if (cur.contains(g))
      continue;
    basis.push_back(g);
    span_gens.push_back(g);
    span_order *= p;
  }
  std::size_t d = basis.size();
  if (span_order != q.order())
    throw std::logic_error("maximal_subgroups_p_group: Frattini quotient basis is inconsistent");

  // coordinates of every element: x = b_1^c_1 ... b_d^c_d * f, f in Phi
  std::unordered_map<Perm, std::vector<std::uint32_t>, PermHash> coord;
  std::vector<std::uint32_t> c(d, 0);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < d; ++i)
    combos *= p;
  for (std::size_t idx = 0; idx < combos; ++idx) {
    std::size_t t = idx;
    Perm x(n);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
      x = x * basis[i].pow(c[i]);
    }
    for (auto const &f : phi.elements())
      coord.emplace(x * f, c);
  }

  // hyperplanes: functionals with leading nonzero coefficient 1
  std::vector<PermGroup> out;
  std::vector<std::uint32_t> lambda(d, 0);
  for (std::size_t idx = 1; idx < combos; ++idx) {
    std::size_t t = idx;
    for (std::size_t i = 0; i < d; ++i) {
      lambda[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    std::size_t lead = 0;
    while (lambda[lead] == 0)
      ++lead;
    if (lambda[lead] != 1)
      continue;
    std::vector<Perm> keep;
    for (auto const &x : q.elements()) {
      auto const &v = coord.at(x);
      std::uint64_t s = 0;
      for (std::size_t i = 0; i < d; ++i)
        s += std::uint64_t(lambda[i]) * v[i];
      if (s % p == 0)
        keep.push_back(x);
    }
    out.push_back(PermGroup::from_elements(n, std::move(keep)));
  }
  return out;
}

namespace {

// Translation by the t-th standard basis vector on a block of size p^i
// starting at 0-based offset z.
Perm block_translation(unsigned n, unsigned z, std::uint32_t p, unsigned i, unsigned t)
{
  std::vector<std::uint8_t> img(n);
  std::iota(img.begin(), img.end(), std::uint8_t(0));
  std::uint64_t size = ipow(p, i), step = ipow(p, t);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t digit = (x / step) % p;
    std::uint64_t y = x - digit * step + ((digit + 1) % p) * step;
    img[z + x] = static_cast<std::uint8_t>(z + y);
  }
  return Perm(std::move(img));
}

void wreath_generators(unsigned n, unsigned z, std::uint32_t p, unsigned i, std::vector<Perm> &out)
{
  if (i == 0)
    return;
  wreath_generators(n, z, p, i - 1, out);
  // cyclic shift of the p sub-blocks of size p^(i-1)
  out.push_back(block_translation(n, z, p, i, i - 1));
}

} // namespace

PermGroup construct_E(std::uint32_t p, std::vector<unsigned> const &m, unsigned n)
{
  if (!is_prime(p))
    throw std::invalid_argument("construct_E: p must be prime");
  std::uint64_t need = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    need += m[i] * ipow(p, static_cast<unsigned>(i + 1));
  if (need > n)
    throw std::invalid_argument("construct_E: composition needs " + std::to_string(need) +
                                " points but n = " + std::to_string(n));
  std::vector<Perm> gens;
  unsigned z = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    unsigned size = static_cast<unsigned>(ipow(p, static_cast<unsigned>(i + 1)));
    for (unsigned j = 0; j < m[i]; ++j) {
      for (unsigned t = 0; t <= i; ++t)
        gens.push_back(block_translation(n, z, p, static_cast<unsigned>(i + 1), t));
      z += size;
    }
  }
  return PermGroup(n, std::move(gens));
}

PermGroup construct_F(std::uint32_t p, std::vector<unsigned> const &m, unsigned n)
{
  if (p != 2)
    throw std::invalid_argument("construct_F: only p = 2 (odd p needs no even part)");
  if (!m.empty() && m[0] == 2)
    throw std::invalid_argument(
        "construct_F: m_1 = 2 excluded; the even part of E(2,...) is not maximal in A_n");
  PermGroup e = construct_E(p, m, n);
  return e.filter([](Perm const &g) { return g.is_even(); });
}

unsigned legendre_exponent(unsigned n, std::uint32_t p)
{
  unsigned e = 0;
  for (std::uint64_t q = p; q <= n; q *= p)
    e += static_cast<unsigned>(n / q);
  return e;
}

PermGroup sylow_sym(unsigned n, std::uint32_t p)
{
  if (n < 1)
    throw std::invalid_argument("sylow_sym: n must be positive");
  if (!is_prime(p))
    throw std::invalid_argument("sylow_sym: p must be prime");
  std::vector<unsigned> digits;
  for (unsigned t = n; t; t /= p)
    digits.push_back(t % p);
  std::vector<Perm> gens;
  unsigned z = 0;
  for (std::size_t i = 1; i < digits.size(); ++i)
    for (unsigned j = 0; j < digits[i]; ++j) {
      wreath_generators(n, z, p, static_cast<unsigned>(i), gens);
      z += static_cast<unsigned>(ipow(p, static_cast<unsigned>(i)));
    }
  return PermGroup(n, std::move(gens));
}

} // namespace spechtlab
