#include "spechtlab/elem_abelian.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "spechtlab/field.hpp"

namespace spechtlab {

std::string flavor_name(Flavor f)
{
  return f == Flavor::SYM ? "sym" : "alt";
}

Flavor parse_flavor(std::string const &s)
{
  if (s == "sym" || s == "SYM")
    return Flavor::SYM;
  if (s == "alt" || s == "ALT")
    return Flavor::ALT;
  throw std::invalid_argument("group flavor must be sym or alt, got '" + s + "'");
}

unsigned ElemAbelianClass::rank() const
{
  unsigned r = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    r += static_cast<unsigned>(i + 1) * m[i];
  return r;
}

unsigned ElemAbelianClass::support() const
{
  unsigned s = 0, q = 1;
  for (auto x : m) {
    q *= p;
    s += x * q;
  }
  return s;
}

PermGroup ElemAbelianClass::representative() const
{
  return flavor == Flavor::SYM ? construct_E(p, m, n) : construct_F(p, m, n);
}

std::string ElemAbelianClass::to_string(std::size_t width) const
{
  std::string s = "(";
  std::size_t w = std::max(width, m.size());
  for (std::size_t i = 0; i < w; ++i) {
    if (i)
      s += ',';
    s += std::to_string(i < m.size() ? m[i] : 0u);
  }
  return s + ")";
}

std::size_t composition_width(std::uint32_t p, unsigned n)
{
  std::size_t r = 0;
  for (std::uint64_t q = p; q <= n; q *= p)
    ++r;
  return r;
}

namespace {

void compositions(std::uint32_t p, unsigned target, std::size_t width, std::vector<unsigned> &cur,
                  std::vector<std::vector<unsigned>> &out)
{
  // cur holds m_1..m_k; fill m_{k+1}
  std::size_t i = cur.size();
  if (i == width) {
    if (target == 0)
      out.push_back(cur);
    return;
  }
  unsigned part = 1;
  for (std::size_t t = 0; t <= i; ++t)
    part *= p;
  for (unsigned c = target / part + 1; c-- > 0;) {
    cur.push_back(c);
    compositions(p, target - c * part, width, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<ElemAbelianClass> classify_elem_abelian(std::uint32_t p, unsigned n, Flavor flavor)
{
  if (!is_prime(p))
    throw std::invalid_argument("classify_elem_abelian: p must be prime");
  unsigned target = n;
  if (flavor == Flavor::SYM) {
    target = p * (n / p);
  } else {
    if (p != 2)
      throw ReducesToSym("for odd p every p-element is even, so the maximal elementary abelian "
                         "p-subgroups of A_n are those of S_n; use the sym flavor");
    if (n % 2)
      throw std::invalid_argument("alternating classification needs even n");
  }
  std::size_t width = composition_width(p, target);
  std::vector<std::vector<unsigned>> raw;
  std::vector<unsigned> cur;
  compositions(p, target, width, cur, raw);

  std::vector<ElemAbelianClass> out;
  for (auto &m : raw) {
    if (flavor == Flavor::ALT && !m.empty() && m[0] == 2)
      continue;
    while (!m.empty() && m.back() == 0)
      m.pop_back();
    out.push_back(ElemAbelianClass{p, std::move(m), n, flavor});
  }
  return out;
}

namespace {

std::vector<Perm> independent_basis(PermGroup const &g)
{
  std::vector<Perm> basis;
  for (auto const &x : g.generators()) {
    if (PermGroup(g.degree(), basis).contains(x))
      continue;
    basis.push_back(x);
  }
  return basis;
}

} // namespace

std::vector<ElemAbelianSubgroup> enumerate_elem_abelian(PermGroup const &h, std::uint32_t p,
                                                        bool from_class_reps)
{
  auto const &elems = h.elements();
  using Key = std::vector<std::uint32_t>;

  std::vector<std::uint32_t> order_p;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].order() == p)
      order_p.push_back(static_cast<std::uint32_t>(i));

  std::vector<std::uint32_t> starts;
  if (from_class_reps) {
    std::vector<bool> done(elems.size(), false);
    for (auto x : order_p) {
      if (done[x])
        continue;
      starts.push_back(x);
      for (auto const &g : elems)
        done[*h.index_of(g.conjugate(elems[x]))] = true;
    }
  } else {
    starts = order_p;
  }

  auto idx = [&](Perm const &g) { return static_cast<std::uint32_t>(*h.index_of(g)); };

  struct Node
  {
    Key key;
    std::vector<Perm> basis;
    bool maximal = true;
  };
  std::vector<Node> nodes;
  std::set<Key> seen;
  for (auto x : starts) {
    Key key{0};
    for (unsigned k = 1; k < p; ++k)
      key.push_back(idx(elems[x].pow(k)));
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second)
      nodes.push_back(Node{std::move(key), {elems[x]}, true});
  }

  for (std::size_t at = 0; at < nodes.size(); ++at) {
    // copy: nodes may reallocate below
    Key const key = nodes[at].key;
    std::vector<Perm> const basis = nodes[at].basis;
    std::vector<bool> covered(elems.size(), false);
    for (auto e : key)
      covered[e] = true;
    for (auto y : order_p) {
      if (covered[y])
        continue;
      Perm const &yy = elems[y];
      bool ok = true;
      for (auto const &b : basis)
        if (!yy.commutes_with(b)) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      nodes[at].maximal = false;
      Key nk = key;
      Perm yk = yy;
      for (unsigned k = 1; k < p; ++k) {
        for (auto e : key)
          nk.push_back(idx(yk * elems[e]));
        yk = yk * yy;
      }
      std::sort(nk.begin(), nk.end());
      for (auto e : nk)
        covered[e] = true;
      if (seen.insert(nk).second) {
        auto nb = basis;
        nb.push_back(yy);
        nodes.push_back(Node{std::move(nk), std::move(nb), true});
      }
    }
  }

  std::vector<ElemAbelianSubgroup> out;
  out.reserve(nodes.size());
  for (auto &nd : nodes) {
    ElemAbelianSubgroup s;
    s.basis = std::move(nd.basis);
    for (auto e : nd.key)
      s.elements.push_back(elems[e]);
    std::sort(s.elements.begin(), s.elements.end());
    s.maximal = nd.maximal;
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Vectors of F_p^d are encoded as integers with base-p digits.
struct VecSpace
{
  std::uint32_t p;
  unsigned d;
  std::uint32_t size;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const
  {
    std::uint32_t r = 0, q = 1;
    for (unsigned i = 0; i < d; ++i) {
      r += ((a % p + b % p) % p) * q;
      a /= p;
      b /= p;
      q *= p;
    }
    return r;
  }
  std::uint32_t scale(std::uint32_t c, std::uint32_t a) const
  {
    std::uint32_t r = 0, q = 1;
    for (unsigned i = 0; i < d; ++i) {
      r += ((a % p) * c % p) * q;
      a /= p;
      q *= p;
    }
    return r;
  }
};

struct StabilizerData
{
  std::vector<Perm> basis;
  std::vector<Perm> by_vector;                  // element for each coordinate vector
  std::vector<std::vector<std::uint32_t>> kernels; // per orbit, sorted coordinate vectors
};

StabilizerData stabilizer_data(PermGroup const &g, std::uint32_t p, unsigned d)
{
  StabilizerData s;
  s.basis = independent_basis(g);
  std::uint32_t size = 1;
  for (unsigned i = 0; i < d; ++i)
    size *= p;
  s.by_vector.reserve(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    Perm x(g.degree());
    std::uint32_t t = v;
    for (unsigned i = 0; i < d; ++i) {
      x = x * s.basis[i].pow(t % p);
      t /= p;
    }
    s.by_vector.push_back(std::move(x));
  }
  auto prof = orbits(g);
  for (auto const &o : prof.orbits) {
    if (o.size() == 1)
      continue;
    unsigned pt = o.front() - 1;
    std::vector<std::uint32_t> k;
    for (std::uint32_t v = 0; v < size; ++v)
      if (s.by_vector[v](pt) == pt)
        k.push_back(v);
    s.kernels.push_back(std::move(k));
  }
  return s;
}

bool multiset_equal(std::vector<std::vector<std::uint32_t>> a, std::vector<std::vector<std::uint32_t>> b)
{
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class IsoSearch
{
public:
  IsoSearch(VecSpace vs, StabilizerData const &a, StabilizerData const &b)
      : vs_(vs), a_(a), b_(b), w_(vs.d, 0)
  {}

  bool run() { return extend(0); }

private:
  // image under psi of a vector supported on the first k coordinates
  std::uint32_t image(std::uint32_t v) const
  {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < vs_.d; ++i) {
      std::uint32_t c = v % vs_.p;
      v /= vs_.p;
      if (c)
        r = vs_.add(r, vs_.scale(c, w_[i]));
    }
    return r;
  }

  bool consistent(unsigned k) const
  {
    std::uint32_t lim = 1;
    for (unsigned i = 0; i < k; ++i)
      lim *= vs_.p;
    // span of w_0..w_{k-1}
    std::vector<bool> in_span(vs_.size, false);
    for (std::uint32_t v = 0; v < lim; ++v)
      in_span[image(v)] = true;

    std::vector<std::vector<std::uint32_t>> left, right;
    for (auto const &kern : a_.kernels) {
      std::vector<std::uint32_t> img;
      for (auto v : kern)
        if (v < lim)
          img.push_back(image(v));
      std::sort(img.begin(), img.end());
      left.push_back(std::move(img));
    }
    for (auto const &kern : b_.kernels) {
      std::vector<std::uint32_t> sub;
      for (auto v : kern)
        if (in_span[v])
          sub.push_back(v);
      right.push_back(std::move(sub));
    }
    return multiset_equal(std::move(left), std::move(right));
  }

  bool extend(unsigned k)
  {
    if (k == vs_.d)
      return true;
    std::uint32_t lim = 1;
    for (unsigned i = 0; i < k; ++i)
      lim *= vs_.p;
    std::vector<bool> in_span(vs_.size, false);
    for (std::uint32_t v = 0; v < lim; ++v)
      in_span[image(v)] = true;
    for (std::uint32_t cand = 1; cand < vs_.size; ++cand) {
      if (in_span[cand])
        continue;
      w_[k] = cand;
      if (consistent(k + 1) && extend(k + 1))
        return true;
    }
    w_[k] = 0;
    return false;
  }

  VecSpace vs_;
  StabilizerData const &a_;
  StabilizerData const &b_;
  std::vector<std::uint32_t> w_;
};

unsigned log_p(std::size_t order, std::uint32_t p)
{
  unsigned d = 0;
  while (order > 1) {
    order /= p;
    ++d;
  }
  return d;
}

} // namespace

bool are_conjugate_in_sym(PermGroup const &a, PermGroup const &b, std::uint32_t p)
{
  if (!a.is_elementary_abelian(p) || !b.is_elementary_abelian(p))
    throw std::invalid_argument("are_conjugate_in_sym: groups must be elementary abelian");
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  if (orbits(a).sizes != orbits(b).sizes)
    return false;
  auto cycle_types = [](PermGroup const &g) {
    std::vector<std::vector<unsigned>> t;
    for (auto const &x : g.elements())
      t.push_back(x.cycle_type());
    std::sort(t.begin(), t.end());
    return t;
  };
  if (cycle_types(a) != cycle_types(b))
    return false;
  unsigned d = log_p(a.order(), p);
  if (d == 0)
    return true;
  VecSpace vs{p, d, static_cast<std::uint32_t>(a.order())};
  auto sa = stabilizer_data(a, p, d);
  auto sb = stabilizer_data(b, p, d);
  return IsoSearch(vs, sa, sb).run();
}

bool is_conjugate_to_class(PermGroup const &e, ElemAbelianClass const &c)
{
  if (!e.is_elementary_abelian(c.p))
    throw std::invalid_argument("is_conjugate_to_class: group is not elementary abelian");
  if (c.flavor == Flavor::ALT) {
    PermGroup rep = construct_F(c.p, c.m, e.degree());
    return are_conjugate_in_sym(e, rep, c.p);
  }
  auto prof = orbits(e);
  std::vector<unsigned> count(c.m.size(), 0);
  std::size_t product = 1;
  for (std::size_t i = 0; i < prof.orbits.size(); ++i) {
    std::size_t s = prof.orbits[i].size();
    if (s == 1)
      continue;
    if (!prof.regular[i])
      return false;
    product *= s;
    // s must be p^j with 1 <= j <= r
    std::size_t q = 1;
    std::size_t j = 0;
    while (q < s) {
      q *= c.p;
      ++j;
    }
    if (q != s || j > c.m.size())
      return false;
    ++count[j - 1];
  }
  return count == c.m && product == e.order();
}

std::vector<PermGroup> brute_force_maximal_classes(std::uint32_t p, unsigned n, Flavor flavor)
{
  PermGroup h = flavor == Flavor::SYM ? PermGroup::symmetric(n) : PermGroup::alternating(n);
  auto subs = enumerate_elem_abelian(h, p, true);
  std::vector<PermGroup> reps;
  for (auto const &s : subs) {
    if (!s.maximal)
      continue;
    PermGroup g = s.group(n);
    bool known = false;
    for (auto const &r : reps)
      if (are_conjugate_in_sym(g, r, p)) {
        known = true;
        break;
      }
    if (!known)
      reps.push_back(g);
  }
  return reps;
}

bool SylowReport::forward_pass() const
{
  if (forward.size() != classes.size())
    return false;
  for (auto const &f : forward)
    if (!f.found)
      return false;
  return true;
}

bool SylowReport::converse_pass() const
{
  for (auto const &c : converse)
    if (!c.missing)
      return false;
  return true;
}

SylowReport verify_sylow_characterization(std::uint32_t p, unsigned n, Flavor flavor)
{
  SylowReport rep;
  rep.p = p;
  rep.n = n;
  rep.flavor = flavor;
  rep.classes = classify_elem_abelian(p, n, flavor);

  PermGroup sym_p = sylow_sym(n, p);
  PermGroup sylow = flavor == Flavor::SYM ? sym_p : sym_p.filter([](Perm const &g) { return g.is_even(); });
  rep.sylow_order = sylow.order();
  rep.sylow_generators = sylow.generators();

  auto inside = enumerate_elem_abelian(sylow, p, true);
  for (auto const &c : rep.classes) {
    SylowReport::Forward f;
    f.cls = c;
    std::size_t want = c.representative().order();
    for (auto const &s : inside) {
      if (s.elements.size() != want)
        continue;
      if (is_conjugate_to_class(s.group(n), c)) {
        f.found = true;
        f.witness = s.basis;
        break;
      }
    }
    rep.forward.push_back(std::move(f));
  }

  std::vector<std::size_t> class_orders;
  for (auto const &c : rep.classes)
    class_orders.push_back(c.representative().order());

  auto maximal = maximal_subgroups_p_group(sylow, p);
  rep.converse.resize(maximal.size());
  long count = static_cast<long>(maximal.size());
#pragma omp parallel for schedule(dynamic)
  for (long mi = 0; mi < count; ++mi) {
    auto const &m = maximal[static_cast<std::size_t>(mi)];
    auto &out = rep.converse[static_cast<std::size_t>(mi)];
    out.generators = m.generators();
    out.order = m.order();
    auto subs = enumerate_elem_abelian(m, p, true);
    for (std::size_t ci = 0; ci < rep.classes.size(); ++ci) {
      auto const &c = rep.classes[ci];
      std::size_t want = class_orders[ci];
      bool present = false;
      for (auto const &s : subs)
        if (s.elements.size() == want && is_conjugate_to_class(s.group(n), c)) {
          present = true;
          break;
        }
      if (!present) {
        out.missing = c;
        break;
      }
    }
  }
  return rep;
}

} // namespace spechtlab
