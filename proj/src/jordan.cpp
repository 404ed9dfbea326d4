#include "spechtlab/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "spechtlab/multipoly.hpp"
#include "spechtlab/random.hpp"

namespace spechtlab {

bool StableJordanType::is_free() const
{
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x == 0; });
}

namespace {

std::string blocks_string(std::vector<std::size_t> const &s)
{
  std::string out;
  for (std::size_t r = s.size(); r-- > 0;)
    if (s[r]) {
      out += "[" + std::to_string(r + 1) + "]";
      if (s[r] > 1)
        out += "^" + std::to_string(s[r]);
    }
  return out.empty() ? "free" : out;
}

} // namespace

std::string StableJordanType::to_string() const
{
  return blocks_string(s);
}

StableJordanType StableJordanType::complement() const
{
  StableJordanType out{p, std::vector<std::size_t>(s.rbegin(), s.rend())};
  return out;
}

std::size_t JordanType::dim() const
{
  std::size_t d = 0;
  for (std::size_t r = 0; r < s.size(); ++r)
    d += (r + 1) * s[r];
  return d;
}

std::string JordanType::to_string() const
{
  std::string out = blocks_string(s);
  return out == "free" ? "0" : out;
}

nlohmann::ordered_json JordanType::to_json() const
{
  nlohmann::ordered_json blocks = nlohmann::ordered_json::object();
  for (std::size_t r = 0; r < s.size(); ++r)
    blocks[std::to_string(r + 1)] = s[r];
  nlohmann::ordered_json j;
  j["blocks"] = blocks;
  j["stable_free"] = is_generically_free(*this);
  return j;
}

StableJordanType stable_type(JordanType const &t)
{
  return StableJordanType{t.p, std::vector<std::size_t>(t.s.begin(), t.s.end() - 1)};
}

bool is_generically_free(JordanType const &t)
{
  return stable_type(t).is_free();
}

JordanType direct_sum(JordanType const &a, JordanType const &b)
{
  if (a.p != b.p)
    throw std::invalid_argument("direct_sum: different primes");
  JordanType out = a;
  for (std::size_t r = 0; r < out.s.size(); ++r)
    out.s[r] += b.s[r];
  for (std::size_t j = 0; j < out.ranks.size(); ++j)
    out.ranks[j] += b.ranks[j];
  out.certified = a.certified && b.certified;
  return out;
}

JordanType generic_jordan_type(std::vector<Matrix> const &gen_matrices, std::uint32_t p,
                               JordanOptions const &opts)
{
  if (gen_matrices.empty())
    throw std::invalid_argument("generic_jordan_type: need at least one generator");
  if (gen_matrices.size() > MultiPoly::max_vars)
    throw std::invalid_argument("generic_jordan_type: too many generators");
  std::size_t d = gen_matrices[0].rows();
  Matrix id = Matrix::identity(d, p);
  std::vector<Matrix> coeffs;
  for (auto const &g : gen_matrices) {
    if (g.rows() != d || g.cols() != d || g.p() != p)
      throw std::invalid_argument("generic_jordan_type: generator matrices must be square of equal size");
    if (!(g.pow(p) == id))
      throw std::invalid_argument("generic_jordan_type: generator does not have order dividing p");
    coeffs.push_back(g - id);
  }
  for (std::size_t a = 0; a < gen_matrices.size(); ++a)
    for (std::size_t b = a + 1; b < gen_matrices.size(); ++b)
      if (!(gen_matrices[a] * gen_matrices[b] == gen_matrices[b] * gen_matrices[a]))
        throw std::invalid_argument("generic_jordan_type: generators do not commute");

  JordanType t;
  t.p = p;
  t.ranks.assign(p + 1, 0);
  t.ranks[0] = d;
  std::vector<GenericRankResult> res(p);
  // N^p vanishes in characteristic p; its rank is computed as a check
#pragma omp parallel for schedule(dynamic)
  for (unsigned j = 1; j <= p; ++j) {
    GenericRankOptions ro;
    ro.trials = opts.trials;
    ro.seed = derive_seed(opts.seed, j);
    ro.certify_cutoff = opts.certify_cutoff;
    res[j - 1] = generic_rank_of_pencil_power(coeffs, j, ro);
  }
  t.certified = true;
  for (unsigned j = 1; j <= p; ++j) {
    t.ranks[j] = res[j - 1].rank;
    t.certified = t.certified && res[j - 1].certified;
  }
  if (t.ranks[p] != 0)
    throw std::logic_error("generic_jordan_type: p-th power of the generic operator is nonzero");
  t.s.assign(p, 0);
  for (unsigned r = 1; r <= p; ++r) {
    long long next = r + 1 <= p ? static_cast<long long>(t.ranks[r + 1]) : 0;
    long long v = static_cast<long long>(t.ranks[r - 1]) - 2 * static_cast<long long>(t.ranks[r]) + next;
    if (v < 0)
      throw std::logic_error("generic_jordan_type: rank profile is not convex");
    t.s[r - 1] = static_cast<std::size_t>(v);
  }
  return t;
}

std::vector<Perm> independent_generators(PermGroup const &e, std::uint32_t p)
{
  if (!e.is_elementary_abelian(p))
    throw std::invalid_argument("independent_generators: group is not elementary abelian");
  std::vector<Perm> out;
  PermGroup h = PermGroup::trivial(e.degree());
  for (auto const &g : e.generators()) {
    if (h.contains(g))
      continue;
    out.push_back(g);
    h = PermGroup(e.degree(), out);
  }
  return out;
}

JordanType generic_jordan_type(ModuleRep const &m, std::vector<Perm> const &gens, std::uint32_t p,
                               JordanOptions const &opts)
{
  PermGroup e(gens.empty() ? 1 : gens[0].degree(), gens);
  if (!e.is_elementary_abelian(p))
    throw std::invalid_argument("generic_jordan_type: generators do not span an elementary abelian p-group");
  std::size_t want = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    want *= p;
  if (e.order() != want)
    throw std::invalid_argument("generic_jordan_type: generators are dependent");
  std::vector<Matrix> mats;
  for (auto const &g : gens)
    mats.push_back(m.matrix(g));
  return generic_jordan_type(mats, p, opts);
}

JordanType generic_jordan_type(ModuleRep const &m, PermGroup const &e, std::uint32_t p,
                               JordanOptions const &opts)
{
  return generic_jordan_type(m, independent_generators(e, p), p, opts);
}

StableJordanType monomial_stable_type(MonomialModuleSpec const &spec, PermGroup const &e)
{
  if (e.degree() != spec.n)
    throw std::invalid_argument("monomial_stable_type: degree mismatch");
  auto basis = WedgeBasis::get(spec.n, spec.r);
  std::size_t fixed = 0;
  std::vector<unsigned> img(spec.r);
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    auto const &s = basis->index(k);
    bool ok = true;
    for (auto const &g : e.generators()) {
      for (unsigned a = 0; a < spec.r; ++a)
        img[a] = g.image(s[a]);
      std::sort(img.begin(), img.end());
      if (img != s) {
        ok = false;
        break;
      }
    }
    fixed += ok;
  }
  StableJordanType t{spec.p, std::vector<std::size_t>(spec.p - 1, 0)};
  t.s[0] = fixed;
  return t;
}

bool ChainReport::agree() const
{
  return std::all_of(rows.begin(), rows.end(), [](ChainRow const &r) { return r.agree; });
}

nlohmann::ordered_json ChainReport::to_json() const
{
  nlohmann::ordered_json out;
  out["p"] = p;
  out["k"] = k;
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (auto const &r : rows) {
    nlohmann::ordered_json j;
    j["i"] = r.i;
    j["direct"] = r.direct.to_string();
    j["certified"] = r.certified;
    j["middle"] = r.middle.to_string();
    j["recursive"] = r.recursive ? nlohmann::ordered_json(r.recursive->to_string()) : nlohmann::ordered_json();
    if (r.recursive_not_free)
      j["recursive_not_free"] = *r.recursive_not_free;
    j["agree"] = r.agree;
    rs.push_back(j);
  }
  out["rows"] = rs;
  out["top_not_free"] = top_not_free;
  out["agree"] = agree();
  return out;
}

ChainReport stable_chain_report(std::uint32_t p, unsigned k, PermGroup const &e,
                                JordanOptions const &opts)
{
  unsigned n = k * p;
  if (e.degree() != n)
    throw std::invalid_argument("stable_chain_report: E must act on kp points");
  auto gens = independent_generators(e, p);
  ChainReport rep;
  rep.p = p;
  rep.k = k;
  // the trivial module has type [1]
  std::optional<StableJordanType> prev = StableJordanType{p, std::vector<std::size_t>(p - 1, 0)};
  prev->s[0] = 1;
  for (unsigned i = 1; i <= p; ++i) {
    ChainRow row;
    row.i = i;
    JordanOptions o = opts;
    o.seed = derive_seed(opts.seed, 1000 + i);
    JordanType t = generic_jordan_type(ModuleRep::hook(n, i, p), gens, p, o);
    row.direct = stable_type(t);
    row.certified = t.certified;
    row.middle = monomial_stable_type({n, i, p}, e);
    row.middle_free = row.middle.is_free();
    if (i < p) {
      if (prev && row.middle_free)
        row.recursive = prev->complement();
      row.agree = row.recursive && *row.recursive == row.direct;
      prev = row.recursive;
    } else {
      // if the top were free, the middle would share the stable type of the quotient
      if (prev)
        row.recursive_not_free = !(row.middle == *prev);
      rep.top_not_free = !row.direct.is_free();
      row.agree = row.recursive_not_free && *row.recursive_not_free == rep.top_not_free;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace spechtlab
