#include "spechtlab/brauer.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace spechtlab {

ModuleRep::ModuleRep(std::uint32_t p, std::size_t ambient_dim, Apply apply, std::string tag)
    : p_(p), n_(ambient_dim), apply_(std::move(apply)), tag_(std::move(tag))
{}

ModuleRep ModuleRep::wedge(unsigned n, unsigned r, std::uint32_t p)
{
  auto apply = [n, r, p](Perm const &g, std::span<Scalar const> v) {
    return act(g, WedgeVector(n, r, p, Vector(v.begin(), v.end()))).coeffs();
  };
  return ModuleRep(p, binomial(n, r), apply,
                   "wedge(" + std::to_string(n) + "," + std::to_string(r) + ")");
}

ModuleRep ModuleRep::hook(unsigned n, unsigned r, std::uint32_t p)
{
  HookSpechtModule h(n, r, p);
  return wedge(n, r, p).restricted_to(h.basis(), "hook(" + std::to_string(n) + "," +
                                                     std::to_string(r) + ")");
}

ModuleRep ModuleRep::from_generators(PermGroup const &g, std::vector<Matrix> const &mats,
                                     std::string tag)
{
  auto const &gens = g.generators();
  if (gens.size() != mats.size())
    throw std::invalid_argument("ModuleRep: one matrix per generator required");
  if (mats.empty())
    throw std::invalid_argument("ModuleRep: need at least one generator matrix");
  std::size_t d = mats[0].rows();
  std::uint32_t p = mats[0].p();
  for (auto const &m : mats)
    if (m.rows() != d || m.cols() != d || m.p() != p)
      throw std::invalid_argument("ModuleRep: generator matrices must be square of equal size");

  auto table = std::make_shared<std::unordered_map<Perm, Matrix, PermHash>>();
  Perm id(g.degree());
  (*table)[id] = Matrix::identity(d, p);
  std::vector<Perm> queue{id};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Perm x = queue[head];
    Matrix mx = (*table)[x];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm y = gens[i] * x;
      Matrix my = mats[i] * mx;
      auto it = table->find(y);
      if (it == table->end()) {
        (*table)[y] = std::move(my);
        queue.push_back(y);
      } else if (!(it->second == my)) {
        throw std::invalid_argument("ModuleRep: generator matrices do not define a representation");
      }
    }
  }
  auto apply = [table](Perm const &x, std::span<Scalar const> v) {
    auto it = table->find(x);
    if (it == table->end())
      throw std::invalid_argument("ModuleRep: element outside the acting group");
    return it->second.apply(v);
  };
  return ModuleRep(p, d, apply, std::move(tag));
}

ModuleRep ModuleRep::trivial(unsigned degree, std::uint32_t p)
{
  (void)degree;
  auto apply = [](Perm const &, std::span<Scalar const> v) { return Vector(v.begin(), v.end()); };
  return ModuleRep(p, 1, apply, "trivial");
}

ModuleRep ModuleRep::restricted_to(Matrix subspace_rows, std::string tag) const
{
  if (subspace_rows.cols() != n_ || subspace_rows.p() != p_)
    throw std::invalid_argument("ModuleRep::restricted_to: shape mismatch");
  if (rank(subspace_rows) != subspace_rows.rows())
    throw std::invalid_argument("ModuleRep::restricted_to: rows must be independent");
  ModuleRep out = *this;
  std::size_t s = subspace_rows.rows();
  out.pivots_ = rref(subspace_rows).pivots;
  Matrix bp(s, s, p_);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      bp(i, j) = subspace_rows(i, out.pivots_[j]);
  out.pivot_inverse_ = *inverse(bp);
  out.subspace_ = std::move(subspace_rows);
  out.tag_ = std::move(tag);
  return out;
}

Matrix ModuleRep::ambient_matrix(Perm const &g) const
{
  Matrix m(n_, n_, p_);
  Vector e(n_, 0);
  for (std::size_t k = 0; k < n_; ++k) {
    e[k] = 1;
    Vector img = apply(g, e);
    e[k] = 0;
    for (std::size_t i = 0; i < n_; ++i)
      m(i, k) = img[i];
  }
  return m;
}

Matrix ModuleRep::basis() const
{
  return subspace_ ? *subspace_ : Matrix::identity(n_, p_);
}

Matrix ModuleRep::matrix(Perm const &g) const
{
  if (!subspace_)
    return ambient_matrix(g);
  Matrix const &b = *subspace_;
  std::size_t s = b.rows();
  Matrix img(0, n_, p_);
  for (std::size_t k = 0; k < s; ++k)
    img.append_row(apply(g, b.row(k)));
  // rows of x are the coordinates: x * b = img
  Matrix img_p(s, s, p_);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      img_p(i, j) = img(i, pivots_[j]);
  Matrix x = img_p * pivot_inverse_;
  if (!(x * b == img))
    throw std::logic_error("ModuleRep::matrix: subspace is not invariant");
  return x.transpose();
}

Vector coordinates(Matrix const &rows, std::span<Scalar const> v)
{
  auto x = solve(rows.transpose(), v);
  if (!x)
    throw std::invalid_argument("coordinates: vector outside the span");
  return *x;
}

Matrix fixed_space(ModuleRep const &v, PermGroup const &q)
{
  Matrix b = v.basis();
  auto const &gens = q.generators();
  if (gens.empty())
    return b;
  std::size_t s = b.rows(), n = b.cols();
  PrimeField f(v.p());
  // column k of each block: g b_k - b_k
  Matrix stacked(gens.size() * n, s, v.p());
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t k = 0; k < s; ++k) {
      Vector img = v.apply(gens[gi], b.row(k));
      for (std::size_t i = 0; i < n; ++i)
        stacked(gi * n + i, k) = f.sub(img[i], b(k, i));
    }
  Matrix x = nullspace(stacked);
  if (x.rows() == 0)
    return Matrix(0, n, v.p());
  return x * b;
}

std::vector<Perm> coset_representatives(PermGroup const &q, PermGroup const &r)
{
  auto const &qe = q.elements();
  std::vector<bool> covered(qe.size(), false);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < qe.size(); ++i) {
    if (covered[i])
      continue;
    reps.push_back(qe[i]);
    for (auto const &h : r.elements()) {
      auto j = q.index_of(qe[i] * h);
      if (!j)
        throw std::invalid_argument("coset_representatives: R is not a subgroup of Q");
      covered[*j] = true;
    }
  }
  return reps;
}

Vector relative_trace(ModuleRep const &v, PermGroup const &r, PermGroup const &q,
                      std::span<Scalar const> x)
{
  if (!r.is_subgroup_of(q))
    throw std::invalid_argument("relative_trace: R is not a subgroup of Q");
  for (auto const &g : r.generators())
    if (v.apply(g, x) != Vector(x.begin(), x.end()))
      throw std::invalid_argument("relative_trace: vector is not fixed by R");
  PrimeField f(v.p());
  Vector sum(x.size(), 0);
  for (auto const &s : coset_representatives(q, r)) {
    Vector img = v.apply(s, x);
    for (std::size_t i = 0; i < sum.size(); ++i)
      sum[i] = f.add(sum[i], img[i]);
  }
  return sum;
}

Matrix trace_image(ModuleRep const &v, PermGroup const &r, PermGroup const &q)
{
  if (!r.is_subgroup_of(q))
    throw std::invalid_argument("trace_image: R is not a subgroup of Q");
  Matrix fixed = fixed_space(v, r);
  auto reps = coset_representatives(q, r);
  PrimeField f(v.p());
  Matrix images(0, v.ambient_dim(), v.p());
  for (std::size_t k = 0; k < fixed.rows(); ++k) {
    Vector sum(v.ambient_dim(), 0);
    for (auto const &s : reps) {
      Vector img = v.apply(s, fixed.row(k));
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = f.add(sum[i], img[i]);
    }
    images.append_row(sum);
  }
  return row_space_basis(images);
}

nlohmann::ordered_json BrauerReport::to_json() const
{
  nlohmann::ordered_json j;
  j["dim_fixed"] = dim_fixed;
  j["dim_kernel"] = dim_kernel;
  j["dim_quotient"] = dim_quotient;
  j["maximal_subgroups"] = maximal_subgroups;
  j["orbit_labels"] = orbit_labels;
  return j;
}

namespace {

BrauerReport quotient_over(ModuleRep const &v, PermGroup const &q,
                           std::vector<PermGroup> const &subs)
{
  BrauerReport rep;
  rep.fixed_basis = fixed_space(v, q);
  rep.dim_fixed = rep.fixed_basis.rows();
  std::vector<Matrix> images(subs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < subs.size(); ++i)
    images[i] = trace_image(v, subs[i], q);
  Matrix all(0, v.ambient_dim(), v.p());
  for (auto const &m : images)
    all.append_rows(m);
  rep.kernel_basis = row_space_basis(all);
  rep.dim_kernel = rep.kernel_basis.rows();
  for (std::size_t k = 0; k < rep.kernel_basis.rows(); ++k)
    if (!in_row_space(rep.fixed_basis, rep.kernel_basis.row(k)))
      throw std::logic_error("brauer_quotient: trace image outside the fixed space");
  rep.dim_quotient = rep.dim_fixed - rep.dim_kernel;
  rep.maximal_subgroups = subs.size();
  return rep;
}

} // namespace

BrauerReport brauer_quotient(ModuleRep const &v, PermGroup const &q, std::uint32_t p)
{
  if (!q.is_p_group(p))
    throw std::invalid_argument("brauer_quotient: Q is not a p-group");
  return quotient_over(v, q, maximal_subgroups_p_group(q, p));
}

std::vector<PermGroup> all_subgroups(PermGroup const &q)
{
  if (q.order() > 256)
    throw GroupTooLarge("all_subgroups: group too large");
  auto key = [&q](PermGroup const &h) {
    std::vector<std::size_t> k;
    for (auto const &x : h.elements())
      k.push_back(*q.index_of(x));
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, PermGroup> found;
  std::vector<PermGroup> frontier{PermGroup::trivial(q.degree())};
  found.emplace(std::make_pair(std::size_t(1), key(frontier[0])), frontier[0]);
  while (!frontier.empty()) {
    std::vector<PermGroup> next;
    for (auto const &h : frontier)
      for (auto const &x : q.elements()) {
        if (h.contains(x))
          continue;
        auto gens = h.generators();
        gens.push_back(x);
        PermGroup k(q.degree(), gens);
        auto kk = std::make_pair(k.order(), key(k));
        if (found.emplace(kk, k).second)
          next.push_back(k);
      }
    frontier = std::move(next);
  }
  std::vector<PermGroup> out;
  for (auto &[k, h] : found)
    out.push_back(h);
  return out;
}

BrauerReport brauer_quotient_all_subgroups(ModuleRep const &v, PermGroup const &q,
                                           std::uint32_t p)
{
  if (!q.is_p_group(p))
    throw std::invalid_argument("brauer_quotient: Q is not a p-group");
  std::vector<PermGroup> proper;
  for (auto &h : all_subgroups(q))
    if (h.order() < q.order())
      proper.push_back(h);
  BrauerReport rep = quotient_over(v, q, proper);
  rep.maximal_subgroups = 0;
  return rep;
}

std::string OrbitSum::label() const
{
  std::string s = "{";
  for (std::size_t a = 0; a < representative.size(); ++a) {
    if (a)
      s += ',';
    s += std::to_string(representative[a]);
  }
  return s + "}:orbit=" + std::to_string(orbit_size) + ":stab=" + std::to_string(stabilizer_order);
}

std::vector<OrbitSum> monomial_orbit_basis(MonomialModuleSpec const &spec, PermGroup const &q)
{
  if (q.degree() != spec.n)
    throw std::invalid_argument("monomial_orbit_basis: degree mismatch");
  if (!q.is_p_group(spec.p))
    throw std::invalid_argument("monomial_orbit_basis: Q is not a p-group");
  auto basis = WedgeBasis::get(spec.n, spec.r);
  std::vector<bool> seen(basis->dim(), false);
  std::vector<OrbitSum> out;
  std::vector<unsigned> pts(spec.r);
  for (std::size_t k = 0; k < basis->dim(); ++k) {
    if (seen[k])
      continue;
    OrbitSum o{basis->index(k), 0, 0, WedgeVector(spec.n, spec.r, spec.p)};
    WedgeVector mono = WedgeVector::monomial(spec.n, spec.p, o.representative);
    for (auto const &g : q.elements()) {
      for (unsigned a = 0; a < spec.r; ++a)
        pts[a] = g.image(o.representative[a]);
      std::sort(pts.begin(), pts.end());
      std::size_t t = basis->rank(pts);
      if (seen[t])
        continue;
      seen[t] = true;
      ++o.orbit_size;
      o.vector = o.vector + act(g, mono);
    }
    o.stabilizer_order = q.order() / o.orbit_size;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup set_stabilizer(PermGroup const &q, std::vector<unsigned> const &points)
{
  std::vector<unsigned> want = points;
  std::sort(want.begin(), want.end());
  std::vector<unsigned> img(want.size());
  return q.filter([&](Perm const &g) {
    for (std::size_t a = 0; a < want.size(); ++a)
      img[a] = g.image(want[a]);
    std::sort(img.begin(), img.end());
    return img == want;
  });
}

std::vector<OrbitSum> trace_image_basis(MonomialModuleSpec const &spec, PermGroup const &r,
                                        PermGroup const &q)
{
  if (!r.is_subgroup_of(q))
    throw std::invalid_argument("trace_image_basis: R is not a subgroup of Q");
  std::vector<OrbitSum> out;
  for (auto &o : monomial_orbit_basis(spec, q)) {
    PermGroup stab = set_stabilizer(q, o.representative);
    bool inside = std::all_of(stab.generators().begin(), stab.generators().end(),
                              [&r](Perm const &g) { return r.contains(g); });
    if (inside)
      out.push_back(std::move(o));
  }
  return out;
}

bool normalizer_action_check(ModuleRep const &v, PermGroup const &q, std::uint32_t p,
                             Perm const &g)
{
  if (!q.is_normalized_by(g))
    throw std::invalid_argument("normalizer_action_check: g does not normalize Q");
  BrauerReport rep = brauer_quotient(v, q, p);
  for (Matrix const *m : {&rep.fixed_basis, &rep.kernel_basis})
    for (std::size_t k = 0; k < m->rows(); ++k)
      if (!in_row_space(*m, v.apply(g, m->row(k))))
        return false;
  return true;
}

namespace {

std::vector<Perm> grid_t_generators(std::uint32_t p, unsigned k)
{
  if (k < p)
    throw std::invalid_argument("grid_group: need k >= p");
  unsigned n = k * p, base = p * p;
  std::vector<Perm> out;
  if (n == base)
    return out;
  PermGroup t_group = sylow_sym(n - base, p);
  for (auto const &t : t_group.generators()) {
    std::vector<std::uint8_t> img(n);
    for (unsigned i = 0; i < n; ++i)
      img[i] = static_cast<std::uint8_t>(i < base ? i : base + t(i - base));
    out.emplace_back(img);
  }
  return out;
}

} // namespace

PermGroup grid_group(std::uint32_t p, unsigned k)
{
  auto gens = grid_t_generators(p, k);
  gens.insert(gens.begin(), {alpha_perm(p, k * p), beta_perm(p, k * p)});
  return PermGroup(k * p, gens);
}

PermGroup grid_alpha_t(std::uint32_t p, unsigned k)
{
  auto gens = grid_t_generators(p, k);
  gens.insert(gens.begin(), alpha_perm(p, k * p));
  return PermGroup(k * p, gens);
}

} // namespace spechtlab
