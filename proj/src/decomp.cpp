#include "spechtlab/decomp.hpp"

#include <stdexcept>

#include <omp.h>

#include "spechtlab/random.hpp"

namespace spechtlab {

namespace {

// Combination sum c_t * mats[t].
Matrix combine(std::vector<Matrix> const &mats, std::span<Scalar const> c, std::size_t d,
               std::uint32_t p)
{
  PrimeField f(p);
  Matrix out(d, d, p);
  for (std::size_t t = 0; t < mats.size(); ++t) {
    if (!c[t])
      continue;
    auto const &src = mats[t].data();
    auto &dst = out.data();
    for (std::size_t i = 0; i < dst.size(); ++i)
      dst[i] = f.add(dst[i], f.mul(c[t], src[i]));
  }
  return out;
}

Matrix column_space_rows(Matrix const &m)
{
  return row_space_basis(m.transpose());
}

} // namespace

EndoAlgebra endomorphism_algebra(std::vector<Matrix> const &gens)
{
  if (gens.empty())
    throw std::invalid_argument("endomorphism_algebra: need at least one generator");
  std::size_t d = gens[0].rows();
  std::uint32_t p = gens[0].p();
  for (auto const &g : gens)
    if (g.rows() != d || g.cols() != d || g.p() != p)
      throw std::invalid_argument("endomorphism_algebra: generator matrices must be square of equal size");

  // first generator: X A - A X = 0 on all d^2 unknowns x_{ij} (index i*d+j)
  PrimeField f(p);
  Matrix const &a = gens[0];
  Matrix sys(d * d, d * d, p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t row = i * d + j;
      for (std::size_t k = 0; k < d; ++k) {
        std::size_t u = i * d + k, w = k * d + j;
        sys(row, u) = f.add(sys(row, u), a(k, j));
        sys(row, w) = f.sub(sys(row, w), a(i, k));
      }
    }
  Matrix ker = nullspace(sys);
  std::vector<Matrix> basis;
  for (std::size_t t = 0; t < ker.rows(); ++t)
    basis.emplace_back(d, d, p, ker.row_vector(t));

  // remaining generators: restrict to the current commutant
  for (std::size_t gi = 1; gi < gens.size() && !basis.empty(); ++gi) {
    Matrix const &g = gens[gi];
    Matrix cols(d * d, basis.size(), p);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Matrix c = basis[t] * g - g * basis[t];
      for (std::size_t i = 0; i < d * d; ++i)
        cols(i, t) = c.data()[i];
    }
    Matrix comb = nullspace(cols);
    std::vector<Matrix> next;
    for (std::size_t t = 0; t < comb.rows(); ++t)
      next.push_back(combine(basis, comb.row(t), d, p));
    basis = std::move(next);
  }
  return EndoAlgebra{d, p, std::move(basis)};
}

std::vector<Matrix> generator_matrices(ModuleRep const &m, PermGroup const &q)
{
  std::vector<Matrix> out;
  for (auto const &g : q.generators())
    out.push_back(m.matrix(g));
  return out;
}

nlohmann::ordered_json SplitResult::to_json() const
{
  nlohmann::ordered_json j;
  j["status"] = decomposed() ? "decomposed" : "no_split";
  if (decomposed())
    j["dims"] = {first.rows(), second.rows()};
  j["trials"] = trials;
  return j;
}

SplitResult fitting_split(std::vector<Matrix> const &gens, unsigned trials, std::uint64_t seed)
{
  return fitting_split(endomorphism_algebra(gens), gens, trials, seed);
}

SplitResult fitting_split(EndoAlgebra const &alg, std::vector<Matrix> const &gens, unsigned trials,
                          std::uint64_t seed)
{
  std::size_t d = alg.module_dim;
  std::uint32_t p = alg.p;
  SplitResult res;
  res.trials = trials;
  if (d == 0 || alg.basis.empty())
    return res;
  struct Attempt
  {
    bool ok = false;
    Matrix ker, im;
  };
  // trials run in batches; the lowest successful index wins
  unsigned batch = static_cast<unsigned>(std::max(1, omp_get_max_threads()));
  for (unsigned start = 0; start < trials; start += batch) {
    unsigned stop = std::min(trials, start + batch);
    std::vector<Attempt> att(stop - start);
#pragma omp parallel for schedule(static)
    for (unsigned t = start; t < stop; ++t) {
      Rng rng = make_rng(seed, t);
      Vector c(alg.dim());
      for (auto &x : c)
        x = static_cast<Scalar>(rng() % p);
      Matrix phi = combine(alg.basis, c, d, p);
      // phi^(2^j) with 2^j >= d
      std::size_t e = 1;
      while (e < d) {
        phi = phi * phi;
        e *= 2;
      }
      Matrix ker = nullspace(phi);
      if (ker.rows() == 0 || ker.rows() == d)
        continue;
      att[t - start] = Attempt{true, ker, column_space_rows(phi)};
    }
    for (unsigned t = start; t < stop; ++t)
      if (att[t - start].ok) {
        res.status = SplitResult::Status::decomposed;
        res.first = std::move(att[t - start].ker);
        res.second = std::move(att[t - start].im);
        res.trials = t + 1;
        if (!verify_split(gens, res))
          throw std::logic_error("fitting_split: returned summands fail verification");
        return res;
      }
  }
  return res;
}

bool verify_split(std::vector<Matrix> const &gens, SplitResult const &r)
{
  if (!r.decomposed())
    return false;
  std::size_t d = gens.empty() ? 0 : gens[0].rows();
  if (r.first.rows() == 0 || r.second.rows() == 0)
    return false;
  if (r.first.rows() + r.second.rows() != d)
    return false;
  Matrix both = r.first;
  both.append_rows(r.second);
  if (rank(both) != d)
    return false;
  for (auto const &g : gens)
    for (Matrix const *part : {&r.first, &r.second})
      for (std::size_t k = 0; k < part->rows(); ++k)
        if (!in_row_space(*part, g.apply(part->row(k))))
          return false;
  return true;
}

} // namespace spechtlab
