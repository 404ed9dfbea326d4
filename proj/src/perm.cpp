#include "spechtlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace spechtlab {

Perm::Perm(unsigned degree)
{
  if (degree > max_degree)
    throw std::invalid_argument("Perm: degree above 255");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), std::uint8_t(0));
}

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images))
{
  if (img_.size() > max_degree)
    throw std::invalid_argument("Perm: degree above 255");
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x])
      throw std::invalid_argument("Perm: images do not form a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(unsigned degree, std::vector<std::vector<unsigned>> const &cycles)
{
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (auto const &c : cycles) {
    for (auto pt : c) {
      if (pt < 1 || pt > degree)
        throw ParseError("point " + std::to_string(pt) + " outside 1.." + std::to_string(degree));
      if (used[pt - 1])
        throw ParseError("repeated point " + std::to_string(pt));
      used[pt - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      p.img_[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
  }
  return p;
}

Perm Perm::operator*(Perm const &o) const
{
  if (o.img_.size() != img_.size())
    throw std::invalid_argument("Perm: degree mismatch in product");
  std::vector<std::uint8_t> r(img_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = img_[o.img_[i]];
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::inverse() const
{
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Perm Perm::pow(long long e) const
{
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r(degree());
  while (k) {
    if (k & 1)
      r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Perm Perm::conjugate(Perm const &g) const
{
  if (g.img_.size() != img_.size())
    throw std::invalid_argument("Perm: degree mismatch in conjugation");
  // (s g s^-1)(s(x)) = s(g(x))
  Perm out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    out.img_[img_[x]] = img_[g.img_[x]];
  return out;
}

bool Perm::commutes_with(Perm const &o) const
{
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[o.img_[i]] != o.img_[img_[i]])
      return false;
  return true;
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::vector<unsigned> Perm::cycle_type() const
{
  std::vector<unsigned> t;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

unsigned Perm::order() const
{
  unsigned o = 1;
  for (auto len : cycle_type())
    o = std::lcm(o, len);
  return o;
}

int Perm::sign() const
{
  int s = 1;
  for (auto len : cycle_type())
    if (len % 2 == 0)
      s = -s;
  return s;
}

std::vector<std::vector<unsigned>> Perm::cycles() const
{
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i)
      continue;
    std::vector<unsigned> c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(static_cast<unsigned>(j + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Perm::hash() const
{
  std::size_t h = 1469598103934665603ull;
  for (auto x : img_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Perm parse_cycles(std::string_view text, std::optional<unsigned> degree)
{
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  if (s.empty())
    throw ParseError("empty permutation text");

  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  if (s == "()") {
    i = s.size();
  }
  while (i < s.size()) {
    if (s[i] != '(')
      throw ParseError("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<unsigned> c;
    for (;;) {
      std::size_t start = i;
      unsigned long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<unsigned long>(s[i] - '0');
        if (v > Perm::max_degree)
          throw ParseError("point above 255");
        ++i;
      }
      if (i == start)
        throw ParseError("expected a point at offset " + std::to_string(i));
      if (v == 0)
        throw ParseError("points are 1-based");
      c.push_back(static_cast<unsigned>(v));
      if (i >= s.size())
        throw ParseError("unterminated cycle");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ')') {
        ++i;
        break;
      }
      throw ParseError(std::string("unexpected character '") + s[i] + "'");
    }
    if (c.size() < 2)
      throw ParseError("a cycle needs at least two points");
    cycles.push_back(std::move(c));
  }

  unsigned maxpt = 0;
  for (auto const &c : cycles)
    for (auto x : c)
      maxpt = std::max(maxpt, x);
  unsigned n = degree.value_or(maxpt);
  if (maxpt > n)
    throw ParseError("point " + std::to_string(maxpt) + " exceeds degree " + std::to_string(n));
  return Perm::from_cycles(n, cycles);
}

std::string format_cycles(Perm const &p)
{
  auto cs = p.cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (auto const &c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<Perm> parse_perm_list(std::string_view text, unsigned degree)
{
  std::vector<Perm> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank)
      out.push_back(parse_cycles(piece, degree));
    start = end + 1;
  }
  return out;
}

} // namespace spechtlab
