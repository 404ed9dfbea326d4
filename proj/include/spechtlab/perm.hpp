#ifndef SPECHTLAB_PERM_HPP
#define SPECHTLAB_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spechtlab {

struct ParseError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

// Permutation of {1..n}. Stored 0-based; all text I/O is 1-based.
// Composition is right to left: (a * b)(x) = a(b(x)).
class Perm
{
public:
  static constexpr unsigned max_degree = 255;

  Perm() = default;
  explicit Perm(unsigned degree);                 // identity
  explicit Perm(std::vector<std::uint8_t> images); // 0-based images

  // From 1-based cycles, e.g. {{1,2,3},{4,5}}.
  static Perm from_cycles(unsigned degree, std::vector<std::vector<unsigned>> const &cycles);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  // 0-based image of a 0-based point.
  unsigned operator()(unsigned x) const { return img_[x]; }
  // 1-based image of a 1-based point.
  unsigned image(unsigned point) const { return img_.at(point - 1) + 1u; }
  std::vector<std::uint8_t> const &images() const { return img_; }

  Perm operator*(Perm const &o) const;
  Perm inverse() const;
  Perm pow(long long e) const;
  // this * g * this^-1
  Perm conjugate(Perm const &g) const;
  bool commutes_with(Perm const &o) const;

  bool is_identity() const;
  unsigned order() const;
  int sign() const;
  bool is_even() const { return sign() == 1; }
  // Cycle lengths, descending, including fixed points.
  std::vector<unsigned> cycle_type() const;
  // 1-based cycles of length >= 2, each starting at its smallest point,
  // ordered by smallest point.
  std::vector<std::vector<unsigned>> cycles() const;

  bool operator==(Perm const &o) const { return img_ == o.img_; }
  bool operator!=(Perm const &o) const { return img_ != o.img_; }
  bool operator<(Perm const &o) const { return img_ < o.img_; }

  std::size_t hash() const;

private:
  std::vector<std::uint8_t> img_;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const { return p.hash(); }
};

// perm := "()" | cycle+ ; cycle := "(" int ("," int)+ ")"; whitespace
// ignored. Degree defaults to the largest point mentioned.
Perm parse_cycles(std::string_view text, std::optional<unsigned> degree = std::nullopt);
std::string format_cycles(Perm const &p);

// "a;b;c" list of cycle-notation permutations, all of the given degree.
std::vector<Perm> parse_perm_list(std::string_view text, unsigned degree);

} // namespace spechtlab

#endif
