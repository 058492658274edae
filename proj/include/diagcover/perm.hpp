#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace diagcover {

using Point = std::uint32_t;

// A bijection of {0, ..., n-1}. Permutations act on the right of points, so
// compose(p, q) sends x to q(p(x)).
class Permutation {
public:
  Permutation() = default;

  // Throws ValidationError unless `images` is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  // Builds a permutation from disjoint cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Trusted {};
  Permutation(Trusted, std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);

  std::vector<Point> images_;
};

Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);
Permutation power(Permutation const &p, std::int64_t exponent);

// g^z = z^-1 g z
Permutation conjugate(Permutation const &g, Permutation const &z);

inline Permutation operator*(Permutation const &p, Permutation const &q)
{ return compose(p, q); }

std::uint64_t order_of(Permutation const &p);

// Nontrivial cycles, each starting at its least point, sorted by that point.
std::vector<std::vector<Point>> cycle_decomposition(Permutation const &p);

bool is_full_cycle(Permutation const &p);

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace diagcover

template <>
struct std::hash<diagcover::Permutation> : diagcover::PermutationHash {};
