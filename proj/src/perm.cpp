#include "diagcover/perm.hpp"

#include <numeric>
#include <string>

#include "diagcover/errors.hpp"

namespace diagcover {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw ValidationError("image sequence is not a bijection of {0,...," +
                            std::to_string(images_.size()) + "-1}");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree)
{
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree)
        throw ValidationError("point " + std::to_string(x) + " out of range for degree " +
                              std::to_string(degree));
      if (used[x])
        throw ValidationError("point " + std::to_string(x) + " repeated");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw ValidationError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < images.size(); ++x)
    images[x] = q[p[x]];
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation inverse(Permutation const &p)
{
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < images.size(); ++x)
    images[p[x]] = x;
  return Permutation(Permutation::Trusted{}, std::move(images));
}

Permutation power(Permutation const &p, std::int64_t exponent)
{
  Permutation base = exponent < 0 ? inverse(p) : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

Permutation conjugate(Permutation const &g, Permutation const &z)
{ return compose(compose(inverse(z), g), z); }

std::uint64_t order_of(Permutation const &p)
{
  std::uint64_t order = 1;
  for (auto const &cycle : cycle_decomposition(p))
    order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  return order;
}

std::vector<std::vector<Point>> cycle_decomposition(Permutation const &p)
{
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (Point x = 0; x < p.degree(); ++x) {
    if (seen[x] || p[x] == x)
      continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_full_cycle(Permutation const &p)
{
  if (p.degree() == 0)
    return false;
  if (p.degree() == 1)
    return true;
  auto cycles = cycle_decomposition(p);
  return cycles.size() == 1 && cycles.front().size() == p.degree();
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace diagcover
