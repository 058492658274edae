#include <doctest.h>

#include <random>

#include "diagcover/errors.hpp"
#include "diagcover/perm.hpp"
#include "oracles.hpp"

using namespace diagcover;

namespace {

Permutation from(oracle::Perm const &p) { return Permutation(p); }

} // namespace

TEST_CASE("composition applies the left factor first")
{
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  // 0 -p-> 1 -q-> 2
  CHECK((p * q)[0] == 2);
  CHECK((q * p)[0] == 1);
  CHECK(compose(p, q) == p * q);
}

TEST_CASE("conjugation is z^-1 g z")
{
  auto g = Permutation::from_cycles(4, {{0, 1, 2}});
  auto z = Permutation::from_cycles(4, {{2, 3}});
  auto c = conjugate(g, z);
  CHECK(c == Permutation::from_cycles(4, {{0, 1, 3}}));
}

TEST_CASE("constructor rejects non-bijections")
{
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}), ValidationError);
}

TEST_CASE("cycle decomposition and order")
{
  auto p = Permutation::from_cycles(7, {{4, 5}, {0, 2, 1}});
  auto cycles = cycle_decomposition(p);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<Point>{0, 2, 1});
  CHECK(cycles[1] == std::vector<Point>{4, 5});
  CHECK(order_of(p) == 6);
  CHECK(!is_full_cycle(p));
  CHECK(is_full_cycle(Permutation::from_cycles(5, {{3, 1, 4, 0, 2}})));
  CHECK(Permutation::identity(5).is_identity());
}

TEST_CASE("random permutations agree with the raw-vector oracle")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 12;
    auto a = oracle::random_perm(n, rng);
    auto b = oracle::random_perm(n, rng);
    auto c = oracle::random_perm(n, rng);
    auto pa = from(a), pb = from(b), pc = from(c);
    auto ab = pa * pb;
    CHECK(std::vector<Point>(ab.images().begin(), ab.images().end()) == oracle::mul(a, b));
    CHECK((pa * pb) * pc == pa * (pb * pc));
    CHECK(pa * inverse(pa) == Permutation::identity(n));
    CHECK(conjugate(pa, pb) == from(oracle::conj(a, b)));

    auto ord = order_of(pa);
    CHECK(power(pa, static_cast<std::int64_t>(ord)).is_identity());
    CHECK(power(pa, -1) == inverse(pa));
    CHECK(power(pa, 3) == pa * pa * pa);

    // cycles rebuild the permutation
    CHECK(Permutation::from_cycles(n, cycle_decomposition(pa)) == pa);
  }
}
