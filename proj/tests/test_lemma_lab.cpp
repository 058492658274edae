#include <doctest.h>

#include <numeric>

#include "diagcover/catalog.hpp"
#include "diagcover/errors.hpp"
#include "diagcover/lemma_lab.hpp"

using namespace diagcover;

namespace {

std::shared_ptr<AutAction const> aut_of(char const *spec)
{
  return std::make_shared<AutAction const>(automorphism_action(make(spec)));
}

// |C_T(phi)| by direct scan
std::uint64_t fixed_points(AutAction const &aut, Permutation const &phi)
{
  std::uint64_t n = 0;
  for (Elem x = 0; x < aut.base.order(); ++x)
    n += phi[x] == x;
  return n;
}

} // namespace

TEST_CASE("twist map is never bijective on a non-abelian simple group")
{
  for (char const *spec : {"A5", "PSL2:7"}) {
    CAPTURE(spec);
    auto aut = aut_of(spec);
    for (Elem i = 0; i < aut->carrier.order(); ++i) {
      auto const &phi = aut->carrier.element(i);
      auto r = twist_map_report(*aut, phi);
      CHECK(!r.is_bijective);
      CHECK(r.domain_size == aut->base.order());
      CHECK(r.fixed_point_count == fixed_points(*aut, phi));
      CHECK(r.fixed_point_count >= 2);
      // fibres are cosets of C_T(phi)
      CHECK(r.image_size * r.fixed_point_count == r.domain_size);
    }
  }
}

TEST_CASE("twist map on an abelian group can be bijective")
{
  auto aut = aut_of("C5");
  bool some_bijective = false;
  for (Elem i = 0; i < aut->carrier.order(); ++i)
    some_bijective |= twist_map_report(*aut, aut->carrier.element(i)).is_bijective;
  CHECK(some_bijective);
}

TEST_CASE("power twist")
{
  auto aut = aut_of("A5");
  for (Elem i = 0; i < aut->carrier.order(); ++i) {
    auto const &phi = aut->carrier.element(i);
    CHECK(power_twist_report(*aut, phi, 1).is_bijective);
    for (std::uint64_t a : {2u, 3u, 5u}) {
      auto r = power_twist_report(*aut, phi, a);
      CHECK(r.domain_size == 60);
      CHECK(r.image_size <= 60);
    }
  }
  // phi = identity: y -> y^a, which misses elements when gcd(a, exponent) > 1
  auto id = aut->carrier.element(0);
  CHECK(!power_twist_report(*aut, id, 2).is_bijective);
  CHECK(power_twist_report(*aut, id, 7).is_bijective);
}

TEST_CASE("fixed-cell probe equals the twist of phi^a")
{
  auto aut = aut_of("A5");
  for (Elem i = 0; i < aut->carrier.order(); i += 3) {
    auto const &phi = aut->carrier.element(i);
    auto r = fixed_cell_contradiction_probe(*aut, phi, 2);
    auto direct = twist_map_report(*aut, power(phi, 2));
    CHECK(r.image_size == direct.image_size);
    CHECK(r.fixed_point_count == direct.fixed_point_count);
  }
}

TEST_CASE("centralizer tower for PGammaL2(32)")
{
  auto r = centralizer_tower_check(32, 5);
  CHECK(r.group_order == 163680);
  CHECK(r.t_order == 32736);
  CHECK(r.t_order == psl2_order(32));
  CHECK(r.frobenius_order == 5);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].centralizer_order == 6);
  CHECK(r.steps[0].centralizer_of_power_order == 32736);
  CHECK(r.steps[0].strict);
  CHECK(r.holds);
}

TEST_CASE("centralizer tower hypotheses")
{
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(8) == 504);
  CHECK_THROWS_AS(centralizer_tower_check(8, 3), ValidationError);  // 3 divides 504
  CHECK_THROWS_AS(centralizer_tower_check(7, 7), ValidationError);  // f = 1
  CHECK_THROWS_AS(centralizer_tower_check(12, 2), ValidationError); // not a prime power
  CHECK_THROWS_AS(centralizer_tower_check(32, 4), ValidationError); // p not prime
  CHECK_THROWS_AS(centralizer_tower_check(32, 3), ValidationError); // p does not divide f
}

TEST_CASE("full cycles conjugate into a cyclic regular subgroup")
{
  for (auto [spec, n] : std::vector<std::pair<char const *, std::size_t>>{
           {"AGL1:5", 5}, {"AGL1:7", 7}, {"S4", 4}, {"S5", 5}, {"A5", 5}, {"S6", 6}, {"D7", 7}}) {
    CAPTURE(spec);
    auto L = make(spec);
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    auto C = subgroup(L, {Permutation::from_cycles(n, {cyc})});
    auto r = cyclic_regular_check(L, C);
    CHECK(r.failures.empty());
    CHECK(r.conjugated == r.full_cycles);
    std::uint64_t naive = 0;
    for (auto const &g : L.elements())
      naive += is_full_cycle(g);
    CHECK(r.full_cycles == naive);
  }
}

TEST_CASE("cyclic regular check rejects bad subgroups")
{
  auto L = make("S4");
  CHECK_THROWS_AS(cyclic_regular_check(L, subgroup(L, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                                       Permutation::from_cycles(4, {{0, 2}, {1, 3}})})),
                  ValidationError);
  CHECK_THROWS_AS(cyclic_regular_check(L, subgroup(L, {Permutation::from_cycles(4, {{0, 1, 2}})})),
                  ValidationError);
}

TEST_CASE("recursion replay")
{
  auto aut = aut_of("A5");
  for (Elem i = 0; i < aut->carrier.order(); i += 7)
    for (std::uint64_t a : {2u, 3u})
      for (Elem t = 0; t < 60; t += 13) {
        auto r = recursion_replay(aut, aut->carrier.element(i), a, t);
        CHECK(r.t_sequence.size() == a - 1);
        CHECK(r.t_sequence.back() == t);
        CHECK(r.t == r.t_closed_form);
        CHECK(r.coordinates.size() == a);
        CHECK(r.coordinates_equal);
        CHECK(r.lands_in_stabilizer);
      }
}

TEST_CASE("two-cycle replay")
{
  auto aut = aut_of("A5");
  for (Elem i = 0; i < aut->carrier.order(); i += 11)
    for (Elem ta = 0; ta < 60; ta += 17)
      for (Elem tl = 0; tl < 60; tl += 19) {
        auto r = two_cycle_replay(*aut, aut->carrier.element(i), 2, 3, ta, tl);
        CHECK(r.t_sequence.size() == 3);
        CHECK(r.coordinates.size() == 3);
        CHECK(r.forces_equal);
      }
}
