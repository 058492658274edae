// Small hand-checkable instances, one or two per operation.

#include <doctest.h>

#include <sstream>

#include "diagcover/catalog.hpp"
#include "diagcover/cover.hpp"
#include "diagcover/diagonal.hpp"
#include "diagcover/errors.hpp"
#include "diagcover/example_group.hpp"
#include "diagcover/lemma_lab.hpp"

using namespace diagcover;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

std::shared_ptr<AutAction const> a5_aut()
{
  static auto aut = std::make_shared<AutAction const>(automorphism_action(make("A5")));
  return aut;
}

} // namespace

TEST_CASE("permutations")
{
  CHECK(cyc(3, {{0, 1}}) * cyc(3, {{1, 2}}) == cyc(3, {{0, 2, 1}}));
  CHECK(order_of(cyc(5, {{0, 1, 2, 3, 4}})) == 5);
  CHECK(!is_full_cycle(cyc(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("closure and caps")
{
  PermGroup S3(3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})});
  S3.materialize();
  CHECK(S3.order() == 6);

  PermGroup A5(5, {cyc(5, {{0, 1, 2}}), cyc(5, {{0, 1, 2, 3, 4}})});
  try {
    A5.materialize(50);
    FAIL("expected cap error");
  } catch (CapExceeded const &e) {
    CHECK(std::string(e.what()).find("order exceeds cap") != std::string::npos);
  }
}

TEST_CASE("centralizers, conjugacy, Sylow")
{
  auto S3 = make("S3");
  auto C = centralizer(S3, cyc(3, {{0, 1, 2}}));
  CHECK(C.order == 3);
  CHECK(C.contains(S3, cyc(3, {{0, 1, 2}})));

  CHECK(is_conjugate(S3, cyc(3, {{0, 1}}), cyc(3, {{1, 2}})));
  auto A5 = make("A5");
  CHECK(!is_conjugate(A5, cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 2, 4, 1, 3}})));

  auto P3 = sylow(S3, 3);
  CHECK(P3.order == 3);
  CHECK(P3.contains(S3, cyc(3, {{0, 1, 2}})));
  auto S4 = make("S4");
  auto P2 = sylow(S4, 2);
  CHECK(P2.order == 8);
  CHECK(!is_abelian(as_group(S4, P2)));
}

TEST_CASE("lattice of V4 and maximal subgroups of S3")
{
  CHECK(all_subgroups(make("V4")).size() == 5);
  auto S3 = make("S3");
  auto maxes = maximal_subgroups(S3);
  REQUIRE(maxes.size() == 2);
  CHECK(maxes[0].contains(S3, cyc(3, {{0, 1, 2}})));
  CHECK(maxes[1].order == 2);
}

TEST_CASE("catalog")
{
  CHECK(make("A5").order() == 60);
  auto G = make("PGammaL2:32");
  CHECK(G.degree() == 33);
  CHECK(G.order() == 163680);
  auto aut = a5_aut();
  CHECK(aut->carrier.order() == 120);
  CHECK(aut->inner_image.order == 60);
}

TEST_CASE("covering certificates")
{
  auto S3 = make("S3");
  auto ok = verify_normal_covering(S3, {subgroup(S3, {cyc(3, {{0, 1, 2}})}), subgroup(S3, {cyc(3, {{0, 1}})})});
  REQUIRE(std::holds_alternative<CoverCertificate>(ok));
  CHECK(std::get<CoverCertificate>(ok).assignments.size() == 3);

  auto A5 = make("A5");
  auto A4 = subgroup(A5, {cyc(5, {{0, 1, 2}}), cyc(5, {{1, 2, 3}})});
  auto bad = verify_normal_covering(A5, {A4});
  REQUIRE(std::holds_alternative<CoverFailure>(bad));
  auto const &failure = std::get<CoverFailure>(bad);
  CHECK(failure.uncovered_representatives.size() == 2);
  for (auto const &r : failure.uncovered_representatives)
    CHECK(order_of(r) == 5);

  CHECK(gamma(S3).value == 2);
  CHECK(gamma(make("V4")).value == 3);
}

TEST_CASE("diagonal point actions")
{
  auto aut = a5_aut();
  auto const &T = aut->base;
  auto const &tab = aut->table;
  DiagonalSpace space(aut, 1);
  Elem x = T.require_index(cyc(5, {{0, 1, 2}}));
  auto s = cyc(5, {{0, 1}, {2, 3}});

  // phi = conjugation by s
  auto moved = space.act_phi({{x}}, aut->inner(T.require_index(s)));
  CHECK(T.element(moved.coords[0]) == conjugate(cyc(5, {{0, 1, 2}}), s));

  for (Elem a = 0; a < 60; a += 7)
    for (Elem b = 0; b < 60; b += 5) {
      std::vector<Elem> n{a, b};
      CHECK(space.act_base({{x}}, n).coords[0] == tab.mul(tab.mul(tab.inv(a), x), b));
    }
  CHECK(space.act_sigma({{x}}, cyc(2, {{0, 1}})).coords[0] == tab.inv(x));
  CHECK(is_diagonal_primitive(1, {space.identity()}));
}

TEST_CASE("example group solver")
{
  auto aut = a5_aut();
  auto U = subgroup(aut->carrier, aut->carrier.generators());
  ExampleGroup G(aut, U, 7);
  CHECK_NOTHROW(ExampleGroup(aut, aut->inner_image, 7));
  CHECK_THROWS_AS(ExampleGroup(aut, U, 5), ValidationError);

  for (Elem x = 1; x < 60; x += 6) {
    GElement g{std::vector<Elem>(7, aut->inner_of[0]), 1};
    g.coords[0] = aut->inner_of[x];
    auto assignment = G.conjugate_into_component(g);
    CHECK(assignment.tag == Component::K);
    CHECK(G.in_K(G.conjugate(g, assignment.conjugator)));

    g.k = 0;
    auto [commutes, in_k] = G.commutes_with_sigma_iff_in_K(g);
    CHECK(!commutes);
    CHECK(!in_k);
  }

  ExampleGroup inner(aut, aut->inner_image, 7);
  auto cert = inner.covering_certificate(1000, 0);
  CHECK(cert.samples.size() == 1000);
  for (auto const &s : cert.samples)
    CHECK(inner.conjugate(s.element, s.conjugator) == s.conjugated);
}

TEST_CASE("lemma oracles")
{
  auto aut = a5_aut();
  auto const &T = aut->base;
  for (Elem t = 0; t < 60; ++t) {
    auto r = twist_map_report(*aut, aut->inner(t));
    CHECK(r.fixed_point_count == centralizer(T, T.element(t)).order);
  }

  // an outer automorphism of order 2: its square is inner, and the probe is not bijective
  for (Elem i = 0; i < aut->carrier.order(); ++i) {
    auto const &phi = aut->carrier.element(i);
    if (aut->inner_image.contains(i) || order_of(phi) != 2)
      continue;
    CHECK(!fixed_cell_contradiction_probe(*aut, phi, 2).is_bijective);
    auto r = power_twist_report(*aut, phi, 7);
    CHECK(r.domain_size == 60);
    break;
  }

  CHECK_THROWS_AS(centralizer_tower_check(32, 3), ValidationError);

  auto S4 = make("S4");
  auto r4 = cyclic_regular_check(S4, subgroup(S4, {cyc(4, {{0, 1, 2, 3}})}));
  CHECK(r4.full_cycles == 6);
  CHECK(r4.conjugated == 6);
  auto A5 = make("A5");
  auto r5 = cyclic_regular_check(A5, subgroup(A5, {cyc(5, {{0, 1, 2, 3, 4}})}));
  CHECK(r5.full_cycles == 24);
  CHECK(r5.failures.empty());
  auto L = make("AGL1:7");
  auto r7 = cyclic_regular_check(L, sylow(L, 7));
  CHECK(r7.full_cycles == 6);
  CHECK(r7.failures.empty());

  auto const &id = aut->carrier.element(0);
  for (Elem t = 0; t < 60; ++t) {
    auto replay = recursion_replay(aut, id, 2, t);
    CHECK(replay.t == aut->table.pow(t, -2));
  }
}
