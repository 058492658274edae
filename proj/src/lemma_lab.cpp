#include "diagcover/lemma_lab.hpp"

#include <numeric>
#include <string>

#include "diagcover/diagonal.hpp"
#include "diagcover/errors.hpp"
#include "diagcover/field.hpp"

namespace diagcover {

namespace {

void require_automorphism(AutAction const &aut, Permutation const &phi)
{
  if (phi.degree() != aut.table.order() || !aut.carrier.contains(phi))
    throw ValidationError("phi is not an automorphism of T");
}

MapReport summarize(std::vector<Elem> const &values, std::size_t codomain)
{
  std::vector<bool> hit(codomain, false);
  MapReport report;
  report.domain_size = values.size();
  for (Elem v : values) {
    if (!hit[v]) {
      hit[v] = true;
      ++report.image_size;
    }
    if (v == 0)
      ++report.fixed_point_count;
  }
  report.is_bijective = report.image_size == report.domain_size;
  return report;
}

// (y phi)^a phi^-a as a T index, with y an inner automorphism.
Elem power_twist(AutAction const &aut, Permutation const &phi, Permutation const &phi_pow_inv,
                 Elem y, std::uint64_t a)
{
  Permutation step = compose(aut.inner(y), phi);
  Permutation value = compose(power(step, static_cast<std::int64_t>(a)), phi_pow_inv);
  auto t = aut.inner_preimage(aut.carrier.require_index(value));
  if (!t)
    throw ValidationError("(y phi)^a phi^-a left Inn(T)");
  return *t;
}

// x^(phi^-i)
Elem pull(Permutation const &phi_inv, Elem x, std::uint64_t i)
{
  for (std::uint64_t k = 0; k < i; ++k)
    x = phi_inv[x];
  return x;
}

} // namespace

MapReport twist_map_report(AutAction const &aut, Permutation const &phi)
{
  require_automorphism(aut, phi);
  auto const &T = aut.table;
  std::vector<Elem> values(T.order());
  for (Elem y = 0; y < T.order(); ++y)
    values[y] = T.mul(T.inv(y), phi[y]);
  return summarize(values, T.order());
}

MapReport power_twist_report(AutAction const &aut, Permutation const &phi, std::uint64_t a)
{
  require_automorphism(aut, phi);
  if (a < 1)
    throw ValidationError("a must be at least 1");
  Permutation const phi_pow_inv = power(phi, -static_cast<std::int64_t>(a));
  std::vector<Elem> values(aut.table.order());
  for (Elem y = 0; y < values.size(); ++y)
    values[y] = power_twist(aut, phi, phi_pow_inv, y, a);
  return summarize(values, values.size());
}

MapReport fixed_cell_contradiction_probe(AutAction const &aut, Permutation const &phi,
                                         std::uint64_t a)
{
  require_automorphism(aut, phi);
  return twist_map_report(aut, power(phi, static_cast<std::int64_t>(a)));
}

TowerStep tower_step(PermGroup const &G, SubgroupRecord const &T, Permutation const &phi,
                     std::uint64_t p)
{
  TowerStep step;
  step.phi_order = order_of(phi);
  Permutation const phi_p = power(phi, static_cast<std::int64_t>(p));
  for (auto i = T.members.find_first(); i != ElementSet::npos; i = T.members.find_next(i)) {
    Permutation const &t = G.element(i);
    if (compose(t, phi) == compose(phi, t))
      ++step.centralizer_order;
    if (compose(t, phi_p) == compose(phi_p, t))
      ++step.centralizer_of_power_order;
  }
  step.strict = step.centralizer_order < step.centralizer_of_power_order;
  return step;
}

std::uint64_t psl2_order(std::uint64_t q)
{ return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1); }

TowerReport centralizer_tower_check(std::uint64_t q, std::uint64_t p, std::size_t cap)
{
  auto pp = factor_prime_power(q);
  if (pp.prime == 0)
    throw ValidationError(std::to_string(q) + " is not a prime power");
  if (!is_prime(p))
    throw ValidationError(std::to_string(p) + " is not prime");
  if (pp.exponent == 1)
    throw ValidationError("f = 1: no nontrivial field automorphism");
  if (psl2_order(q) % p == 0)
    throw ValidationError("hypothesis fails: p divides |T| = " + std::to_string(psl2_order(q)));
  if (pp.exponent % p != 0)
    throw ValidationError("p does not divide f: the Frobenius has no p-power-order part");

  TowerReport report;
  report.q = q;
  report.p = p;
  report.f = pp.exponent;
  report.t_order = psl2_order(q);
  auto fa = field_automorphism(q, cap);
  report.group_order = fa.group.order();
  report.frobenius_order = order_of(fa.phi);

  std::uint64_t p_part = 1;
  while (pp.exponent % (p_part * p) == 0)
    p_part *= p;
  Permutation psi = power(fa.phi, static_cast<std::int64_t>(pp.exponent / p_part));
  for (std::uint64_t e = p_part; e > 1; e /= p) {
    report.steps.push_back(tower_step(fa.group, fa.t_subgroup, psi, p));
    psi = power(psi, static_cast<std::int64_t>(p));
  }
  report.holds = !report.steps.empty();
  for (auto const &s : report.steps)
    report.holds = report.holds && s.strict;
  return report;
}

CyclicRegularReport cyclic_regular_check(PermGroup const &L, SubgroupRecord const &C)
{
  std::size_t const n = L.degree();
  bool cyclic = false;
  for (auto i = C.members.find_first(); i != ElementSet::npos && !cyclic; i = C.members.find_next(i))
    cyclic = order_of(L.element(i)) == C.order;
  if (!cyclic)
    throw ValidationError("C is not cyclic");
  if (C.order != n || orbits(n, C.generators).size() != 1)
    throw ValidationError("C is not regular");

  CyclicRegularReport report;
  report.degree = n;
  auto table = conjugacy_classes(L);
  for (auto const &cls : table.classes) {
    if (!is_full_cycle(cls.representative))
      continue;
    report.full_cycles += cls.size();
    auto orbit = conjugation_orbit(L, cls.representative);
    std::optional<Permutation> into;
    for (std::size_t i = 0; i < orbit.members.size() && !into; ++i)
      if (C.contains(orbit.members[i]))
        into = orbit.conjugators[i];
    report.classes.push_back({cls.representative, cls.size(), into.has_value()});
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      Permutation const &x = L.element(orbit.members[i]);
      if (into && C.contains(L, conjugate(x, compose(inverse(orbit.conjugators[i]), *into))))
        ++report.conjugated;
      else
        report.failures.push_back(x);
    }
  }
  return report;
}

RecursionReplay recursion_replay(std::shared_ptr<AutAction const> aut, Permutation const &phi,
                                 std::uint64_t a, Elem t_last)
{
  require_automorphism(*aut, phi);
  if (a < 2)
    throw ValidationError("cycle length a must be at least 2");
  auto const &T = aut->table;
  if (t_last >= T.order())
    throw ValidationError("t_last is not an element of T");
  Permutation const phi_inv = inverse(phi);

  RecursionReplay out;
  out.t_sequence.assign(a - 1, T.identity());
  out.t_sequence[a - 2] = t_last;
  for (std::uint64_t i = 1; i + 1 < a; ++i) {
    Elem value = T.identity();
    for (std::uint64_t k = i + 1; k-- > 0;)
      value = T.mul(value, pull(phi_inv, t_last, k));
    out.t_sequence[a - 2 - i] = value;
  }
  Elem const last_inv = T.inv(t_last);
  out.t = T.identity();
  for (std::uint64_t k = 0; k < a; ++k)
    out.t = T.mul(out.t, pull(phi_inv, last_inv, k));
  out.t_closed_form = power_twist(*aut, phi, power(phi, -static_cast<std::int64_t>(a)), last_inv, a);

  auto t_at = [&](std::uint64_t i) { return out.t_sequence[i - 1]; };
  out.coordinates.push_back(T.mul(out.t, phi_inv[t_at(1)]));
  for (std::uint64_t i = 1; i + 1 < a; ++i)
    out.coordinates.push_back(T.mul(T.inv(t_at(i)), phi_inv[t_at(i + 1)]));
  out.coordinates.push_back(T.inv(t_at(a - 1)));
  out.coordinates_equal = true;
  for (Elem c : out.coordinates)
    out.coordinates_equal = out.coordinates_equal && c == out.coordinates.front();

  DiagonalSpace space(aut, static_cast<unsigned>(a - 1));
  std::vector<Point> cycle(a);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  std::vector<Elem> base(a, T.identity());
  base[0] = out.t;
  WElement w = space.canonical(base, phi, Permutation::from_cycles(a, {cycle}));
  std::vector<Elem> shift{T.identity()};
  shift.insert(shift.end(), out.t_sequence.begin(), out.t_sequence.end());
  WElement conj = space.conjugate(w, space.from_base(shift));
  out.lands_in_stabilizer = space.act_w(space.base_point(), conj) == space.base_point();
  return out;
}

TwoCycleReplay two_cycle_replay(AutAction const &aut, Permutation const &phi, std::uint64_t a,
                                std::uint64_t b, Elem t_a, Elem t_last)
{
  require_automorphism(aut, phi);
  if (a < 2 || b < 2)
    throw ValidationError("cycle lengths must be at least 2");
  auto const &T = aut.table;
  Permutation const phi_inv = inverse(phi);
  Elem const x = T.mul(t_last, T.inv(t_a));

  TwoCycleReplay out;
  // t_sequence[r] = t_{a+r}
  out.t_sequence.assign(b, T.identity());
  out.t_sequence[0] = t_a;
  out.t_sequence[b - 1] = t_last;
  for (std::uint64_t i = 1; i + 1 < b; ++i) {
    Elem value = T.identity();
    for (std::uint64_t k = i + 1; k-- > 0;)
      value = T.mul(value, pull(phi_inv, x, k));
    out.t_sequence[b - 1 - i] = T.mul(value, t_a);
  }
  for (std::uint64_t r = 0; r < b; ++r)
    out.coordinates.push_back(
        T.mul(T.inv(out.t_sequence[r]), phi_inv[out.t_sequence[(r + 1) % b]]));
  out.coordinates_equal = true;
  for (Elem c : out.coordinates)
    out.coordinates_equal = out.coordinates_equal && c == out.coordinates.front();

  out.closure = power_twist(aut, phi, power(phi, -static_cast<std::int64_t>(b)),
                            T.mul(t_a, T.inv(t_last)), b);
  out.premise = power_twist_report(aut, phi, b).is_bijective;
  out.forces_equal = !(out.premise && out.coordinates_equal) || t_last == t_a;
  return out;
}

} // namespace diagcover
