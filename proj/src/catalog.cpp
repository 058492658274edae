#include "diagcover/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "diagcover/errors.hpp"
#include "diagcover/field.hpp"

namespace diagcover {

namespace {

std::uint64_t parse_number(std::string_view text, std::string_view whole)
{
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ValidationError("malformed group specifier '" + std::string(whole) + "'");
  return value;
}

Permutation cycle_on(std::size_t degree, Point first, Point last)
{
  std::vector<Point> cycle;
  for (Point x = first; x <= last; ++x)
    cycle.push_back(x);
  return Permutation::from_cycles(degree, {cycle});
}

std::vector<Permutation> symmetric_generators(std::size_t n)
{
  if (n < 2)
    return {};
  if (n == 2)
    return {Permutation::from_cycles(2, {{0, 1}})};
  return {Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, 0, static_cast<Point>(n - 1))};
}

std::vector<Permutation> alternating_generators(std::size_t n)
{
  if (n < 3)
    return {};
  if (n == 3)
    return {cycle_on(3, 0, 2)};
  Permutation big = n % 2 == 1 ? cycle_on(n, 0, static_cast<Point>(n - 1))
                               : cycle_on(n, 1, static_cast<Point>(n - 1));
  return {cycle_on(n, 0, 2), big};
}

// x -> (a x^(r^frob) + b) / (c x^(r^frob) + d) on the projective line.
Permutation mobius(FiniteField const &F, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                   std::uint32_t d, std::uint32_t frob = 0)
{
  std::uint32_t const q = F.size();
  std::uint32_t const inf = q;
  std::vector<Point> images(q + 1);
  for (std::uint32_t x = 0; x <= q; ++x) {
    std::uint32_t y = x;
    if (y != inf)
      for (std::uint32_t i = 0; i < frob; ++i)
        y = F.frobenius(y);
    if (y == inf) {
      images[x] = c == 0 ? inf : F.mul(a, F.inv(c));
      continue;
    }
    std::uint32_t num = F.add(F.mul(a, y), b);
    std::uint32_t den = F.add(F.mul(c, y), d);
    images[x] = den == 0 ? inf : F.mul(num, F.inv(den));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> projective_generators(Family family, std::uint64_t q)
{
  auto pp = factor_prime_power(q);
  if (pp.prime == 0 || q < 4)
    throw ValidationError("projective groups need a prime power q >= 4, got " + std::to_string(q));
  FiniteField F(pp.prime, pp.exponent);
  std::uint32_t const w = F.primitive_element();
  std::uint32_t const minus_one = F.neg(1);
  std::vector<Permutation> gens{mobius(F, 1, 1, 0, 1)};
  if (family == Family::psl2) {
    gens.push_back(mobius(F, F.mul(w, w), 0, 0, 1));
    gens.push_back(mobius(F, 0, minus_one, 1, 0));
  } else {
    gens.push_back(mobius(F, w, 0, 0, 1));
    gens.push_back(mobius(F, 0, 1, 1, 0));
  }
  if (family == Family::pgammal2 && pp.exponent > 1)
    gens.push_back(mobius(F, 1, 0, 0, 1, 1));
  return gens;
}

PermGroup make_unmaterialized(GroupSpecifier const &spec)
{
  auto param = [&](std::size_t i) -> std::uint64_t {
    if (i >= spec.parameters.size())
      throw ValidationError("missing parameter in " + to_string(spec));
    return spec.parameters[i];
  };
  switch (spec.family) {
    case Family::symmetric: {
      auto n = param(0);
      if (n < 1)
        throw ValidationError("symmetric group needs n >= 1");
      return PermGroup(n, symmetric_generators(n));
    }
    case Family::alternating: {
      auto n = param(0);
      if (n < 1)
        throw ValidationError("alternating group needs n >= 1");
      return PermGroup(n, alternating_generators(n));
    }
    case Family::cyclic: {
      auto n = param(0);
      if (n < 1)
        throw ValidationError("cyclic group needs n >= 1");
      if (n == 1)
        return PermGroup(1, {});
      return PermGroup(n, {cycle_on(n, 0, static_cast<Point>(n - 1))});
    }
    case Family::dihedral: {
      auto n = param(0);
      if (n < 3)
        throw ValidationError("dihedral group needs n >= 3 points");
      std::vector<std::vector<Point>> reflection;
      for (Point i = 1; i < n - i; ++i)
        reflection.push_back({i, static_cast<Point>(n - i)});
      return PermGroup(n, {cycle_on(n, 0, static_cast<Point>(n - 1)),
                           Permutation::from_cycles(n, reflection)});
    }
    case Family::agl1: {
      auto p = param(0);
      if (!is_prime(p))
        throw ValidationError("AGL1 needs a prime, got " + std::to_string(p));
      FiniteField F(static_cast<std::uint32_t>(p), 1);
      std::vector<Permutation> gens;
      std::vector<Point> shift(p), scale(p);
      for (std::uint32_t x = 0; x < p; ++x) {
        shift[x] = F.add(x, 1);
        scale[x] = F.mul(x, F.primitive_element());
      }
      gens.emplace_back(std::move(shift));
      if (p > 2)
        gens.emplace_back(std::move(scale));
      return PermGroup(p, std::move(gens));
    }
    case Family::psl2:
    case Family::pgl2:
    case Family::pgammal2: {
      auto q = param(0);
      return PermGroup(q + 1, projective_generators(spec.family, q));
    }
    case Family::direct_product: {
      if (spec.factors.empty())
        throw ValidationError("direct product needs factors");
      std::vector<PermGroup> parts;
      std::size_t degree = 0;
      for (auto const &f : spec.factors) {
        parts.push_back(make_unmaterialized(f));
        degree += parts.back().degree();
      }
      std::vector<Permutation> gens;
      std::size_t offset = 0;
      for (auto const &part : parts) {
        for (auto const &g : part.generators()) {
          std::vector<Point> images(degree);
          std::iota(images.begin(), images.end(), Point{0});
          for (Point x = 0; x < part.degree(); ++x)
            images[offset + x] = static_cast<Point>(offset + g[x]);
          gens.emplace_back(std::move(images));
        }
        offset += part.degree();
      }
      return PermGroup(degree, std::move(gens));
    }
  }
  throw ValidationError("unknown group family");
}

} // namespace

GroupSpecifier parse_specifier(std::string_view text)
{
  if (text.find('x') != std::string_view::npos) {
    GroupSpecifier spec{Family::direct_product, {}, {}};
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find('x', start);
      if (end == std::string_view::npos)
        end = text.size();
      spec.factors.push_back(parse_specifier(text.substr(start, end - start)));
      start = end + 1;
    }
    return spec;
  }
  if (text == "V4")
    return {Family::direct_product, {}, {{Family::cyclic, {2}, {}}, {Family::cyclic, {2}, {}}}};
  struct Prefix {
    std::string_view name;
    Family family;
  };
  static constexpr Prefix prefixes[] = {
      {"PGammaL2:", Family::pgammal2}, {"PSL2:", Family::psl2}, {"PGL2:", Family::pgl2},
      {"AGL1:", Family::agl1},         {"S", Family::symmetric}, {"A", Family::alternating},
      {"C", Family::cyclic},           {"D", Family::dihedral},
  };
  for (auto const &[name, family] : prefixes)
    if (text.substr(0, name.size()) == name)
      return {family, {parse_number(text.substr(name.size()), text)}, {}};
  throw ValidationError("unknown group specifier '" + std::string(text) + "'");
}

std::string to_string(GroupSpecifier const &spec)
{
  auto p = [&] { return spec.parameters.empty() ? std::string("?") : std::to_string(spec.parameters[0]); };
  switch (spec.family) {
    case Family::symmetric: return "S" + p();
    case Family::alternating: return "A" + p();
    case Family::cyclic: return "C" + p();
    case Family::dihedral: return "D" + p();
    case Family::agl1: return "AGL1:" + p();
    case Family::psl2: return "PSL2:" + p();
    case Family::pgl2: return "PGL2:" + p();
    case Family::pgammal2: return "PGammaL2:" + p();
    case Family::direct_product: {
      std::string out;
      for (auto const &f : spec.factors)
        out += (out.empty() ? "" : "x") + to_string(f);
      return out;
    }
  }
  return "?";
}

PermGroup make(GroupSpecifier const &spec, std::size_t cap)
{
  PermGroup G = make_unmaterialized(spec);
  G.materialize(cap);
  return G;
}

PermGroup make(std::string_view specifier, std::size_t cap)
{ return make(parse_specifier(specifier), cap); }

std::optional<Elem> AutAction::inner_preimage(Elem carrier_index) const
{
  if (carrier_index >= preimage_.size() || preimage_[carrier_index] < 0)
    return std::nullopt;
  return static_cast<Elem>(preimage_[carrier_index]);
}

namespace {

// Images of a generating tuple extend to an automorphism iff the assignment
// along the Cayley graph is consistent and bijective.
std::optional<std::vector<Point>> extend_to_automorphism(GroupTable const &table,
                                                         std::vector<Elem> const &gens,
                                                         std::vector<Elem> const &images)
{
  std::size_t const n = table.order();
  constexpr Point unset = std::numeric_limits<Point>::max();
  std::vector<Point> phi(n, unset);
  std::vector<bool> used(n, false);
  phi[0] = 0;
  used[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Elem y = table.mul(x, gens[k]);
      Elem img = table.mul(phi[x], images[k]);
      if (phi[y] == unset) {
        if (used[img])
          return std::nullopt;
        phi[y] = img;
        used[img] = true;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != n)
    return std::nullopt;
  return phi;
}

std::size_t closure_size(GroupTable const &table, std::vector<Elem> const &gens)
{
  std::vector<bool> seen(table.order(), false);
  std::vector<Elem> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem s : gens) {
      Elem y = table.mul(queue[i], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  return queue.size();
}

} // namespace

AutAction automorphism_action(PermGroup const &T, std::size_t cap)
{
  if (!T.is_materialized())
    throw ValidationError("automorphism_action needs a materialized group");
  if (T.order() <= 1)
    throw ValidationError("automorphism_action needs a nontrivial group");
  if (T.order() > cap)
    throw CapExceeded("group order " + std::to_string(T.order()) +
                      " exceeds automorphism-search cap " + std::to_string(cap));

  AutAction aut;
  aut.base = T;
  aut.table = GroupTable(T, cap);
  GroupTable const &table = aut.table;
  std::size_t const n = table.order();

  auto classes = conjugacy_classes(T);
  auto compatible = [&](Elem x) {
    auto const &cls = classes.classes[classes.class_index[x]];
    std::vector<Elem> out;
    for (auto const &other : classes.classes)
      if (other.element_order == cls.element_order && other.size() == cls.size())
        out.insert(out.end(), other.members.begin(), other.members.end());
    return out;
  };

  // Prefer a generating pair with the fewest class-compatible image candidates.
  std::vector<Elem> gens;
  std::size_t best_cost = std::numeric_limits<std::size_t>::max();
  for (auto const &cls : classes.classes) {
    Elem a = cls.members.front();
    std::size_t ca = compatible(a).size();
    for (Elem b = 1; b < n; ++b) {
      std::size_t cost = ca * compatible(b).size();
      if (cost >= best_cost || closure_size(table, {a, b}) != n)
        continue;
      best_cost = cost;
      gens = {a, b};
    }
  }
  if (gens.empty()) {
    for (auto const &g : T.generators()) {
      Elem idx = T.require_index(g);
      auto size_before = closure_size(table, gens);
      gens.push_back(idx);
      if (closure_size(table, gens) == size_before)
        gens.pop_back();
    }
  }

  std::vector<std::vector<Elem>> candidates;
  for (Elem g : gens)
    candidates.push_back(compatible(g));

  std::vector<Permutation> automorphisms;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k)
      images[k] = candidates[k][choice[k]];
    if (auto phi = extend_to_automorphism(table, gens, images))
      automorphisms.emplace_back(std::move(*phi));
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size())
      choice[k++] = 0;
    if (k == gens.size())
      break;
  }

  std::vector<Permutation> carrier_gens;
  {
    PermGroup partial(n, {});
    partial.materialize(1);
    for (auto const &phi : automorphisms) {
      if (partial.contains(phi))
        continue;
      carrier_gens.push_back(phi);
      partial = PermGroup(n, carrier_gens);
      partial.materialize(automorphisms.size());
    }
  }
  aut.carrier = PermGroup(n, carrier_gens);
  aut.carrier.materialize(automorphisms.size());
  if (aut.carrier.order() != automorphisms.size())
    throw VerificationFailure("automorphisms do not form a group");

  aut.inner_of.resize(n);
  aut.preimage_.assign(automorphisms.size(), -1);
  std::vector<Permutation> inner_gens;
  for (Elem t = 0; t < n; ++t) {
    std::vector<Point> conj(n);
    for (Elem x = 0; x < n; ++x)
      conj[x] = table.conj(x, t);
    Elem idx = aut.carrier.require_index(Permutation(std::move(conj)));
    aut.inner_of[t] = idx;
    aut.preimage_[idx] = t;
  }
  for (auto const &g : T.generators())
    inner_gens.push_back(aut.carrier.element(aut.inner_of[T.require_index(g)]));
  aut.inner_image = subgroup(aut.carrier, inner_gens);
  return aut;
}

FieldAutomorphism field_automorphism(std::uint64_t q, std::size_t cap)
{
  auto pp = factor_prime_power(q);
  if (pp.prime == 0)
    throw ValidationError(std::to_string(q) + " is not a prime power");
  if (pp.exponent == 1)
    throw ValidationError("q = " + std::to_string(q) + " is prime: no nontrivial field automorphism");
  FieldAutomorphism out;
  out.degree_f = pp.exponent;
  out.group = make(GroupSpecifier{Family::pgammal2, {q}, {}}, cap);
  out.phi = out.group.generators().back();
  out.t_subgroup = subgroup(out.group, projective_generators(Family::psl2, q));
  return out;
}

} // namespace diagcover
