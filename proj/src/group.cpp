#include "diagcover/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "diagcover/errors.hpp"

namespace diagcover {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
: degree_(degree), generators_(std::move(generators))
{
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw ValidationError("generator of degree " + std::to_string(g.degree()) +
                            " in group of degree " + std::to_string(degree_));
}

void PermGroup::materialize(std::size_t cap)
{
  if (is_materialized())
    return;
  if (cap < 1)
    throw ValidationError("materialization cap must be at least 1");

  std::vector<Permutation> elements{Permutation::identity(degree_)};
  std::unordered_map<Permutation, Elem> index{{elements.front(), 0}};
  std::vector<Elem> right_mul;
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> parent_gen{0};
  std::size_t const ngens = generators_.size();

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t i = 0; i < ngens; ++i) {
      Permutation y = compose(elements[x], generators_[i]);
      auto it = index.find(y);
      if (it == index.end()) {
        if (elements.size() >= cap)
          throw CapExceeded("order exceeds cap " + std::to_string(cap));
        Elem id = static_cast<Elem>(elements.size());
        it = index.emplace(y, id).first;
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(x));
        parent_gen.push_back(static_cast<std::uint32_t>(i));
      }
      right_mul.push_back(it->second);
    }
  }

  elements_ = std::move(elements);
  index_ = std::move(index);
  right_mul_ = std::move(right_mul);
  parent_ = std::move(parent);
  parent_gen_ = std::move(parent_gen);
}

void PermGroup::require_materialized() const
{
  if (!is_materialized())
    throw ValidationError("group is not materialized");
}

std::vector<Permutation> const &PermGroup::elements() const
{
  require_materialized();
  return elements_;
}

std::uint64_t PermGroup::order() const
{
  require_materialized();
  return elements_.size();
}

std::optional<Elem> PermGroup::index_of(Permutation const &g) const
{
  require_materialized();
  auto it = index_.find(g);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Elem PermGroup::require_index(Permutation const &g) const
{
  auto idx = index_of(g);
  if (!idx)
    throw ValidationError("element is not in the group");
  return *idx;
}

PermGroup materialized(PermGroup group, std::size_t cap)
{
  group.materialize(cap);
  return group;
}

GroupTable::GroupTable(PermGroup const &group, std::size_t max_order)
: order_(group.order())
{
  if (order_ > max_order)
    throw CapExceeded("group order " + std::to_string(order_) +
                      " exceeds multiplication table cap " + std::to_string(max_order));
  mul_.resize(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    Elem *row = mul_.data() + a * order_;
    row[0] = static_cast<Elem>(a);
    for (Elem b = 1; b < order_; ++b)
      row[b] = group.right_multiply(row[group.parent(b)], group.parent_generator(b));
  }
  inv_.resize(order_);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
}

Elem GroupTable::pow(Elem a, std::int64_t exponent) const
{
  Elem base = exponent < 0 ? inv(a) : a;
  auto e = static_cast<std::uint64_t>(exponent < 0 ? -exponent : exponent);
  Elem result = identity();
  while (e > 0) {
    if (e & 1u)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

std::uint64_t GroupTable::element_order(Elem a) const
{
  std::uint64_t n = 1;
  for (Elem x = a; x != identity(); x = mul(x, a))
    ++n;
  return n;
}

namespace {

ElementSet close_generators(PermGroup const &G, std::vector<Elem> const &gens)
{
  ElementSet seen(G.order());
  std::vector<Elem> queue{0};
  seen.set(0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Permutation const &x = G.element(queue[i]);
    for (Elem s : gens) {
      Elem y = G.require_index(compose(x, G.element(s)));
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<Elem> set_bits(ElementSet const &s)
{
  std::vector<Elem> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

SubgroupRecord make_record(PermGroup const &G, std::vector<Elem> const &gens, ElementSet members)
{
  SubgroupRecord rec;
  for (Elem g : gens)
    rec.generators.push_back(G.element(g));
  rec.order = members.count();
  rec.members = std::move(members);
  rec.is_normal = is_normal(G, rec);
  return rec;
}

} // namespace

bool SubgroupRecord::contains(PermGroup const &parent, Permutation const &g) const
{
  auto idx = parent.index_of(g);
  return idx && contains(*idx);
}

SubgroupRecord subgroup(PermGroup const &G, std::vector<Permutation> const &generators)
{
  std::vector<Elem> gens;
  for (auto const &g : generators) {
    auto idx = G.index_of(g);
    if (!idx)
      throw ValidationError("subgroup generator is not in the group");
    gens.push_back(*idx);
  }
  SubgroupRecord rec = make_record(G, gens, close_generators(G, gens));
  rec.generators = generators;
  return rec;
}

SubgroupRecord subgroup_from_members(PermGroup const &G, ElementSet const &members)
{
  std::vector<Elem> gens;
  ElementSet current(G.order());
  current.set(0);
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    if (current.test(i))
      continue;
    gens.push_back(static_cast<Elem>(i));
    current = close_generators(G, gens);
  }
  if (current != members)
    throw ValidationError("member set is not a subgroup");
  return make_record(G, gens, current);
}

bool is_normal(PermGroup const &G, SubgroupRecord const &S)
{
  for (auto const &h : S.generators)
    for (auto const &s : G.generators())
      if (!S.contains(G, conjugate(h, s)))
        return false;
  return true;
}

std::vector<Permutation> member_list(PermGroup const &G, SubgroupRecord const &S)
{
  std::vector<Permutation> out;
  for (auto i = S.members.find_first(); i != ElementSet::npos; i = S.members.find_next(i))
    out.push_back(G.element(i));
  return out;
}

PermGroup as_group(PermGroup const &G, SubgroupRecord const &S)
{
  PermGroup H(G.degree(), S.generators);
  H.materialize(std::max<std::size_t>(S.order, 1));
  return H;
}

std::size_t ConjugacyClassTable::class_of(PermGroup const &G, Permutation const &g) const
{ return class_index.at(G.require_index(g)); }

ConjugacyClassTable conjugacy_classes(PermGroup const &G)
{
  std::size_t const n = G.order();
  std::vector<Permutation> gen_inverses;
  for (auto const &s : G.generators())
    gen_inverses.push_back(inverse(s));

  std::vector<std::size_t> raw_class(n, static_cast<std::size_t>(-1));
  std::vector<ConjugacyClass> classes;
  for (Elem start = 0; start < n; ++start) {
    if (raw_class[start] != static_cast<std::size_t>(-1))
      continue;
    std::size_t const id = classes.size();
    ConjugacyClass cls;
    cls.members.push_back(start);
    raw_class[start] = id;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      Permutation const &m = G.element(cls.members[i]);
      for (std::size_t k = 0; k < gen_inverses.size(); ++k) {
        Elem c = G.require_index(compose(compose(gen_inverses[k], m), G.generators()[k]));
        if (raw_class[c] == static_cast<std::size_t>(-1)) {
          raw_class[c] = id;
          cls.members.push_back(c);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = G.element(cls.members.front());
    for (Elem m : cls.members)
      cls.representative = std::min(cls.representative, G.element(m));
    cls.element_order = order_of(cls.representative);
    classes.push_back(std::move(cls));
  }

  std::vector<std::size_t> perm(classes.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].element_order != classes[b].element_order)
      return classes[a].element_order < classes[b].element_order;
    return classes[a].representative < classes[b].representative;
  });
  std::vector<std::size_t> rank(classes.size());
  ConjugacyClassTable table;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rank[perm[i]] = i;
    table.classes.push_back(std::move(classes[perm[i]]));
  }
  table.class_index.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    table.class_index[x] = rank[raw_class[x]];
  return table;
}

ConjugationOrbit conjugation_orbit(PermGroup const &G, Permutation const &g)
{
  ConjugationOrbit orbit;
  Elem start = G.require_index(g);
  std::unordered_map<Elem, std::size_t> seen{{start, 0}};
  orbit.members.push_back(start);
  orbit.conjugators.push_back(Permutation::identity(G.degree()));
  std::vector<Permutation> gen_inverses;
  for (auto const &s : G.generators())
    gen_inverses.push_back(inverse(s));
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    for (std::size_t k = 0; k < gen_inverses.size(); ++k) {
      Permutation const &s = G.generators()[k];
      Elem c = G.require_index(compose(compose(gen_inverses[k], G.element(orbit.members[i])), s));
      if (seen.emplace(c, orbit.members.size()).second) {
        orbit.members.push_back(c);
        orbit.conjugators.push_back(compose(orbit.conjugators[i], s));
      }
    }
  }
  return orbit;
}

SubgroupRecord centralizer(PermGroup const &G, Permutation const &g)
{
  G.require_index(g);
  ElementSet members(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) {
    Permutation const &z = G.element(x);
    if (compose(g, z) == compose(z, g))
      members.set(x);
  }
  return subgroup_from_members(G, members);
}

std::optional<Permutation> is_conjugate(PermGroup const &G, Permutation const &g,
                                        Permutation const &h)
{
  Elem target = G.require_index(h);
  auto orbit = conjugation_orbit(G, g);
  for (std::size_t i = 0; i < orbit.members.size(); ++i)
    if (orbit.members[i] == target)
      return orbit.conjugators[i];
  return std::nullopt;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

SubgroupRecord sylow(PermGroup const &G, std::uint64_t p)
{
  if (!is_prime(p))
    throw ValidationError(std::to_string(p) + " is not prime");
  std::uint64_t target = 1;
  for (std::uint64_t n = G.order(); n % p == 0; n /= p)
    target *= p;

  SubgroupRecord P = subgroup(G, {});
  while (P.order < target) {
    std::optional<Permutation> extension;
    for (std::size_t x = 0; x < G.order() && !extension; ++x) {
      if (P.contains(x))
        continue;
      Permutation const &z = G.element(x);
      bool normalizes = std::all_of(P.generators.begin(), P.generators.end(),
                                    [&](auto const &h) { return P.contains(G, conjugate(h, z)); });
      if (normalizes && P.contains(G, power(z, static_cast<std::int64_t>(p))))
        extension = z;
    }
    if (!extension)
      throw VerificationFailure("no p-element in the normalizer; Sylow step failed");
    auto gens = P.generators;
    gens.push_back(*extension);
    P = subgroup(G, gens);
  }
  return P;
}

namespace {

struct Lattice {
  std::vector<ElementSet> sets;
  std::vector<std::vector<Elem>> gens;
};

ElementSet table_closure(GroupTable const &table, ElementSet const &base,
                         std::vector<Elem> const &gens)
{
  ElementSet seen = base;
  std::vector<Elem> queue = set_bits(base);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem s : gens) {
      Elem y = table.mul(queue[i], s);
      if (!seen.test(y)) {
        seen.set(y);
        queue.push_back(y);
      }
    }
  return seen;
}

Lattice enumerate_lattice(PermGroup const &G, GroupTable const &table)
{
  std::size_t const n = G.order();
  Lattice lat;
  std::unordered_map<ElementSet, std::size_t> seen;
  auto insert = [&](ElementSet set, std::vector<Elem> gens) {
    if (seen.emplace(set, lat.sets.size()).second) {
      lat.sets.push_back(std::move(set));
      lat.gens.push_back(std::move(gens));
    }
  };

  ElementSet trivial(n);
  trivial.set(0);
  insert(trivial, {});
  std::vector<std::size_t> cyclic;
  for (Elem a = 1; a < n; ++a) {
    ElementSet powers(n);
    for (Elem x = a;; x = table.mul(x, a)) {
      powers.set(x);
      if (x == 0)
        break;
    }
    auto before = lat.sets.size();
    insert(std::move(powers), {a});
    if (lat.sets.size() > before)
      cyclic.push_back(before);
  }

  for (std::size_t i = 0; i < lat.sets.size(); ++i) {
    for (std::size_t c : cyclic) {
      Elem generator = lat.gens[c].front();
      if (lat.sets[i].test(generator))
        continue;
      auto gens = lat.gens[i];
      gens.push_back(generator);
      ElementSet joined = table_closure(table, lat.sets[i], gens);
      insert(std::move(joined), std::move(gens));
    }
  }
  return lat;
}

void require_lattice_cap(PermGroup const &G, std::size_t cap)
{
  if (G.order() > cap)
    throw CapExceeded("group order " + std::to_string(G.order()) +
                      " exceeds subgroup-lattice cap " + std::to_string(cap));
}

std::vector<std::size_t> lattice_order(Lattice const &lat)
{
  std::vector<std::size_t> idx(lat.sets.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return lat.sets[a].count() < lat.sets[b].count();
  });
  return idx;
}

} // namespace

std::vector<SubgroupRecord> all_subgroups(PermGroup const &G, std::size_t cap)
{
  require_lattice_cap(G, cap);
  GroupTable table(G, cap);
  Lattice lat = enumerate_lattice(G, table);
  std::vector<SubgroupRecord> out;
  for (std::size_t i : lattice_order(lat)) {
    out.push_back(make_record(G, lat.gens[i], lat.sets[i]));
  }
  for (auto &rec : out) {
    if (rec.order == G.order())
      continue;
    rec.is_maximal = std::none_of(out.begin(), out.end(), [&](SubgroupRecord const &other) {
      return other.order != G.order() && other.order > rec.order &&
             rec.members.is_proper_subset_of(other.members);
    });
  }
  return out;
}

std::vector<SubgroupRecord> maximal_subgroups(PermGroup const &G, std::size_t cap)
{
  require_lattice_cap(G, cap);
  GroupTable table(G, cap);
  auto subgroups = all_subgroups(G, cap);

  std::vector<SubgroupRecord> reps;
  std::unordered_set<ElementSet> assigned;
  for (auto const &rec : subgroups) {
    if (!rec.is_maximal || assigned.count(rec.members))
      continue;
    std::vector<ElementSet> queue{rec.members};
    assigned.insert(rec.members);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto members = set_bits(queue[i]);
      for (auto const &s : G.generators()) {
        Elem z = G.require_index(s);
        ElementSet conj(G.order());
        for (Elem m : members)
          conj.set(table.conj(m, z));
        if (assigned.insert(conj).second)
          queue.push_back(std::move(conj));
      }
    }
    reps.push_back(rec);
  }
  std::stable_sort(reps.begin(), reps.end(),
                   [](auto const &a, auto const &b) { return a.order > b.order; });
  return reps;
}

namespace {

SubgroupRecord normal_closure(PermGroup const &G, std::vector<Permutation> gens)
{
  SubgroupRecord S = subgroup(G, gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < S.generators.size() && !grew; ++i)
      for (auto const &s : G.generators()) {
        Permutation c = conjugate(S.generators[i], s);
        if (!S.contains(G, c)) {
          gens.push_back(std::move(c));
          S = subgroup(G, gens);
          grew = true;
          break;
        }
      }
  }
  return S;
}

} // namespace

std::vector<SubgroupRecord> normal_subgroups(PermGroup const &G)
{
  std::vector<SubgroupRecord> found;
  std::unordered_set<ElementSet> seen;
  auto add = [&](SubgroupRecord rec) {
    if (seen.insert(rec.members).second)
      found.push_back(std::move(rec));
  };
  add(subgroup(G, {}));
  for (auto const &cls : conjugacy_classes(G).classes)
    if (!cls.representative.is_identity())
      add(normal_closure(G, {cls.representative}));
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto gens = found[i].generators;
      gens.insert(gens.end(), found[j].generators.begin(), found[j].generators.end());
      add(subgroup(G, gens));
    }
  std::stable_sort(found.begin(), found.end(),
                   [](auto const &a, auto const &b) { return a.order < b.order; });
  for (auto &rec : found)
    rec.is_normal = true;
  return found;
}

PermGroup quotient(PermGroup const &G, SubgroupRecord const &N)
{
  if (!is_normal(G, N))
    throw ValidationError("subgroup is not normal");
  auto normal_members = member_list(G, N);
  std::size_t const n = G.order();
  std::vector<std::size_t> coset(n, static_cast<std::size_t>(-1));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != static_cast<std::size_t>(-1))
      continue;
    for (auto const &m : normal_members)
      coset[G.require_index(compose(m, G.element(x)))] = reps.size();
    reps.push_back(x);
  }
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < G.generators().size(); ++k) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      images[c] = static_cast<Point>(coset[G.right_multiply(reps[c], k)]);
    gens.emplace_back(std::move(images));
  }
  PermGroup Q(reps.size(), std::move(gens));
  Q.materialize(reps.size() == 0 ? 1 : reps.size());
  return Q;
}

bool is_cyclic(PermGroup const &G)
{
  for (auto const &g : G.elements())
    if (order_of(g) == G.order())
      return true;
  return false;
}

bool is_abelian(PermGroup const &G)
{
  auto const &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
        return false;
  return true;
}

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::vector<Permutation> const &generators)
{
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (Point x = 0; x < degree; ++x) {
    if (seen[x])
      continue;
    std::vector<Point> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (auto const &g : generators) {
        Point y = g[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

} // namespace diagcover
