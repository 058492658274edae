#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "diagcover/perm.hpp"

namespace diagcover {

inline constexpr std::size_t kDefaultMaterializeCap = 200000;
inline constexpr std::size_t kDefaultLatticeCap = 2000;

// Index of an element within a materialized group's element list.
using Elem = std::uint32_t;

// Subset of a materialized group, one bit per element index.
using ElementSet = boost::dynamic_bitset<>;

// A permutation group given by generators. The element list is computed on
// demand by materialize(); index 0 is always the identity and the remaining
// elements appear in breadth-first order over the generators.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const &generators() const noexcept { return generators_; }

  bool is_materialized() const noexcept { return !elements_.empty(); }

  // Throws CapExceeded (leaving the group unmaterialized) if the order passes cap.
  void materialize(std::size_t cap = kDefaultMaterializeCap);

  std::vector<Permutation> const &elements() const;
  Permutation const &element(std::size_t index) const { return elements().at(index); }
  std::uint64_t order() const;

  std::optional<Elem> index_of(Permutation const &g) const;
  bool contains(Permutation const &g) const { return index_of(g).has_value(); }

  // Throws ValidationError when g is not an element.
  Elem require_index(Permutation const &g) const;

  // right_multiply(x, i) is the index of element(x) * generators()[i].
  Elem right_multiply(Elem x, std::size_t generator) const
  { return right_mul_[static_cast<std::size_t>(x) * generators_.size() + generator]; }

  // Breadth-first spanning tree: element(x) = element(parent(x)) * generators()[parent_generator(x)].
  Elem parent(Elem x) const { return parent_[x]; }
  std::size_t parent_generator(Elem x) const { return parent_gen_[x]; }

private:
  void require_materialized() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem> index_;
  std::vector<Elem> right_mul_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
};

PermGroup materialized(PermGroup group, std::size_t cap = kDefaultMaterializeCap);

// Full multiplication table over the element indices of a materialized group.
class GroupTable {
public:
  GroupTable() = default;
  explicit GroupTable(PermGroup const &group, std::size_t max_order = 4096);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem z) const { return mul(mul(inv(z), g), z); }
  Elem pow(Elem a, std::int64_t exponent) const;
  std::uint64_t element_order(Elem a) const;

private:
  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

struct SubgroupRecord {
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  bool is_maximal = false;
  bool is_normal = false;
  ElementSet members; // over the parent's element indices

  bool contains(PermGroup const &parent, Permutation const &g) const;
  bool contains(Elem index) const { return index < members.size() && members.test(index); }
};

// Closure of `generators` inside G; throws ValidationError if one is not in G.
SubgroupRecord subgroup(PermGroup const &G, std::vector<Permutation> const &generators);

// Record for a known member set (closed under multiplication); generators are
// chosen greedily in element-index order.
SubgroupRecord subgroup_from_members(PermGroup const &G, ElementSet const &members);

bool is_normal(PermGroup const &G, SubgroupRecord const &S);

// The subgroup as a standalone materialized PermGroup on the parent's points.
PermGroup as_group(PermGroup const &G, SubgroupRecord const &S);

std::vector<Permutation> member_list(PermGroup const &G, SubgroupRecord const &S);

struct ConjugacyClass {
  Permutation representative; // lexicographically least member
  std::uint64_t element_order = 1;
  std::vector<Elem> members;  // sorted element indices
  std::size_t size() const noexcept { return members.size(); }
};

// Classes sorted by (element order, representative).
class ConjugacyClassTable {
public:
  std::vector<ConjugacyClass> classes;
  std::vector<std::size_t> class_index; // per element index

  std::size_t class_of(PermGroup const &G, Permutation const &g) const;
};

ConjugacyClassTable conjugacy_classes(PermGroup const &G);

// Orbit of g under conjugation with a transversal: element(members[i]) = g^conjugators[i].
struct ConjugationOrbit {
  std::vector<Elem> members;
  std::vector<Permutation> conjugators;
};

ConjugationOrbit conjugation_orbit(PermGroup const &G, Permutation const &g);

SubgroupRecord centralizer(PermGroup const &G, Permutation const &g);

// Some z in G with g^z = h, if one exists.
std::optional<Permutation> is_conjugate(PermGroup const &G, Permutation const &g,
                                        Permutation const &h);

bool is_prime(std::uint64_t n);

SubgroupRecord sylow(PermGroup const &G, std::uint64_t p);

std::vector<SubgroupRecord> all_subgroups(PermGroup const &G,
                                          std::size_t cap = kDefaultLatticeCap);

// One representative per conjugacy class of maximal subgroups, by decreasing order.
std::vector<SubgroupRecord> maximal_subgroups(PermGroup const &G,
                                              std::size_t cap = kDefaultLatticeCap);

// All normal subgroups, by increasing order (trivial group first, G last).
std::vector<SubgroupRecord> normal_subgroups(PermGroup const &G);

// Action of G on the right cosets of N; degree [G:N].
PermGroup quotient(PermGroup const &G, SubgroupRecord const &N);

bool is_cyclic(PermGroup const &G);
bool is_abelian(PermGroup const &G);

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::vector<Permutation> const &generators);

} // namespace diagcover
