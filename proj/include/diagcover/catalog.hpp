#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diagcover/group.hpp"

namespace diagcover {

enum class Family {
  symmetric,
  alternating,
  cyclic,
  dihedral,
  agl1,
  psl2,
  pgl2,
  pgammal2,
  direct_product,
};

struct GroupSpecifier {
  Family family = Family::symmetric;
  std::vector<std::uint64_t> parameters;
  std::vector<GroupSpecifier> factors; // direct_product only
};

// Mini-language: S<n>, A<n>, C<n>, D<n> (dihedral on n points), V4,
// AGL1:<p>, PSL2:<q>, PGL2:<q>, PGammaL2:<q>, and products joined by 'x'
// (e.g. "C2xC2").
GroupSpecifier parse_specifier(std::string_view text);
std::string to_string(GroupSpecifier const &spec);

// Natural action, materialized. Projective groups act on the q+1 points of the
// projective line: field elements 0..q-1 by their encodings, infinity = q.
PermGroup make(GroupSpecifier const &spec, std::size_t cap = kDefaultMaterializeCap);
PermGroup make(std::string_view specifier, std::size_t cap = kDefaultMaterializeCap);

inline constexpr std::size_t kDefaultAutomorphismCap = 360;

// Aut(T) acting on the element indices of T.
struct AutAction {
  PermGroup base;             // T, materialized
  GroupTable table;           // multiplication table of T
  PermGroup carrier;          // degree |T|, materialized
  SubgroupRecord inner_image; // Inn(T) inside carrier
  std::vector<Elem> inner_of; // T index -> carrier index of x -> t^-1 x t

  std::uint64_t out_order() const { return carrier.order() / inner_image.order; }
  Permutation const &inner(Elem t) const { return carrier.element(inner_of.at(t)); }

  // t with carrier element == conjugation by t, when it is inner.
  std::optional<Elem> inner_preimage(Elem carrier_index) const;

  // phi(x) for phi in the carrier and x a T index.
  static Elem apply(Permutation const &phi, Elem x) { return phi[x]; }

private:
  friend AutAction automorphism_action(PermGroup const &, std::size_t);
  std::vector<std::int64_t> preimage_; // carrier index -> T index or -1
};

AutAction automorphism_action(PermGroup const &T, std::size_t cap = kDefaultAutomorphismCap);

struct FieldAutomorphism {
  PermGroup group;            // PGammaL2(q), materialized
  Permutation phi;            // x -> x^r on field labels, fixing infinity
  SubgroupRecord t_subgroup;  // PSL2(q)
  std::uint32_t degree_f = 1; // q = r^f
};

FieldAutomorphism field_automorphism(std::uint64_t q, std::size_t cap = kDefaultMaterializeCap);

} // namespace diagcover
