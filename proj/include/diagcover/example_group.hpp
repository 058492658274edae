#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "diagcover/catalog.hpp"

namespace diagcover {

// Element (x_1, ..., x_p) sigma^k of G = H x| <sigma>; coords are indices into
// the automorphism carrier and must all lie in one coset of Inn(T).
struct GElement {
  std::vector<Elem> coords;
  std::uint32_t k = 0;
  friend bool operator==(GElement const &, GElement const &) = default;
};

enum class Component { H, K };
std::string to_string(Component c);

struct ComponentAssignment {
  Component tag = Component::H;
  GElement conjugator; // g^conjugator lies in the tagged component
};

struct ExampleSample {
  std::uint64_t index = 0;
  GElement element;
  Component tag = Component::H;
  GElement conjugator;
  GElement conjugated;
  bool commutes_with_sigma = false;
  bool in_k = false;
};

struct ExampleCertificate {
  std::uint64_t seed = 0;
  std::vector<ExampleSample> samples;
};

// G = H x| <sigma> for T non-abelian simple, Inn(T) <= U <= Aut(T) and a prime
// p coprime to |U|. sigma^-1 (x_1, ..., x_p) sigma = (x_2, ..., x_p, x_1).
class ExampleGroup {
public:
  // Validates every hypothesis; throws ValidationError naming the first failure.
  ExampleGroup(std::shared_ptr<AutAction const> aut, SubgroupRecord U, std::uint64_t p);

  AutAction const &aut() const noexcept { return *aut_; }
  SubgroupRecord const &U() const noexcept { return U_; }
  std::uint32_t p() const noexcept { return p_; }
  GroupTable const &carrier_table() const noexcept { return table_; }
  std::vector<Elem> const &u_members() const noexcept { return u_members_; }
  std::vector<Elem> const &inner_members() const noexcept { return inner_members_; }

  GElement identity() const;
  GElement sigma() const;
  bool is_valid(GElement const &g) const;

  GElement multiply(GElement const &a, GElement const &b) const;
  GElement inverse(GElement const &a) const;
  GElement power(GElement const &a, std::uint64_t exponent) const;
  GElement conjugate(GElement const &g, GElement const &z) const; // z^-1 g z
  std::uint64_t order(GElement const &a) const;

  bool in_H(GElement const &g) const { return g.k == 0; }
  bool in_K(GElement const &g) const;

  // Conjugates g into H or K. For k != 0 the conjugator is solved along the
  // sigma^j-cycle with first coordinate fixed to the identity, then verified;
  // throws VerificationFailure if the result is not in K.
  ComponentAssignment conjugate_into_component(GElement const &g) const;

  // {g sigma == sigma g, in_K(g)}
  std::pair<bool, bool> commutes_with_sigma_iff_in_K(GElement const &g) const;

  // Uniform-ish element (t_1 u, ..., t_p u) sigma^k drawn from a per-index stream.
  GElement sample(std::uint64_t seed, std::uint64_t index) const;

  ExampleCertificate covering_certificate(std::uint64_t samples, std::uint64_t seed) const;

private:
  std::shared_ptr<AutAction const> aut_;
  SubgroupRecord U_;
  std::uint32_t p_;
  GroupTable table_;
  std::vector<Elem> u_members_;
  std::vector<Elem> inner_members_;
  std::vector<std::int64_t> inner_coset_; // carrier index -> coset label mod Inn(T), -1 outside U
};

} // namespace diagcover
