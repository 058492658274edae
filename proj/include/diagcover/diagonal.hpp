#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "diagcover/catalog.hpp"

namespace diagcover {

// The coset D(1, a_1, ..., a_ell) of the diagonal subgroup, stored by its
// distinguished representative (first coordinate the identity, kept implicit).
struct DiagonalPoint {
  std::vector<Elem> coords; // a_1 .. a_ell as indices into T
  friend bool operator==(DiagonalPoint const &, DiagonalPoint const &) = default;
};

// Canonical form n * phi * sigma with base[0] the identity of T. Acting on a
// point applies the base, then phi, then sigma.
struct WElement {
  std::vector<Elem> base; // t_0 .. t_ell
  Permutation phi;        // carrier element of the AutAction
  Permutation sigma;      // on {0, ..., ell}
  friend bool operator==(WElement const &, WElement const &) = default;
};

class DiagonalSpace {
public:
  DiagonalSpace(std::shared_ptr<AutAction const> aut, unsigned ell);

  unsigned ell() const noexcept { return ell_; }
  AutAction const &aut() const noexcept { return *aut_; }
  GroupTable const &table() const noexcept { return aut_->table; }

  std::uint64_t omega_size() const; // |T|^ell
  std::uint64_t predicted_w_order() const; // |T|^(ell+1) |Out(T)| (ell+1)!

  DiagonalPoint base_point() const { return {std::vector<Elem>(ell_, 0)}; }
  // Lexicographic in the element indices, a_1 most significant.
  std::uint64_t point_index(DiagonalPoint const &point) const;
  DiagonalPoint point_at(std::uint64_t index) const;

  DiagonalPoint act_phi(DiagonalPoint const &point, Permutation const &phi) const;
  DiagonalPoint act_base(DiagonalPoint const &point, std::span<Elem const> n) const;
  DiagonalPoint act_sigma(DiagonalPoint const &point, Permutation const &sigma) const;
  DiagonalPoint act_w(DiagonalPoint const &point, WElement const &w) const;

  WElement identity() const;
  // Folds a nontrivial t_0 into phi through the diagonal/inner identification.
  WElement canonical(std::vector<Elem> base, Permutation phi, Permutation sigma) const;
  WElement from_base(std::vector<Elem> n) const;
  WElement from_phi(Permutation phi) const;
  WElement from_sigma(Permutation sigma) const;

  WElement compose(WElement const &v, WElement const &w) const;
  WElement inverse(WElement const &w) const;
  WElement conjugate(WElement const &w, WElement const &z) const; // z^-1 w z

  // The permutation of Omega induced by w (points indexed by point_index).
  Permutation to_permutation(WElement const &w) const;

  struct Projections {
    Elem outer_label; // least carrier index in the coset phi * Inn(T); 0 iff phi inner
    Permutation sigma;
  };
  Projections projections(WElement const &w) const;

private:
  std::vector<Elem> permute_positions(std::span<Elem const> tuple, Permutation const &sigma) const;

  std::shared_ptr<AutAction const> aut_;
  unsigned ell_;
};

struct WBuild {
  PermGroup group;            // W on Omega
  SubgroupRecord stabilizer;  // W_{omega_0}
  SubgroupRecord socle;       // N = T^(ell+1)
  SubgroupRecord socle_stabilizer; // N_{omega_0}
  std::vector<WElement> generators; // preimages of group.generators()
};

WBuild build_w(DiagonalSpace const &space, std::uint64_t omega_cap = kDefaultMaterializeCap,
               std::size_t order_cap = kDefaultMaterializeCap);

// True iff ell == 1 or the sigma-parts generate a primitive group on {0..ell}.
bool is_diagonal_primitive(unsigned ell, std::vector<WElement> const &generators);

// Primitivity of the group generated by `generators` on {0..degree-1}.
bool is_primitive(std::size_t degree, std::vector<Permutation> const &generators);

} // namespace diagcover
