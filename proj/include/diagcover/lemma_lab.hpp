#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "diagcover/catalog.hpp"

namespace diagcover {

struct MapReport {
  std::uint64_t domain_size = 0;
  std::uint64_t image_size = 0;
  bool is_bijective = false;
  std::uint64_t fixed_point_count = 0; // preimage of the identity
};

// y -> y^-1 y^phi over all of T. The identity's preimage is C_T(phi).
MapReport twist_map_report(AutAction const &aut, Permutation const &phi);

// y -> (y phi)^a phi^-a, evaluated in the carrier with y read as an inner
// automorphism. Throws ValidationError if a value falls outside Inn(T).
MapReport power_twist_report(AutAction const &aut, Permutation const &phi, std::uint64_t a);

// twist_map_report(aut, phi^a)
MapReport fixed_cell_contradiction_probe(AutAction const &aut, Permutation const &phi,
                                         std::uint64_t a);

struct TowerStep {
  std::uint64_t phi_order = 1;
  std::uint64_t centralizer_order = 0;          // |C_T(phi)|
  std::uint64_t centralizer_of_power_order = 0; // |C_T(phi^p)|
  bool strict = false;                          // C_T(phi) < C_T(phi^p)
};

// Centralizers in T of phi and phi^p, by filtered scan of T's members.
TowerStep tower_step(PermGroup const &G, SubgroupRecord const &T, Permutation const &phi,
                     std::uint64_t p);

struct TowerReport {
  std::uint64_t q = 0, p = 0, f = 0;
  std::uint64_t group_order = 0; // |PGammaL2(q)|
  std::uint64_t t_order = 0;     // |PSL2(q)|
  std::uint64_t frobenius_order = 0;
  std::vector<TowerStep> steps;  // nontrivial p-power-order powers of the Frobenius
  bool holds = false;
};

std::uint64_t psl2_order(std::uint64_t q);

// Requires q = r^f with f > 1, p | f and p coprime to |PSL2(q)|.
TowerReport centralizer_tower_check(std::uint64_t q, std::uint64_t p,
                                    std::size_t cap = kDefaultMaterializeCap);

struct CyclicRegularClass {
  Permutation representative;
  std::uint64_t size = 0;
  bool meets_subgroup = false;
};

struct CyclicRegularReport {
  std::size_t degree = 0;
  std::uint64_t full_cycles = 0;
  std::uint64_t conjugated = 0; // full cycles with a verified conjugator into C
  std::vector<CyclicRegularClass> classes;
  std::vector<Permutation> failures;
};

// Every full cycle of L, conjugated into the cyclic regular subgroup C when possible.
CyclicRegularReport cyclic_regular_check(PermGroup const &L, SubgroupRecord const &C);

struct RecursionReplay {
  std::vector<Elem> t_sequence;  // t_1 .. t_{a-1}
  Elem t = 0;                    // product form
  Elem t_closed_form = 0;        // (t_{a-1}^-1 phi)^a phi^-a
  std::vector<Elem> coordinates; // first a coordinates after conjugation by (1, t_1, ..., t_{a-1})
  bool coordinates_equal = false;
  bool lands_in_stabilizer = false; // same check through the diagonal W arithmetic
};

// Rebuilds t_1..t_{a-1} and t from t_{a-1} = t_last and replays the
// conjugation of (t, 1, ..., 1) phi (0 1 ... a-1).
RecursionReplay recursion_replay(std::shared_ptr<AutAction const> aut, Permutation const &phi,
                                 std::uint64_t a, Elem t_last);

struct TwoCycleReplay {
  std::vector<Elem> t_sequence;  // t_a .. t_{a+b-1}
  std::vector<Elem> coordinates; // the b coordinates on the second cycle
  bool coordinates_equal = false;
  Elem closure = 0;              // (t_a t_{a+b-1}^-1 phi)^b phi^-b
  bool premise = false;          // y -> (y phi)^b phi^-b is bijective
  bool forces_equal = true;      // premise && coordinates_equal  =>  t_{a+b-1} == t_a
};

TwoCycleReplay two_cycle_replay(AutAction const &aut, Permutation const &phi, std::uint64_t a,
                                std::uint64_t b, Elem t_a, Elem t_last);

} // namespace diagcover
