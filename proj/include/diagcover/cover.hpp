#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "diagcover/group.hpp"

namespace diagcover {

struct ClassAssignment {
  std::size_t class_index = 0;
  Permutation representative;
  std::size_t component = 0;
  Permutation conjugator; // representative^conjugator lies in the component
};

struct CoverCertificate {
  std::vector<SubgroupRecord> components;
  std::vector<ClassAssignment> assignments; // one per conjugacy class, in class order
};

struct CoverFailure {
  std::vector<std::size_t> uncovered_classes;
  std::vector<Permutation> uncovered_representatives;
};

using CoverOutcome = std::variant<CoverCertificate, CoverFailure>;

// Throws ValidationError if a component is not a proper subgroup of G.
CoverOutcome verify_normal_covering(PermGroup const &G,
                                    std::vector<SubgroupRecord> const &components);

// Replays every assignment of a certificate against G.
bool recheck(PermGroup const &G, CoverCertificate const &certificate);

struct GammaResult {
  unsigned value = 0;
  CoverCertificate witness;
};

// Exact normal covering number via set cover over conjugacy classes of maximal
// subgroups. Throws CyclicGroupError for cyclic G.
GammaResult gamma(PermGroup const &G, std::size_t lattice_cap = kDefaultLatticeCap);

struct QuotientEvidence {
  SubgroupRecord normal_subgroup;
  std::uint64_t quotient_order = 1;
  std::optional<unsigned> quotient_gamma; // empty: quotient cyclic, gamma infinite
};

struct BasicResult {
  bool basic = false;
  std::optional<unsigned> gamma; // empty: G cyclic
  std::vector<QuotientEvidence> evidence;
};

BasicResult is_basic(PermGroup const &G, std::size_t lattice_cap = kDefaultLatticeCap);

} // namespace diagcover
