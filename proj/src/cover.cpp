#include "diagcover/cover.hpp"

#include <algorithm>
#include <cstdint>

#include "diagcover/errors.hpp"

namespace diagcover {

namespace {

void require_proper_subgroups(PermGroup const &G, std::vector<SubgroupRecord> const &components)
{
  for (auto const &H : components) {
    for (auto const &g : H.generators)
      if (!G.contains(g))
        throw ValidationError("component is not a subgroup of the group");
    if (H.members.size() != G.order())
      throw ValidationError("component record does not belong to this group");
    if (H.order >= G.order())
      throw ValidationError("component must be a proper subgroup");
  }
}

} // namespace

CoverOutcome verify_normal_covering(PermGroup const &G,
                                    std::vector<SubgroupRecord> const &components)
{
  require_proper_subgroups(G, components);
  auto table = conjugacy_classes(G);
  CoverCertificate cert;
  cert.components = components;
  CoverFailure failure;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    auto const &rep = table.classes[c].representative;
    auto orbit = conjugation_orbit(G, rep);
    std::optional<ClassAssignment> found;
    for (std::size_t h = 0; h < components.size() && !found; ++h)
      for (std::size_t i = 0; i < orbit.members.size(); ++i)
        if (components[h].contains(orbit.members[i])) {
          found = ClassAssignment{c, rep, h, orbit.conjugators[i]};
          break;
        }
    if (found) {
      cert.assignments.push_back(std::move(*found));
    } else {
      failure.uncovered_classes.push_back(c);
      failure.uncovered_representatives.push_back(rep);
    }
  }
  if (!failure.uncovered_classes.empty())
    return failure;
  return cert;
}

bool recheck(PermGroup const &G, CoverCertificate const &certificate)
{
  auto table = conjugacy_classes(G);
  if (certificate.assignments.size() != table.classes.size())
    return false;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    auto const &a = certificate.assignments[c];
    if (a.representative != table.classes[c].representative ||
        a.component >= certificate.components.size() || !G.contains(a.conjugator))
      return false;
    auto const &H = certificate.components[a.component];
    if (H.order >= G.order() || !H.contains(G, conjugate(a.representative, a.conjugator)))
      return false;
  }
  return true;
}

namespace {

using Mask = std::vector<std::uint64_t>;

bool covers_all(Mask const &m, std::size_t nclasses)
{
  for (std::size_t c = 0; c < nclasses; ++c)
    if (!((m[c / 64] >> (c % 64)) & 1u))
      return false;
  return true;
}

// Depth-first search for a k-subset (in lexicographic index order) whose union
// covers every class. A class that no remaining candidate covers ends the branch.
bool search(std::vector<Mask> const &masks, std::size_t nclasses, std::size_t k, std::size_t start,
            Mask const &covered, std::vector<std::size_t> &chosen)
{
  if (chosen.size() == k)
    return covers_all(covered, nclasses);
  std::size_t const remaining = k - chosen.size();
  for (std::size_t c = 0; c < nclasses; ++c) {
    if ((covered[c / 64] >> (c % 64)) & 1u)
      continue;
    bool reachable = false;
    for (std::size_t i = start; i < masks.size() && !reachable; ++i)
      reachable = (masks[i][c / 64] >> (c % 64)) & 1u;
    if (!reachable)
      return false;
  }
  for (std::size_t i = start; i + remaining <= masks.size(); ++i) {
    Mask next = covered;
    for (std::size_t w = 0; w < next.size(); ++w)
      next[w] |= masks[i][w];
    chosen.push_back(i);
    if (search(masks, nclasses, k, i + 1, next, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

GammaResult gamma(PermGroup const &G, std::size_t lattice_cap)
{
  if (is_cyclic(G))
    throw CyclicGroupError();
  auto classes = conjugacy_classes(G);
  auto maximals = maximal_subgroups(G, lattice_cap);
  std::size_t const nclasses = classes.classes.size();
  std::size_t const words = (nclasses + 63) / 64;

  std::vector<Mask> masks;
  for (auto const &M : maximals) {
    Mask m(words, 0);
    for (auto i = M.members.find_first(); i != ElementSet::npos; i = M.members.find_next(i)) {
      auto c = classes.class_index[i];
      m[c / 64] |= std::uint64_t{1} << (c % 64);
    }
    masks.push_back(std::move(m));
  }

  Mask all(words, 0);
  for (auto const &m : masks)
    for (std::size_t w = 0; w < words; ++w)
      all[w] |= m[w];
  if (!covers_all(all, nclasses))
    throw VerificationFailure("maximal subgroups fail to cover a noncyclic group");

  for (std::size_t k = 1; k <= masks.size(); ++k) {
    std::vector<std::size_t> chosen;
    if (!search(masks, nclasses, k, 0, Mask(words, 0), chosen))
      continue;
    if (k < 2)
      throw VerificationFailure("a single proper subgroup covers the group (contradicts Jordan)");
    std::vector<SubgroupRecord> components;
    for (auto i : chosen)
      components.push_back(maximals[i]);
    auto outcome = verify_normal_covering(G, components);
    auto *cert = std::get_if<CoverCertificate>(&outcome);
    if (!cert)
      throw VerificationFailure("set-cover witness failed class verification");
    return GammaResult{static_cast<unsigned>(k), std::move(*cert)};
  }
  throw VerificationFailure("no covering found");
}

BasicResult is_basic(PermGroup const &G, std::size_t lattice_cap)
{
  BasicResult result;
  if (G.order() <= 1 || is_cyclic(G))
    return result;
  result.gamma = gamma(G, lattice_cap).value;
  bool quotients_ok = true;
  for (auto const &N : normal_subgroups(G)) {
    if (N.order == 1 || N.order == G.order())
      continue;
    QuotientEvidence ev;
    ev.normal_subgroup = N;
    PermGroup Q = quotient(G, N);
    ev.quotient_order = Q.order();
    if (!is_cyclic(Q))
      ev.quotient_gamma = gamma(Q, lattice_cap).value;
    if (ev.quotient_gamma && *ev.quotient_gamma <= 2)
      quotients_ok = false;
    result.evidence.push_back(std::move(ev));
  }
  result.basic = *result.gamma == 2 && quotients_ok;
  return result;
}

} // namespace diagcover
