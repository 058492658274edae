#include "diagcover/diagonal.hpp"

#include <numeric>
#include <string>

#include "diagcover/errors.hpp"

namespace diagcover {

DiagonalSpace::DiagonalSpace(std::shared_ptr<AutAction const> aut, unsigned ell)
: aut_(std::move(aut)), ell_(ell)
{
  if (!aut_)
    throw ValidationError("diagonal space needs an automorphism action");
  if (ell_ < 1)
    throw ValidationError("ell must be at least 1");
}

std::uint64_t DiagonalSpace::omega_size() const
{
  std::uint64_t size = 1;
  for (unsigned i = 0; i < ell_; ++i)
    size *= table().order();
  return size;
}

std::uint64_t DiagonalSpace::predicted_w_order() const
{
  std::uint64_t order = omega_size() * table().order() * aut().out_order();
  for (unsigned i = 2; i <= ell_ + 1; ++i)
    order *= i;
  return order;
}

std::uint64_t DiagonalSpace::point_index(DiagonalPoint const &point) const
{
  std::uint64_t index = 0;
  for (Elem a : point.coords)
    index = index * table().order() + a;
  return index;
}

DiagonalPoint DiagonalSpace::point_at(std::uint64_t index) const
{
  DiagonalPoint point{std::vector<Elem>(ell_)};
  for (unsigned i = ell_; i-- > 0;) {
    point.coords[i] = static_cast<Elem>(index % table().order());
    index /= table().order();
  }
  return point;
}

DiagonalPoint DiagonalSpace::act_phi(DiagonalPoint const &point, Permutation const &phi) const
{
  DiagonalPoint out = point;
  for (auto &a : out.coords)
    a = phi[a];
  return out;
}

DiagonalPoint DiagonalSpace::act_base(DiagonalPoint const &point, std::span<Elem const> n) const
{
  if (n.size() != ell_ + 1)
    throw ValidationError("base tuple must have ell+1 entries");
  DiagonalPoint out = point;
  Elem const t0_inv = table().inv(n[0]);
  for (unsigned i = 0; i < ell_; ++i)
    out.coords[i] = table().mul(table().mul(t0_inv, point.coords[i]), n[i + 1]);
  return out;
}

std::vector<Elem> DiagonalSpace::permute_positions(std::span<Elem const> tuple,
                                                   Permutation const &sigma) const
{
  if (sigma.degree() != ell_ + 1)
    throw ValidationError("sigma must act on ell+1 points");
  std::vector<Elem> out(tuple.size());
  for (Point i = 0; i < tuple.size(); ++i)
    out[sigma[i]] = tuple[i];
  return out;
}

DiagonalPoint DiagonalSpace::act_sigma(DiagonalPoint const &point, Permutation const &sigma) const
{
  std::vector<Elem> full{table().identity()};
  full.insert(full.end(), point.coords.begin(), point.coords.end());
  auto moved = permute_positions(full, sigma);
  Elem const lead_inv = table().inv(moved[0]);
  DiagonalPoint out{std::vector<Elem>(ell_)};
  for (unsigned i = 0; i < ell_; ++i)
    out.coords[i] = table().mul(lead_inv, moved[i + 1]);
  return out;
}

DiagonalPoint DiagonalSpace::act_w(DiagonalPoint const &point, WElement const &w) const
{ return act_sigma(act_phi(act_base(point, w.base), w.phi), w.sigma); }

WElement DiagonalSpace::identity() const
{
  return {std::vector<Elem>(ell_ + 1, table().identity()),
          Permutation::identity(table().order()), Permutation::identity(ell_ + 1)};
}

WElement DiagonalSpace::canonical(std::vector<Elem> base, Permutation phi, Permutation sigma) const
{
  if (base.size() != ell_ + 1)
    throw ValidationError("base tuple must have ell+1 entries");
  Elem const t0 = base[0];
  if (t0 != table().identity()) {
    Elem const t0_inv = table().inv(t0);
    for (auto &t : base)
      t = table().mul(t, t0_inv);
    phi = diagcover::compose(aut().inner(t0), phi);
  }
  return {std::move(base), std::move(phi), std::move(sigma)};
}

WElement DiagonalSpace::from_base(std::vector<Elem> n) const
{ return canonical(std::move(n), Permutation::identity(table().order()), Permutation::identity(ell_ + 1)); }

WElement DiagonalSpace::from_phi(Permutation phi) const
{ return {std::vector<Elem>(ell_ + 1, table().identity()), std::move(phi), Permutation::identity(ell_ + 1)}; }

WElement DiagonalSpace::from_sigma(Permutation sigma) const
{
  return {std::vector<Elem>(ell_ + 1, table().identity()), Permutation::identity(table().order()),
          std::move(sigma)};
}

// (n a)(n' a') = n n'^(a^-1) a a' with a = phi sigma; sigma and phi commute.
WElement DiagonalSpace::compose(WElement const &v, WElement const &w) const
{
  Permutation const phi_inv = diagcover::inverse(v.phi);
  std::vector<Elem> base(ell_ + 1);
  for (Point j = 0; j <= ell_; ++j)
    base[j] = table().mul(v.base[j], phi_inv[w.base[v.sigma[j]]]);
  return canonical(std::move(base), diagcover::compose(v.phi, w.phi),
                   diagcover::compose(v.sigma, w.sigma));
}

// (n a)^-1 = (n^-1)^a a^-1
WElement DiagonalSpace::inverse(WElement const &w) const
{
  std::vector<Elem> inv_base(ell_ + 1);
  for (unsigned j = 0; j <= ell_; ++j)
    inv_base[j] = w.phi[table().inv(w.base[j])];
  return canonical(permute_positions(inv_base, w.sigma), diagcover::inverse(w.phi),
                   diagcover::inverse(w.sigma));
}

WElement DiagonalSpace::conjugate(WElement const &w, WElement const &z) const
{ return compose(compose(inverse(z), w), z); }

Permutation DiagonalSpace::to_permutation(WElement const &w) const
{
  std::uint64_t const size = omega_size();
  std::vector<Point> images(size);
  for (std::uint64_t x = 0; x < size; ++x)
    images[x] = static_cast<Point>(point_index(act_w(point_at(x), w)));
  return Permutation(std::move(images));
}

DiagonalSpace::Projections DiagonalSpace::projections(WElement const &w) const
{
  auto const &carrier = aut().carrier;
  Elem label = carrier.require_index(w.phi);
  auto const &inner = aut().inner_image.members;
  for (auto i = inner.find_first(); i != ElementSet::npos; i = inner.find_next(i))
    label = std::min(label, carrier.require_index(diagcover::compose(carrier.element(i), w.phi)));
  return {label, w.sigma};
}

WBuild build_w(DiagonalSpace const &space, std::uint64_t omega_cap, std::size_t order_cap)
{
  if (space.omega_size() > omega_cap)
    throw CapExceeded("|Omega| = " + std::to_string(space.omega_size()) + " exceeds cap " +
                      std::to_string(omega_cap));
  auto const &T = space.aut().base;
  unsigned const ell = space.ell();

  WBuild out;
  std::vector<WElement> socle_gens;
  for (auto const &s : T.generators()) {
    Elem idx = T.require_index(s);
    for (unsigned j = 0; j <= ell; ++j) {
      std::vector<Elem> base(ell + 1, 0);
      base[j] = idx;
      socle_gens.push_back(space.from_base(std::move(base)));
    }
  }
  out.generators = socle_gens;
  for (auto const &phi : space.aut().carrier.generators())
    out.generators.push_back(space.from_phi(phi));
  std::vector<Point> cycle(ell + 1);
  std::iota(cycle.begin(), cycle.end(), Point{0});
  out.generators.push_back(space.from_sigma(Permutation::from_cycles(ell + 1, {{0, 1}})));
  if (ell > 1)
    out.generators.push_back(space.from_sigma(Permutation::from_cycles(ell + 1, {cycle})));

  std::vector<Permutation> perms;
  for (auto const &w : out.generators)
    perms.push_back(space.to_permutation(w));
  out.group = PermGroup(space.omega_size(), perms);
  out.group.materialize(order_cap);

  Point const base_index = static_cast<Point>(space.point_index(space.base_point()));
  ElementSet fixing(out.group.order());
  for (std::size_t x = 0; x < out.group.order(); ++x)
    if (out.group.element(x)[base_index] == base_index)
      fixing.set(x);
  out.stabilizer = subgroup_from_members(out.group, fixing);

  std::vector<Permutation> socle_perms(perms.begin(), perms.begin() + socle_gens.size());
  out.socle = subgroup(out.group, socle_perms);
  ElementSet socle_fixing = out.socle.members & fixing;
  out.socle_stabilizer = subgroup_from_members(out.group, socle_fixing);
  return out;
}

bool is_primitive(std::size_t degree, std::vector<Permutation> const &generators)
{
  if (degree <= 1)
    return true;
  if (orbits(degree, generators).size() != 1)
    return false;
  for (Point j = 1; j < degree; ++j) {
    // Finest block system in which 0 and j share a block.
    std::vector<Point> parent(degree);
    std::iota(parent.begin(), parent.end(), Point{0});
    auto find = [&](Point x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<Point, Point>> queue{{0, j}};
    parent[j] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (auto const &g : generators) {
        Point a = find(g[queue[i].first]);
        Point b = find(g[queue[i].second]);
        if (a != b) {
          parent[b] = a;
          queue.emplace_back(a, b);
        }
      }
    Point root = find(0);
    for (Point x = 0; x < degree; ++x)
      if (find(x) != root)
        return false;
  }
  return true;
}

bool is_diagonal_primitive(unsigned ell, std::vector<WElement> const &generators)
{
  if (ell == 1)
    return true;
  std::vector<Permutation> sigmas;
  for (auto const &w : generators) {
    if (w.sigma.degree() != ell + 1)
      throw ValidationError("sigma must act on ell+1 points");
    sigmas.push_back(w.sigma);
  }
  return is_primitive(ell + 1, sigmas);
}

} // namespace diagcover
