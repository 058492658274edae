#include "diagcover/example_group.hpp"

#include <random>
#include <tuple>

#include "diagcover/errors.hpp"

namespace diagcover {

std::string to_string(Component c) { return c == Component::H ? "H" : "K"; }

ExampleGroup::ExampleGroup(std::shared_ptr<AutAction const> aut, SubgroupRecord U, std::uint64_t p)
: aut_(std::move(aut)), U_(std::move(U)), p_(static_cast<std::uint32_t>(p))
{
  if (!aut_)
    throw ValidationError("missing automorphism action");
  if (!is_prime(p))
    throw ValidationError(std::to_string(p) + " is not prime");
  auto const &T = aut_->base;
  if (is_abelian(T) || normal_subgroups(T).size() != 2)
    throw ValidationError("T not simple (or abelian)");
  if (U_.members.size() != aut_->carrier.order())
    throw ValidationError("U is not a subgroup of the automorphism carrier");
  if (!aut_->inner_image.members.is_subset_of(U_.members))
    throw ValidationError("U does not contain Inn(T)");
  if (U_.order % p == 0)
    throw ValidationError("p divides |U|");

  table_ = GroupTable(aut_->carrier, aut_->carrier.order());
  for (auto i = U_.members.find_first(); i != ElementSet::npos; i = U_.members.find_next(i))
    u_members_.push_back(static_cast<Elem>(i));
  auto const &inner = aut_->inner_image.members;
  for (auto i = inner.find_first(); i != ElementSet::npos; i = inner.find_next(i))
    inner_members_.push_back(static_cast<Elem>(i));

  inner_coset_.assign(aut_->carrier.order(), -1);
  for (Elem u : u_members_) {
    if (inner_coset_[u] >= 0)
      continue;
    for (Elem t : inner_members_)
      inner_coset_[table_.mul(t, u)] = u;
  }
}

GElement ExampleGroup::identity() const { return {std::vector<Elem>(p_, table_.identity()), 0}; }

GElement ExampleGroup::sigma() const { return {std::vector<Elem>(p_, table_.identity()), 1 % p_}; }

bool ExampleGroup::is_valid(GElement const &g) const
{
  if (g.coords.size() != p_ || g.k >= p_)
    return false;
  for (Elem x : g.coords)
    if (x >= inner_coset_.size() || inner_coset_[x] < 0 || inner_coset_[x] != inner_coset_[g.coords[0]])
      return false;
  return true;
}

// (m, i)(n, j) = (m * n^(sigma^-i), i + j) where n^(sigma^-1) rotates right.
GElement ExampleGroup::multiply(GElement const &a, GElement const &b) const
{
  GElement out{std::vector<Elem>(p_), (a.k + b.k) % p_};
  for (std::uint32_t r = 0; r < p_; ++r)
    out.coords[r] = table_.mul(a.coords[r], b.coords[(r + p_ - a.k) % p_]);
  return out;
}

GElement ExampleGroup::inverse(GElement const &a) const
{
  GElement out{std::vector<Elem>(p_), (p_ - a.k) % p_};
  for (std::uint32_t r = 0; r < p_; ++r)
    out.coords[r] = table_.inv(a.coords[(r + a.k) % p_]);
  return out;
}

GElement ExampleGroup::power(GElement const &a, std::uint64_t exponent) const
{
  GElement result = identity();
  GElement base = a;
  while (exponent > 0) {
    if (exponent & 1u)
      result = multiply(result, base);
    base = multiply(base, base);
    exponent >>= 1u;
  }
  return result;
}

GElement ExampleGroup::conjugate(GElement const &g, GElement const &z) const
{ return multiply(multiply(inverse(z), g), z); }

std::uint64_t ExampleGroup::order(GElement const &a) const
{
  GElement const e = identity();
  std::uint64_t const bound = U_.order * p_;
  GElement x = a;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (x == e)
      return n;
    x = multiply(x, a);
  }
  throw VerificationFailure("element order exceeds |U| * p");
}

bool ExampleGroup::in_K(GElement const &g) const
{
  for (Elem x : g.coords)
    if (x != g.coords.front())
      return false;
  return true;
}

ComponentAssignment ExampleGroup::conjugate_into_component(GElement const &g) const
{
  if (!is_valid(g))
    throw ValidationError("element is not in G");
  if (g.k == 0)
    return {Component::H, identity()};

  std::uint64_t const q = order(g);
  GElement const e = power(g, q / p_);
  std::uint32_t const j = e.k;
  if (j == 0)
    throw VerificationFailure("p-part of an element outside H lies in H");

  // e^b = sigma^j  <=>  b_r = c_r * b_(r-j); walk the single j-cycle from b_0 = 1.
  GElement b{std::vector<Elem>(p_, table_.identity()), 0};
  for (std::uint32_t m = 1; m < p_; ++m) {
    std::uint32_t const pos = static_cast<std::uint32_t>((std::uint64_t{m} * j) % p_);
    std::uint32_t const prev = static_cast<std::uint32_t>((std::uint64_t{m - 1} * j) % p_);
    b.coords[pos] = table_.mul(e.coords[pos], b.coords[prev]);
  }

  GElement target = identity();
  target.k = j;
  if (!is_valid(b) || conjugate(e, b) != target)
    throw VerificationFailure("conjugator does not carry the p-part onto a power of sigma");
  if (!in_K(conjugate(g, b)))
    throw VerificationFailure("conjugated element is not in K");
  return {Component::K, std::move(b)};
}

std::pair<bool, bool> ExampleGroup::commutes_with_sigma_iff_in_K(GElement const &g) const
{
  GElement const s = sigma();
  return {multiply(g, s) == multiply(s, g), in_K(g)};
}

GElement ExampleGroup::sample(std::uint64_t seed, std::uint64_t index) const
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  auto draw = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  Elem const u = u_members_[draw(u_members_.size())];
  GElement g{std::vector<Elem>(p_), 0};
  for (auto &x : g.coords)
    x = table_.mul(inner_members_[draw(inner_members_.size())], u);
  g.k = static_cast<std::uint32_t>(draw(p_));
  return g;
}

ExampleCertificate ExampleGroup::covering_certificate(std::uint64_t samples, std::uint64_t seed) const
{
  ExampleCertificate cert;
  cert.seed = seed;
  cert.samples.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    ExampleSample s;
    s.index = i;
    s.element = sample(seed, i);
    auto assignment = conjugate_into_component(s.element);
    s.tag = assignment.tag;
    s.conjugator = std::move(assignment.conjugator);
    s.conjugated = conjugate(s.element, s.conjugator);
    std::tie(s.commutes_with_sigma, s.in_k) = commutes_with_sigma_iff_in_K(s.element);
    bool const lands = s.tag == Component::H ? in_H(s.conjugated) : in_K(s.conjugated);
    if (!lands)
      throw VerificationFailure("sample " + std::to_string(i) + " failed re-verification");
    cert.samples.push_back(std::move(s));
  }
  return cert;
}

} // namespace diagcover
