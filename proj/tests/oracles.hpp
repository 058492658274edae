#pragma once

// Slow reference implementations used to cross-check the library. They work on
// raw image vectors and share no code with the group engine.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

Perm identity(std::size_t n);
Perm mul(Perm const &p, Perm const &q); // apply p, then q
Perm inv(Perm const &p);
Perm conj(Perm const &g, Perm const &z); // z^-1 g z

// Naive closure: multiply until nothing new appears.
std::set<Perm> closure(std::size_t n, std::vector<Perm> const &gens);

// Classes by repeated conjugation; each class as a sorted set.
std::vector<std::set<Perm>> classes(std::set<Perm> const &G);

// Every subgroup generated by at most two elements.
std::set<std::set<Perm>> two_generated_subgroups(std::set<Perm> const &G);

// Every subgroup: two-generated subgroups closed under pairwise joins.
std::set<std::set<Perm>> all_subgroups(std::set<Perm> const &G);

// Minimum number of proper subgroups whose conjugates meet every conjugacy
// class, searched over all subgroups up to max_k; 0 if none found.
unsigned brute_gamma(std::set<Perm> const &G, unsigned max_k);

std::uint64_t factorial(unsigned n);

Perm random_perm(std::size_t n, std::mt19937_64 &rng);

} // namespace oracle
