// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "diagcover/catalog.hpp"
#include "diagcover/cover.hpp"
#include "diagcover/diagonal.hpp"
#include "diagcover/errors.hpp"
#include "diagcover/example_group.hpp"
#include "diagcover/lemma_lab.hpp"
#include "oracles.hpp"

using namespace diagcover;

namespace {

struct Check {
  std::string detail;
  bool ok = true;

  void expect(bool condition, std::string const &what)
  {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool run_criterion(int number, char const *title, double limit_seconds, std::function<void(Check &)> body)
{
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (std::exception const &e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds <= limit_seconds, "took " + std::to_string(seconds) + "s");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", seconds, limit_seconds);
  std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << " ["
            << timing << "]";
  if (!check.ok)
    std::cout << " -- " << check.detail;
  std::cout << std::endl;
  return check.ok;
}

std::set<oracle::Perm> oracle_group(PermGroup const &G)
{
  std::vector<oracle::Perm> gens;
  for (auto const &g : G.generators())
    gens.emplace_back(g.images().begin(), g.images().end());
  return oracle::closure(G.degree(), gens);
}

std::shared_ptr<AutAction const> aut_of(char const *spec)
{
  return std::make_shared<AutAction const>(automorphism_action(make(spec)));
}

void gamma_values(Check &c)
{
  for (auto [spec, expected] : std::vector<std::pair<char const *, unsigned>>{
           {"S3", 2}, {"S4", 2}, {"A5", 2}, {"V4", 3}}) {
    auto G = make(spec);
    auto result = gamma(G);
    c.expect(result.value == expected, std::string("gamma(") + spec + ") = " + std::to_string(result.value));
    c.expect(oracle::brute_gamma(oracle_group(G), 4) == result.value,
             std::string("oracle disagrees on ") + spec);
    c.expect(result.witness.components.size() == result.value, "witness size");
    for (auto const &H : result.witness.components)
      c.expect(H.is_maximal, std::string("non-maximal witness component for ") + spec);
    auto replay = verify_normal_covering(G, result.witness.components);
    c.expect(std::holds_alternative<CoverCertificate>(replay) && recheck(G, result.witness),
             std::string("witness for ") + spec + " does not verify");
  }
  for (unsigned n : {1u, 2u, 5u, 6u, 12u}) {
    bool raised = false;
    try {
      gamma(make("C" + std::to_string(n)));
    } catch (CyclicGroupError const &) {
      raised = true;
    }
    c.expect(raised, "C" + std::to_string(n) + " did not raise the cyclic error");
  }
}

void basic_groups(Check &c)
{
  auto A5 = is_basic(make("A5"));
  c.expect(A5.basic && A5.gamma == 2u, "A5 should be basic");
  auto G = make("S4");
  auto S4 = is_basic(G);
  c.expect(!S4.basic, "S4 should not be basic");
  bool witness = false;
  for (auto const &ev : S4.evidence)
    witness |= ev.normal_subgroup.order == 4 && ev.quotient_order == 6 && ev.quotient_gamma == 2u &&
               !is_abelian(quotient(G, ev.normal_subgroup));
  c.expect(witness, "S4 evidence lacks N = V4 with quotient of order 6 and gamma 2");
}

void twist_maps(Check &c)
{
  for (auto [spec, count] : std::vector<std::pair<char const *, std::uint64_t>>{{"A5", 120}, {"A6", 1440}}) {
    auto aut = aut_of(spec);
    c.expect(aut->carrier.order() == count, std::string("|Aut(") + spec + ")| wrong");
    for (Elem i = 0; i < aut->carrier.order(); ++i) {
      auto const &phi = aut->carrier.element(i);
      auto r = twist_map_report(*aut, phi);
      std::uint64_t fixed = 0;
      for (Elem x = 0; x < aut->base.order(); ++x)
        fixed += phi[x] == x;
      c.expect(!r.is_bijective, std::string("bijective twist in Aut(") + spec + ")");
      c.expect(r.fixed_point_count == fixed && fixed >= 2, std::string("fixed points in Aut(") + spec + ")");
    }
  }
}

void cyclic_regular(Check &c)
{
  for (auto [spec, n] : std::vector<std::pair<char const *, std::size_t>>{
           {"AGL1:5", 5}, {"AGL1:7", 7}, {"S4", 4}, {"S5", 5}, {"A5", 5}, {"S6", 6}}) {
    auto L = make(spec);
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i)
      cyc[i] = static_cast<Point>(i);
    auto r = cyclic_regular_check(L, subgroup(L, {Permutation::from_cycles(n, {cyc})}));
    c.expect(r.failures.empty() && r.conjugated == r.full_cycles, std::string("failures in ") + spec);
  }
}

void diagonal_w(Check &c)
{
  auto aut = aut_of("A5");
  DiagonalSpace space(aut, 1);
  auto built = build_w(space);
  c.expect(space.omega_size() == 60, "|Omega| != 60");
  c.expect(built.group.order() == 14400, "|W| != 14400");
  c.expect(built.stabilizer.order == 240, "|W_omega0| != 240");
  for (Elem t = 0; t < 60; ++t)
    c.expect(space.to_permutation(space.from_base({t, t})) == space.to_permutation(space.from_phi(aut->inner(t))),
             "constant tuple differs from inner automorphism");
  std::mt19937_64 rng(2024);
  auto random_w = [&] {
    std::vector<Elem> base{static_cast<Elem>(rng() % 60), static_cast<Elem>(rng() % 60)};
    auto phi = aut->carrier.element(static_cast<Elem>(rng() % 120));
    auto sigma = rng() % 2 ? Permutation::from_cycles(2, {{0, 1}}) : Permutation::identity(2);
    return space.canonical(std::move(base), phi, sigma);
  };
  for (int i = 0; i < 10000; ++i) {
    auto u = random_w(), v = random_w(), w = random_w();
    auto pu = space.to_permutation(u), pv = space.to_permutation(v), pw = space.to_permutation(w);
    c.expect(space.to_permutation(space.compose(space.compose(u, v), w)) == pu * pv * pw,
             "composition is not a homomorphism");
  }
}

void example_covering(Check &c)
{
  auto aut = aut_of("A5");
  auto U = subgroup(aut->carrier, aut->carrier.generators());
  ExampleGroup G(aut, U, 7);
  auto cert = G.covering_certificate(1000, 1);
  c.expect(cert.samples.size() == 1000, "sample count");
  for (auto const &s : cert.samples) {
    auto image = G.conjugate(s.element, s.conjugator);
    c.expect(image == s.conjugated, "recorded conjugate is wrong");
    if (s.element.k == 0)
      c.expect(s.tag == Component::H && G.in_H(image), "k = 0 element not in H");
    else
      c.expect(s.tag == Component::K && G.in_K(image), "element not conjugated into K");
    auto commutes = G.multiply(s.element, G.sigma()) == G.multiply(G.sigma(), s.element);
    c.expect(commutes == s.commutes_with_sigma && commutes == G.in_K(s.element), "C_G(sigma) != K");
  }
  for (std::uint64_t p : {2u, 3u, 5u}) {
    bool rejected = false;
    try {
      ExampleGroup bad(aut, U, p);
    } catch (ValidationError const &) {
      rejected = true;
    }
    c.expect(rejected, "p = " + std::to_string(p) + " accepted");
  }
}

void tower(Check &c)
{
  auto r = centralizer_tower_check(32, 5);
  c.expect(r.t_order == 32736, "|T| != 32736");
  c.expect(!r.steps.empty() && r.steps[0].centralizer_order == 6, "|C_T(phi)| != 6");
  c.expect(!r.steps.empty() && r.steps[0].centralizer_of_power_order == 32736, "C_T(phi^5) != T");
  c.expect(r.holds, "tower does not hold");
}

void replay(Check &c)
{
  std::vector<std::vector<std::string>> commands{
      {"gamma", "A5", "--json"},
      {"is-basic", "S4", "--json"},
      {"verify-cover", "S4", "-c", "(0 1 2 3);(0 2)", "-c", "(0 1 2);(1 2 3)", "--json"},
      {"example", "verify", "--T", "A5", "--U", "aut", "--p", "7", "--samples", "1000", "--seed", "42", "--json"},
      {"lemma", "tower", "--q", "32", "--p", "5", "--json"},
      {"lemma", "cyclic-regular", "--L", "S5", "--json"},
  };
  for (auto args : commands) {
    args.insert(args.begin(), "diagcover");
    std::vector<char const *> argv;
    for (auto const &a : args)
      argv.push_back(a.c_str());
    std::string outputs[2];
    for (auto &text : outputs) {
      std::ostringstream out, err;
      int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
      c.expect(code == 0 || args[1] == "is-basic", args[1] + " exited with " + std::to_string(code));
      text = out.str();
    }
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], args[1] + " output differs between runs");
  }
}

} // namespace

int main()
{
  bool ok = true;
  ok &= run_criterion(1, "gamma of S3, S4, A5, V4 and the cyclic error", 5, gamma_values);
  ok &= run_criterion(2, "A5 basic, S4 not basic via S4/V4", 10, basic_groups);
  ok &= run_criterion(3, "twist map never bijective on Aut(A5), Aut(A6)", 60, twist_maps);
  ok &= run_criterion(4, "full cycles conjugate into cyclic regular subgroups", 60, cyclic_regular);
  ok &= run_criterion(5, "diagonal group W for T = A5, ell = 1", 120, diagonal_w);
  ok &= run_criterion(6, "normal 2-covering of (A5, Aut(A5), 7)", 60, example_covering);
  ok &= run_criterion(7, "centralizer tower in PGammaL2(32)", 120, tower);
  ok &= run_criterion(8, "certificate JSON replays byte for byte", 60, replay);
  return ok ? 0 : 1;
}
