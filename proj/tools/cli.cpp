#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diagcover/catalog.hpp"
#include "diagcover/cover.hpp"
#include "diagcover/diagonal.hpp"
#include "diagcover/errors.hpp"
#include "diagcover/example_group.hpp"
#include "diagcover/formats.hpp"
#include "diagcover/lemma_lab.hpp"

namespace diagcover::cli {

namespace {

using nlohmann::json;

struct Options {
  std::size_t cap = kDefaultMaterializeCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
  bool json = false;
  std::string out_path;
};

std::size_t default_cap()
{
  if (char const *env = std::getenv("DIAGCOVER_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (std::exception const &) {
      throw ValidationError("DIAGCOVER_CAP is not a number");
    }
  }
  return kDefaultMaterializeCap;
}

struct LoadedGroup {
  PermGroup group;
  std::string label;
};

// A .json path is read as a group file; anything else is a catalog specifier.
LoadedGroup load_group(std::string const &source, std::size_t cap)
{
  namespace fs = std::filesystem;
  if (source.size() > 5 && source.substr(source.size() - 5) == ".json") {
    std::ifstream in{fs::path(source)};
    if (!in)
      throw ValidationError("cannot read group file " + source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto file = parse_group_file(buffer.str());
    PermGroup G(file.degree, std::move(file.generators));
    G.materialize(cap);
    return {std::move(G), file.name.value_or(fs::path(source).filename().string())};
  }
  return {make(source, cap), source};
}

void emit(Options const &opts, json const &cert, std::ostream &out)
{
  std::string text = dump_certificate(cert);
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file)
    throw ValidationError("cannot write " + opts.out_path);
  file << text;
}

void add_common(CLI::App *cmd, Options &opts)
{
  cmd->add_option("--cap", opts.cap, "Materialization cap (elements)");
  cmd->add_option("--lattice-cap", opts.lattice_cap, "Subgroup-lattice cap (group order)");
  cmd->add_flag("--json", opts.json, "Write a certificate JSON document");
  cmd->add_option("--out", opts.out_path, "Write JSON output to this file instead of stdout");
}

std::shared_ptr<AutAction const> load_aut(std::string const &T_source, Options const &opts)
{
  auto T = load_group(T_source, opts.cap);
  return std::make_shared<AutAction const>(automorphism_action(T.group));
}

Permutation pick_automorphism(AutAction const &aut, std::size_t index)
{
  if (index >= aut.carrier.order())
    throw ValidationError("automorphism index " + std::to_string(index) + " out of range (|Aut| = " +
                          std::to_string(aut.carrier.order()) + ")");
  return aut.carrier.element(index);
}

} // namespace

int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Finite permutation groups and normal coverings", "diagcover"};
  app.require_subcommand(1);
  Options opts;
  try {
    opts.cap = default_cap();
  } catch (ValidationError const &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  int status = kSuccess;
  std::function<void()> action;

  std::string group_source;

  auto *classes = app.add_subcommand("classes", "Conjugacy classes of a group");
  classes->add_option("group", group_source, "Group file (.grp.json) or specifier")->required();
  add_common(classes, opts);
  classes->callback([&] {
    action = [&] {
      auto [G, label] = load_group(group_source, opts.cap);
      auto table = conjugacy_classes(G);
      if (opts.json) {
        json body = json::array();
        for (auto const &c : table.classes)
          body.push_back({{"representative", emit_permutation(c.representative)},
                          {"size", c.size()},
                          {"element_order", c.element_order}});
        emit(opts, certificate("classes", group_json(G, label), body), out);
        return;
      }
      out << label << ": order " << G.order() << ", " << table.classes.size() << " classes\n";
      for (auto const &c : table.classes)
        out << "  " << emit_permutation(c.representative) << "  order " << c.element_order
            << "  size " << c.size() << "\n";
    };
  });

  auto *maximals = app.add_subcommand("maximals", "Conjugacy classes of maximal subgroups");
  maximals->add_option("group", group_source, "Group file (.grp.json) or specifier")->required();
  add_common(maximals, opts);
  maximals->callback([&] {
    action = [&] {
      auto [G, label] = load_group(group_source, opts.cap);
      auto reps = maximal_subgroups(G, opts.lattice_cap);
      if (opts.json) {
        json body = json::array();
        for (auto const &M : reps)
          body.push_back(subgroup_json(M));
        emit(opts, certificate("maximals", group_json(G, label), body), out);
        return;
      }
      out << label << ": " << reps.size() << " classes of maximal subgroups\n";
      for (auto const &M : reps) {
        out << "  order " << M.order << (M.is_normal ? " (normal)" : "") << "  <";
        for (std::size_t i = 0; i < M.generators.size(); ++i)
          out << (i ? ", " : "") << emit_permutation(M.generators[i]);
        out << ">\n";
      }
    };
  });

  auto *gamma_cmd = app.add_subcommand("gamma", "Exact normal covering number");
  gamma_cmd->add_option("group", group_source, "Group file (.grp.json) or specifier")->required();
  add_common(gamma_cmd, opts);
  gamma_cmd->callback([&] {
    action = [&] {
      auto [G, label] = load_group(group_source, opts.cap);
      auto result = gamma(G, opts.lattice_cap);
      if (opts.json) {
        emit(opts, certificate("gamma", group_json(G, label), gamma_json(result)), out);
        return;
      }
      out << "gamma = " << result.value << "\n";
      for (std::size_t i = 0; i < result.witness.components.size(); ++i) {
        auto const &H = result.witness.components[i];
        out << "  component " << i << ": order " << H.order << "  <";
        for (std::size_t k = 0; k < H.generators.size(); ++k)
          out << (k ? ", " : "") << emit_permutation(H.generators[k]);
        out << ">\n";
      }
      for (auto const &a : result.witness.assignments)
        out << "  class " << a.class_index << " " << emit_permutation(a.representative)
            << " -> component " << a.component << " via " << emit_permutation(a.conjugator) << "\n";
    };
  });

  std::vector<std::string> component_specs;
  auto *verify = app.add_subcommand("verify-cover", "Check a candidate normal covering");
  verify->add_option("group", group_source, "Group file (.grp.json) or specifier")->required();
  verify->add_option("-c,--component", component_specs,
                     "Component generators in cycle notation, separated by ';'")
      ->required();
  add_common(verify, opts);
  verify->callback([&] {
    action = [&] {
      auto [G, label] = load_group(group_source, opts.cap);
      std::vector<SubgroupRecord> components;
      for (auto const &spec : component_specs) {
        std::vector<Permutation> gens;
        std::stringstream ss(spec);
        std::string piece;
        while (std::getline(ss, piece, ';'))
          gens.push_back(parse_permutation(piece, G.degree()));
        components.push_back(subgroup(G, gens));
      }
      auto outcome = verify_normal_covering(G, components);
      auto const *cert = std::get_if<CoverCertificate>(&outcome);
      if (opts.json) {
        json body = cert ? cover_json(*cert) : failure_json(std::get<CoverFailure>(outcome));
        body["covers"] = cert != nullptr;
        emit(opts, certificate("cover", group_json(G, label), body), out);
      } else if (cert) {
        out << "normal covering verified: " << cert->assignments.size() << " classes assigned\n";
      } else {
        auto const &failure = std::get<CoverFailure>(outcome);
        out << "not a normal covering; uncovered classes:";
        for (auto const &r : failure.uncovered_representatives)
          out << " " << emit_permutation(r);
        out << "\n";
      }
      if (!cert)
        status = kPropertyFails;
    };
  });

  auto *basic = app.add_subcommand("is-basic", "gamma = 2 and every proper quotient has gamma > 2");
  basic->add_option("group", group_source, "Group file (.grp.json) or specifier")->required();
  add_common(basic, opts);
  basic->callback([&] {
    action = [&] {
      auto [G, label] = load_group(group_source, opts.cap);
      auto result = is_basic(G, opts.lattice_cap);
      if (opts.json) {
        emit(opts, certificate("basic", group_json(G, label), basic_json(result)), out);
      } else {
        out << label << (result.basic ? " is basic" : " is not basic") << "\n";
        out << "  gamma = " << (result.gamma ? std::to_string(*result.gamma) : "undefined (cyclic)")
            << "\n";
        for (auto const &ev : result.evidence)
          out << "  N of order " << ev.normal_subgroup.order << ": quotient order "
              << ev.quotient_order << ", gamma "
              << (ev.quotient_gamma ? std::to_string(*ev.quotient_gamma) : "infinite (cyclic)")
              << "\n";
      }
      if (!result.basic)
        status = kPropertyFails;
    };
  });

  std::string T_source = "A5";
  unsigned ell = 1;
  auto *diagonal = app.add_subcommand("diagonal", "Build the diagonal group W on Omega = N/D");
  diagonal->add_option("--T", T_source, "Non-abelian simple group T");
  diagonal->add_option("--ell", ell, "ell >= 1 (N = T^(ell+1))");
  add_common(diagonal, opts);
  diagonal->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      DiagonalSpace space(aut, ell);
      auto built = build_w(space, opts.cap, opts.cap);
      bool const ok = built.group.order() == space.predicted_w_order();
      json body = {{"omega_size", space.omega_size()},
                   {"order", built.group.order()},
                   {"predicted_order", space.predicted_w_order()},
                   {"stabilizer_order", built.stabilizer.order},
                   {"socle_order", built.socle.order},
                   {"socle_stabilizer_order", built.socle_stabilizer.order},
                   {"out_order", aut->out_order()}};
      if (opts.json) {
        emit(opts, certificate("diagonal", {{"T", T_source}, {"ell", ell}}, body), out);
      } else {
        out << "|Omega| = " << space.omega_size() << "\n"
            << "|W| = " << built.group.order() << " (predicted " << space.predicted_w_order()
            << ")\n"
            << "|W_omega0| = " << built.stabilizer.order << "\n"
            << "|N| = " << built.socle.order << ", |N_omega0| = " << built.socle_stabilizer.order
            << "\n";
      }
      if (!ok)
        status = kPropertyFails;
    };
  });

  auto *example = app.add_subcommand("example", "Groups H x| <sigma> with a normal 2-covering");
  example->require_subcommand(1);
  std::string U_choice = "aut";
  std::uint64_t p = 7, samples = 1000, seed = 0;
  auto *example_verify = example->add_subcommand("verify", "Sample and certify the covering");
  example_verify->add_option("--T", T_source, "Non-abelian simple group T");
  example_verify->add_option("--U", U_choice, "inn or aut")
      ->check(CLI::IsMember({"inn", "aut"}));
  example_verify->add_option("--p", p, "Prime coprime to |U|");
  example_verify->add_option("--samples", samples, "Number of sampled elements");
  example_verify->add_option("--seed", seed, "Sampling seed");
  add_common(example_verify, opts);
  example_verify->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      SubgroupRecord U = U_choice == "inn" ? aut->inner_image : subgroup(aut->carrier, aut->carrier.generators());
      ExampleGroup G(aut, U, p);
      auto cert = G.covering_certificate(samples, seed);
      std::size_t in_h = 0, in_k = 0, iff_ok = 0;
      for (auto const &s : cert.samples) {
        (s.tag == Component::H ? in_h : in_k) += 1;
        iff_ok += s.commutes_with_sigma == s.in_k;
      }
      if (opts.json) {
        json subject = {{"T", T_source},
                        {"U", U_choice},
                        {"p", p},
                        {"T_order", aut->base.order()},
                        {"U_order", U.order},
                        {"carrier_order", aut->carrier.order()}};
        emit(opts, certificate("example", subject, example_json(cert), seed), out);
      } else {
        out << "verified " << cert.samples.size() << " samples (seed " << seed << "): " << in_h
            << " in H, " << in_k << " conjugated into K\n";
      }
      if (iff_ok != cert.samples.size())
        status = kPropertyFails;
    };
  });

  auto *lemma = app.add_subcommand("lemma", "Executable oracles for the structural lemmas");
  lemma->require_subcommand(1);
  std::optional<std::size_t> phi_index;
  std::uint64_t a = 2, q = 32, lp = 5;
  std::size_t t_index = 0;

  auto report_status = [&](bool holds) {
    if (!holds)
      status = kPropertyFails;
  };

  auto *twist = lemma->add_subcommand("twist", "y -> y^-1 y^phi is never bijective");
  twist->add_option("--T", T_source, "Non-abelian simple group T");
  twist->add_option("--phi", phi_index, "Automorphism index (default: all)");
  add_common(twist, opts);
  twist->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      json reports = json::array();
      bool holds = true;
      std::size_t first = phi_index.value_or(0);
      std::size_t last = phi_index ? first + 1 : aut->carrier.order();
      for (std::size_t i = first; i < last; ++i) {
        auto r = twist_map_report(*aut, pick_automorphism(*aut, i));
        holds = holds && !r.is_bijective;
        json entry = map_report_json(r);
        entry["phi"] = i;
        reports.push_back(entry);
        if (!opts.json)
          out << "phi " << i << ": image " << r.image_size << "/" << r.domain_size
              << ", |C_T(phi)| = " << r.fixed_point_count << (r.is_bijective ? " BIJECTIVE" : "")
              << "\n";
      }
      if (opts.json)
        emit(opts, certificate("lemma", {{"lemma", "twist"}, {"T", T_source}}, reports), out);
      report_status(holds);
    };
  });

  auto *power_twist = lemma->add_subcommand("power-twist", "y -> (y phi)^a phi^-a");
  power_twist->add_option("--T", T_source, "Non-abelian simple group T");
  power_twist->add_option("--phi", phi_index, "Automorphism index")->required();
  power_twist->add_option("--a", a, "Exponent a >= 1");
  add_common(power_twist, opts);
  power_twist->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      auto r = power_twist_report(*aut, pick_automorphism(*aut, *phi_index), a);
      if (opts.json)
        emit(opts,
             certificate("lemma", {{"lemma", "power-twist"}, {"T", T_source}, {"phi", *phi_index}, {"a", a}},
                         map_report_json(r)),
             out);
      else
        out << "image " << r.image_size << "/" << r.domain_size
            << (r.is_bijective ? ", bijective" : ", not bijective") << "\n";
    };
  });

  auto *probe = lemma->add_subcommand("probe", "y -> y^-1 y^(phi^a)");
  probe->add_option("--T", T_source, "Non-abelian simple group T");
  probe->add_option("--phi", phi_index, "Automorphism index")->required();
  probe->add_option("--a", a, "Exponent a");
  add_common(probe, opts);
  probe->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      auto r = fixed_cell_contradiction_probe(*aut, pick_automorphism(*aut, *phi_index), a);
      if (opts.json)
        emit(opts,
             certificate("lemma", {{"lemma", "probe"}, {"T", T_source}, {"phi", *phi_index}, {"a", a}},
                         map_report_json(r)),
             out);
      else
        out << "image " << r.image_size << "/" << r.domain_size << ", fixed " << r.fixed_point_count
            << (r.is_bijective ? ", bijective" : ", not bijective") << "\n";
      report_status(!r.is_bijective);
    };
  });

  auto *tower = lemma->add_subcommand("tower", "C_T(phi) < C_T(phi^p) for the Frobenius of PSL2(q)");
  tower->add_option("--q", q, "Prime power r^f, f > 1");
  tower->add_option("--p", lp, "Prime dividing f, coprime to |PSL2(q)|");
  add_common(tower, opts);
  tower->callback([&] {
    action = [&] {
      auto r = centralizer_tower_check(q, lp, opts.cap);
      if (opts.json) {
        emit(opts, certificate("lemma", {{"lemma", "tower"}, {"q", q}, {"p", lp}}, tower_json(r)), out);
      } else {
        out << "|PGammaL2(" << q << ")| = " << r.group_order << ", |T| = " << r.t_order
            << ", Frobenius order " << r.frobenius_order << "\n";
        for (auto const &s : r.steps)
          out << "  phi of order " << s.phi_order << ": |C_T(phi)| = " << s.centralizer_order
              << ", |C_T(phi^p)| = " << s.centralizer_of_power_order
              << (s.strict ? " (strict)" : " (EQUAL)") << "\n";
      }
      report_status(r.holds);
    };
  });

  std::string L_source = "S4";
  std::string C_gens;
  auto *cyclic = lemma->add_subcommand("cyclic-regular", "Full cycles conjugate into a cyclic regular subgroup");
  cyclic->add_option("--L", L_source, "Primitive group L");
  cyclic->add_option("--C", C_gens, "Generators of C separated by ';' (default: (0 1 ... n-1))");
  add_common(cyclic, opts);
  cyclic->callback([&] {
    action = [&] {
      auto [L, label] = load_group(L_source, opts.cap);
      std::vector<Permutation> gens;
      if (C_gens.empty()) {
        std::vector<Point> cycle(L.degree());
        for (Point x = 0; x < cycle.size(); ++x)
          cycle[x] = x;
        gens.push_back(Permutation::from_cycles(L.degree(), {cycle}));
      } else {
        std::stringstream ss(C_gens);
        std::string piece;
        while (std::getline(ss, piece, ';'))
          gens.push_back(parse_permutation(piece, L.degree()));
      }
      auto r = cyclic_regular_check(L, subgroup(L, gens));
      if (opts.json)
        emit(opts, certificate("lemma", {{"lemma", "cyclic-regular"}, {"L", label}}, cyclic_regular_json(r)),
             out);
      else
        out << label << ": " << r.full_cycles << " full cycles, " << r.conjugated
            << " conjugated into C, " << r.failures.size() << " failures\n";
      report_status(r.failures.empty());
    };
  });

  auto *recursion = lemma->add_subcommand("recursion", "Replay the t_i recursion for one cycle");
  recursion->add_option("--T", T_source, "Non-abelian simple group T");
  recursion->add_option("--phi", phi_index, "Automorphism index")->required();
  recursion->add_option("--a", a, "Cycle length a >= 2");
  recursion->add_option("--t", t_index, "Element index of t_{a-1} in T");
  add_common(recursion, opts);
  recursion->callback([&] {
    action = [&] {
      auto aut = load_aut(T_source, opts);
      auto r = recursion_replay(aut, pick_automorphism(*aut, *phi_index), a, static_cast<Elem>(t_index));
      bool const holds = r.coordinates_equal && r.lands_in_stabilizer && r.t == r.t_closed_form;
      if (opts.json)
        emit(opts,
             certificate("lemma",
                         {{"lemma", "recursion"}, {"T", T_source}, {"phi", *phi_index}, {"a", a}, {"t", t_index}},
                         recursion_json(r)),
             out);
      else
        out << "t = " << r.t << " (closed form " << r.t_closed_form << "), coordinates "
            << (r.coordinates_equal ? "equal" : "NOT equal") << ", "
            << (r.lands_in_stabilizer ? "lands in W_omega0" : "misses W_omega0") << "\n";
      report_status(holds);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (action)
      action();
  } catch (CapExceeded const &e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (ValidationError const &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (VerificationFailure const &e) {
    err << "verification failed: " << e.what() << "\n";
    return kPropertyFails;
  }
  return status;
}

} // namespace diagcover::cli
