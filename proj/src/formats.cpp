#include "diagcover/formats.hpp"

#include <cctype>
#include <charconv>

#include "diagcover/errors.hpp"

namespace diagcover {

using nlohmann::json;

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto malformed = [&](std::string const &why) {
    return ValidationError("malformed cycle string '" + std::string(text) + "': " + why);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(')
      throw malformed("expected '('");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i >= text.size())
        throw malformed("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{})
        throw malformed("expected a point");
      i = static_cast<std::size_t>(ptr - text.data());
      if (value >= degree)
        throw ValidationError("point " + std::to_string(value) + " out of range for degree " +
                              std::to_string(degree));
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string emit_permutation(Permutation const &p)
{
  auto cycles = cycle_decomposition(p);
  if (cycles.empty())
    return "()";
  std::string out;
  for (auto const &cycle : cycles) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k > 0)
        out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

GroupFile parse_group_file(std::string_view json_text)
{
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (json::exception const &e) {
    throw ValidationError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw ValidationError("group file needs 'degree' and 'generators'");
  if (!doc["degree"].is_number_unsigned() || !doc["generators"].is_array())
    throw ValidationError("group file has mistyped 'degree' or 'generators'");
  GroupFile file;
  file.degree = doc["degree"].get<std::size_t>();
  if (file.degree < 1)
    throw ValidationError("degree must be positive");
  for (auto const &g : doc["generators"]) {
    if (!g.is_string())
      throw ValidationError("generators must be cycle-notation strings");
    file.generators.push_back(parse_permutation(g.get<std::string>(), file.degree));
  }
  if (doc.contains("name") && doc["name"].is_string())
    file.name = doc["name"].get<std::string>();
  return file;
}

PermGroup parse_group(std::string_view json_text, std::size_t cap)
{
  auto file = parse_group_file(json_text);
  PermGroup G(file.degree, std::move(file.generators));
  G.materialize(cap);
  return G;
}

json group_json(PermGroup const &G, std::optional<std::string> const &name)
{
  json doc;
  doc["degree"] = G.degree();
  doc["generators"] = json::array();
  for (auto const &g : G.generators())
    doc["generators"].push_back(emit_permutation(g));
  if (name)
    doc["name"] = *name;
  return doc;
}

std::string emit_group(PermGroup const &G, std::optional<std::string> const &name)
{ return group_json(G, name).dump(2) + "\n"; }

json subgroup_json(SubgroupRecord const &S)
{
  json doc;
  doc["order"] = S.order;
  doc["is_maximal"] = S.is_maximal;
  doc["is_normal"] = S.is_normal;
  doc["generators"] = json::array();
  for (auto const &g : S.generators)
    doc["generators"].push_back(emit_permutation(g));
  return doc;
}

json cover_json(CoverCertificate const &cert)
{
  json doc;
  doc["components"] = json::array();
  for (auto const &c : cert.components)
    doc["components"].push_back(subgroup_json(c));
  doc["assignments"] = json::array();
  for (auto const &a : cert.assignments)
    doc["assignments"].push_back({{"class", a.class_index},
                                  {"representative", emit_permutation(a.representative)},
                                  {"component", a.component},
                                  {"conjugator", emit_permutation(a.conjugator)}});
  return doc;
}

json failure_json(CoverFailure const &failure)
{
  json doc;
  doc["uncovered_classes"] = failure.uncovered_classes;
  doc["uncovered_representatives"] = json::array();
  for (auto const &r : failure.uncovered_representatives)
    doc["uncovered_representatives"].push_back(emit_permutation(r));
  return doc;
}

json gamma_json(GammaResult const &result)
{ return {{"gamma", result.value}, {"witness", cover_json(result.witness)}}; }

json basic_json(BasicResult const &result)
{
  json doc;
  doc["basic"] = result.basic;
  doc["gamma"] = result.gamma ? json(*result.gamma) : json(nullptr);
  doc["evidence"] = json::array();
  for (auto const &ev : result.evidence)
    doc["evidence"].push_back(
        {{"normal_subgroup", subgroup_json(ev.normal_subgroup)},
         {"quotient_order", ev.quotient_order},
         {"quotient_gamma", ev.quotient_gamma ? json(*ev.quotient_gamma) : json("infinite")}});
  return doc;
}

json element_json(GElement const &g) { return {{"coords", g.coords}, {"k", g.k}}; }

json example_json(ExampleCertificate const &cert)
{
  json samples = json::array();
  for (auto const &s : cert.samples)
    samples.push_back({{"index", s.index},
                       {"element", element_json(s.element)},
                       {"tag", to_string(s.tag)},
                       {"conjugator", element_json(s.conjugator)},
                       {"conjugated", element_json(s.conjugated)},
                       {"commutes_with_sigma", s.commutes_with_sigma},
                       {"in_K", s.in_k}});
  return {{"samples", samples}};
}

json map_report_json(MapReport const &report)
{
  return {{"domain_size", report.domain_size},
          {"image_size", report.image_size},
          {"is_bijective", report.is_bijective},
          {"fixed_point_count", report.fixed_point_count}};
}

json tower_json(TowerReport const &report)
{
  json steps = json::array();
  for (auto const &s : report.steps)
    steps.push_back({{"phi_order", s.phi_order},
                     {"centralizer_order", s.centralizer_order},
                     {"centralizer_of_power_order", s.centralizer_of_power_order},
                     {"strict", s.strict}});
  return {{"q", report.q},         {"p", report.p},
          {"f", report.f},         {"group_order", report.group_order},
          {"t_order", report.t_order}, {"frobenius_order", report.frobenius_order},
          {"steps", steps},        {"holds", report.holds}};
}

json cyclic_regular_json(CyclicRegularReport const &report)
{
  json classes = json::array();
  for (auto const &c : report.classes)
    classes.push_back({{"representative", emit_permutation(c.representative)},
                       {"size", c.size},
                       {"meets_subgroup", c.meets_subgroup}});
  json failures = json::array();
  for (auto const &f : report.failures)
    failures.push_back(emit_permutation(f));
  return {{"degree", report.degree},
          {"full_cycles", report.full_cycles},
          {"conjugated", report.conjugated},
          {"classes", classes},
          {"failures", failures}};
}

json recursion_json(RecursionReplay const &replay)
{
  return {{"t_sequence", replay.t_sequence},
          {"t", replay.t},
          {"t_closed_form", replay.t_closed_form},
          {"coordinates", replay.coordinates},
          {"coordinates_equal", replay.coordinates_equal},
          {"lands_in_stabilizer", replay.lands_in_stabilizer}};
}

json certificate(std::string const &kind, json subject, json body, std::optional<std::uint64_t> seed)
{
  json doc;
  doc["artifact_version"] = kArtifactVersion;
  doc["kind"] = kind;
  doc["subject"] = std::move(subject);
  doc["body"] = std::move(body);
  if (seed)
    doc["seed"] = *seed;
  return doc;
}

std::string dump_certificate(json const &cert) { return cert.dump(2) + "\n"; }

} // namespace diagcover
