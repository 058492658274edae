#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "diagcover/cover.hpp"
#include "diagcover/example_group.hpp"
#include "diagcover/lemma_lab.hpp"

namespace diagcover {

inline constexpr char const *kArtifactVersion = "1.0.0";

// Cycle notation over 0-based points: "(0 1 2)(3 4)"; the identity is "()".
Permutation parse_permutation(std::string_view text, std::size_t degree);
std::string emit_permutation(Permutation const &p);

struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<std::string> name;
};

// .grp.json: {"degree": n, "generators": ["(0 1)", ...], "name": "..."}
GroupFile parse_group_file(std::string_view json_text);
PermGroup parse_group(std::string_view json_text, std::size_t cap = kDefaultMaterializeCap); // materialized
nlohmann::json group_json(PermGroup const &G, std::optional<std::string> const &name = std::nullopt);
std::string emit_group(PermGroup const &G, std::optional<std::string> const &name = std::nullopt);

nlohmann::json subgroup_json(SubgroupRecord const &S);
nlohmann::json cover_json(CoverCertificate const &cert);
nlohmann::json failure_json(CoverFailure const &failure);
nlohmann::json gamma_json(GammaResult const &result);
nlohmann::json basic_json(BasicResult const &result);
nlohmann::json element_json(GElement const &g);
nlohmann::json example_json(ExampleCertificate const &cert);
nlohmann::json map_report_json(MapReport const &report);
nlohmann::json tower_json(TowerReport const &report);
nlohmann::json cyclic_regular_json(CyclicRegularReport const &report);
nlohmann::json recursion_json(RecursionReplay const &replay);

// .cert.json container; keys are emitted in sorted order so output is byte-stable.
nlohmann::json certificate(std::string const &kind, nlohmann::json subject, nlohmann::json body,
                           std::optional<std::uint64_t> seed = std::nullopt);
std::string dump_certificate(nlohmann::json const &cert);

} // namespace diagcover
