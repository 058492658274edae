#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args)
{
  args.insert(args.begin(), "diagcover");
  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = diagcover::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(std::string const &name)
{
  return std::filesystem::temp_directory_path() / ("diagcover_test_" + name);
}

} // namespace

TEST_CASE("exit codes")
{
  CHECK(run({"gamma", "S4"}).code == 0);
  CHECK(run({"gamma", "C6"}).code == 2);
  CHECK(run({"gamma", "Q8"}).code == 2);
  CHECK(run({"gamma", "S7"}).code == 3);
  CHECK(run({"gamma", "S4", "--cap", "10"}).code == 3);
  CHECK(run({"is-basic", "A5"}).code == 0);
  CHECK(run({"is-basic", "S4"}).code == 1);
  CHECK(run({"verify-cover", "S4", "-c", "(0 1 2);(1 2 3)"}).code == 1);
  CHECK(run({"verify-cover", "S4", "-c", "(0 1 2 3);(0 2)", "-c", "(0 1 2);(1 2 3)"}).code == 0);
  CHECK(run({"verify-cover", "S4", "-c", "(0 1 2 3"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"example", "verify", "--p", "5"}).code == 2);
  CHECK(run({"example", "verify", "--U", "bogus"}).code == 2);
  CHECK(run({"lemma", "tower", "--q", "8", "--p", "3"}).code == 2);
}

TEST_CASE("text output")
{
  auto r = run({"gamma", "A5"});
  CHECK(r.out.find("gamma = 2") != std::string::npos);
  r = run({"classes", "S3"});
  CHECK(r.out.find("3 classes") != std::string::npos);
  r = run({"diagonal", "--T", "A5", "--ell", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("|W| = 14400") != std::string::npos);
  r = run({"lemma", "cyclic-regular", "--L", "S5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
  r = run({"lemma", "twist", "--T", "A5", "--phi", "3"});
  CHECK(r.code == 0);
}

TEST_CASE("json output is replayable byte for byte")
{
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"gamma", "S4", "--json"},
           {"maximals", "A5", "--json"},
           {"is-basic", "S4", "--json"},
           {"example", "verify", "--T", "A5", "--p", "7", "--samples", "50", "--seed", "9", "--json"},
           {"lemma", "tower", "--q", "32", "--p", "5", "--json"},
           {"lemma", "recursion", "--T", "A5", "--phi", "3", "--a", "3", "--t", "4", "--json"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc.contains("artifact_version"));
    CHECK(doc.contains("kind"));
  }
}

TEST_CASE("group files and --out")
{
  auto grp = temp_file("s4.grp.json");
  {
    std::ofstream f(grp);
    f << R"j({"degree": 4, "generators": ["(0 1)", "(0 1 2 3)"], "name": "sym4"})j";
  }
  auto cert = temp_file("s4.cert.json");
  auto r = run({"gamma", grp.string(), "--json", "--out", cert.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(cert);
  auto doc = nlohmann::json::parse(in);
  CHECK(doc["body"]["gamma"] == 2);
  CHECK(doc["subject"]["name"] == "sym4");
  std::filesystem::remove(grp);
  std::filesystem::remove(cert);

  auto sym3 = temp_file("sym3.grp.json");
  auto c6 = temp_file("c6.grp.json");
  std::ofstream(sym3) << R"j({"degree": 3, "generators": ["(0 1)", "(0 1 2)"]})j";
  std::ofstream(c6) << R"j({"degree": 6, "generators": ["(0 1 2 3 4 5)"]})j";
  r = run({"gamma", sym3.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma = 2") != std::string::npos);
  CHECK(r.out.find("component 1") != std::string::npos);
  r = run({"gamma", c6.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("cyclic group: no normal covering exists") != std::string::npos);
  std::filesystem::remove(sym3);
  std::filesystem::remove(c6);
  CHECK(run({"gamma", temp_file("missing.json").string()}).code == 2);
}
