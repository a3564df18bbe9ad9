#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cires/cache.hpp"
#include "cires/cli.hpp"
#include "cires/io.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cires;
namespace fs = std::filesystem;

namespace {

const char* kResidueField =
    R"({"characteristic":32003,"variables":["x","y"],"ci":["x^2","y^2"],"module":{"matrix":[["x","y"]]}})";

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("cires_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_input(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse the residue field input") {
  InputSpec s = parse_input(kResidueField);
  CHECK(s.characteristic == 32003);
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(s.presentation);
  CHECK(s.presentation->rows() == 1);
  CHECK(s.presentation->cols() == 2);
  CHECK(s.algebra->codim() == 2);
}

TEST_CASE("input errors name the field") {
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2","x*y"]})").find("regular sequence") !=
        std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2","x*y"]})").find("Hilbert numerator") !=
        std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2","y^^2"]})").find("/ci/1") != std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"module":{"matrix":[["x","y^2"]],"row_twists":[0]}})")
            .find("/module/matrix") == std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"module":{"matrix":[["x+y^2"]]}})")
            .find("/module/matrix") != std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"extra":1})").find("extra") != std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"]})").find("/ci") != std::string::npos);
  CHECK(error_of("{\"variables\":[\"x\"],\n \"ci\": [\"x^2\",]}").find("line 2") != std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"module":{"matrix":[["x"],["x","y"]]}})")
            .find("unequal") != std::string::npos);
}

TEST_CASE("ring-only input is accepted") {
  InputSpec s = parse_input(R"({"variables":["x","y"],"ci":["x^3","y^2"]})");
  CHECK_FALSE(s.presentation);
  TempDir t;
  auto f = t.write("ring.json", R"({"variables":["x","y"],"ci":["x^3","y^2"]})");
  Run r = cli({"hilbert", f.string(), "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"h\": [\n    1,\n    2,\n    2,\n    1\n  ]") != std::string::npos);
  CHECK(cli({"resolve", f.string(), "--no-cache"}).code == 2);
}

TEST_CASE("canonical serialization is idempotent") {
  const char* messy =
      R"({ "ci" : ["y^2", " x^2 "], "variables":["x","y"], "module":{"matrix":[["y+x", "2*x - x"]]},
         "parameters": {"length": 8, "seed": 3}})";
  InputSpec a = parse_input(messy);
  std::string once = canonical_serialization(a);
  InputSpec b = parse_input(once);
  CHECK(canonical_serialization(b) == once);
  CHECK(content_hash(a) == content_hash(b));
  CHECK(b.module->matrix[0][0] == "x+y");
  CHECK(b.module->matrix[0][1] == "x");
  CHECK(content_hash(parse_input(kResidueField)) != content_hash(a));
}

TEST_CASE("resolve CSV for the residue field") {
  TempDir t;
  auto f = t.write("k.json", kResidueField);
  Run r = cli({"resolve", f.string(), "--length", "10", "--no-cache"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "i,beta_i,ord_partial_i");
  std::getline(lines, line);
  CHECK(line == "0,1,inf");
  for (int i = 1; i <= 10; ++i) {
    std::getline(lines, line);
    CHECK(line == std::to_string(i) + "," + std::to_string(i + 1) + ",1");
  }
}

TEST_CASE("verify exit codes") {
  TempDir t;
  auto f = t.write("k.json", kResidueField);
  Run main = cli({"verify", "main", f.string(), "--length", "12", "--window", "6", "--no-cache"});
  CHECK(main.code == 0);
  CHECK(main.out.find("\"pass\": true") != std::string::npos);
  CHECK(cli({"verify", "cx1", f.string(), "--no-cache"}).code == 2);
  CHECK(cli({"verify", "nonsense", f.string(), "--no-cache"}).code == 2);
  CHECK(cli({"frobnicate", f.string()}).code == 2);
  CHECK(cli({"resolve", (t.path / "missing.json").string()}).code == 2);
  CHECK(cli({"--version"}).code == 0);

  // phi = (x) for f = x^3 has ord 1 < 2, so equality at odd indices fails.
  auto low = t.write("low.json", R"({"variables":["x","y"],"ci":["x^3","y^2"],"mf":{"f":"x^3","phi":[["x"]]}})");
  Run sharp = cli({"verify", "sharpness", low.string(), "--length", "6", "--no-cache"});
  CHECK(sharp.code == 1);
  CHECK(sharp.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("cache hit, corruption and version stamp") {
  TempDir t;
  auto f = t.write("k.json", kResidueField);
  auto cache = (t.path / "cache").string();
  Run first = cli({"verify", "minors", f.string(), "--length", "8", "--window", "3", "--cache-dir", cache});
  Run second = cli({"verify", "minors", f.string(), "--length", "8", "--window", "3", "--cache-dir", cache});
  Run off = cli({"verify", "minors", f.string(), "--length", "8", "--window", "3", "--no-cache"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out == off.out);
  std::vector<fs::path> entries;
  for (const auto& e : fs::recursive_directory_iterator(cache))
    if (e.is_regular_file()) entries.push_back(e.path());
  REQUIRE(entries.size() == 1);

  std::ofstream(entries[0]) << "{\"version\": 1";
  Run third = cli({"verify", "minors", f.string(), "--length", "8", "--window", "3", "--cache-dir", cache});
  CHECK(third.out == first.out);
  CHECK(third.err.find("warning") != std::string::npos);

  std::ostringstream warn;
  ResultCache v1(cache, "v1", &warn), v2(cache, "v2", &warn);
  v1.put("abcdef", {"artifact", 1});
  REQUIRE(v1.get("abcdef"));
  CHECK(v1.get("abcdef")->artifact == "artifact");
  CHECK(v1.get("abcdef")->exit_code == 1);
  CHECK_FALSE(v2.get("abcdef"));
  CHECK(warn.str().empty());
  std::string text = slurp(v1.entry_path("abcdef"));
  auto pos = text.find("\"artifact\":\"artifact\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 21, "\"artifact\":\"tampered\"");
  std::ofstream(v1.entry_path("abcdef")) << text;
  CHECK_FALSE(v1.get("abcdef"));
  CHECK(warn.str().find("checksum") != std::string::npos);
}

TEST_CASE("out directory artifacts are byte-identical across runs") {
  TempDir t;
  auto f = t.write("k.json", kResidueField);
  auto a = (t.path / "a").string(), b = (t.path / "b").string();
  CHECK(cli({"operators", f.string(), "--out", a, "--seed", "4", "--no-cache"}).code == 0);
  CHECK(cli({"operators", f.string(), "--out", b, "--seed", "4", "--no-cache"}).code == 0);
  CHECK(fs::exists(fs::path(a) / "k.operators.json"));
  CHECK(slurp(fs::path(a) / "k.operators.json") == slurp(fs::path(b) / "k.operators.json"));
  CHECK(cli({"verify", "section", f.string(), "--out", a, "--length", "10", "--window", "5", "--seed", "9",
             "--no-cache"})
            .code == 0);
  CHECK(cli({"verify", "section", f.string(), "--out", b, "--length", "10", "--window", "5", "--seed", "9",
             "--no-cache"})
            .code == 0);
  CHECK(slurp(fs::path(a) / "k.verify_section.json") == slurp(fs::path(b) / "k.verify_section.json"));
}

TEST_CASE("matrix factorization inputs") {
  InputSpec s = parse_input(R"({"variables":["x","y"],"ci":["x^2+y^2"],"mf":{"f":"x^2+y^2","phi":[["x","y"],["-y","x"]]}})");
  REQUIRE(s.factorization);
  CHECK(s.factorization->psi == testutil::M(s.ring, {{"x", "-y"}, {"y", "x"}}, {1, 1}));
  InputSpec u = parse_input(R"({"variables":["x","y"],"ci":["x^3","y^2"],"ulrich":{"kind":"product"}})");
  REQUIRE(u.factorization);
  CHECK(u.factorization->phi.at(0, 0).to_string() == "x^2");
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"mf":{"f":"x^2","phi":[["x"]],"psi":[["y"]]}})")
            .find("/mf") != std::string::npos);
  CHECK(error_of(R"({"variables":["x","y"],"ci":["x^2"],"ulrich":{"kind":"spiral"}})").find("/ulrich/kind") !=
        std::string::npos);
}
