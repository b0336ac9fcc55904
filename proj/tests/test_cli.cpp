#include "eqc/cli.hpp"
#include "eqc/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "eqcohom");
  std::ostringstream out;
  std::ostringstream err;
  const int code = eqc::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string diagram(const std::string& name) { return std::string(EQC_DIAGRAM_DIR) + "/" + name + ".diagram"; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("analyze example_n2") {
  const Run r = run({"analyze", diagram("example_n2"), "--max-degree", "40"});
  CHECK(r.code == eqc::kExitOk);
  CHECK(has_line(r.out, "basis degrees: 0 6"));
  CHECK(has_line(r.out, "hilbert: (1 + t^6) / (1-t^4)^2"));
  CHECK(has_line(r.out, "cross-checks: ok"));
  CHECK(r.err.empty());
}

TEST_CASE("check-formality example_n3") {
  const Run r = run({"check-formality", diagram("example_n3")});
  CHECK(r.code == eqc::kExitOk);
  CHECK(has_line(r.out, "equivariantly formal: no (max isotropy rank 2 < rank G 3)"));
}

TEST_CASE("kernel at max degree 0 is the constants") {
  for (const char* name : {"example_n1", "example_n2", "example_n3", "example_n4", "suspension_s4"}) {
    const Run r = run({"kernel", diagram(name), "--max-degree", "0", "--format", "json"});
    REQUIRE(r.code == eqc::kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    const auto& slices = j.at("kernel").at("slices");
    REQUIRE(slices.size() == 1);
    CHECK(slices[0].at("degree") == 0);
    CHECK(slices[0].at("dim") == 1);
  }
}

TEST_CASE("json output carries the schema version and the seed") {
  const Run r = run({"analyze", diagram("example_n1"), "--format", "json", "--seed", "17", "--max-degree", "16"});
  REQUIRE(r.code == eqc::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("schema_version") == eqc::kSchemaVersion);
  CHECK(j.at("command") == "analyze");
  CHECK(j.at("diagnostics").at("seed") == 17);
  CHECK(j.at("diagnostics").at("max_degree") == 16);
  CHECK_FALSE(j.at("diagnostics").contains("elapsed_ms"));

  const Run timed = run({"analyze", diagram("example_n1"), "--format", "json", "--timings", "--max-degree", "8"});
  CHECK(nlohmann::json::parse(timed.out).at("diagnostics").contains("elapsed_ms"));
}

TEST_CASE("text output is rendered from the structured report") {
  for (const char* cmd : {"analyze", "hilbert", "kernel", "check-formality", "basis"}) {
    const Run j = run({cmd, diagram("example_n2"), "--format", "json", "--max-degree", "20"});
    const Run t = run({cmd, diagram("example_n2"), "--max-degree", "20"});
    CHECK(t.out == eqc::render_text(nlohmann::ordered_json::parse(j.out)));
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", diagram("example_n2"), "--max-degree", "7"}).code == eqc::kExitInvalid);
  CHECK(run({"analyze", diagram("no_such_file")}).code == eqc::kExitInvalid);
  CHECK(run({"frobnicate", diagram("example_n2")}).code == eqc::kExitInvalid);
  CHECK(run({"analyze"}).code == eqc::kExitInvalid);
  CHECK(run({"analyze", diagram("example_n2"), "--format", "yaml"}).code == eqc::kExitInvalid);
  CHECK(run({"--help"}).code == eqc::kExitOk);

  const Run skew = run({"basis", std::string(EQC_FIXTURE_DIR) + "/skewed_embedding.diagram", "--max-degree", "20"});
  CHECK(skew.code == eqc::kExitCrossCheck);
  CHECK(skew.err.find("freeness search says NOT FREE") != std::string::npos);
}

TEST_CASE("validation errors list every problem on stderr") {
  const Run r = run({"analyze", std::string(EQC_FIXTURE_DIR) + "/bad_quotients.diagram"});
  CHECK(r.code == eqc::kExitInvalid);
  CHECK(r.out.empty());
  CHECK(r.err.find("invalid diagram") != std::string::npos);
  CHECK(r.err.find("K+/H annotated S^5") != std::string::npos);
  CHECK(r.err.find("P3 requires rank H = rank K - 1") != std::string::npos);
}

TEST_CASE("property: command-line flags override file options") {
  const Run file_default = run({"kernel", diagram("example_n2"), "--format", "json"});
  CHECK(nlohmann::json::parse(file_default.out).at("diagnostics").at("max_degree") == 40);
  const Run overridden = run({"kernel", diagram("example_n2"), "--format", "json", "--max-degree", "6"});
  CHECK(nlohmann::json::parse(overridden.out).at("diagnostics").at("max_degree") == 6);
}
