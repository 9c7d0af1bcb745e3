// End-to-end checks of the installed binary: exit codes, JSON output,
// seed-determinism.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("NATEX_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "NATEX_BIN must point at the CLI binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) {
  const char* dir = std::getenv("NATEX_DATA");
  REQUIRE_MESSAGE(dir != nullptr, "NATEX_DATA must point at the fixture directory");
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("check: consistent file exits 0") {
  const auto r = run("check " + data("two_sided.json"));
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["answer"] == true);
  CHECK(j["evidence"]["kind"] == "coherent-selection");
}

TEST_CASE("check: inconsistent file exits 1 with a certificate") {
  const auto r = run("check " + data("inconsistent.json"));
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["answer"] == false);
  CHECK(j["evidence"]["kind"] == "inconsistency-certificate");
}

TEST_CASE("check: an empty member set exits 1") {
  const auto r = run("check " + data("empty_set.json"));
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["evidence"]["kind"] == "empty-set-in-assessment");
}

TEST_CASE("check: ragged file exits 2") {
  const auto r = run("check " + data("ragged.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("check: missing file exits 2") {
  const auto r = run("check " + data("no_such_file.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("query: verdicts come one per line, in input order") {
  const auto r = run("query " + data("queries.json"));
  REQUIRE(r.exit_code == 0);
  std::vector<nlohmann::json> lines;
  std::size_t start = 0;
  while (start < r.output.size()) {
    const auto end = r.output.find('\n', start);
    if (end == std::string::npos) break;
    lines.push_back(nlohmann::json::parse(r.output.substr(start, end - start)));
    start = end + 1;
  }
  REQUIRE(lines.size() == 6);
  CHECK(lines[0]["op"] == "consistent");
  CHECK(lines[0]["answer"] == true);
  CHECK(lines[1]["op"] == "member");
  CHECK(lines[1]["answer"] == true);
  CHECK(lines[2]["op"] == "reject");
  CHECK(lines[2]["answer"] == true);
  CHECK(lines[3]["op"] == "choose");
  CHECK(lines[3]["chosen"] == nlohmann::json::parse(R"([["-1","1"],["1","-1"]])"));
  CHECK(lines[4]["op"] == "singleton");
  CHECK(lines[4]["answer"] == false);
  CHECK(lines[5]["op"] == "binarity");
  CHECK(lines[5]["case"] == "non-binary");
}

TEST_CASE("query: --verify changes nothing but re-checks evidence") {
  const auto plain = run("query " + data("queries.json"));
  const auto checked = run("query --verify " + data("queries.json"));
  CHECK(plain.exit_code == 0);
  CHECK(checked.exit_code == 0);
  CHECK(plain.output == checked.output);
}

TEST_CASE("query: inconsistent assessment exits 1") {
  const auto r = run("query " + data("inconsistent_queries.json"));
  CHECK(r.exit_code == 1);
}

TEST_CASE("selftest: seed 42 is byte-deterministic") {
  const auto first = run("selftest --seed 42");
  const auto second = run("selftest --seed 42");
  CHECK(first.exit_code == 0);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("selftest:") != std::string::npos);
}

TEST_CASE("jobs flag leaves output unchanged") {
  const auto one = run("--jobs 1 query " + data("queries.json"));
  const auto four = run("--jobs 4 query " + data("queries.json"));
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
}
