#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
};

Result sh(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = "printf '" + stdin_text + "' | " + DWALK_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r{0, ""};
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("family input, json output") {
  const auto r = sh("run --family petersen --format json");
  CHECK(r.status == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["n"] == 10);
  REQUIRE(docs[0]["reports"].size() == 3);
  for (const auto& rep : docs[0]["reports"]) CHECK(rep["verdict"] == "REGULAR");
}

TEST_CASE("path with two checkers reports a witness") {
  const auto r = sh("--family path:4 --checks window,schur --d 1 --format json");
  CHECK(r.status == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 1);
  REQUIRE(docs[0]["reports"].size() == 2);
  for (const auto& rep : docs[0]["reports"]) {
    CHECK(rep["verdict"] == "NOT_REGULAR");
    CHECK(rep["witness"]["k"] == 3);
  }
}

TEST_CASE("stdin graph6 input with text and tsv output") {
  auto r = sh("", "A_\\n");
  CHECK(r.status == 0);
  CHECK(r.out.find("REGULAR") != std::string::npos);
  r = sh("--format tsv", "A_\\nBw\\n");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("graph_id\t", 0) == 0);
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("malformed line is reported and processing continues") {
  const auto r = sh("--format json", "A_\\n@@@@\\nBw\\n");
  CHECK(r.status == 1);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 3);
  CHECK(docs[0]["n"] == 2);
  CHECK(docs[1]["error"]["code"].get<std::string>().find("graph6") != std::string::npos);
  CHECK(docs[2]["n"] == 3);
}

TEST_CASE("unreadable input file") {
  CHECK(sh("--input /nonexistent/graphs.g6").status == 1);
}

TEST_CASE("bad arguments") {
  CHECK(sh("--checks nonsense --family petersen").status != 0);
  CHECK(sh("--format xml --family petersen").status != 0);
  CHECK(sh("--family unknown:3").status == 1);
}

TEST_CASE("max-n skips large graphs") {
  CHECK(sh("--family petersen --max-n 5").status == 1);
}

TEST_CASE("census of small connected graphs") {
  // K2, P3, K3.
  const auto r = sh("census --format json", "A_\\nBg\\nBw\\n");
  CHECK(r.status == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 1);
  const auto& graphs = docs[0]["graphs"];
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0]["regular_d"] == "0,1");
  CHECK(graphs[1]["regular_d"] == "1,2");
  CHECK(graphs[2]["regular_d"] == "0,1");
  CHECK(docs[0]["patterns"]["0,1"] == 2);
  CHECK(docs[0]["patterns"]["1,2"] == 1);
  CHECK(docs[0]["total"] == 3);
}

TEST_CASE("census on empty input") {
  const auto r = sh("census --format json");
  CHECK(r.status == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["total"] == 0);
  CHECK(docs[0]["graphs"].empty());
}

TEST_CASE("census over the corpus file") {
  const auto r = sh(std::string("census --format json --input ") + DWALK_TEST_DATA_DIR + "/connected_le7.g6");
  CHECK(r.status == 0);
  const auto docs = json_lines(r.out);
  REQUIRE(docs.size() == 1);
  CHECK(docs[0]["total"] == 996);
  CHECK(docs[0]["errors"] == 0);
}
