#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperseries/cli.hpp"
#include "hyperseries/hypertree.hpp"
#include "hyperseries/series_io.hpp"

using namespace hyperseries;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(HYPERSERIES_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("count") {
  auto r = run({"count", "--n", "3", "--profile", "u2=2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "n=3 profile=u2=2 rooted=9 unrooted=3\n");
  r = run({"count", "--n", "4", "--edges", "2", "--json"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rooted"] == "48");
  CHECK(j["unrooted"] == "12");
  CHECK(j["k"] == 2);
  r = run({"count", "--n", "3", "--profile", "u2=1", "--json"});
  CHECK(r.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(r.out)["unrooted"] == "0");
}

TEST_CASE("count usage errors") {
  CHECK(run({"count", "--n", "3"}).code == cli::kUsageError);
  CHECK(run({"count", "--n", "3", "--profile", "u2=2", "--edges", "2"}).code == cli::kUsageError);
  CHECK(run({"count", "--n", "3", "--profile", "u1=2"}).code == cli::kUsageError);
  CHECK(run({"count", "--n", "0", "--edges", "1"}).code == cli::kUsageError);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("table") {
  auto r = run({"table", "--max-n", "1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "[t^1/1!]T = 1\n");
  r = run({"table", "--max-n", "4"});
  CHECK(r.out ==
        "[t^1/1!]T = 1\n"
        "[t^2/2!]T = u2\n"
        "[t^3/3!]T = u3 + 3u2^2\n"
        "[t^4/4!]T = u4 + 12u2u3 + 16u2^3\n");
}

TEST_CASE("table JSON round-trips") {
  const auto r = run({"table", "--max-n", "6", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  const auto& c = j["context"];
  const TruncationContext ctx(c["t_max"], c["z_max"], c["magnitude_max"],
                              VarAlphabet{c["max_edge_size"], c["has_t"], c["has_z"]});
  const auto rows = hypertree_table(6, 8);
  REQUIRE(j["rows"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(series_from_json(j["rows"][i]["series"], ctx) == rows[i].polynomial);
    CHECK(j["rows"][i]["text"] == rows[i].text);
    CHECK(parse_u_polynomial(j["rows"][i]["text"].get<std::string>(), ctx) == rows[i].polynomial);
  }
  CHECK(j["rows"][5]["text"] == "u6 + 30u2u5 + 60u3u4 + 360u2^2u4 + 540u2u3^2 + 2160u2^3u3 + 1296u2^5");
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "--n", "3", "--profile", "u2=2"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "n=3 profile=u2=2 all=9 connected=6 hypertree=6\n");
  r = run({"oracle", "--n", "5", "--profile", "u3=2", "--json"});
  CHECK(r.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(r.out)["rows"][0]["hypertree"] == "30");
  r = run({"oracle", "--n", "3"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("profile=u3=1 all=1 connected=1 hypertree=1") != std::string::npos);
  CHECK(r.out.find("profile=none all=1 connected=0 hypertree=0") != std::string::npos);
}

TEST_CASE("oracle on the sample hypergraph fixture") {
  const auto r = run({"oracle", "--hypergraph", fixture("sample_hypergraph.txt"), "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["weight"] == "u2=4,u3=3");
  CHECK(j["magnitude"] == 10);
  CHECK(j["connected"] == true);
  CHECK(j["hypertree"] == false);
}

TEST_CASE("oracle budget and limits") {
  auto r = run({"oracle", "--n", "6", "--profile", "u2=5", "--budget", "1000"});
  CHECK(r.code == cli::kBudgetExceeded);
  CHECK(r.err.find("759375") != std::string::npos);
  CHECK(run({"oracle", "--n", "7", "--profile", "u2=1"}).code == cli::kUsageError);
  CHECK(run({"oracle"}).code == cli::kUsageError);
  CHECK(run({"oracle", "--hypergraph", fixture("missing.txt")}).code == cli::kUsageError);
}

TEST_CASE("psi") {
  auto r = run({"psi", "--phi", fixture("phi_zero.json"), "--json"});
  REQUIRE(r.code == cli::kSuccess);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["psi"].size() == 1);
  CHECK(j["psi"][0]["a"] == 0);
  CHECK(j["psi"][0]["b"] == 0);
  CHECK(j["psi"][0]["num"] == "1");
  CHECK(j["vanishing"]["pass"] == true);
  CHECK(j["diagonal"]["pass"] == true);

  r = run({"psi", "--phi", fixture("phi_mixed.json"), "--t-max", "5", "--z-max", "5"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("PASS vanishing") != std::string::npos);
  CHECK(r.out.find("PASS psi(y)") != std::string::npos);

  r = run({"psi", "--phi", fixture("phi_u.json"), "--json"});
  CHECK(r.code == cli::kSuccess);
  j = nlohmann::json::parse(r.out);
  CHECK(nlohmann::json::parse(j.dump()) == j);

  CHECK(run({"psi", "--phi", fixture("phi_constant.json")}).code == cli::kUsageError);
  CHECK(run({"psi"}).code == cli::kUsageError);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--t-max", "1"});
  CHECK(r.code == cli::kSuccess);
  r = run({"verify", "--t-max", "3", "--z-max", "3", "--trials", "2", "--substitution-trials", "1", "--json"});
  CHECK(r.code == cli::kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() > 10);
}

TEST_CASE("verify with an injected fault fails") {
  auto r = run({"verify", "--t-max", "3", "--z-max", "3", "--trials", "1", "--inject-fault"});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("FAIL hypertree.from_rooted") != std::string::npos);
  CHECK(r.out.find("first mismatch at t") != std::string::npos);
  CHECK(run({"verify", "--t-max", "1", "--trials", "0", "--inject-fault"}).code == cli::kVerificationFailed);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "hyperseries_cli_table.txt";
  const auto r = run({"table", "--max-n", "2", "--output", path.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "[t^1/1!]T = 1\n[t^2/2!]T = u2\n");
  std::filesystem::remove(path);
}
