#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WORDTORUS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

json run_json(const std::string& args) {
  CliResult r = run_cli(args);
  REQUIRE(r.exit_code == 0);
  // must be a single JSON document and nothing else on stdout
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("check-word verdicts through the CLI", "[cli]") {
  json j = run_json("check-word --word ELEPHANT --json");
  CHECK(j["word"] == "ELEPHANT");
  CHECK(j["r"] == 8);
  CHECK(j["admissible"] == false);
  CHECK(j["pair_ok"] == false);
  CHECK(j["offending_pair"] == "EL");

  for (const std::string word : {"CAT", "LION", "TIGER", "FELINE"}) {
    CHECK(run_json("check-word --word " + word + " --json")["admissible"] == true);
  }
  CHECK(run_json("check-word --word FELINE --json")["all_distinct"] == false);
}

TEST_CASE("bound reports through the CLI", "[cli]") {
  json j = run_json("bound --word CAT --dims 8,8 --json");
  CHECK(j["word_bound"] == 96);
  CHECK(j["equality_possible"] == true);
  CHECK(j["pair_bound"] == 192.0);

  json sharp = run_json("bound --word CAT --dims 5 --sharp --json");
  CHECK(sharp["word_bound"] == 2);
  CHECK(sharp["pair_bound"].get<double>() < 5.0);

  // both separators accepted
  CHECK(run_json("bound --word CAT --dims 4x4x4 --json")["word_bound"] == 288);
}

TEST_CASE("exit codes: 0 ok, 1 domain, 2 usage", "[cli]") {
  CHECK(run_cli("check-word --word ELEPHANT").exit_code == 0);
  CHECK(run_cli("count --input missing.torus --word CAT").exit_code == 1);
  CHECK(run_cli("bound --word CAT --dims 6 --json").exit_code == 0);
  CHECK(run_cli("construct --word CAT --dims 6").exit_code == 1);   // 4 does not divide 6
  CHECK(run_cli("bound --word ELEPHANT --dims 4").exit_code == 1);  // inadmissible
  CHECK(run_cli("brute --word CAT --dims 5,5").exit_code == 1);     // guard
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("bound --word CAT").exit_code == 2);        // missing --dims
  CHECK(run_cli("brute --dims 4").exit_code == 2);          // missing --word
  CHECK(run_cli("bound --word CAT --dims abc").exit_code == 2);
  CHECK(run_cli("verify --dims 4 --json").exit_code == 2);  // seed required with json
  CHECK(run_cli("search --word CAT --dims 4 --json").exit_code == 2);
}

TEST_CASE("count on a labeling file", "[cli]") {
  const std::string path = std::filesystem::temp_directory_path() / "wt_cli_line.torus";
  {
    std::ofstream f(path);
    f << "torus v1\ndims: 4\nalphabet: CAT\nCATA\n";
  }
  json j = run_json("count --input " + path + " --word CAT --witnesses --json");
  CHECK(j["count"] == 2);
  CHECK(j["dims"] == json::array({4}));
  REQUIRE(j["witnesses"].size() == 2);
  CHECK(j["witnesses"][0]["point"] == json::array({0}));
  CHECK(j["witnesses"][0]["direction"] == json::array({-1}));
  CHECK(j["witnesses"][1]["direction"] == json::array({1}));
  CHECK_FALSE(j.contains("warning"));

  // word longer than a side: counted, but flagged
  json warn = run_json("count --input " + path + " --word FELINE --json");
  CHECK(warn["count"] == 0);
  CHECK(warn.contains("warning"));
  std::filesystem::remove(path);
}

TEST_CASE("construct writes files the counter accepts", "[cli]") {
  const std::string path = std::filesystem::temp_directory_path() / "wt_cli_ps.torus";
  json j = run_json("construct --word CAT --dims 8,8 --out " + path + " --json");
  CHECK(j["count"] == 96);
  CHECK(j["attains"] == true);
  json counted = run_json("count --input " + path + " --word CAT --json");
  CHECK(counted["count"] == 96);
  std::filesystem::remove(path);

  const std::string dir = std::filesystem::temp_directory_path() / "wt_cli_family";
  json fam = run_json("construct --word CAT --dims 4,4 --family --out " + dir + " --json");
  CHECK(fam["size"] == 16);
  CHECK(fam["members"].size() == 16);
  for (const auto& m : fam["members"]) CHECK(m["count"] == 24);
  CHECK(std::filesystem::exists(dir + "/manifest.json"));
  json first = run_json("count --input " + dir + "/000.torus --word CAT --json");
  CHECK(first["count"] == 24);
  std::filesystem::remove_all(dir);
}

TEST_CASE("spectrum check passes at desk shapes", "[cli]") {
  json j = run_json("spectrum --dims 4,4 --check --json");
  CHECK(j["lambda_max"] == 8.0);
  CHECK(j["lambda_min"] == -4.0);
  CHECK(j["exact_case"] == true);
  CHECK(j["check"]["pass"] == true);
  CHECK(j["eigenvalues"].size() == 16);

  json odd = run_json("spectrum --dims 5 --check --json");
  CHECK(odd["exact_case"] == false);
  CHECK(odd["check"]["pass"] == true);
}

TEST_CASE("verify passes and is reproducible", "[cli]") {
  json j = run_json("verify --dims 4,4 --trials 50 --seed 1 --json");
  CHECK(j["all_pass"] == true);
  CHECK(j["quadratic_identity_failures"] == 0);
  CHECK(j["parseval_max_residual"].get<double>() < 1e-9);
}

TEST_CASE("brute and search JSON reports are byte-identical across runs", "[cli]") {
  const std::string brute_cmd = "brute --word CAT --dims 6 --json";
  CHECK(run_cli(brute_cmd).out == run_cli(brute_cmd).out);
  CHECK(run_cli(brute_cmd + " --workers 3").out == run_cli(brute_cmd).out);

  const std::string search_cmd = "search --word CAT --dims 6 --seed 4 --restarts 3 --json";
  std::string first = run_cli(search_cmd).out;
  CHECK_FALSE(first.empty());
  CHECK(run_cli(search_cmd).out == first);

  json sj = json::parse(first);
  CHECK(sj["best_count"] == 2);
  CHECK(sj["bound"]["word_bound"] == 3);
  CHECK(sj["gap"] == 1);
}

TEST_CASE("brute subcommand report shapes", "[cli]") {
  json j = run_json("brute --word LION --dims 6 --json");
  CHECK(j["max_count"] == 2);
  CHECK(j["argmax_count"] == 6);
  CHECK(j["attained"] == true);
  CHECK(j["all_argmax_are_ps"] == true);
  CHECK(j["argmax"].size() == 6);

  json p = run_json("brute --pairs --dims 4 --json");
  CHECK(p["max_pairs"] == 4);
  CHECK(p["maximizer_count"] == 2);
  CHECK(p["all_maximizers_are_stripes"] == true);

  json c = run_json("brute --constrained --word LION --dims 6 --json");
  CHECK(c["attainer_count"] == 6);
  CHECK(c["word_bound"] == 2);
}
