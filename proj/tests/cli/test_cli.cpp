#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hypersat_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  const auto err_path = scratch() / "stderr.txt";
  const std::string cmd =
      env + " " + std::string(HYPERSAT_CLI) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

const fs::path golden{HYPERSAT_GOLDEN};

}  // namespace

TEST_CASE("top-level help is pinned") {
  const auto r = run("--help");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden / "help.txt"));
  for (const char* sub : {"gen", "count", "bfs", "tree", "decompose", "split", "crosscut", "verify",
                          "sweep", "expect", "bench"}) {
    CHECK(r.out.find(std::string("  ") + sub + " ") != std::string::npos);
  }
}

TEST_CASE("subcommand help is pinned") {
  for (const char* sub : {"gen", "count", "bfs", "tree", "decompose", "split", "crosscut", "verify",
                          "sweep", "expect", "bench"}) {
    const auto r = run(std::string(sub) + " --help");
    INFO(sub);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden / (std::string("help_") + sub + ".txt")));
  }
}

TEST_CASE("count on K4 gives three 4-cycles") {
  const auto r = run("count --k 2 " + (golden / "k4.lhg").string());
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden / "count_k4.json"));
  CHECK(nlohmann::json::parse(r.out).at("copies") == 3);
}

TEST_CASE("count --list agrees with the plain count") {
  const auto r = run("count --k 2 --list " + (golden / "k4.lhg").string());
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("list").size() == 3);
}

TEST_CASE("gen gnp with p = 0 has no edges") {
  const auto r = run("gen --family gnp --n 10 --p 0 --seed 7");
  CHECK(r.code == 0);
  CHECK(r.out == "lhg 2 10\n");
}

TEST_CASE("verify oracle_equiv passes 50 of 50") {
  const auto r = run("verify --suite oracle_equiv --instances 50 --seed 1");
  CHECK(r.code == 0);
  CHECK(r.err.find("oracle_equiv: 50/50") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("audit").at("passed") == 50);
  CHECK(j.at("schema") == 1);
}

TEST_CASE("sweep report schema is pinned") {
  const auto r = run("--seed 1 sweep --n 12 --grid 0.3,0.5 --trials 2");
  CHECK(r.code == 0);
  CHECK(r.out == slurp(golden / "sweep_small.json"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("count").code == 2);
  CHECK(run("count --k 1 x.lhg").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("gen --family nonsense").code == 2);
  CHECK(run("sweep --n 10 --grid 0.1,abc").code == 2);
}

TEST_CASE("domain errors exit with 1 and a JSON object") {
  const auto missing = run("count --k 2 /nonexistent/file.lhg");
  CHECK(missing.code == 1);
  const auto j = nlohmann::json::parse(missing.err);
  CHECK(j.at("error") == "ParseError");
  CHECK(j.contains("message"));
  CHECK(j.contains("item"));

  const auto bad = scratch() / "bad.lhg";
  std::ofstream(bad) << "lhg 3 5\n0 1 2\n0 1 3\n";
  const auto lin = run("count --k 2 " + bad.string());
  CHECK(lin.code == 1);
  CHECK(nlohmann::json::parse(lin.err).at("error") == "LinearityViolation");

  const auto infeasible = run("gen --family partite --classes 2,2,2 --budget 5");
  CHECK(infeasible.code == 1);
  CHECK(nlohmann::json::parse(infeasible.err).at("error") == "BudgetInfeasible");
}

TEST_CASE("work cap from the environment") {
  const auto r = run("count --k 3 " + (golden / "k4.lhg").string(), "HYPERSAT_WORKCAP=2");
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.err).at("error") == "WorkCapExceeded");
}

TEST_CASE("outputs are byte-identical across runs and job counts") {
  const auto a = run("--seed 9 gen --family steiner --n 30 --r 3 --budget 100");
  const auto b = run("--jobs 3 --seed 9 gen --family steiner --n 30 --r 3 --budget 100");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto csv1 = scratch() / "a.csv";
  const auto csv2 = scratch() / "b.csv";
  const auto s1 = run("--seed 4 --jobs 1 sweep --n 20 --grid 0.3,0.4 --trials 4 --csv " + csv1.string());
  const auto s2 = run("--seed 4 --jobs 4 sweep --n 20 --grid 0.3,0.4 --trials 4 --csv " + csv2.string());
  CHECK(s1.out == s2.out);
  CHECK(slurp(csv1) == slurp(csv2));
  CHECK_FALSE(slurp(csv1).empty());

  const auto v1 = run("--seed 2 --jobs 1 verify --suite peel --instances 20");
  const auto v2 = run("--seed 2 --jobs 3 verify --suite peel --instances 20");
  CHECK(v1.out == v2.out);
}

TEST_CASE("lemma subcommands run on generated input") {
  const auto td = scratch() / "td.lhg";
  REQUIRE(run("gen --family td --r 3 --q 7 -o " + td.string()).code == 0);
  const auto tree = run("tree " + td.string() + " --height 2 --floor 0 --lenient");
  CHECK(tree.code == 0);
  for (const auto& c : nlohmann::json::parse(tree.out).at("audit")) CHECK(c.at("passed") == true);

  const auto split = run("split " + td.string() + " --k 2 --seed 3");
  CHECK(split.code == 0);
  CHECK(nlohmann::json::parse(split.out).at("min_restricted") >= 1);

  const auto cc = run("crosscut " + td.string());
  CHECK(cc.code == 0);
  for (const auto& c : nlohmann::json::parse(cc.out).at("audit")) CHECK(c.at("passed") == true);

  const auto g = scratch() / "g.lhg";
  REQUIRE(run("gen --family gnp --n 40 --p 0.5 --seed 2 -o " + g.string()).code == 0);
  const auto dec = run("decompose " + g.string() + " --C 0.5 --override-p 3");
  CHECK(dec.code == 0);
  CHECK(nlohmann::json::parse(dec.out).at("edge_disjoint") == true);
  const auto dense = run("decompose " + g.string() + " --C 10");
  CHECK(dense.code == 1);

  const auto bfs = run("bfs " + g.string() + " --k 2");
  CHECK(bfs.code == 0);
  CHECK(nlohmann::json::parse(bfs.out).at("verified") == true);
}
