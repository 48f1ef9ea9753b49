#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "l2greedy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = l2g::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("l2greedy_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("generate") {
  auto r = run({"generate", "--algorithm", "greedy-star", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n1/4\n5/6\n1/8\n7/10\n");
  CHECK(run({"generate", "--algorithm", "vdc", "--n", "3"}).out == "0\n1/2\n1/4\n");
  CHECK(run({"generate", "--algorithm", "greedy-extreme", "--n", "16"}).out ==
        run({"generate", "--algorithm", "vdc", "--n", "16"}).out);
  CHECK(run({"generate", "--algorithm", "greedy-periodic", "--n", "16"}).out ==
        run({"generate", "--algorithm", "vdc", "--n", "16"}).out);
  CHECK(run({"generate", "--algorithm", "grid", "--n", "2", "--float"}).out == "0.25\n0.75\n");
  CHECK(run({"generate", "--algorithm", "vdc-sym", "--n", "4"}).out == "0\n1\n1/2\n1/2\n");
}

TEST_CASE("generate with a start file") {
  const auto start = temp_file("start.txt", "# two points\n1/3\n0.9\n");
  const auto r = run({"generate", "--algorithm", "greedy-star", "--n", "4", "--start", start});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1/3\n9/10\n", 0) == 0);
  const auto bad = temp_file("bad.txt", "1/3\nnope\n");
  CHECK(run({"generate", "--algorithm", "greedy-star", "--n", "4", "--start", bad}).code == 2);
  CHECK(run({"generate", "--algorithm", "greedy-star", "--n", "1", "--start", start}).code == 2);
}

TEST_CASE("generate in two dimensions") {
  const std::vector<std::string> args{"generate", "--algorithm", "greedy-periodic", "--n", "6", "--dim", "2",
                                      "--grid-resolution", "8", "--refinement-rounds", "1"};
  const auto r = run(args);
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  CHECK(std::count(r.out.begin(), r.out.end(), '\t') == 6);
  CHECK(run(args).out == r.out);
  CHECK(run({"generate", "--algorithm", "greedy-star", "--n", "6", "--dim", "2"}).code == 2);
  CHECK(run({"generate", "--algorithm", "greedy-star", "--n", "6", "--dim", "2", "--grid-resolution", "8",
             "--exact"})
            .code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"generate", "--algorithm", "sobol", "--n", "3"}).code == 2);
  CHECK(run({"generate", "--algorithm", "vdc"}).code == 2);
  CHECK(run({"generate", "--algorithm", "vdc", "--n", "0"}).code == 2);
  CHECK(run({"generate", "--algorithm", "vdc", "--n", "3", "--dim", "2"}).code == 2);
  CHECK(run({"verify", "--suite", "nope", "--n", "3"}).code == 2);
  CHECK(run({"discrepancy", "--kind", "bogus", "--algorithm", "vdc", "--n", "3"}).code == 2);
  CHECK(run({"discrepancy", "--kind", "star-l2"}).code == 2);
  CHECK(run({"compare", "--n-max", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("discrepancy") {
  auto r = run({"discrepancy", "--kind", "star-l2", "--algorithm", "grid", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "N,value\n8,0.28867513459481287\n");
  r = run({"discrepancy", "--kind", "periodic-l2", "--algorithm", "vdc", "--n", "1"});
  CHECK(r.out == "N,value\n1,0.40824829046386302\n");
  r = run({"discrepancy", "--kind", "star-l2", "--algorithm", "grid", "--n", "8", "--exact"});
  CHECK(r.out == "N,value_sq\n8,1/12\n");
  r = run({"discrepancy", "--kind", "star-sup", "--algorithm", "vdc", "--n", "3", "--curve", "--exact"});
  CHECK(r.out == "N,value\n1,1\n2,1\n3,3/2\n");
  r = run({"discrepancy", "--kind", "extreme-l2", "--algorithm", "greedy-star", "--n", "130", "--curve",
           "--paranoid"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 131);
  CHECK(r.err.find("3 prefixes agree") != std::string::npos);

  const auto two_d = temp_file("pts2d.txt", "0.5\t0.5\n0.25\t0.75\n");
  CHECK(run({"discrepancy", "--kind", "star-sup", "--input", two_d}).code == 2);
  r = run({"discrepancy", "--kind", "star-l2", "--input", two_d, "--exact"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("N,value_sq\n2,", 0) == 0);
}

TEST_CASE("compare") {
  const auto r = run({"compare", "--n-max", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "N,L2star_Sstar,L2star_Vsym,Dstar_Sstar,Dstar_V");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string f;
    std::getline(fields, f, ',');
    for (int i = 0; i < 4; ++i) {
      REQUIRE(std::getline(fields, f, ','));
      const double v = std::stod(f);
      CHECK(std::isfinite(v));
      CHECK(v > 0);
    }
  }
  CHECK(rows == 2);
  CHECK(run({"compare", "--n-max", "50"}).out == run({"compare", "--n-max", "50"}).out);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "theorem6", "--n", "64"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("theorem6: PASS", 0) == 0);
  const auto report = (std::filesystem::temp_directory_path() / "l2greedy_test_report.jsonl").string();
  r = run({"verify", "--suite", "appendix", "--n", "16", "--samples", "3", "--report", report});
  CHECK(r.code == 0);
  std::ifstream in(report);
  std::string first;
  std::getline(in, first);
  CHECK(first.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(run({"verify", "--suite", "theorem5", "--n", "100"}).code == 0);
  CHECK(run({"verify", "--suite", "theorem4", "--n", "60"}).code == 0);
  CHECK(run({"verify", "--suite", "bounds", "--n", "50"}).code == 0);
  CHECK(run({"verify", "--suite", "bounds", "--n", "8", "--dim", "2", "--grid-resolution", "8", "--kind",
             "star-l2"})
            .code == 0);
  CHECK(run({"verify", "--suite", "oracles", "--n", "3", "--resolution", "5000"}).code == 0);
  CHECK(run({"verify", "--suite", "bounds", "--n", "8", "--kind", "star-sup"}).code == 2);
}
