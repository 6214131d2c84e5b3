#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

// End-to-end tests drive the installed binary exactly as a user would.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/polyberg_cli_out.txt";
  const std::string cmd =
      std::string(POLYBERG_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.output = buf.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("sample: projection curve over a symmetric grid") {
  const auto r = run_cli("sample --case phi-plus --n 2 --grid t1=-4:4:17");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.output);
  REQUIRE(rows.size() == 1 + 17 * 4);
  CHECK(rows[0] == "kind,t1,t2,j,k,value");

  // locate the t1 = 0 block and pin its entries
  double diag = 0.0, off = 0.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto f = split_csv(rows[i]);
    REQUIRE(f.size() == 6);
    CHECK(f[0] == "bottom");
    if (f[1] == "0" && f[3] == "1" && f[4] == "1") diag = std::stod(f[5]);
    if (f[1] == "0" && f[3] == "1" && f[4] == "2") off = std::stod(f[5]);
  }
  CHECK(diag == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(off == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("sample: constant vertical symbol gives the identity matrix") {
  const auto r = run_cli("sample --case b-1n --symbol const:1 --n 2 --grid t2=1:1:1");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.output);
  REQUIRE(rows.size() == 5);
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto f = split_csv(rows[i]);
    const double v = std::stod(f[5]);
    if (f[3] == f[4])
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    else
      CHECK(std::abs(v) < 1e-12);
  }
}

TEST_CASE("sample: boundary rows carry the closed edge values") {
  const auto r = run_cli(
      "sample --case phi-a --symbol sigmoid --n 1 --grid t1=0:0:1,t2=2:2:1 "
      "--include-boundary");
  REQUIRE(r.exit_code == 0);
  bool saw_right = false, saw_left = false, saw_corner = false;
  for (const auto& row : lines_of(r.output)) {
    const auto f = split_csv(row);
    if (f[0] == "right" && f[2] == "2") {
      saw_right = true;
      CHECK(std::stod(f[5]) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    }
    if (f[0] == "left" && f[2] == "2") {
      saw_left = true;
      CHECK(std::stod(f[5]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    if (f[0] == "right" && f[2] == "0") {
      saw_corner = true;
      CHECK(std::stod(f[5]) == doctest::Approx(-1.0));
    }
  }
  CHECK(saw_right);
  CHECK(saw_left);
  CHECK(saw_corner);
}

TEST_CASE("sample: json format is well-formed and mirrors the csv values") {
  const auto r = run_cli("sample --case phi-plus --n 1 --grid t1=0:1:2 --format json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["case"] == "phi-plus");
  CHECK(doc["n"] == 1);
  REQUIRE(doc["samples"].size() == 2);
  CHECK(doc["samples"][0]["matrix"][0][0].get<double>() == doctest::Approx(0.5));
  CHECK(doc["samples"][1]["matrix"][0][0].get<double>() ==
        doctest::Approx(std::erfc(1.0) / 2).epsilon(1e-12));
}

TEST_CASE("sample: csv numbers survive a parse and re-serialize round trip") {
  const auto r = run_cli("sample --case phi-plus --n 3 --grid t1=-2:2:9");
  REQUIRE(r.exit_code == 0);
  const auto rows = lines_of(r.output);
  for (size_t i = 1; i < rows.size(); ++i) {
    const std::string text = split_csv(rows[i]).back();
    const double v = std::strtod(text.c_str(), nullptr);
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    CHECK(std::string(buf, res.ptr) == text);
  }
}

TEST_CASE("verify: individual suite and full battery pass") {
  const auto r = run_cli("verify --suite specfun");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("hermite-orthonormality") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);

  const auto j = run_cli("verify --suite algebra --format json");
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.output);
  for (const auto& suite : doc["suites"])
    for (const auto& check : suite["checks"]) CHECK(check["pass"].get<bool>());
}

TEST_CASE("eigencurves: scalar table matches the tail function exactly at ends") {
  const auto r = run_cli("eigencurves --n 1 --grid t1=-1:1:3 --out /tmp/polyberg_ec.csv");
  REQUIRE(r.exit_code == 0);

  std::ifstream in("/tmp/polyberg_ec.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,j,lambda");
  std::vector<std::pair<std::string, double>> got;
  std::string line;
  while (std::getline(in, line)) {
    const auto f = split_csv(line);
    got.push_back({f[0], std::stod(f[2])});
  }
  REQUIRE(got.size() == 5);
  CHECK(got.front().first == "-inf");
  CHECK(got.front().second == 1.0);
  CHECK(got.back().first == "+inf");
  CHECK(got.back().second == 0.0);
  CHECK(got[2].second == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(got[1].second == doctest::Approx(std::erfc(-1.0) / 2).epsilon(1e-12));

  // companion basis table exists and starts at the all-ones scalar frame
  std::ifstream basis("/tmp/polyberg_ec_basis.csv");
  REQUIRE(basis.good());
  std::getline(basis, header);
  CHECK(header == "t,j,k,value");
}

TEST_CASE("separate: exponent coefficients and vector comparison") {
  const auto apart = run_cli("separate --p1 0,1 --p2 0,4");
  CHECK(apart.exit_code == 0);
  CHECK(apart.output.find("c2=-12") != std::string::npos);
  CHECK(apart.output.find("verdict: separable") != std::string::npos);

  const auto same = run_cli("separate --p1 1,2 --p2 1,2");
  CHECK(same.output.find("verdict: not separable") != std::string::npos);

  const auto differ = run_cli("separate --p1 0,1 --p2 0,1 --v 1,0 --w 0,1 --n 2");
  CHECK(differ.exit_code == 0);
  CHECK(differ.output.find("vectors: states differ") != std::string::npos);

  const auto coincide = run_cli("separate --p1 0,1 --p2 0,1 --v 1,0 --w -1,0 --n 2");
  CHECK(coincide.output.find("vectors: states coincide") != std::string::npos);
}

TEST_CASE("exit codes: usage errors are 2, domain failures are distinguished") {
  CHECK(run_cli("sample --case phi-plus --grid nonsense").exit_code == 2);
  CHECK(run_cli("sample --case b-1n --symbol no_such --n 2").exit_code == 2);
  CHECK(run_cli("sample --case what").exit_code == 2);
  CHECK(run_cli("eigencurves --n 2").exit_code == 2);          // --grid required
  CHECK(run_cli("verify --suite bogus").exit_code == 2);
  CHECK(run_cli("sample --case b-1n --symbol const:1 --n 40").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);

  const auto help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("sample") != std::string::npos);
}
