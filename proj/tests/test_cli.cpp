#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

const std::string kCli = GADC_CLI_PATH;
const std::string kTmp = GADC_TEST_TMP;

int run(const std::string& args, const std::string& stdout_file = "/dev/null") {
  const std::string cmd = kCli + " " + args + " > " + stdout_file + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("info reports predicates") {
  const std::string out = kTmp + "/info.txt";
  REQUIRE(run("info --gamma 0.9 --n 0.5", out) == 0);
  CHECK(slurp(out).find("entanglement-breaking: true") != std::string::npos);
  REQUIRE(run("info --gamma 0.5 --n 0.2", out) == 0);
  CHECK(slurp(out).find("anti-degradable: true") != std::string::npos);
  CHECK(slurp(out).find("entanglement-breaking: false") != std::string::npos);
  REQUIRE(run("info --gamma 0 --n 0", out) == 0);
  CHECK(slurp(out).find("identity-channel: true") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("") == 2);
  CHECK(run("bogus") == 2);
  CHECK(run("info --gamma 1.5 --n 0.2") == 2);
  CHECK(run("sweep --gamma-steps 1") == 2);
  CHECK(run("sweep --set nothing") == 2);
  CHECK(run("sweep --n-list 0.1,abc") == 2);
  CHECK(run("sweep --gamma-min 0.7 --gamma-max 0.2") == 2);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify") == 0);
  CHECK(run("verify --inject-fault") == 1);
}

TEST_CASE("classical sweep csv") {
  const std::string path = kTmp + "/classical.csv";
  REQUIRE(run("sweep --set classical --gamma-min 0 --gamma-max 1 --gamma-steps 51 --n-list 0.1,0.25,0.5 --out " +
              path) == 0);
  const std::string text = slurp(path);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.back() == '\n');
  const auto rows = parse_csv(text);
  REQUIRE(rows.size() == 1 + 51 * 3 * 6);
  CHECK(rows[0] == std::vector<std::string>{"gamma", "n", "bound_name", "kind", "value_bits", "status", "runtime_ms"});
  for (std::size_t k = 1; k < rows.size(); ++k) {
    REQUIRE(rows[k].size() == 7);
    CHECK((rows[k][3] == "lower" || rows[k][3] == "upper"));
    CHECK(rows[k][5] == "ok");
    CHECK(std::stod(rows[k][4]) >= 0.0);
  }
  CHECK(rows[1][0] == "0");
  CHECK(rows.back()[0] == "1");
  CHECK(rows.back()[1] == "0.5");
  CHECK(rows.back()[2] == "chi");
}

TEST_CASE("sweep output independent of jobs except runtime") {
  const std::string a = kTmp + "/jobs1.csv", b = kTmp + "/jobs8.csv";
  const std::string args = "sweep --set all --gamma-steps 3 --n-list 0,0.5 --seed 3 --tol-sdp 1e-9";
  REQUIRE(run(args + " --jobs 1 --out " + a) == 0);
  REQUIRE(run(args + " --jobs 8 --out " + b) == 0);
  auto ra = parse_csv(slurp(a)), rb = parse_csv(slurp(b));
  REQUIRE(ra.size() == 1 + 3 * 2 * 23);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) {
    if (k > 0) {
      ra[k].pop_back();
      rb[k].pop_back();
    }
    CHECK(ra[k] == rb[k]);
  }
  bool saw_domain = false, saw_clamped = false;
  for (std::size_t k = 1; k < ra.size(); ++k) {
    if (ra[k][5] == "domain") {
      saw_domain = true;
      CHECK(ra[k][4] == "nan");
    }
    saw_clamped = saw_clamped || ra[k][5] == "clamped";
  }
  CHECK(saw_domain);
  CHECK(saw_clamped);
}

TEST_CASE("sweep to stdout") {
  const std::string out = kTmp + "/stdout.csv";
  REQUIRE(run("sweep --set twoway --gamma-steps 2 --n-list 0.5", out) == 0);
  CHECK(parse_csv(slurp(out)).size() == 1 + 2 * 5);
}
