#include <doctest.h>

#include <cli.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <report.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "confined_atom/bound_state.hpp"
#include "confined_atom/dalgarno_lewis.hpp"

using namespace confined_atom;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "confined-atom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::string header;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  double num(std::size_t row, const std::string& column) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c] == column) return std::stod(rows.at(row).at(c));
    FAIL("no column " << column);
    return NAN;
  }
  std::string text(std::size_t row, const std::string& column) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (columns[c] == column) return rows.at(row).at(c);
    return {};
  }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (csv.header.empty()) csv.header = line;
      continue;
    }
    if (csv.columns.empty())
      csv.columns = split(line);
    else
      csv.rows.push_back(split(line));
  }
  return csv;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("confined_atom_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bound: isolated atom") {
  const auto r = call({"bound", "--Z", "1", "--isolated"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  CHECK(csv.num(0, "k_b") == 1.0);
  CHECK(csv.num(0, "energy") == -0.5);
  CHECK(csv.text(0, "a") == "isolated");
  CHECK(csv.text(0, "bound") == "1");
  CHECK(csv.header == "# bound Z=1 a=isolated");
}

TEST_CASE("bound: no bound state exits with 2") {
  const auto r = call({"bound", "--Z", "0.25", "--a", "2"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("Z <= 1/(2a)") != std::string::npos);
}

TEST_CASE("bound: row equals the library result") {
  const auto r = call({"bound", "--Z", "0.25", "--a", "10"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  const auto bs = solve_bound_state(AtomConfig::near_wall(0.25, 10.0));
  CHECK(csv.text(0, "k_b") == cli::format_number(bs.wave_vector));
  CHECK(csv.text(0, "energy") == cli::format_number(bs.energy));
  CHECK(csv.text(0, "norm_A") == cli::format_number(bs.norm));
}

TEST_CASE("usage errors exit with 64") {
  CHECK(call({}).code == 64);
  CHECK(call({"bound"}).code == 64);
  CHECK(call({"bound", "--Z", "1"}).code == 64);
  CHECK(call({"bound", "--Z", "1", "--a", "3", "--isolated"}).code == 64);
  CHECK(call({"bound", "--Z", "abc", "--a", "3"}).code == 64);
  CHECK(call({"bound", "--Z", "-1", "--a", "3"}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"static-sweep", "--Z", "1", "--a-min", "5", "--a-max", "1"}).code == 64);
  CHECK(call({"resonance", "--Z", "1", "--a", "5", "--F", "-0.1"}).code == 64);
  CHECK(call({"dynamic", "--Z", "1"}).code == 64);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("static-sweep") != std::string::npos);
}

TEST_CASE("static-sweep columns and limits") {
  const auto r = call({"static-sweep", "--Z", "0.25", "--a-min", "2", "--a-max", "100", "--points", "30",
                       "--compare-isolated", "--compare-asymptotic"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  CHECK(csv.columns == std::vector<std::string>{"a", "k_b", "alpha", "alpha_isolated", "alpha_asymptotic"});
  // a = 2 sits on the threshold and is dropped
  CHECK(csv.rows.size() == 29);
  CHECK(r.err.find("no bound state at a=2") != std::string::npos);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) CHECK(csv.num(i, "alpha_isolated") == 320.0);
  CHECK(csv.num(csv.rows.size() - 1, "alpha") == doctest::Approx(320.0).epsilon(1e-6));
  for (std::size_t i = 1; i < csv.rows.size(); ++i) CHECK(csv.num(i, "a") / csv.num(i - 1, "a") == doctest::Approx(std::pow(50.0, 1.0 / 29.0)));

  const auto near = parse_csv(call({"static-sweep", "--Z", "0.25", "--a-min", "2.05", "--a-max", "2.05", "--points", "1", "--compare-isolated"}).out);
  CHECK(near.num(0, "alpha") > 100.0 * near.num(0, "alpha_isolated"));
  CHECK(std::isnan(near.num(0, "alpha_asymptotic")));
}

// alpha(a) at Z = 0.25 dips below 320 around a ~ 7 before rising to it.
TEST_CASE("static-sweep Z=0.25: alpha column decreasing" * doctest::may_fail()) {
  const auto csv = parse_csv(call({"static-sweep", "--Z", "0.25", "--a-min", "2.01", "--a-max", "100", "--points", "30"}).out);
  for (std::size_t i = 1; i < csv.rows.size(); ++i) CHECK(csv.num(i, "alpha") < csv.num(i - 1, "alpha"));
}

TEST_CASE("output file, bit-stable output and I/O errors") {
  const std::string path = temp_path("sweep.csv");
  const std::vector<std::string> args{"static-sweep", "--Z", "0.5", "--a-min", "1.5", "--a-max", "30", "--points", "12", "--out", path};
  REQUIRE(call(args).code == 0);
  const std::string first = slurp(path);
  REQUIRE(call(args).code == 0);
  CHECK(slurp(path) == first);
  CHECK(first.rfind("# static-sweep Z=0.5 a-min=1.5 a-max=30 points=12", 0) == 0);
  std::remove(path.c_str());

  const auto bad = call({"static-sweep", "--Z", "0.5", "--a-min", "1.5", "--a-max", "30", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad.code == 74);
  const auto bad_dyn = call({"dynamic", "--Z", "0.5", "--a", "3", "--out", "/nonexistent-dir/x.csv"});
  CHECK(bad_dyn.code == 74);
}

TEST_CASE("resonance sweep") {
  const auto r = call({"resonance", "--Z", "10", "--a", "0.2", "--F", "0", "--F", "0.02", "--F", "0.03", "--F", "0.04"});
  REQUIRE(r.code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 4);
  CHECK(csv.num(0, "stark_shift") == 0.0);
  CHECK(csv.num(0, "gamma") == 0.0);
  CHECK(csv.text(0, "converged") == "1");
  for (std::size_t i = 1; i < 4; ++i) CHECK(csv.text(i, "converged") == "1");

  const double k = solve_bound_state(AtomConfig::near_wall(10.0, 0.2)).wave_vector;
  const double slope = (csv.num(3, "log_gamma") - csv.num(1, "log_gamma")) / (1.0 / 0.04 - 1.0 / 0.02);
  CHECK(slope == doctest::Approx(-2.0 * k * k * k / 3.0).epsilon(0.05));
  // exact and perturbative shifts agree
  for (std::size_t i = 1; i < 4; ++i)
    CHECK(csv.num(i, "stark_shift") == doctest::Approx(csv.num(i, "perturbative_shift")).epsilon(1e-3));
  for (std::size_t i = 1; i < 4; ++i)
    CHECK(std::abs(csv.num(i, "log_gamma") - csv.num(i, "asymptotic_log_gamma")) < std::log(2.0));
}

TEST_CASE("resonance warns outside the weak-field range") {
  const auto r = call({"resonance", "--Z", "1", "--isolated", "--F", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.err.find("weak-field") != std::string::npos);
  CHECK(parse_csv(r.out).text(0, "within_validity") == "0");
}

TEST_CASE("dynamic blocks") {
  const auto r = call({"dynamic", "--Z", "0.25", "--a", "3", "--a", "200", "--omega-points", "2001"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("eta=0.0018") != std::string::npos);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 4002);
  double peak_small = 0.0, peak_large = 0.0;
  for (std::size_t i = 0; i < 2001; ++i) {
    peak_small = std::max(peak_small, csv.num(i, "im_alpha"));
    peak_large = std::max(peak_large, csv.num(2001 + i, "im_alpha"));
  }
  CHECK(csv.text(2001, "a") == cli::format_number(200.0));
  CHECK(peak_small > peak_large);

}

TEST_CASE("dynamic omega = 0 row against static-sweep") {
  const auto sweep = parse_csv(call({"static-sweep", "--Z", "0.25", "--a-min", "3", "--a-max", "10", "--points", "2"}).out);
  const auto dyn = parse_csv(call({"dynamic", "--Z", "0.25", "--a", "10", "--omega-points", "2"}).out);
  CHECK(dyn.num(0, "omega") == 0.0);
  CHECK(dyn.num(0, "re_alpha") == doctest::Approx(sweep.num(1, "alpha")).epsilon(0.01));
  // at a = 3 the gap k_b^2/2 is 0.016, so the default eta alone shifts the
  // omega = 0 value by about 1%; a smaller eta recovers it
  const auto dyn3 = parse_csv(call({"dynamic", "--Z", "0.25", "--a", "3", "--omega-points", "2", "--eta", "1e-4"}).out);
  CHECK(dyn3.num(0, "re_alpha") == doctest::Approx(sweep.num(0, "alpha")).epsilon(1e-4));
}

TEST_CASE("dynamic isolated block and threshold note") {
  const auto r = call({"dynamic", "--Z", "0.25", "--a", "1", "--isolated", "--omega-points", "3", "--eta", "0.01"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("no bound state at a=1") != std::string::npos);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 3);
  CHECK(csv.text(0, "a") == "isolated");
  CHECK(r.out.find("eta=0.01") != std::string::npos);
  CHECK(call({"dynamic", "--Z", "0.25", "--a", "1"}).code == 2);
}

TEST_CASE("json output mirrors the columns") {
  const auto r = call({"resonance", "--Z", "1", "--a", "5", "--F", "0", "--F", "0.05", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "resonance");
  CHECK(doc["parameters"]["a"] == "5");
  const auto& rows = doc["resonance"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["log_gamma"] == "-inf");
  CHECK(rows[1]["converged"] == true);
  CHECK(rows[1]["gamma"].get<double>() > 0.0);
}

TEST_CASE("oracle subcommand") {
  const auto r = call({"oracle", "--Z", "1", "--a", "5", "--N", "2000", "--omega", "0.1", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& row = doc["oracle"][0];
  CHECK(row["alpha_oracle"].get<double>() == doctest::Approx(row["alpha_exact"].get<double>()).epsilon(0.01));
  CHECK(row["trk_sum"].get<double>() == doctest::Approx(1.0).epsilon(0.01));
  CHECK(doc["dynamic"].size() == 1);
  CHECK(call({"oracle", "--Z", "1", "--a", "5", "--N", "10"}).code == 64);
}

TEST_CASE("thread cap does not change the output") {
  const std::vector<std::string> args{"static-sweep", "--Z", "1", "--a-min", "0.6", "--a-max", "8", "--points", "16"};
  const std::string many = call(args).out;
  setenv("CONFINED_ATOM_THREADS", "1", 1);
  const std::string one = call(args).out;
  unsetenv("CONFINED_ATOM_THREADS");
  CHECK(one == many);
}
