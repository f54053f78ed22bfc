#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/emit.hpp"

namespace fs = std::filesystem;
using namespace kakeya::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args)
{
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// fresh scratch directory per call
fs::path scratch(const std::string& tag)
{
  const fs::path dir = fs::temp_directory_path() / ("kakeya_cli_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text)
{
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("bound --preset theorem")
{
  const auto dir = scratch("bound");
  const auto r = run_cli({"bound", "--preset", "theorem", "--output-dir", dir.string(), "--emit", "json,csv"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("case_i") != std::string::npos);
  CHECK(r.out.find("case_ii") != std::string::npos);
  CHECK(r.out.find("final") != std::string::npos);
  CHECK(r.out.find("final >= 1/98: yes") != std::string::npos);

  const auto j = nlohmann::json::parse(slurp(dir / "bound.json"));
  const auto& b = j["breakdown"];
  for (const char* key : {"case_i", "case_ii", "half_a", "final", "integral_value", "f_r0", "c_r1m1"})
    CHECK(b.contains(key));
  CHECK(b["final"].get<double>() >= 1.0 / 98);
  CHECK(b["case_i"].get<double>() >= 0.010200);
  CHECK(b["case_i"].get<double>() <= 0.010210);
  CHECK(j["rlambda_convention"] == "reproducing");

  const auto csv = slurp(dir / "bound.csv");
  CHECK(csv.rfind("a,r0,p,lambda,case_i,case_ii,half_a,final\r\n", 0) == 0);
}

TEST_CASE("bound --preset cunningham")
{
  const auto r = run_cli({"bound", "--preset", "cunningham", "--digits", "17", "--emit", "csv",
                          "--output-dir", scratch("cunningham").string()});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("cunningham = 0.0092592592592592") != std::string::npos);
}

TEST_CASE("domain errors exit 2")
{
  const auto r = run_cli({"bound", "--a", "0.5", "--r0", "0.25"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("a must be < r0") != std::string::npos);
  CHECK(run_cli({"bound", "--p", "1.5"}).code == exit_usage);
  CHECK(run_cli({"bound", "--preset", "nope"}).code == exit_usage);
  CHECK(run_cli({"frobnicate"}).code == exit_usage);
  CHECK(run_cli({}).code == exit_usage);
  CHECK(run_cli({"bound", "--digits", "40"}).code == exit_usage);
  CHECK(run_cli({"scan", "f", "--from", "0.1", "--to", "0.6"}).code == exit_usage);
  CHECK(run_cli({"verify", "--check", "Nope"}).code == exit_usage);
  CHECK(run_cli({"verify", "--check", "CMin", "--samples", "10"}).code == exit_usage);
  CHECK(run_cli({"optimize", "--a-from", "0.05"}).code == exit_usage);
  CHECK(run_cli({"--help"}).code == exit_ok);
}

TEST_CASE("paper-literal convention through the CLI")
{
  const auto dir = scratch("literal");
  const auto r = run_cli({"bound", "--preset", "theorem", "--rlambda-convention", "paper-literal",
                          "--output-dir", dir.string(), "--emit", "json"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(slurp(dir / "bound.json"));
  CHECK(j["breakdown"]["case_ii"].get<double>() < 0.003);
  CHECK(j["breakdown"]["final"].get<double>() < 1.0 / 98);
  CHECK(r.out.find("final >= 1/98: no") != std::string::npos);
}

TEST_CASE("optimize on a collapsed box")
{
  const auto dir = scratch("point");
  const auto r = run_cli({"optimize", "--preset", "theorem", "--output-dir", dir.string(), "--emit", "json,csv"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(slurp(dir / "optimize.json"));
  CHECK(j["trace"].size() == 1);
  CHECK(lines(slurp(dir / "optimize_trace.csv")).size() == 2);

  const auto q = run_cli({"optimize", "--a", "0.06", "--r0", "0.23", "--lambda", "0.9", "--emit", "json",
                          "--output-dir", dir.string()});
  CHECK(q.code == exit_ok);
  CHECK(nlohmann::json::parse(slurp(dir / "optimize.json"))["trace"].size() == 1);
}

TEST_CASE("optimize --preset sec41 --refine 10")
{
  const auto dir = scratch("sec41");
  const auto r = run_cli({"optimize", "--preset", "sec41", "--refine", "10", "--output-dir", dir.string(),
                          "--emit", "json,csv"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(slurp(dir / "optimize.json"));
  CHECK(j["breakdown"]["final"].get<double>() >= 0.01030);
  const auto seq = j["refine"].get<std::vector<double>>();
  REQUIRE(!seq.empty());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i] >= 0.01030);
    if (i) CHECK(seq[i] >= seq[i - 1]);
  }
  CHECK(fs::exists(dir / "optimize_refine.csv"));
  CHECK(r.out.find("refine:") != std::string::npos);
}

TEST_CASE("verify")
{
  const auto dir = scratch("verify");
  const auto r = run_cli({"verify", "--check", "FArgmax", "--output-dir", dir.string(), "--emit", "json,csv"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(slurp(dir / "verify.json"));
  REQUIRE(j["reports"].size() == 1);
  const auto& rep = j["reports"][0];
  for (const char* key : {"id", "samples", "grid_spec", "max_violation", "tolerance", "pass", "seed", "detail"})
    CHECK(rep.contains(key));
  CHECK(rep["id"] == "FArgmax");
  CHECK(rep["max_violation"].get<double>() <= 1e-6);
  CHECK(lines(slurp(dir / "verify.csv")).size() == 2);

  const auto small = run_cli({"verify", "--check", "SectorMeasure", "--samples", "100", "--output-dir", dir.string()});
  CHECK(small.code == exit_ok);

  const auto two = run_cli({"verify", "--check", "CMin", "--check", "JGammaRatio", "--samples", "500",
                            "--output-dir", dir.string()});
  CHECK(two.code == exit_ok);
  CHECK(nlohmann::json::parse(slurp(dir / "verify.json"))["reports"].size() == 2);
}

TEST_CASE("seed from KAKEYA_SEED, overridden by --seed")
{
  const auto dir = scratch("seed");
  ::setenv("KAKEYA_SEED", "123", 1);
  CHECK(run_cli({"verify", "--check", "CMin", "--samples", "200", "--output-dir", dir.string()}).code == exit_ok);
  CHECK(nlohmann::json::parse(slurp(dir / "verify.json"))["seed"] == 123);
  CHECK(run_cli({"verify", "--check", "CMin", "--samples", "200", "--seed", "9", "--output-dir", dir.string()}).code ==
        exit_ok);
  CHECK(nlohmann::json::parse(slurp(dir / "verify.json"))["seed"] == 9);
  ::unsetenv("KAKEYA_SEED");
  CHECK(run_cli({"verify", "--check", "CMin", "--samples", "200", "--output-dir", dir.string()}).code == exit_ok);
  CHECK(nlohmann::json::parse(slurp(dir / "verify.json"))["seed"] == 7);
}

TEST_CASE("config file, with flags taking precedence")
{
  const auto dir = scratch("config");
  {
    std::ofstream cfg(dir / "run.conf");
    cfg << "a = 0.06\nr0 = 0.24\nlambda = 0.9\n";
  }
  const auto r = run_cli({"bound", "--config", (dir / "run.conf").string(), "--r0", "0.23", "--output-dir",
                          dir.string(), "--emit", "json"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(slurp(dir / "bound.json"));
  CHECK(j["params"]["a"].get<double>() == 0.06);
  CHECK(j["params"]["r0"].get<double>() == 0.23);
  CHECK(j["params"]["p"].get<double>() == 0.9);
}

TEST_CASE("scan f")
{
  const auto dir = scratch("scan_f");
  const auto r = run_cli({"scan", "f", "--from", "0.15", "--to", "0.5", "--steps", "105", "--output-dir",
                          dir.string(), "--emit", "csv,svg,json"});
  CHECK(r.code == exit_ok);
  const auto rows = lines(slurp(dir / "scan_f.csv"));
  REQUIRE(rows.size() == 107);
  CHECK(rows[0] == "r,f\r");
  // row with the largest f sits at r = 1/6 (grid step 1/300)
  double best = -1, arg = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    const double r_val = std::stod(rows[i].substr(0, comma));
    const double f_val = std::stod(rows[i].substr(comma + 1));
    if (f_val > best) best = f_val, arg = r_val;
  }
  CHECK(std::abs(arg - 1.0 / 6) <= 1e-12);
  const auto svg = slurp(dir / "scan_f.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(dir / "scan_f.json")).contains("rows"));
}

TEST_CASE("scan g shows the branch switches")
{
  const auto r = run_cli({"scan", "g", "--preset", "theorem", "--output-dir", scratch("scan_g").string()});
  CHECK(r.code == exit_ok);
  std::vector<double> kinks;
  for (const auto& line : lines(r.out))
    if (line.rfind("branch switch at r = ", 0) == 0) kinks.push_back(std::stod(line.substr(21)));
  REQUIRE(kinks.size() == 2);
  CHECK(std::abs(kinks[0] - 0.221) <= 1e-3);
  CHECK(std::abs(kinks[1] - 0.236) <= 1e-3);
}

TEST_CASE("scan final over a grid")
{
  const auto dir = scratch("scan_final");
  const auto r = run_cli({"scan", "final", "--a-from", "0.06", "--a-to", "0.07", "--a-steps", "4", "--r0-from", "0.22",
                          "--r0-to", "0.24", "--r0-steps", "3", "--output-dir", dir.string()});
  CHECK(r.code == exit_ok);
  const auto rows = lines(slurp(dir / "scan_final.csv"));
  REQUIRE(rows.size() == 1 + 5 * 4);
  CHECK(rows[0] == "a,r0,p,lambda,final,balanced_p,objective\r");
}

TEST_CASE("outputs are byte-identical across runs")
{
  const auto d1 = scratch("det1"), d2 = scratch("det2");
  for (const auto& dir : {d1, d2}) {
    CHECK(run_cli({"scan", "g", "--output-dir", dir.string(), "--emit", "csv,svg,json"}).code == exit_ok);
    CHECK(run_cli({"bound", "--output-dir", dir.string(), "--emit", "csv,svg,json"}).code == exit_ok);
    CHECK(run_cli({"verify", "--check", "IsoscelesMinimality", "--check", "ArcConsistency", "--samples", "500",
                   "--output-dir", dir.string(), "--emit", "csv,json"})
              .code == exit_ok);
    CHECK(run_cli({"optimize", "--a-from", "0.06", "--a-to", "0.07", "--r0-from", "0.22", "--r0-to", "0.24",
                   "--lambda-from", "0.9", "--lambda-to", "0.91", "--grid", "6", "--starts", "2", "--output-dir",
                   dir.string(), "--emit", "csv,json"})
              .code == exit_ok);
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(d1)) {
    const auto other = d2 / entry.path().filename();
    REQUIRE(fs::exists(other));
    CHECK_MESSAGE(slurp(entry.path()) == slurp(other), entry.path().filename().string());
    ++files;
  }
  CHECK(files >= 8);
}

TEST_CASE("csv quoting")
{
  const auto text = to_csv({"x", "note"}, {{"1", "plain"}, {"2", "has,comma"}, {"3", "has \"quote\""}});
  CHECK(text == "x,note\r\n1,plain\r\n2,\"has,comma\"\r\n3,\"has \"\"quote\"\"\"\r\n");
  CHECK(format_real(0.1) == "0.10000000000000001");
}
