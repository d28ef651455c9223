#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rka/dict.hpp"
#include "rka/json_io.hpp"
#include "rka/nbest.hpp"
#include "rka/space.hpp"
#include "rka/target.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RKA_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "rka_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const fs::path& p) { return json::parse(slurp(p)); }

}  // namespace

TEST_CASE("cli poafd run") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "poafd.json";
  const fs::path csv = dir / "poafd.csv";
  const int code = run_cli("poafd --space hardy --truncation 256 --rmax 0.9 --builtin f3 "
                           "--n 3 --grid 16x32 --output " + out.string() +
                           " --csv " + csv.string());
  REQUIRE(code == 0);
  const json j = load_json(out);
  CHECK(j.at("space").at("kind") == "hardy");
  CHECK(j.at("result").at("parameters").size() == 3);
  const auto trace = j.at("result").at("objective_trace").get<std::vector<double>>();
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i] <= trace[i - 1] + 1e-12);
  const std::string csv_text = slurp(csv);
  CHECK(csv_text.rfind("step,value\n", 0) == 0);
}

TEST_CASE("cli nbest determinism and round trip") {
  const fs::path dir = temp_dir();
  const fs::path out1 = dir / "n1.json";
  const fs::path out2 = dir / "n2.json";
  const std::string common =
      "nbest --space bergman --alpha 0 --truncation 256 --rmax 0.9 --builtin f1 "
      "--n 1 --starts 2 --grid 12x24 --seed 99 --output ";
  REQUIRE(run_cli(common + out1.string()) == 0);
  REQUIRE(run_cli(common + out2.string()) == 0);
  CHECK(slurp(out1) == slurp(out2));  // byte identical

  // Reloading the output as a target + parameters reproduces the residual.
  const json j = load_json(out1);
  const rka::SpaceSpec spec = rka::io::space_from_json(j.at("space"));
  const rka::PowerSeries f = rka::io::target_from_json(j.at("target")).expand(spec);
  const rka::ParameterTuple tuple =
      rka::io::tuple_from_json(j.at("result").at("parameters"));
  rka::PowerSeries approx(spec.truncation());
  const auto coeffs = j.at("result").at("coefficients");
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    approx.axpy(rka::io::complex_from_json(coeffs[k]),
                rka::kernel(spec, tuple.point(k), tuple.order(k)).series);
  }
  rka::PowerSeries diff = f;
  diff -= approx;
  const double reported = j.at("result").at("residual_norm").get<double>();
  CHECK(std::abs(rka::norm(diff, spec) - reported) < 1e-12);
}

TEST_CASE("cli probe dbvc csv") {
  const fs::path dir = temp_dir();
  const fs::path csv = dir / "dbvc.csv";
  REQUIRE(run_cli("probe dbvc --space bergman --alpha 0 --truncation 64 --z 0.2,0.1 "
                  "--jmax 13 --csv " + csv.string()) == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,radius,value");
  double last = 1.0;
  std::string line;
  while (std::getline(in, line)) {
    const auto c2 = line.find(',', line.find(',') + 1);
    REQUIRE(c2 != std::string::npos);
    last = std::stod(line.substr(c2 + 1));
  }
  CHECK(last < 0.05);
}

TEST_CASE("cli check lic") {
  const fs::path dir = temp_dir();
  const fs::path out = dir / "lic.json";
  REQUIRE(run_cli("check lic --space hardy --truncation 512 --rmax 0.95 "
                  "--params \"0,0;0.5,0\" --output " + out.string()) == 0);
  const json j = load_json(out);
  CHECK(j.at("gram_min_eig").get<double>() ==
        doctest::Approx(1.0 - std::sqrt(0.75)).epsilon(1e-9));
}

TEST_CASE("cli eval") {
  const fs::path dir = temp_dir();
  const fs::path target = dir / "target.json";
  {
    std::ofstream out(target);
    out << R"({"taylor": [[1,0],[2,0]]})";
  }
  const fs::path res = dir / "eval.json";
  REQUIRE(run_cli("eval --space hardy --truncation 64 --input " + target.string() +
                  " --z 0.5,0 --output " + res.string()) == 0);
  const json j = load_json(res);
  CHECK(j.at("values")[0].at("value")[0].get<double>() == doctest::Approx(2.0));
  CHECK(j.at("norm").get<double>() == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("cli to-rational") {
  const fs::path dir = temp_dir();
  const fs::path nbest_out = dir / "f2.json";
  REQUIRE(run_cli("nbest --space hardy --truncation 256 --rmax 0.9 --builtin f2 --n 2 "
                  "--starts 2 --grid 16x32 --seed 4 --output " + nbest_out.string()) == 0);
  const fs::path rat_out = dir / "f2_rational.json";
  REQUIRE(run_cli("to-rational --input " + nbest_out.string() + " --output " +
                  rat_out.string()) == 0);
  const json j = load_json(rat_out);
  CHECK(j.at("admissible").get<bool>());
  CHECK(j.at("q").size() == 3);
}

TEST_CASE("json encoding round trips") {
  const rka::SpaceSpec spec = rka::SpaceSpec::weighted_bergman(1.5, 256, 0.9);
  const rka::SpaceSpec back = rka::io::space_from_json(rka::io::space_to_json(spec));
  CHECK(back == spec);

  const rka::TargetSpec t = rka::TargetSpec::from_rational(
      {rka::Complex{2.0, 1.0}}, {rka::Complex{0.5, -0.25}});
  const rka::TargetSpec t2 = rka::io::target_from_json(rka::io::target_to_json(t));
  rka::PowerSeries diff = t.expand(spec);
  diff -= t2.expand(spec);
  CHECK(rka::norm(diff, spec) == 0.0);

  CHECK_THROWS_AS((void)rka::io::target_from_json(json::object()), std::invalid_argument);
  CHECK_THROWS_AS((void)rka::io::complex_from_json(json::array({1.0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)rka::io::space_from_json(json{{"kind", "sobolev"}}),
      std::invalid_argument);

  // a taylor list longer than the truncation cannot expand
  const rka::TargetSpec wide =
      rka::TargetSpec::from_taylor(std::vector<rka::Complex>(300, rka::Complex{1.0, 0.0}));
  CHECK_THROWS_AS((void)wide.expand(spec), std::invalid_argument);  // truncation 256
}

TEST_CASE("cli degeneracy exits with code 3") {
  const fs::path dir = temp_dir();
  const fs::path dup = dir / "dup.json";
  {
    std::ofstream out(dup);
    out << R"({"space": {"kind":"hardy","truncation":128,"rmax":0.95,"alpha":0.0},
               "target": {"builtin":"f4"},
               "result": {"parameters": [[0.3,0.0],[0.3,0.0]]}})";
  }
  CHECK(run_cli("to-rational --input " + dup.string()) == 3);
}

TEST_CASE("cli validation failures exit with code 2") {
  CHECK(run_cli("poafd --space hardy --n 2") == 2);          // no target
  CHECK(run_cli("nbest --space bergman --alpha -2 --builtin f1 --n 1") == 2);
  CHECK(run_cli("eval --space hardy --input /nonexistent.json") == 2);
  const fs::path dir = temp_dir();
  const fs::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << "{ not json";
  }
  CHECK(run_cli("eval --space hardy --input " + bad.string()) == 2);
  const fs::path badpole = dir / "badpole.json";
  {
    std::ofstream out(badpole);
    out << R"({"rational": {"poles": [[0.5,0]], "residues": [[1,0]]}})";
  }
  CHECK(run_cli("eval --space hardy --input " + badpole.string()) == 2);
}
