#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "support/cli_runner.hpp"

using cli_runner::run;
using nlohmann::json;

TEST_CASE("gen emits the moment list in every format") {
  auto csv = run("gen --family laguerre --n 2 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "n,mu\n0,1\n1,1\n2,2\n3,6\n4,24\n");

  auto js = run("gen --family hermite --n 1 --format json");
  CHECK(js.exit_code == 0);
  json report = json::parse(js.output);
  CHECK(report["moments"] == json::array({"1", "0", "1/2"}));

  auto text = run("gen --family legendre --n 1");
  CHECK(text.exit_code == 0);
  CHECK(text.output == "mu_0 = 2\nmu_1 = 0\nmu_2 = 2/3\n");

  auto sigma = run("gen --family laguerre --n 2 --k 1 --format json");
  json sigma_report = json::parse(sigma.output);
  CHECK(sigma_report["sigma"]["1"] == json::array({"1", "2", "6"}));
}

TEST_CASE("invalid input exits 2 and names the condition") {
  CHECK(run("gen --a 1 --b 0 --c 0 --d -3 --e 2 --n 4 2>&1").exit_code == 2);
  auto degenerate = run("gen --a 1 --b 0 --c 0 --d -3 --e 2 --n 4 2>&1");
  CHECK(degenerate.output.find("DegenerateRecurrence at n=3") != std::string::npos);

  CHECK(run("gen --a 0 --b 0 --c 0 --d 1 --e 1 --n 2 2>&1").exit_code == 2);
  auto invalid_phi = run("gen --a 0 --b 0 --c 0 --d 1 --e 1 --n 2 2>&1");
  CHECK(invalid_phi.output.find("InvalidPhi") != std::string::npos);

  CHECK(run("gen --family hermite --mu0 0 --n 2 2>&1").exit_code == 2);
  CHECK(run("gen --family hermite --n 0 2>&1").exit_code == 2);
  CHECK(run("verify --family hermite --n 2 --checks nonsense 2>&1").exit_code == 2);
  CHECK(run("gen --family hermite --a 1 --b 0 --c 0 --d 1 --e 1 --n 2 2>&1").exit_code == 2);
  CHECK(run("gen --family hermite --mu0 1/0 --n 2 2>&1").exit_code == 2);
}

TEST_CASE("verify runs the whole suite and reports varpi") {
  auto result = run(
      "verify --family legendre --n 6 --checks all --k 2 --format json "
      "--no-timing");
  CHECK(result.exit_code == 0);
  json report = json::parse(result.output);
  CHECK(report["varpi"] == json::array({"2", "12"}));
  for (const auto& [name, body] : report["checks"].items()) {
    CAPTURE(name);
    CHECK(body["status"] == "pass");
  }
  CHECK(report["h"][0] == "2");
  CHECK(report["h"][2] == "8/45");
}

TEST_CASE("verify flags the Dirac-delta data as non-classical") {
  auto result =
      run("verify --a 0 --b 1 --c 0 --d 1 --e 0 --mu0 1 --n 3 --format json "
          "--no-timing 2>/dev/null");
  CHECK(result.exit_code == 1);
  json report = json::parse(result.output);
  CHECK(report["checks"]["recurrence"]["status"] == "pass");
  CHECK(report["checks"]["cholesky"]["status"] == "fail");
  CHECK(report["checks"]["cholesky"]["failed_at"] == 1);

  auto message =
      run("verify --a 0 --b 1 --c 0 --d 1 --e 0 --mu0 1 --n 3 2>&1 >/dev/null");
  CHECK(message.output.find("QuasiDefiniteViolation at order 1") !=
        std::string::npos);
}

TEST_CASE("verify bochner reports the eigenvalue list") {
  auto result = run(
      "verify --family hermite --n 4 --checks bochner --format json --no-timing");
  CHECK(result.exit_code == 0);
  json report = json::parse(result.output);
  CHECK(report["lambda"] == json::array({"0", "-2", "-4", "-6", "-8"}));
  CHECK(report["checks"]["bochner"]["status"] == "pass");
  CHECK(report["checks"].size() == 1);
}

TEST_CASE("factor emits the diagonal and the columns") {
  auto result = run("factor --family legendre --n 2 --format json");
  CHECK(result.exit_code == 0);
  json report = json::parse(result.output);
  CHECK(report["h"] == json::array({"2", "2/3", "8/45"}));
  CHECK(report["s_columns"][2] == json::array({"-1/3", "0", "1"}));

  auto csv = run("factor --family hermite --n 3 --format csv");
  CHECK(csv.output == "j,h\n0,1\n1,1/2\n2,1/2\n3,3/4\n");

  auto dirac = run("factor --a 0 --b 1 --c 0 --d 1 --e 0 --n 2 2>&1");
  CHECK(dirac.exit_code == 1);
  CHECK(dirac.output.find("QuasiDefiniteViolation at order 1") !=
        std::string::npos);
}

TEST_CASE("polys prints deterministic polynomial text") {
  auto legendre = run("polys --family legendre --n 3");
  CHECK(legendre.exit_code == 0);
  CHECK(legendre.output.find("P_3 = x^3 - 3/5 x") != std::string::npos);

  auto laguerre = run("polys --family laguerre --n 2");
  CHECK(laguerre.output.find("P_2 = x^2 - 4 x + 2") != std::string::npos);

  auto hermite = run("polys --family hermite --n 2 --k 1");
  CHECK(hermite.output.find("Q^(1)_0 = 1") != std::string::npos);
  CHECK(hermite.output.find("Q^(1)_1 = x") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs and match the goldens") {
  const std::string dir = cli_runner::golden_dir();
  for (const std::string family : {"hermite", "laguerre", "legendre", "bessel"}) {
    std::string report_args =
        "report --family " + family + " --n 6 --k 2 --no-timing";
    auto first = run(report_args);
    auto second = run(report_args);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output == cli_runner::read_file(dir + "/" + family + "_n6.json"));

    std::string gen_args =
        "gen --family " + family + " --n 6 --k 1 --format csv --no-timing";
    auto gen_first = run(gen_args);
    auto gen_second = run(gen_args);
    CHECK(gen_first.exit_code == 0);
    CHECK(gen_first.output == gen_second.output);
    CHECK(gen_first.output ==
          cli_runner::read_file(dir + "/" + family + "_n6.csv"));
  }
}

TEST_CASE("the JSON report is written to --out for verify") {
  std::string path = "/tmp/orthopoly_cli_test_report.json";
  std::remove(path.c_str());
  auto result = run("verify --family legendre --n 3 --no-timing --out " + path);
  CHECK(result.exit_code == 0);
  json report = json::parse(cli_runner::read_file(path));
  CHECK(report["config"]["family"] == "legendre");
  CHECK(report["checks"]["cholesky"]["status"] == "pass");
  std::remove(path.c_str());
}
