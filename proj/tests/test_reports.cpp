#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "knapqaoa/json_io.hpp"

using namespace knapqaoa;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args, bool capture_stderr = false) {
  static int counter = 0;
  const std::string out_path = "/tmp/knapqaoa_cli_out_" + std::to_string(counter++) + ".txt";
  const std::string redirect = capture_stderr ? " 2>&1" : " 2>/dev/null";
  const std::string command =
      std::string(KNAPQAOA_CLI_PATH) + " " + args + " > " + out_path + redirect;
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = status == -1 ? -1 : WEXITSTATUS(status);
  result.out = slurp(out_path);
  std::remove(out_path.c_str());
  return result;
}

}  // namespace

TEST_CASE("instance json round trip") {
  KnapsackInstance inst;
  inst.values = {0.25, 0.5, 0.125};
  inst.weights = {1, 2, 1};
  inst.capacity = 2;
  std::vector<std::string> tickers{"A", "B", "C"};

  const auto j = instance_to_json(inst, tickers);
  std::vector<std::string> back_tickers;
  const auto back = instance_from_json(j, &back_tickers);
  CHECK(back.values == inst.values);
  CHECK(back.weights == inst.weights);
  CHECK(back.capacity == inst.capacity);
  CHECK(back_tickers == tickers);

  CHECK_THROWS_AS(instance_from_json(ordered_json{{"values", {1.0}}}, nullptr),
                  std::invalid_argument);
}

TEST_CASE("bundled fixture file matches the embedded instances") {
  const auto from_file = read_json_file(std::string(KNAPQAOA_DATA_DIR) +
                                        "/fixtures/table_instances.json");
  CHECK(from_file == fixtures_to_json());
}

TEST_CASE("report json carries the full schema") {
  const auto report = run(fixture("stocks2").instance, 1, 1, 30, 3, 0, false,
                          fixture("stocks2").tickers);
  const auto j = report_to_json(report);
  for (const char* key :
       {"instance", "p", "m", "budget", "seed", "shots", "schedule", "expectation", "bks",
        "best_feasible", "ratio_best", "ratio_expectation", "evaluations", "wall_ms",
        "distribution"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["wall_ms"].is_null());
  CHECK(j["instance"]["tickers"].size() == 2);

  const auto& dist = j["distribution"];
  for (std::size_t i = 1; i < dist.size(); ++i) {
    CHECK(dist[i - 1][1].get<double>() >= dist[i][1].get<double>());
  }

  RunReport timed = report;
  timed.wall_ms = 12.5;
  CHECK(report_to_json(timed)["wall_ms"].get<double>() == 12.5);
}

TEST_CASE("cli ingest") {
  const auto res = run_cli("ingest --fixture stocks4");
  CHECK(res.exit_code == 0);
  const auto j = ordered_json::parse(res.out);
  CHECK(j["values"] == ordered_json::array({0.2430, 0.2602, 0.1047, 0.2430}));
  CHECK(j["capacity"] == 2);

  CHECK(run_cli("ingest --prices /nonexistent.csv --tickers MSFT").exit_code == 2);
  CHECK(run_cli("ingest --fixture nosuch").exit_code == 2);
  CHECK(run_cli("ingest --fixture stocks2 --instance x.json").exit_code == 2);
}

TEST_CASE("cli ingest from prices") {
  const std::string csv = std::string(KNAPQAOA_DATA_DIR) + "/prices_2018_2023.csv";
  const auto res = run_cli("ingest --prices " + csv +
                           " --tickers MSFT,NVDA --start 2019-01-01 --end 2020-12-31");
  CHECK(res.exit_code == 0);
  const auto j = ordered_json::parse(res.out);
  CHECK(j["tickers"] == ordered_json::array({"MSFT", "NVDA"}));
  CHECK(j["weights"] == ordered_json::array({1, 1}));
  CHECK(j["capacity"] == 1);

  CHECK(run_cli("ingest --prices " + csv + " --tickers MSFT,TSLA").exit_code == 2);
}

TEST_CASE("cli ingest reports the qubit count") {
  const auto res = run_cli("ingest --fixture stocks8 --out /dev/null", /*capture_stderr=*/true);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("qubits: 15") != std::string::npos);
}

TEST_CASE("cli bks") {
  const auto res = run_cli("bks --fixture stocks2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("bits: 01\n") != std::string::npos);
  CHECK(res.out.find("value: 0.2602") != std::string::npos);

  const auto six = run_cli("bks --fixture stocks6");
  CHECK(six.out.find("value: 0.9235") != std::string::npos);
}

TEST_CASE("cli bks accepts an instance file produced by ingest") {
  const std::string path = "/tmp/knapqaoa_instance.json";
  CHECK(run_cli("ingest --fixture stocks3 --out " + path).exit_code == 0);
  const auto res = run_cli("bks --instance " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("bits: 010\n") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli solve writes byte-identical reports for equal seeds") {
  const std::string a = "/tmp/knapqaoa_solve_a.json";
  const std::string b = "/tmp/knapqaoa_solve_b.json";
  const std::string args = "solve --fixture stocks2 --p 1 --m 1 --budget 40 --seed 7 --out ";
  CHECK(run_cli(args + a).exit_code == 0);
  CHECK(run_cli(args + b).exit_code == 0);
  const auto text_a = slurp(a);
  CHECK(!text_a.empty());
  CHECK(text_a == slurp(b));
  const auto j = ordered_json::parse(text_a);
  CHECK(j["p"] == 1);
  CHECK(j["wall_ms"].is_null());
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("cli solve --timings records wall time") {
  const auto res = run_cli("solve --fixture stocks2 --p 1 --m 1 --budget 30 --timings");
  CHECK(res.exit_code == 0);
  const auto j = ordered_json::parse(res.out);
  CHECK(j["wall_ms"].is_number());
  CHECK(j["wall_ms"].get<double>() > 0.0);
}

TEST_CASE("cli sweep emits the documented csv") {
  const auto res = run_cli("sweep --fixture stocks2 --axis p --range 1..2 --m 1 --budget 30");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "instance,axis,value,ratio_best,ratio_expectation,wall_ms");
  int rows = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
    CHECK(line.rfind("stocks2,p,", 0) == 0);
  }
  CHECK(rows == 2);
}

TEST_CASE("cli solve with shots samples a normalized distribution") {
  const auto res = run_cli("solve --fixture stocks3 --p 1 --m 1 --budget 30 --seed 1 --shots 2000");
  CHECK(res.exit_code == 0);
  const auto j = ordered_json::parse(res.out);
  CHECK(j["shots"] == 2000);
  double total = 0.0;
  for (const auto& entry : j["distribution"]) total += entry[1].get<double>();
  CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cli sweep over trotter steps") {
  const auto res = run_cli("sweep --fixture stocks2 --axis m --range 2..2 --p 1 --budget 30");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("stocks2,m,2,") != std::string::npos);
}

TEST_CASE("cli sweep covers every bundled instance when no source is given") {
  const auto res = run_cli("sweep --axis p --range 1..1 --m 1 --budget 16");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);  // header
  std::vector<std::string> names;
  while (std::getline(lines, line)) {
    if (!line.empty()) names.push_back(line.substr(0, line.find(',')));
  }
  const std::vector<std::string> expected{"stocks2", "stocks3", "stocks4", "stocks5",
                                          "stocks6", "stocks7", "stocks8"};
  CHECK(names == expected);
}

TEST_CASE("cli report pretty-prints a solve output") {
  const std::string path = "/tmp/knapqaoa_report_in.json";
  CHECK(run_cli("solve --fixture stocks3 --p 1 --m 1 --budget 30 --out " + path).exit_code == 0);
  const auto res = run_cli("report --in " + path);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("ratio_best") != std::string::npos);
  CHECK(res.out.find("bks:") != std::string::npos);
  std::remove(path.c_str());

  CHECK(run_cli("report --in /nonexistent.json").exit_code == 2);
}
