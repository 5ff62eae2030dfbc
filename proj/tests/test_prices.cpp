#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "knapqaoa/fixtures.hpp"
#include "knapqaoa/prices.hpp"
#include "support/reference.hpp"

using namespace knapqaoa;

namespace {

PriceSeries parse(const std::string& csv, const std::vector<std::string>& tickers) {
  std::istringstream in(csv);
  return parse_prices(in, tickers, "test.csv");
}

}  // namespace

TEST_CASE("csv parsing keeps requested tickers in requested order") {
  const auto series = parse(
      "date,MSFT,AAPL\n"
      "2020-01-02,100.0,50.0\n"
      "2020-01-03,101.0,51.0\n"
      "2020-01-06,102.0,49.5\n",
      {"AAPL", "MSFT"});
  CHECK(series.dates.size() == 3);
  CHECK(series.tickers == std::vector<std::string>{"AAPL", "MSFT"});
  CHECK(series.closes[0][0] == 50.0);
  CHECK(series.closes[0][1] == 100.0);
}

TEST_CASE("csv errors") {
  CHECK_THROWS_WITH_AS(parse("date,MSFT\n2020-01-02,1.0\n2020-01-03,2.0\n", {"NVDA"}),
                       doctest::Contains("missing ticker"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("date,MSFT\n2020-01-02,0.0\n2020-01-03,2.0\n", {"MSFT"}),
                       doctest::Contains("non-positive"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse("date,MSFT\n2020-01-03,1.0\n2020-01-02,2.0\n", {"MSFT"}),
                       doctest::Contains("non-monotone"), std::invalid_argument);
  CHECK_THROWS_AS(parse("date,MSFT\n2020-01-02,1.0\n", {"MSFT"}), std::invalid_argument);
  CHECK_THROWS_AS(parse("price,MSFT\n2020-01-02,1.0\n", {"MSFT"}), std::invalid_argument);
  CHECK_THROWS_AS(parse("date,MSFT\n2020-01-02,abc\n2020-01-03,2.0\n", {"MSFT"}),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_prices("/nonexistent/prices.csv", {"MSFT"}), std::invalid_argument);
}

TEST_CASE("expected returns on hand-checkable series") {
  const auto flat = parse("date,A\n2020-01-02,5.0\n2020-01-03,5.0\n2020-01-06,5.0\n", {"A"});
  CHECK(expected_returns(flat).values[0] == 0.0);

  const auto up = parse("date,A\n2020-01-02,100.0\n2020-01-03,101.0\n", {"A"});
  CHECK(expected_returns(up).values[0] == doctest::Approx(2.52).epsilon(1e-12));
}

TEST_CASE("expected returns are invariant under uniform price scaling") {
  auto rng = testref::make_rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    PriceSeries series;
    series.tickers = {"A"};
    double price = testref::uniform(rng, 10.0, 500.0);
    for (int r = 0; r < 30; ++r) {
      char date[16];
      std::snprintf(date, sizeof date, "2021-01-%02d", r + 1);
      series.dates.emplace_back(date);
      series.closes.push_back({price});
      price *= testref::uniform(rng, 0.95, 1.06);
    }
    const double base = expected_returns(series).values[0];
    const double scale = testref::uniform(rng, 0.1, 40.0);
    for (auto& row : series.closes) row[0] *= scale;
    CHECK(expected_returns(series).values[0] == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("bundled price fixture reproduces its goldens") {
  const std::string path = std::string(KNAPQAOA_DATA_DIR) + "/prices_2018_2023.csv";
  const auto series = load_prices(path, {"MSFT", "AAPL", "NVDA"});
  CHECK(series.dates.size() == 1305);
  CHECK(series.dates.front() == "2018-01-01");

  // Frozen from scripts/gen_price_fixture.py over the committed CSV.
  const auto er = expected_returns(series);
  CHECK(er.values[0] == doctest::Approx(-0.030887917092474952).epsilon(1e-12));
  CHECK(er.values[1] == doctest::Approx(-0.025483094702350221).epsilon(1e-12));
  CHECK(er.values[2] == doctest::Approx(0.46035719492912497).epsilon(1e-12));

  const auto clipped = clip_date_range(series, "2019-01-01", "2019-12-31");
  CHECK(clipped.dates.front() >= "2019-01-01");
  CHECK(clipped.dates.back() <= "2019-12-31");
  CHECK(clipped.dates.size() == 261);
}

TEST_CASE("knapsack encoding: unit weights, half capacity, values preserved") {
  ExpectedReturns er;
  er.tickers = {"A", "B", "C"};
  er.values = {0.2430, 0.2602, 0.2430};
  const auto inst = encode_to_knapsack(er);
  CHECK(inst.values == er.values);
  CHECK(inst.weights == std::vector<std::int64_t>{1, 1, 1});
  CHECK(inst.capacity == 1);

  for (int n = 1; n <= 8; ++n) {
    ExpectedReturns e;
    for (int i = 0; i < n; ++i) {
      e.tickers.push_back("T" + std::to_string(i));
      e.values.push_back(0.01 * i);
    }
    const auto encoded = encode_to_knapsack(e);
    CHECK(encoded.capacity == n / 2);
    CHECK(encoded.values == e.values);
  }
}

TEST_CASE("encoded capacities match the bundled instances") {
  for (const auto& f : table_fixtures()) {
    ExpectedReturns er{f.tickers, f.instance.values};
    const auto inst = encode_to_knapsack(er);
    CHECK(inst.capacity == f.instance.capacity);
    CHECK(inst.weights == f.instance.weights);
    CHECK(inst.values == f.instance.values);
  }
}
