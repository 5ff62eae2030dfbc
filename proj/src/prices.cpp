#include "knapqaoa/prices.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace knapqaoa {

void PriceSeries::validate() const {
  if (closes.size() < 2) throw std::invalid_argument("price series: fewer than 2 rows");
  if (dates.size() != closes.size()) throw std::invalid_argument("price series: date/row count mismatch");
  for (std::size_t r = 0; r < closes.size(); ++r) {
    if (closes[r].size() != tickers.size()) {
      throw std::invalid_argument("price series: row width differs from ticker count");
    }
    for (double c : closes[r]) {
      if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("price series: non-positive price");
    }
    if (r > 0 && !(dates[r - 1] < dates[r])) {
      throw std::invalid_argument("price series: non-monotone dates at " + dates[r]);
    }
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

PriceSeries parse_prices(std::istream& in, const std::vector<std::string>& tickers,
                         const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(origin + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split_csv_line(line);
  if (header.empty() || header[0] != "date") {
    throw std::invalid_argument(origin + ": header must start with 'date'");
  }

  // Column index per requested ticker, in the requested order.
  std::vector<std::size_t> columns;
  for (const auto& ticker : tickers) {
    std::size_t col = 0;
    bool found = false;
    for (std::size_t h = 1; h < header.size(); ++h) {
      if (header[h] == ticker) {
        col = h;
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument(origin + ": missing ticker " + ticker);
    columns.push_back(col);
  }

  PriceSeries series;
  series.tickers = tickers;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::invalid_argument(origin + ": line " + std::to_string(line_no) + ": malformed row");
    }
    series.dates.push_back(fields[0]);
    std::vector<double> row;
    row.reserve(columns.size());
    for (std::size_t col : columns) {
      std::size_t consumed = 0;
      double price = 0.0;
      try {
        price = std::stod(fields[col], &consumed);
      } catch (const std::exception&) {
        throw std::invalid_argument(origin + ": line " + std::to_string(line_no) + ": bad number '" +
                                    fields[col] + "'");
      }
      if (consumed != fields[col].size()) {
        throw std::invalid_argument(origin + ": line " + std::to_string(line_no) + ": bad number '" +
                                    fields[col] + "'");
      }
      row.push_back(price);
    }
    series.closes.push_back(std::move(row));
  }
  series.validate();
  return series;
}

PriceSeries load_prices(const std::string& path, const std::vector<std::string>& tickers) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_prices: cannot open " + path);
  return parse_prices(in, tickers, path);
}

PriceSeries clip_date_range(const PriceSeries& prices, const std::string& start,
                            const std::string& end) {
  PriceSeries out;
  out.tickers = prices.tickers;
  for (std::size_t r = 0; r < prices.dates.size(); ++r) {
    const std::string& d = prices.dates[r];
    if (!start.empty() && d < start) continue;
    if (!end.empty() && d > end) continue;
    out.dates.push_back(d);
    out.closes.push_back(prices.closes[r]);
  }
  out.validate();
  return out;
}

ExpectedReturns expected_returns(const PriceSeries& prices) {
  prices.validate();
  const std::size_t rows = prices.closes.size();
  ExpectedReturns er;
  er.tickers = prices.tickers;
  er.values.reserve(prices.tickers.size());
  for (std::size_t i = 0; i < prices.tickers.size(); ++i) {
    double sum = 0.0;
    for (std::size_t t = 1; t < rows; ++t) {
      sum += prices.closes[t][i] / prices.closes[t - 1][i] - 1.0;
    }
    er.values.push_back(kTradingDaysPerYear * sum / static_cast<double>(rows - 1));
  }
  return er;
}

KnapsackInstance encode_to_knapsack(const ExpectedReturns& er) {
  if (er.values.empty()) throw std::invalid_argument("encode_to_knapsack: no assets");
  KnapsackInstance inst;
  inst.values = er.values;
  inst.weights.assign(er.values.size(), 1);
  inst.capacity = static_cast<std::int64_t>(er.values.size()) / 2;
  return inst;
}

}  // namespace knapqaoa
