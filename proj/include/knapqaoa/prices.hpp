#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "knapqaoa/knapsack.hpp"

namespace knapqaoa {

/// Trading days per year used to annualize mean daily returns.
inline constexpr double kTradingDaysPerYear = 252.0;

/// Adjusted close prices, one row per trading date, one column per ticker.
struct PriceSeries {
  std::vector<std::string> tickers;
  std::vector<std::string> dates;               // ISO-8601, strictly increasing
  std::vector<std::vector<double>> closes;      // closes[row][col] > 0

  /// Throws std::invalid_argument when any invariant is broken: fewer than
  /// two rows, a non-positive close, non-increasing dates, or a row whose
  /// width differs from the ticker count.
  void validate() const;
};

/// Annualized expected return per ticker (dimensionless fraction).
struct ExpectedReturns {
  std::vector<std::string> tickers;
  std::vector<double> values;
};

/// Reads a price CSV (header `date,<T1>,<T2>,...`) and returns the series
/// restricted to the requested tickers, in the requested order.
/// Errors: missing file, missing ticker column, non-positive price,
/// non-monotone dates, malformed rows.
PriceSeries load_prices(const std::string& path, const std::vector<std::string>& tickers);

/// Same contract as load_prices but reads from a stream; `origin` names the
/// source in error messages.
PriceSeries parse_prices(std::istream& in, const std::vector<std::string>& tickers,
                         const std::string& origin = "<stream>");

/// Rows with start <= date <= end (ISO-8601 string comparison); empty bounds
/// are open.
PriceSeries clip_date_range(const PriceSeries& prices, const std::string& start,
                            const std::string& end);

/// values[i] = 252 * mean over t of (close[t,i] / close[t-1,i] - 1).
ExpectedReturns expected_returns(const PriceSeries& prices);

/// Unit weights, capacity = floor(N / 2), values carried over unchanged.
KnapsackInstance encode_to_knapsack(const ExpectedReturns& er);

}  // namespace knapqaoa
