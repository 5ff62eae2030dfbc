#!/usr/bin/env python3
"""Generates the bundled synthetic price fixture and its golden values.

Writes data/prices_2018_2023.csv: weekday closes for MSFT/AAPL/NVDA from
2018-01-01 through 2023-01-01, produced by a seeded multiplicative random
walk (no real market data ships with the repository). Prints the annualized
mean daily simple return per ticker; those numbers are frozen into
tests/test_prices.cpp.

Run once; the CSV is committed.
"""

import datetime
import math
import random


TICKERS = ["MSFT", "AAPL", "NVDA"]
START = datetime.date(2018, 1, 1)
END = datetime.date(2023, 1, 1)
SEED = 20180101
INITIAL = {"MSFT": 85.5, "AAPL": 43.0, "NVDA": 49.8}
DAILY_DRIFT = {"MSFT": 0.00055, "AAPL": 0.00060, "NVDA": 0.00075}
DAILY_VOL = {"MSFT": 0.017, "AAPL": 0.019, "NVDA": 0.027}


def weekdays(start, end):
    day = start
    while day <= end:
        if day.weekday() < 5:
            yield day
        day += datetime.timedelta(days=1)


def main():
    rng = random.Random(SEED)
    prices = dict(INITIAL)
    rows = []
    for day in weekdays(START, END):
        rows.append((day.isoformat(), dict(prices)))
        for t in TICKERS:
            shock = rng.gauss(0.0, 1.0)
            prices[t] *= math.exp(DAILY_DRIFT[t] - 0.5 * DAILY_VOL[t] ** 2 + DAILY_VOL[t] * shock)

    with open("data/prices_2018_2023.csv", "w", encoding="utf-8") as f:
        f.write("date," + ",".join(TICKERS) + "\n")
        for date, close in rows:
            f.write(date + "," + ",".join(f"{close[t]:.4f}" for t in TICKERS) + "\n")

    # Goldens: recompute from the written file so rounding is included.
    with open("data/prices_2018_2023.csv", encoding="utf-8") as f:
        header = f.readline().strip().split(",")
        data = [line.strip().split(",") for line in f if line.strip()]
    for col, ticker in enumerate(header[1:], start=1):
        closes = [float(r[col]) for r in data]
        mean_daily = sum(closes[i] / closes[i - 1] - 1.0 for i in range(1, len(closes))) / (
            len(closes) - 1
        )
        print(f"{ticker}: rows={len(closes)} annualized={252.0 * mean_daily:.17g}")


if __name__ == "__main__":
    main()
