# Copyright 2026 The infoeq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerate the bundled synthetic US snapshots under data/.

The files mimic the shape and rough magnitude of the FRED series the
models were built for (quarterly NGDP, currency, monetary base, core PCE,
long and short rates, hours, capital and employment). They are synthetic:
values come from smooth anchors plus seeded noise, and the dependent series
are produced by the models themselves at the reference parameters, so fits
on them are meaningful but carry no empirical claim.

Usage: python3 tools/make_snapshots.py [output_dir]
"""

import pathlib
import sys

import numpy as np

SEED = 20150101
HEADER = "# synthetic snapshot, tools/make_snapshots.py seed {seed}; not observed data"

# Reference parameters used to derive the dependent series.
ALPHA, GAMMA, M0 = 0.641, 5.93e-4, 603.8
K_I, K_P = 3.49, 0.124
K_H = 0.43
A_TFP, K1, K2 = 0.0024, 0.44, 0.84


def quarters(first_year, last_year):
    years = np.arange(first_year, last_year + 1)
    return [(y, q) for y in years for q in range(4)]


def iso(year, quarter=0):
    return f"{year:04d}-{3 * quarter + 1:02d}-01"


def anchored(times, anchors, rng, sd, rho=0.9):
    """log-linear path through (year, level) anchors with AR(1) deviations."""
    ay = np.array([a[0] for a in anchors], float)
    av = np.log(np.array([a[1] for a in anchors], float))
    base = np.interp(times, ay, av)
    dev = np.zeros(len(times))
    for i in range(1, len(times)):
        dev[i] = rho * dev[i - 1] + rng.normal(0.0, sd)
    return base + dev


def price_level(n, m):
    c0 = GAMMA * M0
    k = np.log(n / c0) / np.log(m / c0)
    return ALPHA * k * (m / M0) ** (k - 1.0)


def write(out_dir, name, label, units, dates, values, digits=6):
    path = out_dir / f"{name}.csv"
    with path.open("w", newline="\n") as f:
        f.write("# SPDX-License-Identifier: Apache-2.0\n")
        f.write(HEADER.format(seed=SEED) + "\n")
        f.write(f"# series: {label}\n# units: {units}\n# rows: {len(dates)}\n")
        f.write(f"date,{label}\n")
        for d, v in zip(dates, values):
            f.write(f"{d},{v:.{digits}g}\n")


def main():
    out_dir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data")
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(SEED)

    # Nominal output, quarterly 1947Q1-2015Q4.
    q = quarters(1947, 2015)
    tq = np.array([y + qq / 4.0 for y, qq in q])
    dq = [iso(y, qq) for y, qq in q]
    gdp_anchors = [(1947, 243), (1960, 540), (1970, 1070), (1980, 2790),
                   (1990, 5960), (2000, 10250), (2008, 14700), (2015.75, 18200)]
    log_n = anchored(tq, gdp_anchors, rng, 0.006, rho=0.8)
    for start, depth in [(1949.0, 0.03), (1954.0, 0.02), (1958.0, 0.03),
                         (1974.5, 0.015), (1980.25, 0.025), (1982.0, 0.015),
                         (1991.0, 0.01), (2008.75, 0.045)]:
        log_n -= depth * np.clip((tq - start) / 0.5, 0.0, 1.0) * np.exp(
            -np.clip(tq - start - 0.5, 0.0, None) / 1.5)
    n = np.exp(log_n)
    write(out_dir, "gdp_us", "GDP", "billions of dollars, SAAR", dq, n)

    # Currency component of the monetary base.
    m_anchors = [(1947, 28), (1960, 32), (1970, 57), (1980, 124), (1990, 247),
                 (2000, 530), (2008, 830), (2015.75, 1370)]
    m = np.exp(anchored(tq, m_anchors, rng, 0.004))
    write(out_dir, "mbcurrcir_us", "MBCURRCIR", "billions of dollars", dq, m)

    # Adjusted monetary base from 1959 with the post-2008 expansion.
    sel = tq >= 1959.0
    mb_anchors = [(1959, 50), (1970, 80), (1980, 160), (1990, 310), (2000, 600),
                  (2008.5, 870), (2009.5, 1950), (2011.5, 2650), (2014.75, 4000),
                  (2015.75, 3900)]
    mb = np.exp(anchored(tq[sel], mb_anchors, rng, 0.004))
    d59 = [d for d, s in zip(dq, sel) if s]
    write(out_dir, "ambsl_us", "AMBSL", "billions of dollars", d59, mb)

    # Core PCE price level (2009 = 1) from the price-level model.
    p = price_level(n[sel], m[sel]) * np.exp(rng.normal(0.0, 0.003, sel.sum()))
    write(out_dir, "pcepilfe_us", "PCEPILFE", "index, 2009 = 1", d59, p)

    # Core CPI: same model, separate noise draw, a slightly steeper level.
    cpi = price_level(n[sel], m[sel]) ** 1.03 * np.exp(rng.normal(0.0, 0.004, sel.sum()))
    write(out_dir, "cpilfesl_us", "CPILFESL", "index, 2009 = 1", d59, cpi)

    # Long rate against currency, short rate against the full base.
    i_long = ((n[sel] / m[sel]) / K_P) ** (1.0 / K_I) * np.exp(rng.normal(0.0, 0.04, sel.sum()))
    i_short = ((n[sel] / mb) / K_P) ** (1.0 / K_I) * np.exp(rng.normal(0.0, 0.08, sel.sum()))
    write(out_dir, "gs10_us", "GS10", "percent", d59, i_long)
    write(out_dir, "tb3ms_us", "TB3MS", "percent", d59, i_short)

    # Total hours from the labour-market relation.
    hours = n[sel] / (K_H * p) * np.exp(rng.normal(0.0, 0.01, sel.sum()))
    write(out_dir, "hours_us", "HOURS", "index units, N/(k_H P)", d59, hours)

    # Annual employment and real capital consistent with Cobb-Douglas.
    years = np.arange(1950, 2015)
    da = [iso(int(y)) for y in years]
    emp = np.exp(anchored(years.astype(float), [(1950, 58000), (1970, 78000),
                                                (1990, 118000), (2008, 146000),
                                                (2014, 147000)], rng, 0.01, rho=0.6))
    n_annual = np.exp(np.interp(years.astype(float), tq, log_n))
    cap = (n_annual / (A_TFP * emp ** K2)) ** (1.0 / K1) * np.exp(rng.normal(0.0, 0.01, len(years)))
    write(out_dir, "emp_us", "EMP", "thousands of persons", da, emp)
    write(out_dir, "rknanpusa_us", "RKNANPUSA", "capital stock, arbitrary units", da, cap)


if __name__ == "__main__":
    main()
