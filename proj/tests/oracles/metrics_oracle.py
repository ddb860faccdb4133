#!/usr/bin/env python3
# Copyright 2026 The dqprog Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Freezes reference values (scipy) for the two-distribution metrics.

Writes metrics_cases.inc next to this script.
"""

import os

import numpy as np
from scipy import stats
from scipy.spatial import distance

SMOOTH = 1e-10


def smoothed(p):
    p = np.asarray(p, float)
    return (p + SMOOTH) / (1.0 + SMOOTH * len(p))


def kl(p, q):
    return float(np.sum(p * np.log(p / q)))


def js(p, q):
    # scipy returns the square root of the divergence.
    return float(distance.jensenshannon(p, q) ** 2)


def numeric_bins(a, b):
    lo = min(a.min(), b.min())
    hi = max(a.max(), b.max())
    edges = np.linspace(lo, hi, 11)
    ha, _ = np.histogram(a, bins=edges)
    hb, _ = np.histogram(b, bins=edges)
    return smoothed(ha / len(a)), smoothed(hb / len(b))


def cohen_d(a, b):
    na, nb = len(a), len(b)
    pooled = ((na - 1) * a.var(ddof=1) + (nb - 1) * b.var(ddof=1)) / (na + nb - 2)
    return abs(a.mean() - b.mean()) / np.sqrt(pooled)


def categorical(a, b):
    keys = sorted(set(a) | set(b))
    ca = np.array([a.count(k) for k in keys], float)
    cb = np.array([b.count(k) for k in keys], float)
    pa, pb = ca / ca.sum(), cb / cb.sum()
    sa, sb = smoothed(pa), smoothed(pb)
    chi = stats.chi2_contingency(np.vstack([ca + 0.5, cb + 0.5]),
                                 correction=False)[0]
    return {
        "L1": float(np.abs(pa - pb).sum()),
        "Linf": float(np.abs(pa - pb).max()),
        "Cosine": float(distance.cosine(pa, pb)),
        "Chi_squared": float(chi),
        "JS_div": js(sa, sb),
        "KL_div": kl(sa, sb),
    }


def main():
    rng = np.random.default_rng(42)
    a = np.round(rng.normal(10, 2, 50), 3)
    b = np.round(rng.normal(11, 3, 37), 3)
    pa, pb = numeric_bins(a, b)
    numeric = {
        "EMD": float(stats.wasserstein_distance(a, b)),
        "KS_dist": float(stats.ks_2samp(a, b).statistic),
        "Cohen_d": float(cohen_d(a, b)),
        "JS_div": js(pa, pb),
        "KL_div": kl(pa, pb),
    }
    words = ["red", "green", "blue", "cyan", "black"]
    ca = [words[i] for i in rng.integers(0, 4, 40)]
    cb = [words[i] for i in rng.integers(1, 5, 25)]
    cat = categorical(ca, cb)

    def vec(v):
        return ", ".join(repr(float(x)) for x in v)

    def svec(v):
        return ", ".join('"%s"' % x for x in v)

    lines = ["// Generated by metrics_oracle.py; do not edit.", ""]
    lines.append(f"inline const std::vector<double> k_num_a = {{{vec(a)}}};")
    lines.append(f"inline const std::vector<double> k_num_b = {{{vec(b)}}};")
    for k, v in numeric.items():
        lines.append(f"inline constexpr double k_num_{k} = {v!r};")
    lines.append(f"inline const std::vector<std::string> k_cat_a = {{{svec(ca)}}};")
    lines.append(f"inline const std::vector<std::string> k_cat_b = {{{svec(cb)}}};")
    for k, v in cat.items():
        lines.append(f"inline constexpr double k_cat_{k} = {v!r};")
    path = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                        "metrics_cases.inc")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
