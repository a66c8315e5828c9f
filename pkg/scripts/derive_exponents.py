#!/usr/bin/env python3
"""Recover the two-input LSP exponents from published derived-indicator values.

Solves WPM(values, weights, r) = target for r by bisection, using its own
power-mean implementation so the shipped operator table can be checked
against an independent computation. Exits non-zero if a recovered exponent
disagrees with the table entry.
"""

import json
import math
import sys
from pathlib import Path

TABLE = Path(__file__).resolve().parents[1] / "src" / "ontoqual" / "data" / "operators.json"

# (operator, values, weights, published result)
CASES = [
    ("C--", (100.0, 20.0), (0.6, 0.4), 62.52),
    ("C+", (61.12, 73.06), (0.6, 0.4), 64.81),
]
TOLERANCE = {"C--": 0.01, "C+": 0.05}


def power_mean(values, weights, r):
    if r == 0:
        return math.prod(x ** w for x, w in zip(values, weights))
    return sum(w * x ** r for x, w in zip(values, weights)) ** (1 / r)


def bisect(values, weights, target, lo=-20.0, hi=20.0, iterations=200):
    """The power mean is increasing in r, so plain bisection converges."""
    f = lambda r: power_mean(values, weights, r) - target  # noqa: E731
    if f(lo) > 0 or f(hi) < 0:
        raise ValueError(f"target {target} not bracketed by r in [{lo}, {hi}]")
    for _ in range(iterations):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def derive():
    table = json.loads(TABLE.read_text(encoding="utf-8"))
    rows = []
    for label, values, weights, target in CASES:
        r = bisect(values, weights, target)
        # Bracket from the half-cent rounding of the published value.
        r_lo = bisect(values, weights, target - 0.005)
        r_hi = bisect(values, weights, target + 0.005)
        tabulated = table[label]["2"]
        ok = abs(r - tabulated) <= TOLERANCE[label] and r_lo <= tabulated <= r_hi
        rows.append({"operator": label, "target": target, "solved": r, "interval": (r_lo, r_hi),
                     "tabulated": tabulated, "ok": ok})
    return rows


def main():
    rows = derive()
    for row in rows:
        lo, hi = row["interval"]
        print(f"{row['operator']:<4} target {row['target']:.2f}: r = {row['solved']:.4f} "
              f"(rounding interval [{lo:.4f}, {hi:.4f}]), table {row['tabulated']} "
              f"-> {'ok' if row['ok'] else 'MISMATCH'}")
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
