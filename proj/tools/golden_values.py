#!/usr/bin/env python3
"""Writes tests/data/golden_objectives.csv.

Each benchmark function is transcribed here in numpy, separately from the C++
sources, and evaluated on a fixed set of points. The C++ tests compare
against the frozen file, so regenerate only when a definition changes on
purpose.

Usage: python3 tools/golden_values.py [output.csv]
"""

import sys
from pathlib import Path

import numpy as np

PI = np.pi


def wave(t):
    return np.sin(6 * PI * t + PI)


def bump(y):
    return 4 * y**2 - 2 * np.cos(20 * y * PI / np.sqrt(2)) + 2


def mmf1(x):
    t = abs(x[0] - 2)
    return [t, 1 - np.sqrt(t) + 2 * (x[1] - wave(t)) ** 2]


def mmf2(x):
    y = x[1] - np.sqrt(x[0]) if x[1] <= 1 else x[1] - 1 - np.sqrt(x[0])
    return [x[0], 1 - np.sqrt(x[0]) + 2 * bump(y)]


def mmf3(x):
    if x[1] <= 0.5 or (x[1] < 1 and x[0] > 0.25):
        y = x[1] - np.sqrt(x[0])
    else:
        y = x[1] - 0.5 - np.sqrt(x[0])
    return [x[0], 1 - np.sqrt(x[0]) + 2 * bump(y)]


def mmf4(x):
    y = x[1] if x[1] < 1 else x[1] - 1
    return [abs(x[0]), 1 - x[0] ** 2 + 2 * (y - np.sin(PI * abs(x[0]))) ** 2]


def mmf5(x):
    t = abs(x[0] - 2)
    y = x[1] if x[1] <= 1 else x[1] - 2
    return [t, 1 - np.sqrt(t) + 2 * (y - wave(t)) ** 2]


def mmf6(x):
    t = abs(x[0] - 2)
    y = x[1] if x[1] <= 1 else x[1] - 1
    return [t, 1 - np.sqrt(t) + 2 * (y - wave(t)) ** 2]


def mmf7(x):
    t = abs(x[0] - 2)
    c = (0.3 * t**2 * np.cos(24 * PI * t + 4 * PI) + 0.6 * t) * np.sin(6 * PI * t + PI)
    return [t, 1 - np.sqrt(t) + (x[1] - c) ** 2]


def mmf8(x):
    a = abs(x[0])
    y = x[1] if x[1] <= 4 else x[1] - 4
    return [np.sin(a), np.sqrt(max(0.0, 1 - np.sin(a) ** 2)) + 2 * (y - np.sin(a) - a) ** 2]


def sym_part(x1, x2):
    a, b, c = 1.0, 10.0, 8.0
    c1, c2, b1, b2 = a + c / 2, c + 2 * a, b / 2, b
    t1 = np.sign(x1) * np.ceil((abs(x1) - c1) / c2)
    t2 = np.sign(x2) * np.ceil((abs(x2) - b1) / b2)
    t1 = np.sign(t1) * min(abs(t1), 1)
    t2 = np.sign(t2) * min(abs(t2), 1)
    p1 = x1 - t1 * c2
    p2 = x2 - t2 * b2
    return [(p1 + a) ** 2 + p2**2, (p1 - a) ** 2 + p2**2]


def sym_part_simple(x):
    return sym_part(x[0], x[1])


def sym_part_rotated(x):
    w = PI / 4
    r = np.array([[np.cos(w), np.sin(w)], [-np.sin(w), np.cos(w)]]) @ np.asarray(x)
    return sym_part(r[0], r[1])


def omni(x):
    return [float(np.sum(np.sin(PI * np.asarray(x)))), float(np.sum(np.cos(PI * np.asarray(x))))]


def cos2(v, c):
    return np.cos(c * PI * v) ** 2


def concave(x1, g):
    return [(1 + g) * np.cos(PI * x1 / 2), (1 + g) * np.sin(PI * x1 / 2)]


def mmmop1a(x):
    g = cos2(x[1], 5) + (x[2] - 0.5) ** 2
    return [x[0] * (1 + g), (1 - x[0]) * (1 + g)]


def mmmop2a(x):
    return concave(x[0], cos2(x[1], 3) + cos2(x[2], 2))


def mmmop3a(x):
    return concave(x[0], cos2(x[1], 3))


def mmmop4a(x):
    return concave(x[0], cos2(x[1] - 0.1 * np.sin(PI * x[0]), 4))


def mmmop5a(x):
    return concave(x[0], cos2(x[1] - 0.2 * (x[0] - 0.5), 4))


def mmmop6a(x):
    return concave(x[0], cos2(x[1] - 0.15 * np.sin(2 * PI * x[0]), 2))


def idmp(dist):
    def f(x):
        g1 = dist(x[1] + 0.5)
        g2 = 100 * dist(x[1] - 0.5)
        return [min(abs(x[0] + 0.6) + g1, abs(x[0] - 0.4) + g2), min(abs(x[0] + 0.4) + g1, abs(x[0] - 0.6) + g2)]

    return f


PROBLEMS = [
    ("MMF1", mmf1, [1, -1], [3, 1]),
    ("MMF2", mmf2, [0, 0], [1, 2]),
    ("MMF3", mmf3, [0, 0], [1, 1.5]),
    ("MMF4", mmf4, [-1, 0], [1, 2]),
    ("MMF5", mmf5, [1, -1], [3, 3]),
    ("MMF6", mmf6, [1, -1], [3, 2]),
    ("MMF7", mmf7, [1, -1], [3, 1]),
    ("MMF8", mmf8, [-PI, 0], [PI, 9]),
    ("SYM-PART-Simple", sym_part_simple, [-20, -20], [20, 20]),
    ("SYM-PART-Rotated", sym_part_rotated, [-20, -20], [20, 20]),
    ("Omni-test", omni, [0, 0], [6, 6]),
    ("MMMOP1A", mmmop1a, [0, 0, 0], [1, 1, 1]),
    ("MMMOP2A", mmmop2a, [0, 0, 0], [1, 1, 1]),
    ("MMMOP3A", mmmop3a, [0, 0], [1, 1]),
    ("MMMOP4A", mmmop4a, [0, 0], [1, 1]),
    ("MMMOP5A", mmmop5a, [0, 0], [1, 1]),
    ("MMMOP6A", mmmop6a, [0, 0], [1, 1]),
    ("IDMP-M2-T1", idmp(abs), [-1, -1], [1, 1]),
    ("IDMP-M2-T2", idmp(lambda y: y * y), [-1, -1], [1, 1]),
    ("IDMP-M2-T3", idmp(lambda y: abs(y) ** 0.6), [-1, -1], [1, 1]),
    ("IDMP-M2-T4", idmp(lambda y: y * y + 1 - np.cos(20 * PI * y)), [-1, -1], [1, 1]),
]

SAMPLES_PER_PROBLEM = 12


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests/data/golden_objectives.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(20220718)
    rows = ["problem,x,f"]
    for name, fn, lo, hi in PROBLEMS:
        lo, hi = np.asarray(lo, float), np.asarray(hi, float)
        points = [lo, hi, (lo + hi) / 2]
        points += [lo + (hi - lo) * rng.random(len(lo)) for _ in range(SAMPLES_PER_PROBLEM - 3)]
        for x in points:
            f = fn([float(v) for v in x])
            rows.append(f"{name},{' '.join(repr(float(v)) for v in x)},{' '.join(repr(float(v)) for v in f)}")
    out.write_text("\n".join(rows) + "\n")
    print(f"wrote {len(rows) - 1} rows to {out}")


if __name__ == "__main__":
    main()
