#!/usr/bin/env python3
"""Reference values for the closed-form inertia/velocity/gravity equations.

Evaluates every term of M(theta), V(theta, omega) and G(theta) in 50-digit
arithmetic (mpmath), written out one term at a time from the closed-form
expressions, for 100 pseudo-random states plus one fixed state. The C++ tests
compare the library's `DynamicsModel::ClosedForm` against this file.

    python3 scripts/dynamics_oracle.py > tests/data/closed_form_dynamics_oracle.csv
"""

import random
import sys

import mpmath as mp

mp.mp.dps = 50

A1, A2, A3 = mp.mpf("0.25"), mp.mpf("0.15"), mp.mpf("0.15")
TOTAL = mp.mpf("2.5")
LENGTH = A1 + A2 + A3
M1, M2, M3 = TOTAL * A1 / LENGTH, TOTAL * A2 / LENGTH, TOTAL * A3 / LENGTH
G = mp.mpf("9.81")


def inertia(t1, t2, t3):
    cos, third, half = mp.cos, mp.mpf(1) / 3, mp.mpf(1) / 2
    m11 = (half * M1 * A1**2 + half * M1 * A2**2
           + M3 * (A2**2 * cos(t2)**2 + third * A3**2 * cos(t2 + t3)**2
                   + A2 * A3 * cos(t2 + t3) * cos(t2))
           + third * M2 * A2**2 * cos(t2)**2)
    m12 = mp.mpf(0)
    m13 = mp.mpf(0)
    m22 = third * A2**2 * M2 + A2**2 * M3 + third * A3**2 * M3 + A2 * A3 * M3 * cos(t3)
    m23 = third * A3**2 * M3 + A2**2 * M3 + third * A2 * A3 * M3 * cos(t3)
    m33 = third * M3 * A3**2
    return [[m11, m12, m13], [m12, m22, m23], [m13, m23, m33]]


def velocity(t1, t2, t3, d1, d2, d3):
    sin, cos = mp.sin, mp.cos
    third, half, sixth = mp.mpf(1) / 3, mp.mpf(1) / 2, mp.mpf(1) / 6
    four_thirds = mp.mpf(4) / 3
    v11 = ((-four_thirds * M2 * A2**2 * sin(2 * t2)
            - third * M3 * A3**2 * sin(2 * (t2 + t3))
            - M3 * A2 * A3 * sin(2 * t2 + t3)) * d1 * d2
           + (-third * M3 * A3**2 * sin(2 * (t2 + t3))
              - M3 * A2 * A3 * cos(t2) * sin(t2 + t3)) * d1 * d3)
    v21 = ((-M3 * A2 * A3 * sin(t3)) * d2 * d3
           + (-half * M3 * A2 * A3 * sin(t3)) * d3**2
           + (sixth * M2 * A2**2 * sin(2 * t2)
              + sixth * M3 * A3**2 * sin(2 * (t2 + t3))
              + half * M3 * A2**2 * sin(2 * t2)
              + half * M3 * A2 * A3 * sin(2 * t2 + t3)) * d1**2)
    v31 = (half * M3 * A2 * A3 * sin(t3) * d2**2
           + (sixth * M3 * A3**2 * sin(2 * (t2 + t3))
              + half * M3 * A2 * A3 * cos(t2) * sin(t2 + t3)) * d1**2)
    return [v11, v21, v31]


def gravity(t1, t2, t3):
    cos, half = mp.cos, mp.mpf(1) / 2
    g11 = mp.mpf(0)
    g21 = half * M3 * G * A3 * cos(t2 + t3) + half * M2 * G * A2 * cos(t2) + M3 * G * A2 * cos(t2)
    g31 = half * M3 * G * A3 * cos(t2 + t3)
    return [g11, g21, g31]


def main():
    rng = random.Random(20240901)
    states = [(0.0, float(mp.pi / 4), float(mp.pi / 6), 1.0, 0.5, 0.2)]
    for _ in range(100):
        theta = [rng.uniform(-3.1, 3.1) for _ in range(3)]
        omega = [rng.uniform(-5.0, 5.0) for _ in range(3)]
        states.append(tuple(theta + omega))

    out = sys.stdout
    cols = ["theta1", "theta2", "theta3", "omega1", "omega2", "omega3"]
    cols += [f"M{i}{j}" for i in range(1, 4) for j in range(1, 4)]
    cols += ["V1", "V2", "V3", "G1", "G2", "G3"]
    out.write(",".join(cols) + "\n")
    for s in states:
        # the doubles themselves are the inputs; convert exactly
        t = [mp.mpf(x) for x in s[:3]]
        w = [mp.mpf(x) for x in s[3:]]
        m = inertia(*t)
        row = [repr(x) for x in s]
        row += [mp.nstr(m[i][j], 20, min_fixed=-30, max_fixed=30) for i in range(3) for j in range(3)]
        row += [mp.nstr(v, 20, min_fixed=-30, max_fixed=30) for v in velocity(*t, *w)]
        row += [mp.nstr(g, 20, min_fixed=-30, max_fixed=30) for g in gravity(*t)]
        out.write(",".join(row) + "\n")


if __name__ == "__main__":
    main()
