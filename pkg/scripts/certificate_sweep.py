#!/usr/bin/env python3
"""Sweep the zero-free certificate over a grid of (u0, v0) points and report
where the sufficient condition holds, plus the c(u) bracket as a function of
the truncation N.

Usage: python scripts/certificate_sweep.py [--N 100]
"""

from __future__ import annotations

import argparse

import numpy as np

from dilogzeta import c_bracket, certify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=100)
    args = ap.parse_args()

    print("c(u) bracket vs truncation:")
    for n in (10, 100, 1000):
        lower, upper = c_bracket(n)
        print(f"  N = {n:5d}: [{lower:+.6f}, {upper:+.6f}]")

    print("\ncertificate grid (x = holds, . = does not hold):")
    v_grid = np.linspace(0.2, 3.0, 15)
    u_grid = np.linspace(0.05, 0.45, 9)
    header = "  u\\v " + " ".join(f"{v:4.1f}" for v in v_grid)
    print(header)
    for u0 in u_grid:
        marks = []
        for v0 in v_grid:
            cert = certify(float(u0), float(v0), args.N)
            marks.append("   x" if cert.holds else "   .")
        print(f"{u0:5.2f}" + " ".join(marks))

    cert = certify(0.1, 1.1, args.N)
    print(
        f"\nreference point (0.1, 1.1): lhs = {cert.lhs:.4f}, rhs = {cert.rhs:.4f}, "
        f"holds = {cert.holds}"
    )


if __name__ == "__main__":
    main()
