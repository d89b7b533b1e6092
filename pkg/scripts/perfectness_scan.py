#!/usr/bin/env python3
"""Scan dimensions and print the Morse polynomial, both Poincaré
computations, and the perfectness verdict for each."""

import argparse

import rotmorse as rm


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--full", action="store_true", help="print all three polynomials")
    args = parser.parse_args()

    for n in range(1, args.max_n + 1):
        report = rm.is_perfect(n)
        verdict = "PERFECT" if report.perfect else "NOT PERFECT"
        print(f"n={n:2d}  {verdict:11s}  P(t) = {report.morse}")
        if args.full:
            print(f"       Poincare (basis):   {report.poincare_basis}")
            print(f"       Poincare (product): {report.poincare_product}")
            print(f"       remainder R(t):     {report.remainder}")


if __name__ == "__main__":
    main()
