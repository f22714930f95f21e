"""Print the chi_y-genus coefficients of Q^n m^k at one seeded parameter point.

Usage: python3 scripts/genus_table.py [--r 1] [--cap-q 3] [--cap-m 4] [--seed 7]
"""

import argparse

from qqengine.cli import m1_column
from qqengine.instanton import GenusConfig, chi_y_genus
from qqengine.series import random_param_point


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--r", type=int, default=1)
    parser.add_argument("--cap-q", type=int, default=3)
    parser.add_argument("--cap-m", type=int, default=4)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()
    p = random_param_point(args.seed, args.r, max(12, 4 * (args.cap_q + args.cap_m)))
    genus = chi_y_genus(GenusConfig(args.r, p, args.cap_q, args.cap_m))
    print(f"q^(1/2) = {p.q_half}, t^(1/2) = {p.t_half}, framing = {[str(a) for a in p.framing]}")
    for n in range(args.cap_q + 1):
        row = [str(genus.coefficient((n, k))) for k in range(args.cap_m + 1)]
        print(f"Q^{n}: " + "  ".join(f"m^{k}: {c}" for k, c in enumerate(row)))
    print("m = 1 column:", [str(c) for c in m1_column(args.r, args.cap_q, p)])


if __name__ == "__main__":
    main()
