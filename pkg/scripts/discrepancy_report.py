"""Run every suite in its corrected and printed forms and tabulate the outcome.

Usage: python3 scripts/discrepancy_report.py [--seeds 3,5,11] [--out report.json]
"""

import argparse
import json

from qqengine.verify import RUNNERS, SUITES

# suites whose printed form differs from the corrected one
WITH_VARIANTS = ("prop-3-4", "thm-3-5", "thm-3-17", "lemma-3-10", "identity-3-16")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", default="3,5,11")
    parser.add_argument("--r", type=int, default=1)
    parser.add_argument("--out")
    args = parser.parse_args()
    seeds = tuple(int(s) for s in args.seeds.split(","))
    rows = []
    for suite in SUITES:
        kwargs = {"seeds": seeds}
        if suite in ("prop-3-4", "thm-3-5", "thm-3-17", "pref-dir"):
            kwargs["r"] = args.r
        for variant in ("corrected", "printed") if suite in WITH_VARIANTS else ("corrected",):
            report = RUNNERS[suite](variant=variant, **kwargs)
            rows.append(report.to_dict())
            print(f"{suite:20s} {variant:10s} {'PASS' if report.passed else 'FAIL'}  checks={report.checks}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, sort_keys=True, indent=2, default=str)


if __name__ == "__main__":
    main()
