"""Command-line entry point: ``qqengine zr|chiy|verify``.

Exit codes: 0 success, 1 verification mismatch, 2 invalid configuration,
3 genericity failure.  Output is deterministic for identical arguments.
"""

import argparse
import csv
import inspect
import io
import json
import sys
from dataclasses import dataclass, field

from .instanton import GenusConfig, chi_y_genus, chi_y_ratio_at
from .partitions import tuples
from .series import GenericityError, ParamPoint, random_param_point
from .verify import CONVENTIONS, RUNNERS, SUITES, genericity_for
from .vertex import NetworkConfig, normalized_zr, required_genericity, zr_full

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_GENERICITY = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    r: int = 1
    caps: dict = field(default_factory=dict)
    direction: str = "h"
    seeds: list = field(default_factory=lambda: [7])
    out: str = None
    format: str = "json"
    genericity_bound: int = None
    variant: str = "corrected"
    suite: str = None
    point: list = None

    def validate(self):
        if self.r < 1:
            raise ConfigError("--r must be at least 1")
        if any(v is not None and v < 0 for v in self.caps.values()):
            raise ConfigError("caps must be non-negative")
        if not self.seeds:
            raise ConfigError("at least one seed is required")
        if self.direction not in ("h", "v"):
            raise ConfigError("--direction must be h or v")
        if self.format not in ("json", "csv"):
            raise ConfigError("--format must be json or csv")
        if self.format == "csv" and (len(self.seeds) != 1 or self.command == "verify"):
            raise ConfigError("csv output takes exactly one seed and a series-valued command")
        if self.point is not None and len(self.point) != 2 + self.r:
            raise ConfigError(f"--point needs q^(1/2), t^(1/2) and {self.r} framing values")

    def cap(self, name, default):
        v = self.caps.get(name)
        return default if v is None else v


def parse_seeds(text):
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad seed list {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(prog="qqengine", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r", type=int, default=1)
        p.add_argument("--cap-q", type=int)
        p.add_argument("--cap-a", type=int)
        p.add_argument("--cap-b", type=int)
        p.add_argument("--cap-m", type=int)
        p.add_argument("--direction", default="h")
        p.add_argument("--seed", "--seeds", dest="seeds", type=parse_seeds, default=None)
        p.add_argument("--out")
        p.add_argument("--format", default="json")
        p.add_argument("--genericity-bound", type=int)
        p.add_argument(
            "--point",
            type=lambda s: s.split(","),
            help="explicit q^(1/2),t^(1/2),a_1,...,a_r instead of seeded random values",
        )

    common(sub.add_parser("zr", help="normalized and raw network partition function"))
    common(sub.add_parser("chiy", help="instanton chi_y-genus and its m = 1 column"))
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--variant", choices=("corrected", "printed"), default="corrected")
    common(v)
    return parser


def config_from_args(args):
    caps = {k: getattr(args, "cap_" + k) for k in ("q", "a", "b", "m")}
    cfg = RunConfig(
        command=args.command,
        r=args.r,
        caps=caps,
        direction=args.direction,
        seeds=args.seeds if args.seeds is not None else ([3, 5, 11] if args.command == "verify" else [7]),
        out=args.out,
        format=args.format,
        genericity_bound=args.genericity_bound,
        variant=getattr(args, "variant", "corrected"),
        suite=getattr(args, "suite", None),
        point=args.point,
    )
    cfg.validate()
    return cfg


def _point(cfg, seed, needed):
    G = cfg.genericity_bound if cfg.genericity_bound is not None else max(12, needed)
    if cfg.point is not None:
        qh, th, *framing = cfg.point
        return ParamPoint(qh, th, tuple(framing), G, seed=seed)
    return random_param_point(seed, cfg.r, G)


def _emit(cfg, payload, series=None):
    if cfg.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(series.csv_rows())
        text = buf.getvalue()
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_zr(cfg):
    cq, ca, cb = cfg.cap("q", 2), cfg.cap("a", 2), cfg.cap("b", 2) if cfg.r > 1 else 0
    runs = []
    for seed in cfg.seeds:
        p = _point(cfg, seed, required_genericity(cfg.r, cq, ca, cb))
        ncfg = NetworkConfig(cfg.r, p, cq, ca, cb, cfg.direction)
        norm = normalized_zr(ncfg)
        runs.append(
            {
                "seed": seed,
                "point": p.to_dict(),
                "normalized_zr": norm.to_dict(),
                "zr_full": zr_full(ncfg).to_dict(),
            }
        )
    meta = {"command": "zr", "r": cfg.r, "caps": {"Q": cq, "A": ca, "B": cb}, "direction": cfg.direction}
    _emit(cfg, {"meta": meta, "conventions": CONVENTIONS, "runs": runs}, norm)
    return EXIT_OK


def m1_column(r, cap_q, p):
    """Q-coefficients of the genus at m = 1, summed fixed point by fixed point."""
    return [sum((chi_y_ratio_at(l, p, 1) for l in tuples(r, n)), 0) for n in range(cap_q + 1)]


def cmd_chiy(cfg):
    cq, cm = cfg.cap("q", 2), cfg.cap("m", 3)
    runs = []
    for seed in cfg.seeds:
        p = _point(cfg, seed, 4 * (cq + cm))
        genus = chi_y_genus(GenusConfig(cfg.r, p, cq, cm))
        col = m1_column(cfg.r, cq, p)
        runs.append({"seed": seed, "point": p.to_dict(), "genus": genus.to_dict(), "m1": [str(c) for c in col]})
    meta = {"command": "chiy", "r": cfg.r, "caps": {"Q": cq, "m": cm}}
    _emit(cfg, {"meta": meta, "conventions": CONVENTIONS, "runs": runs}, genus)
    return EXIT_OK


_CAP_ARGS = {"q": "cap_q", "a": "cap_a", "b": "cap_b", "m": "cap_m"}


def cmd_verify(cfg):
    runner = RUNNERS[cfg.suite]
    params = inspect.signature(runner).parameters
    kwargs = {"seeds": tuple(cfg.seeds), "variant": cfg.variant}
    if "r" in params:
        kwargs["r"] = cfg.r
    elif cfg.r != 1:
        raise ConfigError(f"suite {cfg.suite} does not take --r")
    for key, name in _CAP_ARGS.items():
        value = cfg.caps.get(key)
        if value is None:
            continue
        if name not in params:
            raise ConfigError(f"suite {cfg.suite} does not take --cap-{key}")
        kwargs[name] = value
    if cfg.genericity_bound is not None:
        needed = genericity_for(
            cfg.r, cfg.cap("q", 3), cfg.cap("a", 4) + cfg.cap("m", 0), cfg.cap("b", 2) if cfg.r > 1 else 0
        )
        if cfg.genericity_bound < needed:
            raise GenericityError(f"genericity bound {cfg.genericity_bound} is below the {needed} these caps need")
    report = runner(**kwargs)
    _emit(cfg, report.to_dict())
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_MISMATCH


COMMANDS = {"zr": cmd_zr, "chiy": cmd_chiy, "verify": cmd_verify}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except GenericityError as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (ConfigError, ValueError) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def run():
    sys.exit(main())


__all__ = ["RunConfig", "main", "build_parser", "m1_column"]
