"""Command-line entry point.

Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import asdict, dataclass, field
from math import gcd

from . import closed_form, floer, hh_engine, koszul_oracle
from .golden import TABLE1, TABLE1_DEGREES
from .tables import DimTable, render
from .weights import ExponentError, exponent_tuple, weight_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    exponents: tuple[int, ...] | None = None
    t_min: int = -15
    t_max: int = 3
    fmt: str = "md"
    engine: str = "general"
    oracle: bool = False
    samples: int = 200
    sector_twist: str = "literal"
    out: str | None = None
    extra: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.t_min > self.t_max:
            raise UsageError(f"empty range {self.t_min}..{self.t_max}")
        if self.exponents is not None:
            try:
                self.exponents = exponent_tuple(self.exponents)
            except ExponentError as exc:
                raise UsageError(str(exc)) from exc
        if self.engine in ("closed-form", "both"):
            try:
                closed_form.BSParams.from_exponents(self.exponents or ())
            except ValueError as exc:
                raise UsageError(str(exc)) from exc


def parse_exponents(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in s.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad exponent list {s!r}")


_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_range(s: str) -> tuple[int, int]:
    """``A..B`` inclusive; the endpoints may be given in either order."""
    m = _RANGE.match(s)
    if not m:
        raise argparse.ArgumentTypeError(f"bad range {s!r}; expected A..B")
    a, b = int(m.group(1)), int(m.group(2))
    return min(a, b), max(a, b)


def _fix_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-15..3" for an option; glue it to its flag
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in ("--range", "--degree") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bpfloer", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def table_opts(sp, default_range="-15..3"):
        sp.add_argument("--exponents", type=parse_exponents, required=True,
                        help="comma separated, e.g. 3,5,2,2")
        sp.add_argument("--range", type=parse_range, default=parse_range(default_range))
        sp.add_argument("--format", choices=("csv", "json", "md"), default="md")
        sp.add_argument("--out")

    sp = sub.add_parser("hh", help="dim HH^t of the equivariant MF category")
    table_opts(sp)
    sp.add_argument("--engine", choices=("general", "closed-form", "both"), default="general")
    sp.add_argument("--oracle", action="store_true", help="also run the Koszul oracle")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--sector-twist", choices=hh_engine.SECTOR_TWISTS, default="literal")

    sp = sub.add_parser("rfh", help="Rabinowitz Floer dimensions (localized HH)")
    table_opts(sp, "-10..10")
    sp = sub.add_parser("sh", help="symplectic cohomology dimensions, degrees <= 0")
    table_opts(sp, "-15..0")

    sp = sub.add_parser("explain", help="list the generators in one degree")
    sp.add_argument("--exponents", type=parse_exponents, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--format", choices=("json", "md"), default="md")
    sp.add_argument("--out")

    sp = sub.add_parser("compare", help="engine vs T*S^{n+1} models for p = (2,...,2)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--range", type=parse_range, default=(-12, 12))
    sp.add_argument("--format", choices=("json", "md"), default="md")
    sp.add_argument("--out")

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=("table1", "recursion", "smoothing", "engines",
                                      "oracle", "models", "all"))
    sp.add_argument("--e", type=int, default=None)
    sp.add_argument("--f", type=int, default=None)
    sp.add_argument("--lmax", type=int, default=4)
    sp.add_argument("--imax", type=int, default=30)
    sp.add_argument("--kmax", type=int, default=6)
    sp.add_argument("--depth", type=int, default=30)
    sp.add_argument("--range", type=parse_range, default=(-30, 3))
    sp.add_argument("--exponents", type=parse_exponents, action="append")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--format", choices=("json", "md"), default="md")
    sp.add_argument("--out")
    return ap


def config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=args.command, fmt=args.format, out=args.out)
    if getattr(args, "exponents", None) is not None and args.command != "verify":
        cfg.exponents = args.exponents
    if getattr(args, "range", None) is not None:
        cfg.t_min, cfg.t_max = args.range
    for name in ("engine", "oracle", "samples", "sector_twist"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    cfg.extra = {k: v for k, v in vars(args).items()
                 if k not in ("command", "format", "out", "range", "engine", "oracle",
                              "samples", "sector_twist")}
    cfg.validate()
    return cfg


# -- commands -----------------------------------------------------------------

def cmd_hh(cfg: RunConfig) -> tuple[int, str]:
    p = cfg.exponents
    checks = []
    code = EXIT_OK
    if cfg.engine == "closed-form":
        table = closed_form.table_bs(closed_form.BSParams.from_exponents(p), cfg.t_min, cfg.t_max)
    else:
        table = hh_engine.hh_table(p, cfg.t_min, cfg.t_max, cfg.sector_twist)
        if cfg.engine == "both":
            other = closed_form.table_bs(closed_form.BSParams.from_exponents(p), cfg.t_min, cfg.t_max)
            same = other.entries == table.entries
            checks.append({"name": "engines-agree", "pass": same})
            code = EXIT_OK if same else EXIT_FAIL
    if cfg.oracle:
        rep = koszul_oracle.validate_sector_model(p, cfg.samples)
        checks.append({"name": "koszul-oracle", "pass": rep.ok,
                       "slices": len(rep.slices), "mismatches": rep.mismatches})
        if not rep.ok:
            code = EXIT_FAIL
    text = render(table, cfg.fmt, weight_system(p), checks)
    if checks and cfg.fmt != "json":
        text += "".join(f"{'PASS' if c['pass'] else 'FAIL'} {c['name']}\n" for c in checks)
    return code, text


def cmd_rfh(cfg: RunConfig) -> tuple[int, str]:
    table = floer.rfh_table(cfg.exponents, cfg.t_min, cfg.t_max)
    return EXIT_OK, render(table, cfg.fmt, weight_system(cfg.exponents))


def cmd_sh(cfg: RunConfig) -> tuple[int, str]:
    if cfg.t_max > 0:
        raise UsageError("sh is only defined in degrees <= 0")
    table = floer.sh_table(cfg.exponents, cfg.t_min, cfg.t_max)
    return EXIT_OK, render(table, cfg.fmt, weight_system(cfg.exponents))


def cmd_explain(cfg: RunConfig) -> tuple[int, str]:
    t = cfg.extra["degree"]
    els = hh_engine.explain(cfg.exponents, t)
    if cfg.fmt == "json":
        return EXIT_OK, json.dumps([e.as_dict() for e in els], indent=2) + "\n"
    lines = [f"dim HH^{t} = {len(els)}"]
    for e in els:
        lines.append(f"  gamma a={list(e.sector.a)} F={sorted(e.sector.fixed)}: {e.describe()}  (u={e.u})")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_compare(cfg: RunConfig) -> tuple[int, str]:
    rep = floer.compare_models(cfg.extra["n"], cfg.t_min, cfg.t_max)
    if cfg.fmt == "json":
        return EXIT_OK, json.dumps(rep.as_dict(), indent=2) + "\n"
    lines = ["| t | engine | free-loop | free-loop (alg) | T*S reference | agree |",
             "|---|---|---|---|---|---|"]
    for r in rep.rows:
        lines.append(f"| {r['t']} | {r['engine']} | {r['free_loop']} | {r['free_loop_algebraic']} "
                     f"| {r['tsn_reference']} | {'yes' if r['agree'] else 'NO'} |")
    for w in rep.wedge:
        lines.append(f"FLAG t={w['t']} {w['family']}: listed {w['literal_element']} realized="
                     f"{w['literal_element_realized']}; engine x0 exponents {w['engine_x0_exponents']}")
    lines += [f"NOTE {s}" for s in rep.notes]
    return EXIT_OK, "\n".join(lines) + "\n"


# -- verification suites ------------------------------------------------------

def verify_table1(_cfg) -> dict:
    diffs = []
    for (m, k), row in TABLE1.items():
        P = closed_form.BSParams(k, m - k)
        for name, table in (
            ("closed_form", closed_form.table_bs(P, -15, 3)),
            ("general", hh_engine.hh_table(P.exponents, -15, 3)),
        ):
            got = tuple(table[t] for t in TABLE1_DEGREES)
            if got != row:
                diffs.append({"row": [m, k], "engine": name, "expected": list(row), "got": list(got)})
    return {"name": "table1", "pass": not diffs,
            "detail": f"{len(TABLE1)} rows x {len(TABLE1_DEGREES)} degrees", "diffs": diffs}


def verify_recursion(cfg) -> dict:
    x = cfg.extra
    if x.get("e") is not None and x.get("f") is not None:
        pairs = [(x["e"], x["f"])]
    else:
        pairs = [(e, f) for e in range(1, 6) for f in range(1, 6) if gcd(e, f) == 1]
    fails = []
    for e, f in pairs:
        try:
            fails += [asdict(r) for r in closed_form.verify_recursion(e, f, x["lmax"], x["imax"])]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return {"name": "recursion", "pass": not fails,
            "detail": f"{len(pairs)} coprime pairs, l <= {x['lmax']}, i <= {x['imax']}",
            "diffs": fails}


def verify_smoothing(cfg) -> dict:
    kmax, depth = cfg.extra["kmax"], cfg.extra["depth"]
    rows, bad = [], []
    for k in range(2, kmax + 1):
        for f in range(k, kmax + 1):
            r = closed_form.check_smoothing(closed_form.BSParams(k, f), depth)
            rows.append(r)
            if not r["refined_ok"] or (r["constant"] and r["value"] != r["components"]):
                bad.append(r)
    return {"name": "smoothing", "pass": not bad,
            "detail": f"2 <= k <= m-k <= {kmax}, depth {depth}", "rows": rows, "diffs": bad}


def verify_engines(cfg) -> dict:
    kmax = cfg.extra["kmax"]
    diffs = []
    for k in range(2, kmax + 1):
        for f in range(k, kmax + 1):
            P = closed_form.BSParams(k, f)
            a = closed_form.table_bs(P, cfg.t_min, cfg.t_max).entries
            b = hh_engine.hh_table(P.exponents, cfg.t_min, cfg.t_max).entries
            if a != b:
                diffs.append({"k": k, "f": f,
                              "degrees": [t for t in sorted(a, reverse=True) if a[t] != b[t]]})
    return {"name": "engines", "pass": not diffs,
            "detail": f"2 <= k <= m-k <= {kmax}, degrees {cfg.t_min}..{cfg.t_max}", "diffs": diffs}


def verify_oracle(cfg) -> dict:
    tuples = cfg.extra.get("exponents") or [(2, 2), (2, 3, 2, 2), (3, 3, 2, 2)]
    diffs, n = [], 0
    for p in tuples:
        rep = koszul_oracle.validate_sector_model(p, cfg.samples)
        n += len(rep.slices)
        diffs += [dict(m, exponents=list(p)) for m in rep.mismatches]
    return {"name": "oracle", "pass": not diffs,
            "detail": f"{n} slices over {len(tuples)} exponent tuples", "diffs": diffs}


def verify_models(cfg) -> dict:
    diffs = []
    for n in range(1, cfg.extra["nmax"] + 1):
        a = floer.free_loop_model(n, -40, 40, "survival").entries
        b = floer.free_loop_model(n, -40, 40, "algebraic").entries
        if a != b:
            diffs.append({"n": n, "what": "survival != algebraic"})
        if n % 2:
            rep = floer.compare_models(n, -40, 40)
            if not rep.all_agree:
                diffs.append({"n": n, "what": "engine disagrees with models"})
    return {"name": "models", "pass": not diffs,
            "detail": f"n <= {cfg.extra['nmax']}, |t| <= 40", "diffs": diffs}


SUITES = {
    "table1": verify_table1,
    "recursion": verify_recursion,
    "smoothing": verify_smoothing,
    "engines": verify_engines,
    "oracle": verify_oracle,
    "models": verify_models,
}


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    suite = cfg.extra["suite"]
    names = list(SUITES) if suite == "all" else [suite]
    results = [SUITES[name](cfg) for name in names]
    ok = all(r["pass"] for r in results)
    if cfg.fmt == "json":
        text = json.dumps({"pass": ok, "checks": results}, indent=2) + "\n"
    else:
        lines = []
        for r in results:
            lines.append(f"{'PASS' if r['pass'] else 'FAIL'} {r['name']}: {r['detail']}")
            for d in r["diffs"]:
                lines.append(f"  {json.dumps(d)}")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if ok else EXIT_FAIL), text


COMMANDS = {
    "hh": cmd_hh,
    "rfh": cmd_rfh,
    "sh": cmd_sh,
    "explain": cmd_explain,
    "compare": cmd_compare,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_fix_negative_values(argv))
    try:
        cfg = config_from_args(args)
        code, text = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
