"""Command-line entry point: ``immanants {verify,conjecture,mc,table}``.

Exit codes: 0 success, 1 mathematical mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import closed_forms, matchings, moments
from .conjecture import check_conjecture, conjecture_lhs, conjecture_poles, conjecture_rhs, default_range
from .montecarlo import default_workers, mc_moment, validate_mc, z_score
from .partitions import format_partition, format_rational, parse_partition, partitions_of
from .weingarten import PoleError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

MAX_CONJECTURE_N = 6

PROP_BOUNDS = {1: "prop1", 2: "prop2", 3: "coe", 4: "orth", 5: "prop5"}

DEFAULT_N_RANGES = {
    1: lambda n: (2 * n, 2 * n + 5),
    2: lambda n: (5, 9),
    3: lambda n: (2 * n + 1, 2 * n + 5),
    4: lambda n: (2 * n, 2 * n + 4),
    5: lambda n: (2 * n, 2 * n + 3),
}

FORMULAS = ("prop1", "prop2", "coe", "orth", "conj-lhs", "conj-rhs", "perm-poly-unitary", "perm-poly-orthogonal")

PRINTED = {"prop2": closed_forms.perm_quartic, "coe": closed_forms.coe_perm_sq, "orth": closed_forms.orth_perm_sq}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: tuple[int, int] | None = None
    N: tuple[int, int] | None = None
    gamma: tuple | None = None
    gamma_all: bool = False
    ensemble: str | None = None
    prop: int | None = None
    formula: str | None = None
    power: int = 2
    samples: int = 100_000
    seed: int = 0
    workers: int = 1
    force: bool = False
    compare_printed: bool = False
    format: str = "text"
    out: str | None = None
    notices: list[str] = field(default_factory=list)


def parse_range(text: str) -> tuple[int, int]:
    """``"5"`` or ``"6..10"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad integer range {text!r}; expected 'a' or 'a..b'") from None
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _irange(r: tuple[int, int]):
    return range(r[0], r[1] + 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="immanants", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="closed forms against raw Weingarten oracles")
    v.add_argument("--prop", type=int, required=True, choices=sorted(PROP_BOUNDS))
    v.add_argument("--n", required=True, help="block size or range a..b")
    v.add_argument("--N", help="matrix size or inclusive range a..b")
    v.add_argument("--ensemble", choices=("unitary", "orthogonal", "both"), default="both",
                   help="ensembles for the permanent-polynomial check")

    c = sub.add_parser("conjecture", parents=[common], help="exact check of the zonal/orthogonal identity")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--N", help="inclusive range a..b (default: twice the degree bound)")
    c.add_argument("--force", action="store_true", help=f"allow n > {MAX_CONJECTURE_N}")

    m = sub.add_parser("mc", parents=[common], help="Monte Carlo estimate against the exact moment")
    m.add_argument("--ensemble", required=True, choices=("unitary", "orthogonal", "coe"))
    m.add_argument("--gamma", required=True, help="partition, e.g. 2,1")
    m.add_argument("--N", required=True, type=int)
    m.add_argument("--power", type=int, default=2, choices=(2, 4))
    m.add_argument("--samples", type=int, default=100_000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--workers", type=int, default=None)

    t = sub.add_parser("table", parents=[common], help="exact values over a (gamma, N) grid")
    t.add_argument("--formula", required=True, choices=FORMULAS)
    t.add_argument("--n", help="block size or range a..b")
    group = t.add_mutually_exclusive_group()
    group.add_argument("--gamma", help="partition, e.g. 2,1")
    group.add_argument("--gamma-all", action="store_true", help="every partition of each n")
    t.add_argument("--N", required=True, nargs="+",
                   help="range a..b, optionally preceded by 'symbolic-points' to add the hand-written closed form")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, format=ns.format, out=ns.out)
    if ns.command == "verify":
        cfg.prop = ns.prop
        cfg.n = parse_range(ns.n)
        cfg.N = parse_range(ns.N) if ns.N else None
        cfg.ensemble = ns.ensemble
    elif ns.command == "conjecture":
        cfg.n = (ns.n, ns.n)
        cfg.N = parse_range(ns.N) if ns.N else None
        cfg.force = ns.force
    elif ns.command == "mc":
        cfg.ensemble = ns.ensemble
        cfg.gamma = _parse_gamma(ns.gamma)
        cfg.N = (ns.N, ns.N)
        cfg.power, cfg.samples, cfg.seed = ns.power, ns.samples, ns.seed
        cfg.workers = ns.workers or default_workers()
    elif ns.command == "table":
        cfg.formula = ns.formula
        tokens = list(ns.N)
        if tokens and tokens[0] == "symbolic-points":
            cfg.compare_printed = True
            tokens = tokens[1:]
        if len(tokens) != 1:
            raise UsageError(f"--N expects one range, got {ns.N}")
        cfg.N = parse_range(tokens[0])
        cfg.gamma = _parse_gamma(ns.gamma) if ns.gamma else None
        cfg.gamma_all = ns.gamma_all
        cfg.n = parse_range(ns.n) if ns.n else None
        if cfg.gamma is None and cfg.n is None:
            raise UsageError("table needs --gamma or --n")
    return cfg


def _parse_gamma(text: str):
    try:
        gamma = parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None
    if not gamma:
        raise UsageError("gamma must be non-empty")
    return gamma


def _record(command: str, inputs: dict, exact, **extra) -> dict:
    rec = {"command": command, "inputs": inputs, "exact": format_rational(exact) if exact is not None else None}
    rec.update(extra)
    return rec


# verify


def _verify_cases(cfg: RunConfig):
    prop = cfg.prop
    bound = moments.ORACLE_BOUNDS[PROP_BOUNDS[prop]]
    for n in _irange(cfg.n):
        if n < 1 or n > bound:
            raise UsageError(f"prop {prop} oracle supports 1 <= n <= {bound}, got n={n}")
        N_range = cfg.N or DEFAULT_N_RANGES[prop](n)
        if N_range[0] < n:
            raise UsageError(f"N must be at least n={n}")
        if prop in (1, 3, 4):
            for gamma in partitions_of(n):
                yield n, gamma, N_range
        else:
            yield n, (n,), N_range


def run_verify(cfg: RunConfig) -> tuple[int, list[dict]]:
    closed = {1: moments.unitary_imm_sq, 3: moments.coe_imm_sq, 4: moments.orth_imm_sq}
    oracle = {1: moments.oracle_prop1, 3: moments.oracle_coe, 4: moments.oracle_orth}
    pole_family = {1: "prop1", 3: "coe", 4: "orth"}
    records = []
    ok = True
    for n, gamma, N_range in list(_verify_cases(cfg)):
        if cfg.prop == 2:
            poles = moments.pole_points("prop2", n)
        elif cfg.prop == 5:
            poles = set()
        else:
            poles = moments.pole_points(pole_family[cfg.prop], gamma)
        for N in _irange(N_range):
            if N in poles:
                cfg.notices.append(f"skipping pole N={N} for n={n} gamma={format_partition(gamma)}")
                continue
            inputs = {"prop": cfg.prop, "n": n, "gamma": format_partition(gamma), "N": N}
            if cfg.prop == 5:
                ensembles = ("unitary", "orthogonal") if cfg.ensemble == "both" else (cfg.ensemble,)
                for ens in ensembles:
                    coeffs = moments.perm_poly_quad(n, N, ens)
                    grid = moments.oracle_perm_poly(n, N, ens)
                    off_zero = all(grid[i][j] == 0 for i in range(n + 1) for j in range(n + 1) if i != j)
                    for m, value in enumerate(coeffs):
                        got = grid[n - m][n - m]
                        equal = got == value and off_zero
                        ok &= equal
                        records.append(_record("verify", {**inputs, "ensemble": ens, "m": m}, value,
                                               oracle=format_rational(got), offdiagonal_zero=off_zero, equal=equal))
                continue
            if cfg.prop == 2:
                value, ref = moments.unitary_per_4(n, N), moments.oracle_prop2(n, N)
            else:
                value, ref = closed[cfg.prop](gamma, N), oracle[cfg.prop](gamma, N)
            equal = value == ref
            ok &= equal
            records.append(_record("verify", inputs, value, oracle=format_rational(ref), equal=equal))
    return (EXIT_OK if ok else EXIT_MISMATCH), records


# conjecture


def run_conjecture(cfg: RunConfig) -> tuple[int, list[dict]]:
    n = cfg.n[0]
    if n < 1:
        raise UsageError("n must be positive")
    if n > MAX_CONJECTURE_N:
        if not cfg.force:
            raise UsageError(f"n={n} exceeds {MAX_CONJECTURE_N}; pass --force to run anyway")
        cfg.notices.append(f"warning: n={n} is beyond the range checked so far; this may take a long time")
        matchings.MAX_HYPEROCTAHEDRAL = max(matchings.MAX_HYPEROCTAHEDRAL, n)
    reports = check_conjecture(n, cfg.N)
    records = []
    for rep in reports:
        failure = None
        if rep.first_failure is not None:
            N, lhs, rhs = rep.first_failure
            failure = {"N": N, "lhs": format_rational(lhs), "rhs": format_rational(rhs)}
        records.append({
            "command": "conjecture",
            "inputs": {"n": n, "gamma": format_partition(rep.gamma),
                       "N": f"{rep.tested_N[0]}..{rep.tested_N[-1]}" if rep.tested_N else ""},
            "exact": None,
            "verified": rep.verified,
            "certified": rep.certified,
            "points": len(rep.tested_N),
            "degree_bound": rep.degree_bound,
            "skipped_poles": rep.skipped_poles,
            "first_failure": failure,
        })
        for N in rep.skipped_poles:
            cfg.notices.append(f"skipping pole N={N} for gamma={format_partition(rep.gamma)}")
    ok = all(r.verified for r in reports)
    return (EXIT_OK if ok else EXIT_MISMATCH), records


# mc


def run_mc(cfg: RunConfig) -> tuple[int, list[dict]]:
    N = cfg.N[0]
    try:
        validate_mc(cfg.ensemble, cfg.gamma, N, cfg.power)
        if cfg.samples < 2:
            raise ValueError("need at least 2 samples")
        exact = moments.moment(cfg.ensemble, cfg.gamma, N, cfg.power).value
    except (ValueError, PoleError) as exc:
        raise UsageError(str(exc)) from None
    est = mc_moment(cfg.ensemble, cfg.gamma, N, cfg.power, cfg.samples, cfg.seed, cfg.workers)
    z = z_score(est, exact)
    inputs = {"ensemble": cfg.ensemble, "gamma": format_partition(cfg.gamma), "N": N, "power": cfg.power}
    rec = _record("mc", inputs, exact, mean=est.mean, stderr=est.stderr, z=z,
                  samples=est.samples, seed=est.seed)
    return (EXIT_OK if abs(z) <= 4 else EXIT_MISMATCH), [rec]


# table


def _table_rows(cfg: RunConfig):
    if cfg.formula == "prop2":
        if cfg.n is None:
            raise UsageError("prop2 needs --n")
        for n in _irange(cfg.n):
            yield n, (n,)
        return
    if cfg.gamma is not None and not cfg.gamma_all:
        yield sum(cfg.gamma), cfg.gamma
        return
    if cfg.n is None:
        raise UsageError(f"{cfg.formula} needs --gamma or --n")
    for n in _irange(cfg.n):
        gammas = partitions_of(n) if cfg.gamma_all else ((n,),)
        for gamma in gammas:
            yield n, gamma


def _evaluate(formula: str, n: int, gamma, N: int):
    if formula == "prop1":
        return moments.unitary_imm_sq(gamma, N)
    if formula == "prop2":
        return moments.unitary_per_4(n, N)
    if formula == "coe":
        return moments.coe_imm_sq(gamma, N)
    if formula == "orth":
        return moments.orth_imm_sq(gamma, N)
    if formula == "conj-lhs":
        return conjecture_lhs(gamma, N)
    if formula == "conj-rhs":
        return conjecture_rhs(gamma, N)
    raise AssertionError(formula)


def run_table(cfg: RunConfig) -> tuple[int, list[dict]]:
    records = []
    ok = True
    for n, gamma in _table_rows(cfg):
        if n < 1 or n > 6:
            raise UsageError(f"tables support 1 <= n <= 6, got n={n}")
        for N in _irange(cfg.N):
            if N < n:
                raise UsageError(f"N={N} is smaller than n={n}")
            inputs = {"formula": cfg.formula, "n": n, "gamma": format_partition(gamma), "N": N}
            if cfg.formula.startswith("perm-poly"):
                ens = cfg.formula.rsplit("-", 1)[1]
                try:
                    coeffs = moments.perm_poly_quad(n, N, ens)
                except PoleError as exc:
                    cfg.notices.append(f"skipping pole N={N}: {exc}")
                    continue
                for m, value in enumerate(coeffs):
                    records.append(_record("table", {**inputs, "m": m}, value))
                continue
            try:
                value = _evaluate(cfg.formula, n, gamma, N)
            except PoleError as exc:
                cfg.notices.append(f"skipping pole N={N}: {exc}")
                continue
            extra = {}
            if cfg.compare_printed and cfg.formula in PRINTED and gamma == (n,) and n <= 4:
                printed = PRINTED[cfg.formula](n, N)
                extra = {"closed_form": format_rational(printed), "match": printed == value}
                ok &= printed == value
            records.append(_record("table", inputs, value, **extra))
    return (EXIT_OK if ok else EXIT_MISMATCH), records


# output


def _flatten(rec: dict) -> dict:
    flat = {}
    for key, value in rec.items():
        if isinstance(value, dict):
            for k, v in value.items():
                flat[f"{key}.{k}"] = v
        elif isinstance(value, list):
            flat[key] = " ".join(str(v) for v in value)
        else:
            flat[key] = value
    return flat


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        flat = [_flatten(r) for r in records]
        columns = []
        for row in flat:
            columns.extend(k for k in row if k not in columns)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat)
        return buf.getvalue()
    lines = []
    for rec in records:
        flat = _flatten(rec)
        flat.pop("command")
        parts = [rec["command"]] + [f"{k.removeprefix('inputs.')}={_text(v)}" for k, v in flat.items() if v is not None]
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


def _text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


RUNNERS = {"verify": run_verify, "conjecture": run_conjecture, "mc": run_mc, "table": run_table}


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        code, records = RUNNERS[cfg.command](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for note in cfg.notices:
        print(note, file=sys.stderr)
    text = render(records, cfg.format)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
