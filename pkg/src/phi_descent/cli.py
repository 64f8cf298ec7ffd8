"""Command-line entry point: ``phi-descent {check,scan,gauss,classgroup,search,selftest}``.

Exit codes: 0 success / proven insoluble, 10 inconclusive, 1 internal
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import render
from .criteria import Status, verdict
from .gauss import GuardTermNonzero, IdentityFailure, LemmaViolation, gauss_pair, phi_poly
from .ntheory import InvalidTriple, Triple, is_prime, valid_triples
from .quadforms import DEFAULT_DISC_BOUND, DISC_BOUND_ENV, BoundExceeded, class_group, discriminant
from .series import NonIntegralCoefficient

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 10

log = logging.getLogger("phi_descent")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    output_format: str
    output_path: str | None
    discriminant_bound: int
    x_bound: int
    args: dict = field(default_factory=dict)


def _positive(name: str, value: int | None, minimum: int = 1) -> None:
    if value is not None and value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")


def _l_set(text: str) -> list[int]:
    try:
        ls = sorted({int(v) for v in text.split(",") if v.strip()})
    except ValueError:
        raise UsageError(f"--l-set must be a comma-separated list of integers, got {text!r}") from None
    if not ls or ls[0] < 2:
        raise UsageError(f"--l-set entries must be >= 2, got {text!r}")
    return ls


def _disc_bound(flag: int | None) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get(DISC_BOUND_ENV)
    if raw is None:
        return DEFAULT_DISC_BOUND
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{DISC_BOUND_ENV} must be an integer, got {raw!r}") from None


def make_config(ns: argparse.Namespace) -> RunConfig:
    _positive("disc-bound", ns.disc_bound)
    _positive("x-bound", ns.x_bound)
    for name in ("p", "c", "l", "p_max", "c_max"):
        _positive(name.replace("_", "-"), getattr(ns, name, None), 0)
    _positive("workers", getattr(ns, "workers", None))
    args = {k: v for k, v in vars(ns).items() if k not in ("command", "format", "out", "disc_bound", "x_bound")}
    if ns.command == "scan":
        args["l_set"] = _l_set(ns.l_set)
    default_format = "csv" if ns.command == "scan" else ("text" if ns.command == "selftest" else "json")
    cfg = RunConfig(
        command=ns.command,
        output_format=ns.format or default_format,
        output_path=ns.out,
        discriminant_bound=_disc_bound(ns.disc_bound),
        x_bound=ns.x_bound if ns.x_bound is not None else 100,
        args=args,
    )
    _positive("disc-bound", cfg.discriminant_bound)
    return cfg


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _triple(cfg: RunConfig) -> Triple:
    a = cfg.args
    if a.get("p") is None or a.get("c") is None or a.get("l") is None:
        raise UsageError("--p, --c and --l are required")
    return Triple(a["p"], a["c"], a["l"])


def _prime_arg(cfg: RunConfig) -> int:
    p = cfg.args.get("p")
    if p is None:
        raise UsageError("--p is required")
    return p


# -- commands ---------------------------------------------------------------


def cmd_check(cfg: RunConfig) -> int:
    v = verdict(_triple(cfg), cfg.discriminant_bound)
    if cfg.output_format == "json":
        _emit(cfg, render.dumps(render.verdict_to_dict(v)))
    elif cfg.output_format == "csv":
        _emit(cfg, render.csv_text(render.SCAN_COLUMNS, [render.verdict_row(v)]))
    else:
        _emit(cfg, render.verdict_text(v))
    return EXIT_OK if v.status is Status.NO_SOLUTIONS else EXIT_INCONCLUSIVE


def _verdict_with_bound(job: tuple[Triple, int]):
    t, bound = job
    return verdict(t, bound)


def cmd_scan(cfg: RunConfig) -> int:
    a = cfg.args
    if a.get("p_max") is None or a.get("c_max") is None:
        raise UsageError("--p-max and --c-max are required")
    if a["p_max"] > cfg.discriminant_bound:
        raise UsageError(f"--p-max {a['p_max']} exceeds the discriminant bound {cfg.discriminant_bound}")
    triples = valid_triples(a["p_max"], a["c_max"], a["l_set"])
    jobs = [(t, cfg.discriminant_bound) for t in triples]
    workers = a.get("workers") or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            verdicts = list(pool.map(_verdict_with_bound, jobs, chunksize=32))
    else:
        verdicts = [_verdict_with_bound(j) for j in jobs]
    if cfg.output_format == "json":
        _emit(cfg, render.dumps({
            "schema": render.SCHEMA,
            "kind": "scan",
            "rows": [render.verdict_to_dict(v) for v in verdicts],
        }))
    elif cfg.output_format == "csv":
        _emit(cfg, render.csv_text(render.SCAN_COLUMNS, [render.verdict_row(v) for v in verdicts]))
    else:
        _emit(cfg, "".join(render.verdict_text(v) for v in verdicts))
    if a.get("figure"):
        from .plotting import scan_figure

        scan_figure(verdicts, a["figure"])
        log.info("wrote %s", a["figure"])
    return EXIT_OK


def cmd_gauss(cfg: RunConfig) -> int:
    p = _prime_arg(cfg)
    if p < 5 or not is_prime(p):
        raise UsageError(f"--p must be a prime >= 5, got {p}")
    gp = gauss_pair(p)
    verified = gp.A * gp.A - (gp.B * gp.B).scale(gp.delta * p) == phi_poly(p).scale(4)
    if cfg.output_format == "json":
        _emit(cfg, render.dumps(render.gauss_to_dict(gp, verified)))
    elif cfg.output_format == "csv":
        _emit(cfg, render.csv_text(("degree", "A", "B"), render.gauss_rows(gp)))
    else:
        _emit(cfg, render.gauss_text(gp, verified))
    return EXIT_OK if verified else EXIT_INTERNAL


def cmd_classgroup(cfg: RunConfig) -> int:
    p = _prime_arg(cfg)
    if p < 5 or not is_prime(p):
        raise UsageError(f"--p must be a prime >= 5, got {p}")
    G = class_group(discriminant(p), cfg.discriminant_bound)
    if cfg.output_format == "json":
        _emit(cfg, render.dumps(render.classgroup_to_dict(G)))
    elif cfg.output_format == "csv":
        _emit(cfg, render.csv_text(("a", "b", "c"), [f.astuple() for f in G.classes]))
    else:
        _emit(cfg, render.classgroup_text(G))
    return EXIT_OK


def cmd_search(cfg: RunConfig) -> int:
    from .search import search_solutions

    t = _triple(cfg)
    sols = search_solutions(t, cfg.x_bound)
    if cfg.output_format == "json":
        _emit(cfg, render.dumps(render.search_to_dict(t, cfg.x_bound, sols)))
    elif cfg.output_format == "csv":
        _emit(cfg, render.csv_text(("x", "y"), [(r.x, r.y) for r in sols]))
    else:
        _emit(cfg, render.search_text(t, cfg.x_bound, sols))
    return EXIT_OK


def cmd_selftest(cfg: RunConfig) -> int:
    from .acceptance import run_all

    lines = []
    results = run_all(echo=lines.append)
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_INTERNAL


COMMANDS = {
    "check": cmd_check,
    "scan": cmd_scan,
    "gauss": cmd_gauss,
    "classgroup": cmd_classgroup,
    "search": cmd_search,
    "selftest": cmd_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"))
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--disc-bound", type=int, metavar="N",
                        help=f"largest |D| for class groups (env {DISC_BOUND_ENV}, default {DEFAULT_DISC_BOUND})")
    common.add_argument("--x-bound", type=int, metavar="N", help="search range |x| <= N (default 100)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="phi-descent",
        description="Insolubility criteria for c*y^l = (x^p - 1)/(x - 1).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def triple_args(sp):
        sp.add_argument("--p", type=int)
        sp.add_argument("--c", type=int)
        sp.add_argument("--l", type=int)

    triple_args(sub.add_parser("check", parents=[common], help="decide one triple (p, c, l)"))
    sp = sub.add_parser("scan", parents=[common], help="decide every triple in a box")
    sp.add_argument("--p-max", type=int)
    sp.add_argument("--c-max", type=int)
    sp.add_argument("--l-set", default="2", help="comma-separated exponents, e.g. 2,3,5")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--figure", metavar="PATH", help="also render a criterion map (png, pdf, svg)")
    sub.add_parser("gauss", parents=[common], help="print A_p, B_p").add_argument("--p", type=int)
    sub.add_parser("classgroup", parents=[common], help="class group of Q(sqrt(delta p))").add_argument(
        "--p", type=int)
    triple_args(sub.add_parser("search", parents=[common], help="brute-force search for solutions"))
    sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = make_config(ns)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, InvalidTriple, BoundExceeded) as exc:
        print(f"phi-descent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IdentityFailure, GuardTermNonzero, LemmaViolation, NonIntegralCoefficient) as exc:
        print(f"phi-descent: internal failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
