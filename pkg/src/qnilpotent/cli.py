"""Command-line front end.

Every verb prints one JSON document (``--format json``, the default) or a
short human-readable summary (``--format text``). Exit status is 0 on
success, 1 for invalid input and 2 when an internal consistency check
fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .audits import DEFAULT_SEED, SUITES, run_suite
from .cartan import root_system
from .centers import (
    DecompositionSpec,
    center_nilpotent,
    center_W,
    covariant_data,
    double_schubert_center,
    validate_decomposition,
)
from .diophantine import (
    BlockConfig,
    b1_corank,
    b_class,
    corank_direct,
    greedy_trace,
    pq_lattice_gcd,
)
from .errors import AuditFailure, InputError
from .lattice_forms import build_A_and_Lbar, build_L0
from .root_of_unity import pi_degree, root_centrality_report, skew_normal_form
from .weyl import beta_grid, format_word, longest_and_parabolic, longest_element, parse_word

SCHEMA = 1
_INT64 = 2 ** 63


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2; bad input is exit 1 here
        raise InputError(message)


class _Subparsers:
    """Adds the shared flags to every verb."""

    def __init__(self, action, common):
        self.action = action
        self.common = common

    def add_parser(self, name, **kw):
        return self.action.add_parser(name, parents=[self.common], **kw)


def _wire(obj):
    """Make ``obj`` JSON-safe; integers outside 64-bit range become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if not -_INT64 <= obj < _INT64 else obj
    if isinstance(obj, dict):
        return {str(k): _wire(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_wire(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# --- argument helpers --------------------------------------------------------


def _add_word_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="Lie type, e.g. A3, B2, E6")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word", help="comma-separated reduced word, e.g. 1,2,1")
    g.add_argument("--longest", action="store_true", help="use a reduced word of w0")
    g.add_argument("--parabolic", metavar="LEVI",
                   help="use w^p for the Levi on these simple roots, e.g. 1,3 (empty string for none)")


def _resolve_word(args):
    system = root_system(args.type)
    if args.longest:
        word = longest_element(system).reduced_word
    elif args.parabolic is not None:
        levi = parse_word(args.parabolic)
        for i in levi:
            system._check_index(i)
        word = longest_and_parabolic(system, levi)[2].reduced_word
    else:
        word = parse_word(args.word)
    return system, word


def _parse_signs(text: str) -> tuple[int, int, int]:
    toks = [t.strip() for t in text.split(",")]
    table = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
    if len(toks) != 3 or any(t not in table for t in toks):
        raise InputError(f"cannot parse signs {text!r}; expected three of + or -, e.g. +,-,+")
    return tuple(table[t] for t in toks)


def _parse_factors(text: str) -> list[tuple[int, ...]]:
    parts = text.split(";")
    factors = [parse_word(p) for p in parts]
    if any(not f for f in factors):
        raise InputError("every factor must be a nonempty word; separate factors with ';'")
    return factors


# --- verbs ---------------------------------------------------------------------


def cmd_describe(args) -> dict:
    system, word = _resolve_word(args)
    grid = beta_grid(system, word)
    L0 = build_L0(grid)
    _, lbar = build_A_and_Lbar(grid, L0)
    return {
        "type": system.name,
        "cartan": system.cartan,
        "symmetrizers": system.symmetrizers,
        "word": grid.word,
        "length": grid.r,
        "labels": grid.labels,
        "betas": grid.betas,
        "support": grid.support,
        "counts": {str(s): c for s, c in sorted(grid.counts.items())},
        "L0": L0.to_json(),
        "Lbar": lbar.to_json(),
        "rank_L0": L0.rank,
        "det_Lbar": lbar.det,
        "skew_divisors": skew_normal_form(lbar).divisors if grid.r else [],
    }


def cmd_center(args) -> dict:
    system, word = _resolve_word(args)
    return center_nilpotent(system, word).to_json()


def cmd_covariants(args) -> dict:
    system, word = _resolve_word(args)
    return {"type": system.name, "word": word, "covariants": [c.to_json() for c in covariant_data(system, word)]}


def cmd_corank(args) -> dict:
    ea, eb, ec = _parse_signs(args.signs)
    cfg = BlockConfig(args.a, ea, args.b, eb, args.c, ec)
    out = {
        "config": str(cfg),
        "size": cfg.size,
        "corank": corank_direct(cfg),
        "p": cfg.p,
        "q": cfg.q,
        "b": cfg.b,
        "lattice_gcd": pq_lattice_gcd(cfg),
        "b_class": b_class(cfg),
        "trace": [s.to_json() for s in greedy_trace(cfg)],
    }
    if cfg.b == 1 and cfg.a and cfg.c and (cfg.ea, cfg.eb, cfg.ec) == (1, 1, 1):
        out["closed_form"] = b1_corank(cfg.a, cfg.c)
    return out


def cmd_pidegree(args) -> dict:
    system, word = _resolve_word(args)
    grid = beta_grid(system, word)
    if grid.r == 0:
        raise InputError("empty word")
    rep = pi_degree(build_L0(grid), args.m, system)
    out = {"type": system.name, "word": grid.word, **rep.to_json()}
    if args.report:
        out["centrality"] = root_centrality_report(system, word, args.m).to_json()
    return out


def cmd_verify(args) -> dict:
    names = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(n, args.max_rank, args.seed) for n in names]
    out = {
        "max_rank": args.max_rank,
        "seed": args.seed,
        "suites": [r.to_json() for r in results],
        "passed": all(r.passed for r in results),
    }
    if not out["passed"]:
        bad = ", ".join(r.name for r in results if not r.passed)
        raise AuditFailure(f"suites failed: {bad}", out)
    return out


def cmd_double_schubert(args) -> dict:
    system = root_system(args.type)
    return double_schubert_center(system, parse_word(args.wa), parse_word(args.wc)).to_json()


def cmd_center_w(args) -> dict:
    system = root_system(args.type)
    spec = DecompositionSpec(system, _parse_factors(args.factors))
    check = validate_decomposition(spec)
    if not check:
        raise InputError("invalid decomposition: " + "; ".join(check.problems))
    out = center_W(spec).to_json()
    out["factors"] = [list(f) for f in spec.factors]
    return out


# --- text rendering ---------------------------------------------------------------


def _text(verb: str, data: dict) -> str:
    if verb in ("center", "double-schubert", "center-w"):
        lines = [f"{data['type']} word {format_word(data['word']) or 'e'}: center of dimension {data['dimension']}"]
        lines += [f"  {g['rendered']}" for g in data["generators"]]
        return "\n".join(lines)
    if verb == "corank":
        lines = [f"{data['config']}: corank {data['corank']} (p={data['p']}, q={data['q']}, b={data['b']})"]
        lines += [f"  move {s['move']}: {s['from']} -> {s['to']}" for s in data["trace"]]
        return "\n".join(lines)
    if verb == "pidegree":
        warn = f" [{'; '.join(data['warnings'])}]" if data["warnings"] else ""
        return f"{data['type']} word {format_word(data['word'])}, m={data['m']}: h={data['h']}, PI degree {data['pi_degree']}{warn}"
    if verb == "verify":
        lines = []
        for s in data["suites"]:
            flag = "PASS" if s["passed"] else "FAIL"
            lines.append(f"{flag} {s['suite']}: {s['checked'] - s['failure_count']}/{s['checked']}")
        return "\n".join(lines)
    if verb == "covariants":
        return "\n".join(
            f"C{c['s']}: weight {c['weight']}, z-exponent {c['z_exponent']}, certified {c['certified']}"
            for c in data["covariants"]
        )
    return "\n".join(f"{k}: {json.dumps(_wire(v))}" for k, v in data.items() if k != "schema")


# --- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qnilpotent", description="Centers of quantized nilpotent algebras.")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    # the same flag after the verb; SUPPRESS keeps it from overriding the global one
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = _Subparsers(parser.add_subparsers(dest="verb", required=True, parser_class=_Parser), common)

    for verb, handler, help_ in (
        ("describe", cmd_describe, "root data, beta grid and skew forms of a word"),
        ("center", cmd_center, "center of the nilpotent algebra of a word"),
        ("covariants", cmd_covariants, "covariant elements with engine certificates"),
    ):
        p = sub.add_parser(verb, help=help_)
        _add_word_args(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("corank", help="corank of a signed three-block matrix")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--signs", default="+,+,+", help="signs of the a, b, c blocks, e.g. +,-,+")
    p.set_defaults(handler=cmd_corank)

    p = sub.add_parser("pidegree", help="PI degree at a primitive m-th root of unity")
    _add_word_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--report", action="store_true", help="add the m-th power centrality report")
    p.set_defaults(handler=cmd_pidegree)

    p = sub.add_parser("verify", help="run consistency suites")
    p.add_argument("--suite", default="all", choices=("all",) + SUITES)
    p.add_argument("--max-rank", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("double-schubert", help="center of a double Schubert window")
    p.add_argument("--type", required=True)
    p.add_argument("--wa", required=True, help="strict prefix of --wc; empty string for the identity")
    p.add_argument("--wc", required=True)
    p.set_defaults(handler=cmd_double_schubert)

    p = sub.add_parser("center-w", help="center of the algebra of a decomposition w = w_1 w_2 ...")
    p.add_argument("--type", required=True)
    p.add_argument("--factors", required=True, help="factors separated by ';', e.g. '1,2;1'")
    p.set_defaults(handler=cmd_center_w)
    return parser


def _emit(data: dict, fmt: str, verb: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(_wire({"schema": SCHEMA, **data}), sort_keys=False) + "\n")
    else:
        stream.write(_text(verb, data) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        data = args.handler(args)
    except InputError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except AuditFailure as exc:
        stderr.write(f"internal check failed: {exc.args[0] if exc.args else exc}\n")
        if len(exc.args) > 1 and isinstance(exc.args[1], dict):
            _emit(exc.args[1], fmt, "verify", stdout)
        return 2
    _emit(data, fmt, args.verb, stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
