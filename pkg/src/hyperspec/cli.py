"""``hyperspec`` command line.

Every command prints one JSON document on stdout::

    {"schema_version": "1", "command": ..., "result": {...}}
    {"schema_version": "1", "command": ..., "error": {"code": ..., "message": ...}}

Exit status is 0 on success, 1 for domain errors and 2 for usage or input
format errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import uhg
from .bipartite import DEFAULT_CAP, OddBipartition, find_odd_bipartition_exhaustive, verify_odd_bipartition
from .eigensolvers import (
    MultistartOptions, PowerMethodOptions, alternating_eigenpair, check_supervertex_property,
    closed_form_eigenpair, enumerate_laplacian_spectrum, lambda_q_power_method,
)
from .errors import HyperspecError, ParseError
from .families import (
    CycleParams, PathParams, build_s_cycle, build_s_path, classify_s_cycle, construct_odd_bipartition,
    cycle_odd_bipartite_predicate, family_name, recognize,
)
from .hypergraph import Hypergraph, core_analysis, degrees, is_connected, is_regular, supervertices

SCHEMA_VERSION = "1"
SCHEMA_PATH = Path(__file__).with_name("schema") / "command_result.schema.json"

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandResult:
    status: int
    payload: dict


class UsageError(Exception):
    def __init__(self, message, code="USAGE"):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- helpers


def _degree_profile(G: Hypergraph) -> dict:
    prof = degrees(G)
    return {"degrees": [prof.degrees[i] for i in range(1, G.n + 1)], "max": prof.max, "min": prof.min}


def _classification(kind: str, p) -> dict:
    if kind == "path":
        return {"family": family_name(p.k, p.s), "regular": False}
    c = classify_s_cycle(p)
    return {"family": c.family, "regular": c.regular, "q": c.q, "r": c.r, "delta": c.delta,
            "t0": c.t0, "l0": c.l0}


def _family_block(kind: str, p) -> dict:
    return {"kind": kind, "k": p.k, "s": p.s, "m": p.m, "classification": _classification(kind, p)}


def _load(path: str) -> Hypergraph:
    try:
        return uhg.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}", code="IO_ERROR") from exc


def _sidecar(path: str) -> Path:
    return Path(str(path) + ".json")


def _family_params(G: Hypergraph, args) -> tuple[str, object]:
    """Family parameters from flags, then the build sidecar, then recognition."""
    if args.k is not None or args.s is not None or args.m is not None:
        if None in (args.k, args.s, args.m):
            raise UsageError("family flags need all of -k, -s and -m")
        kind = args.kind or "cycle"
        p = (CycleParams if kind == "cycle" else PathParams)(args.k, args.s, args.m)
    elif _sidecar(args.input).exists():
        meta = json.loads(_sidecar(args.input).read_text())
        kind = meta["kind"]
        p = (CycleParams if kind == "cycle" else PathParams)(meta["k"], meta["s"], meta["m"])
    else:
        found = recognize(G)
        if found is None:
            raise HyperspecError("input is not a recognizable s-path or s-cycle", code="NOT_A_FAMILY")
        return found
    builder = build_s_cycle if kind == "cycle" else build_s_path
    if builder(p).edge_sets() != G.edge_sets() or builder(p).n != G.n:
        raise HyperspecError(f"input does not match the {kind} with k={p.k}, s={p.s}, m={p.m}",
                             code="FAMILY_MISMATCH")
    return kind, p


def _jobs_default() -> str:
    # argparse runs string defaults through the type check, so a bad value is a usage error
    return os.environ.get("HYPERSPEC_JOBS", "1")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


# ---------------------------------------------------------------- commands


def cmd_build(args) -> dict:
    if args.kind == "cycle":
        p = CycleParams(args.k, args.s, args.m)
        G = build_s_cycle(p)
    else:
        p = PathParams(args.k, args.s, args.m)
        G = build_s_path(p)
    if args.out:
        uhg.dump(G, args.out)
        _sidecar(args.out).write_text(json.dumps({"kind": args.kind, "k": p.k, "s": p.s, "m": p.m}) + "\n")
    return {
        "kind": args.kind, "k": p.k, "s": p.s, "m": G.m, "n": G.n,
        "out": args.out,
        "degree_profile": _degree_profile(G),
        "classification": _classification(args.kind, p),
    }


def cmd_analyze(args) -> dict:
    G = _load(args.input)
    regular, deg = is_regular(G)
    core, cored = core_analysis(G)
    found = recognize(G)
    return {
        "k": G.k, "n": G.n, "m": G.m,
        "degree_profile": _degree_profile(G),
        "regular": regular, "regular_degree": deg,
        "connected": is_connected(G),
        "core_vertices": sorted(core), "cored": cored,
        "supervertices": [
            {"vertices": list(b.vertices), "degree": b.degree, "core": b.is_core}
            for b in supervertices(G).blocks
        ],
        "family": None if found is None else _family_block(*found),
    }


def cmd_oddbip(args) -> dict:
    G = _load(args.input)
    if args.mode == "verify":
        if not args.v1:
            raise UsageError("verify mode needs --v1")
        p = OddBipartition(args.v1)
        return {"mode": "verify", "v1": p.sorted(), "odd_bipartite": verify_odd_bipartition(G, p)}
    if args.mode == "search":
        found = find_odd_bipartition_exhaustive(G, cap=args.cap)
        return {"mode": "search", "cap": args.cap, "found": found is not None,
                "v1": None if found is None else found.sorted()}
    kind, p = _family_params(G, args)
    holds = True if kind == "path" else cycle_odd_bipartite_predicate(p)
    witness = construct_odd_bipartition(p) if holds else None
    return {
        "mode": "criterion", "family": _family_block(kind, p), "odd_bipartite": holds,
        "witness": None if witness is None else witness.sorted(),
        "witness_verified": None if witness is None else verify_odd_bipartition(G, witness),
    }


_METHOD_OPS = {"power": "Q", "closed-form": "Q", "enumerate": "L"}


def cmd_spectrum(args) -> dict:
    op = args.op or _METHOD_OPS[args.method]
    if _METHOD_OPS[args.method] != op:
        raise UsageError(f"method {args.method} computes op {_METHOD_OPS[args.method]}, not {op}",
                         code="INCOMPATIBLE_METHOD")
    G = _load(args.input)
    result = {"method": args.method, "op": op}
    if args.method == "power":
        opts = PowerMethodOptions(tol=args.tol if args.tol is not None else 1e-10)
        pair = lambda_q_power_method(G, opts)
        result.update(pair.to_dict())
        rows = [(pair.lam, pair.residual, 1)]
    elif args.method == "closed-form":
        found = recognize(G)
        if found is None or found[0] != "cycle":
            raise HyperspecError("closed forms are only available for s-cycles", code="NOT_A_FAMILY")
        pair, alpha = closed_form_eigenpair(found[1])
        result.update(pair.to_dict())
        result["alpha"] = alpha
        result["family"] = _family_block(*found)
        rows = [(pair.lam, pair.residual, 1)]
    else:
        opts = MultistartOptions(starts=args.starts, seed=args.seed, jobs=args.jobs)
        if args.tol is not None:
            opts.newton_tol = args.tol
        report = enumerate_laplacian_spectrum(G, opts)
        result.update(report.to_dict(with_vectors=args.vectors))
        rows = [(p.lam, p.residual, h) for p, h in zip(report.representatives, report.hits)]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["lambda", "residual", "hits"])
            writer.writerows((repr(lam), repr(res), hits) for lam, res, hits in rows)
        result["csv"] = args.csv
    return result


def _verify_regularity(G: Hypergraph, args) -> dict:
    regular, _ = is_regular(G)
    delta = degrees(G).max
    pair = lambda_q_power_method(G)
    gap = 2 * delta - pair.lam
    if regular:
        passed = abs(gap) <= 1e-8
    else:
        passed = gap >= 1e-3
    return {"passed": passed, "evidence": {
        "regular": regular, "delta": delta, "two_delta": 2 * delta, "lambda_q": pair.lam,
        "gap": gap, "residual": pair.residual}}


def _verify_odd_bipartite(G: Hypergraph, args) -> dict:
    kind, p = _family_params(G, args)
    holds = True if kind == "path" else cycle_odd_bipartite_predicate(p)
    evidence = {"family": _family_block(kind, p), "criterion": holds}
    passed = True
    if holds:
        w = construct_odd_bipartition(p)
        ok = verify_odd_bipartition(G, w)
        evidence.update(witness=w.sorted(), witness_verified=ok)
        passed &= ok
    if G.n <= args.cap:
        found = find_odd_bipartition_exhaustive(G, cap=args.cap)
        evidence["exhaustive"] = None if found is None else found.sorted()
        passed &= (found is not None) == holds
    else:
        evidence["exhaustive"] = "skipped"
    return {"passed": passed, "evidence": evidence}


def _verify_supervertices(G: Hypergraph, args) -> dict:
    report = enumerate_laplacian_spectrum(
        G, MultistartOptions(starts=args.starts, seed=args.seed, jobs=args.jobs))
    checks = []
    for pair in report.representatives:
        rep = check_supervertex_property(G, pair)
        checks.append({"lambda": pair.lam, "residual": pair.residual, "passed": rep.passed,
                       "blocks_checked": rep.checked})
    return {"passed": all(c["passed"] for c in checks) and bool(checks),
            "evidence": {"pairs": checks}}


def _verify_alternating(G: Hypergraph, args) -> dict:
    pair = alternating_eigenpair(G, G.k, G.n)
    passed = pair.residual <= 1e-12 and pair.lam == G.k + 1
    return {"passed": passed, "evidence": {"lambda": pair.lam, "residual": pair.residual,
                                           "delta": degrees(G).max}}


_VERIFIERS = {
    "theorem3": _verify_regularity, "theorem4": _verify_odd_bipartite,
    "theorem6": _verify_supervertices, "prop8": _verify_alternating,
}


def cmd_verify(args) -> dict:
    G = _load(args.input)
    out = {"what": args.what}
    if args.what == "theorem6":
        out["seed"] = args.seed
    out.update(_VERIFIERS[args.what](G, args))
    return out


# ---------------------------------------------------------------- parser


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperspec", description="Spectra of uniform hypergraphs, s-paths and s-cycles.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="build an s-path or s-cycle")
    p.add_argument("kind", choices=["path", "cycle"])
    p.add_argument("-k", type=int, required=True, help="uniformity")
    p.add_argument("-s", type=int, required=True, help="overlap of consecutive edges")
    p.add_argument("-m", type=int, required=True, help="number of edges")
    p.add_argument("-o", "--out", help="write the hypergraph here in UHG v1 format")

    p = sub.add_parser("analyze", help="structural summary of a UHG file")
    p.add_argument("input")

    def add_family_flags(p):
        p.add_argument("--kind", choices=["path", "cycle"])
        p.add_argument("-k", type=int)
        p.add_argument("-s", type=int)
        p.add_argument("-m", type=int)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex cap for exhaustive search")

    p = sub.add_parser("oddbip", help="odd-bipartition checks")
    p.add_argument("input")
    p.add_argument("--mode", choices=["verify", "search", "criterion"], required=True)
    p.add_argument("--v1", type=_vertex_list, help="comma separated vertex ids")
    add_family_flags(p)

    def add_random_flags(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--starts", type=int, default=500)
        p.add_argument("--jobs", type=_positive_int, default=_jobs_default())

    p = sub.add_parser("spectrum", help="H-eigenvalues")
    p.add_argument("input")
    p.add_argument("--op", choices=["L", "Q"])
    p.add_argument("--method", choices=["power", "enumerate", "closed-form"], required=True)
    p.add_argument("--tol", type=float)
    p.add_argument("--csv", help="write lambda,residual,hits rows here")
    p.add_argument("--vectors", action="store_true", help="include eigenvectors in the report")
    add_random_flags(p)

    p = sub.add_parser("verify", help="check a structural result on this input")
    p.add_argument("input")
    p.add_argument("--what", choices=sorted(_VERIFIERS), required=True,
                   help="theorem3: lambda(Q) = 2*Delta iff regular; theorem4: odd-bipartite criterion "
                        "against exhaustive search; theorem6: equal entries on supervertices; "
                        "prop8: alternating eigenvector of a tight cycle")
    add_random_flags(p)
    add_family_flags(p)
    return parser


_COMMANDS = {
    "build": cmd_build, "analyze": cmd_analyze, "oddbip": cmd_oddbip,
    "spectrum": cmd_spectrum, "verify": cmd_verify,
}


def _error(command, code, message) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "error": {"code": code, "message": message}}


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if a in _COMMANDS), None)
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        result = _COMMANDS[command](args)
    except UsageError as exc:
        return CommandResult(EXIT_USAGE, _error(command, exc.code, str(exc)))
    except ParseError as exc:
        return CommandResult(EXIT_USAGE, _error(command, exc.code, str(exc)))
    except HyperspecError as exc:
        return CommandResult(EXIT_DOMAIN, _error(command, exc.code, str(exc)))
    except ValueError as exc:  # option validation
        return CommandResult(EXIT_USAGE, _error(command, "USAGE", str(exc)))
    except SystemExit as exc:  # --help
        return CommandResult(EXIT_OK if not exc.code else EXIT_USAGE, None)
    return CommandResult(EXIT_OK, {"schema_version": SCHEMA_VERSION, "command": command, "result": result})


def main(argv: Optional[Sequence[str]] = None) -> int:
    res = run(argv)
    if res.payload is not None:
        json.dump(res.payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return res.status


if __name__ == "__main__":
    sys.exit(main())
