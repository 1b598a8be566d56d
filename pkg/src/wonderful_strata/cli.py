"""
Command-line front end.

    wonderful-strata list-strata --type A2 --kind piece
    wonderful-strata intersect --type A2 '{"kind":"piece","J":[0],"w":[1]}' '{"kind":"bmb","J":[0],"x":[],"y":[]}'
    wonderful-strata components --type A2 --K 1 '{"kind":"piece","J":[0],"w":[1]}'
    wonderful-strata verify --suite all --type A2
    wonderful-strata hasse --type A1 --kind piece

Exit status is 0 on success, 1 when a verification finds a counterexample,
and 2 for usage errors.  Reduced words are ShortLex-least index lists.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .coxeter import (
    DEFAULT_GROUP_CAP, CartanDatum, CoxeterSystem, DiagramAutomorphism,
    as_subset, build_system, cartan_matrix,
)
from .demazure import coset_max, coset_min, demazure
from .partitions import closure_covers, components_with_orbit_closure
from .strata import (
    Kind, StratumRef, WonderfulContext, codim, enumerate_strata,
    intersection_nonempty,
)

__all__ = [
    "CliConfig", "Verdict", "parse_cartan", "parse_automorphism", "stratum_to_wire",
    "stratum_from_wire", "hasse_dot", "main",
]

CAP_ENV = "WONDERFUL_STRATA_CAP"
KINDS = ("gxg", "bb", "bmb", "bmbm", "piece")


class UsageError(ValueError):
    """Bad arguments; reported with exit status 2."""


@dataclass(frozen=True)
class CliConfig:
    type_label: str
    delta: str | None = None
    twist: str | None = None
    output: str = "json"
    cap: int = DEFAULT_GROUP_CAP


# -- parsing -------------------------------------------------------------------

def parse_cartan(spec: str) -> CartanDatum:
    """A type label such as ``B2`` or ``A1xA1``, or a path to a matrix file
    (JSON list of rows, or whitespace/comma separated rows)."""
    path = Path(spec)
    if not path.is_file():
        return cartan_matrix(spec)
    text = path.read_text()
    if text.lstrip().startswith("["):
        rows = json.loads(text)
    else:
        rows = np.loadtxt(text.replace(",", " ").splitlines(), dtype=np.int64, ndmin=2).tolist()
    return CartanDatum(tuple(map(tuple, rows)), label=path.stem)


def parse_automorphism(spec: str | None, rank: int) -> DiagramAutomorphism:
    """Comma-separated images of 0..rank-1; the identity when ``spec`` is empty."""
    if not spec:
        return DiagramAutomorphism.identity(rank)
    try:
        perm = tuple(int(p) for p in spec.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse permutation {spec!r}") from exc
    if len(perm) != rank:
        raise UsageError(f"permutation {spec!r} has length {len(perm)}, rank is {rank}")
    return DiagramAutomorphism(perm)


def parse_subset(spec: str | None) -> frozenset | None:
    if spec is None:
        return None
    spec = spec.strip()
    return frozenset(int(p) for p in spec.split(",")) if spec else frozenset()


def _word(w) -> list[int]:
    return list(w.word)


def stratum_to_wire(ctx: WonderfulContext, s: StratumRef, *, measure: bool = True) -> dict:
    """``{"kind": ..., "J": [...], ...}`` with reduced words as index lists."""
    d: dict = {"kind": s.kind.value, "J": sorted(s.J)}
    if s.kind in (Kind.PIECE, Kind.FPIECE):
        d["w"] = _word(s.x)
    elif s.kind is not Kind.GXG:
        d["x"], d["y"] = _word(s.x), _word(s.y)
    if measure and s.kind is not Kind.FPIECE:
        m = codim(ctx, s)
        d["dim" if m.is_dimension else "codim"] = m.value
    return d


def stratum_from_wire(ctx: WonderfulContext, d: dict) -> StratumRef:
    """Inverse of `stratum_to_wire`; measure fields are ignored."""
    system = ctx.system
    try:
        kind = Kind(d["kind"])
        J = as_subset(system, d.get("J", []))
        if kind is Kind.GXG:
            s = StratumRef(kind, J)
        elif kind in (Kind.PIECE, Kind.FPIECE):
            s = StratumRef(kind, J, system.from_word(d["w"]))
        else:
            s = StratumRef(kind, J, system.from_word(d["x"]), system.from_word(d["y"]))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed stratum {d!r}: {exc}") from exc
    ctx.check(s)
    return s


def _load_stratum(ctx: WonderfulContext, text: str) -> StratumRef:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stratum is not valid JSON: {text!r}") from exc
    if not isinstance(d, dict):
        raise UsageError(f"stratum must be a JSON object: {text!r}")
    return stratum_from_wire(ctx, d)


@dataclass(frozen=True)
class Verdict:
    nonempty: bool
    criterion: str
    criterion_lhs: tuple[tuple[int, ...], ...]
    criterion_rhs: tuple[tuple[int, ...], ...]
    codim_sum: int | None

    def to_dict(self) -> dict:
        return {"nonempty": self.nonempty, "criterion": self.criterion,
                "criterion_lhs": [list(w) for w in self.criterion_lhs],
                "criterion_rhs": [list(w) for w in self.criterion_rhs],
                "codim_sum": self.codim_sum}

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        return cls(d["nonempty"], d["criterion"], tuple(tuple(w) for w in d["criterion_lhs"]),
                   tuple(tuple(w) for w in d["criterion_rhs"]), d["codim_sum"])


def intersect_verdict(ctx: WonderfulContext, X: StratumRef, Y: StratumRef) -> Verdict:
    """Evaluate the non-emptiness inequality for a compatible pair over one J."""
    if X.J != Y.J:
        raise UsageError("both strata must lie over the same J")
    pair = {X.kind, Y.kind}
    if pair == {Kind.BB, Kind.BMBM}:
        A, B = (X, Y) if X.kind is Kind.BB else (Y, X)
        lhs = (A.x, B.y)
        rhs = (B.x, coset_max(A.y, A.J))
        text = "x <= u and v <= max(y W_J)"
    elif pair == {Kind.PIECE, Kind.BMB}:
        A, B = (X, Y) if X.kind is Kind.PIECE else (Y, X)
        lhs = (coset_min(ctx.delta_of(A.x), A.J, "left"),)
        rhs = (demazure(B.y.inverse(), ctx.delta_of(B.x)),)
        text = "min(W_J delta(w)) <= y^-1 * delta(x)"
    else:
        raise UsageError(f"no intersection criterion for {X.kind.value} and {Y.kind.value}")
    ok = intersection_nonempty(ctx, X, Y)
    if ok != all(a.bruhat_le(b) for a, b in zip(lhs, rhs)):
        raise AssertionError("echoed inequality disagrees with the criterion")
    total = codim(ctx, X).value + codim(ctx, Y).value if ok else None
    return Verdict(ok, text, tuple(tuple(w.word) for w in lhs), tuple(tuple(w.word) for w in rhs), total)


# -- output --------------------------------------------------------------------

def _dot_id(i: int) -> str:
    return f"n{i}"


def hasse_dot(ctx: WonderfulContext, strata: list[StratumRef], covers, name: str) -> str:
    """A DOT digraph with an edge from each stratum to the strata it covers."""
    strata = sorted(strata)
    ids = {s: _dot_id(i) for i, s in enumerate(strata)}
    lines = [f'digraph "{name}" {{', "  rankdir=TB;"]
    for s in strata:
        label = repr(s).replace('"', r'\"')
        lines.append(f'  {ids[s]} [label="{label}"];')
    for big, small in sorted(covers, key=lambda p: (p[0].sort_key(), p[1].sort_key())):
        lines.append(f"  {ids[big]} -> {ids[small]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit(payload, output: str, text_lines: Sequence[str]) -> None:
    if output == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def _describe(ctx, s: StratumRef) -> str:
    d = stratum_to_wire(ctx, s)
    if "dim" in d:
        return f"{s!r}  dim={d['dim']}"
    if "codim" in d:
        return f"{s!r}  codim={d['codim']}"
    return repr(s)


# -- commands ------------------------------------------------------------------

def _context(args) -> tuple[CoxeterSystem, WonderfulContext]:
    config: CliConfig = args.config
    if not config.type_label:
        raise UsageError("--type is required")
    system = build_system(parse_cartan(config.type_label), group_cap=config.cap)
    delta = parse_automorphism(config.delta, system.rank)
    return system, WonderfulContext(system, delta)


def cmd_list_strata(args) -> int:
    _, ctx = _context(args)
    J = parse_subset(args.J)
    strata = sorted(enumerate_strata(ctx, args.kind, J))
    _emit([stratum_to_wire(ctx, s) for s in strata], args.output, [_describe(ctx, s) for s in strata])
    return 0


def cmd_intersect(args) -> int:
    _, ctx = _context(args)
    X, Y = _load_stratum(ctx, args.first), _load_stratum(ctx, args.second)
    v = intersect_verdict(ctx, X, Y)
    text = f"{'nonempty' if v.nonempty else 'empty'}: {v.criterion}"
    if v.codim_sum is not None:
        text += f"; codim {v.codim_sum}"
    _emit(v.to_dict(), args.output, [text])
    return 0


def cmd_components(args) -> int:
    _, ctx = _context(args)
    X = _load_stratum(ctx, args.stratum)
    if X.kind in (Kind.FPIECE,):
        raise UsageError("components are defined for orbit, orbit-pair and piece strata")
    K = parse_subset(args.K) or frozenset()
    comps = sorted(components_with_orbit_closure(ctx, X, as_subset(ctx.system, K)))
    _emit([stratum_to_wire(ctx, s) for s in comps], args.output, [_describe(ctx, s) for s in comps])
    return 0


def cmd_verify(args) -> int:
    from .oracle import SUITES, SweepConfig, run_suite

    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    types = None
    if args.type:
        datum = parse_cartan(args.type)
        build_system(datum, group_cap=args.cap)      # reject oversize groups up front
        types = (datum,)
    result = run_suite(args.suite, SweepConfig(types=types, cap=min(args.cap, SweepConfig().cap)))
    d = result.to_dict(timing=args.timing)
    lines = [f"{result.suite}: {'pass' if result.passed else 'FAIL'} ({result.cases} cases, "
             f"types {', '.join(result.types)})"]
    lines += [f"  {f.get('suite', result.suite)} {f['type']} {f['check']}: {f['witness']}" for f in result.failures]
    _emit(d, args.output, lines)
    return 0 if result.passed else 1


def cmd_hasse(args) -> int:
    system, ctx = _context(args)
    twist = parse_automorphism(args.twist, system.rank) if args.twist else None
    strata = sorted(enumerate_strata(ctx, args.kind))
    covers = closure_covers(ctx, strata, twist=twist)
    if args.output == "json":
        _emit({"nodes": [stratum_to_wire(ctx, s) for s in strata],
               "covers": [[strata.index(a), strata.index(b)] for a, b in covers]}, "json", [])
    elif args.output == "dot":
        sys.stdout.write(hasse_dot(ctx, strata, covers, f"{system.label} {args.kind}"))
    else:
        _emit(None, "text", [f"{a!r} > {b!r}" for a, b in covers])
    return 0


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_GROUP_CAP
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{CAP_ENV}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Cartan type such as A2, B3, A1xA1, or a matrix file")
    common.add_argument("--delta", help="diagram automorphism as images of 0..n-1, e.g. 1,0 "
                        "(verify always sweeps every automorphism)")
    common.add_argument("--output", choices=("json", "text", "dot"), default="json")
    common.add_argument("--cap", type=int, default=None,
                        help=f"largest Weyl group to build (default from ${CAP_ENV} or {DEFAULT_GROUP_CAP})")

    p = argparse.ArgumentParser(prog="wonderful-strata",
                                description="Strata of wonderful group compactifications.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("list-strata", parents=[common], help="enumerate strata of one kind")
    q.add_argument("--kind", choices=KINDS + ("fpiece",), required=True)
    q.add_argument("--J", help="restrict to one orbit, e.g. 0,1 (empty string for the closed orbit)")
    q.set_defaults(func=cmd_list_strata)

    q = sub.add_parser("intersect", parents=[common], help="decide whether two strata meet")
    q.add_argument("first")
    q.add_argument("second")
    q.set_defaults(func=cmd_intersect)

    q = sub.add_parser("components", parents=[common], help="components of a closure meeting an orbit closure")
    q.add_argument("stratum")
    q.add_argument("--K", default="", help="the orbit index K, e.g. 1")
    q.set_defaults(func=cmd_components)

    q = sub.add_parser("verify", parents=[common], help="run an exhaustive sweep")
    q.add_argument("--suite", required=True)
    q.add_argument("--timing", action="store_true", help="include wall time in the report")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("hasse", parents=[common], help="covering relation of the closure order")
    q.add_argument("--kind", choices=KINDS + ("fpiece",), required=True)
    q.add_argument("--twist", help="automorphism used by the F-twisted closure order")
    q.set_defaults(func=cmd_hasse)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.cap is None:
            args.cap = _default_cap()
        args.config = CliConfig(args.type or "", args.delta, getattr(args, "twist", None), args.output, args.cap)
        if args.output == "dot" and args.command != "hasse":
            raise UsageError("dot output is only available for hasse")
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
