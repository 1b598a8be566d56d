"""
Admissibility of the partitions of the compactification, and the irreducible
components of closures meeting orbit closures.

A partition is *admissible* when a stratum X' over K found in the closure of
a stratum X over J (K inside J) never has smaller codimension than X, and
*strongly admissible* when in addition every such closure meets every Z_K.
`verify_partition` checks both by brute force over the closure relation, and
also checks an explicit witness stratum for the strong condition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .coxeter import DiagramAutomorphism, as_subset, longest_element
from .demazure import coset_max, coset_min
from .strata import (
    Kind, QuadrupleShadow, StratumRef, WonderfulContext, closure_leq, codim,
    enumerate_strata, intersection_nonempty, min_twisted_class,
    nonempty_bb_bmbm, nonempty_piece_bmb, zc_piece_closure_leq,
)

__all__ = [
    "PartitionKind", "PartitionSpec", "PartitionReport", "build_partition",
    "build_refined", "verify_partition", "equal_codim_set",
    "components_with_orbit_closure", "components_cross",
    "piece_components_parametrized", "bmb_components_parametrized",
    "component_crosscheck", "dl_consistency", "closure_covers",
    "closures_meet", "subset_key", "READINGS",
]

Item = Union[StratumRef, tuple]


class PartitionKind(str, Enum):
    GXG = "gxg"
    BB = "bb"
    BMB = "bmb"
    BMBM = "bmbm"
    PIECE = "piece"
    REFINED_BB_BMBM = "bb_x_bmbm"
    REFINED_PIECE_BMB = "piece_x_bmb"

    @property
    def refined(self) -> bool:
        return self in (PartitionKind.REFINED_BB_BMBM, PartitionKind.REFINED_PIECE_BMB)


def subset_key(J: Iterable[int]) -> str:
    return ",".join(str(j) for j in sorted(J))


def _item_J(item: Item) -> frozenset:
    return item[0].J if isinstance(item, tuple) else item.J


@dataclass
class PartitionSpec:
    ctx: WonderfulContext
    kind: PartitionKind
    strata: list


@dataclass
class PartitionReport:
    admissible: bool
    strongly_admissible: bool
    failures: list[dict] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)
    kind: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.admissible and self.strongly_admissible and not self.failures

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "admissible": self.admissible,
            "strongly_admissible": self.strongly_admissible,
            "failures": list(self.failures), "counts": dict(self.counts),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> PartitionReport:
        return cls(d["admissible"], d["strongly_admissible"], list(d["failures"]),
                   dict(d["counts"]), d.get("kind", ""), list(d.get("notes", [])))


def _failure(stratum, other, condition: str) -> dict:
    return {"stratum": repr(stratum), "other": "" if other is None else repr(other),
            "condition": condition}


# -- building ---------------------------------------------------------------

_ALIASES = {"BBxBmBm": "bb_x_bmbm", "PiecexBmB": "piece_x_bmb"}


def build_refined(ctx: WonderfulContext, which: str | PartitionKind) -> PartitionSpec:
    """Index sets of the refined partitions, filtered through the non-emptiness criteria."""
    which = PartitionKind(_ALIASES.get(which, which))
    system = ctx.system
    items = []
    for J in system.subsets():
        reps = system.min_coset_reps(J)
        if which is PartitionKind.REFINED_BB_BMBM:
            for x in reps:
                for u in reps:
                    if not x.bruhat_le(u):
                        continue
                    for y in system.elements:
                        for v in system.elements:
                            if nonempty_bb_bmbm(ctx, J, x, y, u, v):
                                items.append((StratumRef(Kind.BB, J, x, y), StratumRef(Kind.BMBM, J, u, v)))
        elif which is PartitionKind.REFINED_PIECE_BMB:
            for w in reps:
                for x in reps:
                    for y in system.elements:
                        if nonempty_piece_bmb(ctx, J, w, x, y):
                            items.append((StratumRef(Kind.PIECE, J, w), StratumRef(Kind.BMB, J, x, y)))
        else:
            raise ValueError(f"{which.value} is not a refined partition")
    return PartitionSpec(ctx, which, items)


def build_partition(ctx: WonderfulContext, kind: str | PartitionKind) -> PartitionSpec:
    kind = PartitionKind(kind)
    if kind.refined:
        return build_refined(ctx, kind)
    return PartitionSpec(ctx, kind, enumerate_strata(ctx, Kind(kind.value)))


# -- verification -------------------------------------------------------------

class _Closures:
    """Memoized closure downsets of base strata, grouped by orbit."""

    def __init__(self, ctx: WonderfulContext):
        self.ctx = ctx
        self._by_kind = {}
        self._down = {}

    def strata(self, kind: Kind, K: frozenset) -> list[StratumRef]:
        key = (kind, K)
        if key not in self._by_kind:
            self._by_kind[key] = enumerate_strata(self.ctx, kind, K)
        return self._by_kind[key]

    def down(self, X: StratumRef, K: frozenset) -> list[StratumRef]:
        key = (X, K)
        hit = self._down.get(key)
        if hit is None:
            hit = [Y for Y in self.strata(X.kind, K) if closure_leq(self.ctx, X, Y)]
            self._down[key] = hit
        return hit


def _closures_of(ctx: WonderfulContext) -> _Closures:
    """The closure memo shared by every query on ``ctx``."""
    hit = ctx.__dict__.get("_closures")
    if hit is None:
        hit = ctx.__dict__["_closures"] = _Closures(ctx)
    return hit


def _codim_value(ctx: WonderfulContext, item: Item) -> int:
    if isinstance(item, tuple):
        return sum(_codim_value(ctx, s) for s in item)
    if item.kind is Kind.GXG:
        return 0
    return codim(ctx, item).value


def _witness(ctx: WonderfulContext, kind: PartitionKind, item: Item, K: frozenset) -> Item:
    """The explicit stratum over K inside the closure of ``item``, following the
    constructions used to prove strong admissibility."""
    system = ctx.system
    if kind is PartitionKind.GXG:
        return StratumRef(Kind.GXG, K)
    if kind in (PartitionKind.BB, PartitionKind.PIECE):
        return StratumRef(item.kind, K, item.x, item.y)
    if kind in (PartitionKind.BMB, PartitionKind.BMBM):
        t = longest_element(system, item.J) * longest_element(system, K)
        return StratumRef(item.kind, K, item.x * t, item.y * t)
    A, B = item
    y = A.y if kind is PartitionKind.REFINED_BB_BMBM else B.y
    z = y.inverse() * coset_max(y, A.J)
    zp = coset_min(z, K)
    if kind is PartitionKind.REFINED_BB_BMBM:
        return (StratumRef(Kind.BB, K, A.x * zp, A.y * zp),
                StratumRef(Kind.BMBM, K, B.x * zp, B.y * zp))
    return (StratumRef(Kind.PIECE, K, A.x), StratumRef(Kind.BMB, K, B.x * zp, B.y * zp))


def _expected_items(ctx: WonderfulContext, kind: PartitionKind) -> list:
    return build_partition(ctx, kind).strata


def verify_partition(spec: PartitionSpec, *, check_complete: bool = True) -> PartitionReport:
    """
    Check admissibility and strong admissibility of ``spec``.

    For refined partitions a pair (X', Y') over K lies in the closure of
    (X, Y) when X' is in the closure of X, Y' in that of Y, and X' meets Y'.
    """
    ctx, kind = spec.ctx, spec.kind
    items = list(spec.strata)
    if len(set(items)) != len(items):
        raise ValueError("partition lists a stratum twice")
    if check_complete and set(items) != set(_expected_items(ctx, kind)):
        raise ValueError(f"strata do not form the complete {kind.value} index set")

    by_J: dict[frozenset, list] = {}
    for item in items:
        by_J.setdefault(_item_J(item), []).append(item)
    index = set(items)
    closures = _closures_of(ctx)
    codims = {item: _codim_value(ctx, item) for item in items}

    def members(item, K):
        if kind is PartitionKind.GXG:
            return [StratumRef(Kind.GXG, K)]
        if not kind.refined:
            return closures.down(item, K)
        A, B = item
        downB = set(closures.down(B, K))
        out = []
        for a in closures.down(A, K):
            for b in downB:
                if (a, b) in index:
                    out.append((a, b))
        return out

    failures = []
    admissible = strongly = True
    system = ctx.system
    for J in system.subsets():
        for item in by_J.get(J, []):
            for K in system.subsets():
                if not K <= J:
                    continue
                found = members(item, K)
                for other in found:
                    if codims[other] < codims[item]:
                        admissible = False
                        failures.append(_failure(item, other, "codimension drops in closure"))
                if not found:
                    strongly = False
                    failures.append(_failure(item, None, f"closure misses Z_{{{subset_key(K)}}}"))
                w = _witness(ctx, kind, item, K)
                if w not in set(found):
                    failures.append(_failure(item, w, "explicit witness not in closure"))
    counts = {subset_key(J): len(by_J.get(J, [])) for J in system.subsets()}
    return PartitionReport(admissible, strongly, failures, counts, kind.value)


# -- components --------------------------------------------------------------

def equal_codim_set(ctx: WonderfulContext, X: StratumRef, K: Iterable[int]) -> list[StratumRef]:
    """Strata over K of the same kind inside the closure of X with the same codimension."""
    K = as_subset(ctx.system, K)
    if not K <= X.J:
        raise ValueError(f"K={sorted(K)} is not contained in J={sorted(X.J)}")
    if X.kind is Kind.GXG:
        return [StratumRef(Kind.GXG, K)]
    c = codim(ctx, X).value
    return [Y for Y in _closures_of(ctx).down(X, K) if codim(ctx, Y).value == c]


def components_with_orbit_closure(ctx: WonderfulContext, X: StratumRef, K: Iterable[int]) -> list[StratumRef]:
    """Strata whose closures are the irreducible components of closure(X) meeting closure(Z_K)."""
    K = as_subset(ctx.system, K)
    comps = equal_codim_set(ctx, X, X.J & K)
    if not comps:
        raise AssertionError(f"no components for {X!r} and K={sorted(K)}")
    return comps


_CROSS_KINDS = {(Kind.BB, Kind.BMBM), (Kind.PIECE, Kind.BMB)}


def closures_meet(ctx: WonderfulContext, X: StratumRef, Y: StratumRef) -> bool:
    """Search every orbit Z_I, I inside J and K, for strata of both closures that meet."""
    if (X.kind, Y.kind) not in _CROSS_KINDS:
        raise ValueError(f"{X.kind.value} and {Y.kind.value} strata are not a compatible pair")
    closures = _closures_of(ctx)
    common = X.J & Y.J
    for I in ctx.system.subsets():
        if not I <= common:
            continue
        ys = closures.down(Y, I)
        for a in closures.down(X, I):
            if any(intersection_nonempty(ctx, a, b) for b in ys):
                return True
    return False


def components_cross(ctx: WonderfulContext, X: StratumRef, Y: StratumRef) -> list[tuple[StratumRef, StratumRef]]:
    """
    Pairs (X', Y') over J and K's intersection labelling the components of
    closure(X) with closure(Y).  Returns an empty list exactly when the two
    closures are disjoint.
    """
    if not closures_meet(ctx, X, Y):
        return []
    I = X.J & Y.J
    out = [(a, b) for a in equal_codim_set(ctx, X, I) for b in equal_codim_set(ctx, Y, I)
           if intersection_nonempty(ctx, a, b)]
    if not out:
        raise AssertionError(f"closures of {X!r} and {Y!r} meet but no component was found")
    return out


def piece_components_parametrized(ctx: WonderfulContext, X: StratumRef, K: Iterable[int]) -> list[StratumRef]:
    """Z_{I,delta,w'} for w' in W^I intersected with Min(C_J(w)), I = J and K."""
    system = ctx.system
    I = X.J & as_subset(system, K)
    _, mins = min_twisted_class(ctx, X.J, X.x)
    return sorted(StratumRef(Kind.PIECE, I, w) for w in mins if system.is_min_rep(w, I))


READINGS = ("literal", "maximal", "codim")


def bmb_components_parametrized(ctx: WonderfulContext, X: StratumRef, K: Iterable[int],
                                reading: str = "literal") -> list[StratumRef]:
    """
    [I, xu, yu]^-+ for u in W_J with u in W^I, I = J and K, filtered by ``reading``:

    * ``"literal"``: l(yu) = l(y) + l(u),
    * ``"maximal"``: additionally l(u) = l(w0^J) - l(w0^I),
    * ``"codim"``: the candidate has the same codimension as X.
    """
    if reading not in READINGS:
        raise ValueError(f"unknown reading {reading!r}")
    system = ctx.system
    I = X.J & as_subset(system, K)
    top = longest_element(system, X.J).length - longest_element(system, I).length
    target = codim(ctx, X).value
    out = set()
    for u in system.parabolic(X.J):
        if not system.is_min_rep(u, I):
            continue
        cand = StratumRef(Kind.BMB, I, X.x * u, X.y * u)
        if reading == "codim":
            if codim(ctx, cand).value == target:
                out.add(cand)
            continue
        if (X.y * u).length != X.y.length + u.length:
            continue
        if reading == "maximal" and u.length != top:
            continue
        out.add(cand)
    return sorted(out)


def component_crosscheck(ctx: WonderfulContext) -> dict:
    """
    Compare the explicit component parametrizations against the
    equal-codimension sets for every piece and B^- x B-orbit and every K.
    """
    system = ctx.system
    report = {"piece_cases": 0, "piece_mismatches": [],
              "bmb_cases": 0}
    for r in READINGS:
        report[f"{r}_matches"] = 0
        report[f"{r}_mismatch_example"] = None
    for K in system.subsets():
        for X in enumerate_strata(ctx, Kind.PIECE):
            report["piece_cases"] += 1
            truth = sorted(components_with_orbit_closure(ctx, X, K))
            if truth != piece_components_parametrized(ctx, X, K):
                report["piece_mismatches"].append((repr(X), subset_key(K)))
        for X in enumerate_strata(ctx, Kind.BMB):
            report["bmb_cases"] += 1
            truth = sorted(components_with_orbit_closure(ctx, X, K))
            for reading in READINGS:
                if bmb_components_parametrized(ctx, X, K, reading) == truth:
                    report[f"{reading}_matches"] += 1
                elif report[f"{reading}_mismatch_example"] is None:
                    report[f"{reading}_mismatch_example"] = (repr(X), subset_key(K))
    n = report["bmb_cases"]
    report["matching_readings"] = [r for r in READINGS if report[f"{r}_matches"] == n]
    return report


# -- posets -------------------------------------------------------------------

def closure_covers(ctx: WonderfulContext, strata: list[StratumRef], *,
                   twist: DiagramAutomorphism | None = None) -> list[tuple[StratumRef, StratumRef]]:
    """Covering pairs (big, small) of the closure order restricted to ``strata``."""
    strata = sorted(strata)

    def leq(a, b):  # b in closure of a
        if a.kind is Kind.FPIECE and a.J != b.J:
            return False
        return closure_leq(ctx, a, b, twist=twist)

    below = {a: [b for b in strata if b != a and leq(a, b)] for a in strata}
    covers = []
    for a in strata:
        lower = set(below[a])
        for b in below[a]:
            if not any(b in below[m] for m in lower if m != b):
                covers.append((a, b))
    return covers


def _partial_order_failures(elems, leq, label):
    out = []
    for a in elems:
        if not leq(a, a):
            out.append(_failure(a, a, f"{label}: not reflexive"))
    for a in elems:
        for b in elems:
            if a != b and leq(a, b) and leq(b, a):
                out.append(_failure(a, b, f"{label}: not antisymmetric"))
    for a in elems:
        for b in elems:
            if not leq(a, b):
                continue
            for c in elems:
                if leq(b, c) and not leq(a, c):
                    out.append(_failure(a, c, f"{label}: not transitive via {b!r}"))
    return out


def dl_consistency(ctx: WonderfulContext, twist: DiagramAutomorphism) -> PartitionReport:
    """
    Consistency of the G_F-orbit closure order with the G_delta-pieces inside
    each orbit.  The delta-pieces are taken in the Z_C picture with
    C = (J, J, id).  Checks that the F-orbit order is a partial order, that the
    base index e lies below everything in both orders, and, when ``twist`` is
    delta^{-1}, that the two orders coincide.
    """
    system = ctx.system
    twist.check(system.cartan)
    failures, counts, notes = [], {}, []
    coincide = twist == ctx.delta.inverse()
    if not coincide:
        notes.append("twist differs from delta^-1: poset coincidence not applicable")
    e = system.identity()
    for J in system.subsets():
        q = QuadrupleShadow(system, J, J, tuple((j, j) for j in sorted(J)), ctx.delta)
        fp = enumerate_strata(ctx, Kind.FPIECE, J)
        counts[subset_key(J)] = len(fp)

        def fleq(a, b):
            return closure_leq(ctx, a, b, twist=twist)

        def pleq(a, b):
            return zc_piece_closure_leq(q, a.x, b.x)

        failures += _partial_order_failures(fp, fleq, "F-orbit closure")
        failures += _partial_order_failures(fp, pleq, "piece closure")
        base = StratumRef(Kind.FPIECE, J, e)
        for a in fp:
            if not fleq(a, base):
                failures.append(_failure(a, base, "base F-orbit not in closure"))
            if not zc_piece_closure_leq(q, a.x, e):
                failures.append(_failure(a, base, "base piece not in closure"))
            if coincide:
                for b in fp:
                    if fleq(a, b) != pleq(a, b):
                        failures.append(_failure(a, b, "F-orbit and piece closure orders differ"))
    ok = not failures
    return PartitionReport(ok, ok, failures, counts, "dl", notes)
