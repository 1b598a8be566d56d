"""
Exhaustive sweeps comparing the fast code paths with definitions and with
each other.

Each suite walks its index ranges in a fixed order, so the first recorded
failure of a check is the smallest witness in that order.

>>> run_suite("all", SweepConfig(types=("A1",))).passed
True
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..coxeter import (
    CartanDatum, CoxeterSystem, build_system, cartan_matrix, diagram_automorphisms,
    longest_element,
)
from ..demazure import (
    bruhat_cells_meet, bruhat_cells_meet_forms, coset_decompose, coset_max,
    coset_min, demazure, double_coset_extremes, tri_left, tri_right,
)
from ..partitions import (
    PartitionKind, _closures_of, build_partition, component_crosscheck,
    components_cross, components_with_orbit_closure, dl_consistency,
    piece_components_parametrized, subset_key, verify_partition,
)
from ..strata import (
    Kind, WonderfulContext, closure_leq, codim, enumerate_strata,
    flag_projection_nonempty, intersection_nonempty, nonempty_bb_bmbm,
    nonempty_piece_bmb, open_stratum, quadruple_shadows, translate_index,
    w_xy, wonderful_quadruple, zc_nonempty_bb_bmbm, zc_nonempty_piece_bmb,
    zc_piece_closure_leq,
)
from .brute import brute_bruhat_table, brute_coset_extremes, brute_demazure_family, brute_parabolic

__all__ = ["SweepConfig", "SweepResult", "SUITES", "DEFAULT_TYPES", "run_suite", "refined_sizes"]

DEFAULT_TYPES = {
    "monoid": ("A2", "B2", "A3", "B3"),
    "appendix": ("A2", "B2"),
    "criteria": ("A2",),
    "closure": ("A2", "B2"),
    "partitions": ("A1", "A1xA1", "A2", "B2"),
    "components": ("A2", "B2"),
    "dl": ("A2", "B2"),
}
SUITES = tuple(DEFAULT_TYPES) + ("all",)


@dataclass(frozen=True)
class SweepConfig:
    types: tuple | None = None               # labels or CartanDatum; None: the suite's defaults
    all_deltas: bool = True                  # every diagram automorphism, or the identity only
    cap: int = 5000                          # largest group the oracle tables accept
    max_witnesses: int = 20                  # stored failures per check


@dataclass
class SweepResult:
    suite: str
    types: list[str]
    cases: int
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, *, timing: bool = True) -> dict:
        d = {"suite": self.suite, "types": list(self.types), "cases": self.cases,
             "passed": self.passed, "failures": list(self.failures), "details": self.details}
        if timing:
            d["wall_time"] = self.wall_time
        return d

    @classmethod
    def from_dict(cls, d: dict) -> SweepResult:
        return cls(d["suite"], list(d["types"]), d["cases"], list(d["failures"]),
                   d.get("wall_time", 0.0), dict(d.get("details", {})))


class _Recorder:
    def __init__(self, limit: int):
        self.limit = limit
        self.cases = 0
        self.failures: list[dict] = []
        self.counts: Counter = Counter()
        self.label = ""

    def check(self, ok: bool, name: str, witness: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.fail(name, witness())

    def fail(self, name: str, witness: str) -> None:
        self.counts[name] += 1
        if self.counts[name] <= self.limit:
            self.failures.append({"check": name, "type": self.label, "witness": witness})

    def guarded(self, name: str, fn: Callable[[], object], witness: Callable[[], str]):
        """Run ``fn``; an internal assertion becomes a recorded failure."""
        try:
            return fn()
        except (AssertionError, ValueError) as exc:
            self.cases += 1
            self.fail(name, f"{witness()}: {exc}")
            return None


_SYSTEMS: dict[CartanDatum, CoxeterSystem] = {}


def _system(spec: str | CartanDatum) -> CoxeterSystem:
    datum = cartan_matrix(spec) if isinstance(spec, str) else spec
    if datum not in _SYSTEMS:
        _SYSTEMS[datum] = build_system(datum)
    return _SYSTEMS[datum]


def _deltas(W: CoxeterSystem, config: SweepConfig):
    autos = diagram_automorphisms(W.cartan)
    return autos if config.all_deltas else autos[:1]


def _tag(d) -> str:
    return ",".join(map(str, d.perm))


# -- monoid ------------------------------------------------------------------

def _sweep_monoid(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    T = brute_bruhat_table(W, cap=config.cap)
    E = W.elements
    n = len(E)
    order = T.order

    # the table itself: a partial order generated by its covers
    rec.check(bool(order.diagonal().all()), "table reflexive", lambda: "")
    rec.check(not bool((order & order.T & ~np.eye(n, dtype=bool)).any()), "table antisymmetric", lambda: "")
    closure = np.eye(n, dtype=bool)
    step = np.zeros((n, n), dtype=bool)
    for a, b in T.covers:
        step[a, b] = True
    while True:
        nxt = closure | ((closure.astype(np.int64) @ step.astype(np.int64)) > 0)
        if (nxt == closure).all():
            break
        closure = nxt
    rec.check(bool((closure == order).all()), "covers generate the order", lambda: "")
    details[W.label] = {"order": n, "bruhat_relations": int(order.sum() - n), "covers": len(T.covers)}

    for x in E:
        for y in E:
            rec.check(bool(order[x.index, y.index]) == x.bruhat_le(y), "bruhat order",
                      lambda: f"({x!r}, {y!r})")
    for x in E:
        for y in E:
            fam = rec.guarded("extremum uniqueness", lambda: brute_demazure_family(T, x, y),
                              lambda: f"({x!r}, {y!r})")
            if fam is None:
                continue
            star, tl, tr = fam
            rec.check(demazure(x, y) == star, "demazure product", lambda: f"({x!r}, {y!r})")
            rec.check(tri_left(x, y) == tl, "left action", lambda: f"({x!r}, {y!r})")
            rec.check(tri_right(x, y) == tr, "right action", lambda: f"({x!r}, {y!r})")

    subsets = W.subsets()
    for J in subsets:
        for x in E:
            for side, (Jl, Jr) in (("right", ((), J)), ("left", (J, ()))):
                lo, hi = brute_coset_extremes(T, x, Jl, Jr)
                rec.check(coset_min(x, J, side) == lo, f"coset min ({side})", lambda: f"{x!r}, J={sorted(J)}")
                rec.check(coset_max(x, J, side) == hi, f"coset max ({side})", lambda: f"{x!r}, J={sorted(J)}")
            dec = rec.guarded("coset decomposition", lambda: coset_decompose(x, J), lambda: f"{x!r}, J={sorted(J)}")
            if dec is not None:
                rec.check(dec.product() == x and W.is_min_rep(dec.minimal_part, J)
                          and all(i in J for i in dec.parabolic_part.word),
                          "coset decomposition", lambda: f"{x!r}, J={sorted(J)}")
    if n <= 24:
        for Jl in subsets:
            for Jr in subsets:
                for x in E:
                    want = brute_coset_extremes(T, x, Jl, Jr)
                    rec.check(double_coset_extremes(x, Jl, Jr) == want, "double coset extremes",
                              lambda: f"{x!r}, {sorted(Jl)}, {sorted(Jr)}")
        e = W.identity()
        for x in E:
            rec.check(demazure(e, x) == x == demazure(x, e), "unit", lambda: repr(x))
            for y in E:
                xy = demazure(x, y)
                for z in E:
                    rec.check(demazure(xy, z) == demazure(x, demazure(y, z)), "associativity",
                              lambda: f"({x!r}, {y!r}, {z!r})")
                    rec.check(tri_left(xy, z) == tri_left(x, tri_left(y, z)), "left action law",
                              lambda: f"({x!r}, {y!r}, {z!r})")
                    rec.check(tri_right(z, xy) == tri_right(tri_right(z, x), y), "right action law",
                              lambda: f"({z!r}, {x!r}, {y!r})")


# -- appendix ----------------------------------------------------------------

def _sweep_appendix(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    T = brute_bruhat_table(W, cap=config.cap)
    E = W.elements
    w0 = W.longest()
    le = lambda a, b: a.bruhat_le(b)  # noqa: E731

    # length-additive factorizations of the three products
    for x in E:
        for y in E:
            star, tl, tr = demazure(x, y), tri_left(x, y), tri_right(x, y)
            below_x = [E[i] for i in T.downset(x.index)]
            below_y = [E[i] for i in T.downset(y.index)]
            rec.check(any(a * y == star and star.length == a.length + y.length for a in below_x)
                      and any(x * b == star and star.length == x.length + b.length for b in below_y),
                      "product factorization", lambda: f"({x!r}, {y!r})")
            rec.check(any(a * y == tl and tl.length == y.length - a.length for a in below_x),
                      "left action factorization", lambda: f"({x!r}, {y!r})")
            rec.check(any(x * b == tr and tr.length == x.length - b.length for b in below_y),
                      "right action factorization", lambda: f"({x!r}, {y!r})")

    pairs = [(a, b) for a in E for b in E if le(a, b)]
    for x, x2 in pairs:
        for y, y2 in pairs:
            rec.check(le(demazure(x, y), demazure(x2, y2)), "monotone product",
                      lambda: f"{x!r}<={x2!r}, {y!r}<={y2!r}")
            rec.check(le(tri_left(x2, y), tri_left(x, y2)), "monotone left action",
                      lambda: f"{x!r}<={x2!r}, {y!r}<={y2!r}")
            rec.check(le(tri_right(x, y2), tri_right(x2, y)), "monotone right action",
                      lambda: f"{x!r}<={x2!r}, {y!r}<={y2!r}")

    for x in E:
        for y in E:
            rec.check(tri_left(x, y) == demazure(x, y * w0) * w0, "left action via w0",
                      lambda: f"({x!r}, {y!r})")
            rec.check(tri_right(x, y) == w0 * demazure(w0 * x, y), "right action via w0",
                      lambda: f"({x!r}, {y!r})")
            rec.check(tri_right(x, y).inverse() == tri_left(y.inverse(), x.inverse()), "inverse of right action",
                      lambda: f"({x!r}, {y!r})")
            rec.check(demazure(x, y).inverse() == demazure(y.inverse(), x.inverse()), "inverse of product",
                      lambda: f"({x!r}, {y!r})")
            for z in E:
                rec.check(le(tri_left(x, y), z) == le(y, demazure(x.inverse(), z)), "left adjunction",
                          lambda: f"({x!r}, {y!r}, {z!r})")
                rec.check(le(tri_right(y, x), z) == le(y, demazure(z, x.inverse())), "right adjunction",
                          lambda: f"({x!r}, {y!r}, {z!r})")
                rec.check(tri_right(tri_left(x, y), z) == tri_left(x, tri_right(y, z)), "actions commute",
                          lambda: f"({x!r}, {y!r}, {z!r})")

    subsets = W.subsets()
    for J in subsets:
        right_min = [y for y in E if W.is_min_rep(y, J)]
        left_min = [z for z in E if W.is_left_min_rep(z, J)]
        for x in E:
            for y in right_min:
                rec.check(W.is_min_rep(tri_left(x, y), J), "left action keeps W^J",
                          lambda: f"({x!r}, {y!r}), J={sorted(J)}")
            for z in left_min:
                rec.check(W.is_left_min_rep(tri_right(z, x), J), "right action keeps left-minimal",
                          lambda: f"({z!r}, {x!r}), J={sorted(J)}")
            for y in E:
                rec.check(le(x, coset_max(y, J)) == le(coset_min(x, J), y), "coset adjunction",
                          lambda: f"({x!r}, {y!r}), J={sorted(J)}")
        for Jp in subsets:
            for x in E:
                lo, hi = double_coset_extremes(x, Jp, J)
                blo, bhi = brute_coset_extremes(T, x, Jp, J)
                rec.check(W.is_min_rep(lo, J) and W.is_left_min_rep(lo, Jp), "double coset min is doubly minimal",
                          lambda: f"{x!r}, {sorted(Jp)}, {sorted(J)}")
                rec.check(lo == blo and hi == bhi, "double coset extremes",
                          lambda: f"{x!r}, {sorted(Jp)}, {sorted(J)}")

    for x, y, u, v in itertools.product(E, repeat=4):
        f5, f6 = bruhat_cells_meet_forms(x, y, u, v)
        rec.check(f5 == f6, "double cell criterion forms", lambda: f"({x!r}, {y!r}, {u!r}, {v!r})")


# -- criteria ----------------------------------------------------------------

def _sweep_criteria(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    E = W.elements
    e = W.identity()
    shadows = 0
    for d in _deltas(W, config):
        tag = _tag(d)
        for q in quadruple_shadows(W, d):
            shadows += 1
            reps = W.min_coset_reps(q.J)
            WJ = W.parabolic(q.J)
            w0J, w0Jp = longest_element(W, q.J), longest_element(W, q.Jp)
            cz = {z: q.c_of(z) for z in WJ}
            where = f"delta={tag}, J={sorted(q.J)}, J'={sorted(q.Jp)}, c={dict(q.c)}"
            for x in reps:
                for u in reps:
                    for y in E:
                        for v in E:
                            got = rec.guarded("orbit criterion forms",
                                              lambda: zc_nonempty_bb_bmbm(q, x, y, u, v),
                                              lambda: f"{where}, (x,y,u,v)=({x!r},{y!r},{u!r},{v!r})")
                            if got is None:
                                continue
                            route = any(bruhat_cells_meet(x, e, u * w0J, z)
                                        and bruhat_cells_meet(y, e, v * w0Jp, cz[z]) for z in WJ)
                            rec.check(route == got, "orbit criterion vs double cells",
                                      lambda: f"{where}, (x,y,u,v)=({x!r},{y!r},{u!r},{v!r})")
            left_reps = [w for w in reps if W.is_left_min_rep(w, d.inverse().image(q.Jp))]
            Jp_reps = W.min_coset_reps(q.Jp)
            for w in reps:
                for x in reps:
                    for y in E:
                        wit = lambda: f"{where}, (w,x,y)=({w!r},{x!r},{y!r})"  # noqa: E731
                        got = rec.guarded("piece criterion forms", lambda: zc_nonempty_piece_bmb(q, w, x, y), wit)
                        if got is None:
                            continue
                        dx = q.delta_of(x * w0J)
                        route = any(bruhat_cells_meet(y * w0Jp, cz[z], dx, q.delta_of(z * w.inverse())) for z in WJ)
                        rec.check(route == got, "piece criterion vs double cells", wit)
                        rec.check(zc_piece_closure_leq(q, w, w_xy(q, x, y)) == got, "piece criterion vs closure", wit)
                        wp = coset_min(w, d.inverse().image(q.Jp), "left")
                        yp = coset_min(y, q.Jp)
                        rec.check(flag_projection_nonempty(q, wp, x, yp) == got, "piece criterion vs flag projection", wit)
            for w in left_reps:
                for x in reps:
                    for y in Jp_reps:
                        wit = lambda: f"{where}, (w,x,y)=({w!r},{x!r},{y!r})"  # noqa: E731
                        t = tri_left(y.inverse(), q.delta_of(x))
                        route = any(t.bruhat_le(demazure(demazure(zp, q.delta_of(w)), q.delta_of(z.inverse())))
                                    for z in WJ for zp in W.parabolic(q.Jp))
                        rec.check(route == flag_projection_nonempty(q, w, x, y), "flag projection vs double cells", wit)

        # the compactification-level criteria through the identification with Z_{C_J}
        ctx = WonderfulContext(W, d)
        for J in W.subsets():
            q = wonderful_quadruple(ctx, J)
            reps = W.min_coset_reps(J)
            t = {x: translate_index(ctx, J, x) for x in reps}
            for x in reps:
                for u in reps:
                    for y in E:
                        for v in E:
                            rec.check(nonempty_bb_bmbm(ctx, J, x, y, u, v) == zc_nonempty_bb_bmbm(q, t[x], y, t[u], v),
                                      "translated orbit criterion",
                                      lambda: f"delta={tag}, J={sorted(J)}, ({x!r},{y!r},{u!r},{v!r})")
            for w in reps:
                for x in reps:
                    for y in E:
                        rec.check(nonempty_piece_bmb(ctx, J, w, x, y) == zc_nonempty_piece_bmb(q, t[w], t[x], y),
                                  "translated piece criterion",
                                  lambda: f"delta={tag}, J={sorted(J)}, ({w!r},{x!r},{y!r})")
    details[W.label] = {"shadows": shadows}


# -- closure -----------------------------------------------------------------

def _leq_matrix(ctx, strata, **kw) -> np.ndarray:
    n = len(strata)
    m = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(strata):
        for j, b in enumerate(strata):
            m[i, j] = closure_leq(ctx, a, b, **kw)
    return m


def _order_violations(m: np.ndarray) -> list[str]:
    n = len(m)
    bad = []
    if not m.diagonal().all():
        bad.append("not reflexive")
    if (m & m.T & ~np.eye(n, dtype=bool)).any():
        bad.append("not antisymmetric")
    if ((m.astype(np.int64) @ m.astype(np.int64) > 0) & ~m).any():
        bad.append("not transitive")
    return bad


def _sweep_closure(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    info = {}
    for n_d, d in enumerate(_deltas(W, config)):
        ctx = WonderfulContext(W, d)
        for kind in (Kind.GXG, Kind.BB, Kind.BMB, Kind.BMBM, Kind.PIECE):
            if kind is not Kind.PIECE and n_d > 0:
                continue
            strata = sorted(enumerate_strata(ctx, kind))
            m = _leq_matrix(ctx, strata)
            for problem in _order_violations(m):
                rec.fail("closure order", f"{kind.value}, delta={_tag(d)}: {problem}")
            rec.cases += 1
            top = strata.index(open_stratum(ctx, kind))
            for j, s in enumerate(strata):
                rec.check(bool(m[top, j]), "inside the open stratum", lambda: f"{s!r}, delta={_tag(d)}")
            dims = [ctx.dimG - len(ctx.gamma) + len(s.J) - (0 if kind is Kind.GXG else codim(ctx, s).value)
                    for s in strata]
            for i, a in enumerate(strata):
                for j, b in enumerate(strata):
                    if i != j and m[i, j]:
                        rec.check(dims[j] < dims[i], "dimension drops along closure",
                                  lambda: f"{b!r} in closure of {a!r}, delta={_tag(d)}")
            info[f"{kind.value}[{_tag(d)}]"] = {"strata": len(strata), "relations": int(m.sum() - len(strata))}
    details[W.label] = info


# -- partitions ----------------------------------------------------------------

def refined_sizes(W: CoxeterSystem, d, *, cap: int = 5000) -> dict[str, int]:
    """
    Sizes of both refined index sets by a plain loop over all index tuples,
    using only the oracle table: cosets are enumerated, extremes taken by
    length, and y^{-1} * delta(x) read off as the longest of
    {a delta(x) : a <= y^{-1}}.
    """
    T = brute_bruhat_table(W, cap=cap)
    n = W.order
    mult, order, length = T.mult, T.order, T.lengths
    inv = [int(np.flatnonzero(mult[a] == 0)[0]) for a in range(n)]
    dd = [W.from_word(d(i) for i in T.words[a]).index for a in range(n)]
    sizes = {"bb_x_bmbm": 0, "piece_x_bmb": 0}
    for J in W.subsets():
        parab = np.array(brute_parabolic(T, J))
        reps = [x for x in range(n) if length[mult[x, parab]].min() == length[x]]
        top = [int(mult[y, parab][np.argmax(length[mult[y, parab]])]) for y in range(n)]
        for x, u in itertools.product(reps, reps):
            if order[x, u]:
                sizes["bb_x_bmbm"] += int(sum(order[v, top[y]] for y in range(n) for v in range(n)))
        for w in reps:
            left = mult[parab, dd[w]]
            low = int(left[np.argmin(length[left])])
            for x in reps:
                for y in range(n):
                    cands = mult[np.flatnonzero(order[:, inv[y]]), dd[x]]
                    star = int(cands[np.argmax(length[cands])])
                    sizes["piece_x_bmb"] += int(order[low, star])
    return sizes


def _consistency(rec: _Recorder, ctx: WonderfulContext, tag: str) -> int:
    """Same-J non-emptiness against boundary pairs found in both closures."""
    W = ctx.system
    closures = _closures_of(ctx)
    mismatches = 0
    for ka, kb in ((Kind.BB, Kind.BMBM), (Kind.PIECE, Kind.BMB)):
        for J in W.subsets():
            A, B = closures.strata(ka, J), closures.strata(kb, J)
            direct = np.array([[intersection_nonempty(ctx, a, b) for b in B] for a in A], dtype=bool)
            via = np.zeros_like(direct)
            for K in W.subsets():
                if not K <= J:
                    continue
                AK, BK = closures.strata(ka, K), closures.strata(kb, K)
                ia = {s: i for i, s in enumerate(AK)}
                ib = {s: i for i, s in enumerate(BK)}
                DA = np.zeros((len(A), len(AK)), dtype=np.int64)
                DB = np.zeros((len(B), len(BK)), dtype=np.int64)
                for i, a in enumerate(A):
                    DA[i, [ia[s] for s in closures.down(a, K)]] = 1
                for i, b in enumerate(B):
                    DB[i, [ib[s] for s in closures.down(b, K)]] = 1
                NK = np.array([[intersection_nonempty(ctx, a, b) for b in BK] for a in AK], dtype=np.int64)
                via |= (DA @ NK @ DB.T) > 0
            rec.cases += direct.size
            for i, j in zip(*np.nonzero(direct != via)):
                mismatches += 1
                rec.fail("closure/intersection consistency", f"delta={tag}: {A[i]!r} and {B[j]!r}")
    return mismatches


def _sweep_partitions(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    info = {}
    deltas = _deltas(W, config)
    for d in deltas:
        ctx = WonderfulContext(W, d)
        tag = _tag(d)
        for kind in PartitionKind:
            if d is not deltas[0] and kind not in (PartitionKind.PIECE, PartitionKind.REFINED_PIECE_BMB):
                continue
            spec = build_partition(ctx, kind)
            report = verify_partition(spec, check_complete=False)
            rec.cases += len(spec.strata)
            for f in report.failures:
                rec.fail(f"partition {kind.value}", f"delta={tag}: {f['condition']}: {f['stratum']} / {f['other']}")
            if not report.ok and not report.failures:
                rec.fail(f"partition {kind.value}", f"delta={tag}: flags false without failures")
            info[f"{kind.value}[{tag}]"] = len(spec.strata)
        sizes = refined_sizes(W, d)
        for k, v in sizes.items():
            if f"{k}[{tag}]" not in info:
                continue
            rec.check(info[f"{k}[{tag}]"] == v, "refined size vs plain loop",
                      lambda: f"{k}, delta={tag}: {info[f'{k}[{tag}]']} != {v}")
        _consistency(rec, ctx, tag)
    details[W.label] = info


# -- components ----------------------------------------------------------------

def _sweep_components(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    info = {}
    for d in _deltas(W, config):
        ctx = WonderfulContext(W, d)
        tag = _tag(d)
        for kind in (Kind.BB, Kind.BMB, Kind.BMBM, Kind.PIECE):
            for X in enumerate_strata(ctx, kind):
                c = codim(ctx, X).value
                for K in W.subsets():
                    wit = lambda: f"{X!r}, K={sorted(K)}, delta={tag}"  # noqa: E731
                    comps = rec.guarded("components exist", lambda: components_with_orbit_closure(ctx, X, K), wit)
                    if comps is None:
                        continue
                    rec.check(len(set(comps)) == len(comps), "components distinct", wit)
                    rec.check(all(s.kind is kind and s.J == X.J & K for s in comps), "components in Z_{J and K}", wit)
                    rec.check(all(codim(ctx, s).value == c for s in comps), "components keep codimension", wit)
                    rec.check(all(closure_leq(ctx, X, s) for s in comps), "components in closure", wit)
                    if kind is Kind.PIECE:
                        rec.check(piece_components_parametrized(ctx, X, K) == sorted(comps),
                                  "piece components parametrization", wit)
        report = component_crosscheck(ctx)
        info[f"orbit_component_readings[{tag}]"] = {
            "cases": report["bmb_cases"], "matching": report["matching_readings"],
            "matches": {r: report[f"{r}_matches"] for r in ("literal", "maximal", "codim")},
            "first_mismatch": {r: report[f"{r}_mismatch_example"] for r in ("literal", "maximal", "codim")},
        }
        if W.order <= 6:
            _cross_components(rec, ctx, tag)
    details[W.label] = info


def _cross_components(rec: _Recorder, ctx: WonderfulContext, tag: str) -> None:
    W = ctx.system
    for ka, kb in ((Kind.BB, Kind.BMBM), (Kind.PIECE, Kind.BMB)):
        As, Bs = enumerate_strata(ctx, ka), enumerate_strata(ctx, kb)
        for X in As:
            cx = codim(ctx, X).value
            for Y in Bs:
                wit = lambda: f"{X!r} with {Y!r}, delta={tag}"  # noqa: E731
                pairs = rec.guarded("cross components", lambda: components_cross(ctx, X, Y), wit)
                if pairs is None:
                    continue
                total = cx + codim(ctx, Y).value
                I = X.J & Y.J
                rec.check(all(codim(ctx, a).value + codim(ctx, b).value == total for a, b in pairs),
                          "cross components codimension", wit)
                rec.check(all(a.J == I == b.J and closure_leq(ctx, X, a) and closure_leq(ctx, Y, b)
                              and intersection_nonempty(ctx, a, b) for a, b in pairs),
                          "cross components placement", wit)
                if X.J == Y.J and intersection_nonempty(ctx, X, Y):
                    rec.check(pairs == [(X, Y)], "same-orbit intersection is its own component", wit)
    del W


# -- dl ------------------------------------------------------------------------

def _sweep_dl(rec: _Recorder, W: CoxeterSystem, config: SweepConfig, details: dict) -> None:
    info = {}
    autos = diagram_automorphisms(W.cartan)
    for d in _deltas(W, config):
        ctx = WonderfulContext(W, d)
        for twist in autos:
            report = dl_consistency(ctx, twist)
            rec.cases += sum(report.counts.values())
            for f in report.failures:
                rec.fail("dl layer", f"delta={_tag(d)}, twist={_tag(twist)}: {f['condition']}: {f['stratum']} / {f['other']}")
            info[f"delta={_tag(d)},twist={_tag(twist)}"] = {"counts": report.counts, "notes": report.notes}
    details[W.label] = info


_RUNNERS = {
    "monoid": _sweep_monoid,
    "appendix": _sweep_appendix,
    "criteria": _sweep_criteria,
    "closure": _sweep_closure,
    "partitions": _sweep_partitions,
    "components": _sweep_components,
    "dl": _sweep_dl,
}


def run_suite(name: str, config: SweepConfig | None = None) -> SweepResult:
    """Run one invariant sweep (or ``"all"``) over the configured root system types."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    config = config or SweepConfig()
    start = time.perf_counter()
    if name == "all":
        parts = [run_suite(s, config) for s in _RUNNERS]
        result = SweepResult("all", sorted({t for p in parts for t in p.types}),
                             sum(p.cases for p in parts),
                             [dict(f, suite=p.suite) for p in parts for f in p.failures],
                             details={p.suite: p.details for p in parts})
        result.wall_time = time.perf_counter() - start
        return result
    specs = list(config.types or DEFAULT_TYPES[name])
    rec = _Recorder(config.max_witnesses)
    details: dict = {}
    types = []
    for spec in specs:
        W = _system(spec)
        label = W.label
        types.append(label)
        if W.order > config.cap:
            raise ValueError(f"|W({label})| = {W.order} exceeds the cap of {config.cap}")
        rec.label = label
        _RUNNERS[name](rec, W, config, details)
    if rec.counts:
        details["failure_counts"] = dict(sorted(rec.counts.items()))
    return SweepResult(name, types, rec.cases, rec.failures, time.perf_counter() - start, details)

