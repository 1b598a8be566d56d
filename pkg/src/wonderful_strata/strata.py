"""
Strata of the wonderful compactification and of the orbits Z_C, indexed by
Weyl group data.

Six kinds of strata are modelled, all living inside a G x G-orbit Z_J:

====== ==================================  ===================
kind   stratum                             index
====== ==================================  ===================
gxg    Z_J                                 J
bb     [J, x, y]     (B x B-orbit)         x in W^J, y in W
bmb    [J, x, y]^-+  (B^- x B-orbit)       x in W^J, y in W
bmbm   [J, x, y]^--  (B^- x B^--orbit)     x in W^J, y in W
piece  Z_{J, delta, w}                     w in W^J
fpiece Z_{J, F, w}   (G_F-orbit)           w in W^J
====== ==================================  ===================

Functions prefixed ``zc_`` work with a `QuadrupleShadow` (J, J', c, delta)
instead, i.e. inside a single Z_C, where the closure order runs the other way
round (the base index e is the closed stratum).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple

from .coxeter import (
    CoxeterSystem, DiagramAutomorphism, WElem, as_subset, longest_element,
)
from .demazure import (
    _demazure_idx, _tri_left_idx, _tri_right_idx, coset_max, coset_min,
    demazure, tri_left,
)

__all__ = [
    "Kind", "StratumRef", "WonderfulContext", "QuadrupleShadow", "Measure",
    "wonderful_quadruple", "enumerate_strata", "codim", "closure_leq",
    "min_twisted_class", "nonempty_bb_bmbm", "nonempty_piece_bmb",
    "intersection_nonempty", "zc_nonempty_bb_bmbm", "zc_nonempty_piece_bmb",
    "zc_piece_closure_leq", "w_xy", "flag_projection_nonempty",
    "translate_index", "quadruple_shadows", "open_stratum",
]


class Kind(str, Enum):
    GXG = "gxg"
    BB = "bb"
    BMB = "bmb"
    BMBM = "bmbm"
    PIECE = "piece"
    FPIECE = "fpiece"

    @property
    def is_orbit_pair(self) -> bool:
        return self in (Kind.BB, Kind.BMB, Kind.BMBM)


_KIND_ORDER = {k: i for i, k in enumerate(Kind)}
_SUFFIX = {Kind.BB: "", Kind.BMB: "^-+", Kind.BMBM: "^--"}


@dataclass(frozen=True)
class StratumRef:
    kind: Kind
    J: frozenset
    x: WElem | None = None   # w for pieces
    y: WElem | None = None

    @property
    def w(self) -> WElem:
        return self.x

    def sort_key(self):
        return (_KIND_ORDER[self.kind], len(self.J), sorted(self.J),
                -1 if self.x is None else self.x.index,
                -1 if self.y is None else self.y.index)

    def __lt__(self, other: StratumRef):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        J = "{" + ",".join(map(str, sorted(self.J))) + "}"
        if self.kind is Kind.GXG:
            return f"Z_{J}"
        if self.kind is Kind.PIECE:
            return f"Z_{J},delta,{self.x!r}"
        if self.kind is Kind.FPIECE:
            return f"Z_{J},F,{self.x!r}"
        return f"[{J}, {self.x!r}, {self.y!r}]{_SUFFIX[self.kind]}"


class Measure(NamedTuple):
    """A codimension in Z_J, or (for gxg strata) the dimension of Z_J."""
    value: int
    is_dimension: bool = False


@dataclass(eq=False)
class WonderfulContext:
    system: CoxeterSystem
    delta: DiagramAutomorphism | None = None
    _min_class_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.delta is None:
            self.delta = DiagramAutomorphism.identity(self.system.rank)
        self.delta.check(self.system.cartan)

    @property
    def dimG(self) -> int:
        return 2 * len(self.system.positive_roots) + self.system.rank

    @property
    def gamma(self) -> frozenset:
        return self.system.gamma

    def delta_of(self, w: WElem) -> WElem:
        return self.system.elements[self.system._auto_table(self.delta)[w.index]]

    def delta_inv_of(self, w: WElem) -> WElem:
        return self.system.elements[self.system._auto_table(self.delta.inverse())[w.index]]

    def check(self, s: StratumRef) -> None:
        """Raise ValueError unless ``s`` is a well-formed stratum of this context."""
        system = self.system
        as_subset(system, s.J)
        if s.kind is Kind.GXG:
            return
        for e in (s.x, s.y):
            if e is not None and e.system is not system:
                raise ValueError(f"{s!r} uses elements of another Coxeter system")
        if s.x is None:
            raise ValueError(f"{s!r} is missing its index")
        if not system.is_min_rep(s.x, s.J):
            raise ValueError(f"{s.x!r} is not a minimal coset representative for J={sorted(s.J)}")
        if s.kind.is_orbit_pair and s.y is None:
            raise ValueError(f"{s!r} needs both x and y")
        if s.kind in (Kind.PIECE, Kind.FPIECE) and s.y is not None:
            raise ValueError(f"{s!r}: pieces take a single index")


# -- quadruples ------------------------------------------------------------

@dataclass(frozen=True)
class QuadrupleShadow:
    """
    The data (J, J', c, delta) of an admissible quadruple that the
    combinatorics depends on; ``c`` is stored as sorted (j, c(j)) pairs.
    """
    system: CoxeterSystem
    J: frozenset
    Jp: frozenset
    c: tuple[tuple[int, int], ...]
    delta: DiagramAutomorphism

    def __post_init__(self):
        system = self.system
        object.__setattr__(self, "J", as_subset(system, self.J))
        object.__setattr__(self, "Jp", as_subset(system, self.Jp))
        cmap = dict(self.c)
        object.__setattr__(self, "c", tuple(sorted(cmap.items())))
        if set(cmap) != set(self.J) or set(cmap.values()) != set(self.Jp) or len(set(cmap.values())) != len(cmap):
            raise ValueError("c must be a bijection J -> J'")
        a = system.cartan.matrix
        for i in self.J:
            for j in self.J:
                if a[cmap[i]][cmap[j]] != a[i][j]:
                    raise ValueError("c does not preserve the Cartan entries on J")
        self.delta.check(system.cartan)

    def c_of(self, u: WElem) -> WElem:
        """Extend c to the group isomorphism W_J -> W_J'."""
        cmap = dict(self.c)
        return self.system.from_word(cmap[i] for i in u.word)

    def delta_of(self, w: WElem) -> WElem:
        return self.system.elements[self.system._auto_table(self.delta)[w.index]]

    def delta_inv_of(self, w: WElem) -> WElem:
        return self.system.elements[self.system._auto_table(self.delta.inverse())[w.index]]


def quadruple_shadows(system: CoxeterSystem, delta: DiagramAutomorphism) -> list[QuadrupleShadow]:
    """Every shadow (J, J', c) for the given delta, in a deterministic order."""
    import itertools
    a = system.cartan.matrix
    out = []
    for J in system.subsets():
        Js = sorted(J)
        for Jp in system.subsets():
            if len(Jp) != len(J):
                continue
            for image in itertools.permutations(sorted(Jp)):
                if all(a[image[p]][image[q]] == a[Js[p]][Js[q]]
                       for p in range(len(Js)) for q in range(len(Js))):
                    out.append(QuadrupleShadow(system, J, Jp, tuple(zip(Js, image)), delta))
    return out


def _conjugate_simple(system: CoxeterSystem, g: WElem, i: int) -> int:
    """Index j with g s_i g^{-1} = s_j; errors if the conjugate is not simple."""
    conj = g * system.s(i) * g.inverse()
    if conj.length != 1:
        raise AssertionError(f"{g!r} does not map simple root {i} to a simple root")
    return conj.word[0]


def wonderful_quadruple(ctx: WonderfulContext, J: Iterable[int]) -> QuadrupleShadow:
    """
    Shadow of the quadruple (J*, J, c) whose Z_C is identified with the orbit
    Z_J: J* = -w0(J) and c(alpha) = w0^J w0 (alpha).
    """
    system = ctx.system
    J = as_subset(system, J)
    w0 = system.longest()
    Jstar = frozenset(_conjugate_simple(system, w0, j) for j in J)
    g = longest_element(system, J) * w0
    c = tuple((a, _conjugate_simple(system, g, a)) for a in sorted(Jstar))
    return QuadrupleShadow(system, Jstar, J, c, ctx.delta)


def translate_index(ctx: WonderfulContext, J: Iterable[int], x: WElem) -> WElem:
    """The index change x -> x w0^J w0 carrying Z_J onto Z_{C_J}."""
    return x * longest_element(ctx.system, J) * ctx.system.longest()


# -- enumeration and codimension --------------------------------------------

def enumerate_strata(ctx: WonderfulContext, kind: Kind | str,
                     J: Iterable[int] | None = None) -> list[StratumRef]:
    kind = Kind(kind)
    system = ctx.system
    subsets = system.subsets() if J is None else [as_subset(system, J)]
    out = []
    for K in subsets:
        if kind is Kind.GXG:
            out.append(StratumRef(kind, K))
        elif kind in (Kind.PIECE, Kind.FPIECE):
            out.extend(StratumRef(kind, K, w) for w in system.min_coset_reps(K))
        else:
            out.extend(StratumRef(kind, K, x, y)
                       for x in system.min_coset_reps(K) for y in system.elements)
    return out


def codim(ctx: WonderfulContext, s: StratumRef) -> Measure:
    """
    Codimension of ``s`` inside its orbit Z_J.  For gxg strata this returns
    the dimension of Z_J instead, flagged by ``is_dimension``.

    >>> from wonderful_strata.coxeter import build_system, cartan_matrix
    >>> ctx = WonderfulContext(build_system(cartan_matrix("A2")))
    >>> W = ctx.system
    >>> codim(ctx, StratumRef(Kind.BB, frozenset(), W.s(0), W.s(1)))
    Measure(value=3, is_dimension=False)
    """
    system = ctx.system
    if s.kind is Kind.GXG:
        return Measure(ctx.dimG - system.rank + len(s.J), True)
    N = len(system.positive_roots)
    L = system._length
    if s.kind is Kind.PIECE:
        value = s.x.length
    elif s.kind is Kind.BB:
        value = N + s.x.length - s.y.length
    elif s.kind in (Kind.BMB, Kind.BMBM):
        w0J = longest_element(system, s.J).index
        lx = L[system._mul_idx(s.x.index, w0J)]
        ly = L[system._mul_idx(s.y.index, w0J)]
        value = 2 * N - lx - ly if s.kind is Kind.BMB else N - lx + ly
    else:
        raise ValueError(f"no codimension formula for {s.kind.value} strata")
    if value < 0:
        raise AssertionError(f"negative codimension for {s!r}")
    return Measure(value)


def open_stratum(ctx: WonderfulContext, kind: Kind | str) -> StratumRef:
    """The codimension-0 stratum of ``kind`` inside Z_Gamma."""
    kind = Kind(kind)
    G = ctx.gamma
    if kind is Kind.GXG:
        return StratumRef(kind, G)
    hits = [s for s in enumerate_strata(ctx, kind, G) if codim(ctx, s).value == 0]
    if len(hits) != 1:
        raise AssertionError(f"expected one open {kind.value} stratum, found {hits}")
    return hits[0]


# -- closure relations ------------------------------------------------------

def min_twisted_class(ctx: WonderfulContext, J: Iterable[int], w: WElem,
                      twist: DiagramAutomorphism | None = None) -> tuple[frozenset, frozenset]:
    """C_J(w) = {twist^{-1}(u) w u^{-1} : u in W_J} and its minimal-length part."""
    system = ctx.system
    J = as_subset(system, J)
    twist = ctx.delta if twist is None else twist
    key = (J, w.index, twist.perm)
    hit = ctx._min_class_cache.get(key)
    if hit is None:
        tinv = system._auto_table(twist.inverse())
        cls = set()
        for u in system.parabolic(J):
            a = system._mul_idx(tinv[u.index], w.index)
            cls.add(system._mul_idx(a, system._inverse[u.index]))
        lmin = min(system._length[i] for i in cls)
        hit = (frozenset(system.elements[i] for i in cls),
               frozenset(system.elements[i] for i in cls if system._length[i] == lmin))
        ctx._min_class_cache[key] = hit
    return hit


def _exists_u(system, J, test) -> bool:
    return any(test(u.index) for u in system.parabolic(J))


def closure_leq(ctx: WonderfulContext, big: StratumRef, small: StratumRef, *,
                twist: DiagramAutomorphism | None = None) -> bool:
    """
    Whether ``small`` lies in the closure of ``big``.

    Orbit and piece strata compare across orbits Z_K (K inside J).  F-pieces
    only compare inside one orbit; ``twist`` is the automorphism applied to
    u in their closure test ``twist(u) w' u^{-1} <= w`` (identity by default).
    """
    system = ctx.system
    J, K = big.J, small.J
    if big.kind is Kind.GXG:
        return K <= J
    if small.kind is Kind.GXG:
        # Z_K fills a whole orbit, so it can only sit in the closure of an open stratum
        return K <= J and codim(ctx, big).value == 0
    if big.kind is not small.kind:
        raise ValueError(f"cannot compare {big.kind.value} with {small.kind.value} strata")
    if not K <= J:
        return False
    L, mul, leq, inv = system._length, system._mul_idx, system._bruhat_idx, system._inverse
    x, xs = big.x.index, small.x.index

    if big.kind is Kind.BB:
        y, ys = big.y.index, small.y.index
        return _exists_u(system, J, lambda u: leq(mul(x, u), xs) and leq(ys, mul(y, u)))
    if big.kind in (Kind.BMB, Kind.BMBM):
        y, ys = big.y.index, small.y.index
        w0K = longest_element(system, K).index
        xk, yk = mul(xs, w0K), mul(ys, w0K)
        if big.kind is Kind.BMB:
            return _exists_u(system, J, lambda u: leq(xk, mul(x, u)) and leq(yk, mul(y, u)))
        return _exists_u(system, J, lambda u: leq(xk, mul(x, u)) and leq(mul(y, u), yk))
    if big.kind is Kind.PIECE:
        _, mins = min_twisted_class(ctx, J, big.x)
        return any(leq(m.index, xs) for m in mins)
    if big.kind is Kind.FPIECE:
        if K != J:
            raise ValueError("F-pieces only compare inside a single orbit Z_J")
        twist = DiagramAutomorphism.identity(system.rank) if twist is None else twist
        tw = system._auto_table(twist)
        return _exists_u(system, J, lambda u: leq(mul(mul(tw[u], xs), inv[u]), x))
    raise ValueError(f"unknown kind {big.kind}")


# -- non-emptiness criteria in the compactification ----------------------------

def _require_min(system, J, **elems):
    for name, e in elems.items():
        if not system.is_min_rep(e, J):
            raise ValueError(f"{name}={e!r} is not in W^J for J={sorted(J)}")


def nonempty_bb_bmbm(ctx: WonderfulContext, J, x: WElem, y: WElem, u: WElem, v: WElem) -> bool:
    """[J,x,y] meets [J,u,v]^-- iff x <= u and v <= max(y W_J)."""
    J = as_subset(ctx.system, J)
    _require_min(ctx.system, J, x=x, u=u)
    return x.bruhat_le(u) and v.bruhat_le(coset_max(y, J))


def nonempty_piece_bmb(ctx: WonderfulContext, J, w: WElem, x: WElem, y: WElem) -> bool:
    """Z_{J,delta,w} meets [J,x,y]^-+ iff min(W_J delta(w)) <= y^{-1} * delta(x)."""
    J = as_subset(ctx.system, J)
    _require_min(ctx.system, J, w=w, x=x)
    lhs = coset_min(ctx.delta_of(w), J, "left")
    return lhs.bruhat_le(demazure(y.inverse(), ctx.delta_of(x)))


def intersection_nonempty(ctx: WonderfulContext, X: StratumRef, Y: StratumRef) -> bool:
    """Dispatch on a compatible pair of kinds sharing the same J."""
    if X.J != Y.J:
        raise ValueError("strata live in different orbits")
    kinds = (X.kind, Y.kind)
    if kinds == (Kind.BB, Kind.BMBM):
        return nonempty_bb_bmbm(ctx, X.J, X.x, X.y, Y.x, Y.y)
    if kinds == (Kind.BMBM, Kind.BB):
        return nonempty_bb_bmbm(ctx, X.J, Y.x, Y.y, X.x, X.y)
    if kinds == (Kind.PIECE, Kind.BMB):
        return nonempty_piece_bmb(ctx, X.J, X.x, Y.x, Y.y)
    if kinds == (Kind.BMB, Kind.PIECE):
        return nonempty_piece_bmb(ctx, X.J, Y.x, X.x, X.y)
    if Kind.GXG in kinds:
        return True
    raise ValueError(f"no intersection criterion for {X.kind.value} and {Y.kind.value}")


# -- criteria inside a single Z_C --------------------------------------------

def zc_nonempty_bb_bmbm(q: QuadrupleShadow, x: WElem, y: WElem, u: WElem, v: WElem) -> bool:
    """
    [C,x,y] meets [C,u,v]^-- ; evaluates u <= x and min(v W_J') <= y, and
    cross-checks against u <= x and v <= max(y W_J').
    """
    _require_min(q.system, q.J, x=x, u=u)
    first = u.bruhat_le(x)
    form2 = first and coset_min(v, q.Jp).bruhat_le(y)
    form3 = first and v.bruhat_le(coset_max(y, q.Jp))
    if form2 != form3:
        raise AssertionError(f"criterion forms disagree for {(x, y, u, v)} in {q}")
    return form2


def zc_nonempty_piece_bmb(q: QuadrupleShadow, w: WElem, x: WElem, y: WElem) -> bool:
    """
    Z_{C,delta,w} meets [C,x,y]^-+ ; evaluates
    y^{-1} |> delta(x) <= max(W_J' delta(w)) and
    min(W_J' (y^{-1} |> delta(x))) <= delta(w), asserting they agree.
    """
    _require_min(q.system, q.J, w=w, x=x)
    t = tri_left(y.inverse(), q.delta_of(x))
    dw = q.delta_of(w)
    form2 = t.bruhat_le(coset_max(dw, q.Jp, "left"))
    form3 = coset_min(t, q.Jp, "left").bruhat_le(dw)
    if form2 != form3:
        raise AssertionError(f"criterion forms disagree for {(w, x, y)} in {q}")
    return form2


def zc_piece_closure_leq(q: QuadrupleShadow, w: WElem, w_small: WElem) -> bool:
    """Z_{C,delta,w_small} lies in the closure of Z_{C,delta,w}: some u in W_J has
    delta^{-1}(c(u)) w_small u^{-1} <= w."""
    system = q.system
    dinv = system._auto_table(q.delta.inverse())
    for u in system.parabolic(q.J):
        a = system._mul_idx(dinv[q.c_of(u).index], w_small.index)
        if system._bruhat_idx(system._mul_idx(a, system._inverse[u.index]), w.index):
            return True
    return False


def w_xy(q: QuadrupleShadow, x: WElem, y: WElem) -> WElem:
    """min(W_{delta^{-1}(J')} (delta^{-1}(y^{-1}) |> x))."""
    _require_min(q.system, q.J, x=x)
    t = tri_left(q.delta_inv_of(y.inverse()), x)
    return coset_min(t, q.delta.inverse().image(q.Jp), "left")


def flag_projection_nonempty(q: QuadrupleShadow, w: WElem, x: WElem, y: WElem) -> bool:
    """
    Whether G_delta(w,1)(P_J x P_J') meets (B^- x B)(x,y)(P_J x P_J'):
    y^{-1} |> delta(x) <= max(W_J' delta(w)).
    """
    system = q.system
    _require_min(system, q.J, w=w, x=x)
    if not system.is_left_min_rep(w, q.delta.inverse().image(q.Jp)):
        raise ValueError(f"w={w!r} is not minimal in its left W_{{delta^-1(J')}} coset")
    if not system.is_min_rep(y, q.Jp):
        raise ValueError(f"y={y!r} is not in W^J'")
    t = tri_left(y.inverse(), q.delta_of(x))
    return t.bruhat_le(coset_max(q.delta_of(w), q.Jp, "left"))
