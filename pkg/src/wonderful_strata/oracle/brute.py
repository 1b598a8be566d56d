"""
Reference implementations straight from the definitions.

Nothing here calls the word-scan code or the descent recursion: products come
from multiplying reflection matrices, reduced words from a breadth-first search,
and the Bruhat order from the subword property (x <= y iff x is a product of a
subword of a reduced word of y).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..coxeter import CoxeterSystem, WElem

__all__ = [
    "FalsificationError", "BruhatTable", "brute_bruhat_table",
    "brute_demazure_family", "brute_coset_extremes", "brute_parabolic",
]


class FalsificationError(AssertionError):
    """A definition-level extremum was not unique."""


@dataclass
class BruhatTable:
    system: CoxeterSystem
    order: np.ndarray                 # order[x, y] is True iff x <= y
    covers: list[tuple[int, int]]
    mult: np.ndarray                  # mult[a, b] = index of a*b, from matrix products
    lengths: np.ndarray               # from breadth-first search
    words: list[tuple[int, ...]]      # some reduced word of each element

    def leq(self, x: WElem, y: WElem) -> bool:
        return bool(self.order[x.index, y.index])

    def downset(self, y: int) -> np.ndarray:
        return np.flatnonzero(self.order[:, y])


_TABLES: dict[int, BruhatTable] = {}


def brute_bruhat_table(system: CoxeterSystem, *, cap: int = 5000) -> BruhatTable:
    """
    Bruhat order of the whole group by subword enumeration (cached per system).

    Reduced words come from a breadth-first search that tries generators in
    increasing order, which yields the ShortLex-least word of each element.
    """
    n = system.order
    if n > cap:
        raise ValueError(f"|W| = {n} exceeds the oracle cap of {cap}")
    hit = _TABLES.get(id(system))
    if hit is not None and hit.system is system:
        return hit
    refl = system.simple_reflections
    key = lambda m: np.ascontiguousarray(m, dtype=np.int64).tobytes()  # noqa: E731
    position = {key(w.matrix): w.index for w in system.elements}

    # breadth-first search for reduced words
    words: list = [None] * n
    lengths = np.full(n, -1, dtype=np.int64)
    ident = np.eye(system.rank, dtype=np.int64)
    words[position[key(ident)]] = ()
    lengths[position[key(ident)]] = 0
    frontier = [(ident, ())]
    while frontier:
        nxt = []
        for m, word in frontier:
            for s, r in enumerate(refl):
                p = m @ r
                i = position[key(p)]
                if words[i] is None:
                    words[i] = word + (s,)
                    lengths[i] = len(word) + 1
                    nxt.append((p, word + (s,)))
        frontier = nxt

    order = np.zeros((n, n), dtype=bool)
    for y in range(n):
        mats = {key(ident): ident}
        for s in words[y]:
            for m in list(mats.values()):
                p = m @ refl[s]
                mats.setdefault(key(p), p)
        for k in mats:
            order[position[k], y] = True

    mult = np.zeros((n, n), dtype=np.int64)
    mats = [w.matrix for w in system.elements]
    for a in range(n):
        for b in range(n):
            mult[a, b] = position[key(mats[a] @ mats[b])]

    covers = [(x, y) for x in range(n) for y in range(n)
              if order[x, y] and lengths[y] == lengths[x] + 1]
    table = BruhatTable(system, order, covers, mult, lengths, words)
    _TABLES[id(system)] = table
    return table


def _unique_extreme(table: BruhatTable, candidates, want_max: bool, what: str) -> int:
    cands = np.unique(np.asarray(candidates, dtype=np.int64))
    sub = table.order[np.ix_(cands, cands)]      # sub[i, j]: cands[i] <= cands[j]
    above_all = sub.all(axis=0) if want_max else sub.all(axis=1)
    hits = cands[above_all]
    if len(hits) != 1:
        kind = "maximum" if want_max else "minimum"
        raise FalsificationError(f"{what}: no unique {kind} among {cands.tolist()}")
    return int(hits[0])


def brute_demazure_family(table: BruhatTable, x: WElem, y: WElem) -> tuple[WElem, WElem, WElem]:
    """(x * y, x |> y, x <| y) as extrema of {u y : u <= x} and {x v : v <= y}."""
    el = table.system.elements
    left_set = table.mult[table.downset(x.index), y.index]
    right_set = table.mult[x.index, table.downset(y.index)]
    star = _unique_extreme(table, left_set, True, f"max{{uy : u <= {x!r}}}, y={y!r}")
    star_r = _unique_extreme(table, right_set, True, f"max{{xv : v <= {y!r}}}, x={x!r}")
    if star != star_r:
        raise FalsificationError(f"the two descriptions of {x!r} * {y!r} differ")
    tl = _unique_extreme(table, left_set, False, f"min{{uy : u <= {x!r}}}, y={y!r}")
    tr = _unique_extreme(table, right_set, False, f"min{{xv : v <= {y!r}}}, x={x!r}")
    return el[star], el[tl], el[tr]


def brute_parabolic(table: BruhatTable, J) -> list[int]:
    """W_J as the closure of {e} under right multiplication by s_j, j in J."""
    gens = [table.words.index((j,)) for j in sorted(J)]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = int(table.mult[a, g])
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def brute_coset_extremes(table: BruhatTable, x: WElem, Jl, Jr) -> tuple[WElem, WElem]:
    """Shortest and longest elements of W_Jl x W_Jr, checked to be unique."""
    left, right = brute_parabolic(table, Jl), brute_parabolic(table, Jr)
    row = table.mult[left, x.index]
    coset = np.unique(table.mult[row[:, None], np.asarray(right)[None, :]])
    lengths = table.lengths[coset]
    mins = coset[lengths == lengths.min()]
    maxs = coset[lengths == lengths.max()]
    if len(mins) != 1 or len(maxs) != 1:
        raise FalsificationError(f"double coset of {x!r} has no unique extreme")
    el = table.system.elements
    return el[int(mins[0])], el[int(maxs[0])]
