"""
Finite crystallographic Coxeter systems built from Cartan matrices.

Elements of W are stored as integer matrices acting on the simple-root basis.
The whole group is enumerated once at construction time, so every element is
also addressable by an integer index; indices are ordered by length and then
by canonical reduced word, which makes all iteration deterministic.

Convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>`` and
``s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i``.  Simple reflections are
numbered from 0.

>>> W = build_system(cartan_matrix("A2"))
>>> W.order, len(W.positive_roots)
(6, 3)
>>> w0 = W.longest()
>>> w0.word, w0.length
((0, 1, 0), 3)
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "CartanDatum", "CoxeterSystem", "WElem", "SimpleSubset",
    "DiagramAutomorphism", "cartan_matrix", "build_system", "mul", "length",
    "reduced_word", "bruhat_leq", "longest_element", "apply_automorphism",
    "inverse", "as_subset", "diagram_automorphisms",
    "DEFAULT_ROOT_CAP", "DEFAULT_GROUP_CAP",
]

DEFAULT_ROOT_CAP = 10_000
DEFAULT_GROUP_CAP = 100_000

# J, J', K, I are plain frozensets of simple-reflection indices
SimpleSubset = frozenset


@dataclass(frozen=True)
class CartanDatum:
    matrix: tuple[tuple[int, ...], ...]
    label: str | None = None

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = len(m)
        if n == 0 or any(len(row) != n for row in m):
            raise ValueError("Cartan matrix must be square and non-empty")
        for i in range(n):
            if m[i][i] != 2:
                raise ValueError(f"diagonal entry ({i},{i}) is {m[i][i]}, expected 2")
            for j in range(n):
                if i == j:
                    continue
                if m[i][j] > 0:
                    raise ValueError(f"off-diagonal entry ({i},{j}) is positive")
                if (m[i][j] == 0) != (m[j][i] == 0):
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) must vanish together")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)


_LABEL = re.compile(r"([A-G])(\d+)$")


def _simple_type(series: str, n: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if series == "A" and n >= 1:
        for i in range(n - 1):
            bond(i, i + 1)
    elif series in "BC" and n >= 2:
        for i in range(n - 2):
            bond(i, i + 1)
        # B_n: last simple root short
        if series == "B":
            bond(n - 2, n - 1, -1, -2)
        else:
            bond(n - 2, n - 1, -2, -1)
    elif series == "D" and n >= 4:
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E" and n in (6, 7, 8):
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif series == "F" and n == 4:
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == "G" and n == 2:
        bond(0, 1, -3, -1)
    else:
        raise ValueError(f"unknown Cartan type {series}{n}")
    return a


def cartan_matrix(label: str) -> CartanDatum:
    """Cartan datum for a label such as ``"B3"`` or ``"A1xA1"`` (block sum)."""
    blocks = []
    for part in label.strip().split("x"):
        m = _LABEL.match(part.strip())
        if m is None:
            raise ValueError(f"cannot parse Cartan type {label!r}")
        blocks.append(_simple_type(m.group(1), int(m.group(2))))
    n = sum(len(b) for b in blocks)
    full = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, a in enumerate(row):
                full[off + i][off + j] = a
        off += len(b)
    return CartanDatum(tuple(map(tuple, full)), label=label.strip())


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of the simple roots preserving the Cartan matrix."""
    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(p) for p in self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")

    @classmethod
    def identity(cls, rank: int) -> DiagramAutomorphism:
        return cls(tuple(range(rank)))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def inverse(self) -> DiagramAutomorphism:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return DiagramAutomorphism(tuple(inv))

    def compose(self, other: DiagramAutomorphism) -> DiagramAutomorphism:
        """``self o other``."""
        return DiagramAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm)))

    def image(self, J: Iterable[int]) -> frozenset:
        return frozenset(self.perm[j] for j in J)

    def check(self, cartan: CartanDatum) -> None:
        n = cartan.rank
        if len(self.perm) != n:
            raise ValueError(f"automorphism {self.perm} has wrong size for rank {n}")
        a = cartan.matrix
        for i in range(n):
            for j in range(n):
                if a[self.perm[i]][self.perm[j]] != a[i][j]:
                    raise ValueError(f"{self.perm} does not preserve the Cartan matrix")


def diagram_automorphisms(cartan: CartanDatum) -> list[DiagramAutomorphism]:
    """All Cartan-preserving permutations, identity first."""
    out = []
    for p in itertools.permutations(range(cartan.rank)):
        d = DiagramAutomorphism(p)
        try:
            d.check(cartan)
        except ValueError:
            continue
        out.append(d)
    return out


class WElem:
    """An element of W; a thin handle on the system's enumeration."""
    __slots__ = ("system", "index")

    def __init__(self, system: CoxeterSystem, index: int):
        self.system = system
        self.index = index

    @property
    def matrix(self) -> np.ndarray:
        return self.system._matrices[self.index]

    @property
    def length(self) -> int:
        return int(self.system._length[self.index])

    @property
    def word(self) -> tuple[int, ...]:
        return self.system._words[self.index]

    def is_identity(self) -> bool:
        return self.index == 0

    def inverse(self) -> WElem:
        return self.system.elements[self.system._inverse[self.index]]

    def __mul__(self, other: WElem) -> WElem:
        return mul(self, other)

    def bruhat_le(self, other: WElem) -> bool:
        return bruhat_leq(self, other)

    def __eq__(self, other):
        if not isinstance(other, WElem):
            return NotImplemented
        return self.system is other.system and self.index == other.index

    def __hash__(self):
        return hash((id(self.system), self.index))

    def __repr__(self):
        if not self.word:
            return "e"
        return "s" + "s".join(str(i) for i in self.word)


def _same_system(*elems: WElem) -> CoxeterSystem:
    system = elems[0].system
    for e in elems[1:]:
        if e.system is not system:
            raise ValueError("elements belong to different Coxeter systems")
    return system


@dataclass(eq=False)
class CoxeterSystem:
    """
    A finite Weyl group enumerated in full.

    Immutable after `build_system`; the per-subset caches below only ever
    receive values that are pure functions of their keys.
    """
    cartan: CartanDatum
    positive_roots: list[tuple[int, ...]]
    simple_reflections: list[np.ndarray]
    order: int
    _matrices: list[np.ndarray] = field(repr=False)
    _length: list[int] = field(repr=False)
    _words: list[tuple[int, ...]] = field(repr=False)
    _right: list[list[int]] = field(repr=False)   # _right[w][s] = index of w*s
    _left: list[list[int]] = field(repr=False)    # _left[w][s] = index of s*w
    _inverse: list[int] = field(repr=False)
    _lookup: dict[bytes, int] = field(repr=False)
    elements: list[WElem] = field(default_factory=list, repr=False)
    _parabolic: dict = field(default_factory=dict, repr=False)
    _auto_tables: dict = field(default_factory=dict, repr=False)
    _bruhat_memo: dict = field(default_factory=dict, repr=False)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def gamma(self) -> frozenset:
        return frozenset(range(self.rank))

    @property
    def label(self) -> str:
        return self.cartan.label or f"rank{self.rank}"

    def identity(self) -> WElem:
        return self.elements[0]

    def s(self, i: int) -> WElem:
        return self.elements[int(self._right[0][i])]

    def longest(self) -> WElem:
        return self.elements[-1]

    def __iter__(self) -> Iterator[WElem]:
        return iter(self.elements)

    def __len__(self):
        return self.order

    def from_word(self, word: Iterable[int]) -> WElem:
        idx = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"generator index {i} out of range for rank {self.rank}")
            idx = self._right[idx][i]
        return self.elements[idx]

    def from_matrix(self, m: np.ndarray) -> WElem:
        key = np.ascontiguousarray(m, dtype=np.int64).tobytes()
        try:
            return self.elements[self._lookup[key]]
        except KeyError:
            raise ValueError("matrix is not an element of this Weyl group") from None

    def subsets(self) -> list[frozenset]:
        """All subsets of the simple roots, ordered by size then lexicographically."""
        n = self.rank
        return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(range(n), k)]

    # -- parabolic data ----------------------------------------------------

    def _parabolic_data(self, J: frozenset):
        data = self._parabolic.get(J)
        if data is None:
            Jset = set(J)
            sub = [w for w in self.elements if Jset.issuperset(w.word)]
            minimal = [w for w in self.elements
                       if all(self._length[self._right[w.index][j]] > self._length[w.index] for j in J)]
            data = (tuple(sub), tuple(minimal), max(sub, key=lambda w: w.length))
            self._parabolic[J] = data
        return data

    def parabolic(self, J: Iterable[int]) -> tuple[WElem, ...]:
        """Elements of W_J."""
        return self._parabolic_data(as_subset(self, J))[0]

    def min_coset_reps(self, J: Iterable[int]) -> tuple[WElem, ...]:
        """W^J: elements with no right descent in J."""
        return self._parabolic_data(as_subset(self, J))[1]

    def is_min_rep(self, w: WElem, J: Iterable[int]) -> bool:
        return all(self._length[self._right[w.index][j]] > self._length[w.index] for j in J)

    def is_left_min_rep(self, w: WElem, J: Iterable[int]) -> bool:
        """w in ^J W: no left descent in J."""
        return all(self._length[self._left[w.index][j]] > self._length[w.index] for j in J)

    def right_descents(self, w: WElem) -> frozenset:
        return frozenset(i for i in range(self.rank)
                         if self._length[self._right[w.index][i]] < self._length[w.index])

    def left_descents(self, w: WElem) -> frozenset:
        return frozenset(i for i in range(self.rank)
                         if self._length[self._left[w.index][i]] < self._length[w.index])

    # -- index-level kernels (used by the hot loops elsewhere) -------------

    def _mul_idx(self, a: int, b: int) -> int:
        right = self._right
        for s in self._words[b]:
            a = right[a][s]
        return a

    def _bruhat_idx(self, x: int, y: int) -> bool:
        key = (x, y)
        hit = self._bruhat_memo.get(key)
        if hit is not None:
            return hit
        length, left, words = self._length, self._left, self._words
        # lifting: if s is a left descent of y then x <= y iff min(x, sx) <= sy
        while y != 0:
            if length[x] > length[y]:
                break
            s = words[y][0]
            sx = left[x][s]
            if length[sx] < length[x]:
                x = sx
            y = left[y][s]
        result = bool(y == 0 and x == 0)
        self._bruhat_memo[key] = result
        return result

    def _auto_table(self, d: DiagramAutomorphism) -> list[int]:
        table = self._auto_tables.get(d.perm)
        if table is None:
            d.check(self.cartan)
            table = [self.from_word(d.perm[i] for i in w.word).index for w in self.elements]
            self._auto_tables[d.perm] = table
        return table


def as_subset(system: CoxeterSystem, J: Iterable[int]) -> frozenset:
    J = frozenset(int(j) for j in J)
    bad = [j for j in J if not 0 <= j < system.rank]
    if bad:
        raise ValueError(f"indices {sorted(bad)} are not simple roots of rank {system.rank}")
    return J


def _positive_roots(a: np.ndarray, refl: list[np.ndarray], cap: int) -> list[tuple[int, ...]]:
    n = a.shape[0]
    seen = set()
    queue = deque()
    for i in range(n):
        v = tuple(int(k) for k in np.eye(n, dtype=np.int64)[:, i])
        seen.add(v)
        queue.append(v)
    while queue:
        v = queue.popleft()
        vec = np.array(v, dtype=np.int64)
        for r in refl:
            img = tuple(int(k) for k in r @ vec)
            if img not in seen:
                if not (all(k >= 0 for k in img) or all(k <= 0 for k in img)):
                    raise ValueError("reflection produced a mixed-sign vector; Cartan matrix is not of finite type")
                seen.add(img)
                queue.append(img)
                if len(seen) > cap:
                    raise ValueError(
                        f"root closure exceeded {cap} roots; Cartan matrix is not of finite type")
    pos = [v for v in seen if all(k >= 0 for k in v)]
    return sorted(pos, key=lambda v: (sum(v), tuple(-k for k in v)))


def build_system(cartan: CartanDatum, *, root_cap: int = DEFAULT_ROOT_CAP,
                 group_cap: int = DEFAULT_GROUP_CAP) -> CoxeterSystem:
    """Enumerate roots and group elements of the Weyl group of ``cartan``."""
    a = cartan.array()
    n = cartan.rank
    refl = []
    for i in range(n):
        s = np.eye(n, dtype=np.int64)
        s[i, :] -= a[i, :]
        s.setflags(write=False)
        refl.append(s)
    pos = _positive_roots(a, refl, root_cap)
    proots = np.array(pos, dtype=np.int64).T  # columns are positive roots

    def inversions(m):
        img = m @ proots
        return int(np.sum(img.sum(axis=0) < 0))

    ident = np.eye(n, dtype=np.int64)
    mats = [ident]
    lookup = {ident.tobytes(): 0}
    frontier = [0]
    right_edges = {}
    while frontier:
        nxt = []
        for idx in frontier:
            for s in range(n):
                m = mats[idx] @ refl[s]
                key = m.tobytes()
                j = lookup.get(key)
                if j is None:
                    j = len(mats)
                    if j >= group_cap:
                        raise ValueError(f"|W| exceeds the configured cap of {group_cap}")
                    lookup[key] = j
                    mats.append(m)
                    nxt.append(j)
                right_edges[idx, s] = j
        frontier = nxt
    order = len(mats)
    lengths = np.array([inversions(m) for m in mats], dtype=np.int64)
    if lengths.max() != len(pos):
        raise AssertionError("longest element length differs from the number of positive roots")

    right = np.zeros((order, n), dtype=np.int64)
    for (i, s), j in right_edges.items():
        right[i, s] = j
    left = np.zeros((order, n), dtype=np.int64)
    for i, m in enumerate(mats):
        for s in range(n):
            left[i, s] = lookup[(refl[s] @ m).tobytes()]

    # canonical word: repeatedly strip the smallest left descent
    words = []
    for i in range(order):
        word, w = [], i
        while w != 0:
            s = next(t for t in range(n) if lengths[left[w, t]] < lengths[w])
            word.append(s)
            w = left[w, s]
        words.append(tuple(word))

    perm = sorted(range(order), key=lambda i: (lengths[i], words[i]))
    rank_of = np.empty(order, dtype=np.int64)
    rank_of[perm] = np.arange(order)
    mats = [mats[i] for i in perm]
    for m in mats:
        m.setflags(write=False)
    lengths = lengths[perm]
    words = [words[i] for i in perm]
    right = rank_of[right[perm]]
    left = rank_of[left[perm]]
    lookup = {m.tobytes(): i for i, m in enumerate(mats)}

    inv = np.zeros(order, dtype=np.int64)
    for i in range(order):
        j = 0
        for s in reversed(words[i]):
            j = right[j, s]
        inv[i] = j

    # plain lists: scalar indexing into numpy arrays is slow in the scan loops
    system = CoxeterSystem(
        cartan=cartan, positive_roots=pos, simple_reflections=refl, order=order,
        _matrices=mats, _length=lengths.tolist(), _words=words, _right=right.tolist(),
        _left=left.tolist(), _inverse=inv.tolist(), _lookup=lookup,
    )
    system.elements = [WElem(system, i) for i in range(order)]
    return system


# -- functional API ----------------------------------------------------------

def mul(a: WElem, b: WElem) -> WElem:
    system = _same_system(a, b)
    return system.from_matrix(a.matrix @ b.matrix)


def length(w: WElem) -> int:
    return w.length


def reduced_word(w: WElem) -> tuple[int, ...]:
    """ShortLex-minimal reduced word (smallest left descent first)."""
    return w.word


def bruhat_leq(x: WElem, y: WElem) -> bool:
    system = _same_system(x, y)
    return system._bruhat_idx(x.index, y.index)


def longest_element(system: CoxeterSystem, J: Iterable[int] | None = None) -> WElem:
    """w_0^J, the longest element of W_J (w_0 when J is None)."""
    if J is None:
        return system.longest()
    return system._parabolic_data(as_subset(system, J))[2]


def apply_automorphism(d: DiagramAutomorphism, w: WElem) -> WElem:
    system = w.system
    return system.elements[int(system._auto_table(d)[w.index])]


def inverse(w: WElem) -> WElem:
    return w.inverse()
