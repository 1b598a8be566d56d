"""
The Demazure product and its two minimal companions, plus parabolic coset
extremes.

For x, y in W:

* ``demazure(x, y)`` (x * y) is the maximum of {u y : u <= x},
* ``tri_left(x, y)`` (x |> y) is the minimum of {u y : u <= x},
* ``tri_right(x, y)`` (x <| y) is the minimum of {x v : v <= y}.

All three are computed by a single scan over a reduced word, so they cost
O(l) table lookups; the downset definitions live in `wonderful_strata.oracle`.

>>> from wonderful_strata.coxeter import build_system, cartan_matrix
>>> W = build_system(cartan_matrix("A2"))
>>> s1, s2 = W.s(0), W.s(1)
>>> demazure(s1 * s2, s2 * s1) == W.longest()
True
>>> tri_left(s1, s1 * s2) == s2
True
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .coxeter import WElem, _same_system, as_subset, longest_element

__all__ = [
    "CosetDecomposition", "demazure", "tri_left", "tri_right", "coset_min",
    "coset_max", "double_coset_extremes", "coset_decompose",
    "bruhat_cells_meet", "bruhat_cells_meet_forms",
]

Side = Literal["left", "right"]


def _demazure_idx(system, x: int, y: int) -> int:
    right, length = system._right, system._length
    z = x
    for s in system._words[y]:
        zs = right[z][s]
        if length[zs] > length[z]:
            z = zs
    return z


def _tri_left_idx(system, x: int, y: int) -> int:
    left, length = system._left, system._length
    z = y
    for s in reversed(system._words[x]):
        sz = left[z][s]
        if length[sz] < length[z]:
            z = sz
    return z


def _tri_right_idx(system, x: int, y: int) -> int:
    right, length = system._right, system._length
    z = x
    for s in system._words[y]:
        zs = right[z][s]
        if length[zs] < length[z]:
            z = zs
    return z


def demazure(x: WElem, y: WElem) -> WElem:
    """x * y: multiply letter by letter, keeping only length-increasing steps."""
    system = _same_system(x, y)
    return system.elements[_demazure_idx(system, x.index, y.index)]


def tri_left(x: WElem, y: WElem) -> WElem:
    """x |> y, the left action of (W, *) on W."""
    system = _same_system(x, y)
    return system.elements[_tri_left_idx(system, x.index, y.index)]


def tri_right(x: WElem, y: WElem) -> WElem:
    """x <| y, the right action of (W, *) on W."""
    system = _same_system(x, y)
    return system.elements[_tri_right_idx(system, x.index, y.index)]


def coset_min(x: WElem, J: Iterable[int], side: Side = "right") -> WElem:
    """min(x W_J) for side="right", min(W_J x) for side="left"."""
    w0J = longest_element(x.system, J)
    if side == "right":
        return tri_right(x, w0J)
    if side == "left":
        return tri_left(w0J, x)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def coset_max(x: WElem, J: Iterable[int], side: Side = "right") -> WElem:
    """max(x W_J) for side="right", max(W_J x) for side="left"."""
    w0J = longest_element(x.system, J)
    if side == "right":
        return demazure(x, w0J)
    if side == "left":
        return demazure(w0J, x)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def double_coset_extremes(x: WElem, Jl: Iterable[int], Jr: Iterable[int]) -> tuple[WElem, WElem]:
    """(min, max) of the double coset W_Jl x W_Jr."""
    system = x.system
    a, b = longest_element(system, Jl), longest_element(system, Jr)
    lo = tri_right(tri_left(a, x), b)
    hi = demazure(demazure(a, x), b)
    return lo, hi


@dataclass(frozen=True)
class CosetDecomposition:
    minimal_part: WElem     # x^J in W^J
    parabolic_part: WElem   # x_J in W_J

    def product(self) -> WElem:
        return self.minimal_part * self.parabolic_part


def coset_decompose(x: WElem, J: Iterable[int]) -> CosetDecomposition:
    """Split x = x^J x_J with x^J = min(x W_J) and lengths adding up."""
    J = as_subset(x.system, J)
    xJ = coset_min(x, J)
    rest = xJ.inverse() * x
    if xJ.length + rest.length != x.length:
        raise AssertionError(f"coset decomposition of {x} is not length-additive")
    return CosetDecomposition(xJ, rest)


def bruhat_cells_meet_forms(x: WElem, y: WElem, u: WElem, v: WElem) -> tuple[bool, bool]:
    """
    Both combinatorial forms of "BxByB meets B^- u B v B":
    ``u <| v <= x * y`` and ``u <= x * y * v^{-1}``.
    """
    system = _same_system(x, y, u, v)
    xy = _demazure_idx(system, x.index, y.index)
    first = system._bruhat_idx(_tri_right_idx(system, u.index, v.index), xy)
    second = system._bruhat_idx(u.index, _demazure_idx(system, xy, system._inverse[v.index]))
    return first, second


def bruhat_cells_meet(x: WElem, y: WElem, u: WElem, v: WElem, *, check: bool = False) -> bool:
    """Whether BxByB meets B^- u B v B, via u <= x * y * v^{-1}."""
    first, second = bruhat_cells_meet_forms(x, y, u, v)
    if check and first != second:
        raise AssertionError(f"forms disagree on {(x, y, u, v)}")
    return second
