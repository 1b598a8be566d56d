"""
Orbit and piece strata of the A2 compactification
=================================================

"""

from wonderful_strata.strata import (
    Kind, StratumRef, WonderfulContext, closure_leq, codim, enumerate_strata,
    intersection_nonempty, min_twisted_class,
)
from wonderful_strata.coxeter import DiagramAutomorphism, build_system, cartan_matrix

W = build_system(cartan_matrix("A2"))
ctx = WonderfulContext(W)

# one G x G orbit per subset J, refined by Borel orbits and by pieces
for kind in ("gxg", "bb", "bmb", "bmbm", "piece"):
    print(f"{kind:6s}", len(enumerate_strata(ctx, kind)))

# codimensions inside the orbit Z_J
for s in enumerate_strata(ctx, "piece", [0]):
    print(s, "codim", codim(ctx, s).value)

# which pieces lie in the closure of Z_{{0},delta,s1}?
big = StratumRef(Kind.PIECE, frozenset({0}), W.s(1))
print([s for s in enumerate_strata(ctx, "piece") if closure_leq(ctx, big, s)])

# the twisted conjugacy class that controls that closure, for the flip automorphism too
print(min_twisted_class(ctx, [0], W.s(1)))
flip = WonderfulContext(W, DiagramAutomorphism((1, 0)))
print(min_twisted_class(flip, [0, 1], W.identity()))

# pieces against B^- x B orbits inside one orbit
e = W.identity()
X = StratumRef(Kind.PIECE, frozenset({0}), W.s(1))
for Y in enumerate_strata(ctx, "bmb", [0])[:6]:
    print(X, "meets" if intersection_nonempty(ctx, X, Y) else "misses", Y)
