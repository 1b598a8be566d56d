"""
Components of closures meeting smaller orbits
=============================================

"""

from wonderful_strata.coxeter import build_system, cartan_matrix
from wonderful_strata.partitions import (
    bmb_components_parametrized, component_crosscheck, components_cross,
    components_with_orbit_closure,
)
from wonderful_strata.strata import Kind, StratumRef, WonderfulContext

W = build_system(cartan_matrix("A2"))
ctx = WonderfulContext(W)
e, s0, s1 = W.identity(), W.s(0), W.s(1)

# closure of a piece meeting the closure of Z_{1}
P = StratumRef(Kind.PIECE, frozenset({0}), s1)
print(components_with_orbit_closure(ctx, P, [1]))

# a B^- x B orbit whose boundary in Z_{} has two components of equal codimension
X = StratumRef(Kind.BMB, frozenset({0}), e, s0)
print("components:", components_with_orbit_closure(ctx, X, []))
for reading in ("literal", "maximal", "codim"):
    print(f"  {reading:8s}", bmb_components_parametrized(ctx, X, [], reading))

# how often each description of the components agrees with the codimension scan
report = component_crosscheck(ctx)
print({k: v for k, v in report.items() if k.endswith("matches")}, "of", report["bmb_cases"])

# components of the intersection of two closures from different orbits
Y = StratumRef(Kind.BMB, frozenset({1}), e, s1)
print(components_cross(ctx, P, Y))
