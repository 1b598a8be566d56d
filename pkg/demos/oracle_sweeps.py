"""
Checking the fast paths against brute force
===========================================

"""

from wonderful_strata.coxeter import build_system, cartan_matrix
from wonderful_strata.oracle import SweepConfig, brute_bruhat_table, run_suite

# the oracle's Bruhat table comes from subwords of reduced words
W = build_system(cartan_matrix("A2"))
T = brute_bruhat_table(W)
print(T.order.astype(int))
print("strict relations:", int(T.order.sum()) - W.order)

# each suite sweeps a list of types exhaustively and collects counterexamples
for suite in ("monoid", "appendix", "criteria", "closure", "components", "dl"):
    result = run_suite(suite, SweepConfig(types=("A2",)))
    print(f"{suite:10s} cases={result.cases:6d} passed={result.passed} {result.wall_time:.2f}s")

# the same from the shell:  wonderful-strata verify --suite all --type A2
