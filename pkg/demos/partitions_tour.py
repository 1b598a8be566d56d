"""
Admissible partitions and their refinements
===========================================

"""

import time

from wonderful_strata.coxeter import build_system, cartan_matrix, diagram_automorphisms
from wonderful_strata.partitions import PartitionKind, build_partition, verify_partition
from wonderful_strata.strata import WonderfulContext

# every partition kind, for every diagram automorphism of A2
W = build_system(cartan_matrix("A2"))
for d in diagram_automorphisms(W.cartan):
    ctx = WonderfulContext(W, d)
    for kind in PartitionKind:
        t = time.perf_counter()
        spec = build_partition(ctx, kind)
        report = verify_partition(spec)
        print(f"delta={d.perm} {kind.value:12s} strata={len(spec.strata):4d} "
              f"admissible={report.admissible} strong={report.strongly_admissible} "
              f"({time.perf_counter() - t:.2f}s)")

# strata per orbit Z_J for the refined piece partition
print(report.counts)
