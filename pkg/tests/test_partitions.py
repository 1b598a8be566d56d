import pytest

from wonderful_strata.coxeter import DiagramAutomorphism
from wonderful_strata.oracle import refined_sizes
from wonderful_strata.partitions import (
    READINGS, PartitionKind, PartitionReport, PartitionSpec,
    bmb_components_parametrized, build_partition, closure_covers,
    closures_meet, component_crosscheck, components_cross,
    components_with_orbit_closure, dl_consistency, equal_codim_set,
    piece_components_parametrized, verify_partition,
)
from wonderful_strata.strata import Kind, StratumRef, WonderfulContext, codim, enumerate_strata

from conftest import system

E = frozenset()
G = frozenset({0, 1})
J0, J1 = frozenset({0}), frozenset({1})


@pytest.fixture(scope="module")
def ctx(A2):
    return WonderfulContext(A2)


@pytest.mark.parametrize("kind", list(PartitionKind))
def test_every_partition_on_a2(ctx, kind):
    report = verify_partition(build_partition(ctx, kind))
    assert report.ok, report.failures[:3]
    assert report.kind == kind.value


def test_flip_pieces_on_a2(A2):
    ctx = WonderfulContext(A2, DiagramAutomorphism((1, 0)))
    for kind in ("piece", "piece_x_bmb"):
        assert verify_partition(build_partition(ctx, kind)).ok


def test_counts_by_orbit(ctx):
    report = verify_partition(build_partition(ctx, "piece"))
    assert report.counts == {"": 6, "0": 3, "1": 3, "0,1": 1}


def test_incomplete_or_repeated_spec_rejected(ctx):
    spec = build_partition(ctx, "piece")
    with pytest.raises(ValueError, match="complete"):
        verify_partition(PartitionSpec(ctx, spec.kind, spec.strata[1:]))
    with pytest.raises(ValueError, match="twice"):
        verify_partition(PartitionSpec(ctx, spec.kind, spec.strata + spec.strata[:1]))


def test_refined_aliases(ctx):
    assert build_partition(ctx, "bb_x_bmbm").kind is PartitionKind.REFINED_BB_BMBM
    from wonderful_strata.partitions import build_refined
    assert build_refined(ctx, "PiecexBmB").kind is PartitionKind.REFINED_PIECE_BMB
    with pytest.raises(ValueError):
        build_refined(ctx, "piece")


@pytest.mark.parametrize("label", ["A1", "A1xA1", "A2", "B2"])
def test_refined_sizes_golden(golden, label):
    W = system(label)
    from wonderful_strata.coxeter import diagram_automorphisms
    for d in diagram_automorphisms(W.cartan):
        key = f"{label}:{','.join(map(str, d.perm))}"
        if key not in golden["refined"]:
            continue
        want = golden["refined"][key]
        ctx = WonderfulContext(W, d)
        assert len(build_partition(ctx, "piece_x_bmb").strata) == want["piece_x_bmb"]
        assert len(build_partition(ctx, "bb_x_bmbm").strata) == want["bb_x_bmbm"]
        assert refined_sizes(W, d) == want


def test_report_round_trip():
    r = PartitionReport(True, False, [{"stratum": "a", "other": "", "condition": "c"}], {"": 2}, "piece", ["n"])
    assert PartitionReport.from_dict(r.to_dict()) == r
    assert not r.ok


def test_equal_codim_examples(ctx, A2):
    s1, e, w0 = A2.s(1), A2.identity(), A2.longest()
    X = StratumRef(Kind.BMB, G, e, e)
    assert equal_codim_set(ctx, X, G) == [X]
    assert equal_codim_set(ctx, X, E) == [StratumRef(Kind.BMB, E, w0, w0)]
    P = StratumRef(Kind.PIECE, J0, s1)
    assert equal_codim_set(ctx, P, E) == [StratumRef(Kind.PIECE, E, s1)]
    with pytest.raises(ValueError):
        equal_codim_set(ctx, P, J1)


def test_components_examples(ctx, A2):
    s1, e, w0 = A2.s(1), A2.identity(), A2.longest()
    P = StratumRef(Kind.PIECE, J0, s1)
    assert components_with_orbit_closure(ctx, P, G) == [P]
    assert components_with_orbit_closure(ctx, P, J1) == [StratumRef(Kind.PIECE, E, s1)]
    assert piece_components_parametrized(ctx, P, J1) == [StratumRef(Kind.PIECE, E, s1)]
    X = StratumRef(Kind.BMB, G, e, e)
    assert components_with_orbit_closure(ctx, X, E) == [StratumRef(Kind.BMB, E, w0, w0)]


def test_orbit_readings_disagree(ctx, A2):
    # two components of equal codimension, only one of them of the literal shape
    e, s0 = A2.identity(), A2.s(0)
    X = StratumRef(Kind.BMB, J0, e, s0)
    truth = components_with_orbit_closure(ctx, X, E)
    assert truth == sorted([StratumRef(Kind.BMB, E, s0, e), StratumRef(Kind.BMB, E, e, s0)])
    assert bmb_components_parametrized(ctx, X, E, "codim") == truth
    assert bmb_components_parametrized(ctx, X, E, "literal") != truth
    assert bmb_components_parametrized(ctx, X, E, "maximal") != truth
    with pytest.raises(ValueError):
        bmb_components_parametrized(ctx, X, E, "other")


def test_crosscheck_report(ctx):
    report = component_crosscheck(ctx)
    assert report["bmb_cases"] == 4 * 78
    assert report["piece_mismatches"] == []
    assert report["matching_readings"] == ["codim"]
    assert set(READINGS) == {"literal", "maximal", "codim"}
    assert report["literal_mismatch_example"] is not None


def test_components_cross(ctx, A2):
    s0, s1, e = A2.s(0), A2.s(1), A2.identity()
    # same orbit, meeting strata: the intersection is its own closure
    X, Y = StratumRef(Kind.BB, J0, e, e), StratumRef(Kind.BMBM, J0, e, e)
    assert components_cross(ctx, X, Y) == [(X, Y)]
    # different orbits
    P = StratumRef(Kind.PIECE, J0, s1)
    Y = StratumRef(Kind.BMB, J1, e, s1)
    pairs = components_cross(ctx, P, Y)
    assert pairs == [(StratumRef(Kind.PIECE, E, s1), StratumRef(Kind.BMB, E, e, s1)),
                     (StratumRef(Kind.PIECE, E, s1), StratumRef(Kind.BMB, E, s1, e))]
    total = codim(ctx, P).value + codim(ctx, Y).value
    assert all(codim(ctx, a).value + codim(ctx, b).value == total for a, b in pairs)
    # disjoint closures give an empty list
    P0 = StratumRef(Kind.PIECE, E, s0)
    B = StratumRef(Kind.BMB, E, e, e)
    assert not closures_meet(ctx, P0, B)
    assert components_cross(ctx, P0, B) == []
    with pytest.raises(ValueError):
        components_cross(ctx, P0, StratumRef(Kind.BB, E, e, e))


def test_closure_covers_a1(A1):
    ctx = WonderfulContext(A1)
    covers = closure_covers(ctx, enumerate_strata(ctx, "piece"))
    e, s = A1.identity(), A1.s(0)
    top = StratumRef(Kind.PIECE, frozenset({0}), e)
    # Z_{{},e} is open in Z_{}, so the three pieces form a chain
    assert covers == [(StratumRef(Kind.PIECE, E, e), StratumRef(Kind.PIECE, E, s)),
                      (top, StratumRef(Kind.PIECE, E, e))]


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_dl_consistency(label):
    from wonderful_strata.coxeter import diagram_automorphisms
    W = system(label)
    autos = diagram_automorphisms(W.cartan)
    for d in autos:
        ctx = WonderfulContext(W, d)
        for twist in autos:
            report = dl_consistency(ctx, twist)
            assert report.ok, report.failures[:3]
            assert sum(report.counts.values()) == len(enumerate_strata(ctx, "fpiece"))
            assert bool(report.notes) == (twist != d.inverse())
