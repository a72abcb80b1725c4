import pytest

from nilpair.characters import kostka, partitions_of
from nilpair.diagrams import parse
from nilpair.modules import (
    PairAction,
    WeightModule,
    direct_multiplicity,
    module_limit_check,
    multiplicity_crosscheck,
    weyl_dimension,
)
from nilpair.pairs import build_pair
from nilpair.polys import BivariatePoly


def test_weyl_dimension_values():
    assert weyl_dimension(3, (1, 1, 1)) == 1
    assert weyl_dimension(3, (2, 1)) == 8
    assert weyl_dimension(3, (3,)) == 10
    assert weyl_dimension(4, (2, 2)) == 20
    assert weyl_dimension(2, (4,)) == 5


def test_module_dims_match_formula():
    for n, lam in ((3, (2, 1)), (3, (3,)), (4, (2, 1, 1)), (2, (4,))):
        m = WeightModule(n, lam)
        assert m.dim == weyl_dimension(n, lam)


def test_weight_multiplicities_are_kostka():
    m = WeightModule(3, (2, 1))
    for mu in partitions_of(3):
        padded = tuple(list(mu) + [0] * (3 - len(mu)))
        assert m.weight_multiplicity(padded) == kostka((2, 1), mu)


def test_module_operators_commute_and_nilpotent():
    pair, h = build_pair(parse("2,1"))
    m = WeightModule(3, (3,))
    act = PairAction.build(m, pair)
    assert (act.e1 * act.e2 - act.e2 * act.e1).is_zero()
    assert act.e1.is_nilpotent() and act.e2.is_nilpotent()


def test_direct_multiplicity_counts_weight_spaces_degenerate():
    pair, h = build_pair(parse("3"))
    m = WeightModule(3, (2, 1))
    act = PairAction.build(m, pair)
    for mu in sorted({w for w, _, _ in m.basis}):
        p = direct_multiplicity(act, mu)
        assert p.eval_ones() == m.weight_multiplicity(mu)
        assert all(j == 0 for (_, j) in p.coeffs)  # one-variable regime


def test_direct_multiplicity_sl2_adjoint():
    pair, h = build_pair(parse("2"))
    m = WeightModule(2, (2,))
    act = PairAction.build(m, pair)
    assert direct_multiplicity(act, (1, 1)) == BivariatePoly({(1, 0): 1})


def test_crosscheck_degenerate_regime():
    pair, h = build_pair(parse("3"))
    rep = multiplicity_crosscheck(pair, h, (2, 1, 0))
    assert rep["equal"]
    assert all(r["formula_counts_weight_space"] for r in rep["weights"])


def test_crosscheck_hook_adjoint():
    pair, h = build_pair(parse("2,1"))
    rep = multiplicity_crosscheck(pair, h, (2, 1))
    assert rep["highest_weight_in_ne_cone"]
    assert rep["equal"]
    zero = [r for r in rep["weights"] if r["mu"] == [1, 1, 1]][0]
    assert zero["P_direct"] == [[0, 1, 1], [1, 0, 1]]  # s + t


def test_crosscheck_out_of_cone_reported_not_asserted():
    pair, h = build_pair(parse("2,1"))
    rep = multiplicity_crosscheck(pair, h, (3,))
    assert not rep["highest_weight_in_ne_cone"]
    assert not rep["equal"]  # known deviation outside the cone hypothesis


def test_module_limit_equality_classical():
    pair, h = build_pair(parse("2"))
    m = WeightModule(2, (2,))
    rep = module_limit_check(pair, h, m, (1, 1))
    assert rep["contained"]
    assert not rep["strict"]
    assert rep["zero_weight_dims"] == [1, 1]


def test_module_limit_strict_for_cubes():
    pair, h = build_pair(parse("2,1"))
    m = WeightModule(3, (3,))
    rep = module_limit_check(pair, h, m, (1, 1, 1))
    assert rep["contained"] and rep["strict"]
    assert rep["zero_weight_dims"] == [1, 4]


def test_module_limit_containment_all_weights():
    pair, h = build_pair(parse("2,1"))
    m = WeightModule(3, (2, 1))
    for mu in sorted({w for w, _, _ in m.basis}):
        rep = module_limit_check(pair, h, m, mu)
        assert rep["contained"]


def test_module_rejects_bad_weight():
    with pytest.raises(ValueError):
        WeightModule(2, (1, 2))
    with pytest.raises(ValueError):
        WeightModule(2, (1, 1, 1))
