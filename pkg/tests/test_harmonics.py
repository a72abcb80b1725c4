from fractions import Fraction

from nilpair.diagrams import parse
from nilpair.harmonics import (
    alternant,
    c_regular_samples,
    divide_constant,
    exponent_sums,
    harmonicity,
    in_regular_locus,
    is_diagonally_skew,
    pair_alternant,
    u_side_span,
    vanishing_scan,
    vandermonde_determinant,
    wxw_span,
)
from nilpair.pairs import build_pair
from nilpair.polys import MultivariatePoly


def test_alternant_two_points_by_hand():
    # n=2, x = ((0,1),(0,0)), degrees (1,0): u2 - u1
    p = alternant((0, 1), (0, 0), 1, 0)
    expected = MultivariatePoly(
        4, {(0, 1, 0, 0): Fraction(1), (1, 0, 0, 0): Fraction(-1)}
    )
    assert p == expected


def test_alternant_degree_zero_vanishes():
    assert not alternant((0, 1), (0, 0), 0, 0)
    assert not alternant((0, 1, 2), (0, 0, 1), 0, 0)


def test_alternant_low_degree_vanishing():
    d = parse("2,1")
    a = [p for p, _ in d.boxes]
    b = [q for _, q in d.boxes]
    # bidegree (0,1) sits under the shape bidegree (1,1)
    assert not alternant(a, b, 0, 1)
    assert not alternant(a, b, 1, 0)


def test_determinant_form_single_row_is_vandermonde():
    d = parse("3")
    det = vandermonde_determinant(d)
    # classical Vandermonde in u only
    u = [MultivariatePoly.variable(6, i) for i in range(3)]
    vdm = (u[1] - u[0]) * (u[2] - u[0]) * (u[2] - u[1])
    assert det == vdm


def test_pair_alternant_consistency():
    for spec in ("2,1", "2,2", "3"):
        assert pair_alternant(parse(spec))  # nonzero; equality asserted inside


def test_harmonicity_examples():
    d = parse("2,1")
    assert harmonicity(pair_alternant(d), 3)
    # an invariant polynomial is not harmonic
    s = MultivariatePoly(6, {(1, 0, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0, 0): 1, (0, 0, 1, 0, 0, 0): 1})
    assert not harmonicity(s, 3)


def test_classical_vandermonde_harmonic():
    assert harmonicity(pair_alternant(parse("3")), 3)


def test_skewness():
    for spec in ("2,1", "3", "2,2"):
        d = parse(spec)
        assert is_diagonally_skew(pair_alternant(d), d.n)


def test_span_dims_hook():
    d = parse("2,1")
    span = wxw_span(pair_alternant(d), 3)
    assert span.dim == 4


def test_span_single_row_trivial():
    d = parse("3")
    span = wxw_span(pair_alternant(d), 3)
    assert span.dim == 1


def test_regular_samples():
    for spec in ("2,1", "2,2", "3,1"):
        d = parse(spec)
        for x1, x2 in c_regular_samples(d):
            assert in_regular_locus(d, x1, x2)


def test_vanishing_scan_ratios():
    d = parse("2,2")
    scan = vanishing_scan(d)
    assert scan["ok"]
    # first sample is the grading pair itself: ratio one
    assert scan["samples"][0]["ratio"] == "1/1"


def test_scaled_sample_ratio_homogeneity():
    d = parse("2,1")
    a = [p for p, _ in d.boxes]
    b = [q for _, q in d.boxes]
    d1, d2 = exponent_sums(d)
    top = alternant([2 * x for x in a], [2 * x for x in b], d1, d2)
    base = pair_alternant(d)
    assert divide_constant(top, base) == Fraction(2 ** (d1 + d2))


def test_u_side_span_of_row_products():
    # one block of two variables: span of translates of u1 - u2 inside S_3
    p = MultivariatePoly(3, {(1, 0, 0): 1, (0, 1, 0): -1})
    span = u_side_span(p, 3)
    assert span.dim == 2
