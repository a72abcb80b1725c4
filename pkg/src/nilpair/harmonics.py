"""Alternating polynomials attached to a grading pair: the double Vandermonde
determinant, harmonicity under polarized power sums, and the bimodule the
symmetric group spans from it."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from .diagrams import ShapeClass, classify_shape
from .linalg import Matrix, frac
from .polys import MultivariatePoly


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def alternant(x1, x2, d1, d2):
    """The (d1, d2)-component of the alternating exponential sum:

        (d1! d2!)^{-1} sum_w sign(w) <w x1, u>^{d1} <w x2, v>^{d2}

    in 2n variables u_1..u_n, v_1..v_n.

    Computed monomial by monomial: the coefficient of u^a v^b is the
    determinant of the matrix with entries x1_j^{a_i} x2_j^{b_i}, divided by
    a! b!, which avoids expanding any polynomial powers.
    """
    n = len(x1)
    x1 = [frac(v) for v in x1]
    x2 = [frac(v) for v in x2]
    coeffs = {}
    for a in _compositions(d1, n):
        pow1 = [[x1[j] ** a[i] for j in range(n)] for i in range(n)]
        fact_a = 1
        for k in a:
            fact_a *= factorial(k)
        for b in _compositions(d2, n):
            rows = [
                [pow1[i][j] * x2[j] ** b[i] for j in range(n)] for i in range(n)
            ]
            det = Matrix(rows).determinant()
            if det:
                fact = fact_a
                for k in b:
                    fact *= factorial(k)
                coeffs[tuple(a) + tuple(b)] = det / fact
    return MultivariatePoly(2 * n, coeffs)


def exponent_sums(d):
    """(sum of first coordinates, sum of second coordinates) of the boxes."""
    return (sum(p for p, _ in d.boxes), sum(q for _, q in d.boxes))


def vandermonde_determinant(d):
    """Determinant of the matrix of monomials u_i^{a_j} v_i^{b_j} over the
    boxes (a_j, b_j), expanded exactly."""
    boxes = list(d.boxes)
    n = len(boxes)
    nv = 2 * n
    total = MultivariatePoly.zero(nv)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        exp = [0] * nv
        for i in range(n):
            a, b = boxes[perm[i]]
            exp[i] += a
            exp[n + i] += b
        mono = MultivariatePoly(nv, {tuple(exp): 1})
        total = total + (mono if sign > 0 else -mono)
    return total


def pair_alternant(d):
    """The first nonvanishing bihomogeneous alternant of a Young-diagram
    pair, cross-checked against the explicit determinant form."""
    if classify_shape(d) != ShapeClass.YOUNG:
        raise ValueError("the determinant form needs a Young diagram")
    a = [p for p, _ in d.boxes]
    b = [q for _, q in d.boxes]
    d1, d2 = exponent_sums(d)
    alt = alternant(a, b, d1, d2)
    det = vandermonde_determinant(d)
    assert alt == det, "alternant does not match its determinant form"
    return det


def is_diagonally_skew(p, n):
    """skew under the simultaneous permutation action on u's and v's."""
    for k in range(n - 1):
        perm = list(range(2 * n))
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
        perm[n + k], perm[n + k + 1] = perm[n + k + 1], perm[n + k]
        if p.permute_variables(perm) != -p:
            return False
    return True


def polarized_power_sum(n, a, b):
    """sum_i u_i^a v_i^b as a differential-operator symbol."""
    out = {}
    for i in range(n):
        e = [0] * (2 * n)
        e[i] = a
        e[n + i] = b
        out[tuple(e)] = 1
    return MultivariatePoly(2 * n, out)


def harmonicity(p, n):
    """Annihilation by every polarized power sum of positive degree up to the
    degree of p; those operators generate the diagonal invariants."""
    deg = p.total_degree()
    for total in range(1, deg + 1):
        for a in range(total + 1):
            b = total - a
            op = polarized_power_sum(n, a, b)
            if p.apply_diff_operator(op):
                return False
    return True


def _span_closure(polys, n, side="both"):
    """Span of the S_n x S_n translates, grown by adjacent transpositions."""
    basis = []  # list of (pivot monomial, normalised poly)

    def reduce(p):
        q = MultivariatePoly(p.nvars, dict(p.coeffs))
        for pivot, row in basis:
            c = q.coeffs.get(pivot)
            if c:
                q = q - row.scale(c)
        return q

    def insert(p):
        q = reduce(p)
        if not q:
            return False
        pivot = min(q.coeffs)
        q = q.scale(1 / q.coeffs[pivot])
        for i, (piv, row) in enumerate(basis):
            c = row.coeffs.get(pivot)
            if c:
                basis[i] = (piv, row - q.scale(c))
        basis.append((pivot, q))
        return True

    gens = []
    if side == "both":
        for k in range(n - 1):
            perm = list(range(2 * n))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            gens.append(tuple(perm))
            perm = list(range(2 * n))
            perm[n + k], perm[n + k + 1] = perm[n + k + 1], perm[n + k]
            gens.append(tuple(perm))
    else:
        nv = polys[0].nvars
        for k in range(n - 1):
            perm = list(range(nv))
            perm[k], perm[k + 1] = perm[k + 1], perm[k]
            gens.append(tuple(perm))
    frontier = []
    for p in polys:
        if insert(p):
            frontier.append(p)
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = p.permute_variables(g)
                if insert(q):
                    new.append(q)
        frontier = new
    return basis


class SpanModule:
    """A finite-dimensional permutation-stable space of polynomials."""

    def __init__(self, basis):
        self.basis = basis  # list of (pivot, poly) fully reduced

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, p):
        coords = [Fraction(0)] * self.dim
        q = MultivariatePoly(p.nvars, dict(p.coeffs))
        for i, (pivot, row) in enumerate(self.basis):
            c = q.coeffs.get(pivot)
            if c:
                coords[i] = c
                q = q - row.scale(c)
        if q:
            raise ValueError("polynomial is outside the span")
        return coords

    def action_matrix(self, perm):
        cols = [self.coordinates(row.permute_variables(perm)) for _, row in self.basis]
        return Matrix(list(zip(*cols)))

    def trace_of(self, perm):
        m = self.action_matrix(perm)
        return m.trace()


def wxw_span(p, n):
    """Span of the two-sided translates; returns the SpanModule."""
    return SpanModule(_span_closure([p], n, side="both"))


def u_side_span(p, n):
    """Span of one-sided translates of a polynomial in n variables."""
    return SpanModule(_span_closure([p], n, side="u"))


def perm_of_partition(mu, n):
    """A permutation with cycle type mu, as an index map."""
    perm = list(range(n))
    pos = 0
    for part in mu:
        for k in range(part):
            perm[pos + k] = pos + (k + 1) % part
        pos += part
    return tuple(perm)


def side_character(span, n, side):
    """Character of one factor action on a two-sided span, per cycle type."""
    from .characters import partitions_of

    values = {}
    for mu in partitions_of(n):
        base = perm_of_partition(mu, n)
        if side == "u":
            perm = tuple(list(base) + list(range(n, 2 * n)))
        else:
            perm = tuple(list(range(n)) + [n + i for i in base])
        values[mu] = int(span.trace_of(perm))
    return values


def coroot_product_polys(h):
    """The products of positive-value coroots for the two Levi pieces, as
    polynomials in the first n variables."""
    n = h.n
    pi1 = MultivariatePoly.constant(n, 1)
    pi2 = MultivariatePoly.constant(n, 1)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v1 = h.h1[i] - h.h1[j]
            v2 = h.h2[i] - h.h2[j]
            diff = MultivariatePoly.linear_form(
                [1 if k == i else (-1 if k == j else 0) for k in range(n)]
            )
            if v1 > 0 and v2 == 0:
                pi1 = pi1 * diff
            elif v2 > 0 and v1 == 0:
                pi2 = pi2 * diff
    return pi1, pi2


def embed_vars(p, n, side):
    """View a polynomial in n variables inside the 2n-variable ring."""
    out = {}
    for e, c in p.coeffs.items():
        if side == "u":
            out[tuple(list(e) + [0] * n)] = c
        else:
            out[tuple([0] * n + list(e))] = c
    return MultivariatePoly(2 * n, out)


def sign_line_check(p, n):
    return is_diagonally_skew(p, n)


def c_regular_samples(d, count=3):
    """Deterministic integer vectors in the regular locus: constant on
    columns with distinct row values for the first member, mirrored for the
    second."""
    n = d.n
    cols = sorted({p for p, _ in d.boxes})
    rows = sorted({q for _, q in d.boxes})
    samples = []
    seeds = [
        list(range(len(cols))),
        [2 * i for i in range(len(cols))],
        [i * i + i + 1 for i in range(len(cols))],
    ]
    seeds2 = [
        list(range(len(rows))),
        [2 * i for i in range(len(rows))],
        [i * i + i + 1 for i in range(len(rows))],
    ]
    for s1, s2 in zip(seeds[:count], seeds2[:count]):
        x1 = [s1[cols.index(p)] for p, _ in d.boxes]
        x2 = [s2[rows.index(q)] for _, q in d.boxes]
        samples.append((tuple(x1), tuple(x2)))
    return samples


def in_regular_locus(d, x1, x2):
    """x1 constant on columns and separating rows inside each row; x2 the
    mirror condition."""
    n = d.n
    boxes = list(d.boxes)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            same_col = boxes[i][0] == boxes[j][0]
            same_row = boxes[i][1] == boxes[j][1]
            if same_col and x1[i] != x1[j]:
                return False
            if same_row and x1[i] == x1[j]:
                return False
            if same_row and x2[i] != x2[j]:
                return False
            if same_col and x2[i] == x2[j]:
                return False
    return True


def divide_constant(p, q):
    """p / q when p is a constant multiple of q; None otherwise."""
    if not p and not q:
        return Fraction(1)
    if not q:
        return None
    pivot = min(q.coeffs)
    if pivot not in p.coeffs and p:
        return None
    c = p.coeffs.get(pivot, Fraction(0)) / q.coeffs[pivot]
    return c if q.scale(c) == p else None


def vanishing_scan(d, samples=None):
    """For sample points in the regular locus: the alternant vanishes below
    the shape's exponent-sum bidegree and is proportional to the shape's
    alternant at it."""
    d1, d2 = exponent_sums(d)
    delta = pair_alternant(d)
    if samples is None:
        samples = c_regular_samples(d)
    rows = []
    all_ok = True
    for x1, x2 in samples:
        if not in_regular_locus(d, x1, x2):
            raise ValueError("sample point outside the regular locus")
        entry = {"x1": list(x1), "x2": list(x2), "vanishing": True}
        for a in range(d1 + 1):
            for b in range(d2 + 1):
                if a == d1 and b == d2:
                    continue
                if a < d1 or b < d2:
                    if alternant(x1, x2, a, b):
                        entry["vanishing"] = False
        top = alternant(x1, x2, d1, d2)
        ratio = divide_constant(top, delta)
        entry["proportional"] = ratio is not None and ratio != 0
        entry["ratio"] = None if ratio is None else f"{ratio.numerator}/{ratio.denominator}"
        entry["ok"] = entry["vanishing"] and entry["proportional"]
        all_ok = all_ok and entry["ok"]
        rows.append(entry)
    return {"diagram": d.serialize(), "samples": rows, "ok": all_ok}
