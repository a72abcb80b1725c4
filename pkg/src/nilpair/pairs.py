"""Commuting nilpotent matrix pairs built from box diagrams: centralizers,
bigradings, bi-exponents, classification, limit spaces and the structural
checks that go with them.

The ambient algebra is gl_n internally (matrix units are bigraded there);
trace-zero results are obtained by cutting with the trace hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .diagrams import Diagram, ShapeClass, SKEWISH, classify_shape, subset_pairs
from .linalg import Matrix, Subspace, bracket, frac


class ShapeError(ValueError):
    pass


class StabilityError(ValueError):
    pass


class HypothesisError(ValueError):
    pass


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class SemisimplePair:
    """A commuting pair of rational diagonal matrices grading the pair."""

    h1: tuple
    h2: tuple

    def __post_init__(self):
        object.__setattr__(self, "h1", tuple(frac(x) for x in self.h1))
        object.__setattr__(self, "h2", tuple(frac(x) for x in self.h2))

    @property
    def n(self):
        return len(self.h1)

    @property
    def trace_shift(self):
        n = self.n
        return (sum(self.h1) / n, sum(self.h2) / n)

    def matrices(self):
        return Matrix.diagonal(self.h1), Matrix.diagonal(self.h2)

    def is_regular(self):
        return len(set(zip(self.h1, self.h2))) == self.n

    def is_integral(self):
        return all(x.denominator == 1 for x in self.h1 + self.h2)

    def bidegree(self, i, j):
        return (self.h1[i] - self.h1[j], self.h2[i] - self.h2[j])

    def to_jsonable(self):
        return {
            "h1": [f"{x.numerator}/{x.denominator}" for x in self.h1],
            "h2": [f"{x.numerator}/{x.denominator}" for x in self.h2],
        }


class NilPair:
    """A pair of commuting nilpotent n x n matrices with provenance."""

    __slots__ = ("n", "e1", "e2", "provenance")

    def __init__(self, e1, e2, provenance="custom", check=True):
        self.e1 = e1
        self.e2 = e2
        self.n = e1.rows
        self.provenance = provenance
        if check:
            if e1.rows != e1.cols or e2.rows != e2.cols or e1.rows != e2.rows:
                raise ValueError("pair members must be square of equal size")
            if not bracket(e1, e2).is_zero():
                raise ValueError("pair members do not commute")
            if not (e1.is_nilpotent() and e2.is_nilpotent()):
                raise ValueError("pair members must be nilpotent")

    def swap(self):
        prov = (
            self.provenance.transpose()
            if isinstance(self.provenance, Diagram)
            else "custom"
        )
        return NilPair(self.e2, self.e1, prov, check=False)

    def to_jsonable(self):
        def entries(m):
            return [
                [i, j, int(m.data[i][j])]
                for i in range(self.n)
                for j in range(self.n)
                if m.data[i][j]
            ]

        prov = (
            self.provenance.serialize()
            if isinstance(self.provenance, Diagram)
            else str(self.provenance)
        )
        return {"n": self.n, "e1": entries(self.e1), "e2": entries(self.e2), "provenance": prov}


def build_pair(d):
    """Matrix pair of a diagram: the first member steps one box right, the
    second one box up; the grading pair is the diagonal of box coordinates."""
    shape = classify_shape(d)
    if shape not in SKEWISH:
        raise ShapeError(f"no commuting pair for shape {shape.value}")
    n = d.n
    index = {box: i for i, box in enumerate(d.boxes)}
    e1 = [[0] * n for _ in range(n)]
    e2 = [[0] * n for _ in range(n)]
    for (p, q), i in index.items():
        if (p + 1, q) in index:
            e1[index[(p + 1, q)]][i] = 1
        if (p, q + 1) in index:
            e2[index[(p, q + 1)]][i] = 1
    pair = NilPair(Matrix(e1), Matrix(e2), provenance=d)
    h = SemisimplePair([p for p, _ in d.boxes], [q for _, q in d.boxes])
    _check_grading(pair, h)
    return pair, h


def _check_grading(pair, h):
    h1m, h2m = h.matrices()
    assert bracket(h1m, pair.e1) == pair.e1
    assert bracket(h2m, pair.e2) == pair.e2
    assert bracket(h1m, pair.e2).is_zero()
    assert bracket(h2m, pair.e1).is_zero()


def direct_sum(pairs_and_gradings):
    """Block direct sum of pairs; the grading diagonals are concatenated."""
    n = sum(p.n for p, _ in pairs_and_gradings)
    e1 = [[0] * n for _ in range(n)]
    e2 = [[0] * n for _ in range(n)]
    h1, h2 = [], []
    off = 0
    for pair, h in pairs_and_gradings:
        for i in range(pair.n):
            for j in range(pair.n):
                e1[off + i][off + j] = pair.e1.data[i][j]
                e2[off + i][off + j] = pair.e2.data[i][j]
        h1.extend(h.h1)
        h2.extend(h.h2)
        off += pair.n
    return NilPair(Matrix(e1), Matrix(e2), provenance="direct_sum"), SemisimplePair(h1, h2)


def provenance_grading(pair):
    if isinstance(pair.provenance, Diagram):
        d = pair.provenance
        return SemisimplePair([p for p, _ in d.boxes], [q for _, q in d.boxes])
    return None


# ---------------------------------------------------------------------------
# matrix-space plumbing: gl_n flattened to n^2 coordinates


def ad_matrix(x):
    """Matrix of ad x = [x, .] on flattened n x n matrices."""
    n = x.rows
    rows = [[Fraction(0)] * (n * n) for _ in range(n * n)]
    for a in range(n):
        for b in range(n):
            # [x, E_ab] = sum_i x_ia E_ib - sum_j x_bj E_aj
            col = a * n + b
            for i in range(n):
                if x.data[i][a]:
                    rows[i * n + b][col] += x.data[i][a]
            for j in range(n):
                if x.data[b][j]:
                    rows[a * n + j][col] -= x.data[b][j]
    return Matrix(rows)


def trace_row(n):
    return tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))


def traceless_cut(space):
    """Intersect a subspace of flattened matrices with the trace hyperplane."""
    n2 = space.ambient_dim
    tr = trace_row(isqrt(n2))
    # solve sum c_i tr(b_i) = 0 in the coefficient space
    vals = [sum(t * x for t, x in zip(tr, b)) for b in space.basis]
    coeff_kernel = Matrix([vals]).kernel()
    vecs = []
    for coeffs in coeff_kernel.basis:
        v = [Fraction(0)] * n2
        for c, b in zip(coeffs, space.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        v[j] += c * x
        vecs.append(v)
    return Subspace(n2, vecs)


_PIECES_CACHE = {}


def bigraded_pieces(h, ambient="gl"):
    """Decomposition of gl_n (or its trace-zero part) by (ad h1, ad h2)
    bidegree.  Returns {(p, q): Subspace of flattened matrices}."""
    key = (h, ambient)
    cached = _PIECES_CACHE.get(key)
    if cached is not None:
        return cached
    out = _bigraded_pieces(h, ambient)
    if len(_PIECES_CACHE) > 64:
        _PIECES_CACHE.clear()
    _PIECES_CACHE[key] = out
    return out


def _bigraded_pieces(h, ambient):
    n = h.n
    groups = {}
    for i in range(n):
        for j in range(n):
            key = h.bidegree(i, j)
            key = (key[0], key[1])
            groups.setdefault(key, []).append(i * n + j)
    pieces = {}
    for key, idxs in groups.items():
        vecs = []
        for idx in idxs:
            v = [Fraction(0)] * (n * n)
            v[idx] = Fraction(1)
            vecs.append(v)
        sp = Subspace(n * n, vecs)
        if ambient == "sl" and key == (Fraction(0), Fraction(0)):
            sp = traceless_cut(sp)
        pieces[_int_key(key)] = sp
    return pieces


def _int_key(key):
    p, q = key
    if isinstance(p, Fraction):
        if p.denominator == 1 and q.denominator == 1:
            return (int(p), int(q))
        return (p, q)
    return (int(p), int(q))


def ad_map_between(x, source, target):
    """Matrix of [x, .] from a source subspace to a target subspace, in their
    canonical bases.  Raises if the image leaves the target."""
    n = x.rows
    cols = []
    for v in source.basis:
        m = Matrix.unflatten(v, n)
        w = bracket(x, m).flatten()
        cols.append(target.coordinates(w))
    if not cols:
        return Matrix.zero(target.dim, 0)
    return Matrix(list(zip(*cols))) if target.dim else Matrix.zero(0, len(cols))


_CENT_CACHE = {}


def centralizer_bigraded(pair, h, ambient="sl"):
    """Bigraded joint centralizer: {(p, q): Subspace}, computed blockwise."""
    key = (pair.e1, pair.e2, h, ambient)
    cached = _CENT_CACHE.get(key)
    if cached is not None:
        return cached
    out = _centralizer_bigraded(pair, h, ambient)
    if len(_CENT_CACHE) > 64:
        _CENT_CACHE.clear()
    _CENT_CACHE[key] = out
    return out


def _centralizer_bigraded(pair, h, ambient):
    pieces = bigraded_pieces(h, ambient)
    zero = Subspace.zero(pair.n**2)
    out = {}
    for key, piece in pieces.items():
        t1 = pieces.get((key[0] + 1, key[1]), zero)
        t2 = pieces.get((key[0], key[1] + 1), zero)
        rows = []
        m1 = ad_map_between(pair.e1, piece, t1)
        m2 = ad_map_between(pair.e2, piece, t2)
        rows.extend(m1.data)
        rows.extend(m2.data)
        if not rows:
            kern_coeffs = Subspace.full(piece.dim)
        else:
            kern_coeffs = Matrix(rows).kernel()
        vecs = []
        for coeffs in kern_coeffs.basis:
            v = [Fraction(0)] * pair.n**2
            for c, b in zip(coeffs, piece.basis):
                if c:
                    for j, x in enumerate(b):
                        if x:
                            v[j] += c * x
            vecs.append(v)
        if vecs:
            out[key] = Subspace(pair.n**2, vecs)
    return out


def centralizer(pair, ambient="sl", h=None):
    """Joint centralizer of the pair inside gl_n or its trace-zero part."""
    if h is None:
        h = provenance_grading(pair)
    if h is not None:
        blocks = centralizer_bigraded(pair, h, ambient)
        vecs = [v for sp in blocks.values() for v in sp.basis]
        return Subspace(pair.n**2, vecs)
    rows = list(ad_matrix(pair.e1).data) + list(ad_matrix(pair.e2).data)
    if ambient == "sl":
        rows.append(trace_row(pair.n))
    return Matrix(rows).kernel()


def bigrade(space, h, ambient="gl"):
    """Split an (ad h1, ad h2)-stable subspace by bidegree."""
    pieces = bigraded_pieces(h, ambient)
    out = {}
    total = 0
    for key, piece in pieces.items():
        inter = space.intersect(piece)
        if inter.dim:
            out[key] = inter
            total += inter.dim
    if total != space.dim:
        raise StabilityError("subspace is not stable under the grading torus")
    return out


def biexponents(pair, h=None, convention="sl"):
    """Bidegrees (with multiplicity) of a bihomogeneous centralizer basis."""
    if h is None:
        h = provenance_grading(pair)
    if h is None:
        raise ClassificationError("no grading pair available")
    if classify_pair(pair, h) != "principal":
        raise ClassificationError("bi-exponents are defined for principal pairs only")
    blocks = centralizer_bigraded(pair, h, ambient="sl")
    out = []
    for (p, q), sp in sorted(blocks.items()):
        out.extend([(p, q)] * sp.dim)
    if convention == "gl":
        out = sorted(out + [(0, 0)])
    return tuple(sorted(out))


def is_nilpotent_family(space, n):
    """True if every element of the matrix subspace is nilpotent.

    Closes the span under products (word length at most n suffices) and
    checks each basis element; on a product-closed span that is enough, since
    the traces of all powers of every element then vanish.
    """
    from .linalg import EchelonBasis

    basis = [Matrix.unflatten(v, n) for v in space.basis]
    ech = EchelonBasis(n * n)
    for b in basis:
        ech.add(b.flatten())
    current = list(basis)
    for _ in range(n):
        new_mats = []
        for a in current:
            for b in basis:
                m = a * b
                if ech.add(m.flatten()):
                    new_mats.append(m)
        if not new_mats:
            break
        current = new_mats
    closed = [Matrix.unflatten(list(v), n) for v in ech.rows.values()]
    return all(m.is_nilpotent() for m in closed)


def classify_pair(pair, h=None):
    """One of principal / distinguished / nil_pair / invalid."""
    if not bracket(pair.e1, pair.e2).is_zero():
        return "invalid"
    if not (pair.e1.is_nilpotent() and pair.e2.is_nilpotent()):
        return "invalid"
    if h is None:
        h = provenance_grading(pair)
    have_regular_h = False
    if h is not None:
        _check_grading(pair, h)
        have_regular_h = h.is_regular()
    z_sl = centralizer(pair, ambient="sl", h=h)
    if have_regular_h and h.is_integral() and z_sl.dim == pair.n - 1:
        blocks = bigrade(z_sl, h, ambient="sl")
        if all(p >= 0 and q >= 0 and (p, q) != (0, 0) for p, q in blocks):
            return "principal"
    if have_regular_h and is_nilpotent_family(centralizer(pair, "sl", h=h), pair.n):
        return "distinguished"
    return "nil_pair"


def monomial_basis_check(pair):
    """For a Young-diagram pair: do the monomials e1^p e2^q over the boxes
    (other than the corner) span the trace-zero centralizer?"""
    d = pair.provenance
    if not isinstance(d, Diagram) or classify_shape(d) != ShapeClass.YOUNG:
        raise ShapeError("monomial basis check needs a Young-diagram pair")
    vecs = []
    for (p, q) in d.boxes:
        if (p, q) == (0, 0):
            continue
        vecs.append(((pair.e1**p) * (pair.e2**q)).flatten())
    span = Subspace(pair.n**2, vecs)
    return span == centralizer(pair, ambient="sl")


def shift_basis_check(pair, p, q):
    """Check that the translation maps built from in/out subset pairs span
    exactly the (p, q) component of the gl centralizer."""
    d = pair.provenance
    if not isinstance(d, Diagram):
        raise ShapeError("check needs a diagram pair")
    n = pair.n
    index = {box: i for i, box in enumerate(d.boxes)}
    vecs = []
    for sp in subset_pairs(d, p, q):
        m = [[0] * n for _ in range(n)]
        for (i, j) in sp.nu_in:
            m[index[(i + p, j + q)]][index[(i, j)]] = 1
        vecs.append(Matrix(m).flatten())
    span = Subspace(n * n, vecs)
    h = provenance_grading(pair)
    blocks = centralizer_bigraded(pair, h, ambient="gl")
    comp = blocks.get((p, q), Subspace.zero(n * n))
    return span == comp, span.dim


def bigraded_dims(h, ambient="sl"):
    return {k: sp.dim for k, sp in bigraded_pieces(h, ambient).items() if sp.dim}


def weak_lefschetz_report(pair, h=None):
    """Injectivity/surjectivity pattern of both bracket actions across the
    bigrading; returns one record per checked map."""
    if h is None:
        h = provenance_grading(pair)
    pieces = bigraded_pieces(h, ambient="sl")
    zero = Subspace.zero(pair.n**2)
    records = []
    for key in sorted(pieces, key=lambda k: (k[1], k[0])):
        src = pieces[key]
        if not src.dim:
            continue
        for which, x, shift in (("e1", pair.e1, (1, 0)), ("e2", pair.e2, (0, 1))):
            tgt = pieces.get((key[0] + shift[0], key[1] + shift[1]), zero)
            m = _ad_map_or_zero(x, src, tgt)
            rank = m.rank()
            level = key[0] if which == "e1" else key[1]
            expected = "injective" if level < 0 else "surjective"
            ok = rank == src.dim if level < 0 else rank == tgt.dim
            records.append(
                {
                    "bidegree": list(key),
                    "map": which,
                    "expected": expected,
                    "ok": bool(ok),
                }
            )
    return records


def _ad_map_or_zero(x, src, tgt):
    n = x.rows
    cols = []
    for v in src.basis:
        w = bracket(x, Matrix.unflatten(v, n)).flatten()
        if tgt.dim == 0:
            if any(w):
                raise StabilityError("bracket image leaves the graded piece")
            cols.append(())
        else:
            cols.append(tgt.coordinates(w))
    if tgt.dim == 0:
        return Matrix.zero(0, len(cols)) if cols else Matrix.zero(0, 0)
    return Matrix(list(zip(*cols)))


def levi_subalgebra(h, which, pieces=None):
    """g^1 (commutant of h2) or g^2 (commutant of h1) inside trace-zero gl."""
    pieces = pieces or bigraded_pieces(h, ambient="sl")
    vecs = []
    for (p, q), sp in pieces.items():
        if (which == 1 and q == 0) or (which == 2 and p == 0):
            vecs.extend(sp.basis)
    return Subspace(h.n**2, vecs)


def center_of(space, n):
    """Center of a matrix subalgebra given as a subspace: the elements of the
    space whose bracket with every basis element vanishes."""
    mats = [Matrix.unflatten(v, n) for v in space.basis]
    sys_rows = []
    for m in mats:
        images = [bracket(m, Matrix.unflatten(v, n)).flatten() for v in space.basis]
        # constraint on coefficients c: sum_j c_j [m, b_j] = 0
        sys_rows.extend(zip(*images))
    coeff_kernel = (
        Matrix([list(r) for r in sys_rows]).kernel() if sys_rows else Subspace.full(space.dim)
    )
    vecs = []
    for coeffs in coeff_kernel.basis:
        v = [Fraction(0)] * (n * n)
        for c, b in zip(coeffs, space.basis):
            if c:
                for j, x in enumerate(b):
                    if x:
                        v[j] += c * x
        vecs.append(v)
    return Subspace(n * n, vecs)


def lie_closure(vectors, n):
    """Span closure of a set of matrices under the bracket."""
    from .linalg import EchelonBasis

    ech = EchelonBasis(n * n)
    frontier = []
    for v in vectors:
        if ech.add(v):
            frontier.append(Matrix.unflatten(v, n))
    base = list(frontier)
    while frontier:
        new = []
        for a in frontier:
            for b in base:
                w = bracket(a, b)
                if ech.add(w.flatten()):
                    new.append(w)
        base.extend(new)
        frontier = new
    return ech.to_subspace()


def parabolic_checks(pair, h=None):
    """Tangent-space density and generation checks for the two Levi pieces."""
    if h is None:
        h = provenance_grading(pair)
    n = pair.n
    pieces = bigraded_pieces(h, ambient="sl")
    g1 = levi_subalgebra(h, 1, pieces)
    g2 = levi_subalgebra(h, 2, pieces)

    def row_span(which_p):
        vecs = []
        for (p, q), sp in pieces.items():
            if (which_p == "p1" and p == 1) or (which_p == "q1" and q == 1):
                vecs.extend(sp.basis)
        return Subspace(n * n, vecs)

    bracket_e1_g2 = Subspace(
        n * n, [bracket(pair.e1, Matrix.unflatten(v, n)).flatten() for v in g2.basis]
    )
    bracket_e2_g1 = Subspace(
        n * n, [bracket(pair.e2, Matrix.unflatten(v, n)).flatten() for v in g1.basis]
    )
    c1 = center_of(g1, n)
    c2 = center_of(g2, n)
    checks = {
        "e1_in_degree_1_0": pieces.get((1, 0), Subspace.zero(n * n)).contains(
            pair.e1.flatten()
        ),
        "e2_in_degree_0_1": pieces.get((0, 1), Subspace.zero(n * n)).contains(
            pair.e2.flatten()
        ),
        "bracket_e1_levi2_fills_row": bracket_e1_g2 == row_span("p1"),
        "bracket_e2_levi1_fills_row": bracket_e2_g1 == row_span("q1"),
        "centers_meet_trivially": c1.intersect(c2).dim == 0,
        "levis_generate": lie_closure(list(g1.basis) + list(g2.basis), n).dim
        == n * n - 1,
    }
    checks["ok"] = all(bool(v) for v in checks.values())
    return checks


# ---------------------------------------------------------------------------
# bifiltration limits


def _power_cache(op, max_pow):
    out = [Matrix.identity(op.rows)]
    for _ in range(max_pow):
        out.append(out[-1] * op)
    return out


def nilpotency_index(op):
    m = Matrix.identity(op.rows)
    k = 0
    while not m.is_zero():
        m = m * op
        k += 1
        if k > op.rows + 1:
            raise ValueError("operator is not nilpotent")
    return k


def bifiltration_space(ops, i, j, ambient_dim):
    """F_{i,j} = ker(A^{i+1} B^j) cap ker(A^i B^{j+1}), with the boundary
    conventions F_{-1,j} = ker B^j and F_{i,-1} = ker A^i."""
    A, B = ops
    if i < -1 or j < -1:
        return Subspace.zero(ambient_dim)
    if i == -1 and j == -1:
        return Subspace.zero(ambient_dim)
    if i == -1:
        return (B**j).kernel() if j > 0 else Subspace.zero(ambient_dim)
    if j == -1:
        return (A**i).kernel() if i > 0 else Subspace.zero(ambient_dim)
    rows = list((A ** (i + 1) * B**j).data) + list((A**i * B ** (j + 1)).data)
    return Matrix(rows).kernel()


def limit_space(ops, E):
    """Limit of a subspace under the commuting nilpotent flow.

    Returns the direct sum of A^p B^q images of the bifiltration pieces of E;
    raises HypothesisError when that sum fails to be direct or to reach
    dim E.
    """
    A, B = ops
    N = E.ambient_dim
    ia, ib = nilpotency_index(A), nilpotency_index(B)
    pieces = []
    total = 0
    vecs = []
    for i in range(ia + 1):
        for j in range(ib + 1):
            Fij = bifiltration_space(ops, i, j, N).intersect(E)
            below = bifiltration_space(ops, i - 1, j, N).intersect(E) + bifiltration_space(
                ops, i, j - 1, N
            ).intersect(E)
            gr_dim = Fij.dim - below.dim
            if gr_dim <= 0:
                continue
            op = (A**i) * (B**j)
            img_vecs = [op.apply(v) for v in Fij.basis]
            img = Subspace(N, img_vecs)
            pieces.append(img)
            total += img.dim
            vecs.extend(img.basis)
    out = Subspace(N, vecs)
    if out.dim != sum(p.dim for p in pieces) or out.dim != E.dim:
        raise HypothesisError("direct sum hypothesis fails for this subspace")
    return out


def grassmannian_limit(ops, E):
    """Exact limit of exp(t(A+B)) E as t grows, for commuting nilpotent A, B.

    Each basis vector becomes a polynomial curve in t; the limit subspace is
    found by leading-term reduction: while the top coefficient vectors are
    dependent, a dependence is used to cancel the top term of one generator,
    strictly lowering its degree.  Works without any direct-sum hypothesis.
    """
    A, B = ops
    N = E.ambient_dim
    ia, ib = nilpotency_index(A), nilpotency_index(B)
    from math import factorial

    rows = []
    for v in E.basis:
        by_degree = {}
        for i in range(ia + 1):
            for j in range(ib + 1):
                w = (A**i * B**j).apply(v)
                if any(w):
                    c = Fraction(1, factorial(i) * factorial(j))
                    cur = by_degree.setdefault(i + j, [Fraction(0)] * N)
                    for k, x in enumerate(w):
                        if x:
                            cur[k] += c * x
        by_degree = {d: w for d, w in by_degree.items() if any(w)}
        rows.append(by_degree)
    while True:
        degs = [max(r) if r else -1 for r in rows]
        leads = [r[d] if d >= 0 else [Fraction(0)] * N for r, d in zip(rows, degs)]
        live = [i for i, d in enumerate(degs) if d >= 0]
        if len(live) < E.dim:
            raise ValueError("curve degenerated; input basis was dependent")
        mat = Matrix([[leads[i][k] for i in live] for k in range(N)])
        kern = mat.kernel()
        if kern.dim == 0:
            return Subspace(N, [leads[i] for i in live])
        coeffs = kern.basis[0]
        involved = [i for i, c in zip(live, coeffs) if c]
        top = max(involved, key=lambda i: degs[i])
        merged = {}
        for i, c in zip(live, coeffs):
            if not c:
                continue
            shift = degs[top] - degs[i]
            for d, w in rows[i].items():
                cur = merged.setdefault(d + shift, [Fraction(0)] * N)
                for k, x in enumerate(w):
                    if x:
                        cur[k] += c * x
        merged = {d: w for d, w in merged.items() if any(w)}
        assert degs[top] not in merged
        rows[top] = merged


def ad_pair_operators(pair):
    return ad_matrix(pair.e1), ad_matrix(pair.e2)


def abelian_check(space, n):
    mats = [Matrix.unflatten(v, n) for v in space.basis]
    return all(
        bracket(a, b).is_zero() for a, b in combinations(mats, 2)
    )
