"""Exact linear algebra over the rationals.

Everything runs on Python Fractions; no floating point enters any
computation.  Subspaces are stored in reduced row echelon form, so two equal
subspaces have identical basis tuples and can be compared structurally.
"""

from __future__ import annotations

from fractions import Fraction


def frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def rref(rows):
    """Reduced row echelon form.

    Returns (nonzero rows as tuples, pivot column list).  Pivots are
    normalised to 1 and cleared above and below.
    """
    m = [[frac(x) for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        mr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                mi = m[i]
                for j in range(c, ncols):
                    if mr[j]:
                        mi[j] -= f * mr[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r] if any(row)], pivots


def solve_affine(rows, rhs):
    """One solution x of (rows) x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    n = len(rows[0]) if rows else 0
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


class Subspace:
    """A linear subspace of Q^ambient_dim with a canonical RREF basis."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, vectors=()):
        self.ambient_dim = ambient_dim
        basis, pivots = rref(vectors)
        for v in basis:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def reduce(self, vec):
        """Remainder of vec after elimination against the basis."""
        v = [frac(x) for x in vec]
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return tuple(v)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vec):
        """Coefficients of vec in the RREF basis.  vec must lie in the span."""
        v = [frac(x) for x in vec]
        coeffs = []
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            coeffs.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        if any(v):
            raise ValueError("vector is not in the subspace")
        return tuple(coeffs)

    def __add__(self, other):
        self._check(other)
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def intersect(self, other):
        """Zassenhaus intersection."""
        self._check(other)
        n = self.ambient_dim
        zero = [Fraction(0)] * n
        rows = [list(v) + list(v) for v in self.basis]
        rows += [list(v) + zero for v in other.basis]
        red, _ = rref(rows)
        vecs = [r[n:] for r in red if not any(r[:n])]
        return Subspace(n, vecs)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")

    @staticmethod
    def zero(ambient_dim):
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim):
        eye = []
        for i in range(ambient_dim):
            v = [Fraction(0)] * ambient_dim
            v[i] = Fraction(1)
            eye.append(v)
        return Subspace(ambient_dim, eye)


class EchelonBasis:
    """Incrementally grown echelon basis, for span closures."""

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self.rows = {}  # pivot -> reduced row (list)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = [frac(x) for x in vec]
        for p in sorted(self.rows):
            c = v[p]
            if c:
                row = self.rows[p]
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def add(self, vec):
        """Insert a vector; returns True when it enlarged the span."""
        v = self.reduce(vec)
        pivot = next((i for i, x in enumerate(v) if x), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        self.rows[pivot] = [x * inv for x in v]
        return True

    def contains(self, vec):
        return not any(self.reduce(vec))

    def to_subspace(self):
        return Subspace(self.ambient_dim, list(self.rows.values()))


def complement(sub, within, reverse=False):
    """A deterministic complement of `sub` inside `within`.

    Picks vectors greedily from within's canonical basis (reversed order if
    requested), so the choice is reproducible.
    """
    if not within.contains_subspace(sub):
        raise ValueError("first space is not contained in the second")
    acc = list(sub.basis)
    span = Subspace(sub.ambient_dim, acc)
    picked = []
    candidates = within.basis[::-1] if reverse else within.basis
    for v in candidates:
        if not span.contains(v):
            acc.append(v)
            picked.append(v)
            span = Subspace(sub.ambient_dim, acc)
    return Subspace(sub.ambient_dim, picked)


class Matrix:
    """Dense exact matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = tuple(tuple(frac(x) for x in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @staticmethod
    def zero(r, c=None):
        c = r if c is None else c
        return Matrix([[0] * c for _ in range(r)])

    @staticmethod
    def identity(n):
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(entries):
        n = len(entries)
        return Matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(n, i, j):
        return Matrix([[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.data]})"

    def __add__(self, other):
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.data])

    def scale(self, c):
        c = frac(c)
        return Matrix([[c * a for a in r] for r in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ot = list(zip(*other.data))
            return Matrix(
                [[sum(a * b for a, b in zip(row, col) if a) for col in ot] for row in self.data]
            )
        return self.scale(other)

    def __pow__(self, k):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out * self
        return out

    def apply(self, vec):
        return tuple(sum(a * x for a, x in zip(row, vec) if a) for row in self.data)

    def transpose(self):
        return Matrix(list(zip(*self.data)))

    def trace(self):
        return sum(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self):
        return all(not x for row in self.data for x in row)

    def is_nilpotent(self):
        m = self
        for _ in range(self.rows):
            if m.is_zero():
                return True
            m = m * self
        return m.is_zero()

    def rank(self):
        red, _ = rref(self.data)
        return len(red)

    def determinant(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(row) for row in self.data]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            p = next((i for i in range(c, n) if m[i][c]), None)
            if p is None:
                return Fraction(0)
            if p != c:
                m[c], m[p] = m[p], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                f = m[i][c] * inv
                if f:
                    mi, mc = m[i], m[c]
                    for j in range(c, n):
                        if mc[j]:
                            mi[j] -= f * mc[j]
        return det

    def kernel(self):
        """Exact null space as a canonical Subspace."""
        red, pivots = rref(self.data)
        free = [c for c in range(self.cols) if c not in pivots]
        vecs = []
        for c in free:
            v = [Fraction(0)] * self.cols
            v[c] = Fraction(1)
            for row, p in zip(red, pivots):
                v[p] = -row[c]
            vecs.append(v)
        return Subspace(self.cols, vecs)

    def flatten(self):
        return tuple(x for row in self.data for x in row)

    @staticmethod
    def unflatten(vec, n, m=None):
        m = n if m is None else m
        return Matrix([vec[i * m : (i + 1) * m] for i in range(n)])


def bracket(a, b):
    return a * b - b * a


def jordan_type(m):
    """Jordan block sizes of a nilpotent matrix, largest first."""
    if not m.is_nilpotent():
        raise ValueError("matrix is not nilpotent")
    n = m.rows
    kdims = [0]
    power = Matrix.identity(n)
    while kdims[-1] < n:
        power = power * m
        kdims.append(n - power.rank())
    counts = [kdims[k] - kdims[k - 1] for k in range(1, len(kdims))]
    parts = []
    for size in range(len(counts), 0, -1):
        at_least = counts[size - 1]
        above = counts[size] if size < len(counts) else 0
        parts.extend([size] * (at_least - above))
    return tuple(sorted(parts, reverse=True))
