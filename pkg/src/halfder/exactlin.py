"""Exact rational scalars and dense matrices with elimination primitives.

Everything downstream (bracket tables, derivation solvers, subspace
intersections) runs on these.  All arithmetic is exact; dimensions computed
here are bit-for-bit reproducible.
"""

from __future__ import annotations

from .errors import DimensionMismatchError, ParseError

try:
    from gmpy2 import mpq as _ratimpl
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _ratimpl


def rat(p=0, q=None):
    """Exact rational from ints, another rational, or a 'p/q' string."""
    if q is None:
        return _ratimpl(p)
    return _ratimpl(p, q)


ZERO = rat(0)
ONE = rat(1)


def rat_to_str(r) -> str:
    """Canonical 'p/q' string (plain 'p' when the denominator is 1)."""
    r = rat(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def rat_from_str(s):
    """Parse a 'p/q' or 'p' string; raises ParseError on junk."""
    if not isinstance(s, str):
        raise ParseError(f"expected rational string, got {s!r}")
    try:
        return rat(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}: {exc}") from exc


class Mat:
    """Dense matrix of exact rationals, stored as a row-major grid."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        self.entries = [[rat(v) for v in row] for row in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
        else:
            if cols is None:
                raise DimensionMismatchError("empty matrix needs explicit cols")
            self.cols = cols
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatchError("ragged rows")

    @classmethod
    def _of(cls, entries, cols=None):
        """Trusting constructor: entries are already lists of rationals."""
        m = object.__new__(cls)
        m.entries = entries
        m.rows = len(entries)
        m.cols = len(entries[0]) if entries else cols
        return m

    @classmethod
    def zeros(cls, rows, cols):
        return cls._of([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls._of([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_flat(cls, rows, cols, flat):
        if len(flat) != rows * cols:
            raise DimensionMismatchError("flat length != rows*cols")
        return cls._of([[rat(v) for v in flat[r * cols:(r + 1) * cols]] for r in range(rows)], cols)

    def flatten(self):
        out = []
        for row in self.entries:
            out.extend(row)
        return out

    def col(self, c):
        return [row[c] for row in self.entries]

    def matvec(self, v):
        if len(v) != self.cols:
            raise DimensionMismatchError(f"matvec: {self.cols} cols vs vector of {len(v)}")
        return [sum((row[c] * v[c] for c in range(self.cols) if v[c]), ZERO)
                for row in self.entries]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError("matmul shape mismatch")
        ot = list(zip(*other.entries)) if other.rows else []
        return Mat._of(
            [[sum((a * b for a, b in zip(row, colv) if a and b), ZERO) for colv in ot]
             for row in self.entries],
            other.cols,
        )

    def __add__(self, other):
        self._same_shape(other)
        return Mat._of([[a + b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.entries, other.entries)], self.cols)

    def __sub__(self, other):
        self._same_shape(other)
        return Mat._of([[a - b for a, b in zip(r1, r2)]
                        for r1, r2 in zip(self.entries, other.entries)], self.cols)

    def scale(self, c):
        c = rat(c)
        return Mat._of([[c * v for v in row] for row in self.entries], self.cols)

    def transpose(self):
        return Mat._of([list(col) for col in zip(*self.entries)], self.rows)

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("shape mismatch")

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self):
        body = "; ".join(" ".join(rat_to_str(v) for v in row) for row in self.entries)
        return f"Mat[{self.rows}x{self.cols}: {body}]"


def rref(m: Mat):
    """Reduced row echelon form and pivot columns. Row space is preserved."""
    a = [row[:] for row in m.entries]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = ONE / a[r][c]
        if inv != 1:
            a[r] = [v * inv for v in a[r]]
        prow = a[r]
        for i in range(nr):
            f = a[i][c]
            if i != r and f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return Mat._of(a, nc), pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def det(m: Mat):
    """Exact determinant by Gaussian elimination with pivot tracking."""
    if m.rows != m.cols:
        raise DimensionMismatchError("determinant needs a square matrix")
    a = [row[:] for row in m.entries]
    n = m.rows
    result = ONE
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pr is None:
            return ZERO
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            result = -result
        result *= a[c][c]
        inv = ONE / a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def solve(m: Mat, rhs):
    """One exact solution of m*x = rhs (free variables set to 0), or None."""
    if len(rhs) != m.rows:
        raise DimensionMismatchError("rhs length != rows")
    aug = Mat._of([row[:] + [rat(v)] for row, v in zip(m.entries, rhs)], m.cols + 1)
    red, piv = rref(aug)
    if m.cols in piv:
        return None
    x = [ZERO] * m.cols
    for ri, p in enumerate(piv):
        x[p] = red.entries[ri][m.cols]
    return x


class Subspace:
    """Subspace of Q^n given by an independent basis.

    The caller's basis is kept (membership coefficients refer to it); a
    canonical RREF of the stacked basis is cached so span equality is a
    plain matrix comparison.
    """

    __slots__ = ("ambient_dim", "basis", "_canon")

    def __init__(self, ambient_dim, basis):
        self.ambient_dim = ambient_dim
        self.basis = [[rat(v) for v in vec] for vec in basis]
        for vec in self.basis:
            if len(vec) != ambient_dim:
                raise DimensionMismatchError("basis vector of wrong length")
        if self.basis:
            red, piv = rref(Mat._of([v[:] for v in self.basis], ambient_dim))
            if len(piv) != len(self.basis):
                raise ValueError("basis vectors are linearly dependent")
            self._canon = [red.entries[i] for i in range(len(piv))]
        else:
            self._canon = []

    @classmethod
    def span(cls, ambient_dim, vectors):
        """Span of an arbitrary (possibly dependent) list of vectors."""
        vecs = [[rat(v) for v in vec] for vec in vectors]
        if not vecs:
            return cls(ambient_dim, [])
        red, piv = rref(Mat._of(vecs, ambient_dim))
        return cls(ambient_dim, [red.entries[i] for i in range(len(piv))])

    def dim(self) -> int:
        return len(self.basis)

    def canonical_basis(self):
        return [v[:] for v in self._canon]

    def member(self, v):
        """Coefficients of v on self.basis, or None if v is outside the span."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length != ambient_dim")
        v = [rat(x) for x in v]
        if not self.basis:
            return [] if all(x == 0 for x in v) else None
        cols = Mat._of([[self.basis[j][i] for j in range(len(self.basis))]
                        for i in range(self.ambient_dim)], len(self.basis))
        return solve(cols, v)

    def contains(self, v) -> bool:
        return self.member(v) is not None

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        ka, kb = self.dim(), other.dim()
        if ka == 0 or kb == 0:
            return Subspace(self.ambient_dim, [])
        # v = A^T a = B^T b  <=>  (a, b) in ker [A^T | -B^T]
        stacked = Mat._of(
            [[self.basis[j][i] for j in range(ka)] + [-other.basis[j][i] for j in range(kb)]
             for i in range(self.ambient_dim)],
            ka + kb,
        )
        ker = kernel_basis(stacked)
        vecs = []
        for w in ker.basis:
            v = [sum((w[j] * self.basis[j][i] for j in range(ka) if w[j]), ZERO)
                 for i in range(self.ambient_dim)]
            vecs.append(v)
        return Subspace.span(self.ambient_dim, vecs)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._canon == other._canon

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(v) for v in self._canon)))

    def __repr__(self):
        return f"Subspace(dim {self.dim()} of Q^{self.ambient_dim})"


def member(s: Subspace, v):
    return s.member(v)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def kernel_basis(m: Mat) -> Subspace:
    """Basis of the right kernel {v : m v = 0}; dim = cols - rank."""
    red, piv = rref(m)
    pivset = set(piv)
    vecs = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for ri, p in enumerate(piv):
            v[p] = -red.entries[ri][f]
        vecs.append(v)
    return Subspace(m.cols, vecs)


class SparseReducer:
    """Incremental row reduction for large sparse systems.

    Rows are dicts {column: value}.  Only pivot rows are retained,
    normalized to a leading 1.  The dense primitives above stay the public
    elimination surface; this is the workhorse for the d^2-unknown
    derivation systems, whose equations have a handful of nonzeros each.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> row dict (row[pivot] == 1)

    @property
    def rank(self):
        return len(self.pivots)

    def add_row(self, row) -> bool:
        """Reduce a sparse row against the current pivots; True if rank grew."""
        row = {c: rat(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = self.pivots.get(c)
            if prow is None:
                f = row[c]
                if f != 1:
                    inv = ONE / f
                    row = {cc: vv * inv for cc, vv in row.items()}
                self.pivots[c] = row
                return True
            f = row[c]
            for cc, vv in prow.items():
                nv = row.get(cc, ZERO) - f * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        return False

    def _back_substitute(self):
        for c in sorted(self.pivots, reverse=True):
            crow = self.pivots[c]
            for pc, prow in self.pivots.items():
                if pc != c and c in prow:
                    f = prow[c]
                    for cc, vv in crow.items():
                        nv = prow.get(cc, ZERO) - f * vv
                        if nv:
                            prow[cc] = nv
                        else:
                            prow.pop(cc, None)

    def kernel(self):
        """Dense kernel vectors of the accumulated row space."""
        self._back_substitute()
        pivset = set(self.pivots)
        out = []
        for f in range(self.ncols):
            if f in pivset:
                continue
            v = [ZERO] * self.ncols
            v[f] = ONE
            for p, prow in self.pivots.items():
                w = prow.get(f)
                if w:
                    v[p] = -w
            out.append(v)
        return out
