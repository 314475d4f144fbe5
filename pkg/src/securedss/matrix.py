"""Exact dense linear algebra over a prime field.

Matrices hold reduced integers in a read-only ``int64`` numpy array.  Every
operation returns a new :class:`Matrix`.  Products of two reduced entries
stay below ``2**32`` for ``q <= 2**16``, so int64 never overflows inside a
single multiply-reduce step.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, SingularMatrix
from .gf import Field


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class Matrix:
    """Immutable matrix over ``field``."""

    __slots__ = ("field", "_a")

    def __init__(self, field: Field, data, cols: int | None = None):
        a = np.array(data, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(0, cols or 0) if a.size == 0 else a.reshape(1, -1)
        elif a.ndim == 2 and a.shape[0] == 0 and cols is not None:
            a = a.reshape(0, cols)
        if a.ndim != 2:
            raise DimensionMismatch(f"expected a 2-d array, got shape {a.shape}")
        self.field = field
        self._a = _frozen(a % field.q)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64), cols=cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64), cols=n)

    @classmethod
    def vstack(cls, field: Field, parts: Sequence["Matrix"], cols: int | None = None) -> "Matrix":
        parts = list(parts)
        if not parts:
            return cls.zeros(field, 0, cols or 0)
        widths = {p.cols for p in parts}
        if len(widths) != 1:
            raise DimensionMismatch(f"cannot stack widths {sorted(widths)}")
        return cls(field, np.vstack([p.array for p in parts]), cols=parts[0].cols)

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self._a.T, cols=self.rows)

    def tolist(self) -> list[list[int]]:
        return self._a.tolist()

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self._a[i])

    def columns(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        return Matrix(self.field, self._a[:, idx], cols=len(idx))

    def take_rows(self, idx: Iterable[int]) -> "Matrix":
        idx = list(idx)
        return Matrix(self.field, self._a[idx, :], cols=self.cols)

    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return Matrix(self.field, matmul_mod(self._a, other._a, self.field.q), cols=other.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.field, self._a + other._a, cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.field, self._a - other._a, cols=self.cols)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.field, self._a * (int(c) % self.field.q), cols=self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(
            np.array_equal(self._a, other._a))

    def __hash__(self):
        return hash((self.field.q, self.shape, self._a.tobytes()))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._a.tolist())
        return f"Matrix<{self.field!r} {self.rows}x{self.cols}>[{body}]"

    def rank(self) -> int:
        return rank(self)

    def is_zero(self) -> bool:
        return not self._a.any()


def matmul_mod(a: np.ndarray, b: np.ndarray, q: int) -> np.ndarray:
    if a.shape[1] * (q - 1) ** 2 < 2**62:
        return (a @ b) % q
    # very long inner dimension with a large modulus: reduce blockwise
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, (2**62) // ((q - 1) ** 2))
    for s in range(0, a.shape[1], step):
        out = (out + a[:, s:s + step] @ b[s:s + step, :]) % q
    return out


def rref_array(a: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of a reduced integer array.

    Pivot search takes the first column with a nonzero entry at or below the
    current row, and within it the topmost such row.
    """
    a = np.array(a, dtype=np.int64) % q
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        if piv != 1:
            a[r] = a[r] * pow(piv, q - 2, q) % q
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def rank_array(a: np.ndarray, q: int) -> int:
    if a.size == 0:
        return 0
    return len(rref_array(a, q)[1])


def nullspace_array(a: np.ndarray, q: int) -> np.ndarray:
    """Basis (as rows) of the right kernel ``{x : a @ x = 0}``."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref_array(a, q)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(pivots):
            basis[k, p] = (-r[i, f]) % q
    return basis


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    r, pivots = rref_array(m.array, m.field.q)
    return Matrix(m.field, r, cols=m.cols), pivots


def rank(m: Matrix) -> int:
    return rank_array(m.array, m.field.q)


def invert(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = np.hstack([m.array, np.eye(n, dtype=np.int64)])
    r, pivots = rref_array(aug, m.field.q)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"matrix has rank {sum(p < n for p in pivots)} < {n}")
    return Matrix(m.field, r[:, n:], cols=n)


def nullspace(m: Matrix) -> Matrix:
    return Matrix(m.field, nullspace_array(m.array, m.field.q), cols=m.cols)


def column_span_contains(m: Matrix, v: Sequence[int]) -> bool:
    """True iff ``v`` is a linear combination of the columns of ``m``."""
    v = np.asarray(v, dtype=np.int64).reshape(-1)
    if v.size != m.rows:
        raise DimensionMismatch(f"vector of length {v.size} vs {m.rows} rows")
    q = m.field.q
    return rank_array(np.hstack([m.array, v[:, None] % q]), q) == rank_array(m.array, q)


def spans_intersect_trivially(a1: Matrix, a2: Matrix) -> bool:
    """Rank test ``rk(a1 @ a2.T) == rows(a1)``.

    Equivalent to ``<a1>^perp ∩ <a2> = {0}`` whenever the rows of ``a2`` are
    independent; a rank-deficient ``a2`` always yields False.
    """
    if a1.cols != a2.cols or a1.rows != a2.rows:
        raise DimensionMismatch(f"{a1.shape} vs {a2.shape}")
    return rank(a1 @ a2.T) == a1.rows


def row_space_contains(m: Matrix, v: Sequence[int]) -> bool:
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    q = m.field.q
    return rank_array(np.vstack([m.array, v % q]), q) == rank_array(m.array, q)


def same_row_space(a: Matrix, b: Matrix) -> bool:
    q = a.field.q
    ra = rank_array(a.array, q)
    return ra == rank_array(b.array, q) == rank_array(np.vstack([a.array, b.array]), q)


def all_vectors(q: int, length: int) -> np.ndarray:
    """Every vector of F_q^length, lexicographic, as a ``(q**length, length)`` array."""
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(q), repeat=length)), dtype=np.int64)


def weight(v: Sequence[int]) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def support(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(np.asarray(v)))
