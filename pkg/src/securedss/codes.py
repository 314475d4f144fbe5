"""Linear codes and the concrete families used by the storage schemes."""

from __future__ import annotations

import itertools
from functools import cached_property
from math import comb
from typing import Sequence

import numpy as np

from .errors import BadParameters, DuplicateEvaluationPoints, TooLargeForExhaustive
from .gf import Field, field_new
from .matrix import Matrix, all_vectors, nullspace, nullspace_array, rank

DISTANCE_WORK_LIMIT = 1 << 24
SUPPORT_SEARCH_LIMIT = 1 << 20


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix."""

    def __init__(self, generator: Matrix, *, check: bool = True, distance: int | None = None):
        if check and rank(generator) != generator.rows:
            raise BadParameters(f"generator has rank {rank(generator)} < {generator.rows} rows")
        self.generator = generator
        self.field = generator.field
        self._distance = distance

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @cached_property
    def parity_check(self) -> Matrix:
        return nullspace(self.generator)

    @property
    def cached_distance(self) -> int | None:
        return self._distance

    def minimum_distance(self) -> int:
        if self._distance is None:
            self._distance = minimum_distance(self)
        return self._distance

    def dual(self) -> "LinearCode":
        return dual(self)

    def codewords(self) -> np.ndarray:
        """All ``q**k`` codewords; intended for small codes only."""
        q = self.field.q
        return (all_vectors(q, self.k) @ self.generator.array) % q

    def __repr__(self):
        d = self._distance if self._distance is not None else "?"
        return f"LinearCode([{self.n}, {self.k}, {d}]_{self.field.q})"


def minimum_distance(code: LinearCode) -> int:
    """Exact minimum Hamming weight over all nonzero codewords."""
    q, k = code.field.q, code.k
    if k == 0:
        raise BadParameters("the zero code has no minimum distance")
    if q**k > DISTANCE_WORK_LIMIT:
        raise TooLargeForExhaustive(f"q^k = {q}^{k} exceeds {DISTANCE_WORK_LIMIT}")
    G = code.generator.array
    # split the message into a high part (enumerated in chunks) and a low part
    low = min(k, max(1, int(np.log(1 << 14) / np.log(q))))
    low_words = (all_vectors(q, low) @ G[k - low:]) % q
    high_msgs = all_vectors(q, k - low)
    best = code.n
    step = max(1, (1 << 21) // (low_words.shape[0] * max(1, code.n)))
    for chunk in range(0, len(high_msgs), step):
        hi = (high_msgs[chunk:chunk + step] @ G[:k - low]) % q
        words = (hi[:, None, :] + low_words[None, :, :]) % q
        w = np.count_nonzero(words, axis=2)
        if chunk == 0:
            w[0, 0] = code.n + 1  # the zero codeword
        best = min(best, int(w.min()))
        if best == 1:
            break
    return best


def dual(code: LinearCode) -> LinearCode:
    return LinearCode(code.parity_check, check=False)


def grs_code(field: Field, n: int, k: int, eval_points: Sequence[int] | None = None) -> LinearCode:
    """Reed-Solomon code with unit column multipliers.

    Row ``r`` of the generator holds the evaluation points raised to ``r``.
    Default points are ``alpha**0, ..., alpha**(n-1)``.
    """
    q = field.q
    if eval_points is None:
        if not 0 <= k <= n <= q - 1:
            raise BadParameters(f"need 0 <= k <= n <= q-1, got k={k}, n={n}, q={q}")
        points = [field.exp(c) for c in range(n)]
    else:
        points = [int(p) % q for p in eval_points]
        if len(points) != n:
            raise BadParameters(f"{len(points)} evaluation points given for n={n}")
        if len(set(points)) != n:
            raise DuplicateEvaluationPoints(f"evaluation points {list(eval_points)} repeat mod {q}")
        if not 0 <= k <= n <= q:
            raise BadParameters(f"need 0 <= k <= n <= q, got k={k}, n={n}, q={q}")
    G = [[pow(x, r, q) for x in points] for r in range(k)]
    d = n - k + 1 if k > 0 else None
    return LinearCode(Matrix(field, G, cols=n), check=False, distance=d)


def vandermonde(field: Field, n: int, i: int, j: int) -> Matrix:
    """Rows ``i..j`` of the Vandermonde matrix on ``alpha**0..alpha**(n-1)``.

    Entry ``(r, c)`` equals ``alpha**(c * (i + r))``.  ``j == i - 1`` yields the
    empty ``0 x n`` matrix, which keeps boundary cases of the constructions
    uniform.
    """
    if not (0 <= i and j >= i - 1 and n <= field.q - 1 and j - i + 1 <= n):
        raise BadParameters(f"invalid Vandermonde slice i={i}, j={j}, n={n}, q={field.q}")
    rows = [[field.exp(c * e) for c in range(n)] for e in range(i, j + 1)]
    return Matrix(field, rows, cols=n)


def reed_muller(m: int, v: int) -> tuple[LinearCode, list[tuple[int, ...]]]:
    """Binary Reed-Muller code R(v, m).

    Position ``p`` of a codeword is the point whose ``j``-th coordinate is bit
    ``j`` of ``p``.  Rows are the monomials of degree ``<= v`` ordered by degree
    and then lexicographically by variable set; the returned list names the
    monomial of each row.
    """
    if not (0 <= v <= m <= 10):
        raise BadParameters(f"need 0 <= v <= m <= 10, got v={v}, m={m}")
    points = np.arange(1 << m)
    bits = (points[None, :] >> np.arange(m)[:, None]) & 1  # (m, 2^m)
    monomials = [s for deg in range(v + 1) for s in itertools.combinations(range(m), deg)]
    rows = []
    for s in monomials:
        row = np.ones(1 << m, dtype=np.int64)
        for var in s:
            row = row * bits[var]
        rows.append(row)
    gf2 = field_new(2)
    code = LinearCode(Matrix(gf2, np.array(rows), cols=1 << m), check=False,
                      distance=1 << (m - v))
    assert code.k == sum(comb(m, i) for i in range(v + 1))
    return code, monomials


def codeword_with_support(code: LinearCode, support: Sequence[int]) -> tuple[int, ...] | None:
    """A codeword whose support is exactly ``support``, or None.

    Candidates are the codewords vanishing outside ``support``: the kernel of
    the parity-check matrix restricted to those columns.  Combinations of the
    kernel basis are scanned in lexicographic order (leading coefficient 1)
    and the first one that is nonzero on every requested position wins.  The
    result is scaled so its first nonzero coordinate is 1.
    """
    S = sorted(set(int(s) for s in support))
    if not S:
        return None
    if S[-1] >= code.n or S[0] < 0:
        raise BadParameters(f"support {S} out of range for n={code.n}")
    q = code.field.q
    H = code.parity_check.array[:, S]
    kernel = nullspace_array(H, q)
    dim = kernel.shape[0]
    if dim == 0:
        return None
    if q ** (dim - 1) > SUPPORT_SEARCH_LIMIT:
        raise TooLargeForExhaustive(f"kernel of dimension {dim} over GF({q}) is too large to scan")
    found = None
    for lead in range(dim):
        tails = all_vectors(q, dim - lead - 1)
        coeffs = np.zeros((len(tails), dim), dtype=np.int64)
        coeffs[:, lead] = 1
        coeffs[:, lead + 1:] = tails
        cand = (coeffs @ kernel) % q
        ok = np.flatnonzero(np.all(cand != 0, axis=1))
        if ok.size:
            found = cand[ok[0]]
            break
    if found is None:
        return None
    found = found * pow(int(found[0]), q - 2, q) % q
    word = [0] * code.n
    for pos, val in zip(S, found):
        word[pos] = int(val)
    return tuple(word)
