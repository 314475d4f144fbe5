"""t-collusion secure storage codes with explicit access structures.

A scheme stores ``k_D`` file symbols and ``k_S`` uniformly random symbols as
``Y = (X | Z) @ G`` with ``G = [G_D; G_S]``.  File ``i`` is read back as
``Y @ B[i]``, which touches only the support of row ``i`` of the access
matrix ``B``.  Every construction here ends in :func:`assemble`, which takes a
data-part generator ``G_D'`` and an access matrix ``B`` whose rows annihilate
``G_S`` and sets ``G_D = (G_D' B^T)^{-1} G_D'`` so that ``G B^T = [I; 0]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import ceil, comb
from typing import Any, Mapping, Sequence

import numpy as np

from .bounds import capacity
from .codes import LinearCode, codeword_with_support, grs_code, reed_muller, vandermonde
from .errors import (BadParameters, BudgetExceeded, ExceedsRMax, InfoSetNotLeading,
                     SearchExhausted, SingularMatrix, TooLargeForExhaustive)
from .gf import Field
from .matrix import (Matrix, invert, nullspace, nullspace_array, rank, rank_array, rref_array,
                     support)
from . import sim

REBALANCE_BUDGET = 10_000


@dataclass(frozen=True, eq=False)
class SecureStorageCode:
    field: Field
    n: int
    k_D: int
    k_S: int
    t: int
    d: int
    r: int
    G_D: Matrix
    G_S: Matrix
    B: Matrix
    M: Matrix
    G_D_prime: Matrix
    scheme: str = "custom"
    meta: Mapping[str, Any] = field(default_factory=dict)

    @property
    def G(self) -> Matrix:
        return Matrix.vstack(self.field, [self.G_D, self.G_S], cols=self.n)

    @property
    def recovery_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(support(row) for row in self.B.array)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k_D, self.n)

    def access_structure(self) -> "AccessStructure":
        return AccessStructure(self.B)

    def params(self) -> dict[str, int]:
        return {"q": self.field.q, "n": self.n, "kd": self.k_D, "ks": self.k_S,
                "t": self.t, "d": self.d, "r": self.r}

    def __repr__(self):
        p = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"SecureStorageCode({self.scheme}: {p})"


@dataclass(frozen=True)
class AccessStructure:
    B: Matrix

    @property
    def row_weights(self) -> tuple[int, ...]:
        return tuple(int(w) for w in np.count_nonzero(self.B.array, axis=1))

    @property
    def column_weights(self) -> tuple[int, ...]:
        return tuple(int(w) for w in np.count_nonzero(self.B.array, axis=0))

    def bounds(self) -> tuple[int, int]:
        """Lower and upper column-weight bound for a balanced structure.

        With rows of weight ``t + 1`` the total is ``k_D (t + 1)``; other row
        weights are handled by spreading the actual total.
        """
        total, n = sum(self.row_weights), self.B.cols
        return total // n, ceil(total / n)

    @property
    def balanced(self) -> bool:
        lo, hi = self.bounds()
        return all(lo <= w <= hi for w in self.column_weights)


# ----------------------------------------------------------------- assembly

def assemble(field: Field, G_D_prime: Matrix, G_S: Matrix, B: Matrix, *, t: int, d: int,
             scheme: str, r: int | None = None, meta: Mapping[str, Any] | None = None
             ) -> SecureStorageCode:
    """Mix ``G_D'`` with ``M = (G_D' B^T)^{-1}`` so that ``G B^T = [I; 0]``."""
    M = invert(G_D_prime @ B.T)
    G_D = M @ G_D_prime
    if r is None:
        r = max(AccessStructure(B).row_weights, default=0)
    return SecureStorageCode(field=field, n=G_D.cols, k_D=G_D.rows, k_S=G_S.rows, t=t, d=d, r=r,
                             G_D=G_D, G_S=G_S, B=B, M=M, G_D_prime=G_D_prime, scheme=scheme,
                             meta=dict(meta or {}))


def with_access_structure(code: SecureStorageCode, B: Matrix, scheme: str | None = None
                          ) -> SecureStorageCode:
    """Re-mix ``code`` for a different access matrix ``B``."""
    if B.shape != (code.k_D, code.n):
        raise BadParameters(f"B must be {code.k_D}x{code.n}, got {B.rows}x{B.cols}")
    if not (code.G_S @ B.T).is_zero():
        raise BadParameters("rows of B are not orthogonal to G_S")
    try:
        return assemble(code.field, code.G_D_prime, code.G_S, B, t=code.t, d=code.d,
                        scheme=scheme or code.scheme, meta=code.meta)
    except SingularMatrix as exc:
        raise BadParameters(f"G_D' B^T is singular: {exc}") from None


def from_matrices(field: Field, G_D, G_S, B, *, t: int, d: int | None = None,
                  r: int | None = None, scheme: str = "custom") -> SecureStorageCode:
    """Wrap explicit matrices as a scheme without re-mixing (``M = I``).

    ``d`` defaults to the exhaustive minimum distance of ``[G_D; G_S]`` and
    ``r`` to the largest row weight of ``B``.
    """
    G_D = G_D if isinstance(G_D, Matrix) else Matrix(field, G_D)
    n = G_D.cols
    G_S = G_S if isinstance(G_S, Matrix) else Matrix(field, G_S, cols=n)
    B = B if isinstance(B, Matrix) else Matrix(field, B, cols=n)
    if G_S.cols != n or B.cols != n or B.rows != G_D.rows:
        raise BadParameters("G_D, G_S and B have inconsistent shapes")
    if d is None:
        G = Matrix.vstack(field, [G_D, G_S], cols=n)
        d = LinearCode(G, check=False).minimum_distance() if G.rows else n
    if r is None:
        r = max(AccessStructure(B).row_weights, default=0)
    return SecureStorageCode(field=field, n=n, k_D=G_D.rows, k_S=G_S.rows, t=t, d=d, r=r,
                             G_D=G_D, G_S=G_S, B=B, M=Matrix.identity(field, G_D.rows),
                             G_D_prime=G_D, scheme=scheme)


def three_node_scheme(field: Field) -> SecureStorageCode:
    """Two files on three nodes: ``X0+Z, X1+Z, X0+X1+Z``; any one node is blind."""
    m1 = field.q - 1
    return from_matrices(field, [[1, 0, 1], [0, 1, 1]], [[1, 1, 1]],
                         [[0, m1, 1], [m1, 0, 1]], t=1, d=1, r=2, scheme="three-node")


def _complement_rows(field: Field, basis: Matrix, span: Matrix) -> Matrix:
    """Rows of ``span`` that extend ``basis`` to a basis of ``<basis> + <span>``."""
    q = field.q
    chosen = [basis.array[i] for i in range(basis.rows)]
    picked = []
    current = rank_array(np.array(chosen), q) if chosen else 0
    for row in span.array:
        trial = np.array(chosen + [row])
        rk = rank_array(trial, q)
        if rk > current:
            chosen.append(row)
            picked.append(row)
            current = rk
    return Matrix(field, np.array(picked).reshape(len(picked), span.cols), cols=span.cols)


# ------------------------------------------------------------ GRS schemes

def construct_grs(field: Field, n: int, k_D: int, t: int,
                  eval_points: Sequence[int] | None = None) -> SecureStorageCode:
    """Optimal scheme from an ``[n, k_D + t]`` Reed-Solomon code.

    The last ``t`` generator rows form the ``[n, t]`` MDS subcode ``G_S``; row
    ``i`` of ``B`` is the dual codeword supported on ``{i, k_D, ..., k_D+t-1}``.
    """
    if k_D < 1 or t < 0:
        raise BadParameters(f"need k_D >= 1 and t >= 0, got k_D={k_D}, t={t}")
    if k_D + t > n:
        raise BadParameters(f"need k_D + t <= n, got {k_D}+{t} > {n}")
    code = grs_code(field, n, k_D + t, eval_points)
    G = code.generator
    lead = list(range(k_D + t))
    if rank(G.columns(lead)) != k_D + t:
        raise InfoSetNotLeading(f"columns {lead} are not an information set; permute the points")
    G_D_prime = G.take_rows(range(k_D))
    G_S = G.take_rows(range(k_D, k_D + t))
    dual_S = LinearCode(nullspace(G_S), check=False)
    rows = []
    for i in range(k_D):
        cw = codeword_with_support(dual_S, [i, *range(k_D, k_D + t)])
        if cw is None:  # impossible for an MDS G_S
            raise BadParameters(f"no dual codeword with support {[i, *range(k_D, k_D + t)]}")
        rows.append(cw)
    B = Matrix(field, rows, cols=n)
    return assemble(field, G_D_prime, G_S, B, t=t, d=n - k_D - t + 1, r=t + 1, scheme="grs",
                    meta={"eval_points": list(eval_points) if eval_points is not None else None})


@dataclass
class AccessValidation:
    """Result of checking a candidate access matrix against a scheme."""

    dual_codeword: bool
    invertible: bool
    A1: Matrix | None
    A2: Matrix | None
    rank_A2: int | None

    @property
    def valid(self) -> bool:
        return self.dual_codeword and self.invertible


def parity_decomposition(code: SecureStorageCode) -> tuple[Matrix, Matrix]:
    """``(H, B0)`` with ``H`` a parity-check matrix of the whole code and
    ``[H; B0]`` a basis of the dual of ``<G_S>``."""
    H = nullspace(code.G)
    HS = nullspace(code.G_S)
    return H, _complement_rows(code.field, H, HS)


def _solve_left(HS: Matrix, B: Matrix) -> np.ndarray | None:
    """``A`` with ``A @ HS = B`` for full-row-rank ``HS``, or None."""
    q = HS.field.q
    m = HS.rows
    aug = np.hstack([HS.array.T, B.array.T])
    r, pivots = rref_array(aug, q)
    if any(p >= m for p in pivots):
        return None
    At = np.zeros((m, B.rows), dtype=np.int64)
    for i, p in enumerate(pivots):
        At[p] = r[i, m:]
    return At.T


def validate_access_structure(code: SecureStorageCode, B: Matrix) -> AccessValidation:
    """Check ``G_S B^T = 0`` and invertibility of ``G_D' B^T``; also express
    ``B`` in the basis ``[H; B0]`` and report the rank of the ``B0`` block."""
    if B.shape != (code.k_D, code.n):
        raise BadParameters(f"B must be {code.k_D}x{code.n}, got {B.rows}x{B.cols}")
    dual_ok = (code.G_S @ B.T).is_zero()
    invertible = rank(code.G_D_prime @ B.T) == code.k_D
    A1 = A2 = None
    rank_A2 = None
    if dual_ok:
        H, B0 = parity_decomposition(code)
        HS = Matrix.vstack(code.field, [H, B0], cols=code.n)
        A = _solve_left(HS, B)
        if A is not None:
            A1 = Matrix(code.field, A[:, :H.rows], cols=H.rows)
            A2 = Matrix(code.field, A[:, H.rows:], cols=B0.rows)
            rank_A2 = rank(A2)
    return AccessValidation(dual_ok, invertible, A1, A2, rank_A2)


def rebalance(code: SecureStorageCode, seed: int = 0, budget: int = REBALANCE_BUDGET
              ) -> SecureStorageCode:
    """Replace ``B`` by a balanced structure of weight-``(t+1)`` dual codewords.

    Depth-first search over support assignments in a seeded random order.
    Each placement counts against ``budget``.
    """
    n, k_D, t, q = code.n, code.k_D, code.t, code.field.q
    if code.k_S != t:
        raise BadParameters("rebalancing needs an [n, t] MDS randomness code (k_S == t)")
    dual_S = LinearCode(nullspace(code.G_S), check=False)
    if t > 0 and dual_S.minimum_distance() != t + 1:
        raise BadParameters("G_S does not generate an MDS code")
    lo, hi = (k_D * (t + 1)) // n, ceil(k_D * (t + 1) / n)
    rng = np.random.default_rng(seed)
    supports = list(itertools.combinations(range(n), t + 1))
    order = [supports[i] for i in rng.permutation(len(supports))]
    words: dict[tuple[int, ...], tuple[int, ...] | None] = {}
    GDp = code.G_D_prime.array
    weights = np.zeros(n, dtype=np.int64)
    rows: list[tuple[int, ...]] = []
    spent = 0

    def search(start: int) -> bool:
        nonlocal spent
        if len(rows) == k_D:
            return bool(np.all(weights >= lo))
        left = k_D - len(rows) - 1
        for pos in range(start, len(order)):
            S = order[pos]
            spent += 1
            if spent > budget:
                raise SearchExhausted(f"no balanced access structure within {budget} placements")
            idx = list(S)
            if np.any(weights[idx] + 1 > hi):
                continue
            weights[idx] += 1
            deficit = int(np.maximum(lo - weights, 0).sum())
            if deficit <= left * (t + 1):
                if S not in words:
                    words[S] = codeword_with_support(dual_S, S)
                w = words[S]
                if w is not None:
                    rows.append(w)
                    if rank_array((GDp @ np.array(rows).T) % q, q) == len(rows):
                        if search(pos + 1):
                            return True
                    rows.pop()
            weights[idx] -= 1
        return False

    if not search(0):
        raise SearchExhausted("no balanced access structure exists for these supports")
    B = Matrix(code.field, rows, cols=n)
    out = with_access_structure(code, B, scheme=code.scheme + "-balanced")
    return _replace_meta(out, {**code.meta, "rebalance_placements": spent, "seed": seed})


def _replace_meta(code: SecureStorageCode, meta: Mapping[str, Any]) -> SecureStorageCode:
    return replace(code, meta=dict(meta))


# ------------------------------------------------- Vandermonde constructions

def _vandermonde_parts(field: Field, n: int, k_D: int, t: int):
    """``H``, ``B'`` and ``A`` rows of the full Vandermonde matrix, plus ``G_S``
    and ``G_D'`` generating the kernels of ``[H; B']`` and ``[A; H]``."""
    H = vandermonde(field, n, 0, n - k_D - t - 1)
    Bsp = vandermonde(field, n, n - k_D - t, n - t - 1)
    A = vandermonde(field, n, n - t, n - 1)
    HS = Matrix.vstack(field, [H, Bsp], cols=n)
    HD = Matrix.vstack(field, [A, H], cols=n)
    return H, Bsp, A, nullspace(HS), nullspace(HD)


def construction1(field: Field, n: int, k_D: int, t: int, seed: int = 0) -> SecureStorageCode:
    """Access rows of weight ``n - k_D + 1`` drawn from the ``[n, k_D]`` GRS code
    spanned by ``V_{n-k_D-t}^{n-t-1}``.

    Row ``i`` vanishes on the ``k_D - 1`` positions following ``i (k_D - 1)``
    cyclically, which spreads the load evenly; a row that would make ``B``
    rank deficient is replaced by the next zero pattern in a seeded order.
    """
    if k_D < 1 or t < 0 or not k_D + t <= n <= field.q - 1:
        raise BadParameters(f"need k_D >= 1, t >= 0, k_D + t <= n <= q - 1; got "
                            f"n={n}, k_D={k_D}, t={t}, q={field.q}")
    q = field.q
    _, Bsp, _, G_S, G_D_prime = _vandermonde_parts(field, n, k_D, t)
    grs = LinearCode(Bsp, check=False)
    z = k_D - 1
    rng = np.random.default_rng(seed)
    others = list(itertools.combinations(range(n), z))
    others = [others[i] for i in rng.permutation(len(others))]
    rows: list[tuple[int, ...]] = []
    for i in range(k_D):
        preferred = tuple(sorted((i * z + j) % n for j in range(z)))
        for zeros in [preferred, *others]:
            supp = [c for c in range(n) if c not in zeros]
            w = codeword_with_support(grs, supp)
            if w is None:
                continue
            if rank_array(np.array(rows + [w]), q) == len(rows) + 1:
                rows.append(w)
                break
        else:
            raise BadParameters("could not find independent minimum-weight rows")
    B = Matrix(field, rows, cols=n)
    return assemble(field, G_D_prime, G_S, B, t=t, d=n - t - k_D + 1, r=n - k_D + 1,
                    scheme="construction1", meta={"seed": seed})


def construction2(field: Field, a: int) -> SecureStorageCode:
    """Cyclic construction with ``n = q - 1``, ``k_D = a`` and ``t = n - n/a``.

    Row ``j`` of ``B`` is ``a_j @ H_S`` with ``a_j = (alpha^(-j l))_l``, the
    ``j``-th right cyclic shift of ``v = (1, ..., 1) @ H_S``.  Rows are not
    rescaled so the shift structure stays visible.
    """
    n = field.q - 1
    if a < 2 or n % a:
        raise BadParameters(f"need a >= 2 dividing q - 1 = {n}, got a={a}")
    t = n - n // a
    k_D = a
    d = n // a - a + 1
    if d < 1:
        raise BadParameters(f"distance n/a - a + 1 = {d} < 1 for a={a}, n={n}")
    _, _, _, G_S, G_D_prime = _vandermonde_parts(field, n, k_D, t)
    HS = vandermonde(field, n, 0, n - t - 1)
    coeffs = Matrix(field, [[field.exp(-j * l) for l in range(n - t)] for j in range(a)],
                    cols=n - t)
    B = coeffs @ HS
    return assemble(field, G_D_prime, G_S, B, t=t, d=d, r=t + 1, scheme="construction2",
                    meta={"a": a})


# ---------------------------------------------------------------- RM scheme

def rm_recovery_sets(m: int, variables: Sequence[int]) -> list[tuple[int, ...]]:
    """The ``2**(m - v)`` disjoint subcubes on which ``variables`` vary freely.

    Summing a degree-``<= v`` function over any of them yields the coefficient
    of the monomial ``prod(x_j for j in variables)``.  Subcube ``b`` fixes the
    remaining variables to the bits of ``b``.
    """
    fixed = [j for j in range(m) if j not in set(variables)]
    pts = np.arange(1 << m)
    out = []
    for b in range(1 << len(fixed)):
        mask = np.ones(1 << m, dtype=bool)
        for pos, var in enumerate(fixed):
            mask &= ((pts >> var) & 1) == ((b >> pos) & 1)
        out.append(tuple(int(p) for p in np.flatnonzero(mask)))
    return out


def construct_rm(m: int, v: int) -> SecureStorageCode:
    """Binary scheme from R(v, m): degree-``v`` rows store data, R(v-1, m) masks.

    File ``i`` is read from subcube ``i mod 2**(m-v)`` of its monomial, so the
    files rotate over the disjoint recovery sets.
    """
    if not 1 <= v < m <= 10:
        raise BadParameters(f"need 1 <= v < m <= 10, got v={v}, m={m}")
    code, monomials = reed_muller(m, v)
    gf2 = code.field
    n = 1 << m
    k_S = sum(comb(m, i) for i in range(v))
    G = code.generator
    G_S = G.take_rows(range(k_S))
    G_D = G.take_rows(range(k_S, code.k))
    rows = []
    for i, mono in enumerate(monomials[k_S:]):
        cube = rm_recovery_sets(m, mono)[i % (1 << (m - v))]
        row = [0] * n
        for p in cube:
            row[p] = 1
        rows.append(row)
    B = Matrix(gf2, rows, cols=n)
    return SecureStorageCode(field=gf2, n=n, k_D=G_D.rows, k_S=k_S, t=(1 << v) - 1,
                             d=1 << (m - v), r=1 << v, G_D=G_D, G_S=G_S, B=B,
                             M=Matrix.identity(gf2, G_D.rows), G_D_prime=G_D, scheme="rm",
                             meta={"m": m, "v": v, "monomials": monomials[k_S:]})


# ------------------------------------------------------------ random search

def _sphere_volume(q: int, n: int, radius: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(radius + 1))


def construct_random(field: Field, n: int, d_target: int, t: int, seed: int = 0,
                     max_tries: int = 10_000, k_S: int | None = None) -> SecureStorageCode:
    """Random parity-check search followed by systematisation.

    A uniform ``(n - k_S) x n`` matrix ``H_S`` is accepted when it has full
    rank and ``<H_S>`` has distance at least ``t + 1``.  Its top rows ``H``
    are the parity checks of the code; ``k_D`` is the largest value for which
    the kernel of the top ``n - k_S - k_D`` rows reaches ``d_target``.  The
    remaining rows are cleared on the pivot columns of ``H`` and brought to
    reduced echelon form, which gives access rows ``(0 | I | B~)`` of weight
    at most ``k_S + 1``.

    With ``k_S=None`` the search starts at ``k_S = t`` and moves to larger
    values, skipping any ``k_S`` for which a dual of distance ``t + 1`` is
    ruled out by the sphere-packing bound; the tries are split evenly.
    """
    q = field.q
    if n > 24 or n < 1:
        raise BadParameters(f"random search supports 1 <= n <= 24, got n={n}")
    if t < 0 or d_target < 1:
        raise BadParameters(f"need t >= 0 and d_target >= 1, got t={t}, d_target={d_target}")
    if d_target > n - t:
        raise SearchExhausted(f"d_target={d_target} exceeds the Singleton limit n - t = {n - t}")
    if k_S is not None:
        candidates = [k_S]
    else:
        candidates = [s for s in range(t, n - d_target + 1)
                      if q ** (n - s) * _sphere_volume(q, n, t // 2) <= q**n]
    if not candidates:
        raise SearchExhausted(f"no randomness dimension can give dual distance {t + 1}")
    rng = np.random.default_rng(seed)
    patience = max(1, max_tries // len(candidates))
    tries = 0
    for s in candidates:
        m = n - s
        if q**m > 1 << 24:
            raise TooLargeForExhaustive(f"dual scan of size {q}^{m} is too large")
        for _ in range(patience):
            if tries >= max_tries:
                break
            tries += 1
            HS = rng.integers(0, q, size=(m, n))
            if rank_array(HS, q) != m:
                continue
            if m and LinearCode(Matrix(field, HS), check=False).minimum_distance() < t + 1:
                continue
            found = _split_parity(field, HS, s, d_target)
            if found is None:
                continue
            k_D, d = found
            H, B = _systematic_access(field, HS, k_D)
            G_S = nullspace(Matrix(field, HS, cols=n))
            G_D_prime = _complement_rows(field, G_S, nullspace(H))
            meta = {"tries": tries, "seed": seed, "k_S_candidates": candidates}
            return assemble(field, G_D_prime, G_S, B, t=t, d=d, scheme="random", meta=meta)
    raise SearchExhausted(f"no code found within {tries} tries")


def _split_parity(field: Field, HS: np.ndarray, k_S: int, d_target: int):
    """Largest ``k_D`` such that the kernel of the top ``m - k_D`` rows of
    ``HS`` has distance ``>= d_target``; returns ``(k_D, distance)`` or None."""
    q = field.q
    m, n = HS.shape
    for k_D in range(min(m, n - k_S - d_target + 1), 0, -1):
        C = nullspace_array(HS[:m - k_D], q)
        if q ** C.shape[0] > 1 << 24:
            continue
        d = LinearCode(Matrix(field, C, cols=n), check=False).minimum_distance()
        if d >= d_target:
            return k_D, d
    return None


def _systematic_access(field: Field, HS: np.ndarray, k_D: int) -> tuple[Matrix, Matrix]:
    """Split ``HS`` into ``H`` and access rows zero on the pivots of ``H``."""
    q = field.q
    m, n = HS.shape
    RH, piv = rref_array(HS[:m - k_D], q)
    low = HS[m - k_D:] % q
    if piv:
        low = (low - low[:, piv] @ RH) % q
    RB, _ = rref_array(low, q)
    return Matrix(field, HS[:m - k_D], cols=n), Matrix(field, RB, cols=n)


# ---------------------------------------------------------- access analysis

@dataclass(frozen=True)
class AccessComplexity:
    r: int
    recovery_sets: tuple[tuple[int, ...], ...]
    minimal: tuple[bool, ...]
    subsets_tested: int


def recoverable_files(code: SecureStorageCode, nodes: Sequence[int]) -> set[int]:
    """Files ``i`` with ``e_i`` in the column span of ``G`` restricted to ``nodes``."""
    q = code.field.q
    G = code.G.array[:, list(nodes)]
    left = nullspace_array(G.T, q)  # y with y @ G_A = 0
    if left.shape[0] == 0:
        return set(range(code.k_D))
    return {i for i in range(code.k_D) if not left[:, i].any()}


def is_minimal_recovery_set(code: SecureStorageCode, file_index: int, nodes: Sequence[int]) -> bool:
    nodes = list(nodes)
    if file_index not in recoverable_files(code, nodes):
        return False
    return all(file_index not in recoverable_files(code, nodes[:j] + nodes[j + 1:])
               for j in range(len(nodes)))


def access_complexity(code: SecureStorageCode, r_max: int | None = None) -> AccessComplexity:
    """Exact access complexity by scanning node subsets in increasing size."""
    n = code.n
    if n > 20:
        raise BadParameters(f"exhaustive access search supports n <= 20, got {n}")
    r_max = n if r_max is None else r_max
    if not 0 <= r_max <= n:
        raise BadParameters(f"r_max={r_max} outside [0, {n}]")
    found: dict[int, tuple[int, ...]] = {}
    tested = 0
    for size in range(1, r_max + 1):
        for A in itertools.combinations(range(n), size):
            tested += 1
            for i in recoverable_files(code, A) - found.keys():
                found[i] = A
            if len(found) == code.k_D:
                break
        if len(found) == code.k_D:
            break
    missing = sorted(set(range(code.k_D)) - found.keys())
    if missing:
        raise ExceedsRMax(f"files {missing} need more than {r_max} nodes")
    sets = tuple(found[i] for i in range(code.k_D))
    minimal = tuple(is_minimal_recovery_set(code, i, s) for i, s in enumerate(sets))
    return AccessComplexity(max((len(s) for s in sets), default=0), sets, minimal, tested)


# ------------------------------------------------------------ verification

def dual_distance(code: SecureStorageCode) -> int:
    """Distance of the code whose parity-check matrix is ``G_S``."""
    if code.k_S == 0:
        return 1
    dual_S = LinearCode(nullspace(code.G_S), check=False)
    if dual_S.k == 0:
        return code.n + 1
    try:
        return dual_S.minimum_distance()
    except TooLargeForExhaustive:
        # smallest number of dependent columns of G_S
        q = code.field.q
        GS = code.G_S.array
        for size in range(1, code.k_S + 2):
            for cols in itertools.combinations(range(code.n), size):
                if rank_array(GS[:, cols], q) < size:
                    return size
        return code.k_S + 1


def verify(code: SecureStorageCode, exhaustive: bool = True, seed: int = 0
           ) -> sim.VerificationReport:
    """Run every structural, secrecy, access, erasure and load check.

    The enumeration oracle for secrecy runs when ``exhaustive`` is set and
    fits the budget; otherwise it is marked skipped.
    """
    rep = sim.VerificationReport()
    q, n, k_D, k_S, t = code.field.q, code.n, code.k_D, code.k_S, code.t
    K = k_D + k_S
    G = code.G

    rk = rank(G)
    rep.add(sim.CheckResult("structure", sim.PASS if rk == K else sim.FAIL,
                            f"rank(G) = {rk}, expected {K}"))

    dS = dual_distance(code)
    rep.add(sim.CheckResult("secrecy_algebraic", sim.PASS if dS > t else sim.FAIL,
                            f"dual distance of G_S is {dS}, claimed t = {t}",
                            {"dual_distance": dS}))

    GBt = (G @ code.B.T).array
    expected = np.vstack([np.eye(k_D, dtype=np.int64), np.zeros((k_S, k_D), dtype=np.int64)])
    access = AccessStructure(code.B)
    heavy = [i for i, w in enumerate(access.row_weights) if w > code.r]
    if not np.array_equal(GBt, expected):
        rep.add(sim.CheckResult("recovery", sim.FAIL, "G B^T differs from [I; 0]"))
    elif heavy:
        rep.add(sim.CheckResult("recovery", sim.FAIL, f"rows {heavy} read more than r={code.r} nodes"))
    else:
        rep.add(sim.CheckResult("recovery", sim.PASS, f"G B^T = [I; 0], row weights <= {code.r}"))

    if rk != K:
        rep.add(sim.CheckResult("erasure", sim.FAIL, "G is rank deficient"))
    else:
        try:
            rep.add(sim.erasure_check(code))
        except BudgetExceeded as exc:
            rep.add(sim.CheckResult("erasure", sim.SKIPPED, str(exc)))

    if exhaustive:
        try:
            rep.add(sim.secrecy_exhaustive(code))
        except BudgetExceeded as exc:
            rep.add(sim.CheckResult("secrecy_exhaustive", sim.SKIPPED, str(exc)))
    else:
        rep.add(sim.CheckResult("secrecy_exhaustive", sim.SKIPPED, "not requested"))

    lo, hi = access.bounds()
    rep.add(sim.CheckResult("balance", sim.INFO,
                            f"balanced={str(access.balanced).lower()} (bounds {lo}..{hi})",
                            {"balanced": access.balanced}))
    load = sim.load_report(code)
    rep.load_histogram, rep.worst_gap = load.histogram, load.worst_gap

    minimal = []
    if rk == K and np.array_equal(GBt, expected):
        minimal = [is_minimal_recovery_set(code, i, s) for i, s in enumerate(code.recovery_sets)]

    cap = capacity(k_D, t) if k_D >= 1 else Fraction(0)
    rep.summary.update({
        "scheme": code.scheme, **code.params(),
        "achieved_t": dS - 1,
        "rate": code.rate,
        "capacity": cap,
        "capacity_gap": cap - code.rate,
        "balanced": access.balanced,
        "minimal_rows": minimal,
    })
    return rep
