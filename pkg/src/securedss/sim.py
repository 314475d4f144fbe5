"""Operational simulator: encode files onto nodes, read them back, and check
secrecy, recovery and erasure tolerance by exact enumeration."""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import TYPE_CHECKING, Any, Sequence

import numpy as np

from .errors import BadParameters, BudgetExceeded, DimensionMismatch
from .gf import FieldElement
from .matrix import all_vectors, rank_array

if TYPE_CHECKING:
    from .secure import SecureStorageCode

SECRECY_BUDGET = 10**8
ERASURE_BUDGET = 10**7

PASS, FAIL, SKIPPED, INFO = "pass", "fail", "skipped", "info"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    """Outcome of a batch of checks.

    Skipped checks never count as passed; ``info`` checks are reported but do
    not gate :attr:`passed`.
    """

    checks: dict[str, CheckResult] = field(default_factory=dict)
    counters: dict[str, int] = field(default_factory=dict)
    load_histogram: tuple[int, ...] = ()
    worst_gap: int = 0
    summary: dict[str, Any] = field(default_factory=dict)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks[check.name] = check
        for key in ("coalitions", "subsets"):
            if key in check.data:
                self.counters[f"{key}_tested"] = (
                    self.counters.get(f"{key}_tested", 0) + int(check.data[key]))
        return check

    @property
    def passed(self) -> bool:
        return all(c.status in (PASS, INFO) for c in self.checks.values()
                   if c.status != SKIPPED)

    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if c.status == FAIL]

    def status(self, name: str) -> str:
        return self.checks[name].status

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": {n: {"status": c.status, "detail": c.detail} for n, c in self.checks.items()},
            "counters": dict(self.counters),
            "load_histogram": list(self.load_histogram),
            "worst_gap": self.worst_gap,
            "summary": {k: _plain(v) for k, v in self.summary.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"passed: {str(self.passed).lower()}"]
        for key, val in self.summary.items():
            lines.append(f"{key}: {_plain(val)}")
        for name, c in self.checks.items():
            lines.append(f"check.{name}: {c.status}" + (f" ({c.detail})" if c.detail else ""))
        for key, val in self.counters.items():
            lines.append(f"{key}: {val}")
        if self.load_histogram:
            lines.append("load_histogram: " + " ".join(str(x) for x in self.load_histogram))
            lines.append(f"worst_gap: {self.worst_gap}")
        return "\n".join(lines) + "\n"


def _plain(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (tuple, list)):
        return [_plain(x) for x in v]
    return v


@dataclass(frozen=True)
class NodeArray:
    """Snapshot of the n stored symbols ``(X | Z) @ G``."""

    symbols: tuple[int, ...]
    code: "SecureStorageCode" = field(repr=False)
    files: tuple[int, ...] = field(repr=False)
    randomness: tuple[int, ...] = field(repr=False)


def _as_ints(x: Sequence, q: int) -> list[int]:
    return [int(v) % q for v in x]


def encode(code: "SecureStorageCode", X: Sequence, seed: int = 0,
           z_override: Sequence | None = None) -> NodeArray:
    """Store files ``X`` with fresh uniform randomness drawn from ``seed``.

    ``z_override`` fixes the randomness instead; it destroys secrecy and exists
    for tests only.
    """
    q = code.field.q
    if len(X) != code.k_D:
        raise DimensionMismatch(f"expected {code.k_D} files, got {len(X)}")
    x = _as_ints(X, q)
    if z_override is not None:
        if len(z_override) != code.k_S:
            raise DimensionMismatch(f"expected {code.k_S} random symbols, got {len(z_override)}")
        z = _as_ints(z_override, q)
    else:
        z = [int(v) for v in np.random.default_rng(seed).integers(0, q, size=code.k_S)]
    msg = np.array(x + z, dtype=np.int64)
    y = (msg @ code.G.array) % q if len(msg) else np.zeros(code.n, dtype=np.int64)
    return NodeArray(tuple(int(v) for v in y), code, tuple(x), tuple(z))


def retrieve(nodes: NodeArray, file_index: int, counter: Counter | None = None) -> FieldElement:
    """Recover one file by reading only the nodes in its access row."""
    code = nodes.code
    if not 0 <= file_index < code.k_D:
        raise IndexError(f"file index {file_index} outside [0, {code.k_D})")
    q = code.field.q
    row = code.B.array[file_index]
    acc = 0
    for j in np.flatnonzero(row):
        j = int(j)
        acc += int(row[j]) * nodes.symbols[j]
        if counter is not None:
            counter[j] += 1
    return code.field(acc % q)


def recovery_check(code: "SecureStorageCode", seed: int = 0, limit: int = 10**4) -> CheckResult:
    """Encode/retrieve round trip.

    Covers the whole message space when ``q**k_D <= limit`` and ``limit``
    seeded random messages otherwise.  Retrieval reads only the support of
    each access row.
    """
    q, kD, kS = code.field.q, code.k_D, code.k_S
    rng = np.random.default_rng(seed)
    exhaustive = q**kD <= limit
    X = all_vectors(q, kD) if exhaustive else rng.integers(0, q, size=(limit, kD))
    Z = rng.integers(0, q, size=(len(X), kS))
    msgs = np.hstack([X, Z]).astype(np.int64)
    Y = (msgs @ code.G.array) % q
    B = code.B.array
    got = np.zeros_like(X)
    for i in range(kD):
        supp = np.flatnonzero(B[i])
        got[:, i] = (Y[:, supp] @ B[i, supp]) % q
    bad = np.flatnonzero(np.any(got != X % q, axis=1))
    data = {"messages": int(len(X)), "exhaustive": exhaustive}
    if bad.size:
        return CheckResult("recovery", FAIL, f"message {X[bad[0]].tolist()} not recovered", data)
    return CheckResult("recovery", PASS, f"{len(X)} messages round-tripped", data)


def secrecy_exhaustive(code: "SecureStorageCode", t: int | None = None,
                       budget: int = SECRECY_BUDGET) -> CheckResult:
    """Exact check that every coalition of at most ``t`` nodes learns nothing.

    For each coalition T and each file vector X the distribution of ``Y_T``
    over uniform randomness Z is tabulated.  The check passes iff every such
    distribution is uniform over all ``q**|T|`` tuples, which in particular
    makes it independent of X.
    """
    t = code.t if t is None else t
    q, n, kD, kS = code.field.q, code.n, code.k_D, code.k_S
    if t < 0 or t > n:
        raise BadParameters(f"coalition size {t} outside [0, {n}]")
    work = q ** (kD + kS) * comb(n, t)
    if work > budget:
        raise BudgetExceeded(f"q^(kD+kS)*C(n,t) = {work} exceeds {budget}")
    YD = (all_vectors(q, kD) @ code.G_D.array) % q
    YS = (all_vectors(q, kS) @ code.G_S.array) % q
    nx, nz = len(YD), len(YS)
    coalitions = 0
    for size in range(1, t + 1):
        cells = q**size
        weights = q ** np.arange(size, dtype=np.int64)
        uniform = nz // cells if nz % cells == 0 else None
        step = max(1, (1 << 22) // (nz * size))
        for T in itertools.combinations(range(n), size):
            coalitions += 1
            yd, ys = YD[:, T], YS[:, T]
            for start in range(0, nx, step):
                blk = (yd[start:start + step, None, :] + ys[None, :, :]) % q
                idx = blk @ weights
                idx += (np.arange(len(blk)) * cells)[:, None]
                hist = np.bincount(idx.ravel(), minlength=len(blk) * cells).reshape(len(blk), cells)
                if uniform is not None and np.all(hist == uniform):
                    continue
                return _secrecy_violation(code, T, yd, ys, q, coalitions)
    return CheckResult("secrecy_exhaustive", PASS,
                       f"all {coalitions} coalitions of size <= {t} see uniform symbols",
                       {"coalitions": coalitions, "t": t})


def _secrecy_violation(code, T, yd, ys, q, coalitions) -> CheckResult:
    cells = q ** len(T)
    weights = q ** np.arange(len(T), dtype=np.int64)
    X = all_vectors(q, code.k_D)

    def hist(i):
        idx = ((yd[i][None, :] + ys) % q) @ weights
        return np.bincount(idx, minlength=cells)

    h0 = hist(0)
    for i in range(1, len(yd)):
        if not np.array_equal(hist(i), h0):
            return CheckResult(
                "secrecy_exhaustive", FAIL,
                f"coalition {list(T)} distinguishes X={X[0].tolist()} from X'={X[i].tolist()}",
                {"coalitions": coalitions, "coalition": list(T),
                 "x": X[0].tolist(), "x_prime": X[i].tolist()})
    return CheckResult(
        "secrecy_exhaustive", FAIL,
        f"coalition {list(T)} sees a non-uniform distribution",
        {"coalitions": coalitions, "coalition": list(T), "x": X[0].tolist(), "x_prime": None})


def erasure_check(code: "SecureStorageCode", d: int | None = None,
                  budget: int = ERASURE_BUDGET) -> CheckResult:
    """Every set of ``n - d + 1`` nodes must determine all ``k_D + k_S`` symbols."""
    d = code.d if d is None else d
    n, q = code.n, code.field.q
    K = code.k_D + code.k_S
    size = n - d + 1
    if not 1 <= size <= n:
        raise BadParameters(f"distance {d} outside [1, {n}]")
    count = comb(n, size)
    if count > budget:
        raise BudgetExceeded(f"C({n},{size}) = {count} exceeds {budget}")
    G = code.G.array
    tested = 0
    for A in itertools.combinations(range(n), size):
        tested += 1
        if rank_array(G[:, A], q) != K:
            return CheckResult("erasure", FAIL, f"nodes {list(A)} do not determine the data",
                               {"subsets": tested, "subset": list(A)})
    return CheckResult("erasure", PASS, f"all {tested} sets of {size} nodes have full rank",
                       {"subsets": tested})


@dataclass(frozen=True)
class LoadReport:
    histogram: tuple[int, ...]
    worst_gap: int


def load_report(code: "SecureStorageCode") -> LoadReport:
    """Per-node access counts when every file is retrieved once."""
    hist = tuple(int(x) for x in np.count_nonzero(code.B.array, axis=0))
    if not hist:
        return LoadReport((), 0)
    return LoadReport(hist, max(hist) - min(hist))
