"""Capacity, finite-length converse bounds and asymptotic rate curves."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .errors import BadParameters, DomainError

BOUND_KINDS = ("singleton", "hamming", "plotkin", "table")

# Best-known-code lookups quoted for the binary RM(2,4) scheme:
# (q, length, log_q size) -> distance and (q, length, distance) -> log_q size.
REFERENCE_DISTANCE = {(2, 13, 6): 4}
REFERENCE_DIMENSION = {(2, 13, 4): 8}


def entropy_q(q: int, x: float) -> float:
    """q-ary entropy with h(0) = 0 and h(1) = log_q(q - 1)."""
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"entropy argument {x} outside [0, 1]")
    ln_q = math.log(q)
    h = x * math.log(q - 1) / ln_q if q > 2 else 0.0
    if 0.0 < x < 1.0:
        h -= (x * math.log(x) + (1 - x) * math.log1p(-x)) / ln_q
    return h


def inverse_entropy(q: int, y: float, tol: float = 1e-15) -> float:
    """The x in [0, (q-1)/q] with h_q(x) = y, by bisection."""
    if not 0.0 <= y <= 1.0:
        raise DomainError(f"inverse entropy argument {y} outside [0, 1]")
    lo, hi = 0.0, (q - 1) / q
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if entropy_q(q, mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def capacity(k_D: int, t: int) -> Fraction:
    """Highest storage rate ``k_D / (k_D + t)`` at access complexity ``t + 1``."""
    if k_D < 1 or t < 0:
        raise BadParameters(f"need k_D >= 1 and t >= 0, got k_D={k_D}, t={t}")
    return Fraction(k_D, k_D + t)


def sphere_volume(q: int, n: int, radius: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(max(radius, -1) + 1))


def plotkin_size(q: int, n: int, d: int) -> int:
    """Plotkin upper bound on the size of a q-ary code of length n, distance d.

    For ``d <= theta n`` the bound is applied to a shortened length ``m`` with
    ``d > theta m`` and multiplied by ``q**(n - m)``.
    """
    theta = Fraction(q - 1, q)
    if d > theta * n:
        return math.floor(d / (d - theta * n))
    m = math.ceil(d / theta) - 1
    return q ** (n - m) * math.floor(d / (d - theta * m))


def _size_bound(q: int, length: int, d: int, kind: str) -> int:
    if kind == "singleton":
        return q ** (length - d + 1)
    if kind == "hamming":
        return q**length // sphere_volume(q, length, (d - 1) // 2)
    if kind == "plotkin":
        return plotkin_size(q, length, d)
    raise BadParameters(f"unknown bound kind {kind!r}")


def distance_upper(q: int, n: int, t: int, k_D: int, bound_kind: str = "singleton") -> int:
    """Largest distance allowed for a scheme whose unseen ``n - t`` positions
    must carry ``q**k_D`` distinct words."""
    length = n - t
    if q < 2 or k_D < 1 or t < 0 or length < k_D:
        raise BadParameters(f"infeasible parameters q={q}, n={n}, t={t}, k_D={k_D}")
    if bound_kind == "table":
        try:
            return REFERENCE_DISTANCE[(q, length, k_D)]
        except KeyError:
            raise BadParameters(f"no reference value for (q={q}, n={length}, k={k_D})") from None
    if bound_kind == "singleton":
        return length - k_D + 1
    size = q**k_D
    best = None
    for d in range(1, length + 1):
        if size <= _size_bound(q, length, d, bound_kind):
            best = d
    if best is None:
        raise BadParameters(f"{bound_kind} bound admits no distance for these parameters")
    return best


def dimension_upper(q: int, n: int, t: int, d: int, bound_kind: str = "singleton") -> int:
    """``floor(log_q M*)`` for the chosen size bound ``M*(n - t, d)``."""
    length = n - t
    if q < 2 or t < 0 or not 1 <= d <= length:
        raise BadParameters(f"infeasible parameters q={q}, n={n}, t={t}, d={d}")
    if bound_kind == "table":
        try:
            return REFERENCE_DIMENSION[(q, length, d)]
        except KeyError:
            raise BadParameters(f"no reference value for (q={q}, n={length}, d={d})") from None
    size = _size_bound(q, length, d, bound_kind)
    k = 0
    while q ** (k + 1) <= size:
        k += 1
    return k


class RandomCodingPoint(NamedTuple):
    rate: float
    access_coefficient: float


def random_coding_rate(q: int, tau: float, delta: float) -> RandomCodingPoint:
    """Achievable rate ``max(0, 1 - h_q(delta) - h_q(tau))`` and the access
    complexity per node ``h_q(tau)`` of the random construction."""
    h_tau = entropy_q(q, tau)
    return RandomCodingPoint(max(0.0, 1.0 - entropy_q(q, delta) - h_tau), h_tau)


def mrrw_upper_rate(tau: float, delta: float) -> float:
    """Binary upper bound from the first MRRW bound on the unseen positions."""
    if not 0.0 <= tau < 1.0:
        raise DomainError(f"tau={tau} outside [0, 1)")
    edge = (1.0 - tau) / 2
    if delta < 0.0 or delta > edge * (1 + 1e-12):
        raise DomainError(f"delta={delta} outside [0, {edge}]")
    x = min(delta / (1.0 - tau), 0.5)
    arg = max(0.0, 0.5 - math.sqrt(x * (1.0 - x)))
    return (1.0 - tau) * entropy_q(2, arg)


@dataclass
class BoundCurve:
    q: int
    tau: float
    samples: list[tuple[float, float, float | None]] = field(default_factory=list)
    endpoints: dict[str, tuple[float, float] | None] = field(default_factory=dict)

    def to_csv(self) -> str:
        def pt(p):
            return "none" if p is None else f"({p[0]!r};{p[1]!r})"

        head = "# " + ",".join(f"{k}={pt(self.endpoints.get(k))}" for k in "ABCD")
        lines = [head, "delta,R_lower,R_upper"]
        for delta, lower, upper in self.samples:
            lines.append(f"{delta!r},{lower!r},{'' if upper is None else repr(upper)}")
        return "\n".join(lines) + "\n"


def sample_curves(q: int, tau: float, steps: int) -> BoundCurve:
    """Lower (random coding) and upper (MRRW, binary only) rate curves on a
    uniform delta grid over ``[0, (1 - tau)/2]`` with the analytic endpoints."""
    if steps < 2:
        raise DomainError(f"need at least 2 grid points, got {steps}")
    if not 0.0 <= tau < 1.0:
        raise DomainError(f"tau={tau} outside [0, 1)")
    edge = (1.0 - tau) / 2
    binary = q == 2
    samples = []
    for i in range(steps):
        delta = edge * i / (steps - 1)
        lower = random_coding_rate(q, tau, delta).rate
        upper = mrrw_upper_rate(tau, delta) if binary else None
        samples.append((delta, lower, upper))
    h_tau = entropy_q(q, tau)
    endpoints = {
        "A": (0.0, 1.0 - tau) if binary else None,
        "B": (0.0, 1.0 - h_tau),
        "C": (edge, 0.0) if binary else None,
        "D": (inverse_entropy(q, 1.0 - h_tau), 0.0) if h_tau <= 1.0 else None,
    }
    return BoundCurve(q, tau, samples, endpoints)
