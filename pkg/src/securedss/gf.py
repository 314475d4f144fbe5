"""Prime field arithmetic GF(q).

Elements are stored as plain integers in ``[0, q)`` inside matrices; the
:class:`FieldElement` wrapper exists for scalar work where operator syntax
reads better.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ModulusTooLarge, NonPrimeModulus

MAX_MODULUS = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(q: int) -> int:
    if q == 2:
        return 1
    order = q - 1
    factors = _prime_factors(order)
    for g in range(2, q):
        if all(pow(g, order // p, q) != 1 for p in factors):
            return g
    raise AssertionError(f"no primitive root mod {q}")  # unreachable for primes


@dataclass(frozen=True)
class Field:
    """The prime field GF(q) together with its smallest primitive element."""

    q: int
    alpha: int = dc_field(init=False, compare=False)
    exp_table: tuple[int, ...] = dc_field(init=False, compare=False, repr=False)
    log_table: tuple[int, ...] = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        q = self.q
        if q > MAX_MODULUS:
            raise ModulusTooLarge(f"q={q} exceeds the cap {MAX_MODULUS}")
        if not is_prime(q):
            raise NonPrimeModulus(f"q={q} is not prime")
        alpha = smallest_primitive_root(q)
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = exp[i - 1] * alpha % q
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "exp_table", tuple(exp))
        object.__setattr__(self, "log_table", tuple(log))

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(int(value) % self.q, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.q)]

    # integer-level helpers used by the linear algebra code

    def exp(self, k: int) -> int:
        """alpha**k for any integer k (negative allowed)."""
        if self.q == 2:
            return 1
        return self.exp_table[k % (self.q - 1)]

    def log(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise DivisionByZero("log(0) is undefined")
        return self.log_table[x]

    def inv(self, x: int) -> int:
        x %= self.q
        if x == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return pow(x, self.q - 2, self.q)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_new(q: int) -> Field:
    """Build (and memoise) GF(q)."""
    return Field(q)


Operand = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: Field

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.q
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(v % self.field.q, self.field)

    def __add__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other: Operand):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __truediv__(self, other: Operand):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * self.field.inv(o))

    def __rtruediv__(self, other: Operand):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * self.field.inv(self.value))

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return self._wrap(pow(self.value, k, self.field.q))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.q))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.q})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inv()
