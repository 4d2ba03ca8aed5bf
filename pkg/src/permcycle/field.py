"""Exact arithmetic in finite fields F_q of odd order q = p^k.

Elements are identified by their integer encoding ``sum(c_i * p**i)`` where
``c_0, ..., c_{k-1}`` are the coefficients (least degree first) of the
element's representative polynomial modulo the field's modulus.  For prime
fields the encoding is simply the residue.  The encoding order is the
canonical order used for generators, unit pools and enumeration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd, isqrt
from typing import Iterator, Sequence

from .errors import (
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    OrderNotDividing,
    PolynomialSyntaxError,
    ReducibleModulus,
    ZeroInverse,
    ZeroLog,
    ZeroOrder,
)
from .ntheory import divisors, factorize, is_prime, prime_power

__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_prime_field",
    "make_extension_field",
    "field_from_order",
    "is_irreducible",
    "default_modulus",
]


# -- polynomials over F_p as coefficient lists, least degree first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over F_p (b nonzero, trimmed)."""
    r = _trim([c % p for c in a])
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db:
        c = r[-1] * lead_inv % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim(r)
    return r


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """True iff the monic polynomial ``modulus`` has no monic factor of degree <= k/2.

    Exhaustive trial division; intended for small k.
    """
    k = len(modulus) - 1
    if k < 1:
        return False
    for deg in range(1, k // 2 + 1):
        for low in product(range(p), repeat=deg):
            if not _poly_rem(modulus, list(low) + [1], p):
                return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """The monic irreducible of degree k whose low coefficients have the smallest encoding."""
    for enc in range(p**k):
        low = []
        for _ in range(k):
            enc, c = divmod(enc, p)
            low.append(c)
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")  # pragma: no cover


# -- field ------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_{p^k}.

    ``modulus`` holds the k+1 coefficients of the monic defining polynomial,
    least degree first; it is None for prime fields.  Build instances with
    :func:`make_prime_field`, :func:`make_extension_field` or
    :func:`field_from_order`, which validate their arguments.
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    @cached_property
    def q(self) -> int:
        return self.p**self.k

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @cached_property
    def q_minus_1_factors(self) -> tuple[tuple[int, int], ...]:
        return tuple(factorize(self.q - 1).items())

    @cached_property
    def generator(self) -> FieldElement:
        return self.find_generator()

    def __repr__(self) -> str:
        if self.k == 1:
            return f"FieldSpec(q={self.q})"
        return f"FieldSpec(q={self.q}, p={self.p}, k={self.k}, modulus={self.modulus_text()})"

    def modulus_text(self) -> str:
        """Modulus in ``t^2+1`` style, or ``"t"`` for prime fields."""
        if self.modulus is None:
            return "t"
        parts = []
        for i in range(self.k, -1, -1):
            c = self.modulus[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(parts)

    # -- element construction

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Element from an encoding in [0, q-1], a coefficient sequence, or an element."""
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise FieldMismatch(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"encoding {value} outside [0, {self.q - 1}]")
            return FieldElement(self, value)
        coeffs = list(value)
        if len(coeffs) > self.k:
            raise ValueError(f"expected at most {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, self._encode([c % self.p for c in coeffs]))

    def scalar(self, n: int) -> FieldElement:
        """The element n * 1."""
        return FieldElement(self, n % self.p)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        """All q elements in encoding order."""
        for e in range(self.q):
            yield FieldElement(self, e)

    def _encode(self, coeffs: Sequence[int]) -> int:
        enc = 0
        for c in reversed(coeffs):
            enc = enc * self.p + c
        return enc

    def _digits(self, enc: int) -> list[int]:
        out = []
        p = self.p
        for _ in range(self.k):
            enc, c = divmod(enc, p)
            out.append(c)
        return out

    def parse_element(self, text: str) -> FieldElement:
        """Parse element text.

        Accepted forms: an integer ``n`` (meaning n*1), ``enc:N`` (raw encoding),
        ``a0,a1,...`` or ``[a0,a1,...]`` (coefficients, least degree first) and
        ``g^e`` (power of the canonical generator).
        """
        s = text.strip()
        try:
            if s.startswith("[") and s.endswith("]"):
                s = s[1:-1]
                return self([int(c) for c in s.split(",")])
            if s.startswith("enc:"):
                return self(int(s[4:]))
            m = re.fullmatch(r"g\s*\^\s*(-?\d+)", s)
            if m:
                return self.generator ** int(m.group(1))
            if s == "g":
                return self.generator
            if "," in s:
                return self([int(c) for c in s.split(",")])
            return self.scalar(int(s))
        except ValueError as exc:
            raise PolynomialSyntaxError(f"bad element {text!r}: {exc}", 0) from None

    def format_element(self, x: FieldElement) -> str:
        if self.k == 1 or x.value < self.p:
            return str(x.value)
        return f"enc:{x.value}"

    # -- multiplicative structure

    def element_order(self, x: FieldElement) -> int:
        """Multiplicative order, by stripping prime factors from q - 1."""
        x = self(x)
        if x.value == 0:
            raise ZeroOrder("0 has no multiplicative order")
        cached = self._order_cache.get(x.value)
        if cached is not None:
            return cached
        n = self.q - 1
        for prime, exp in self.q_minus_1_factors:
            for _ in range(exp):
                if (x ** (n // prime)).value == 1:
                    n //= prime
                else:
                    break
        self._order_cache[x.value] = n
        return n

    def find_generator(self) -> FieldElement:
        """The primitive element with the smallest encoding."""
        for e in range(1, self.q):
            x = FieldElement(self, e)
            if self.element_order(x) == self.q - 1:
                return x
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    def elements_of_order(self, m: int) -> list[FieldElement]:
        """All elements of multiplicative order exactly m, sorted by encoding."""
        return list(self._order_pool(m))

    def subgroup(self, m: int) -> list[FieldElement]:
        """The subgroup of order m (the elements x with x^m = 1), sorted by encoding."""
        return list(self._subgroup(m))

    def root_of_unity(self, r: int) -> FieldElement:
        """g^((q-1)/r) for the canonical generator g; an element of order r."""
        if r < 1 or (self.q - 1) % r:
            raise OrderNotDividing(f"{r} does not divide q-1 = {self.q - 1}")
        return self.generator ** ((self.q - 1) // r)

    def discrete_log(self, x: FieldElement) -> int:
        """The e in [0, q-2] with g^e = x (baby-step giant-step)."""
        x = self(x)
        if x.value == 0:
            raise ZeroLog("log of 0 is undefined")
        baby, step, giant = self._bsgs
        gamma = x
        for i in range(step + 1):
            j = baby.get(gamma.value)
            if j is not None:
                return (i * step + j) % (self.q - 1)
            gamma = gamma * giant
        raise AssertionError("discrete log not found")  # pragma: no cover

    def divisors_of_order(self) -> list[int]:
        return divisors(self.q - 1)

    # cached helpers; FieldSpec is frozen so these live in the instance __dict__

    @cached_property
    def _bsgs(self) -> tuple[dict[int, int], int, FieldElement]:
        n = self.q - 1
        step = isqrt(n - 1) + 1 if n > 1 else 1
        baby: dict[int, int] = {}
        cur = self.one
        g = self.generator
        for j in range(step):
            baby.setdefault(cur.value, j)
            cur = cur * g
        return baby, step, g ** (-step)

    @cached_property
    def _order_cache(self) -> dict[int, int]:
        return {}

    @cached_property
    def _pools(self) -> dict[tuple[str, int], tuple[FieldElement, ...]]:
        return {}

    def _subgroup(self, m: int) -> tuple[FieldElement, ...]:
        key = ("sub", m)
        if key not in self._pools:
            if m < 1 or (self.q - 1) % m:
                pool: tuple[FieldElement, ...] = ()
            else:
                h = self.generator ** ((self.q - 1) // m)
                elems = []
                cur = self.one
                for _ in range(m):
                    elems.append(cur)
                    cur = cur * h
                pool = tuple(sorted(elems, key=int))
            self._pools[key] = pool
        return self._pools[key]

    def _order_pool(self, m: int) -> tuple[FieldElement, ...]:
        key = ("ord", m)
        if key not in self._pools:
            if m < 1 or (self.q - 1) % m:
                pool: tuple[FieldElement, ...] = ()
            else:
                h = self.generator ** ((self.q - 1) // m)
                pool = tuple(sorted((h**j for j in range(1, m + 1) if gcd(j, m) == 1), key=int))
            self._pools[key] = pool
        return self._pools[key]


class FieldElement:
    """An element of a :class:`FieldSpec`, stored as its integer encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    # -- conversions

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    @property
    def coeffs(self) -> list[int]:
        return self.field._digits(self.value)

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, q={self.field.q})"

    def __str__(self) -> str:
        return self.field.format_element(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and (self.field is other.field or self.field == other.field)
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.q))

    def __bool__(self) -> bool:
        return self.value != 0

    # -- arithmetic

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self!r} and {other!r} live in different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        F = self.field
        if F.k == 1:
            return FieldElement(F, (self.value + b) % F.p)
        da, db = F._digits(self.value), F._digits(b)
        return FieldElement(F, F._encode([(x + y) % F.p for x, y in zip(da, db)]))

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        F = self.field
        if F.k == 1:
            return FieldElement(F, -self.value % F.p)
        return FieldElement(F, F._encode([-c % F.p for c in F._digits(self.value)]))

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self + (-FieldElement(self.field, b))

    def __rsub__(self, other: int) -> FieldElement:
        return (-self) + other

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        F = self.field
        if F.k == 1:
            return FieldElement(F, self.value * b % F.p)
        return FieldElement(F, _ext_mul(F, self.value, b))

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        if self.value == 0:
            raise ZeroInverse("0 has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return self * FieldElement(self.field, b).inv()

    def __rtruediv__(self, other: int) -> FieldElement:
        return self.inv() * other

    def __pow__(self, n: int) -> FieldElement:
        F = self.field
        if n < 0:
            return self.inv() ** (-n)
        if F.k == 1:
            # builtin modular pow is square-and-multiply; 0**0 == 1
            return FieldElement(F, pow(self.value, n, F.p) if F.p > 1 else 0)
        result = 1
        base = self.value
        while n:
            if n & 1:
                result = _ext_mul(F, result, base)
            base = _ext_mul(F, base, base)
            n >>= 1
        return FieldElement(F, result)

    def order(self) -> int:
        return self.field.element_order(self)


def _ext_mul(F: FieldSpec, a: int, b: int) -> int:
    """Product of two encodings in an extension field: poly product mod modulus."""
    if a == 0 or b == 0:
        return 0
    p, k, mod = F.p, F.k, F.modulus
    da, db = F._digits(a), F._digits(b)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(da):
        if x:
            for j, y in enumerate(db):
                prod[i + j] += x * y
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        if c:
            for j in range(k):
                prod[i - k + j] -= c * mod[j]  # type: ignore[index]
    enc = 0
    for c in reversed(prod[:k]):
        enc = enc * p + c % p
    return enc


# -- factories ----------------------------------------------------------------


def _check_char(p: int) -> None:
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported; q must be odd")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def make_prime_field(p: int) -> FieldSpec:
    """F_p for an odd prime p."""
    _check_char(p)
    return FieldSpec(p)


def make_extension_field(p: int, k: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """F_{p^k}, with the given monic modulus or the default (smallest-encoding) one.

    ``modulus`` lists all k+1 coefficients, least degree first.
    """
    _check_char(p)
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if k == 1 and modulus is None:
        return FieldSpec(p)
    if modulus is None:
        mod = default_modulus(p, k)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != k + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}: {tuple(modulus)}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    if k == 1:
        # any monic linear modulus gives the same prime field
        return FieldSpec(p)
    return FieldSpec(p, k, mod)


def field_from_order(q: int) -> FieldSpec:
    """F_q for an odd prime power q, with the default modulus."""
    if q % 2 == 0:
        raise EvenCharacteristic(f"q = {q} is even; only odd q is supported")
    pk = prime_power(q)
    if pk is None:
        raise NotPrime(f"{q} is not a prime power")
    p, k = pk
    return make_prime_field(p) if k == 1 else make_extension_field(p, k)
