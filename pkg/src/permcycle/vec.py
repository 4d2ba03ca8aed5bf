"""Field arithmetic on numpy arrays of element encodings.

Extension-field products go through the digit (coefficient) representation
and explicit reduction by the modulus, so no log tables or generator are
involved: these routines are an independent check on everything built from g.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import FieldSpec

__all__ = [
    "to_digits", "from_digits", "add", "mul", "power", "power_table", "elements",
    "add_table", "mul_table", "TABLE_LIMIT",
]

# largest q for which full q x q addition/multiplication tables are built
TABLE_LIMIT = 2048


def to_digits(F: FieldSpec, a: np.ndarray) -> np.ndarray:
    """Shape (k, *a.shape) array of base-p digits, least significant first."""
    a = np.asarray(a, dtype=np.int64)
    out = np.empty((F.k,) + a.shape, dtype=np.int64)
    for i in range(F.k):
        a, out[i] = np.divmod(a, F.p)
    return out


def from_digits(F: FieldSpec, digits: np.ndarray) -> np.ndarray:
    enc = np.zeros(digits.shape[1:], dtype=np.int64)
    for i in range(F.k - 1, -1, -1):
        enc = enc * F.p + digits[i]
    return enc


def add(F: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.k == 1:
        return (np.asarray(a, dtype=np.int64) + b) % F.p
    return from_digits(F, (to_digits(F, a) + to_digits(F, b)) % F.p)


def mul(F: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.k == 1:
        return np.asarray(a, dtype=np.int64) * b % F.p
    p, k = F.p, F.k
    da, db = to_digits(F, a), to_digits(F, b)
    shape = np.broadcast_shapes(da.shape[1:], db.shape[1:])
    prod = np.zeros((2 * k - 1,) + shape, dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[i + j] += da[i] * db[j]
        prod %= p
    mod = F.modulus
    for i in range(2 * k - 2, k - 1, -1):
        c = prod[i] % p
        for j in range(k):
            if mod[j]:
                prod[i - k + j] -= c * mod[j]
        prod[i - k : i] %= p
    return from_digits(F, prod[:k] % p)


def power(F: FieldSpec, a: np.ndarray, n: int) -> np.ndarray:
    """Elementwise a**n by square-and-multiply (0**0 == 1)."""
    base = np.asarray(a, dtype=np.int64)
    result = np.ones_like(base)
    while n:
        if n & 1:
            result = mul(F, result, base)
        n >>= 1
        if n:
            base = mul(F, base, base)
    return result


def elements(F: FieldSpec) -> np.ndarray:
    return np.arange(F.q, dtype=np.int64)


@lru_cache(maxsize=256)
def power_table(F: FieldSpec, n: int) -> np.ndarray:
    """Read-only table of x**n indexed by the encoding of x."""
    t = power(F, elements(F), n)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=8)
def mul_table(F: FieldSpec) -> np.ndarray:
    """q x q product table (from the digit arithmetic above)."""
    x = elements(F)
    t = mul(F, x[:, None], x[None, :]).astype(np.int32)
    t.setflags(write=False)
    return t


@lru_cache(maxsize=8)
def add_table(F: FieldSpec) -> np.ndarray:
    x = elements(F)
    t = add(F, x[:, None], x[None, :]).astype(np.int32)
    t.setflags(write=False)
    return t
