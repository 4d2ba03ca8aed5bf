"""Integer helpers: primality, factorization, divisors, totient.

Everything here is trial division; fields in this package are desk-sized.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``, primes ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    divs = [1]
    for prime, exp in factorize(n).items():
        divs = [d * prime**e for d in divs for e in range(exp + 1)]
    return sorted(divs)


@lru_cache(maxsize=4096)
def euler_phi(n: int) -> int:
    """Euler's totient, from the factorization of ``n``.

    >>> euler_phi(12), euler_phi(1), euler_phi(60)
    (4, 1, 16)
    """
    result = n
    for prime in factorize(n):
        result = result // prime * (prime - 1)
    return result


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime, or None."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k
