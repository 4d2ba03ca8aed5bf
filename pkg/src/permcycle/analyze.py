"""Exhaustive analysis of polynomial maps: the ground truth for every construction.

A polynomial is evaluated at all q field elements into a :class:`PermTable`;
bijectivity, cycle type and fixed points are read off that table.  The
batched helpers at the bottom do the same for many polynomials at once and
are what the family enumerations use.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from numba import njit

from . import vec
from .construct import Construction
from .cycletype import CycleType
from .errors import (
    BadDivisibility,
    FieldMismatch,
    NotAPermutation,
    NotCosetMultiplicative,
    UnitOutsideSubgroup,
)
from .field import FieldElement, FieldSpec
from .poly import SparsePolynomial

__all__ = [
    "PermTable",
    "CosetDecomposition",
    "VerificationReport",
    "eval_table",
    "table_from_map",
    "is_permutation",
    "cycle_type",
    "fixed_points",
    "compose_is_identity",
    "coset_decomposition",
    "coset_multipliers",
    "multiplication_cycle_type",
    "verify_poly",
    "verify_construction",
    "batch_images",
    "batch_cycle_types",
    "verify_constructions",
    "worker_count",
]


@dataclass(frozen=True, eq=False)
class PermTable:
    """``image[e]`` is the encoding of f(element e)."""

    field: FieldSpec
    image: np.ndarray

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermTable):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.image, other.image)


@dataclass(frozen=True)
class CosetDecomposition:
    d: int
    cosets: tuple[frozenset[int], ...]


def eval_table(f: SparsePolynomial) -> PermTable:
    F = f.field
    return PermTable(F, _eval_terms(F, f.terms))


def _eval_terms(F: FieldSpec, terms) -> np.ndarray:
    image = np.zeros(F.q, dtype=np.int64)
    for e, c in terms:
        image = vec.add(F, image, vec.mul(F, np.int64(c.value), vec.power_table(F, e)))
    return image


def table_from_map(F: FieldSpec, fn) -> PermTable:
    """Table of an arbitrary function on elements (handy for reference maps)."""
    return PermTable(F, np.array([fn(x).value for x in F.elements()], dtype=np.int64))


def is_permutation(t: PermTable) -> bool:
    q = t.field.q
    img = t.image
    if len(img) != q or img.min(initial=0) < 0 or img.max(initial=0) >= q:
        return False
    seen = np.zeros(q, dtype=bool)
    seen[img] = True
    return bool(seen.all())


def cycle_type(t: PermTable) -> CycleType:
    """Cycle type by walking each unvisited point around its cycle."""
    if not is_permutation(t):
        raise NotAPermutation("table is not a bijection")
    img = t.image.tolist()
    visited = [False] * len(img)
    lengths: dict[int, int] = {}
    for start in range(len(img)):
        if visited[start]:
            continue
        n = 0
        j = start
        while not visited[j]:
            visited[j] = True
            j = img[j]
            n += 1
        lengths[n] = lengths.get(n, 0) + 1
    return CycleType.from_counts(lengths)


def fixed_points(t: PermTable) -> list[int]:
    return np.flatnonzero(t.image == np.arange(len(t.image))).tolist()


def compose_is_identity(t1: PermTable, t2: PermTable) -> bool:
    """True iff t1 o t2 and t2 o t1 are both the identity."""
    if t1.field != t2.field:
        raise FieldMismatch("tables over different fields")
    if not (is_permutation(t1) and is_permutation(t2)):
        return False
    ident = np.arange(t1.field.q)
    return bool(np.array_equal(t1.image[t2.image], ident) and np.array_equal(t2.image[t1.image], ident))


def coset_decomposition(F: FieldSpec, d: int) -> CosetDecomposition:
    """The cosets H_i = g^i H_0 (|H_0| = (q-1)/d) as sets of encodings."""
    if d < 1 or (F.q - 1) % d:
        raise BadDivisibility(f"d = {d} does not divide q-1 = {F.q - 1}")
    return CosetDecomposition(d, tuple(frozenset(x.value for x in coset) for coset in _coset_walk(F, d)))


def _coset_walk(F: FieldSpec, d: int) -> list[list[FieldElement]]:
    """[[g^(i+dj) for j < m] for i < d], by stepping with g and g^d."""
    m = (F.q - 1) // d
    g = F.generator
    step = g**d
    out = []
    head = F.one
    for _ in range(d):
        coset = []
        x = head
        for _ in range(m):
            coset.append(x)
            x = x * step
        out.append(coset)
        head = head * g
    return out


def coset_multipliers(f: SparsePolynomial, d: int) -> list[FieldElement]:
    """For each coset H_i, the constant value of f(x)/x on it."""
    F = f.field
    if d < 1 or (F.q - 1) % d:
        raise BadDivisibility(f"d = {d} does not divide q-1 = {F.q - 1}")
    image = eval_table(f).image
    out = []
    for i, coset in enumerate(_coset_walk(F, d)):
        ratios = {(F(int(image[x.value])) * x.inv()).value for x in coset}
        if len(ratios) != 1:
            raise NotCosetMultiplicative(f"f(x)/x takes {len(ratios)} values on H_{i}")
        out.append(F(ratios.pop()))
    return out


def multiplication_cycle_type(F: FieldSpec, u: FieldElement | int, M: int) -> CycleType:
    """Cycle type of x -> u*x on the subgroup of order M."""
    if M < 1 or (F.q - 1) % M:
        raise BadDivisibility(f"M = {M} does not divide q-1 = {F.q - 1}")
    u = F(u)
    if u.value == 0 or (u**M).value != 1:
        raise UnitOutsideSubgroup(f"{u} is not in the subgroup of order {M}")
    enc, pos = _subgroup_index(F, M)
    # the map as a permutation of positions 0..M-1 within the sorted subgroup
    image = pos[vec.mul(F, np.int64(u.value), enc)]
    (ct,) = batch_cycle_types(image[None, :])
    return ct


@lru_cache(maxsize=64)
def _subgroup_index(F: FieldSpec, M: int) -> tuple[np.ndarray, np.ndarray]:
    enc = np.array([x.value for x in F.subgroup(M)], dtype=np.int64)
    pos = np.full(F.q, -1, dtype=np.int64)
    pos[enc] = np.arange(M)
    return enc, pos


# -- verification reports -------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    is_permutation: bool
    cycle_type: CycleType | None
    fixed_points: tuple[int, ...]
    matches_predicted: bool | None
    inverse_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return self.is_permutation and self.matches_predicted is not False and self.inverse_ok is not False

    def to_json(self) -> dict:
        out = {
            "is_permutation": self.is_permutation,
            "cycle_type": str(self.cycle_type) if self.cycle_type else None,
            "fixed_points": list(self.fixed_points),
            "matches_predicted": self.matches_predicted,
        }
        if self.inverse_ok is not None:
            out["inverse_ok"] = self.inverse_ok
        return out


def verify_poly(f: SparsePolynomial, expected: CycleType | None = None) -> VerificationReport:
    t = eval_table(f)
    perm = is_permutation(t)
    ct = cycle_type(t) if perm else None
    return VerificationReport(
        perm, ct, tuple(fixed_points(t)), None if expected is None else (ct == expected)
    )


def verify_construction(c: Construction) -> VerificationReport:
    t = eval_table(c.poly)
    perm = is_permutation(t)
    ct = cycle_type(t) if perm else None
    inverse_ok = compose_is_identity(t, eval_table(c.inverse_poly))
    return VerificationReport(perm, ct, tuple(fixed_points(t)), ct == c.predicted, inverse_ok)


# -- batched path -----------------------------------------------------------------


def worker_count() -> int:
    """Workers from PERMCYCLE_THREADS (0 or unset = one per CPU)."""
    raw = os.environ.get("PERMCYCLE_THREADS", "0").strip() or "0"
    n = int(raw)
    return n if n > 0 else (os.cpu_count() or 1)


def batch_images(F: FieldSpec, polys: Sequence[SparsePolynomial]) -> np.ndarray:
    """(len(polys), q) array of value tables."""
    exps = sorted({e for f in polys for e, _ in f.terms})
    col = {e: i for i, e in enumerate(exps)}
    coeffs = np.zeros((len(polys), len(exps)), dtype=np.int64)
    for r, f in enumerate(polys):
        for e, c in f.terms:
            coeffs[r, col[e]] = c.value
    if not exps:
        return np.zeros((len(polys), F.q), dtype=np.int64)
    powers = np.stack([vec.power_table(F, e) for e in exps])
    p = F.p
    if F.k == 1 and len(exps) * (p - 1) ** 2 < 2**62:
        return coeffs @ powers % p
    if F.q <= vec.TABLE_LIMIT:
        mt, at = vec.mul_table(F), vec.add_table(F)
        image = mt[coeffs[:, 0, None], powers[0][None, :]]
        for i in range(1, len(exps)):
            image = at[image, mt[coeffs[:, i, None], powers[i][None, :]]]
        return image.astype(np.int64)
    image = np.zeros((len(polys), F.q), dtype=np.int64)
    for i in range(len(exps)):
        image = vec.add(F, image, vec.mul(F, coeffs[:, i, None], powers[i][None, :]))
    return image


@njit(cache=True, nogil=True)
def _cycle_histograms(images, hist, ok):  # pragma: no cover - compiled
    n_rows, q = images.shape
    seen = np.zeros(q, np.uint8)
    for r in range(n_rows):
        seen[:] = 0
        good = True
        for i in range(q):
            v = images[r, i]
            if v < 0 or v >= q or seen[v]:
                good = False
                break
            seen[v] = 1
        ok[r] = good
        if not good:
            continue
        seen[:] = 0
        for i in range(q):
            if seen[i] == 0:
                n = 0
                j = i
                while seen[j] == 0:
                    seen[j] = 1
                    j = images[r, j]
                    n += 1
                hist[r, n] += 1


def batch_cycle_types(images: np.ndarray) -> list[CycleType | None]:
    """Cycle type of each row, or None for rows that are not bijections."""
    images = np.ascontiguousarray(images, dtype=np.int64)
    n, q = images.shape
    hist = np.zeros((n, q + 1), dtype=np.int64)
    ok = np.zeros(n, dtype=np.bool_)
    _cycle_histograms(images, hist, ok)
    rows, lengths = np.nonzero(hist)
    mults = hist[rows, lengths].tolist()
    parts: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for r, ln, mu in zip(rows.tolist(), lengths.tolist(), mults):
        parts[r].append((ln, mu))
    return [CycleType(tuple(pt)) if good else None for pt, good in zip(parts, ok.tolist())]


def _verify_chunk(F: FieldSpec, chunk: Sequence[Construction], check_inverse: bool) -> list[bool]:
    images = batch_images(F, [c.poly for c in chunk])
    types = batch_cycle_types(images)
    good = [ct is not None and ct == c.predicted for ct, c in zip(types, chunk)]
    if check_inverse:
        inv_images = batch_images(F, [c.inverse_poly for c in chunk])
        ident = np.arange(F.q)
        for r in range(len(chunk)):
            if good[r]:
                good[r] = bool(np.array_equal(inv_images[r][images[r]], ident))
    return good


def verify_constructions(
    constructions: Sequence[Construction],
    check_inverse: bool = True,
    workers: int | None = None,
) -> list[bool]:
    """Per construction: bijective, cycle type == predicted, and (optionally) inverse composes to identity.

    All constructions must share one field.  Chunks may run on worker
    threads; results come back in input order.
    """
    if not constructions:
        return []
    F = constructions[0].field
    if any(c.field != F for c in constructions):
        raise FieldMismatch("constructions span several fields")
    rows = max(1, (1 << 21) // F.q)
    chunks = [constructions[i : i + rows] for i in range(0, len(constructions), rows)]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(chunks) == 1:
        results = [_verify_chunk(F, ch, check_inverse) for ch in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda ch: _verify_chunk(F, ch, check_inverse), chunks))
    return [ok for part in results for ok in part]
