"""Enumerating and counting whole families of constructions over a field."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, permutations, product
from typing import Iterable, Iterator

from .analyze import verify_constructions
from .construct import (
    BIN,
    CYCLO,
    GEOM_SUM,
    TRI,
    Construction,
    construct_bin,
    construct_cyclotomic,
    construct_geom_sum,
    construct_tri,
)
from .cycletype import CycleType
from .errors import BadDivisibility, BadResidue, IndexNotMultipleOf3, OddIndex
from .field import FieldSpec
from .ntheory import divisors, euler_phi

__all__ = [
    "euler_phi",
    "FamilyRow",
    "FamilyCount",
    "family_r",
    "factor_pairs",
    "unit_tuples",
    "enumerate_family",
    "closed_form_count",
    "count_family",
    "verify_stream",
    "verify_family",
    "reproduce_table",
    "TABLE_COLUMNS",
]

TABLE_COLUMNS = ("family", "m", "d", "cycle_type", "count", "verified")


@dataclass(frozen=True)
class FamilyRow:
    family: str
    m: int
    d: int
    cycle_type: CycleType
    count: int
    verified: bool
    closed_form: int
    distinct: int | None = None

    def to_json(self) -> dict:
        out = {
            "family": self.family,
            "m": self.m,
            "d": self.d,
            "cycle_type": str(self.cycle_type),
            "count": self.count,
            "verified": self.verified,
            "closed_form": self.closed_form,
        }
        if self.distinct is not None:
            out["distinct"] = self.distinct
        return out

    def tsv_fields(self) -> list[str]:
        fields = [self.family, str(self.m), str(self.d), str(self.cycle_type), str(self.count),
                  "true" if self.verified else "false"]
        if self.distinct is not None:
            fields.append(str(self.distinct))
        return fields


@dataclass(frozen=True)
class FamilyCount:
    closed_form: int
    exhaustive: int

    @property
    def agree(self) -> bool:
        return self.closed_form == self.exhaustive


def family_r(family: str, r: int | None = None) -> int:
    """Number of coset classes the family distinguishes (CYCLO needs r)."""
    if family == BIN:
        return 2
    if family == TRI:
        return 3
    if family == CYCLO:
        if r is None or r < 2:
            raise BadDivisibility("CYCLO needs r >= 2")
        return r
    if family == GEOM_SUM:
        return 1
    raise ValueError(f"unknown family {family!r}")


def factor_pairs(F: FieldSpec, r: int) -> list[tuple[int, int]]:
    """All (m, d) with m*d = q-1 and r | d, ascending in m."""
    n = F.q - 1
    return [(m, n // m) for m in divisors(n) if (n // m) % r == 0]


def _check_family_params(F: FieldSpec, family: str, m: int, r: int) -> int:
    if m < 1 or (F.q - 1) % m:
        raise BadDivisibility(f"m = {m} does not divide q-1 = {F.q - 1}")
    d = (F.q - 1) // m
    if family == TRI and F.q % 3 != 1:
        raise BadResidue(f"q = {F.q} is not 1 mod 3")
    if d % r:
        exc = {BIN: OddIndex, TRI: IndexNotMultipleOf3}.get(family, BadDivisibility)
        raise exc(f"d = {d} is not a multiple of {r}")
    return d


def unit_tuples(F: FieldSpec, family: str, m: int, r: int | None = None, mixed: bool = False):
    """The unit tuples a family is built from, in lexicographic encoding order.

    Equal-order pools draw every unit from the elements of order exactly m;
    the mixed pool draws from all of H_0.  BIN and GEOM_SUM use ordered pairs
    of distinct units (GEOM_SUM additionally needs equal orders); TRI and
    CYCLO use r-tuples that are not all equal.
    """
    rr = family_r(family, r)
    _check_family_params(F, family, m, rr)
    pool = F.subgroup(m) if mixed else F.elements_of_order(m)
    if family == BIN:
        yield from permutations(pool, 2)
    elif family == GEOM_SUM:
        if not mixed:
            yield from permutations(pool, 2)
        else:
            orders = {x.value: F.element_order(x) for x in pool}
            for u, v in permutations(pool, 2):
                if orders[u.value] == orders[v.value]:
                    yield (u, v)
    else:
        for tup in product(pool, repeat=rr):
            if any(x != tup[0] for x in tup):
                yield tup


def enumerate_family(
    F: FieldSpec, family: str, m: int, r: int | None = None, mixed: bool = False
) -> Iterator[Construction]:
    """Every construction of the family for H_0 of order m, deterministic order."""
    if family == BIN:
        build = lambda t: construct_bin(F, m, *t)  # noqa: E731
    elif family == TRI:
        build = lambda t: construct_tri(F, m, *t)  # noqa: E731
    elif family == CYCLO:
        build = lambda t: construct_cyclotomic(F, r, m, t)  # noqa: E731
    elif family == GEOM_SUM:
        build = lambda t: construct_geom_sum(F, m, *t)  # noqa: E731
    else:
        raise ValueError(f"unknown family {family!r}")
    for tup in unit_tuples(F, family, m, r, mixed):
        yield build(tup)


def closed_form_count(F: FieldSpec, family: str, m: int, r: int | None = None, mixed: bool = False) -> int:
    """Predicted family size.

    Equal-order pools: phi(m)(phi(m)-1) for pairs, phi(m)^r - phi(m) for
    r-tuples.  Mixed pools: m(m-1) and m^r - m; GEOM_SUM pairs by order.
    """
    rr = family_r(family, r)
    if mixed:
        if family == GEOM_SUM:
            return sum(euler_phi(k) * (euler_phi(k) - 1) for k in divisors(m))
        if family == BIN:
            return m * (m - 1)
        return m**rr - m
    phi = euler_phi(m)
    if family in (BIN, GEOM_SUM):
        return phi * (phi - 1)
    return phi**rr - phi


def count_family(F: FieldSpec, family: str, m: int, r: int | None = None, mixed: bool = False) -> FamilyCount:
    closed = closed_form_count(F, family, m, r, mixed)
    exhaustive = sum(1 for _ in enumerate_family(F, family, m, r, mixed))
    return FamilyCount(closed, exhaustive)


def verify_stream(
    constructions: Iterable[Construction], chunk: int = 4096, check_inverse: bool = True
) -> Iterator[tuple[Construction, bool]]:
    """Verify a stream chunk by chunk, yielding (construction, ok) in stream order."""
    it = iter(constructions)
    while batch := list(islice(it, chunk)):
        yield from zip(batch, verify_constructions(batch, check_inverse=check_inverse))


@dataclass(frozen=True)
class FamilyVerification:
    count: int
    failures: tuple[Construction, ...]
    distinct: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_family(
    F: FieldSpec,
    family: str,
    m: int,
    r: int | None = None,
    mixed: bool = False,
    check_inverse: bool = True,
    distinct: bool = False,
) -> FamilyVerification:
    """Enumerate a family and oracle-check every member without holding it in memory."""
    count = 0
    failures = []
    seen = set() if distinct else None
    for c, ok in verify_stream(enumerate_family(F, family, m, r, mixed), check_inverse=check_inverse):
        count += 1
        if not ok:
            failures.append(c)
        if seen is not None:
            seen.add(c.poly.terms)
    return FamilyVerification(count, tuple(failures), None if seen is None else len(seen))


def _family_row(F: FieldSpec, family: str, m: int, d: int, verify: bool, distinct: bool) -> FamilyRow:
    if verify:
        result = verify_family(F, family, m, distinct=distinct)
        if not result.ok:
            bad = [str(c.poly) for c in result.failures[:3]]
            raise AssertionError(f"{family} m={m}: {len(result.failures)} members failed verification, e.g. {bad}")
        count, n_distinct = result.count, result.distinct
    else:
        count, n_distinct = 0, None
        seen = set() if distinct else None
        for c in enumerate_family(F, family, m):
            count += 1
            if seen is not None:
                seen.add(c.poly.terms)
        if seen is not None:
            n_distinct = len(seen)
    return FamilyRow(
        family, m, d,
        cycle_type=CycleType.from_counts({1: 1, m: d}),
        count=count,
        verified=verify,
        closed_form=closed_form_count(F, family, m),
        distinct=n_distinct,
    )


def reproduce_table(F: FieldSpec, verify: bool = True, distinct: bool = False) -> list[FamilyRow]:
    """Binomial and trinomial families of cycle type 1+m^d over F.

    A row is emitted for each (m, d) with r | d (r = 2 for binomials, 3 for
    trinomials) and phi(m) >= r; rows with no members are dropped.
    """
    rows: list[FamilyRow] = []
    for family in (BIN, TRI):
        r = family_r(family)
        if family == TRI and F.q % 3 != 1:
            continue
        for m, d in factor_pairs(F, r):
            if euler_phi(m) < r:
                continue
            row = _family_row(F, family, m, d, verify, distinct)
            if row.count:
                rows.append(row)
    return rows
