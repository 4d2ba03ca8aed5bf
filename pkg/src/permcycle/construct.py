"""Permutation polynomials of prescribed cycle type.

Every construction here acts on F_q^* coset by coset.  With q - 1 = m*d,
H_0 the subgroup of order m and H_i = g^i H_0, the polynomial multiplies
each H_i by a unit of H_0 chosen according to i; such a map preserves every
coset, so it permutes F_q and its cycle type follows from the orders of the
units.  The families differ in how the unit is chosen:

* BIN      a x^((q+1)/2) + b x                          u on odd i, v on even i
* TRI      a x^((2q+1)/3) + b x^((q+2)/3) + c x        u, v, w by i mod 3
* CYCLO    x G(x^((q-1)/r)), G of degree < r           u_(i mod r)
* GEOM_SUM a (x + x^(m+1) + ... + x^((d-1)m+1)) + v x  u on H_0, v elsewhere
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from .cycletype import CycleType
from .errors import (
    AllUnitsEqual,
    BadDivisibility,
    BadResidue,
    EqualUnits,
    IndexNotMultipleOf3,
    OddIndex,
    OrderMismatch,
    UnitOutsideSubgroup,
)
from .field import FieldElement, FieldSpec
from .ntheory import euler_phi
from .poly import SparsePolynomial, canonicalize

__all__ = [
    "BIN",
    "TRI",
    "CYCLO",
    "GEOM_SUM",
    "FAMILIES",
    "Construction",
    "predicted_cycle_type",
    "construct_bin",
    "construct_tri",
    "vandermonde_coeffs",
    "construct_cyclotomic",
    "construct_geom_sum",
    "inverse_construction",
]

BIN = "BIN"
TRI = "TRI"
CYCLO = "CYCLO"
GEOM_SUM = "GEOM_SUM"
FAMILIES = (BIN, TRI, CYCLO, GEOM_SUM)


@dataclass(frozen=True)
class Construction:
    """A constructed permutation polynomial together with how it was built.

    ``units`` are in caller order: (u, v) for BIN and GEOM_SUM, (u, v, w) for
    TRI, (u_0, ..., u_{r-1}) for CYCLO.  ``coset_units`` gives the multiplier
    used on H_i as ``coset_units[i % len(coset_units)]``.
    """

    field: FieldSpec
    family: str
    m: int
    d: int
    r: int
    units: tuple[FieldElement, ...]
    unit_orders: tuple[int, ...]
    poly: SparsePolynomial
    predicted: CycleType
    phi_condition: bool = dc_field(compare=False)

    @cached_property
    def inverse_poly(self) -> SparsePolynomial:
        inv_units = tuple(u.inv() for u in self.units)
        return _FAMILY_TERMS[self.family](self.field, self.m, self.d, self.r, inv_units)

    @property
    def term_count(self) -> int:
        return self.poly.term_count

    @property
    def coset_units(self) -> tuple[FieldElement, ...]:
        if self.family == BIN:
            u, v = self.units
            return (v, u)
        if self.family == GEOM_SUM:
            u, v = self.units
            return (u,) + (v,) * (self.d - 1)
        return self.units

    def multiplier(self, coset: int) -> FieldElement:
        """The unit this construction multiplies H_coset by."""
        cu = self.coset_units
        return cu[coset % len(cu)]

    def to_json(self) -> dict:
        F = self.field
        return {
            "q": F.q,
            "p": F.p,
            "k": F.k,
            "modulus": list(F.modulus) if F.modulus else None,
            "family": self.family,
            "r": self.r,
            "m": self.m,
            "d": self.d,
            "units": [u.value for u in self.units],
            "unit_orders": list(self.unit_orders),
            "poly": str(self.poly),
            "poly_terms": self.poly.to_json()["terms"],
            "inverse_poly": str(self.inverse_poly),
            "inverse_poly_terms": self.inverse_poly.to_json()["terms"],
            "predicted_cycle_type": str(self.predicted),
            "term_count": self.term_count,
            "phi_condition": self.phi_condition,
        }


def predicted_cycle_type(q: int, d: int, r: int, unit_orders: Sequence[int], m: int) -> CycleType:
    """Cycle type of the map multiplying H_i by a unit of order ``unit_orders[i % r]``.

    Each residue class mod r holds d/r cosets of size m; on one coset a unit
    of order m_i makes m/m_i cycles of length m_i.  Zero is the extra fixed
    point.
    """
    if m < 1 or d < 1 or m * d != q - 1:
        raise BadDivisibility(f"m*d = {m}*{d} != q-1 = {q - 1}")
    if r < 1 or d % r:
        raise BadDivisibility(f"r = {r} does not divide d = {d}")
    if len(unit_orders) != r:
        raise BadDivisibility(f"expected {r} unit orders, got {len(unit_orders)}")
    counts = {1: 1}
    for mi in unit_orders:
        if mi < 1 or m % mi:
            raise BadDivisibility(f"unit order {mi} does not divide m = {m}")
        counts[mi] = counts.get(mi, 0) + (d // r) * (m // mi)
    return CycleType.from_counts(counts)


# -- shared validation --------------------------------------------------------


def _index(F: FieldSpec, m: int) -> int:
    if m < 1 or (F.q - 1) % m:
        raise BadDivisibility(f"m = {m} does not divide q-1 = {F.q - 1}")
    return (F.q - 1) // m


def _units(F: FieldSpec, m: int, units: Sequence[FieldElement | int]) -> tuple[FieldElement, ...]:
    out = tuple(F(u) for u in units)
    for u in out:
        if u.value == 0 or F.element_order(u) > m or m % F.element_order(u):
            raise UnitOutsideSubgroup(f"{u} is not in the subgroup of order {m}")
    return out


def _orders(F: FieldSpec, units: Sequence[FieldElement]) -> tuple[int, ...]:
    return tuple(F.element_order(u) for u in units)


# -- coefficient formulas; shared by constructions and their inverses ---------


def _bin_terms(F: FieldSpec, m: int, d: int, r: int, units) -> SparsePolynomial:
    u, v = units
    half = F.scalar(2).inv()
    a = (v - u) * half
    b = (u + v) * half
    return canonicalize(F, [((F.q + 1) // 2, a), (1, b)])


def _tri_terms(F: FieldSpec, m: int, d: int, r: int, units) -> SparsePolynomial:
    u, v, w = units
    z = F.root_of_unity(3)
    z2 = z * z
    third = F.scalar(3).inv()
    a = (u + v * z + w * z2) * third
    b = (u + v * z2 + w * z) * third
    c = (u + v + w) * third
    q = F.q
    return canonicalize(F, [((2 * q + 1) // 3, a), ((q + 2) // 3, b), (1, c)])


def _cyclo_terms(F: FieldSpec, m: int, d: int, r: int, units) -> SparsePolynomial:
    coeffs = vandermonde_coeffs(F, r, units)
    ell = (F.q - 1) // r
    # coeffs run a_{r-1}, ..., a_0
    return canonicalize(F, [((r - 1 - i) * ell + 1, a) for i, a in enumerate(coeffs)])


def _geom_terms(F: FieldSpec, m: int, d: int, r: int, units) -> SparsePolynomial:
    u, v = units
    a = (u - v) / F.scalar(d)
    return canonicalize(F, [(i * m + 1, a) for i in range(d)] + [(1, v)])


_FAMILY_TERMS = {BIN: _bin_terms, TRI: _tri_terms, CYCLO: _cyclo_terms, GEOM_SUM: _geom_terms}


# -- constructions --------------------------------------------------------------


def construct_bin(F: FieldSpec, m: int, u: FieldElement | int, v: FieldElement | int) -> Construction:
    """Binomial a x^((q+1)/2) + b x with a = (v-u)/2, b = (u+v)/2.

    It multiplies the non-squares (odd cosets) by u and the nonzero squares
    by v.  u and v must be distinct elements of H_0; their orders may differ.
    """
    d = _index(F, m)
    if d % 2:
        raise OddIndex(f"d = {d} is odd")
    u, v = _units(F, m, (u, v))
    if u == v:
        raise EqualUnits("u and v must be distinct")
    orders = _orders(F, (u, v))
    return Construction(
        F, BIN, m, d, 2, (u, v), orders,
        poly=_bin_terms(F, m, d, 2, (u, v)),
        # coset residue 0 (squares) gets v
        predicted=predicted_cycle_type(F.q, d, 2, (orders[1], orders[0]), m),
        phi_condition=euler_phi(m) >= 2,
    )


def construct_tri(F: FieldSpec, m: int, u, v, w) -> Construction:
    """Trinomial a x^((2q+1)/3) + b x^((q+2)/3) + c x multiplying H_i by (u, v, w)[i % 3]."""
    if F.q % 3 != 1:
        raise BadResidue(f"q = {F.q} is not 1 mod 3")
    d = _index(F, m)
    if d % 3:
        raise IndexNotMultipleOf3(f"d = {d} is not a multiple of 3")
    units = _units(F, m, (u, v, w))
    if units[0] == units[1] == units[2]:
        raise AllUnitsEqual("u, v, w must not all be equal")
    orders = _orders(F, units)
    return Construction(
        F, TRI, m, d, 3, units, orders,
        poly=_tri_terms(F, m, d, 3, units),
        predicted=predicted_cycle_type(F.q, d, 3, orders, m),
        phi_condition=euler_phi(m) >= 3,
    )


def vandermonde_coeffs(F: FieldSpec, r: int, units: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Solve G(zeta^i) = u_i for i < r, zeta = root_of_unity(F, r).

    Returns the coefficients of G as (a_{r-1}, ..., a_0).  The solution is
    the inverse DFT a_j = (1/r) sum_i u_i zeta^(-ij); it is checked by
    substituting back into the system.
    """
    if len(units) != r:
        raise BadDivisibility(f"expected {r} units, got {len(units)}")
    units = [F(u) for u in units]
    z = F.root_of_unity(r)
    zinv = z.inv()
    scale = F.scalar(r).inv()
    zpow = [F.one]
    for _ in range(1, r):
        zpow.append(zpow[-1] * zinv)
    low_first = []
    for j in range(r):
        acc = F.zero
        for i, ui in enumerate(units):
            acc = acc + ui * zpow[(i * j) % r]
        low_first.append(acc * scale)
    # substitute back: sum_j a_j zeta^(ij) must equal u_i
    fwd = [F.one]
    for _ in range(1, r):
        fwd.append(fwd[-1] * z)
    for i, ui in enumerate(units):
        lhs = F.zero
        for j, a in enumerate(low_first):
            lhs = lhs + a * fwd[(i * j) % r]
        if lhs != ui:
            raise AssertionError(f"Vandermonde solution fails row {i}")
    return tuple(reversed(low_first))


def construct_cyclotomic(F: FieldSpec, r: int, m: int, units: Sequence[FieldElement | int]) -> Construction:
    """r-term polynomial x G(x^((q-1)/r)) multiplying H_i by units[i % r]."""
    if r < 2:
        raise BadDivisibility(f"r = {r} must be at least 2")
    d = _index(F, m)
    if d % r:
        raise BadDivisibility(f"r = {r} does not divide d = {d}")
    units = _units(F, m, units)
    if len(units) != r:
        raise BadDivisibility(f"expected {r} units, got {len(units)}")
    if all(x == units[0] for x in units):
        raise AllUnitsEqual("units must not all be equal")
    orders = _orders(F, units)
    return Construction(
        F, CYCLO, m, d, r, units, orders,
        poly=_cyclo_terms(F, m, d, r, units),
        predicted=predicted_cycle_type(F.q, d, r, orders, m),
        phi_condition=euler_phi(m) >= r,
    )


def construct_geom_sum(F: FieldSpec, m: int, u: FieldElement | int, v: FieldElement | int) -> Construction:
    """a (x + x^(m+1) + ... + x^((d-1)m+1)) + v x with a = (u-v)/d.

    Multiplies H_0 by u and every other nonzero element by v, because the
    geometric sum of b^m vanishes for b outside H_0.
    """
    d = _index(F, m)
    u, v = _units(F, m, (u, v))
    if u == v:
        raise EqualUnits("u and v must be distinct")
    orders = _orders(F, (u, v))
    if orders[0] != orders[1]:
        raise OrderMismatch(f"orders differ: {orders[0]} != {orders[1]}")
    return Construction(
        F, GEOM_SUM, m, d, d, (u, v), orders,
        poly=_geom_terms(F, m, d, d, (u, v)),
        predicted=predicted_cycle_type(F.q, d, d, (orders[0],) + (orders[1],) * (d - 1), m),
        phi_condition=euler_phi(m) >= 2,
    )


def inverse_construction(c: Construction) -> Construction:
    """Same family and parameters with every unit inverted."""
    inv = [u.inv() for u in c.units]
    if c.family == BIN:
        return construct_bin(c.field, c.m, *inv)
    if c.family == TRI:
        return construct_tri(c.field, c.m, *inv)
    if c.family == CYCLO:
        return construct_cyclotomic(c.field, c.r, c.m, inv)
    return construct_geom_sum(c.field, c.m, *inv)
