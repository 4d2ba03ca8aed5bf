import random

import pytest
from hypothesis import given, settings, strategies as st

from permcycle.analyze import cycle_type, eval_table, table_from_map
from permcycle.construct import (
    BIN,
    CYCLO,
    GEOM_SUM,
    TRI,
    construct_bin,
    construct_cyclotomic,
    construct_geom_sum,
    construct_tri,
    inverse_construction,
    predicted_cycle_type,
    vandermonde_coeffs,
)
from permcycle.cycletype import CycleType
from permcycle.errors import (
    AllUnitsEqual,
    BadDivisibility,
    BadResidue,
    EqualUnits,
    IndexNotMultipleOf3,
    OddIndex,
    OrderMismatch,
    UnitOutsideSubgroup,
)
from permcycle.field import field_from_order, make_prime_field

from conftest import odd_prime_powers

F13 = make_prime_field(13)


def terms(f):
    return [(e, c.value) for e, c in f.terms]


def reference_table(c):
    """x -> (unit assigned to x's coset) * x, from discrete logs; 0 -> 0."""
    F = c.field
    if c.family == GEOM_SUM:
        u, v = c.units
        return table_from_map(F, lambda x: x if not x else (u if x**c.m == F.one else v) * x)
    if c.family == BIN:
        u, v = c.units
        return table_from_map(F, lambda x: x if not x else (v if F.discrete_log(x) % 2 == 0 else u) * x)
    r = c.r
    return table_from_map(F, lambda x: x if not x else c.units[F.discrete_log(x) % r] * x)


# -- predicted cycle type


def test_predicted_examples():
    assert predicted_cycle_type(13, 4, 2, [3, 3], 3) == CycleType.parse("1+3^4")
    assert str(predicted_cycle_type(13, 4, 2, [1, 1], 3)) == "1^13"
    assert str(predicted_cycle_type(13, 12, 2, [1, 1], 1)) == "1^13"
    with pytest.raises(BadDivisibility):
        predicted_cycle_type(13, 4, 2, [1, 1], 1)
    assert str(predicted_cycle_type(121, 2, 2, [60, 60], 60)) == "1+60^2"
    assert str(predicted_cycle_type(13, 4, 2, [1, 3], 3)) == "1^7+3^2"
    with pytest.raises(BadDivisibility):
        predicted_cycle_type(13, 5, 1, [1], 3)


# -- worked examples


def test_bin_examples():
    c = construct_bin(F13, 3, 3, 9)
    assert str(c.poly) == "3x^7+6x"
    assert str(c.inverse_poly) == "10x^7+6x"
    assert str(c.predicted) == "1+3^4"
    assert str(construct_bin(F13, 3, 9, 3).poly) == "10x^7+6x"
    with pytest.raises(EqualUnits):
        construct_bin(F13, 3, 3, 3)
    with pytest.raises(OddIndex):
        construct_bin(F13, 4, 5, 8)
    with pytest.raises(UnitOutsideSubgroup):
        construct_bin(F13, 3, 3, 2)
    with pytest.raises(BadDivisibility):
        construct_bin(F13, 5, 1, 2)


def test_bin_coefficient_identities(fields_upto):
    for F in fields_upto(150):
        for m in F.divisors_of_order():
            if ((F.q - 1) // m) % 2 or m < 2:
                continue
            pool = F.subgroup(m)
            u, v = pool[0], pool[-1]
            c = construct_bin(F, m, u, v)
            a = c.poly.coefficient((F.q + 1) // 2)
            b = c.poly.coefficient(1)
            assert a + b == v and b - a == u


def test_tri_examples():
    c = construct_tri(F13, 4, 5, 8, 5)
    assert str(c.poly) == "3x^9+9x^5+6x"
    assert str(c.predicted) == "1+4^3"
    assert c.poly(1).value == 5 and c.poly(2).value == 3
    with pytest.raises(AllUnitsEqual):
        construct_tri(F13, 4, 5, 5, 5)
    with pytest.raises(BadResidue):
        construct_tri(make_prime_field(11), 5, 3, 4, 5)
    with pytest.raises(IndexNotMultipleOf3):
        construct_tri(F13, 3, 3, 9, 3)


def test_vandermonde_examples():
    assert [a.value for a in vandermonde_coeffs(F13, 2, [9, 3])] == [3, 6]
    assert [a.value for a in vandermonde_coeffs(F13, 3, [5, 8, 5])] == [3, 9, 6]
    for F, r in [(F13, 4), (field_from_order(121), 5), (field_from_order(343), 6)]:
        c = F(7)
        assert [a.value for a in vandermonde_coeffs(F, r, [c] * r)] == [0] * (r - 1) + [7]


def test_cyclotomic_examples():
    assert str(construct_cyclotomic(F13, 2, 3, [9, 3]).poly) == "3x^7+6x"
    assert construct_cyclotomic(F13, 2, 3, [9, 3]).poly == construct_bin(F13, 3, 3, 9).poly
    assert construct_cyclotomic(F13, 3, 4, [5, 8, 5]).poly == construct_tri(F13, 4, 5, 8, 5).poly
    c = construct_cyclotomic(F13, 4, 3, [3, 9, 3, 9])
    assert str(c.predicted) == "1+3^4"
    assert cycle_type(eval_table(c.poly)) == c.predicted
    with pytest.raises(BadDivisibility):
        construct_cyclotomic(F13, 5, 3, [3] * 5)
    with pytest.raises(AllUnitsEqual):
        construct_cyclotomic(F13, 4, 3, [3] * 4)


def test_geom_sum_examples():
    c = construct_geom_sum(F13, 3, 3, 9)
    assert str(c.poly) == "5x^10+5x^7+5x^4+x"
    assert str(c.predicted) == "1+3^4"
    assert c.poly(1).value == 3 and c.poly(2).value == 5
    with pytest.raises(EqualUnits):
        construct_geom_sum(F13, 3, 3, 3)
    with pytest.raises(OrderMismatch):
        construct_geom_sum(F13, 6, 12, 4)


def test_geom_sum_d2_is_swapped_binomial(fields_upto):
    for F in fields_upto(300):
        m = (F.q - 1) // 2
        pool = F.elements_of_order(m)
        for u, v in zip(pool, pool[1:]):
            assert construct_geom_sum(F, m, u, v).poly == construct_bin(F, m, v, u).poly


def test_inverse_examples():
    c = construct_bin(F13, 3, 3, 9)
    ic = inverse_construction(c)
    assert [u.value for u in ic.units] == [9, 3] and str(ic.poly) == "10x^7+6x"
    t = inverse_construction(construct_tri(F13, 4, 5, 8, 5))
    assert [u.value for u in t.units] == [8, 5, 8]
    assert inverse_construction(ic) == c


# -- randomized: polynomial map == reference coset map


@st.composite
def constructions(draw):
    q = draw(st.sampled_from(odd_prime_powers(400)))
    F = field_from_order(q)
    family = draw(st.sampled_from([BIN, TRI, CYCLO, GEOM_SUM]))
    n = q - 1
    if family == BIN:
        ms = [m for m in F.divisors_of_order() if (n // m) % 2 == 0 and m > 1]
    elif family == TRI:
        ms = [m for m in F.divisors_of_order() if (n // m) % 3 == 0 and m > 1] if q % 3 == 1 else []
    elif family == CYCLO:
        ms = [m for m in F.divisors_of_order() if m > 1 and any((n // m) % k == 0 for k in range(2, 13))]
    else:
        ms = [m for m in F.divisors_of_order() if 1 < m < n and len(F.elements_of_order(m)) > 1]
    if not ms:
        return draw(constructions())
    m = draw(st.sampled_from(ms))
    d = n // m
    pool = F.subgroup(m)
    pick = st.sampled_from(pool)
    if family == BIN:
        u, v = draw(st.lists(pick, min_size=2, max_size=2, unique_by=lambda x: x.value))
        return construct_bin(F, m, u, v)
    if family == GEOM_SUM:
        order = draw(st.sampled_from([k for k in F.divisors_of_order() if m % k == 0 and len(F.elements_of_order(k)) > 1]))
        same = F.elements_of_order(order)
        u, v = draw(st.lists(st.sampled_from(same), min_size=2, max_size=2, unique_by=lambda x: x.value))
        return construct_geom_sum(F, m, u, v)
    if family == TRI:
        r = 3
    else:
        r = draw(st.sampled_from([k for k in range(2, min(d, 12) + 1) if d % k == 0]))
    units = draw(st.lists(pick, min_size=r, max_size=r).filter(lambda t: len({x.value for x in t}) > 1))
    if family == TRI:
        return construct_tri(F, m, *units)
    return construct_cyclotomic(F, r, m, units)


@settings(max_examples=300, deadline=None)
@given(constructions())
def test_construction_matches_reference_map(c):
    t = eval_table(c.poly)
    assert t == reference_table(c)
    assert cycle_type(t) == c.predicted
    assert cycle_type(reference_table(c)) == c.predicted
    inv = eval_table(c.inverse_poly)
    assert (inv.image[t.image] == range(c.field.q)).all()
    assert inverse_construction(inverse_construction(c)) == c
    F = c.field
    for x in list(F.elements())[1:: max(1, F.q // 50)]:
        assert c.poly(x) == c.multiplier(F.discrete_log(x)) * x
    assert c.term_count <= (c.d + 1 if c.family == GEOM_SUM else c.r)


def test_cyclotomic_substitute_back_random():
    rng = random.Random(7)
    for q in odd_prime_powers(300):
        F = field_from_order(q)
        for r in [k for k in F.divisors_of_order() if 1 < k <= 24]:
            units = [F(rng.randrange(q)) for _ in range(r)]
            low_first = vandermonde_coeffs(F, r, units)[::-1]
            z = F.root_of_unity(r)
            for i, ui in enumerate(units):
                assert sum((a * z ** (i * j) for j, a in enumerate(low_first)), F.zero) == ui
