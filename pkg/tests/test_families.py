import pytest

from permcycle.construct import BIN, CYCLO, GEOM_SUM, TRI
from permcycle.errors import BadDivisibility, BadResidue, IndexNotMultipleOf3, OddIndex
from permcycle.families import (
    closed_form_count,
    count_family,
    enumerate_family,
    factor_pairs,
    reproduce_table,
    unit_tuples,
    verify_family,
)
from permcycle.field import field_from_order, make_prime_field
from permcycle.ntheory import euler_phi

F13 = make_prime_field(13)


def test_factor_pairs():
    assert factor_pairs(F13, 2) == [(1, 12), (2, 6), (3, 4), (6, 2)]
    assert factor_pairs(F13, 3) == [(1, 12), (2, 6), (4, 3)]
    assert factor_pairs(make_prime_field(3), 2) == [(1, 2)]


def test_enumerate_examples():
    cs = list(enumerate_family(F13, BIN, 3))
    assert [([u.value for u in c.units], str(c.poly)) for c in cs] == [([3, 9], "3x^7+6x"), ([9, 3], "10x^7+6x")]
    tri = list(enumerate_family(F13, TRI, 4))
    assert len(tri) == 6 and all(str(c.predicted) == "1+4^3" for c in tri)
    assert verify_family(F13, TRI, 4).ok
    assert len(list(enumerate_family(F13, BIN, 6))) == 2
    with pytest.raises(BadDivisibility):
        list(enumerate_family(F13, BIN, 5))
    with pytest.raises(OddIndex):
        list(enumerate_family(F13, BIN, 4))
    with pytest.raises(IndexNotMultipleOf3):
        list(enumerate_family(F13, TRI, 3))
    with pytest.raises(BadResidue):
        list(enumerate_family(make_prime_field(11), TRI, 5))


def test_enumeration_is_deterministic():
    F = field_from_order(121)
    a = [c.poly for c in enumerate_family(F, TRI, 20)]
    b = [c.poly for c in enumerate_family(field_from_order(121), TRI, 20)]
    assert a == b


def test_published_counts():
    F121 = field_from_order(121)
    c = count_family(F121, BIN, 60)
    assert (c.closed_form, c.exhaustive) == (240, 240) and c.agree
    c = count_family(F121, TRI, 40)
    assert (c.closed_form, c.exhaustive) == (4080, 4080)
    c = count_family(make_prime_field(89), BIN, 11)
    assert (c.closed_form, c.exhaustive) == (90, 90)


def _rows(F):
    return [(r.family, r.m, r.d, str(r.cycle_type), r.count, r.verified) for r in reproduce_table(F)]


def test_small_tables():
    assert _rows(F13) == [(BIN, 3, 4, "1+3^4", 2, True), (BIN, 6, 2, "1+6^2", 2, True)]
    assert _rows(field_from_order(9)) == [(BIN, 4, 2, "1+4^2", 2, True)]
    assert _rows(make_prime_field(3)) == []


def test_table_distinct_column():
    rows = reproduce_table(F13, distinct=True)
    assert [r.distinct for r in rows] == [2, 2]



def test_closed_forms_match_exhaustive_tuple_counts(fields_upto):
    """Every family/pool/(m, r) over q <= 1000 whose family has at most 20000 members."""
    checked = 0
    for F in fields_upto(1000):
        n = F.q - 1
        for m in F.divisors_of_order():
            d = n // m
            cases = [(BIN, None)] if d % 2 == 0 else []
            if d % 3 == 0 and F.q % 3 == 1:
                cases.append((TRI, None))
            cases += [(CYCLO, r) for r in range(4, 7) if d % r == 0]
            cases.append((GEOM_SUM, None))
            for family, r in cases:
                for mixed in (False, True):
                    want = closed_form_count(F, family, m, r, mixed)
                    if want > 20000:
                        continue
                    got = sum(1 for _ in unit_tuples(F, family, m, r, mixed))
                    assert got == want, (F.q, family, m, r, mixed)
                    checked += 1
    assert checked > 5000


def test_equal_order_pool_counts_use_phi(fields_upto):
    for F in fields_upto(300):
        for m in F.divisors_of_order():
            assert len(F.elements_of_order(m)) == euler_phi(m)
            assert len(F.subgroup(m)) == m


def test_verify_family_small_fields_all_families(fields_upto):
    for F in fields_upto(60):
        n = F.q - 1
        for m in F.divisors_of_order():
            d = n // m
            if d % 2 == 0:
                assert verify_family(F, BIN, m, mixed=True).ok
            if d % 3 == 0 and F.q % 3 == 1:
                assert verify_family(F, TRI, m, mixed=True).ok
            assert verify_family(F, GEOM_SUM, m, mixed=True).ok
