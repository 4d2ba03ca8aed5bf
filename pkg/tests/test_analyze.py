import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from permcycle.analyze import (
    PermTable,
    batch_cycle_types,
    batch_images,
    compose_is_identity,
    coset_decomposition,
    coset_multipliers,
    cycle_type,
    eval_table,
    fixed_points,
    is_permutation,
    multiplication_cycle_type,
    table_from_map,
    verify_constructions,
    verify_poly,
)
from permcycle.construct import construct_bin, construct_geom_sum
from permcycle.cycletype import CycleType
from permcycle.errors import NotAPermutation, NotCosetMultiplicative, UnitOutsideSubgroup
from permcycle.families import enumerate_family
from permcycle.field import field_from_order, make_prime_field
from permcycle.poly import canonicalize, evaluate, parse_poly

F13 = make_prime_field(13)


def table(text, F=F13):
    return eval_table(parse_poly(text, F))


def test_eval_table_examples():
    assert table("x").image.tolist() == list(range(13))
    t = table("3x^7+6x")
    assert t.image[0] == 0 and t.image[1] == 9
    sq = table("x^2")
    assert sq.image[1] == sq.image[12] == 1
    assert not is_permutation(sq)
    assert is_permutation(t) and is_permutation(table("x"))


def test_cycle_type_examples():
    assert str(cycle_type(table("x"))) == "1^13"
    assert str(cycle_type(table("3x^7+6x"))) == "1+3^4"
    assert str(cycle_type(table("2x"))) == "1+12"
    with pytest.raises(NotAPermutation):
        cycle_type(table("x^2"))


def test_fixed_points_and_composition():
    assert fixed_points(table("3x^7+6x")) == [0]
    assert fixed_points(table("x")) == list(range(13))
    assert fixed_points(table("x+1")) == []
    assert compose_is_identity(table("3x^7+6x"), table("10x^7+6x"))
    assert compose_is_identity(table("x"), table("x"))
    assert not compose_is_identity(table("2x"), table("2x"))
    assert not compose_is_identity(table("x^2"), table("x"))


def test_coset_multipliers_examples():
    assert [u.value for u in coset_multipliers(parse_poly("3x^7+6x", F13), 4)] == [9, 3, 9, 3]
    geo = coset_multipliers(parse_poly("5x^10+5x^7+5x^4+x", F13), 4)
    assert [u.value for u in geo] == [3, 9, 9, 9]
    with pytest.raises(NotCosetMultiplicative):
        coset_multipliers(parse_poly("x^2", F13), 2)


def test_coset_decomposition_partitions(fields_upto):
    for F in fields_upto(200):
        for d in F.divisors_of_order():
            dec = coset_decomposition(F, d)
            assert len(dec.cosets) == d
            union = set().union(*dec.cosets)
            assert union == set(range(1, F.q)) and sum(map(len, dec.cosets)) == F.q - 1
            g = F.generator
            for i, coset in enumerate(dec.cosets):
                assert all(F.discrete_log(F(x)) % d == i for x in coset)


def test_multiplication_cycle_type_examples():
    assert str(multiplication_cycle_type(F13, 3, 12)) == "3^4"
    assert str(multiplication_cycle_type(F13, 1, 12)) == "1^12"
    assert str(multiplication_cycle_type(F13, 5, 4)) == "4"
    with pytest.raises(UnitOutsideSubgroup):
        multiplication_cycle_type(F13, 2, 4)


def test_eval_table_matches_scalar_evaluation():
    for q in (13, 27, 121, 343, 2187, 2197):
        F = field_from_order(q)
        f = canonicalize(F, [(e, F((7 * e + 3) % q)) for e in (1, 5, q // 2, q - 2)])
        t = eval_table(f)
        xs = list(F.elements())[:: max(1, q // 200)]
        assert all(t.image[x.value] == evaluate(f, x).value for x in xs)
        assert np.array_equal(batch_images(F, [f])[0], t.image)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 60), st.data())
def test_batch_cycle_types_match_reference(n, data):
    rows = []
    for _ in range(data.draw(st.integers(1, 5))):
        if data.draw(st.booleans()):
            rows.append(data.draw(st.permutations(range(n))))
        else:
            rows.append(data.draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)))
    images = np.array(rows, dtype=np.int64)
    F = make_prime_field(61)
    for row, ct in zip(rows, batch_cycle_types(images)):
        ref = PermTable(F, np.array(row))
        if sorted(row) == list(range(n)):
            # pure-python traversal on a padded table (extra points fixed)
            padded = PermTable(F, np.array(list(row) + list(range(n, 61))))
            want = cycle_type(padded).as_dict()
            want[1] -= 61 - n
            assert ct == CycleType.from_counts(want)
            assert ct.size == n
        else:
            assert ct is None
            assert not is_permutation(ref)


def test_verify_constructions_agrees_with_scalar_reports():
    for q in (13, 37, 49, 121, 343):
        F = field_from_order(q)
        cs = []
        for m in F.divisors_of_order():
            if ((q - 1) // m) % 2 == 0 and m > 1:
                cs.extend(list(enumerate_family(F, "BIN", m, mixed=True))[:20])
        batch = verify_constructions(cs)
        assert batch == verify_constructions(cs, workers=1)
        for c, ok in zip(cs, batch):
            report = verify_poly(c.poly, c.predicted)
            assert ok and report.ok
            if c.predicted.as_dict().get(1) == 1:
                assert report.fixed_points == (0,)


def test_verify_constructions_flags_bad_prediction():
    c = construct_bin(F13, 3, 3, 9)
    bad = type(c)(**{**c.__dict__, "predicted": CycleType.parse("1+4^3")})
    assert verify_constructions([c, bad]) == [True, False]


def test_table_from_map():
    t = table_from_map(F13, lambda x: x * F13(2))
    assert t == table("2x")


def test_geom_sum_coset_law(fields_upto):
    for F in fields_upto(150):
        for m in F.divisors_of_order():
            pool = F.elements_of_order(m)
            if len(pool) < 2:
                continue
            c = construct_geom_sum(F, m, pool[0], pool[1])
            mult = coset_multipliers(c.poly, c.d)
            assert mult[0] == pool[0] and all(x == pool[1] for x in mult[1:])
