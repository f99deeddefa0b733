from concurrent.futures import ThreadPoolExecutor
from math import gcd

import pytest
from hypothesis import given, strategies as st

from bridgecap.farey import (
    INFINITY,
    DomainError,
    Fraction,
    KnotClass,
    _depth_memo,
    canonicalize,
    depth_oracle,
    farey_adjacent,
    knot_class,
    mediant,
    parents,
)

F = Fraction


def brute_parents(x):
    """All unordered pairs of Farey neighbours with smaller denominators whose
    mediant is x, found by scanning every candidate denominator."""
    found = set()
    for b in range(1, x.q):
        d = x.q - b
        for a in range(x.p - 2 * x.q, x.p + 2 * x.q):
            c = x.p - a
            if abs(a * d - b * c) == 1:
                found.add(frozenset([(a, b), (c, d)]))
    return found


@st.composite
def reduced_fractions(draw, max_q=400):
    q = draw(st.integers(min_value=2, max_value=max_q))
    p = draw(st.integers(min_value=-3 * q, max_value=3 * q).filter(lambda p: gcd(p, q) == 1))
    return F(p, q)


def test_fraction_normalizes():
    assert F(-2, -4) == F(1, 2)
    assert F(3, -6) == F(-1, 2)
    assert F(-5, 0) == INFINITY == F(1, 0)
    assert F.parse(" 10/23 ") == F(10, 23)
    assert F.parse("7") == F(7, 1)
    with pytest.raises(DomainError):
        F(0, 0)
    with pytest.raises(DomainError):
        F.parse("1/2/3")


@pytest.mark.parametrize(
    "a, b, child",
    [((1, 0), (0, 1), (1, 1)), ((1, 2), (3, 7), (4, 9)), ((0, 1), (1, 2), (1, 3))],
)
def test_mediant_examples(a, b, child):
    assert mediant(F(*a), F(*b)) == F(*child)
    assert farey_adjacent(F(*a), F(*child)) and farey_adjacent(F(*b), F(*child))


def test_mediant_rejects_non_neighbours():
    with pytest.raises(DomainError):
        mediant(F(1, 3), F(2, 3))


@pytest.mark.parametrize(
    "x, expected",
    [((10, 23), ((3, 7), (7, 16))), ((1, 2), ((0, 1), (1, 1))), ((3, 7), ((1, 2), (2, 5)))],
)
def test_parents_examples(x, expected):
    assert parents(F(*x)) == (F(*expected[0]), F(*expected[1]))


@pytest.mark.parametrize("x", [F(5, 1), F(-2, 1), INFINITY])
def test_parents_of_integers_rejected(x):
    with pytest.raises(DomainError):
        parents(x)


def test_parents_against_brute_force():
    for q in range(2, 60):
        for p in range(-q, 2 * q):
            if gcd(p, q) != 1:
                continue
            x = F(p, q)
            u, v = parents(x)
            pairs = brute_parents(x)
            assert pairs == {frozenset([(u.p, u.q), (v.p, v.q)])}
            assert (u.q, u.p) <= (v.q, v.p)


@given(reduced_fractions())
def test_mediant_of_parents_is_identity(x):
    assert mediant(*parents(x)) == x


@given(reduced_fractions())
def test_depth_steps_by_zero_or_one(x):
    d = depth_oracle(x)
    for u in parents(x):
        assert d - depth_oracle(u) in (0, 1)


@pytest.mark.parametrize(
    "x, d", [(F(5, 1), 0), (INFINITY, 0), (F(10, 23), 3), (F(92, 125), 4), (F(1, 2), 1)]
)
def test_depth_examples(x, d):
    assert depth_oracle(x) == d


def test_depth_is_translation_and_sign_invariant():
    for q in range(2, 80):
        for p in range(1, q):
            if gcd(p, q) == 1:
                d = depth_oracle(F(p, q))
                assert depth_oracle(F(p + 3 * q, q)) == d
                assert depth_oracle(F(-p, q)) == d


def test_depth_long_parent_chain():
    # 1/n has n Farey ancestors; must not recurse
    assert depth_oracle(F(1, 50_000)) == 1
    assert depth_oracle(F(49_999, 50_000)) == 1


def test_depth_concurrent_calls_agree():
    xs = [F(p, 997) for p in range(1, 997)]
    _depth_memo.clear()
    with ThreadPoolExecutor(max_workers=8) as pool:
        a = list(pool.map(depth_oracle, xs))
    _depth_memo.clear()
    b = [depth_oracle(x) for x in xs]
    assert a == b


@pytest.mark.parametrize("p, q, canon", [(1, 3, (2, 3)), (4, 15, (4, 15)), (11, 15, (4, 15))])
def test_canonicalize_examples(p, q, canon):
    assert canonicalize(p, q).canonical == F(*canon)


@pytest.mark.parametrize("p, q", [(3, 9), (1, 4), (1, 1)])
def test_canonicalize_rejects(p, q):
    with pytest.raises(DomainError):
        canonicalize(p, q)


@given(st.integers(min_value=1, max_value=400).map(lambda k: 2 * k + 1), st.integers())
def test_canonicalize_constant_on_class(q, p):
    if gcd(p, q) != 1:
        return
    k = canonicalize(p, q)
    inv = pow(p, -1, q)
    for other in (-p, inv, -inv, p + 5 * q):
        assert canonicalize(other, q) == k
    c = k.canonical
    assert c.p % 2 == 0 and 0 < c.p < c.q
    assert canonicalize(c.p, c.q) == k


def test_knot_class_unknot_and_links():
    assert knot_class(F(1, 1)).is_unknot
    assert knot_class(F(7, 1)) == KnotClass.unknot()
    with pytest.raises(DomainError):
        knot_class(F(1, 4))


def test_representatives():
    assert KnotClass(F(4, 15)).representatives() == [F(4, 15), F(11, 15)]
    assert KnotClass(F(2, 5)).representatives() == [F(2, 5), F(3, 5)]
    assert len(KnotClass(F(10, 23)).representatives()) == 4
