import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from invsemi import commute
from invsemi.commute import (CommuteChecker, centralizer,
                             centralizer_of_permutation, commutes_naive,
                             commutes_structural,
                             iter_permutation_centralizer, overlap_classes,
                             permutation_centralizer_order,
                             permutation_joint_centralizer)
from invsemi.pinj import (PInj, UNDEF, element_from_id, monoid_order, power,
                          join)

from helpers import oracle_commutes


def all_elements(n):
    return [element_from_id(n, i) for i in range(monoid_order(n))]


def elements(n):
    return st.integers(0, monoid_order(n) - 1).map(
        lambda i: element_from_id(n, i))


# -- the two routes ----------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_routes_agree_exhaustively(n):
    els = all_elements(n)
    for a in els:
        chk = CommuteChecker(a)
        for b in els:
            naive = commutes_naive(a, b)
            assert chk.commutes(b) == naive
            assert naive == oracle_commutes(a, b)


@settings(deadline=None, max_examples=300)
@given(st.integers(5, 10).flatmap(
    lambda n: st.tuples(elements(n), elements(n))))
def test_routes_agree_random(pair):
    a, b = pair
    assert commutes_structural(a, b) == commutes_naive(a, b)


def test_structural_rejects_size_mismatch():
    with pytest.raises(ValueError):
        commutes_structural(PInj.zero(3), PInj.zero(4))


def test_checker_is_reusable():
    els = all_elements(3)
    a = els[17]
    chk = CommuteChecker(a)
    once = [chk.commutes(b) for b in els]
    again = [chk.commutes(b) for b in els]
    assert once == again
    assert once == [commutes_naive(a, b) for b in els]


def test_zero_product_pairs_commute():
    # both products empty: disjoint spans, and head-to-offspan landings
    a = PInj.chain(4, (0, 1))
    b = PInj.chain(4, (0, 2))
    assert commutes_naive(a, b) and commutes_structural(a, b)
    c = PInj.chain(4, (2, 3))
    assert commutes_structural(a, c)


def test_commuting_carries_span_structure():
    # image into image, domain into domain, for every commuting pair
    for n in (3, 4):
        els = all_elements(n)
        for a in els:
            chk = CommuteChecker(a)
            ima, dom = set(a.ima()), set(a.dom())
            for b in els:
                if not chk.commutes(b):
                    continue
                binv = b.inverse()
                assert all(b(x) in ima for x in ima if b(x) != UNDEF)
                assert all(binv(y) in dom for y in dom if binv(y) != UNDEF)


# -- centralizers -----------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
def test_centralizer_matches_brute(n):
    els = all_elements(n)
    for a in els:
        brute = {b for b in els if commutes_naive(a, b)}
        assert set(centralizer(a).elements) == brute


def test_centralizer_sample_n4():
    els = all_elements(4)
    rng = random.Random(11)
    for a in rng.sample(els, 25):
        brute = {b for b in els if commutes_naive(a, b)}
        assert set(centralizer(a).elements) == brute


def test_full_cycle_centralizer_is_powers_and_zero():
    for n in (3, 4, 5):
        a = PInj.cycle(n, range(n))
        expect = {PInj.zero(n)} | {power(a, q) for q in range(1, n + 1)}
        assert set(centralizer(a).elements) == expect
        assert len(expect) == n + 1


def test_spanning_chain_centralizer_is_powers_and_center():
    for n in (3, 4, 5):
        a = PInj.chain(n, range(n))
        expect = ({PInj.zero(n), PInj.identity(n)}
                  | {power(a, q) for q in range(1, n)})
        assert set(centralizer(a).elements) == expect
        assert len(expect) == n + 1


# -- permutation centralizers ------------------------------------------------------


def test_permutation_stream_matches_brute():
    for n in (2, 3, 4):
        els = all_elements(n)
        for a in els:
            if not a.is_permutation():
                continue
            brute = {b for b in els if commutes_naive(a, b)}
            stream = list(iter_permutation_centralizer(a))
            assert len(stream) == len(set(stream))
            assert set(stream) == brute
            assert permutation_centralizer_order(a) == len(brute)


def test_permutation_order_formula_n5():
    els = all_elements(5)
    perms = [e for e in els if e.is_permutation()]
    assert len(perms) == math.factorial(5)
    for a in perms:
        brute = sum(commutes_naive(a, b) for b in els)
        assert permutation_centralizer_order(a) == brute


def test_centralizer_of_permutation_consistency():
    a = join(4, cycles=((0, 1), (2, 3)))
    s = centralizer_of_permutation(a)
    assert len(s) == permutation_centralizer_order(a)
    assert set(s.elements) == set(centralizer(a).elements)


# -- joint centralizers ------------------------------------------------------------


def test_overlap_classes_partition():
    d = join(6, cycles=((0, 1, 2), (3, 4, 5)))
    e = join(6, cycles=((0, 3), (1, 4), (2, 5)))
    cls = overlap_classes(d, e)
    assert len(cls) == 1 and cls[0] == frozenset(range(6))
    e2 = join(6, cycles=((0, 1, 2), (3, 4, 5)))
    assert len(overlap_classes(d, e2)) == 2


def test_joint_centralizer_matches_brute_single_class():
    els = all_elements(4)
    perms = [e for e in els if e.is_permutation()]
    hit = 0
    for a, b in itertools.combinations(perms, 2):
        if len(overlap_classes(a, b)) != 1:
            with pytest.raises(ValueError):
                permutation_joint_centralizer(a, b)
            continue
        brute = {c for c in els
                 if commutes_naive(a, c) and commutes_naive(b, c)}
        assert set(permutation_joint_centralizer(a, b)) == brute
        hit += 1
    assert hit == 210


def test_joint_centralizer_nonzero_elements_are_total():
    a = PInj.cycle(6, range(6))
    b = join(6, cycles=((0, 2), (1, 4), (3, 5)))
    assert len(overlap_classes(a, b)) == 1
    for c in permutation_joint_centralizer(a, b):
        assert c.is_zero() or c.is_permutation()
