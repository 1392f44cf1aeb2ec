import itertools
import math

import pytest

from invsemi import construct, graph as gm
from invsemi.construct import (SemigroupSet, balanced_null_order,
                               balanced_null_semigroups, classify_semigroup,
                               closure, count_elements, enumerate_elements,
                               idempotent_semilattice,
                               max_commutative_nilpotent, null_semigroup)
from invsemi.pinj import (PInj, element_from_id, format_element,
                          monoid_order, power)

LAMBDA = {1: 1, 2: 2, 3: 3, 4: 7, 5: 13, 6: 34, 7: 73, 8: 209, 9: 501,
          10: 1546, 11: 4051}


# -- counting ----------------------------------------------------------------------


def test_balanced_null_order_table():
    for m, lam in LAMBDA.items():
        assert balanced_null_order(m) == lam


def test_balanced_null_order_recurrence():
    for m in range(4, 30):
        assert balanced_null_order(m) == (balanced_null_order(m - 1)
                                          + (m // 2) * balanced_null_order(m - 2))


def test_balanced_null_order_collapses():
    for m in range(1, 8):
        assert balanced_null_order(2 * m) == monoid_order(m)
    for m in range(1, 8):
        assert balanced_null_order(2 * m - 1) == count_elements(m, "nilpotent")


def test_count_elements_matches_enumeration():
    for n in (1, 2, 3, 4):
        for filt in ("all", "nilpotent", "idempotent", "permutation"):
            got = sum(1 for _ in enumerate_elements(n, filt))
            assert got == count_elements(n, filt)
    assert count_elements(4, "all") == monoid_order(4)
    assert count_elements(4, "idempotent") == 2 ** 4
    assert count_elements(4, "permutation") == math.factorial(4)


def test_enumerate_filters_are_correct():
    from invsemi.pinj import classify
    for filt, pred in (
            ("nilpotent", lambda e: classify(e).kind in ("zero", "nilpotent")),
            ("idempotent", lambda e: e.is_idempotent()),
            ("permutation", lambda e: e.is_permutation())):
        els = list(enumerate_elements(4, filt))
        assert all(pred(e) for e in els)
        assert len(set(els)) == len(els)


def test_enumerate_max_rank():
    for r in range(5):
        els = list(enumerate_elements(4, max_rank=r))
        assert all(e.rank <= r for e in els)
        assert len(els) == sum(math.comb(4, k) ** 2 * math.factorial(k)
                               for k in range(r + 1))


# -- semigroup sets ----------------------------------------------------------------


def test_semigroup_set_flags():
    skl = null_semigroup((0, 1), (2, 3))
    flags = classify_semigroup(skl)
    assert flags.order == 7 and flags.closed and flags.commutative
    assert flags.null and flags.nilpotent and not flags.semilattice

    idem = idempotent_semilattice(3)
    f2 = classify_semigroup(idem)
    assert f2.order == 8 and f2.closed and f2.commutative
    assert f2.semilattice and f2.inverse and not f2.null

    c = PInj.chain(3, (0, 1, 2))
    cyc = SemigroupSet.from_elements(3, (PInj.zero(3), c, power(c, 2)))
    f3 = classify_semigroup(cyc)
    assert f3.closed and f3.commutative and f3.nilpotent and not f3.null


def test_displayed_null_semigroup_n4():
    got = sorted(format_element(e) for e in null_semigroup((0, 1), (2, 3)))
    assert got == sorted(["0", "[1 3]", "[1 4]", "[2 3]", "[2 4]",
                          "[1 3]|[2 4]", "[1 4]|[2 3]"])


def test_null_semigroup_rejects_overlap():
    with pytest.raises(ValueError):
        null_semigroup((0, 1), (1, 2))


def test_serialize_round_trip():
    skl = null_semigroup((0, 2), (1, 3))
    back = SemigroupSet.deserialize(skl.serialize())
    assert back.ids == skl.ids and back.n == skl.n
    with pytest.raises(ValueError):
        SemigroupSet.deserialize("n=4 order=3\n0\n")


def test_from_elements_dedupes_and_sorts():
    z = PInj.zero(3)
    s = SemigroupSet.from_elements(3, (z, z, PInj.identity(3)))
    assert len(s) == 2
    assert list(s.ids) == sorted(s.ids)


def test_closure_reaches_fixed_point():
    c = PInj.chain(4, (0, 1, 2, 3))
    s = closure([c])
    assert set(s.elements) == {c, power(c, 2), power(c, 3), PInj.zero(4)}
    assert s.is_closed()
    skl = null_semigroup((0, 1), (2, 3))
    assert set(closure(skl.elements).elements) == set(skl.elements)


def test_closure_size_guard():
    gens = [PInj.cycle(5, range(5)), PInj.chain(5, range(5))]
    with pytest.raises(RuntimeError):
        closure(gens, max_size=50)


# -- balanced null families ---------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_balanced_null_family(n):
    sgs = list(balanced_null_semigroups(n))
    expect = math.comb(n, n // 2) if n % 2 == 0 else 2 * math.comb(n, n // 2)
    assert len(sgs) == expect
    assert len({tuple(s.ids) for s in sgs}) == expect
    for s in sgs:
        assert len(s) == balanced_null_order(n)
        assert s.is_null()


# -- extremal search ----------------------------------------------------------------


@pytest.mark.parametrize("n,order,count", [(3, 3, 12), (4, 7, 6), (5, 13, 20)])
def test_max_commutative_nilpotent_small(n, order, count):
    rep = max_commutative_nilpotent(n)
    assert rep.max_order == order
    assert rep.count == count
    for w in rep.witnesses:
        assert len(w) == order
        assert w.is_closed() and w.is_commutative()
        flags = classify_semigroup(w)
        assert flags.nilpotent


def test_max_commutative_nilpotent_witnesses_n4():
    rep = max_commutative_nilpotent(4)
    wits = {tuple(w.ids) for w in rep.witnesses}
    nulls = {tuple(s.ids) for s in balanced_null_semigroups(4)}
    assert wits == nulls


def test_max_commutative_nilpotent_witnesses_n3():
    # balanced nulls plus the cyclic chain semigroups {0, c, c^2}
    rep = max_commutative_nilpotent(3)
    wits = {tuple(w.ids) for w in rep.witnesses}
    nulls = {tuple(s.ids) for s in balanced_null_semigroups(3)}
    cyclic = set()
    for perm in itertools.permutations(range(3)):
        c = PInj.chain(3, perm)
        s = SemigroupSet.from_elements(3, (PInj.zero(3), c, power(c, 2)))
        cyclic.add(tuple(s.ids))
    assert len(cyclic) == 6
    assert wits == nulls | cyclic


def test_extremal_guard():
    with pytest.raises(ValueError):
        max_commutative_nilpotent(8)
    with pytest.raises(ValueError):
        max_commutative_nilpotent(2)
