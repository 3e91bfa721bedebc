import itertools

import pytest

from oracles import mobius_bruteforce
from rookorder import order, renner, weyl


def test_leq_examples():
    assert order.leq((0, 0, 0, 1), (0, 0, 0, 3))
    assert order.leq((0, 1), (2, 0))
    for theta in renner.monoid_elements(3):
        assert order.leq(theta, theta)
    with pytest.raises(ValueError):
        order.leq((1, 0), (1, 2, 0))


def test_leq_is_partial_order_on_R3():
    elems = renner.monoid_elements(3)
    rel = {(a, b) for a in elems for b in elems if order.leq(a, b)}
    for a in elems:
        assert (a, a) in rel
    for a, b in rel:
        if a != b:
            assert (b, a) not in rel, (a, b)
    above = {a: {b for b in elems if (a, b) in rel} for a in elems}
    for a, b in rel:
        assert above[b] <= above[a]


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_leq_is_partial_order_per_orbit_n4(k):
    elems = renner.orbit(4, k)
    above = {a: frozenset(b for b in elems if order.leq(a, b)) for a in elems}
    for a in elems:
        assert a in above[a]
    for a in elems:
        for b in above[a]:
            if a != b:
                assert a not in above[b]
            assert above[b] <= above[a]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_leq_restricted_to_units_is_bruhat(n):
    for u, v in itertools.product(weyl.all_permutations(n), repeat=2):
        assert order.leq(u, v) == weyl.bruhat_leq(u, v)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_leq_strictly_increases_length(n):
    for k in range(n + 1):
        for a, b in itertools.product(renner.orbit(n, k), repeat=2):
            if order.leq(a, b) and a != b:
                assert renner.length(a) < renner.length(b)


@pytest.mark.parametrize("n", [2, 3])
def test_dominance_oracle_calibration(n):
    # the rank-matrix dominance test must coincide with the coset-witness
    # criterion on the whole monoid before being trusted at n = 4
    elems = renner.monoid_elements(n)
    for a, b in itertools.product(elems, repeat=2):
        assert order.dominance_leq(a, b) == order.leq(a, b), (a, b)


def test_dominance_oracle_cross_validates_n4():
    elems = renner.monoid_elements(4)
    for a, b in itertools.product(elems, repeat=2):
        assert order.dominance_leq(a, b) == order.leq(a, b), (a, b)


def test_orbit_has_unique_min_and_max():
    for n in (2, 3, 4):
        for k in range(n + 1):
            elems = renner.orbit(n, k)
            nu = renner.orbit_minimum(n, k)
            top = renner.orbit_maximum(n, k)
            assert all(order.leq(nu, w) for w in elems)
            assert all(order.leq(w, top) for w in elems)


def test_interval_examples():
    linear = order.interval((0, 0, 0, 1), (0, 0, 0, 3))
    assert len(linear.elements) == 3
    assert len(linear.covers) == 2
    diamond = order.interval((0, 0, 1, 2), (0, 0, 2, 3))
    assert len(diamond.elements) == 4
    assert len(diamond.covers) == 4
    point = order.interval((0, 1), (0, 1))
    assert point.elements == ((0, 1),)
    assert point.covers == ()


def test_interval_errors():
    with pytest.raises(ValueError):
        order.interval((0, 0, 1, 0), (0, 0, 0, 3))  # incomparable, same orbit
    with pytest.raises(ValueError):
        order.interval((0, 0, 0, 1), (0, 0, 1, 2))  # different orbits


@pytest.mark.parametrize("n", [2, 3])
def test_covers_match_generic_transitive_reduction(n):
    for k in range(n + 1):
        elems = renner.orbit(n, k)
        for theta, sigma in itertools.product(elems, repeat=2):
            if not order.leq(theta, sigma):
                continue
            poset = order.interval(theta, sigma)
            generic = order.transitive_reduction(poset.elements, order.leq)
            assert set(poset.covers) == set(generic), (theta, sigma)


def test_mobius_direct_examples():
    assert order.mobius_direct((0, 1), (0, 1)) == 1
    assert order.mobius_direct((0, 0, 0, 1), (0, 0, 0, 3)) == 0
    assert order.mobius_direct((0, 0, 1, 2), (0, 0, 2, 3)) == 1
    # incomparable same-orbit pair
    assert order.mobius_direct((0, 0, 1, 0), (0, 0, 0, 3)) == 0
    with pytest.raises(ValueError):
        order.mobius_direct((0, 0, 0, 1), (0, 0, 1, 2))


@pytest.mark.parametrize("n", [2, 3])
def test_mobius_direct_matches_chain_count_oracle(n):
    # Philip Hall's signed chain count; kept to intervals with at most
    # five interior elements so the permutation enumeration stays small
    for k in range(n + 1):
        elems = renner.orbit(n, k)
        for theta, sigma in itertools.product(elems, repeat=2):
            if not order.leq(theta, sigma):
                continue
            inside = order.interval_elements(theta, sigma)
            if len(inside) - 2 <= 5:
                expected = mobius_bruteforce(inside, order.leq, theta, sigma)
                assert order.mobius_direct(theta, sigma) == expected


@pytest.mark.parametrize("n,k", [(4, 0), (4, 1), (4, 2), (4, 3), (4, 4),
                                 (3, 1), (3, 2)])
def test_check_graded_passes(n, k):
    report = order.check_graded(renner.orbit(n, k))
    assert report.passed, report.violations


def test_hasse_dot_shape():
    dot = order.hasse_dot(order.interval((0, 0, 0, 1), (0, 0, 0, 3)))
    assert dot.count("->") == 2
    assert dot.count("[len=") == 3
    assert '"0001" [len=0];' in dot
    assert dot.startswith("digraph hasse {")
