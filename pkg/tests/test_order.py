import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import lattices
from srlkit.order import (FiniteLattice, FinitePoset, InvalidStructure, SizeCapExceeded,
                          enumerate_lattices, generated_meet_subsemilattice, generated_sublattice,
                          is_distributive, is_sublattice, upset_masks, upsets)


def test_lattice_counts_match_oracle():
    got = [len(enumerate_lattices(n)) for n in range(1, 6)]
    assert got == [len(oracles.all_lattices(n)) for n in range(1, 6)]
    assert got == [1, 1, 1, 2, 5]
    assert len(enumerate_lattices(6)) == 15


def test_enumerated_lattices_are_normalized():
    for n in range(2, 7):
        for L in enumerate_lattices(n):
            assert L.bottom == 0 and L.top == n - 1


def test_distributive_counts():
    # five lattices of size 5: only M3 and N5 fail
    assert sum(is_distributive(L) for L in enumerate_lattices(5)) == 3
    for n in range(1, 6):
        for leq, meet, join, _, _ in oracles.all_lattices(n):
            L = FiniteLattice.from_leq(leq)
            assert is_distributive(L) == oracles.is_distributive(n, meet, join)


def test_poset_validation():
    with pytest.raises(InvalidStructure):
        FinitePoset(2, [[True, True], [True, True]])
    with pytest.raises(InvalidStructure):
        FinitePoset(2, [[False, False], [False, True]])
    with pytest.raises(InvalidStructure):
        FinitePoset(3, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    P = FinitePoset.from_pairs(3, [(0, 1), (1, 2)])
    assert P.leq[0, 2]


def test_non_lattice_rejected():
    # two incomparable maximal elements
    with pytest.raises(InvalidStructure):
        FiniteLattice.from_leq([[1, 1, 1], [0, 1, 0], [0, 0, 1]])


def test_upsets_of_antichain_and_chain():
    anti = FinitePoset(3, np.eye(3, dtype=bool))
    assert len(upset_masks(anti)) == 8
    chain = FiniteLattice.chain(4).poset
    assert len(upset_masks(chain)) == 5
    U = upsets(anti)
    assert U.size == 8 and is_distributive(U)


def test_upset_cap():
    with pytest.raises(SizeCapExceeded):
        upset_masks(FinitePoset(5, np.eye(5, dtype=bool)), cap=4)


@given(lattices(5))
def test_upsets_match_oracle(L):
    n = L.size
    leq = L.leq.tolist()
    ours = {frozenset(j for j in range(n) if m >> j & 1) for m in upset_masks(L.poset)}
    assert ours == set(oracles.upsets(n, leq))
    U = upsets(L.poset)
    assert is_distributive(U)
    assert U.labels[U.bottom] == frozenset() and U.labels[U.top] == frozenset(range(n))
    for a, b in itertools.product(range(U.size), repeat=2):
        assert U.labels[U.meet[a, b]] == U.labels[a] & U.labels[b]
        assert U.labels[U.join[a, b]] == U.labels[a] | U.labels[b]


@given(lattices(6), st.data())
def test_generated_sublattice_is_least(L, data):
    X = data.draw(st.sets(st.integers(0, L.size - 1), max_size=3))
    S = generated_sublattice(L, X)
    assert set(X) <= S and is_sublattice(L, S)
    # least: every bounded sublattice containing X contains S
    for k in range(L.size + 1):
        for T in itertools.combinations(range(L.size), k):
            if set(X) <= set(T) and is_sublattice(L, T):
                assert S <= set(T)


@given(lattices(6), st.data())
def test_meet_subsemilattice_closed(L, data):
    X = data.draw(st.sets(st.integers(0, L.size - 1), min_size=1, max_size=3))
    S = generated_meet_subsemilattice(L, X)
    assert set(X) <= S
    assert all(int(L.meet[a, b]) in S for a in S for b in S)


def test_sublattice_restriction():
    L = enumerate_lattices(5)[0]
    sub, keep = L.sublattice([0, L.top])
    assert sub.size == 2 and keep == [0, L.top]
