import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import lattices, lattices_upto, members_upto
from srlkit import fixtures as fx
from srlkit.classes import A1, A2, A3, A4, A5, A6, box_set, check_laws, check_srl, check_srlbs, check_srs
from srlkit.enumerate import bounded_sublattices, enumerate_class
from srlkit.order import FiniteLattice, InvalidStructure, is_distributive, is_sublattice
from srlkit.pairs import AlgebraPair, NoMaximum, build_implication, build_srs_pair, extract_pair, two_srl


def test_chain3_pair_table():
    L = FiniteLattice.chain(3)
    A = build_implication(AlgebraPair(L, {0, 2}))
    # m -> 0 = 0, 1 -> m = 0, x -> x = 1
    assert A.imp.tolist() == [[2, 2, 2], [0, 2, 2], [0, 0, 2]]
    assert A.same_tables(fx.get("chain3-pair"))


def test_M_table_from_its_pair():
    A = fx.get("M")
    D = frozenset(A.index(x) for x in ("0", "b", "1"))
    B = build_implication(AlgebraPair(fx.lattice_M(), D))
    assert np.array_equal(B.imp, A.imp)
    assert extract_pair(A).D == D


def test_N_box_set():
    A = fx.get("N")
    assert sorted(A.name(d) for d in extract_pair(A).D) == ["0", "1", "a"]
    assert np.array_equal(build_implication(extract_pair(A)).imp, A.imp)


def test_heyting_pair_is_residuum():
    L = FiniteLattice.chain(4)
    A = build_srs_pair(AlgebraPair(L, set(range(4))))
    for a, b in itertools.product(range(4), repeat=2):
        assert A.imp[a, b] == (3 if a <= b else b)
    assert extract_pair(build_implication(AlgebraPair(L, set(range(4))))).D == frozenset(range(4))


def test_srs_pair_without_bottom_in_D():
    L = FiniteLattice.chain(2)
    with pytest.raises(NoMaximum) as e:
        build_srs_pair(AlgebraPair(L, {1}))
    assert (e.value.a, e.value.b) == (1, 0)


def test_chain3_srs_reduct():
    A = build_srs_pair(AlgebraPair(FiniteLattice.chain(3), {0, 2}))
    assert A.join is None and check_srs(A).member


def test_pair_validation():
    L = FiniteLattice.chain(3)
    with pytest.raises(InvalidStructure):
        AlgebraPair(L, {0, 1})          # misses top
    with pytest.raises(InvalidStructure):
        AlgebraPair(L, {5, 2})
    with pytest.raises(InvalidStructure):
        build_implication(AlgebraPair(L, {1, 2}))   # not bounded


def test_two_srl_on_N():
    L = fx.lattice_N()
    A = two_srl(L)
    a, b = 1, 2
    assert A.imp[b, a] == L.bottom and A.imp[a, L.top] == L.top
    assert check_laws(A, [A1, A2, A3, A4, A5, A6]).member


def test_no_maximum_in_some_nondistributive_pair():
    """Some bounded sublattice of a non-distributive lattice has an E_ab without maximum."""
    hits = []
    for L in lattices_upto(5):
        if is_distributive(L):
            continue
        for D in bounded_sublattices(L):
            try:
                build_implication(AlgebraPair(L, D), verify=False)
            except NoMaximum:
                hits.append((L.size, sorted(D)))
    assert hits
    # and the oracle agrees on every one of them
    for L in lattices_upto(5):
        for D in bounded_sublattices(L):
            leq, meet = L.leq.tolist(), L.meet.tolist()
            ref = oracles.max_table(L.size, leq, meet, D)
            try:
                got = build_implication(AlgebraPair(L, D), verify=False).imp.tolist()
            except NoMaximum:
                got = None
            assert got == ref


@given(lattices(5))
def test_two_srl_equals_pair_with_bounds(L):
    D = {L.bottom, L.top}
    assert np.array_equal(two_srl(L).imp, build_implication(AlgebraPair(L, D), verify=False).imp)


def test_two_srl_satisfies_A1_to_A6_on_all_lattices_to_six():
    for L in lattices_upto(6):
        assert check_laws(two_srl(L), [A1, A2, A3, A4, A5, A6]).member


@given(lattices(6), st.data())
def test_distributive_pairs_never_fail(L, data):
    if not is_distributive(L):
        return
    Ds = bounded_sublattices(L)
    D = data.draw(st.sampled_from(Ds))
    A = build_implication(AlgebraPair(L, D))
    assert check_srl(A).member
    assert extract_pair(A).D == D
    # residuation inside D
    for d in D:
        for a, b in itertools.product(range(L.size), repeat=2):
            assert bool(L.leq[d, A.imp[a, b]]) == bool(L.leq[L.meet[d, a], b])


@pytest.mark.parametrize("cls", ["srl", "srlbs"])
def test_round_trip_on_enumerated_members(cls):
    for n in range(1, 6):
        for A in enumerate_class(n, cls):
            B = build_implication(extract_pair(A))
            assert np.array_equal(B.imp, A.imp)


def test_pair_D_restricted_is_heyting():
    for A in members_upto("srl", 4):
        D = sorted(box_set(A))
        for a, b in itertools.product(D, repeat=2):
            assert A.imp[a, b] in D
        for d, a, b in itertools.product(D, repeat=3):
            assert bool(A.lattice.leq[d, A.imp[a, b]]) == bool(A.lattice.leq[A.meet[d, a], b])


def test_srlbs_members_pass():
    for A in members_upto("srlbs", 4):
        assert check_srlbs(build_implication(extract_pair(A), verify=False)).member
    assert is_sublattice(fx.lattice_M(), {0, 1, 4})
