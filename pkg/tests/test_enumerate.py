import itertools

import pytest

import oracles
from srlkit import fixtures as fx
from srlkit.algebra import find_isomorphism
from srlkit.classes import check_class
from srlkit.enumerate import DEFAULT_CAPS, enumerate_class, enumerate_upto
from srlkit.order import SizeCapExceeded
from srlkit.pairs import extract_pair


def test_caps():
    for cls, cap in DEFAULT_CAPS.items():
        with pytest.raises(SizeCapExceeded):
            enumerate_class(cap + 1, cls)
    with pytest.raises(ValueError):
        enumerate_class(0, "sha")
    with pytest.raises(KeyError):
        enumerate_class(2, "boolean")


def test_cap_override():
    with pytest.raises(SizeCapExceeded):
        enumerate_class(6, "srl")
    found = enumerate_class(6, "srl", cap=6)
    assert len(found) > len(enumerate_class(5, "srl"))
    assert all(check_class(A, "srl").member for A in found)
    with pytest.raises(SizeCapExceeded):
        enumerate_class(3, "sha", cap=2)


def test_one_element_sha():
    assert len(enumerate_class(1, "sha")) == 1


def test_two_element_sha():
    tables = [A.imp.tolist() for A in enumerate_class(2, "sha")]
    assert [[1, 1], [0, 1]] in tables          # Boolean implication
    assert [[1, 1], [1, 1]] not in tables      # constant 1 fails (A)


def test_three_element_srl_has_heyting_chain_and_thin_D():
    found = enumerate_class(3, "srl")
    Ds = sorted(sorted(extract_pair(A).D) for A in found)
    assert Ds == [[0, 1, 2], [0, 2]]


def test_size_five_pair_counts():
    assert [len(enumerate_class(5, c)) for c in ("srl", "srlbs", "srs")] == [18, 26, 26]


def test_size_five_pair_counts_match_oracle():
    counts = {"srl": set(), "srlbs": set(), "srs": set()}
    n = 5
    for leq, meet, join, bot, top in oracles.all_lattices(n):
        inner = [x for x in range(n) if x not in (bot, top)]
        for r in range(len(inner) + 1):
            for extra in itertools.combinations(inner, r):
                D = set(extra) | {bot, top}
                if any(meet[a][b] not in D or join[a][b] not in D for a in D for b in D):
                    continue
                imp = oracles.max_table(n, leq, meet, D)
                if imp is None:
                    continue
                if oracles.srl(n, imp, meet, join, top, bot):
                    counts["srl"].add(oracles._canon(n, [imp, meet], [top, bot]))
                if oracles.srlbs(n, imp, meet, join, top, bot):
                    counts["srlbs"].add(oracles._canon(n, [imp, meet], [top, bot]))
                if oracles.srs(n, imp, meet, top):
                    counts["srs"].add(oracles._canon(n, [imp, meet], [top]))
    assert {k: len(v) for k, v in counts.items()} == {c: len(enumerate_class(5, c)) for c in counts}


def test_labelled_counts_dominate():
    for cls in ("sha", "srl", "shs"):
        for n in range(1, 4):
            assert len(enumerate_class(n, cls, up_to_iso=False)) >= len(enumerate_class(n, cls))
    assert len(enumerate_class(3, "sha", up_to_iso=False)) == 5


def test_sha_labelled_count_matches_raw_scan():
    # raw scan over all tables with top fixed, no isomorphism reduction
    n, top = 3, 2
    raw = 0
    for vals in itertools.product(range(n), repeat=n * n):
        imp = [list(vals[i * n:(i + 1) * n]) for i in range(n)]
        raw += oracles.sha(n, imp, top)
    assert raw == len(enumerate_class(3, "sha", up_to_iso=False))


def test_members_pass_their_class():
    for cls in DEFAULT_CAPS:
        for A in enumerate_upto(3, cls):
            assert check_class(A, cls).member, cls


def test_determinism_and_normal_form():
    a = [A.to_json() for A in enumerate_class(4, "srl")]
    b = [A.to_json() for A in enumerate_class(4, "srl")]
    assert a == b
    for A in enumerate_class(4, "sha"):
        assert A.top == A.size - 1
    for A in enumerate_class(4, "srl"):
        assert A.bottom == 0 and A.top == 3


def test_no_duplicates_up_to_iso():
    for cls in ("sha", "srl", "shs"):
        found = enumerate_class(4, cls)
        for i, A in enumerate(found):
            for B in found[i + 1:]:
                assert not find_isomorphism(A, B) is not None


def test_fixtures_appear_in_enumeration():
    B2 = fx.get("B2")
    assert any(find_isomorphism(A, B2) is not None for A in enumerate_class(4, "shs"))
    M = fx.get("M")
    assert any(find_isomorphism(A, M) is not None for A in enumerate_class(5, "srlbs"))
    assert not any(find_isomorphism(A, M) is not None for A in enumerate_class(5, "srl"))
