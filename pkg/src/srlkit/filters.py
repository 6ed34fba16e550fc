"""Implicative and lattice filters, brackets, and the upset representation.

A filter family is ordered by inclusion; its upsets form a distributive
lattice into which the algebra embeds via a |-> {F : a in F}.  The
designated part D of that lattice is generated by the images of box
elements, and the implication of the representation is the maximum scan
from :mod:`srlkit.pairs`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

import numpy as np

from .algebra import FiniteAlgebra
from .classes import check_sha, check_srl, check_srs
from .order import (DEFAULT_UPSET_CAP, FiniteLattice, FinitePoset, SizeCapExceeded,
                    generated_sublattice, is_distributive, upsets)
from .pairs import AlgebraPair, build_implication

Kind = Literal["implicative", "lattice"]
DEFAULT_FILTER_CAP = 6


def bracket(xs: Sequence[int], a: int, A: FiniteAlgebra) -> int:
    """[x_1, ..., x_n, a] = x_1 -> (x_2 -> ... (x_n -> a))."""
    v = int(a)
    for x in reversed(xs):
        v = int(A.imp[x, v])
    return v


@dataclass(frozen=True)
class FilterFamily:
    base: FiniteAlgebra = field(repr=False)
    filters: tuple[frozenset, ...]
    kind: str

    def __len__(self):
        return len(self.filters)

    def index(self, F: Iterable[int]) -> int:
        return self.filters.index(frozenset(F))

    def inclusion(self) -> FinitePoset:
        k = len(self.filters)
        leq = np.array([[self.filters[i] <= self.filters[j] for j in range(k)] for i in range(k)])
        return FinitePoset(k, leq)


def _subsets_with_top(A: FiniteAlgebra, cap: int):
    if A.size > cap:
        raise SizeCapExceeded(f"filter enumeration is capped at carrier size {cap}")
    others = [x for x in range(A.size) if x != A.top]
    for r in range(len(others) + 1):
        for xs in itertools.combinations(others, r):
            yield frozenset(xs) | {A.top}


def is_implicative_filter(A: FiniteAlgebra, F: Iterable[int]) -> bool:
    F = frozenset(F)
    if A.top not in F:
        return False
    inside = np.zeros(A.size, dtype=bool)
    inside[list(F)] = True
    rows = A.imp[sorted(F)]           # a in F, a -> b in F  =>  b in F
    return bool(inside[np.flatnonzero(inside[rows].any(axis=0))].all())


def all_implicative_filters(A: FiniteAlgebra, cap: int = DEFAULT_FILTER_CAP) -> FilterFamily:
    fs = tuple(F for F in _subsets_with_top(A, cap) if is_implicative_filter(A, F))
    return FilterFamily(A, fs, "implicative")


def _meet_leq(A: FiniteAlgebra) -> np.ndarray:
    if A.meet is None:
        raise ValueError("lattice filters need a meet operation")
    return A.meet == np.arange(A.size)[:, None]


def is_lattice_filter(A: FiniteAlgebra, F: Iterable[int]) -> bool:
    F = frozenset(F)
    if not F:
        return False
    leq = _meet_leq(A)
    idx = sorted(F)
    if any(not set(np.flatnonzero(leq[a]).tolist()) <= F for a in idx):
        return False
    return set(np.unique(A.meet[np.ix_(idx, idx)]).tolist()) <= F


def all_lattice_filters(A: FiniteAlgebra, cap: int = DEFAULT_FILTER_CAP) -> FilterFamily:
    fs = tuple(F for F in _subsets_with_top(A, cap) if is_lattice_filter(A, F))
    return FilterFamily(A, fs, "lattice")


def all_filters(A: FiniteAlgebra, kind: Kind, cap: int = DEFAULT_FILTER_CAP) -> FilterFamily:
    if kind == "implicative":
        return all_implicative_filters(A, cap)
    if kind == "lattice":
        return all_lattice_filters(A, cap)
    raise ValueError(f"unknown filter kind {kind!r}")


def generated_implicative_filter(A: FiniteAlgebra, X: Iterable[int]) -> frozenset:
    """Least implicative filter containing X, by modus-ponens closure."""
    cur = set(int(x) for x in X) | {A.top}
    while True:
        idx = sorted(cur)
        added = {b for a in idx for b in range(A.size) if b not in cur and int(A.imp[a, b]) in cur}
        if not added:
            return frozenset(cur)
        cur |= added


def bracket_generated(A: FiniteAlgebra, X: Iterable[int], a: int) -> frozenset:
    """{b : [x_1, ..., x_n, a, b] = 1 for some x_1, ..., x_n in X}.

    The values [x_1, ..., x_n, a, b] for fixed b are closed under prefixing
    with some x in X, so they are computed as a fixpoint, which covers every
    length at once.
    """
    X = sorted(set(int(x) for x in X))
    out = set()
    for b in range(A.size):
        vals = {int(A.imp[a, b])}
        frontier = set(vals)
        while frontier:
            nxt = {int(A.imp[x, c]) for x in X for c in frontier} - vals
            vals |= nxt
            frontier = nxt
        if A.top in vals:
            out.add(b)
    return frozenset(out)


def separate(A: FiniteAlgebra, F: Iterable[int], a: int, b: int) -> frozenset:
    """An implicative filter G with a in G, b not in G and F /\\ box A inside G."""
    F = frozenset(F)
    if int(A.imp[a, b]) in F:
        raise ValueError(f"{A.name(a)} -> {A.name(b)} lies in F; nothing to separate")
    core = F & A.box_set()
    G = generated_implicative_filter(A, core | {a})
    assert a in G and b not in G and core <= G, "separation failed"
    return G


def principal_upset(A: FiniteAlgebra, a: int) -> frozenset:
    """{b : a -> b = 1}."""
    return frozenset(np.flatnonzero(A.imp[a] == A.top).tolist())


@dataclass(frozen=True)
class UpsetAlgebra:
    filters: FilterFamily
    upset_lattice: FiniteLattice = field(repr=False)
    D: frozenset
    algebra: FiniteAlgebra = field(repr=False)   # (upset lattice, residuum)
    j: tuple[int, ...]

    @property
    def imp(self) -> np.ndarray:
        return self.algebra.imp

    def upset(self, u: int) -> frozenset:
        """The element u of the upset lattice as a set of filter indices."""
        return self.upset_lattice.labels[u]


def _index_of_mask(U: FiniteLattice) -> dict:
    return {lab: i for i, lab in enumerate(U.labels)}


def build_upset_algebra(A: FiniteAlgebra, kind: Kind = "implicative", *,
                        filter_cap: int = DEFAULT_FILTER_CAP,
                        upset_cap: int = DEFAULT_UPSET_CAP,
                        verify: bool = True) -> UpsetAlgebra:
    if verify:
        v = check_sha(A) if kind == "implicative" else check_srs(A)
        if not v.member:
            raise ValueError(f"algebra is not in the class required for {kind} filters: {v.violations}")
    fam = all_filters(A, kind, filter_cap)
    U = upsets(fam.inclusion(), upset_cap)
    where = _index_of_mask(U)
    j = tuple(where[frozenset(i for i, F in enumerate(fam.filters) if a in F)] for a in range(A.size))
    gens = {j[b] for b in A.box_set()}
    D = generated_sublattice(U, gens, bounded=True)
    alg = build_implication(AlgebraPair(U, D), verify=False)
    if verify:
        v = check_srl(alg)
        if not v.member:
            raise AssertionError(f"upset algebra is not subresiduated: {v.violations[:3]}")
    return UpsetAlgebra(fam, U, D, alg, j)


def j_map(A: FiniteAlgebra, ua: UpsetAlgebra) -> list[int]:
    if ua.filters.base is not A and not ua.filters.base.same_tables(A):
        raise ValueError("upset algebra was built from a different algebra")
    return list(ua.j)


def union_residuum(ua: UpsetAlgebra, u: int, v: int) -> int:
    """U => V as the union of all W in D with W /\\ U <= V."""
    U = ua.upset_lattice
    acc = U.bottom
    for w in ua.D:
        if U.leq[U.meet[w, u], v]:
            acc = int(U.join[acc, w])
    return acc


def verify_representation(A: FiniteAlgebra, kind: Kind = "implicative", *,
                          filter_cap: int = DEFAULT_FILTER_CAP,
                          upset_cap: int = DEFAULT_UPSET_CAP) -> dict:
    """Check that j is an embedding preserving -> (and /\\ for lattice filters)."""
    ua = build_upset_algebra(A, kind, filter_cap=filter_cap, upset_cap=upset_cap, verify=False)
    U = ua.upset_lattice
    j = np.array(ua.j)
    n = A.size
    failures = []
    if len(set(ua.j)) != n:
        failures.append({"check": "injective"})
    nat = A.natural_leq()
    emb = U.leq[j[:, None], j[None, :]]
    for a, b in np.argwhere(nat != emb):
        failures.append({"check": "order-embedding", "witness": [int(a), int(b)]})
    lhs = j[A.imp]
    rhs = ua.algebra.imp[j[:, None], j[None, :]]
    for a, b in np.argwhere(lhs != rhs):
        failures.append({"check": "imp", "witness": [int(a), int(b)]})
    if kind == "lattice":
        lhs = j[A.meet]
        rhs = U.meet[j[:, None], j[None, :]]
        for a, b in np.argwhere(lhs != rhs):
            failures.append({"check": "meet", "witness": [int(a), int(b)]})
    srl = check_srl(ua.algebra)
    if not srl.member:
        failures.append({"check": "srl", "violations": srl.to_json()["violations"]})
    if not is_distributive(U.sublattice(ua.D)[0]):
        failures.append({"check": "D-distributive"})
    return {
        "kind": kind,
        "filters": len(ua.filters),
        "upsets": U.size,
        "D": len(ua.D),
        "passed": not failures,
        "failures": failures,
    }
