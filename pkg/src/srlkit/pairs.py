"""Implications built from a lattice and a designated subset.

Given (L, D), a -> b is the greatest d in D with d /\\ a <= b, when that
maximum exists.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .algebra import FiniteAlgebra
from .classes import box_set, check_srl, check_srlbs, check_srs
from .order import FiniteLattice, InvalidStructure, is_distributive, is_sublattice


class NoMaximum(ValueError):
    def __init__(self, a: int, b: int, candidates):
        super().__init__(f"E_ab for a={a}, b={b} has no greatest element (candidates {sorted(candidates)})")
        self.a, self.b = a, b
        self.candidates = frozenset(candidates)


@dataclass(frozen=True)
class AlgebraPair:
    L: FiniteLattice
    D: frozenset

    def __post_init__(self):
        object.__setattr__(self, "D", frozenset(int(d) for d in self.D))
        if not self.D <= set(range(self.L.size)):
            raise InvalidStructure("D is not a subset of the carrier")
        if self.L.top not in self.D:
            raise InvalidStructure("D must contain the top element")


def _max_table(L: FiniteLattice, D: Iterable[int]) -> np.ndarray:
    """imp[a, b] = max {d in D : d /\\ a <= b}, raising NoMaximum otherwise."""
    n = L.size
    Ds = np.array(sorted(D), dtype=np.int64)
    leq = L.leq
    # ok[a, b, k]: D[k] /\ a <= b
    ok = leq[L.meet[Ds[None, :], np.arange(n)[:, None]][:, None, :], np.arange(n)[None, :, None]]
    imp = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            cands = Ds[ok[a, b]]
            if len(cands) == 0:
                raise NoMaximum(a, b, [])
            above_all = [c for c in cands if leq[cands, c].all()]
            if not above_all:
                raise NoMaximum(a, b, cands.tolist())
            imp[a, b] = above_all[0]
    return imp


def build_implication(p: AlgebraPair, verify: bool = True) -> FiniteAlgebra:
    """The subresiduated lattice (broad sense when L is not distributive)."""
    L = p.L
    if L.join is None or L.bottom is None:
        raise InvalidStructure("build_implication needs a bounded lattice")
    if not is_sublattice(L, p.D, bounded=True):
        raise InvalidStructure("D is not a bounded sublattice of L")
    A = FiniteAlgebra.from_lattice(L, _max_table(L, p.D))
    if verify:
        v = check_srl(A) if is_distributive(L) else check_srlbs(A)
        if not v.member:
            raise AssertionError(f"pair construction produced a non-member: {v.violations}")
    return A


def build_srs_pair(p: AlgebraPair, verify: bool = True) -> FiniteAlgebra:
    """The {/\\, ->, 1}-algebra of an SRS-pair; any join table is dropped."""
    L = p.L
    D = sorted(p.D)
    sub = L.meet[np.ix_(D, D)]
    if not set(np.unique(sub).tolist()) <= p.D:
        raise InvalidStructure("D is not closed under meet")
    A = FiniteAlgebra(L.size, _max_table(L, p.D), L.top, meet=L.meet)
    if verify:
        v = check_srs(A)
        if not v.member:
            raise AssertionError(f"SRS-pair construction produced a non-member: {v.violations}")
    return A


def two_srl(L: FiniteLattice) -> FiniteAlgebra:
    """a -> b = 1 if a <= b else 0, on any bounded lattice."""
    if L.bottom is None or L.join is None:
        raise InvalidStructure("two_srl needs a bounded lattice")
    imp = np.where(L.leq, L.top, L.bottom)
    return FiniteAlgebra.from_lattice(L, imp)


def extract_pair(A: FiniteAlgebra) -> AlgebraPair:
    """(underlying lattice, box A); inverse of build_implication on members."""
    L = A.lattice
    if L is None or L.join is None:
        raise InvalidStructure("algebra has no underlying lattice")
    return AlgebraPair(L, box_set(A))
