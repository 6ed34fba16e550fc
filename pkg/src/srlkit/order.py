"""Finite posets and lattices stored as relation/operation tables.

Elements are always the integers ``0..size-1``; any human-readable names are
metadata only.  Tables are validated at construction so inner loops elsewhere
can index them blindly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_UPSET_CAP = 20


class SizeCapExceeded(ValueError):
    pass


class InvalidStructure(ValueError):
    pass


def _frozen(a, dtype=None) -> np.ndarray:
    arr = np.array(a, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _table_dtype(n: int):
    return np.int8 if n <= 127 else (np.int16 if n <= 32767 else np.int32)


@dataclass(frozen=True, eq=False)
class FinitePoset:
    size: int
    leq: np.ndarray

    def __post_init__(self):
        leq = _frozen(self.leq, dtype=bool)
        object.__setattr__(self, "leq", leq)
        n = self.size
        if leq.shape != (n, n):
            raise InvalidStructure(f"leq must be {n}x{n}, got {leq.shape}")
        if not leq.diagonal().all():
            raise InvalidStructure("leq is not reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise InvalidStructure("leq is not antisymmetric")
        # i<=j and j<=k  implies  i<=k
        comp = (leq.astype(np.int32) @ leq.astype(np.int32)) > 0
        if (comp & ~leq).any():
            raise InvalidStructure("leq is not transitive")

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Sequence[int]]) -> "FinitePoset":
        """Reflexive-transitive closure of the given (lower, upper) pairs."""
        leq = np.eye(size, dtype=bool)
        for a, b in pairs:
            leq[a, b] = True
        for k in range(size):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        return cls(size, leq)

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self.size == other.size and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash((self.size, self.leq.tobytes()))

    def upset_of(self, xs: Iterable[int]) -> frozenset:
        xs = list(xs)
        if not xs:
            return frozenset()
        return frozenset(np.flatnonzero(self.leq[xs].any(axis=0)).tolist())

    def is_upset(self, s: Iterable[int]) -> bool:
        s = set(s)
        return self.upset_of(s) == s

    def maximal(self) -> list[int]:
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        return [i for i in range(self.size) if not strict[i].any()]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (a, b) with a covered by b."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        out = []
        for a, b in zip(*np.nonzero(strict)):
            between = strict[a] & strict[:, b]
            if not between.any():
                out.append((int(a), int(b)))
        return out


def _glb_table(leq: np.ndarray) -> Optional[np.ndarray]:
    """Greatest-lower-bound table, or None if some pair has no glb."""
    n = leq.shape[0]
    out = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            lower = np.flatnonzero(leq[:, a] & leq[:, b])
            greatest = [c for c in lower if leq[lower, c].all()]
            if len(greatest) != 1:
                return None
            out[a, b] = out[b, a] = greatest[0]
    return out


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """A finite lattice (or, with ``join=None``, a meet-semilattice with top).

    ``meet`` and ``join`` are validated against ``poset.leq`` on construction.
    ``labels`` is optional per-element metadata (e.g. the sets an upset
    lattice is made of).
    """
    poset: FinitePoset
    meet: np.ndarray
    join: Optional[np.ndarray]
    top: int
    bottom: Optional[int] = None
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        n = self.poset.size
        leq = self.poset.leq
        dt = _table_dtype(n)
        meet = _frozen(self.meet, dtype=dt)
        object.__setattr__(self, "meet", meet)
        if meet.shape != (n, n):
            raise InvalidStructure("meet table has wrong shape")
        expected = _glb_table(leq)
        if expected is None or not np.array_equal(meet, expected):
            raise InvalidStructure("meet table is not the infimum of leq")
        if self.join is not None:
            join = _frozen(self.join, dtype=dt)
            object.__setattr__(self, "join", join)
            expected = _glb_table(leq.T)
            if expected is None or not np.array_equal(join, expected):
                raise InvalidStructure("join table is not the supremum of leq")
        if not leq[:, self.top].all():
            raise InvalidStructure("top is not the greatest element")
        if self.bottom is not None and not leq[self.bottom, :].all():
            raise InvalidStructure("bottom is not the least element")

    @property
    def size(self) -> int:
        return self.poset.size

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @classmethod
    def from_leq(cls, leq, labels=None, with_join: bool = True) -> "FiniteLattice":
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        poset = FinitePoset(n, leq)
        meet = _glb_table(leq)
        if meet is None:
            raise InvalidStructure("poset has a pair without infimum")
        join = _glb_table(leq.T) if with_join else None
        if with_join and join is None:
            raise InvalidStructure("poset has a pair without supremum")
        top = int(np.flatnonzero(leq.all(axis=0))[0])
        bots = np.flatnonzero(leq.all(axis=1))
        bottom = int(bots[0]) if len(bots) else None
        return cls(poset, meet, join, top, bottom, labels)

    @classmethod
    def chain(cls, n: int) -> "FiniteLattice":
        return cls.from_leq(np.triu(np.ones((n, n), dtype=bool)))

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return False
        same_join = (self.join is None and other.join is None) or (
            self.join is not None and other.join is not None and np.array_equal(self.join, other.join))
        return self.poset == other.poset and np.array_equal(self.meet, other.meet) and same_join

    def __hash__(self):
        return hash((self.poset, self.meet.tobytes()))

    def sublattice(self, elements: Iterable[int]) -> tuple["FiniteLattice", list[int]]:
        """Restrict to a subset closed under the operations.

        Returns the induced lattice on ``0..k-1`` and the list mapping new
        indices back to old ones (sorted ascending).
        """
        keep = sorted(set(elements))
        sub_leq = self.leq[np.ix_(keep, keep)]
        labels = None if self.labels is None else tuple(self.labels[i] for i in keep)
        return FiniteLattice.from_leq(sub_leq, labels, with_join=self.join is not None), keep


def is_distributive(L: FiniteLattice) -> bool:
    """Brute-force check of x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z)."""
    if L.join is None:
        raise InvalidStructure("distributivity needs a join table")
    n = L.size
    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    lhs = L.meet[x, L.join[y, z]]
    rhs = L.join[L.meet[x, y], L.meet[x, z]]
    return bool((lhs == rhs).all())


def upset_masks(P: FinitePoset, cap: int = DEFAULT_UPSET_CAP) -> list[int]:
    """All upsets of P as bitmasks, sorted by (popcount, value)."""
    if P.size > cap:
        raise SizeCapExceeded(f"poset of size {P.size} exceeds upset cap {cap}")
    n = P.size
    above = [sum(1 << j for j in range(n) if P.leq[i, j]) for i in range(n)]
    below = [sum(1 << j for j in range(n) if P.leq[j, i]) for i in range(n)]
    # Walk elements in a linear extension; each upset is decided by
    # including or excluding maximal-first, with forced choices propagated.
    order = sorted(range(n), key=lambda i: -int(P.leq[i].sum()))
    out = []

    def rec(k: int, inside: int, outside: int):
        if k == n:
            out.append(inside)
            return
        i = order[k]
        bit = 1 << i
        if inside & bit or outside & bit:
            rec(k + 1, inside, outside)
            return
        if not (above[i] & outside):
            rec(k + 1, inside | above[i], outside)
        if not (below[i] & inside):
            rec(k + 1, inside, outside | below[i])

    rec(0, 0, 0)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def upsets(P: FinitePoset, cap: int = DEFAULT_UPSET_CAP) -> FiniteLattice:
    """The lattice of up-closed subsets of P, ordered by inclusion.

    Labels are the upsets as frozensets of elements of P.
    """
    masks = np.array(upset_masks(P, cap), dtype=np.int64)
    m = len(masks)
    meet_m = masks[:, None] & masks[None, :]
    join_m = masks[:, None] | masks[None, :]
    # masks are distinct; searchsorted needs them sorted by value
    order = np.argsort(masks)
    sorted_masks = masks[order]
    meet = order[np.searchsorted(sorted_masks, meet_m)]
    join = order[np.searchsorted(sorted_masks, join_m)]
    leq = (meet_m == masks[:, None])
    labels = tuple(frozenset(j for j in range(P.size) if (int(mk) >> j) & 1) for mk in masks)
    poset = FinitePoset(m, leq)
    return FiniteLattice(poset, meet, join, top=m - 1, bottom=0, labels=labels)


def generated_sublattice(L: FiniteLattice, X: Iterable[int], bounded: bool = True) -> frozenset:
    """Least subset containing X (and the bounds, if asked) closed under meet and join."""
    cur = set(int(x) for x in X)
    if bounded:
        cur.add(L.top)
        if L.bottom is not None:
            cur.add(L.bottom)
    frontier = list(cur)
    while frontier:
        new = set()
        for a in frontier:
            for b in list(cur):
                for t in (L.meet, L.join):
                    if t is None:
                        continue
                    c = int(t[a, b])
                    if c not in cur:
                        new.add(c)
        cur |= new
        frontier = list(new)
    return frozenset(cur)


def generated_meet_subsemilattice(L: FiniteLattice, X: Iterable[int]) -> frozenset:
    cur = set(int(x) for x in X)
    frontier = list(cur)
    while frontier:
        new = {int(L.meet[a, b]) for a in frontier for b in cur} - cur
        cur |= new
        frontier = list(new)
    return frozenset(cur)


def is_sublattice(L: FiniteLattice, D: Iterable[int], bounded: bool = True) -> bool:
    D = set(D)
    if bounded and (L.top not in D or (L.bottom is not None and L.bottom not in D)):
        return False
    idx = sorted(D)
    if not idx:
        return True
    ix = np.ix_(idx, idx)
    if not set(np.unique(L.meet[ix]).tolist()) <= D:
        return False
    if L.join is not None and not set(np.unique(L.join[ix]).tolist()) <= D:
        return False
    return True


def enumerate_lattices(n: int) -> list[FiniteLattice]:
    """All lattices of size n up to isomorphism, with bottom 0 and top n-1.

    Inner elements 1..n-2 are numbered along a linear extension, so only
    pairs i<j are candidate relations; duplicates are removed by a canonical
    form over permutations of the inner elements.
    """
    if n < 1:
        return []
    if n == 1:
        return [FiniteLattice.from_leq(np.ones((1, 1), dtype=bool))]
    inner = list(range(1, n - 1))
    pairs = list(itertools.combinations(inner, 2))
    seen = set()
    out = []
    perms = [np.array([0, *p, n - 1]) for p in itertools.permutations(inner)]
    for bits in range(1 << len(pairs)):
        leq = np.eye(n, dtype=bool)
        leq[0, :] = True
        leq[:, n - 1] = True
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                leq[i, j] = True
        closed = (leq.astype(np.int32) @ leq.astype(np.int32)) > 0
        if (closed != leq).any():
            continue
        if _glb_table(leq) is None or _glb_table(leq.T) is None:
            continue
        key = min(leq[np.ix_(np.argsort(p), np.argsort(p))].tobytes() for p in perms)
        if key in seen:
            continue
        seen.add(key)
        out.append(FiniteLattice.from_leq(leq))
    return out
