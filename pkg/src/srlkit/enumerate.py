"""Enumeration of small algebras in each class.

Carriers are normalized: lattice-based algebras sit on the lattices from
:func:`enumerate_lattices` (bottom 0, top n-1) and implication-only algebras
have top n-1.  Candidate tables are generated in numpy batches, pruned by
consequences of the class laws that are cheap to impose cell by cell, and
then filtered with :func:`batch_holds`.  Deduplication up to isomorphism
keeps the lexicographically least flattened table over all relabelings that
fix the constants (and, for lattice classes, preserve the order).
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra
from .classes import (CLASS_LAWS, CLASS_TAGS, HEMI_BASE, batch_holds)
from .order import (FiniteLattice, SizeCapExceeded, enumerate_lattices,
                    is_distributive, is_sublattice)
from .pairs import NoMaximum, _max_table

DEFAULT_CAPS = {
    "sha": 4, "hilbert": 4,
    "srl": 5, "srlbs": 5, "srs": 5,
    "shs": 4, "shrl-appendix": 4, "alg-r4star": 4, "alg-plus": 4,
}


def _cartesian(choices: Sequence[Sequence[int]]) -> np.ndarray:
    """All combinations as rows of a (prod, k) array, last column fastest."""
    if not choices:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.asarray(c, dtype=np.int64) for c in choices], indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1)


def _fill(n: int, base: np.ndarray, cells: list[tuple[int, int]], choices) -> np.ndarray:
    """Batch of n x n tables: ``base`` everywhere, ``choices`` on ``cells``."""
    combos = _cartesian(choices)
    out = np.broadcast_to(base, (len(combos), n, n)).copy()
    for k, (x, y) in enumerate(cells):
        out[:, x, y] = combos[:, k]
    return out


@lru_cache(maxsize=None)
def automorphisms(L: FiniteLattice) -> tuple[tuple[int, ...], ...]:
    """Order automorphisms of a small lattice (brute force, identity first)."""
    n = L.size
    leq = L.leq
    out = []
    for p in itertools.permutations(range(n)):
        pa = np.array(p)
        if (leq[np.ix_(pa, pa)] == leq).all():
            out.append(p)
    return tuple(out)


def _relabel_batch(t: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Apply x -> p[x] to a batch of tables (unary or binary)."""
    inv = np.argsort(p)
    if t.ndim == 3:
        return p[t[:, inv][:, :, inv]]
    return p[t[:, inv]]


def canonical_keys(tables: dict, perms) -> np.ndarray:
    """Lexicographically least flattened tables over ``perms``, one row per algebra."""
    names = sorted(tables)
    best = None
    for p in perms:
        pa = np.asarray(p)
        rows = np.concatenate([_relabel_batch(tables[k], pa).reshape(len(tables[k]), -1)
                               for k in names], axis=1)
        if best is None:
            best = rows
            continue
        diff = rows != best
        first = np.where(diff.any(axis=1), diff.argmax(axis=1), 0)
        r = np.arange(len(rows))
        smaller = diff.any(axis=1) & (rows[r, first] < best[r, first])
        best[smaller] = rows[smaller]
    return best


def _dedup(tables: dict, perms, up_to_iso: bool) -> dict:
    """Keep one representative per class, sorted by canonical key."""
    if not up_to_iso:
        return tables
    B = len(next(iter(tables.values())))
    if B == 0:
        return tables
    keys = canonical_keys(tables, perms)
    _, first = np.unique(keys, axis=0, return_index=True)
    # representatives are the canonical tables themselves
    names = sorted(tables)
    out = {}
    offset = 0
    for k in names:
        shape = tables[k].shape[1:]
        width = int(np.prod(shape))
        out[k] = keys[first, offset:offset + width].reshape((len(first),) + shape)
        offset += width
    return out


def _check_cap(n: int, cls: str, cap: Optional[int]):
    limit = DEFAULT_CAPS[cls] if cap is None else cap
    if n > limit:
        raise SizeCapExceeded(f"enumeration of {cls} is capped at size {limit} (asked for {n})")
    if n < 1:
        raise ValueError("carrier size must be positive")


# ---------------------------------------------------------------------------
# implication-only classes


def _sha_candidates(n: int) -> dict:
    top = n - 1
    base = np.full((n, n), top, dtype=np.int64)
    # x -> x = 1 and x -> 1 = 1; every other cell is free
    cells = [(x, y) for x in range(n) for y in range(n - 1) if x != y]
    return {"imp": _fill(n, base, cells, [range(n)] * len(cells))}


def _enum_imp_only(n: int, cls: str, up_to_iso: bool) -> list[FiniteAlgebra]:
    tables = _sha_candidates(n)
    top = n - 1
    keep = batch_holds(tables, top, None, CLASS_LAWS[cls])
    tables = {k: v[keep] for k, v in tables.items()}
    perms = [p + (top,) for p in itertools.permutations(range(n - 1))]
    tables = _dedup(tables, perms, up_to_iso)
    return [FiniteAlgebra(n, t, top) for t in tables["imp"]]


# ---------------------------------------------------------------------------
# pair-based classes


def bounded_sublattices(L: FiniteLattice) -> list[frozenset]:
    """Every bounded sublattice of L, sorted by (size, elements)."""
    inner = [x for x in range(L.size) if x not in (L.bottom, L.top)]
    out = set()
    for r in range(len(inner) + 1):
        for xs in itertools.combinations(inner, r):
            D = frozenset(xs) | {L.bottom, L.top}
            if is_sublattice(L, D, bounded=True):
                out.add(D)
    return sorted(out, key=lambda D: (len(D), sorted(D)))


def meet_subsemilattices_with_top(L: FiniteLattice) -> list[frozenset]:
    others = [x for x in range(L.size) if x != L.top]
    out = []
    for r in range(len(others) + 1):
        for xs in itertools.combinations(others, r):
            D = frozenset(xs) | {L.top}
            idx = sorted(D)
            if set(np.unique(L.meet[np.ix_(idx, idx)]).tolist()) <= D:
                out.append(D)
    return out


def _enum_pairs(n: int, cls: str, up_to_iso: bool) -> list[FiniteAlgebra]:
    out = []
    for L in enumerate_lattices(n):
        if cls == "srl" and not is_distributive(L):
            continue
        Ds = meet_subsemilattices_with_top(L) if cls == "srs" else bounded_sublattices(L)
        imps = []
        for D in Ds:
            try:
                imps.append(_max_table(L, D))
            except NoMaximum:
                continue
        if not imps:
            continue
        tables = _dedup({"imp": np.stack(imps)}, automorphisms(L), up_to_iso)
        for t in tables["imp"]:
            if cls == "srs":
                out.append(FiniteAlgebra(n, t, L.top, meet=L.meet))
            else:
                out.append(FiniteAlgebra.from_lattice(L, t))
    return out


# ---------------------------------------------------------------------------
# lattice-based classes enumerated by tables


def lattice_batch(L: FiniteLattice, B: int) -> dict:
    return {"meet": np.broadcast_to(L.meet, (B, L.size, L.size)),
            "join": np.broadcast_to(L.join, (B, L.size, L.size))}


def order_imp_candidates(L: FiniteLattice) -> np.ndarray:
    """Tables with x -> y = 1 exactly when x <= y."""
    n, top = L.size, L.top
    base = np.full((n, n), top, dtype=np.int64)
    cells = [(x, y) for x in range(n) for y in range(n) if not L.leq[x, y]]
    return _fill(n, base, cells, [[v for v in range(n) if v != top]] * len(cells))


def hemi_imp_candidates(L: FiniteLattice) -> np.ndarray:
    """Tables satisfying x -> x = 1 and x /\\ (x -> y) <= x /\\ y cell by cell."""
    n, top = L.size, L.top
    base = np.full((n, n), top, dtype=np.int64)
    cells, choices = [], []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            cells.append((x, y))
            choices.append([v for v in range(n) if L.leq[L.meet[x, v], L.meet[x, y]]])
    return _fill(n, base, cells, choices)


def hemi_base_batches(n: int) -> Iterator[tuple[FiniteLattice, dict]]:
    """Every {->, /\\, \\/, 1}-algebra of size n passing the hemi-implicative base.

    Yields one table batch per lattice (lattices up to isomorphism, all
    implication tables).
    """
    for L in enumerate_lattices(n):
        imp = hemi_imp_candidates(L)
        tables = dict(lattice_batch(L, len(imp)), imp=imp)
        keep = batch_holds(tables, L.top, None, HEMI_BASE)
        yield L, {k: v[keep] for k, v in tables.items()}


# laws that are cheap (few variables) go first so the 3-variable scans see
# fewer candidates
def _ordered(laws):
    return sorted(laws, key=lambda law: law.arity)


def _enum_tables(n: int, cls: str, up_to_iso: bool) -> list[FiniteAlgebra]:
    out = []
    laws = _ordered(CLASS_LAWS[cls])
    for L in enumerate_lattices(n):
        if cls == "shrl-appendix":
            imp = hemi_imp_candidates(L)
        else:
            # in shs and both calculus classes x -> y = 1 iff x <= y
            imp = order_imp_candidates(L)
        tables = {"imp": imp}
        if cls in ("alg-r4star", "alg-plus"):
            # ~1 <= 1 -> y for every y, hence ~1 is the bottom
            negs = _cartesian([range(n)] * (n - 1) + [[L.bottom]])
            tables = {"imp": np.repeat(imp, len(negs), axis=0),
                      "neg": np.tile(negs, (len(imp), 1))}
        tables.update(lattice_batch(L, len(tables["imp"])))
        keep = batch_holds(tables, L.top, L.bottom, laws)
        found = {k: v[keep] for k, v in tables.items() if k in ("imp", "neg")}
        found = _dedup(found, automorphisms(L), up_to_iso)
        for i in range(len(found["imp"])):
            neg = found["neg"][i] if "neg" in found else None
            out.append(FiniteAlgebra.from_lattice(L, found["imp"][i], neg=neg))
    return out


# ---------------------------------------------------------------------------


def _enumerate(n: int, cls: str, up_to_iso: bool) -> tuple[FiniteAlgebra, ...]:
    if n == 1:
        L = enumerate_lattices(1)[0]
        if cls in ("sha", "hilbert"):
            return (FiniteAlgebra(1, [[0]], 0),)
        if cls == "srs":
            return (FiniteAlgebra(1, [[0]], 0, meet=L.meet),)
        neg = [0] if cls in ("alg-r4star", "alg-plus") else None
        return (FiniteAlgebra.from_lattice(L, [[0]], neg=neg),)
    if cls in ("sha", "hilbert"):
        return tuple(_enum_imp_only(n, cls, up_to_iso))
    if cls in ("srl", "srlbs", "srs"):
        return tuple(_enum_pairs(n, cls, up_to_iso))
    return tuple(_enum_tables(n, cls, up_to_iso))


_cache: dict = {}


def enumerate_class(n: int, cls: str, up_to_iso: bool = True, cap: Optional[int] = None) -> list[FiniteAlgebra]:
    """All algebras of size n in ``cls`` (normalized carriers, deterministic order)."""
    if cls not in CLASS_TAGS:
        raise KeyError(f"unknown class tag {cls!r}")
    _check_cap(n, cls, cap)
    key = (n, cls, up_to_iso)
    if key not in _cache:
        _cache[key] = _enumerate(n, cls, up_to_iso)
    return list(_cache[key])


def enumerate_upto(max_size: int, cls: str, up_to_iso: bool = True,
                   cap: Optional[int] = None) -> Iterator[FiniteAlgebra]:
    for n in range(1, max_size + 1):
        yield from enumerate_class(n, cls, up_to_iso, cap)
