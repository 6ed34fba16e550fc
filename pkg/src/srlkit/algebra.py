"""Finite algebras in the signature {->, /\\, \\/, ~, 0, 1} and homomorphisms.

Operations are integer tables over ``0..size-1``.  Only ``imp`` and ``top``
are mandatory; every other operation is optional and its absence simply
removes it from the signature.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .order import FiniteLattice, FinitePoset, InvalidStructure, _table_dtype

OPS = ("imp", "meet", "join", "neg")
SYMBOLS = {"imp": "->", "meet": "/\\", "join": "\\/", "neg": "~", "top": "1", "bottom": "0"}


class NotAnOrder(ValueError):
    def __init__(self, reason: str, witness: tuple):
        super().__init__(f"{reason} at {witness}")
        self.reason = reason
        self.witness = witness


def _freeze_table(t, n: int, arity: int, name: str) -> Optional[np.ndarray]:
    if t is None:
        return None
    arr = np.array(t, dtype=np.int64)
    if arr.shape != (n,) * arity:
        raise InvalidStructure(f"{name} table must have shape {(n,) * arity}, got {arr.shape}")
    if n and (arr.min() < 0 or arr.max() >= n):
        raise InvalidStructure(f"{name} table has values outside the carrier")
    arr = arr.astype(_table_dtype(n))
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    size: int
    imp: np.ndarray
    top: int
    meet: Optional[np.ndarray] = None
    join: Optional[np.ndarray] = None
    neg: Optional[np.ndarray] = None
    bottom: Optional[int] = None
    names: Optional[tuple[str, ...]] = field(default=None)

    def __post_init__(self):
        n = self.size
        object.__setattr__(self, "imp", _freeze_table(self.imp, n, 2, "imp"))
        object.__setattr__(self, "meet", _freeze_table(self.meet, n, 2, "meet"))
        object.__setattr__(self, "join", _freeze_table(self.join, n, 2, "join"))
        object.__setattr__(self, "neg", _freeze_table(self.neg, n, 1, "neg"))
        if not 0 <= self.top < n:
            raise InvalidStructure("top outside the carrier")
        if self.bottom is not None and not 0 <= self.bottom < n:
            raise InvalidStructure("bottom outside the carrier")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != n or len(set(names)) != n:
                raise InvalidStructure("names must be distinct, one per element")
            object.__setattr__(self, "names", names)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_lattice(cls, L: FiniteLattice, imp, neg=None, names=None) -> "FiniteAlgebra":
        return cls(L.size, imp, L.top, meet=L.meet, join=L.join, neg=neg, bottom=L.bottom,
                   names=names)

    # -- signature ---------------------------------------------------------

    @property
    def signature(self) -> frozenset:
        sig = {"imp", "top"}
        for op in ("meet", "join", "neg", "bottom"):
            if getattr(self, op) is not None:
                sig.add(op)
        return frozenset(sig)

    def reduct(self, *ops: str) -> "FiniteAlgebra":
        """Keep only the listed operations (``imp`` and ``top`` always stay)."""
        keep = set(ops) | {"imp", "top"}
        return replace(self, **{op: None for op in ("meet", "join", "neg", "bottom") if op not in keep})

    def with_derived_negation(self) -> "FiniteAlgebra":
        """Add ~x := x -> 0."""
        if self.bottom is None:
            raise InvalidStructure("derived negation needs a bottom element")
        return replace(self, neg=self.imp[:, self.bottom])

    def with_names(self, names) -> "FiniteAlgebra":
        return replace(self, names=tuple(names))

    @property
    def lattice(self) -> Optional[FiniteLattice]:
        """The underlying lattice, if meet (and join) are lattice operations."""
        if self.meet is None:
            return None
        leq = self.meet == np.arange(self.size)[:, None]
        try:
            return FiniteLattice(FinitePoset(self.size, leq), self.meet, self.join, self.top, self.bottom)
        except InvalidStructure:
            return None

    def name(self, i: int) -> str:
        return self.names[i] if self.names else str(i)

    def index(self, name) -> int:
        if isinstance(name, (int, np.integer)):
            return int(name)
        if self.names and name in self.names:
            return self.names.index(name)
        return int(name)

    # -- operations ----------------------------------------------------------

    def box(self, a):
        return self.imp[self.top, a]

    def box_set(self) -> frozenset:
        return frozenset(np.unique(self.imp[self.top]).tolist())

    def natural_leq(self) -> np.ndarray:
        return self.imp == self.top

    def tables(self) -> dict:
        return {op: getattr(self, op) for op in OPS if getattr(self, op) is not None}

    # -- comparison ------------------------------------------------------------

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        if self.size != other.size or self.top != other.top or self.bottom != other.bottom:
            return False
        for op in OPS:
            a, b = getattr(self, op), getattr(other, op)
            if (a is None) != (b is None):
                return False
            if a is not None and not np.array_equal(a, b):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, FiniteAlgebra) and self.same_tables(other)

    def __hash__(self):
        return hash((self.size, self.top, self.imp.tobytes()))

    def __repr__(self):
        sig = ",".join(sorted(self.signature))
        return f"FiniteAlgebra(size={self.size}, sig={{{sig}}})"

    def format_table(self, op: str = "imp") -> str:
        t = getattr(self, op)
        labels = [self.name(i) for i in range(self.size)]
        w = max(len(s) for s in labels) + 1
        if t.ndim == 1:
            return "\n".join(f"{SYMBOLS[op]}{labels[i]:<{w}} = {labels[t[i]]}" for i in range(self.size))
        head = f"{SYMBOLS[op]:>{w}} |" + "".join(f"{s:>{w}}" for s in labels)
        rows = [head, "-" * len(head)]
        for i in range(self.size):
            rows.append(f"{labels[i]:>{w}} |" + "".join(f"{labels[t[i, j]]:>{w}}" for j in range(self.size)))
        return "\n".join(rows)

    # -- serialization -----------------------------------------------------

    def to_json(self, D: Optional[Iterable[int]] = None) -> dict:
        doc = {"size": self.size}
        if self.names:
            doc["names"] = list(self.names)
        for op in OPS:
            t = getattr(self, op)
            if t is not None:
                doc[op] = t.tolist()
        doc["top"] = self.top
        if self.bottom is not None:
            doc["bottom"] = self.bottom
        if D is not None:
            doc["D"] = sorted(int(d) for d in D)
        return doc

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(**kw))


def _leq_from_pairs(n: int, pairs) -> np.ndarray:
    return FinitePoset.from_pairs(n, pairs).leq


def load_algebra(doc: Mapping) -> tuple[FiniteAlgebra, Optional[frozenset]]:
    """Load the JSON algebra document; returns the algebra and the optional D.

    Elements may be given by index or by name wherever an element is expected.
    Meet/join tables are derived from ``leq`` when absent and rejected when
    inconsistent with it.
    """
    n = int(doc["size"])
    names = doc.get("names")

    def idx(v):
        if isinstance(v, str) and names and v in names:
            return names.index(v)
        return int(v)

    def table(t):
        if t is None:
            return None
        return np.vectorize(idx, otypes=[np.int64])(np.array(t, dtype=object)) if n else np.array(t)

    meet, join = table(doc.get("meet")), table(doc.get("join"))
    top = doc.get("top")
    bottom = doc.get("bottom")
    if "leq" in doc:
        pairs = [(idx(a), idx(b)) for a, b in doc["leq"]]
        L = FiniteLattice.from_leq(_leq_from_pairs(n, pairs))
        if meet is not None and not np.array_equal(meet, L.meet):
            raise InvalidStructure("meet table inconsistent with leq")
        if join is not None and not np.array_equal(join, L.join):
            raise InvalidStructure("join table inconsistent with leq")
        if meet is None:
            meet = L.meet
        if join is None:
            join = L.join
        if top is None:
            top = L.top
        elif idx(top) != L.top:
            raise InvalidStructure("top inconsistent with leq")
        if bottom is None:
            bottom = L.bottom
        elif idx(bottom) != L.bottom:
            raise InvalidStructure("bottom inconsistent with leq")
    elif meet is not None:
        # meet must at least be a semilattice operation whose order agrees with top/bottom
        leq = meet == np.arange(n)[:, None]
        FiniteLattice(FinitePoset(n, leq), meet, join, idx(top), None if bottom is None else idx(bottom))
    if top is None:
        raise InvalidStructure("algebra document needs a top element")
    A = FiniteAlgebra(n, table(doc["imp"]), idx(top), meet=meet, join=join, neg=table(doc.get("neg")),
                      bottom=None if bottom is None else idx(bottom), names=names)
    D = doc.get("D")
    return A, (None if D is None else frozenset(idx(d) for d in D))


def loads_algebra(text: str):
    return load_algebra(json.loads(text))


def load_lattice(doc: Mapping) -> tuple[FiniteLattice, Optional[tuple], Optional[frozenset]]:
    """A lattice from the same JSON format, ignoring ``imp``: (lattice, names, D)."""
    n = int(doc["size"])
    names = doc.get("names")

    def idx(v):
        if isinstance(v, str) and names and v in names:
            return names.index(v)
        return int(v)

    if "leq" in doc:
        L = FiniteLattice.from_leq(_leq_from_pairs(n, [(idx(a), idx(b)) for a, b in doc["leq"]]))
    elif "meet" in doc:
        meet = np.vectorize(idx, otypes=[np.int64])(np.array(doc["meet"], dtype=object))
        L = FiniteLattice.from_leq(meet == np.arange(n)[:, None], with_join=True)
    else:
        raise InvalidStructure("lattice document needs leq or meet")
    for key in ("meet", "join"):
        if key in doc:
            t = np.vectorize(idx, otypes=[np.int64])(np.array(doc[key], dtype=object))
            if not np.array_equal(t, getattr(L, key)):
                raise InvalidStructure(f"{key} table inconsistent with the order")
    D = doc.get("D")
    return L, (tuple(names) if names else None), (None if D is None else frozenset(idx(d) for d in D))


def natural_order(A: FiniteAlgebra) -> FinitePoset:
    """The relation a <= b iff a -> b = 1, provided it is a partial order."""
    leq = A.natural_leq()
    n = A.size
    for a in range(n):
        if not leq[a, a]:
            raise NotAnOrder("not reflexive", (a,))
    for a in range(n):
        for b in range(n):
            if a != b and leq[a, b] and leq[b, a]:
                raise NotAnOrder("not antisymmetric", (a, b))
    for a in range(n):
        for b in range(n):
            if leq[a, b]:
                bad = np.flatnonzero(leq[b] & ~leq[a])
                if len(bad):
                    raise NotAnOrder("not transitive", (a, b, int(bad[0])))
    return FinitePoset(n, leq)


def is_homomorphism(f: Sequence[int], A: FiniteAlgebra, B: FiniteAlgebra) -> bool:
    """f commutes with every operation and constant of A's signature."""
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (A.size,) or (B.size and (f.min() < 0 or f.max() >= B.size)):
        return False
    if A.signature != B.signature:
        return False
    if f[A.top] != B.top:
        return False
    if A.bottom is not None and f[A.bottom] != B.bottom:
        return False
    for op in ("imp", "meet", "join"):
        ta, tb = getattr(A, op), getattr(B, op)
        if ta is not None and not np.array_equal(f[ta], tb[f[:, None], f[None, :]]):
            return False
    if A.neg is not None and not np.array_equal(f[A.neg], B.neg[f]):
        return False
    return True


def relabel(A: FiniteAlgebra, perm: Sequence[int]) -> FiniteAlgebra:
    """The isomorphic copy in which element i is renamed perm[i]."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.argsort(p)
    kw = {}
    for op in ("imp", "meet", "join"):
        t = getattr(A, op)
        kw[op] = None if t is None else p[t[np.ix_(inv, inv)]]
    kw["neg"] = None if A.neg is None else p[A.neg[inv]]
    names = None if A.names is None else tuple(A.names[i] for i in inv)
    return FiniteAlgebra(A.size, kw["imp"], int(p[A.top]), meet=kw["meet"], join=kw["join"], neg=kw["neg"],
                         bottom=None if A.bottom is None else int(p[A.bottom]), names=names)


def find_isomorphism(A: FiniteAlgebra, B: FiniteAlgebra) -> Optional[list[int]]:
    """A bijection f with f(A) = B on every operation, or None.

    Plain backtracking: constants are pinned first, then each new assignment
    is checked against all previously assigned pairs.
    """
    n = A.size
    if n != B.size or A.signature != B.signature:
        return None
    binary = [(getattr(A, op), getattr(B, op)) for op in ("imp", "meet", "join") if getattr(A, op) is not None]
    # cheap invariant: how often each element occurs as a value / on the diagonal
    def profile(X, i):
        return tuple(int((t == i).sum()) for t in X.tables().values()) + tuple(
            int(t[i, i]) == i for op, t in X.tables().items() if t.ndim == 2)
    pa = [profile(A, i) for i in range(n)]
    pb = [profile(B, i) for i in range(n)]
    f = [-1] * n
    used = [False] * n

    def consistent(i: int) -> bool:
        for ta, tb in binary:
            for j in range(n):
                if f[j] < 0:
                    continue
                for x, y in ((i, j), (j, i)):
                    v = ta[x, y]
                    if f[v] >= 0 and f[v] != tb[f[x], f[y]]:
                        return False
            v = ta[i, i]
            if f[v] >= 0 and f[v] != tb[f[i], f[i]]:
                return False
        if A.neg is not None:
            for j in range(n):
                if f[j] >= 0:
                    v = A.neg[j]
                    if f[v] >= 0 and f[v] != B.neg[f[j]]:
                        return False
        return True

    fixed = [(A.top, B.top)]
    if A.bottom is not None:
        fixed.append((A.bottom, B.bottom))
    for a, b in fixed:
        if f[a] >= 0 and f[a] != b:
            return None
        if pa[a] != pb[b]:
            return None
        f[a] = b
        used[b] = True
    order = [i for i in range(n) if f[i] < 0]

    def rec(k: int) -> bool:
        if k == len(order):
            return True
        i = order[k]
        for b in range(n):
            if used[b] or pa[i] != pb[b]:
                continue
            f[i] = b
            used[b] = True
            if consistent(i) and rec(k + 1):
                return True
            f[i] = -1
            used[b] = False
        return False

    for a, _ in fixed:
        if not consistent(a):
            return None
    if rec(0) and is_homomorphism(f, A, B):
        return list(f)
    return None
