"""Membership checks for the algebra classes, by exhaustive vectorized scan.

Every (quasi-)equation is a :class:`Law`: a label, a number of variables and
a function from a table-lookup object plus broadcast index arrays to a
boolean array that is True where the law holds.  The same law objects serve
single-algebra checks (which report the lexicographically first witness) and
batch filtering during enumeration (a leading batch axis on every table).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra
from .order import InvalidStructure


@dataclass(frozen=True)
class Law:
    label: str
    arity: int
    holds: Callable = field(repr=False)
    needs: frozenset = frozenset({"imp"})


@dataclass
class ClassVerdict:
    cls: str
    member: bool
    violations: list = field(default_factory=list)  # [(label, witness tuple)]

    def __bool__(self):
        return self.member

    @property
    def labels(self) -> list[str]:
        return [lab for lab, _ in self.violations]

    def to_json(self, A: Optional[FiniteAlgebra] = None) -> dict:
        def w(t):
            return [A.name(i) for i in t] if A is not None and A.names else list(t)
        return {"class": self.cls, "member": self.member,
                "violations": [{"axiom": lab, "witness": w(t)} for lab, t in self.violations]}


class Ops:
    """Table lookups with a leading batch axis.

    ``tables[op]`` has shape (B, n, n) (or (B, n) for neg); constants are
    arrays of shape (B,).  Variables passed to the methods are index arrays
    whose first axis is a singleton standing for the batch.
    """

    def __init__(self, tables: dict, top, bottom=None, nvars: int = 1):
        self.t = tables
        first = next(iter(tables.values()))
        self.B = first.shape[0]
        self.n = first.shape[1]
        shape = (self.B,) + (1,) * nvars
        self.b = np.arange(self.B).reshape(shape)
        self.top = np.asarray(top).reshape(shape)
        self.bottom = None if bottom is None else np.asarray(bottom).reshape(shape)

    def _op(self, name):
        t = self.t.get(name)
        if t is None:
            raise InvalidStructure(f"signature lacks {name}")
        return t

    def imp(self, x, y):
        return self._op("imp")[self.b, x, y]

    def meet(self, x, y):
        return self._op("meet")[self.b, x, y]

    def join(self, x, y):
        return self._op("join")[self.b, x, y]

    def neg(self, x):
        return self._op("neg")[self.b, x]

    def box(self, x):
        return self.imp(self.top, x)

    # order predicates
    def le(self, x, y):
        """Lattice order x <= y, read from the meet table."""
        return self.meet(x, y) == x

    def nle(self, x, y):
        """Natural order x <= y iff x -> y = 1."""
        return self.imp(x, y) == self.top

    def one(self, x):
        return x == self.top


def variables(n: int, k: int) -> list[np.ndarray]:
    """k index arrays broadcasting to shape (1, n, ..., n)."""
    out = []
    for i in range(k):
        shape = [1] * (k + 1)
        shape[i + 1] = n
        out.append(np.arange(n).reshape(shape))
    return out


def evaluate_law(law: Law, ops: Ops) -> np.ndarray:
    """Boolean array of shape (B, n, ..., n): True where the law holds."""
    xs = variables(ops.n, law.arity)
    res = law.holds(ops, *xs)
    return np.broadcast_to(res, (ops.B,) + (ops.n,) * law.arity)


def _ops_for(A: FiniteAlgebra, nvars: int) -> Ops:
    tables = {k: v[None] for k, v in A.tables().items()}
    return Ops(tables, np.array([A.top]), None if A.bottom is None else np.array([A.bottom]), nvars)


def check_laws(A: FiniteAlgebra, laws: Sequence[Law], cls: str = "") -> ClassVerdict:
    """Scan every law; first failing witness per law in lexicographic order."""
    violations = []
    for law in laws:
        ok = evaluate_law(law, _ops_for(A, law.arity))[0]
        if not ok.all():
            witness = tuple(int(i) for i in np.argwhere(~ok)[0])
            violations.append((law.label, witness))
    return ClassVerdict(cls, not violations, violations)


def batch_holds(tables: dict, top, bottom, laws: Sequence[Law], chunk: int = 1 << 14) -> np.ndarray:
    """Mask over the batch axis: algebras satisfying every law."""
    first = next(iter(tables.values()))
    B = first.shape[0]
    keep = np.ones(B, dtype=bool)
    top = np.broadcast_to(np.asarray(top), (B,))
    bottom = None if bottom is None else np.broadcast_to(np.asarray(bottom), (B,))
    for law in laws:
        idx = np.flatnonzero(keep)
        for s in range(0, len(idx), chunk):
            sel = idx[s:s + chunk]
            sub = {k: v[sel] for k, v in tables.items()}
            ops = Ops(sub, top[sel], None if bottom is None else bottom[sel], law.arity)
            ok = evaluate_law(law, ops).reshape(len(sel), -1).all(axis=1)
            keep[sel[~ok]] = False
    return keep


# ---------------------------------------------------------------------------
# Laws.  Variables are named as in the written axioms: x, y, z (and w).

def _implies(p, q):
    return ~p | q


I = Law("I", 1, lambda o, x: o.one(o.imp(x, x)))
T = Law("T", 1, lambda o, x: o.one(o.imp(x, o.top)))
A_ = Law("A", 2, lambda o, x, y: _implies(o.one(o.imp(x, y)) & o.one(o.imp(y, x)), x == y))
B = Law("B", 3, lambda o, x, y, z: o.one(o.imp(o.imp(x, y), o.imp(o.imp(y, z), o.imp(x, z)))))
S = Law("S", 3, lambda o, x, y, z: o.one(o.imp(o.imp(x, o.imp(y, z)), o.imp(o.imp(x, y), o.imp(x, z)))))
MPq = Law("MP", 1, lambda o, x: _implies(o.one(o.imp(o.top, x)), o.one(x)))
h1 = Law("h1", 2, lambda o, x, y: o.one(o.imp(x, o.imp(y, x))))

_L = frozenset({"imp", "meet"})
_LJ = frozenset({"imp", "meet", "join"})

SL1 = Law("SL1", 3, lambda o, x, y, z: o.meet(x, o.meet(y, z)) == o.meet(o.meet(x, y), z), _L)
SL2 = Law("SL2", 2, lambda o, x, y: o.meet(x, y) == o.meet(y, x), _L)
SL3 = Law("SL3", 1, lambda o, x: o.meet(x, x) == x, _L)
SL4 = Law("SL4", 1, lambda o, x: o.meet(x, o.top) == x, _L)
J1 = Law("J1", 3, lambda o, x, y, z: o.join(x, o.join(y, z)) == o.join(o.join(x, y), z), _LJ)
J2 = Law("J2", 2, lambda o, x, y: o.join(x, y) == o.join(y, x), _LJ)
J3 = Law("J3", 1, lambda o, x: o.join(x, x) == x, _LJ)
ABS = Law("Abs", 2, lambda o, x, y: (o.meet(x, o.join(x, y)) == x) & (o.join(x, o.meet(x, y)) == x), _LJ)
BOT = Law("Bot", 1, lambda o, x: o.meet(x, o.bottom) == o.bottom, _L)
DIST = Law("Dist", 3, lambda o, x, y, z: o.meet(x, o.join(y, z)) == o.join(o.meet(x, y), o.meet(x, z)), _LJ)

LATTICE_WITH_TOP = [SL1, SL2, SL3, SL4, J1, J2, J3, ABS]
BOUNDED_LATTICE = LATTICE_WITH_TOP + [BOT]

# subresiduated lattices
A1 = Law("A1", 1, lambda o, x: o.one(o.imp(x, x)), _L)
A2 = Law("A2", 3, lambda o, x, y, z: o.le(o.imp(x, y), o.imp(z, o.imp(x, y))), _L)
A3 = Law("A3", 2, lambda o, x, y: o.le(o.meet(x, o.imp(x, y)), y), _L)
A4 = Law("A4", 3, lambda o, x, y, z: o.imp(z, o.meet(x, y)) == o.meet(o.imp(z, x), o.imp(z, y)), _L)
A5 = Law("A5", 3, lambda o, x, y, z: o.imp(o.join(x, y), z) == o.meet(o.imp(x, z), o.imp(y, z)), _LJ)
A6 = Law("A6", 3, lambda o, x, y, z: o.le(o.meet(o.imp(x, y), o.imp(y, z)), o.imp(x, z)), _L)

# subresiduated semilattices
SR1 = Law("SR1", 2, lambda o, x, y: o.one(o.imp(o.meet(x, y), y)), _L)
SR2 = Law("SR2", 3, lambda o, x, y, z: o.le(o.imp(x, y), o.imp(z, o.imp(x, y))), _L)
SR3 = Law("SR3", 2, lambda o, x, y: o.le(o.meet(x, o.imp(x, y)), y), _L)
SR4 = Law("SR4", 3, lambda o, x, y, z: o.imp(z, o.meet(x, y)) == o.meet(o.imp(z, x), o.imp(z, y)), _L)

# sub-Hilbert lattices
SH1 = Law("SH1", 2, lambda o, x, y: o.one(o.imp(o.meet(x, y), y)), _L)
SH2 = Law("SH2", 2, lambda o, x, y: o.le(o.meet(x, o.imp(x, y)), y), _L)
SH3 = Law("SH3", 3, lambda o, x, y, z: o.le(o.imp(x, y), o.imp(o.imp(y, z), o.imp(x, z))), _L)
SH4 = Law("SH4", 3, lambda o, x, y, z: o.le(o.imp(x, o.imp(y, z)), o.imp(o.imp(x, y), o.imp(x, z))), _L)

# hemi-implicative semilattice base (proxy, see README) and conditions (a)-(f)
H1 = Law("H1", 1, lambda o, x: o.one(o.imp(x, x)), _L)
H2 = Law("H2", 2, lambda o, x, y: o.le(o.meet(x, o.imp(x, y)), o.meet(x, y)), _L)
APX_A = Law("a", 3, lambda o, a, b, c: o.le(o.imp(a, b), o.imp(c, o.imp(a, b))), _L)
APX_B = Law("b", 3, lambda o, a, b, c: o.le(o.imp(o.join(a, b), c), o.meet(o.imp(a, c), o.imp(b, c))), _LJ)
APX_C = Law("c", 3, lambda o, a, b, c: o.le(o.imp(a, o.meet(b, c)), o.meet(o.imp(a, b), o.imp(a, c))), _L)
APX_D = Law("d", 4, lambda o, a, b, c, d: o.le(o.imp(d, o.imp(a, o.imp(b, c))),
                                                 o.imp(o.imp(d, o.imp(a, b)), o.imp(d, o.imp(a, c)))), _L)
APX_E = Law("e", 3, lambda o, a, b, c: o.imp(o.box(a), o.imp(o.box(b), o.box(c)))
            == o.imp(o.box(b), o.imp(o.box(a), o.box(c))), _L)
APX_F = Law("f", 3, lambda o, a, b, c: o.imp(o.box(a), o.imp(o.box(b), o.box(c)))
            == o.imp(o.imp(o.box(a), o.box(b)), o.imp(o.box(a), o.box(c))), _L)

# quasi-identities of the algebraic counterparts of the calculi; the order
# here is the natural one (x -> y = 1), never the lattice one.
_R = frozenset({"imp", "meet", "join", "neg"})
EC1 = Law("EC1", 2, lambda o, x, y: o.one(o.imp(o.meet(x, y), x)), _R)
EC2 = Law("EC2", 2, lambda o, x, y: o.one(o.imp(o.meet(x, y), y)), _R)
EC3 = Law("EC3", 3, lambda o, x, y, z: o.one(o.imp(o.imp(z, x), o.imp(o.imp(z, y), o.imp(z, o.meet(x, y))))), _R)
ED1 = Law("ED1", 2, lambda o, x, y: o.one(o.imp(x, o.join(x, y))), _R)
ED2 = Law("ED2", 2, lambda o, x, y: o.one(o.imp(y, o.join(x, y))), _R)
ED3 = Law("ED3", 3, lambda o, x, y, z: o.one(o.imp(o.imp(x, z), o.imp(o.imp(y, z), o.imp(o.join(x, y), z)))), _R)
N1 = Law("N1", 2, lambda o, x, y: o.one(o.imp(o.neg(x), o.imp(x, y))), _R)
N2 = Law("N2", 1, lambda o, x: o.one(o.imp(o.imp(x, o.neg(x)), o.neg(x))), _R)
QDIST = Law("Dist", 3, lambda o, x, y, z: o.one(o.imp(o.meet(x, o.join(y, z)),
                                                        o.join(o.meet(x, y), o.meet(x, z)))), _R)
QC = Law("QC", 3, lambda o, x, y, z: _implies(o.one(o.imp(z, x)) & o.one(o.imp(z, y)),
                                               o.one(o.imp(z, o.meet(x, y)))), _R)
EC4 = Law("EC4", 2, lambda o, x, y: o.one(o.imp(o.meet(x, o.imp(x, y)), y)), _R)


CLASS_LAWS: dict[str, list[Law]] = {
    "sha": [B, I, T, A_, S],
    "hilbert": [h1, S, A_],
    "srl": BOUNDED_LATTICE + [DIST, A1, A2, A3, A4, A5, A6],
    "srs": [SL1, SL2, SL3, SL4, SR1, SR2, SR3, SR4],
    "srlbs": BOUNDED_LATTICE + [SR1, SR2, SR3, SR4],
    "shs": BOUNDED_LATTICE + [SH1, SH2, SH3, SH4],
    "shrl-appendix": LATTICE_WITH_TOP + [H1, H2, APX_A, APX_B, APX_C, APX_D, APX_E, APX_F],
    "alg-r4star": [I, B, S, T, A_, EC1, EC2, EC3, ED1, ED2, ED3, N1, N2, QDIST],
    "alg-plus": [B, I, A_, T, S, EC1, EC2, ED1, ED2, ED3, N1, N2, QC],
}
CLASS_TAGS = tuple(CLASS_LAWS)

HEMI_BASE = LATTICE_WITH_TOP + [H1, H2]

_REQUIRED = {
    "sha": {"imp"}, "hilbert": {"imp"},
    "srl": {"imp", "meet", "join", "bottom"},
    "srs": {"imp", "meet"},
    "srlbs": {"imp", "meet", "join", "bottom"},
    "shs": {"imp", "meet", "join", "bottom"},
    "shrl-appendix": {"imp", "meet", "join"},
    "alg-r4star": {"imp", "meet", "join", "neg"},
    "alg-plus": {"imp", "meet", "join", "neg"},
}


def required_signature(cls: str) -> set:
    return set(_REQUIRED[cls])


def check_class(A: FiniteAlgebra, cls: str) -> ClassVerdict:
    """Dispatch on a class tag; extra operations in A are ignored."""
    if cls not in CLASS_LAWS:
        raise KeyError(f"unknown class tag {cls!r}; expected one of {', '.join(CLASS_TAGS)}")
    missing = _REQUIRED[cls] - A.signature
    if missing:
        raise InvalidStructure(f"class {cls} needs operations {sorted(missing)}")
    return check_laws(A, CLASS_LAWS[cls], cls)


def check_sha(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "sha")


def check_hilbert(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "hilbert")


def check_srl(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "srl")


def check_srs(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "srs")


def check_srlbs(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "srlbs")


def check_shs(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "shs")


def check_shrl_appendix(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "shrl-appendix")


def check_alg_r4star(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "alg-r4star")


def check_alg_plus(A: FiniteAlgebra) -> ClassVerdict:
    return check_class(A, "alg-plus")


def box_set(A: FiniteAlgebra) -> frozenset:
    """{1 -> a : a in A}.

    For sub-Hilbert algebras this coincides with the fixpoints of box; a
    mismatch is only possible for algebras outside the class and raises.
    """
    image = A.box_set()
    fixed = frozenset(int(a) for a in range(A.size) if A.box(a) == a)
    if image != fixed and check_sha(A.reduct()).member:
        raise AssertionError(f"box image {sorted(image)} differs from fixpoints {sorted(fixed)}")
    return image


def check_box_hilbert(A: FiniteAlgebra) -> ClassVerdict:
    """Box(A) is a subalgebra of the implication reduct and a Hilbert algebra."""
    bx = sorted(box_set(A))
    violations = []
    if A.top not in bx:
        violations.append(("closed-1", (A.top,)))
    sub = A.imp[np.ix_(bx, bx)]
    bad = [(a, b) for i, a in enumerate(bx) for j, b in enumerate(bx) if sub[i, j] not in bx]
    if bad:
        violations.append(("closed->", bad[0]))
        return ClassVerdict("box-hilbert", False, violations)
    relabel = {a: i for i, a in enumerate(bx)}
    H = FiniteAlgebra(len(bx), np.vectorize(relabel.get)(sub), relabel[A.top])
    v = check_hilbert(H)
    for lab, w in v.violations:
        violations.append((lab, tuple(bx[i] for i in w)))
    return ClassVerdict("box-hilbert", not violations, violations)
