"""Valuations, countermodel search, and the finite-model shrinking constructions.

The reserved variable behind ``top`` and ``bot`` is always sent to 1, so
``top`` evaluates to 1 -> 1 and ``bot`` to its negation.  Negation uses the
algebra's own table when there is one and x -> 0 otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .algebra import FiniteAlgebra
from .classes import check_class, check_sha, check_srl, check_srlbs
from .enumerate import enumerate_class
from .filters import build_upset_algebra
from .order import FiniteLattice, generated_meet_subsemilattice, generated_sublattice
from .pairs import _max_table
from .syntax import RESERVED, And, Formula, Imp, Not, Or, Var, as_formula, subformulas, to_str, walk
from .syntax import variables as formula_variables


class MissingConnective(ValueError):
    pass


@dataclass(frozen=True)
class Valuation:
    algebra: FiniteAlgebra = field(repr=False)
    map: dict

    def __getitem__(self, name: str) -> int:
        if name == RESERVED:
            return self.algebra.top
        return self.map[name]

    def to_json(self) -> dict:
        return {k: self.algebra.name(v) for k, v in sorted(self.map.items())}


def _neg_table(A: FiniteAlgebra) -> np.ndarray:
    if A.neg is not None:
        return A.neg
    if A.bottom is not None:
        return A.imp[:, A.bottom]
    raise MissingConnective("negation needs a ~ table or a bottom element")


def _table(A: FiniteAlgebra, f: Formula) -> np.ndarray:
    t = {Imp: A.imp, And: A.meet, Or: A.join}[type(f)]
    if t is None:
        raise MissingConnective(f"the algebra has no {type(f).__name__.lower()} operation")
    return t


def evaluate(f, v: Valuation) -> int:
    f = as_formula(f)
    A = v.algebra
    vals = {}
    for g in walk(f):
        if g in vals:
            continue
        if isinstance(g, Var):
            vals[g] = int(v[g.name])
        elif isinstance(g, Not):
            vals[g] = int(_neg_table(A)[vals[g.arg]])
        else:
            vals[g] = int(_table(A, g)[vals[g.left], vals[g.right]])
    return vals[f]


def free_variables(fs: Iterable) -> list[str]:
    """Variable names in sorted order, the reserved one left out."""
    names = set()
    for f in fs:
        names.update(formula_variables(as_formula(f)))
    names.discard(RESERVED)
    return sorted(names)


def evaluate_all(fs: Sequence, A: FiniteAlgebra, names: Sequence[str]) -> list[np.ndarray]:
    """Values of each formula under every valuation of ``names`` at once.

    Result arrays have one axis per name (axis k for names[k]), so flat
    index order is lexicographic in the valuation.
    """
    k, n = len(names), A.size
    env = {}
    for i, name in enumerate(names):
        shape = [1] * k
        shape[i] = n
        env[name] = np.arange(n).reshape(shape)
    cache: dict = {}

    def go(f: Formula) -> np.ndarray:
        for g in walk(f):
            if g in cache:
                continue
            if isinstance(g, Var):
                cache[g] = np.asarray(A.top) if g.name == RESERVED else env[g.name]
            elif isinstance(g, Not):
                cache[g] = _neg_table(A)[cache[g.arg]]
            else:
                cache[g] = _table(A, g)[cache[g.left], cache[g.right]]
        return np.broadcast_to(cache[f], (n,) * k)

    return [go(as_formula(f)) for f in fs]


def valid_in(f, A: FiniteAlgebra) -> bool:
    f = as_formula(f)
    return bool((evaluate_all([f], A, free_variables([f]))[0] == A.top).all())


@dataclass
class Countermodel:
    algebra: FiniteAlgebra
    valuation: Valuation
    formula: Formula
    value: int
    cls: str = ""
    hypotheses: tuple = ()
    audit: dict = field(default_factory=dict)

    def check(self) -> bool:
        """Re-evaluate: value matches, differs from 1, hypotheses go to 1, class holds."""
        if evaluate(self.formula, self.valuation) != self.value or self.value == self.algebra.top:
            return False
        if any(evaluate(h, self.valuation) != self.algebra.top for h in self.hypotheses):
            return False
        return not self.cls or check_class(self.algebra, self.cls).member

    def to_json(self) -> dict:
        out = {
            "verdict": "refuted",
            "class": self.cls,
            "formula": to_str(self.formula),
            "algebra": self.algebra.to_json(),
            "valuation": self.valuation.to_json(),
            "value": self.algebra.name(self.value),
        }
        if self.hypotheses:
            out["hypotheses"] = [to_str(h) for h in self.hypotheses]
        if self.audit:
            out["audit"] = self.audit
        return out


def _needs_negation(fs) -> bool:
    return any(isinstance(g, Not) for f in fs for g in walk(f))


def _prepare(A: FiniteAlgebra, fs) -> FiniteAlgebra:
    # classes without ~ get the derived one, so bot and ~ stay meaningful
    if A.neg is None and A.bottom is not None and _needs_negation(fs):
        return A.with_derived_negation()
    return A


def search_in(A: FiniteAlgebra, f, hyps: Sequence = (), cls: str = "") -> Optional[Countermodel]:
    """First valuation (lexicographic) sending hyps to 1 and f elsewhere."""
    f = as_formula(f)
    hyps = tuple(as_formula(h) for h in hyps)
    A = _prepare(A, hyps + (f,))
    names = free_variables(hyps + (f,))
    vals = evaluate_all(hyps + (f,), A, names)
    bad = vals[-1] != A.top
    for h in vals[:-1]:
        bad = bad & (h == A.top)
    hits = np.flatnonzero(bad.ravel())
    if not len(hits):
        return None
    idx = np.unravel_index(hits[0], (A.size,) * len(names)) if names else ()
    v = Valuation(A, {nm: int(i) for nm, i in zip(names, idx)})
    return Countermodel(A, v, f, int(vals[-1].ravel()[hits[0]]), cls, hyps)


def find_countermodel(f, cls: str, max_size: int, hyps: Sequence = (),
                      cap: Optional[int] = None) -> Optional[Countermodel]:
    """Scan the class by size, then canonical order, then valuation."""
    for n in range(1, max_size + 1):
        for A in enumerate_class(n, cls, cap=cap):
            cm = search_in(A, f, hyps, cls)
            if cm is not None:
                return cm
    return None


@dataclass
class Entailment:
    status: str                     # "refuted" or "no-countermodel-up-to"
    bound: int
    countermodel: Optional[Countermodel] = None

    @property
    def refuted(self) -> bool:
        return self.status == "refuted"

    def to_json(self) -> dict:
        if self.countermodel is not None:
            return dict(self.countermodel.to_json(), bound=self.bound)
        return {"verdict": self.status, "bound": self.bound}


def entails(hyps: Sequence, f, cls: str, max_size: int, cap: Optional[int] = None) -> Entailment:
    cm = find_countermodel(f, cls, max_size, hyps, cap)
    if cm is not None:
        return Entailment("refuted", max_size, cm)
    return Entailment("no-countermodel-up-to", max_size)


# ---------------------------------------------------------------------------
# shrinking constructions


def _values(cm: Countermodel) -> dict:
    """Value of every subformula of the formula and the hypotheses."""
    subs = set()
    for g in (cm.formula,) + tuple(cm.hypotheses):
        subs |= subformulas(g)
    return {g: evaluate(g, cm.valuation) for g in subs}


def imp_agreement(imp: np.ndarray, new_imp: np.ndarray, keep: Sequence[int],
                  X: Iterable[int]) -> list:
    """Triples a, b in X with a -> b in X where the new implication disagrees."""
    pos = {old: i for i, old in enumerate(keep)}
    X = sorted(set(X))
    bad = []
    for a in X:
        for b in X:
            c = int(imp[a, b])
            if c in X and int(keep[new_imp[pos[a], pos[b]]]) != c:
                bad.append((a, b))
    return bad


def _restricted(cm: Countermodel, sub: FiniteAlgebra, keep: Sequence[int], cls: str,
                audit: dict) -> Countermodel:
    pos = {old: i for i, old in enumerate(keep)}
    sub = _prepare(sub, (cm.formula,) + tuple(cm.hypotheses))
    v = Valuation(sub, {k: pos[x] for k, x in cm.valuation.map.items()})
    value = evaluate(cm.formula, v)
    audit["value_preserved"] = int(keep[value]) == cm.value
    return Countermodel(sub, v, cm.formula, value, cls, cm.hypotheses, audit)


def _pair_algebra(L: FiniteLattice, keep: list[int], D: Iterable[int]) -> tuple[FiniteAlgebra, list[int]]:
    """The pair algebra on the induced sublattice L|keep with designated D."""
    sub, keep = L.sublattice(keep)
    pos = {old: i for i, old in enumerate(keep)}
    Dn = {pos[d] for d in D}
    return FiniteAlgebra.from_lattice(sub, _max_table(sub, Dn)), keep


def fmp_shrink_sha(cm: Countermodel, upset_cap: int = 20) -> Countermodel:
    """A finite srl countermodel from a sha countermodel of an ->-formula.

    The sha embeds into the subresiduated upset algebra; the sublattice B
    generated by the images of the subformula values, with designated part
    B /\\ box, carries the same values for every subformula.
    """
    A = cm.algebra
    if not check_sha(A).member:
        raise ValueError("fmp_shrink_sha needs a sub-Hilbert algebra")
    for g in walk(cm.formula):
        if not isinstance(g, (Imp, Var)):
            raise ValueError("fmp_shrink_sha handles implication-only formulas")
    ua = build_upset_algebra(A.reduct(), "implicative", upset_cap=upset_cap)
    U = ua.upset_lattice
    vals = _values(cm)
    X = {ua.j[x] for x in vals.values()}
    Bset = generated_sublattice(U, X, bounded=True)
    Dset = Bset & ua.D
    alg, keep = _pair_algebra(U, sorted(Bset), Dset)
    bad = imp_agreement(ua.imp, alg.imp, keep, X)
    pos = {old: i for i, old in enumerate(keep)}
    v = Valuation(alg, {k: pos[ua.j[x]] for k, x in cm.valuation.map.items()})
    value = evaluate(cm.formula, v)
    audit = {
        "construction": "upset-embedding",
        "upset_algebra_size": U.size,
        "size": alg.size,
        "D": len(Dset),
        "X": len(X),
        "imp_agreement_failures": [list(t) for t in bad],
        "value_preserved": keep[value] == ua.j[cm.value],
        "srl": check_srl(alg).member,
    }
    return Countermodel(alg, v, cm.formula, value, "srl", cm.hypotheses, audit)


def fmp_shrink_srl(cm: Countermodel) -> Countermodel:
    """Countermodel on the bounded sublattice generated by the subformula values.

    The designated part is generated by the values that lie in box A.
    """
    A = cm.algebra
    if not check_srl(A).member:
        raise ValueError("fmp_shrink_srl needs a subresiduated lattice")
    L = A.lattice
    vals = _values(cm)
    X = set(vals.values())
    if any(isinstance(g, Not) for g in vals):
        X.add(A.bottom)
    Xbox = X & A.box_set()
    Lset = generated_sublattice(L, X, bounded=True)
    Dset = generated_sublattice(L, Xbox, bounded=True)
    alg, keep = _pair_algebra(L, sorted(Lset), Dset)
    bad = imp_agreement(A.imp, alg.imp, keep, X)
    audit = {
        "construction": "generated-sublattice",
        "size": alg.size,
        "D": sorted(int(d) for d in Dset),
        "X": sorted(int(x) for x in X),
        "imp_agreement_failures": [list(t) for t in bad],
        "srl": check_srl(alg).member,
    }
    return _restricted(cm, alg, keep, "srl", audit)


def fmp_shrink_srlbs(cm: Countermodel) -> Countermodel:
    """Countermodel on the meet-subsemilattice generated by X0 and D.

    X0 holds the subformula values, D is the bounded sublattice generated
    by X0 /\\ box A, and the carrier is closed under meets only, so it has
    its own join; both -> and \\/ are audited where they must agree.
    """
    A = cm.algebra
    if not check_srlbs(A).member:
        raise ValueError("fmp_shrink_srlbs needs a subresiduated lattice in the broad sense")
    L = A.lattice
    vals = _values(cm)
    X0 = set(vals.values())
    if any(isinstance(g, Not) for g in vals):
        X0.add(A.bottom)
    Dset = generated_sublattice(L, X0 & A.box_set(), bounded=True)
    carrier = generated_meet_subsemilattice(L, X0 | Dset)
    alg, keep = _pair_algebra(L, sorted(carrier), Dset)
    pos = {old: i for i, old in enumerate(keep)}
    imp_bad = imp_agreement(A.imp, alg.imp, keep, carrier)
    join_bad = [(a, b) for a in sorted(carrier) for b in sorted(carrier)
                if int(L.join[a, b]) in carrier and keep[alg.join[pos[a], pos[b]]] != int(L.join[a, b])]
    audit = {
        "construction": "meet-subsemilattice",
        "size": alg.size,
        "D": sorted(int(d) for d in Dset),
        "X0": sorted(int(x) for x in X0),
        "imp_agreement_failures": [list(t) for t in imp_bad],
        "join_agreement_failures": [list(t) for t in join_bad],
        "srlbs": check_srlbs(alg).member,
    }
    return _restricted(cm, alg, keep, "srlbs", audit)


def shrink(cm: Countermodel) -> Countermodel:
    """Dispatch on the countermodel's class."""
    if cm.cls in ("sha", "hilbert"):
        return fmp_shrink_sha(cm)
    if cm.cls == "srl":
        return fmp_shrink_srl(cm)
    if cm.cls == "srlbs":
        return fmp_shrink_srlbs(cm)
    raise ValueError(f"no shrinking construction for class {cm.cls!r}")
