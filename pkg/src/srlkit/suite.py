"""The eight acceptance checks, each timed against its own limit.

Every check returns a :class:`CheckResult` whose ``details`` list the
individual sub-checks, so a red row says exactly which claim broke.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import fixtures as fx
from .algebra import FiniteAlgebra, is_homomorphism
from .calculi import (EXPECTED_CONCLUSIONS, calculus, check_proof, deduction_transform,
                      fixture, fixture_suite)
from .classes import (CLASS_LAWS, batch_holds, check_box_hilbert, check_sha, check_shs,
                      check_srl, check_srlbs, check_srs)
from .enumerate import enumerate_class, hemi_base_batches
from .filters import bracket, bracket_generated, generated_implicative_filter, verify_representation
from .pairs import NoMaximum, build_implication, extract_pair
from .semantics import (evaluate_all, find_countermodel, fmp_shrink_sha, fmp_shrink_srlbs,
                        search_in)
from .syntax import parse, to_str


@dataclass
class CheckResult:
    number: int
    title: str
    limit: float
    passed: bool = False
    seconds: float = 0.0
    details: list = field(default_factory=list)   # [(name, ok, note)]
    error: Optional[str] = None

    @property
    def in_time(self) -> bool:
        return self.seconds <= self.limit

    @property
    def ok(self) -> bool:
        return self.passed and self.in_time and self.error is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        why = ""
        if not self.ok:
            failing = [name for name, ok, _ in self.details if not ok]
            if self.error:
                why = f" error: {self.error}"
            elif failing:
                why = " failing: " + ", ".join(failing[:4])
            elif not self.in_time:
                why = " over time limit"
        return f"[{status}] {self.number}. {self.title} ({self.seconds:.2f}s / {self.limit:g}s){why}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number, "title": self.title, "passed": self.ok,
            "seconds": round(self.seconds, 3), "limit": self.limit, "error": self.error,
            "details": [{"check": n, "ok": bool(o), "note": note} for n, o, note in self.details],
        }


class _Recorder:
    def __init__(self):
        self.details = []

    def __call__(self, name: str, ok, note: str = ""):
        self.details.append((name, bool(ok), note))
        return bool(ok)


# ---------------------------------------------------------------------------
# 1. fixture classifications


def fixture_classifications(algebras: Optional[dict] = None) -> list:
    """``algebras`` may override any fixture by name (used to show a red row)."""
    get = {k: f() for k, f in fx.ALGEBRAS.items()}
    get["N"] = fx.algebra_N_printed()     # the criterion asks for the table as printed
    get.update(algebras or {})
    rec = _Recorder()
    M, N = get["M"], get["N"]
    for label, A, printed in (("M", M, fx.M_IMP), ("N", N, fx.N_IMP_PRINTED)):
        v = check_srlbs(A)
        rec(f"{label} table as printed", np.array_equal(A.imp, printed))
        rec(f"{label} in srlbs", v.member, "" if v.member else f"violations {v.to_json(A)['violations'][:2]}")
        try:
            B = build_implication(extract_pair(A), verify=False)
            rec(f"{label} rebuilt from its D", np.array_equal(B.imp, A.imp),
                f"D = {sorted(A.name(d) for d in A.box_set())}")
        except NoMaximum as e:
            rec(f"{label} rebuilt from its D", False, f"NoMaximum: {e}")
    B2 = get["B2"]
    rec("B2 in shs", check_shs(B2).member)
    v = check_srs(B2)
    wit = next((w for lab, w in v.violations if lab == "SR4"), None)
    a, b = B2.index("a"), B2.index("b")
    # SR4 reads z -> (x /\ y) = (z -> x) /\ (z -> y) over (x, y, z); z = a, x /\ y = a /\ b
    rec("B2 fails srs at SR4 with witness (a, a/\\b)", not v.member and wit == (a, b, a),
        f"first SR4 witness {wit}")
    rec("chain3-pair in srl", check_srl(get["chain3-pair"]).member)
    v = check_sha(get["two-elt-collapse"])
    rec("two-elt-collapse fails sha at (A)", "A" in v.labels, f"labels {v.labels}")
    C = get["chain3-pair"].reduct()
    rec("collapse map is a homomorphism", is_homomorphism(fx.collapse_map(), C, get["two-elt-collapse"]))
    rec("chain3 reduct is in sha", check_sha(C).member)
    return rec.details


# ---------------------------------------------------------------------------
# 2. soundness of the calculi on their algebraic counterparts

SEPARATING = "((z -> x) /\\ (z -> y)) -> z -> x /\\ y"


def _rule_checks(A: FiniteAlgebra, rules) -> list:
    """Rules that fail to preserve 1 in A."""
    one = A.imp == A.top
    top = A.top
    bad = []
    # MP: x = 1 and x -> y = 1 give y = 1
    if "MP" in rules and np.flatnonzero(one[top]).tolist() != [top]:
        bad.append("MP")
    # T: x = 1 gives y -> x = 1
    if "T" in rules and not one[:, top].all():
        bad.append("T")
    # C: z -> x = 1 and z -> y = 1 give z -> (x /\ y) = 1
    if "C" in rules:
        z, x, y = np.ix_(*[np.arange(A.size)] * 3)
        prem = one[z, x] & one[z, y]
        if (prem & ~one[z, A.meet[x, y]]).any():
            bad.append("C")
    return bad


def _axioms_valid(c, A: FiniteAlgebra) -> list:
    A = A.with_derived_negation() if A.neg is None else A
    schemes = [s for _, s in c.axioms]
    vals = evaluate_all(schemes, A, ["alpha", "beta", "delta"])
    return [lab for (lab, _), v in zip(c.axioms, vals) if not (v == A.top).all()]


def calculus_soundness(max_size: int = 4, sep_size: int = 5) -> list:
    rec = _Recorder()
    for cname, cls in (("R4*", "srl"), ("R4dag", "srlbs"), ("R4+", "shs")):
        c = calculus(cname)
        count, bad = 0, []
        for n in range(1, max_size + 1):
            for A in enumerate_class(n, cls):
                count += 1
                fails = _axioms_valid(c, A) + _rule_checks(A, c.rules)
                if fails:
                    bad.append((n, fails))
        rec(f"{cname} sound on {cls} (size <= {max_size})", not bad,
            f"{count} algebras" + (f", failures {bad[:3]}" if bad else ""))
    sep = parse(SEPARATING)
    count, bad = 0, 0
    for n in range(1, sep_size + 1):
        for A in enumerate_class(n, "srlbs"):
            count += 1
            bad += search_in(A, sep) is not None
    rec(f"separating scheme valid in srlbs (size <= {sep_size})", bad == 0,
        f"{count} algebras, {bad} countermodels")
    cm = search_in(fx.algebra_B2(), sep)
    rec("separating scheme fails on B2", cm is not None,
        "" if cm is None else f"valuation {cm.valuation.to_json()} value {cm.algebra.name(cm.value)}")
    rec("B2 in shs", check_shs(fx.algebra_B2()).member)
    return rec.details


# ---------------------------------------------------------------------------
# 3. representation theorems


def representation(max_size: int = 3) -> list:
    rec = _Recorder()
    for kind, cls in (("implicative", "sha"), ("lattice", "srs")):
        count, bad = 0, []
        for n in range(1, max_size + 1):
            for A in enumerate_class(n, cls):
                count += 1
                rep = verify_representation(A, kind)
                if not rep["passed"]:
                    bad.append((n, rep["failures"][:2]))
        rec(f"{kind} filters represent every {cls} of size <= {max_size}", not bad,
            f"{count} algebras" + (f", failures {bad[:2]}" if bad else ""))
    return rec.details


# ---------------------------------------------------------------------------
# 4. bracket calculus


def _bracket_grid(A: FiniteAlgebra, xs, a: np.ndarray) -> np.ndarray:
    v = a
    for x in reversed(xs):
        v = A.imp[x, v]
    return v


def bracket_properties(max_size: int = 4, max_len: int = 3) -> list:
    rec = _Recorder()
    fails = {"permutation": 0, "monotony": 0, "S-expansion": 0, "distribution": 0, "generated filter": 0}
    count = 0
    for n in range(1, max_size + 1):
        for A in enumerate_class(n, "sha"):
            count += 1
            el = np.arange(n)
            box = sorted(A.box_set())
            leq = A.imp == A.top
            for k in range(max_len + 1):
                for xs in itertools.product(range(n), repeat=k):
                    # monotony in the last slot
                    br = _bracket_grid(A, xs, el)
                    le = leq[br[:, None], br[None, :]]
                    fails["monotony"] += int((leq & ~le).sum())
                    # [xs, a, b, c, d] <= [xs, [a, b, c], a, b, d]
                    a, b, c, d = np.ix_(el, el, el, el)
                    lhs = _bracket_grid(A, xs, A.imp[a, A.imp[b, A.imp[c, d]]])
                    abc = A.imp[a, A.imp[b, c]]
                    rhs = _bracket_grid(A, xs, A.imp[abc, A.imp[a, A.imp[b, d]]])
                    fails["S-expansion"] += int((~leq[lhs, rhs]).sum())
                for xs in itertools.product(box, repeat=k):
                    br = _bracket_grid(A, xs, el)
                    for p in set(itertools.permutations(xs)):
                        fails["permutation"] += int((br != _bracket_grid(A, p, el)).sum())
                    # [xs, a, b] = [[xs, a], xs, b] for a, b in box
                    bx = np.array(box)
                    lhs = _bracket_grid(A, xs, A.imp[bx[:, None], bx[None, :]])
                    inner = _bracket_grid(A, xs, bx)
                    rhs = A.imp[inner[:, None], _bracket_grid(A, xs, bx)[None, :]]
                    fails["distribution"] += int((lhs != rhs).sum())
            # generated filter: closure agrees with the bracket description
            others = [x for x in box if x != A.top]
            for r in range(len(others) + 1):
                for Xs in itertools.combinations(others, r):
                    X = set(Xs) | {A.top}
                    for a0 in range(n):
                        if generated_implicative_filter(A, X | {a0}) != bracket_generated(A, X, a0):
                            fails["generated filter"] += 1
    for name, k in fails.items():
        rec(f"bracket {name} on sha of size <= {max_size}", k == 0, f"{count} algebras, {k} failures")
    # worked value [x, y, z, a] = x -> (y -> (z -> a))
    C = fx.chain3_pair()
    rec("bracket nests to the right", bracket([2, 1, 2], 1, C) == C.imp[2, C.imp[1, C.imp[2, 1]]])
    return rec.details


# ---------------------------------------------------------------------------
# 5. proof corpus


def proof_corpus() -> list:
    rec = _Recorder()
    for name, p in fixture_suite():
        v = check_proof(p.calculus, p)
        rec(f"{name} valid in {p.calculus}", v.valid and p.conclusion == parse(EXPECTED_CONCLUSIONS[name]),
            f"{len(p.lines)} lines" + (f", errors {v.errors[:2]}" if not v.valid else ""))
    p = fixture("transitivity")
    for _ in range(3):
        p = deduction_transform("IR4", p)
    goal = parse("(alpha -> beta) -> (beta -> delta) -> alpha -> delta")
    v = check_proof("IR4", p)
    rec("three deduction steps give (a->b)->((b->d)->(a->d))",
        v.valid and not p.hypotheses and p.conclusion == goal, f"{len(p.lines)} lines, {to_str(p.conclusion)}")
    return rec.details


# ---------------------------------------------------------------------------
# 6. finite model property


def fmp_end_to_end(n_override: Optional[FiniteAlgebra] = None) -> list:
    rec = _Recorder()
    h1 = parse("p -> q -> p")
    cm = find_countermodel(h1, "sha", 3)
    rec("h1 refuted in sha at size 3", cm is not None and cm.algebra.size == 3 and cm.check(),
        "" if cm is None else f"size {cm.algebra.size}, valuation {cm.valuation.to_json()}")
    if cm is not None:
        s = fmp_shrink_sha(cm)
        rec("sha shrink gives an srl countermodel", s.check() and s.audit["srl"] and s.audit["value_preserved"],
            f"size {s.algebra.size}")
        rec("sha shrink keeps -> on the kept values", not s.audit["imp_agreement_failures"])
    N = fx.algebra_N() if n_override is None else n_override
    f = parse("p /\\ (q \\/ r) -> p /\\ q \\/ p /\\ r")
    cm = search_in(N, f, cls="srlbs")
    rec("distributivity refuted on N", cm is not None)
    if cm is not None:
        s = fmp_shrink_srlbs(cm)
        rec("srlbs shrink gives an srlbs countermodel", s.check() and s.audit["value_preserved"],
            f"size {s.algebra.size}")
        rec("srlbs shrink keeps -> on the kept values", not s.audit["imp_agreement_failures"])
        rec("srlbs shrink keeps joins of kept values", not s.audit["join_agreement_failures"])
    return rec.details


# ---------------------------------------------------------------------------
# 7. box laws


def box_laws(max_size: int = 4) -> list:
    rec = _Recorder()
    fails = {"box idempotent": 0, "box deflationary": 0, "x->y is boxed": 0, "box A Hilbert": 0,
             "box self-distribution": 0, "box exchange": 0}
    count = 0
    for n in range(1, max_size + 1):
        for A in enumerate_class(n, "sha"):
            count += 1
            I, t = A.imp, A.top
            x = np.arange(n)
            bx = I[t, x]
            fails["box idempotent"] += int((I[t, bx] != bx).sum())
            fails["box deflationary"] += int((I[bx, x] != t).sum())
            fails["x->y is boxed"] += int((I[t, I] != I).sum())
            fails["box A Hilbert"] += int(not check_box_hilbert(A).member)
            X, Y, Z = np.ix_(x, x, x)
            bX, bY, bZ = I[t, X], I[t, Y], I[t, Z]
            fails["box self-distribution"] += int((I[bX, I[bY, bZ]] != I[I[bX, bY], I[bX, bZ]]).sum())
            fails["box exchange"] += int((I[I[bX, I[bY, Z]], I[bY, I[bX, Z]]] != t).sum())
    for k, v in fails.items():
        rec(f"{k} on sha of size <= {max_size}", v == 0, f"{count} algebras, {v} failures")
    s_fail = {"S1": 0, "S2": 0, "S2 at w=1": 0, "S": 0}
    count = 0
    for n in range(1, max_size + 1):
        for A in enumerate_class(n, "srl"):
            count += 1
            I, t = A.imp, A.top
            x = np.arange(n)
            X, Y, Z = np.ix_(x, x, x)
            s_fail["S1"] += int((I[I[X, Y], I[Z, I[X, Y]]] != t).sum())
            W, X4, Y4, Z4 = np.ix_(x, x, x, x)
            s2 = I[I[W, I[X4, I[Y4, Z4]]], I[I[W, I[X4, Y4]], I[W, I[X4, Z4]]]]
            s_fail["S2"] += int((s2 != t).sum())
            s_fail["S2 at w=1"] += int((s2[t] != t).sum())
            s_fail["S"] += int((I[I[X, I[Y, Z]], I[I[X, Y], I[X, Z]]] != t).sum())
    for k, v in s_fail.items():
        rec(f"{k} on srl of size <= {max_size}", v == 0, f"{count} algebras, {v} failures")
    return rec.details


# ---------------------------------------------------------------------------
# 8. appendix base against SH1-SH4


def appendix_equivalence(max_size: int = 4) -> list:
    rec = _Recorder()
    total, diverge, members = 0, [], 0
    for n in range(1, max_size + 1):
        for L, tables in hemi_base_batches(n):
            B = len(tables["imp"])
            if B == 0:
                continue
            total += B
            shs = batch_holds(tables, L.top, L.bottom, CLASS_LAWS["shs"])
            apx = batch_holds(tables, L.top, L.bottom, CLASS_LAWS["shrl-appendix"])
            members += int(shs.sum())
            for i in np.flatnonzero(shs != apx)[:3]:
                diverge.append({"size": n, "imp": tables["imp"][i].tolist(),
                                "shs": bool(shs[i]), "appendix": bool(apx[i])})
    rec(f"shs agrees with the appendix base (size <= {max_size})", not diverge,
        f"{total} algebras passing the hemi-implicative base, {members} members"
        + (f"; divergences {diverge}" if diverge else ""))
    return rec.details


# ---------------------------------------------------------------------------

CRITERIA: list[tuple[int, str, float, Callable[[], list]]] = [
    (1, "fixture classifications", 1.0, fixture_classifications),
    (2, "calculus soundness and the separating scheme", 30.0, calculus_soundness),
    (3, "representation theorems", 120.0, representation),
    (4, "bracket calculus", 30.0, bracket_properties),
    (5, "proof corpus and deduction transform", 5.0, proof_corpus),
    (6, "finite model property end to end", 120.0, fmp_end_to_end),
    (7, "box laws", 10.0, box_laws),
    (8, "appendix equivalence", 60.0, appendix_equivalence),
]


def run_criterion(number: int, **kw) -> CheckResult:
    num, title, limit, fn = CRITERIA[number - 1]
    res = CheckResult(num, title, limit)
    t0 = time.perf_counter()
    try:
        res.details = fn(**kw)
        res.passed = all(ok for _, ok, _ in res.details)
    except Exception as e:      # a crash is a red row, not an aborted suite
        res.error = f"{type(e).__name__}: {e}"
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(only: Optional[list] = None) -> list[CheckResult]:
    nums = only or [c[0] for c in CRITERIA]
    return [run_criterion(k) for k in nums]
