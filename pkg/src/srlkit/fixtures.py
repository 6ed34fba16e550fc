"""Named example algebras, with implication tables transcribed as printed."""
from __future__ import annotations

import numpy as np

from .algebra import FiniteAlgebra
from .order import FiniteLattice, FinitePoset
from .pairs import AlgebraPair, build_implication


def _lattice(names, pairs) -> FiniteLattice:
    n = len(names)
    ix = {s: i for i, s in enumerate(names)}
    P = FinitePoset.from_pairs(n, [(ix[a], ix[b]) for a, b in pairs])
    return FiniteLattice.from_leq(P.leq)


def _table(names, rows) -> np.ndarray:
    ix = {s: i for i, s in enumerate(names)}
    return np.array([[ix[v] for v in row.split()] for row in rows])


CHAIN3 = ("0", "m", "1")
M_NAMES = ("0", "a", "b", "c", "1")
N_NAMES = ("0", "a", "b", "c", "1")
B2_NAMES = ("0", "a", "b", "1")


def chain3_lattice() -> FiniteLattice:
    return _lattice(CHAIN3, [("0", "m"), ("m", "1")])


def lattice_M() -> FiniteLattice:
    """The diamond: three atoms a, b, c below 1."""
    return _lattice(M_NAMES, [("0", x) for x in "abc"] + [(x, "1") for x in "abc"])


def lattice_N() -> FiniteLattice:
    """The pentagon: 0 < a < c < 1 and 0 < b < 1."""
    return _lattice(N_NAMES, [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])


def lattice_B2() -> FiniteLattice:
    return _lattice(B2_NAMES, [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def chain3_pair() -> FiniteAlgebra:
    """The 3-chain 0 < m < 1 with D = {0, 1}."""
    L = chain3_lattice()
    return build_implication(AlgebraPair(L, {0, 2})).with_names(CHAIN3)


def two_elt_collapse() -> FiniteAlgebra:
    """Two elements a, b with x -> y = a for all x, y, and 1 = a."""
    return FiniteAlgebra(2, [[0, 0], [0, 0]], top=0, names=("a", "b"))


def collapse_map() -> list[int]:
    """f(0) = f(1) = a, f(m) = b from the 3-chain onto two_elt_collapse."""
    return [0, 1, 0]


M_IMP = _table(M_NAMES, [
    "1 1 1 1 1",
    "b 1 b b 1",
    "0 0 1 0 1",
    "b b b 1 1",
    "0 0 b 0 1",
])

N_IMP_PRINTED = _table(N_NAMES, [
    "1 1 1 1 1",
    "0 1 0 0 1",
    "a a 1 a 1",
    "0 a 0 1 1",
    "0 a 0 a 1",
])

# The printed row for a has a -> c = 0, although a <= c forces a -> c = 1
# (no bounded lattice order on five elements makes the printed table a
# member of srlbs).  The working fixture repairs that single cell.
N_IMP = N_IMP_PRINTED.copy()
N_IMP[1, 3] = 4


def algebra_M(imp=None) -> FiniteAlgebra:
    return FiniteAlgebra.from_lattice(lattice_M(), M_IMP if imp is None else imp, names=M_NAMES)


def algebra_N(imp=None) -> FiniteAlgebra:
    return FiniteAlgebra.from_lattice(lattice_N(), N_IMP if imp is None else imp, names=N_NAMES)


def algebra_N_printed() -> FiniteAlgebra:
    return algebra_N(N_IMP_PRINTED)


def algebra_B2() -> FiniteAlgebra:
    """x -> y = 1 if x <= y, otherwise y."""
    L = lattice_B2()
    n = L.size
    imp = np.where(L.leq, L.top, np.arange(n)[None, :])
    return FiniteAlgebra.from_lattice(L, imp, names=B2_NAMES)


def boole2() -> FiniteAlgebra:
    L = FiniteLattice.chain(2)
    return FiniteAlgebra.from_lattice(L, [[1, 1], [0, 1]], names=("0", "1"))


ALGEBRAS = {
    "chain3-pair": chain3_pair,
    "two-elt-collapse": two_elt_collapse,
    "M": algebra_M,
    "N": algebra_N,
    "N-printed": algebra_N_printed,
    "B2": algebra_B2,
    "boole2": boole2,
}

# Classification stated for each fixture: class tag -> expected membership.
EXPECTED = {
    "chain3-pair": {"srl": True, "srlbs": True, "shs": True, "sha": True},
    "two-elt-collapse": {"sha": False},
    "M": {"srlbs": True, "srl": False, "shs": True},
    "N": {"srlbs": True, "srl": False, "shs": True},
    "N-printed": {"srlbs": False},
    "B2": {"shs": True, "srs": False, "srlbs": False},
    "boole2": {"srl": True, "sha": True, "hilbert": True},
}


def get(name: str) -> FiniteAlgebra:
    try:
        return ALGEBRAS[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(ALGEBRAS)}") from None
