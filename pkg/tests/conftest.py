import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from srlkit.enumerate import enumerate_class  # noqa: E402
from srlkit.order import enumerate_lattices  # noqa: E402
from srlkit.syntax import And, Imp, Not, Or, Var  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@lru_cache(maxsize=None)
def lattices_upto(n):
    return tuple(L for k in range(1, n + 1) for L in enumerate_lattices(k))


@lru_cache(maxsize=None)
def members_upto(cls, n):
    return tuple(A for k in range(1, n + 1) for A in enumerate_class(k, cls))


def lattices(max_size=5):
    return st.sampled_from(lattices_upto(max_size))


def members(cls, max_size=4):
    return st.sampled_from(members_upto(cls, max_size))


VARS = ("p", "q", "r")


def formulas(names=VARS, negation=True, max_leaves=8, lattice=True):
    leaf = st.sampled_from(names).map(Var)

    def extend(sub):
        binary = st.tuples(sub, sub)
        opts = [binary.map(lambda t: Imp(*t))]
        if lattice:
            opts += [binary.map(lambda t: And(*t)), binary.map(lambda t: Or(*t))]
        if negation:
            opts.append(sub.map(Not))
        return st.one_of(*opts)

    return st.recursive(leaf, extend, max_leaves=max_leaves)


@pytest.fixture(scope="session")
def sha4():
    return members_upto("sha", 4)
