"""Independent brute-force oracles.

Plain Python loops over integer tables, written from the definitions and
sharing no code with the package.  Tests compare the package against these
and freeze the resulting numbers.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

# ---------------------------------------------------------------------------
# orders and lattices


def is_partial_order(n, leq):
    for a in range(n):
        if not leq[a][a]:
            return False
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                return False
            for c in range(n):
                if leq[a][b] and leq[b][c] and not leq[a][c]:
                    return False
    return True


def glb(n, leq, a, b):
    lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
    best = [c for c in lower if all(leq[d][c] for d in lower)]
    return best[0] if best else None


def lub(n, leq, a, b):
    upper = [c for c in range(n) if leq[a][c] and leq[b][c]]
    best = [c for c in upper if all(leq[c][d] for d in upper)]
    return best[0] if best else None


def lattice_ops(n, leq):
    meet = [[glb(n, leq, a, b) for b in range(n)] for a in range(n)]
    join = [[lub(n, leq, a, b) for b in range(n)] for a in range(n)]
    if any(v is None for row in meet + join for v in row):
        return None
    return meet, join


@lru_cache(maxsize=None)
def all_lattices(n):
    """Lattices on 0..n-1 up to isomorphism, as (leq, meet, join, bottom, top)."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    seen, out = set(), []
    for bits in itertools.product([False, True], repeat=len(pairs)):
        leq = [[a == b for b in range(n)] for a in range(n)]
        for (a, b), on in zip(pairs, bits):
            leq[a][b] = on
        if not is_partial_order(n, leq):
            continue
        ops = lattice_ops(n, leq)
        if ops is None:
            continue
        key = min(tuple(leq[p[a]][p[b]] for a in range(n) for b in range(n))
                  for p in itertools.permutations(range(n)))
        if key in seen:
            continue
        seen.add(key)
        bottom = next(a for a in range(n) if all(leq[a]))
        top = next(a for a in range(n) if all(leq[b][a] for b in range(n)))
        out.append((leq, ops[0], ops[1], bottom, top))
    return out


def upsets(n, leq):
    out = []
    for mask in range(1 << n):
        s = {i for i in range(n) if mask >> i & 1}
        if all(b in s for a in s for b in range(n) if leq[a][b]):
            out.append(frozenset(s))
    return out


def is_distributive(n, meet, join):
    return all(meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
               for a in range(n) for b in range(n) for c in range(n))


# ---------------------------------------------------------------------------
# class membership from the written laws


def _triples(n):
    return itertools.product(range(n), repeat=3)


def sha(n, imp, top):
    r = range(n)
    I = lambda x, y: imp[x][y]
    if any(I(x, x) != top or I(x, top) != top for x in r):
        return False
    for x, y in itertools.product(r, r):
        if I(x, y) == top and I(y, x) == top and x != y:
            return False
    for x, y, z in _triples(n):
        if I(I(x, y), I(I(y, z), I(x, z))) != top:
            return False
        if I(I(x, I(y, z)), I(I(x, y), I(x, z))) != top:
            return False
    return True


def hilbert(n, imp, top):
    r = range(n)
    I = lambda x, y: imp[x][y]
    for x, y in itertools.product(r, r):
        if I(x, I(y, x)) != top:
            return False
        if I(x, y) == top and I(y, x) == top and x != y:
            return False
    return all(I(I(x, I(y, z)), I(I(x, y), I(x, z))) == top for x, y, z in _triples(n))


def _le(meet, a, b):
    return meet[a][b] == a


def srl(n, imp, meet, join, top, bottom):
    if not is_distributive(n, meet, join):
        return False
    le = lambda a, b: _le(meet, a, b)
    I = lambda x, y: imp[x][y]
    r = range(n)
    for x in r:
        if I(x, x) != top:
            return False
    for x, y in itertools.product(r, r):
        if not le(meet[x][I(x, y)], y):
            return False
    for x, y, z in _triples(n):
        if not le(I(x, y), I(z, I(x, y))):
            return False
        if I(z, meet[x][y]) != meet[I(z, x)][I(z, y)]:
            return False
        if I(join[x][y], z) != meet[I(x, z)][I(y, z)]:
            return False
        if not le(meet[I(x, y)][I(y, z)], I(x, z)):
            return False
    return True


def _sr(n, imp, meet, top):
    le = lambda a, b: _le(meet, a, b)
    I = lambda x, y: imp[x][y]
    r = range(n)
    for x, y in itertools.product(r, r):
        if I(meet[x][y], y) != top or not le(meet[x][I(x, y)], y):
            return False
    for x, y, z in _triples(n):
        if not le(I(x, y), I(z, I(x, y))):
            return False
        if I(z, meet[x][y]) != meet[I(z, x)][I(z, y)]:
            return False
    return True


def srs(n, imp, meet, top):
    return _sr(n, imp, meet, top)


def srlbs(n, imp, meet, join, top, bottom):
    return _sr(n, imp, meet, top)


def shs(n, imp, meet, join, top, bottom):
    le = lambda a, b: _le(meet, a, b)
    I = lambda x, y: imp[x][y]
    r = range(n)
    for x, y in itertools.product(r, r):
        if I(meet[x][y], y) != top or not le(meet[x][I(x, y)], y):
            return False
    for x, y, z in _triples(n):
        if not le(I(x, y), I(I(y, z), I(x, z))):
            return False
        if not le(I(x, I(y, z)), I(I(x, y), I(x, z))):
            return False
    return True


def alg_r4star(n, imp, meet, join, neg, top):
    I = lambda x, y: imp[x][y]
    if not sha(n, imp, top):
        return False
    r = range(n)
    for x, y in itertools.product(r, r):
        for v in (I(meet[x][y], x), I(meet[x][y], y), I(x, join[x][y]), I(y, join[x][y]),
                  I(neg[x], I(x, y)), I(I(x, neg[x]), neg[x])):
            if v != top:
                return False
    for x, y, z in _triples(n):
        if I(I(z, x), I(I(z, y), I(z, meet[x][y]))) != top:
            return False
        if I(I(x, z), I(I(y, z), I(join[x][y], z))) != top:
            return False
        if I(meet[x][join[y][z]], join[meet[x][y]][meet[x][z]]) != top:
            return False
    return True


# ---------------------------------------------------------------------------
# brute-force enumeration up to isomorphism


def _canon(n, tables, fixed):
    """Least relabelled copy over permutations fixing the listed constants."""
    best = None
    for p in itertools.permutations(range(n)):
        if any(p[c] != c for c in fixed):
            continue
        inv = [0] * n
        for i, v in enumerate(p):
            inv[v] = i
        key = []
        for t in tables:
            if isinstance(t[0], list):
                key.append(tuple(p[t[inv[a]][inv[b]]] for a in range(n) for b in range(n)))
            else:
                key.append(tuple(p[t[inv[a]]] for a in range(n)))
        key = tuple(key)
        if best is None or key < best:
            best = key
    return best


def count_imp_only(n, member, prune=False):
    """{->, 1}-algebras with top n-1; ``prune`` fixes x -> x = x -> 1 = 1."""
    top = n - 1
    cells = [(x, y) for x in range(n) for y in range(n)]
    if prune:
        cells = [(x, y) for x, y in cells if x != y and y != top]
    keys = set()
    for vals in itertools.product(range(n), repeat=len(cells)):
        imp = [[top] * n for _ in range(n)]
        for (x, y), v in zip(cells, vals):
            imp[x][y] = v
        if member(n, imp, top):
            keys.add(_canon(n, [imp], [top]))
    return len(keys)


def count_lattice_class(n, member, ordered_prune=True, with_neg=False):
    """Algebras over every lattice of size n; ``ordered_prune`` sets x -> y = 1 on x <= y
    and leaves every other cell free except 1."""
    total = 0
    for leq, meet, join, bottom, top in all_lattices(n):
        if ordered_prune:
            cells = [(x, y) for x in range(n) for y in range(n) if not leq[x][y]]
            choices = [[v for v in range(n) if v != top]] * len(cells)
        else:
            cells = [(x, y) for x in range(n) for y in range(n)]
            choices = [range(n)] * len(cells)
        negs = list(itertools.product(range(n), repeat=n)) if with_neg else [None]
        keys = set()
        for vals in itertools.product(*choices):
            imp = [[top] * n for _ in range(n)]
            for (x, y), v in zip(cells, vals):
                imp[x][y] = v
            for neg in negs:
                ok = member(n, imp, meet, join, neg, top) if with_neg else \
                    member(n, imp, meet, join, top, bottom)
                if ok:
                    tabs = [imp, meet] + ([list(neg)] if with_neg else [])
                    keys.add(_canon(n, tabs, [top, bottom]))
        total += len(keys)
    return total


# ---------------------------------------------------------------------------
# filters and pairs


def implicative_filters(n, imp, top):
    out = []
    for mask in range(1 << n):
        F = {i for i in range(n) if mask >> i & 1}
        if top not in F:
            continue
        if all(b in F for a in F for b in range(n) if imp[a][b] in F):
            out.append(frozenset(F))
    return out


def max_table(n, leq, meet, D):
    """a -> b = greatest d in D with d /\\ a <= b, or None when some maximum is missing."""
    imp = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            E = [d for d in D if leq[meet[d][a]][b]]
            top = [d for d in E if all(leq[e][d] for e in E)]
            if not top:
                return None
            imp[a][b] = top[0]
    return imp
