"""Box-enumeration oracle, independent of the library's colon and closure code.

Ideals are plain sets of exponent tuples.  Only suitable for tiny inputs.
"""

from __future__ import annotations

import itertools


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimal(gens):
    gens = set(gens)
    return {g for g in gens if not any(h != g and divides(h, g) for h in gens)}


def member(gens, w):
    return any(divides(g, w) for g in gens)


def colon_max(gens, n):
    gens = minimal(gens)
    if not gens:
        return set()
    top = [max(g[i] for g in gens) for i in range(n)]
    box = itertools.product(*(range(t + 1) for t in top))
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    hits = [w for w in box if all(member(gens, tuple(a + b for a, b in zip(w, e))) for e in unit)]
    return minimal(hits)


def sat(gens, n):
    cur = minimal(gens)
    steps = 0
    while True:
        nxt = colon_max(cur, n)
        if nxt == cur:
            return steps
        cur, steps = nxt, steps + 1


def closure(seeds, n, c=None, strong=True):
    """All monomials reachable by exchange moves, staying under ``c`` if given."""
    seen = set(seeds)
    todo = list(seeds)
    while todo:
        u = todo.pop()
        nz = [j for j in range(n) if u[j]]
        js = nz if strong else nz[-1:]
        for j in js:
            for i in range(j):
                v = list(u)
                v[i] += 1
                v[j] -= 1
                v = tuple(v)
                if c is not None and any(x > y for x, y in zip(v, c)):
                    continue
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return minimal(seen)


def product(A, B):
    return minimal(tuple(a + b for a, b in zip(x, y)) for x in A for y in B)
