"""Naive reference implementations used as test oracles.

Everything here goes through ``g.mul`` element by element or through sympy,
never through the package's own vectorized paths.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import sympy


def commutes(g, x, y) -> bool:
    return g.mul(x, y) == g.mul(y, x)


def center(g) -> set[int]:
    return {x for x in range(g.order) if all(commutes(g, x, y) for y in range(g.order))}


def centralizer(g, x) -> frozenset[int]:
    return frozenset(y for y in range(g.order) if commutes(g, x, y))


def centralizer_count(g) -> int:
    return len({centralizer(g, x) for x in range(g.order)})


def commuting_pairs(g) -> int:
    return sum(commutes(g, x, y) for x in range(g.order) for y in range(g.order))


def pr(g) -> Fraction:
    return Fraction(commuting_pairs(g), g.order**2)


def element_order(g, x) -> int:
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k


def order_histogram(g) -> dict[int, int]:
    return dict(Counter(element_order(g, x) for x in range(g.order)))


def commuting_edges(g) -> tuple[list[int], set[tuple[int, int]]]:
    z = center(g)
    verts = [x for x in range(g.order) if x not in z]
    edges = {(i, j) for i, x in enumerate(verts) for j, y in enumerate(verts) if i < j and commutes(g, x, y)}
    return verts, edges


def components(n: int, edges) -> list[set[int]]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def sympy_matrix(n: int, edges, kind: str) -> sympy.Matrix:
    a = sympy.zeros(n, n)
    for u, v in edges:
        a[u, v] = a[v, u] = 1
    if kind == "A":
        return a
    d = sympy.diag(*[sum(a.row(i)) for i in range(n)]) if n else sympy.zeros(0, 0)
    return d - a if kind == "L" else d + a


def sympy_char_poly(n: int, edges, kind: str) -> list[int]:
    """Coefficients lowest degree first."""
    x = sympy.Symbol("x")
    p = sympy_matrix(n, edges, kind).charpoly(x)
    return [int(c) for c in reversed(p.all_coeffs())]


def sympy_integer_spectrum(n: int, edges, kind: str) -> dict[int, int]:
    """Integer roots with multiplicity from sympy's roots of the char poly."""
    x = sympy.Symbol("x")
    p = sympy_matrix(n, edges, kind).charpoly(x).as_expr()
    return {int(r): m for r, m in sympy.roots(p, x).items() if r.is_integer}


def derived_length_is_finite(g) -> bool:
    """Iterate commutator subgroups by closure until stable."""
    h = set(range(g.order))
    while True:
        comms = set()
        for x in h:
            for y in h:
                xi, yi = g.inverses[x], g.inverses[y]
                comms.add(g.mul(g.mul(int(xi), int(yi)), g.mul(x, y)))
        closure = {g.identity} | comms
        frontier = set(closure)
        while frontier:
            new = {g.mul(a, b) for a in frontier for b in closure} - closure
            closure |= new
            frontier = new
        if closure == h:
            return len(h) == 1
        h = closure
