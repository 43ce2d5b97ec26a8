"""Structural queries on Cayley-table groups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf import is_prime
from .groups import ElementSet, FiniteGroup, generated_subgroup, quotient

DEFAULT_NONCOMMUTING_CAP = 64


def center(g: FiniteGroup) -> ElementSet:
    return ElementSet.from_bools(g.commute.all(axis=1))


def centralizer(g: FiniteGroup, x: int) -> ElementSet:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for a group of order {g.order}")
    return ElementSet.from_bools(g.commute[x])


def centralizer_census(g: FiniteGroup) -> tuple[int, list[ElementSet]]:
    """Number of set-distinct centralizers C_G(x), x in G, and the sets themselves."""
    seen: dict[bytes, int] = {}
    for x in range(g.order):
        seen.setdefault(g.commute[x].tobytes(), x)
    sets = [centralizer(g, x) for x in sorted(seen.values())]
    return len(sets), sets


def _noncentral_witnesses(g: FiniteGroup) -> list[int]:
    # first non-central element of each distinct centralizer
    z = center(g)
    seen: dict[bytes, int] = {}
    for x in range(g.order):
        if x not in z:
            seen.setdefault(g.commute[x].tobytes(), x)
    return sorted(seen.values())


def noncentral_centralizers(g: FiniteGroup) -> list[ElementSet]:
    """Distinct centralizers of non-central elements, ordered by first element."""
    return [centralizer(g, x) for x in _noncentral_witnesses(g)]


def commutativity_degree(g: FiniteGroup) -> Fraction:
    """Pr(G): fraction of ordered pairs that commute, exactly."""
    return Fraction(int(g.commute.sum()), g.order**2)


def is_ac_group(g: FiniteGroup) -> bool:
    """True iff every centralizer of a non-central element is abelian."""
    if g.is_abelian():
        raise ValueError("AC-group classification applies to non-abelian groups only")
    for c in noncentral_centralizers(g):
        idx = c.indices()
        if not g.commute[np.ix_(idx, idx)].all():
            return False
    return True


def quotient_by_center(g: FiniteGroup) -> FiniteGroup:
    return quotient(g, center(g))


def order_histogram(g: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(int(o) for o in g.element_orders).items()))


@dataclass(frozen=True)
class QuotientKind:
    kind: str  # Cyclic | ElemAbelianPSquared | Dihedral | Frobenius20 | Other
    param: int | None = None

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"


_FROBENIUS20_HISTOGRAM = {1: 1, 2: 5, 4: 10, 5: 4}


def recognize_small_quotient(q: FiniteGroup) -> QuotientKind:
    """Fingerprint recognition of the central quotients the closed forms need."""
    n = q.order
    orders = q.element_orders
    if int(orders.max()) == n:
        return QuotientKind("Cyclic")
    abelian = q.is_abelian()
    if abelian:
        for p in range(2, n + 1):
            if p * p == n and is_prime(p) and int(orders.max()) == p:
                return QuotientKind("ElemAbelianPSquared", p)
        return QuotientKind("Other")
    if n == 20 and len(center(q)) == 1 and order_histogram(q) == _FROBENIUS20_HISTOGRAM:
        return QuotientKind("Frobenius20")
    if n % 2 == 0:
        m = n // 2
        # an element a of order m, and every element outside <a> an involution
        for a in np.flatnonzero(orders == m):
            rotations = generated_subgroup(q, [int(a)])
            outside = [x for x in range(n) if x not in rotations]
            if all(orders[x] == 2 for x in outside):
                return QuotientKind("Dihedral", m)
    return QuotientKind("Other")


def derived_subgroup(g: FiniteGroup, h: ElementSet | None = None) -> ElementSet:
    """Subgroup generated by commutators x^-1 y^-1 x y of elements of h (default G)."""
    idx = np.array(h.indices() if h is not None else range(g.order))
    t, inv = g.table, g.inverses
    x, y = np.meshgrid(idx, idx, indexing="ij")
    comms = t[t[inv[x], inv[y]], t[x, y]]
    return generated_subgroup(g, np.unique(comms).tolist())


def derived_series(g: FiniteGroup) -> list[ElementSet]:
    series = [ElementSet.from_indices(range(g.order), g.order)]
    while True:
        nxt = derived_subgroup(g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: FiniteGroup) -> bool:
    return len(derived_series(g)[-1]) == 1


def smallest_prime_divisor(n: int) -> int | None:
    return next((d for d in range(2, n + 1) if n % d == 0), None)


def is_p_group(g: FiniteGroup) -> int | None:
    """The prime p if |G| is a power of p, else None."""
    p = smallest_prime_divisor(g.order)
    if p is None:
        return None
    n = g.order
    while n % p == 0:
        n //= p
    return p if n == 1 else None


def max_noncommuting_set_size(g: FiniteGroup, cap: int = DEFAULT_NONCOMMUTING_CAP) -> int:
    """Largest set of pairwise non-commuting elements (1 for abelian groups).

    Elements sharing a centralizer commute with each other, and whether x and y
    commute depends only on C(x) and C(y), so the search runs over distinct
    non-central centralizers with branch and bound.
    """
    if g.order > cap:
        raise ValueError(
            f"exact search limited to order <= {cap} (got {g.order}); raise cap at your own cost"
        )
    if g.is_abelian():
        return 1
    reps = _noncentral_witnesses(g)
    k = len(reps)
    # conflict[i]: bitmask of classes j that do NOT commute with class i
    conflict = [0] * k
    for i in range(k):
        for j in range(k):
            if i != j and not g.commute[reps[i], reps[j]]:
                conflict[i] |= 1 << j

    best = _greedy_clique(conflict, k)

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + bin(candidates).count("1") <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            expand(size + 1, candidates & conflict[v])

    expand(0, (1 << k) - 1)
    return best


def _greedy_clique(adj: list[int], k: int) -> int:
    chosen = 0
    order = sorted(range(k), key=lambda v: -bin(adj[v]).count("1"))
    size = 0
    for v in order:
        if adj[v] & chosen == chosen:
            chosen |= 1 << v
            size += 1
    return size
