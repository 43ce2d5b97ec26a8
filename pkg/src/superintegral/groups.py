"""Cayley-table groups and concrete models of the group families.

Every family is realized in explicit coordinates (pairs ``a^i b^j`` for the
metacyclic-type families, matrices over GF(q) for the linear and Hanaki
groups, permutation tuples for S_n and A_n) and then flattened to a Cayley
table. Presentation relations are checked against the finished table.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product as cartesian
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import descriptors as ds
from .descriptors import FamilyDescriptor
from .gf import field as galois_field

EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 256


class GroupAxiomError(AssertionError):
    """A constructed table violates a group axiom or a presentation relation."""


@dataclass(frozen=True)
class ElementSet:
    """Subset of a host group's elements, stored as an integer bitmask."""

    mask: int
    universe: int

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int) -> "ElementSet":
        mask = 0
        for i in indices:
            mask |= 1 << int(i)
        return cls(mask, universe)

    @classmethod
    def from_bools(cls, flags: np.ndarray) -> "ElementSet":
        packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
        return cls(int.from_bytes(packed.tobytes(), "little"), len(flags))

    def __contains__(self, i: int) -> bool:
        return (self.mask >> i) & 1 == 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __iter__(self):
        m, i = self.mask, 0
        while m:
            if m & 1:
                yield i
            m >>= 1
            i += 1

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask & other.mask, self.universe)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.mask | other.mask, self.universe)

    def __le__(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def indices(self) -> list[int]:
        return list(self)

    def to_bools(self) -> np.ndarray:
        return np.array([i in self for i in range(self.universe)], dtype=bool)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    labels: tuple[str, ...] | None = None
    family: FamilyDescriptor | None = None
    generators: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self.table.setflags(write=False)
        self.inverses.setflags(write=False)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = int(self.inverses[x]), -k
        r = self.identity
        for _ in range(k):
            r = int(self.table[r, x])
        return r

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    @cached_property
    def commute(self) -> np.ndarray:
        """Boolean matrix: commute[x, y] iff xy = yx."""
        c = self.table == self.table.T
        c.setflags(write=False)
        return c

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        k = 1
        remaining = np.ones(self.order, dtype=bool)
        while remaining.any():
            hit = remaining & (cur == self.identity)
            orders[hit] = k
            remaining &= ~hit
            cur = self.table[cur, np.arange(self.order)]
            k += 1
        return orders

    def is_abelian(self) -> bool:
        return bool(self.commute.all())

    def __repr__(self) -> str:
        name = str(self.family) if self.family else "group"
        return f"FiniteGroup({name}, order={self.order})"


def from_elements(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    family: FamilyDescriptor | None = None,
    labels: Sequence[str] | None = None,
    generators: dict[str, Hashable] | None = None,
) -> FiniteGroup:
    """Flatten a concrete model (element list + multiplication) to a Cayley table."""
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise GroupAxiomError("duplicate elements in model")
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        row = table[i]
        for j, b in enumerate(elements):
            try:
                row[j] = index[mul(a, b)]
            except KeyError:
                raise GroupAxiomError(f"product of {a!r} and {b!r} leaves the element set") from None
    return from_table(
        table,
        family=family,
        labels=tuple(labels) if labels is not None else tuple(_label(e) for e in elements),
        generators={k: index[v] for k, v in (generators or {}).items()},
    )


def _label(e: Hashable) -> str:
    return str(e)


def from_table(
    table: np.ndarray,
    family: FamilyDescriptor | None = None,
    labels: tuple[str, ...] | None = None,
    generators: dict[str, int] | None = None,
) -> FiniteGroup:
    table = np.ascontiguousarray(table, dtype=np.int64)
    n = table.shape[0]
    ar = np.arange(n)
    ids = [i for i in range(n) if (table[i] == ar).all() and (table[:, i] == ar).all()]
    if len(ids) != 1:
        raise GroupAxiomError("table has no two-sided identity")
    e = ids[0]
    hits = np.argwhere(table == e)
    inverses = np.full(n, -1, dtype=np.int64)
    for i, j in hits:
        if inverses[i] < 0:
            inverses[i] = j
    if (inverses < 0).any():
        raise GroupAxiomError("some element has no inverse")
    return FiniteGroup(n, table, e, inverses, labels, family, dict(generators or {}))


def check_axioms(g: FiniteGroup, seed: int = 0) -> None:
    """Latin square, identity, inverses and associativity; raise on violation.

    Associativity is exhaustive up to order 256 and checked on 10*n^2 random
    triples above that.
    """
    n, t = g.order, g.table
    ar = np.arange(n)
    if not all((np.sort(t[i]) == ar).all() for i in range(n)):
        raise GroupAxiomError("a row is not a permutation")
    if not all((np.sort(t[:, j]) == ar).all() for j in range(n)):
        raise GroupAxiomError("a column is not a permutation")
    if not ((t[g.identity] == ar).all() and (t[:, g.identity] == ar).all()):
        raise GroupAxiomError("identity row/column wrong")
    if not (t[ar, g.inverses] == g.identity).all():
        raise GroupAxiomError("inverse table wrong")
    if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT:
        for i in range(n):
            # [j, k]: (i j) k  vs  i (j k)
            if not (t[t[i]] == t[i][t]).all():
                raise GroupAxiomError(f"associativity fails with left factor {i}")
    else:
        rng = np.random.default_rng(seed)
        i, j, k = rng.integers(0, n, size=(3, 10 * n * n))
        if not (t[t[i, j], k] == t[i, t[j, k]]).all():
            raise GroupAxiomError("associativity fails on a sampled triple")


# -- presentation words --------------------------------------------------------

_WORD = re.compile(r"([a-z])(?:\^(-?\d+))?")


def evaluate_word(g: FiniteGroup, word: str, gens: dict[str, int]) -> int:
    """Evaluate e.g. ``"bab^-1"`` on the given generator indices; ``"1"`` is the identity."""
    word = word.replace(" ", "")
    r = g.identity
    if word in ("", "1"):
        return r
    pos = 0
    while pos < len(word):
        mt = _WORD.match(word, pos)
        if not mt:
            raise ValueError(f"bad word {word!r}")
        x = g.power(gens[mt.group(1)], int(mt.group(2) or 1))
        r = g.mul(r, x)
        pos = mt.end()
    return r


def relations_hold(g: FiniteGroup, relations: Sequence[tuple[str, str]], gens: dict[str, int]) -> bool:
    return all(evaluate_word(g, lhs, gens) == evaluate_word(g, rhs, gens) for lhs, rhs in relations)


def generated_subgroup(g: FiniteGroup, gens: Iterable[int]) -> ElementSet:
    members = np.zeros(g.order, dtype=bool)
    members[g.identity] = True
    gens = list(gens)
    frontier = [g.identity]
    while frontier:
        nxt = g.table[np.ix_(frontier, gens)].ravel() if gens else np.array([], dtype=np.int64)
        new = np.unique(nxt[~members[nxt]])
        members[new] = True
        frontier = list(new)
    return ElementSet.from_bools(members)


def find_generators(g: FiniteGroup, letters: str, relations: Sequence[tuple[str, str]]) -> dict[str, int] | None:
    """First tuple (in index order) satisfying the relations and generating g."""
    for combo in cartesian(range(g.order), repeat=len(letters)):
        gens = dict(zip(letters, combo))
        if relations_hold(g, relations, gens) and len(generated_subgroup(g, combo)) == g.order:
            return gens
    return None


# -- constructions ---------------------------------------------------------------


def _cyclic_extension(m: int, n: int, r: int, s: int, family: FamilyDescriptor) -> FiniteGroup:
    """<a, b : a^m = 1, b^n = a^s, bab^-1 = a^r> on coordinates a^i b^j."""
    r %= m
    powers = [pow(r, j, m) for j in range(n)]
    elements = [(i, j) for j in range(n) for i in range(m)]

    def mul(x, y):
        (i, j), (k, l) = x, y
        carry = s if j + l >= n else 0
        return ((i + powers[j] * k + carry) % m, (j + l) % n)

    labels = [_ab_label(i, j) for i, j in elements]
    return from_elements(elements, mul, family, labels, {"a": (1 % m, 0), "b": (0, 1 % n)})


def _ab_label(i: int, j: int) -> str:
    parts = [f"a^{i}" if i > 1 else "a" if i == 1 else "", f"b^{j}" if j > 1 else "b" if j == 1 else ""]
    return "".join(parts) or "1"


def _primitive_root_of_order(p: int, q: int) -> int:
    return next(r for r in range(2, q) if pow(r, p, q) == 1)


def _permutation_group(n: int, even_only: bool, family: FamilyDescriptor) -> FiniteGroup:
    def parity(perm):
        seen, sign = set(), 0
        for i in range(n):
            if i in seen:
                continue
            j, length = i, 0
            while j not in seen:
                seen.add(j)
                j = perm[j]
                length += 1
            sign += length - 1
        return sign % 2

    elements = [p for p in permutations(range(n)) if not even_only or parity(p) == 0]

    def mul(x, y):
        # (xy)(i) = x(y(i))
        return tuple(x[y[i]] for i in range(n))

    return from_elements(elements, mul, family, [_cycle_label(p) for p in elements])


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = perm[j]
        cycles.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(cycles) or "()"


def _matrix_group(q: int, which: str, family: FamilyDescriptor) -> FiniteGroup:
    F = galois_field(q)

    def det(m):
        a, b, c, d = m
        return F.sub(F.mul(a, d), F.mul(b, c))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (
            F.add(F.mul(a, e), F.mul(b, g)),
            F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)),
            F.add(F.mul(c, f), F.mul(d, h)),
        )

    mats = [m for m in cartesian(range(q), repeat=4) if det(m) != 0]
    if which != "GL2":
        mats = [m for m in mats if det(m) == 1]
    labels = [f"[{a} {b}; {c} {d}]" for a, b, c, d in mats]
    g = from_elements(mats, mul, family if which != "PSL2" else None, labels)
    if which == "PSL2":
        scalars = [i for i, (a, b, c, d) in enumerate(mats) if b == 0 and c == 0 and a == d]
        return quotient(g, ElementSet.from_indices(scalars, g.order), family)
    return g


def _hanaki_theta(n: int, family: FamilyDescriptor) -> FiniteGroup:
    F = galois_field(2**n)
    elements = list(cartesian(range(F.q), repeat=2))

    def mul(x, y):
        (a, b), (a2, b2) = x, y
        return (F.add(a, a2), F.add(F.add(b, b2), F.mul(a2, F.frobenius(a))))

    return from_elements(elements, mul, family, [f"U({a},{b})" for a, b in elements])


def _hanaki_p(n: int, p: int, family: FamilyDescriptor) -> FiniteGroup:
    F = galois_field(p**n)
    elements = list(cartesian(range(F.q), repeat=3))

    def mul(x, y):
        (a, b, c), (a2, b2, c2) = x, y
        return (F.add(a, a2), F.add(F.add(b, b2), F.mul(c, a2)), F.add(c, c2))

    return from_elements(elements, mul, family, [f"V({a},{b},{c})" for a, b, c in elements])


def _sg16_3(family: FamilyDescriptor) -> FiniteGroup:
    # (Z4 x Z2) x| Z2 with z: x -> xy, y -> y
    elements = list(cartesian(range(4), range(2), range(2)))

    def act(i, j, k):
        return (i, (j + k * i) % 2)

    def mul(u, v):
        (i, j, k), (i2, j2, k2) = u, v
        ai, aj = act(i2, j2, k)
        return ((i + ai) % 4, (j + aj) % 2, (k + k2) % 2)

    return from_elements(elements, mul, family, [f"x^{i}y^{j}z^{k}" for i, j, k in elements])


def cyclic_group(n: int) -> FiniteGroup:
    return from_elements(list(range(n)), lambda x, y: (x + y) % n, ds.cyclic(n), [f"c^{i}" for i in range(n)], {"c": 1 % n})


def direct_product(g: FiniteGroup, h: FiniteGroup, family: FamilyDescriptor | None = None) -> FiniteGroup:
    """Componentwise product on index pairs (i, j) -> i*|h| + j."""
    n, m = g.order, h.order
    gi = np.repeat(np.arange(n), m)
    hj = np.tile(np.arange(m), n)
    table = g.table[np.ix_(gi, gi)] * m + h.table[np.ix_(hj, hj)]
    if family is None and g.family is not None and h.family is not None:
        family = ds.product(g.family, h.family)
    labels = tuple(f"({g.label(i)}, {h.label(j)})" for i, j in zip(gi, hj))
    return from_table(table, family=family, labels=labels)


def quotient(g: FiniteGroup, normal: ElementSet, family: FamilyDescriptor | None = None) -> FiniteGroup:
    """G/N on coset representatives (smallest index in each coset)."""
    members = normal.indices()
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        coset = g.table[x, members]
        coset_of[coset] = len(reps)
        reps.append(x)
    # normality: xN = Nx for each representative
    for x in reps:
        if set(g.table[x, members]) != set(g.table[members, x]):
            raise GroupAxiomError("quotient by a non-normal subgroup")
    reps_arr = np.array(reps)
    table = coset_of[g.table[np.ix_(reps_arr, reps_arr)]]
    labels = tuple(f"{g.label(x)}N" for x in reps) if g.labels else None
    return from_table(table, family=family, labels=labels)


# presentation relations checked after construction, per family
def _relations(desc: FamilyDescriptor) -> list[tuple[str, str]]:
    p = desc.named
    k = desc.kind
    if k == "Dihedral":
        return [(f"a^{p['m']}", "1"), ("b^2", "1"), ("bab^-1", "a^-1")]
    if k == "GeneralizedQuaternion":
        # a plays y, b plays x:  y^2n = 1, x^2 = y^n, xyx^-1 = y^-1
        n = p["n"]
        return [(f"a^{2 * n}", "1"), ("b^2", f"a^{n}"), ("bab^-1", "a^-1")]
    if k == "Quasidihedral":
        n = p["n"]
        return [(f"a^{2 ** (n - 1)}", "1"), ("b^2", "1"), ("bab^-1", f"a^{2 ** (n - 2) - 1}")]
    if k == "Metacyclic":
        return [(f"a^{p['m']}", "1"), (f"b^{2 * p['n']}", "1"), ("bab^-1", "a^-1")]
    if k == "Sz20":
        return [("a^5", "1"), ("b^4", "1"), ("b^-1ab", "a^2")]
    if k == "M16":
        return [("a^8", "1"), ("b^2", "1"), ("bab", "a^5")]
    if k == "Z4rtimesZ4":
        return [("a^4", "1"), ("b^4", "1"), ("bab^-1", "a^-1")]
    if k == "D8starZ4":
        return [("a^4", "1"), ("b^2", "1"), ("c^2", "1"), ("ab", "ba"), ("ac", "ca"), ("bc", "a^2cb")]
    if k == "SG16_3":
        return [("a^4", "1"), ("b^4", "1"), ("ab", "b^-1a^-1"), ("ab^-1", "ba^-1")]
    if k == "Alternating" and p["n"] == 4:
        return [("a^2", "1"), ("b^3", "1"), ("ababab", "1")]
    if k == "CyclicSemidirect":
        return [(f"a^{p['m']}", "1"), (f"b^{p['n']}", "1"), ("bab^-1", f"a^{p['r']}")]
    if k == "FrobeniusPQ":
        return [(f"a^{p['q']}", "1"), (f"b^{p['p']}", "1")]
    return []


def _expected_order(desc: FamilyDescriptor) -> int:
    p = desc.named
    k = desc.kind
    fixed = {"Sz20": 20, "M16": 16, "Z4rtimesZ4": 16, "D8starZ4": 16, "SG16_3": 16}
    if k in fixed:
        return fixed[k]
    if k == "Cyclic":
        return p["n"]
    if k == "Dihedral":
        return 2 * p["m"]
    if k == "GeneralizedQuaternion":
        return 4 * p["n"]
    if k == "Quasidihedral":
        return 2 ** p["n"]
    if k == "Metacyclic":
        return 2 * p["m"] * p["n"]
    if k == "FrobeniusPQ":
        return p["p"] * p["q"]
    if k in ("Symmetric", "Alternating"):
        f = 1
        for i in range(2, p["n"] + 1):
            f *= i
        return f if k == "Symmetric" or p["n"] < 2 else f // 2
    if k in ("GL2", "SL2", "PSL2"):
        q = p["q"]
        gl = (q * q - 1) * (q * q - q)
        if k == "GL2":
            return gl
        sl = gl // (q - 1)
        return sl if k == "SL2" or q % 2 == 0 else sl // 2
    if k == "HanakiTheta":
        return 2 ** (2 * p["n"])
    if k == "HanakiP":
        return p["p"] ** (3 * p["n"])
    if k == "CyclicSemidirect":
        return p["m"] * p["n"]
    if k == "Product":
        return _expected_order(desc.factors[0]) * _expected_order(desc.factors[1])
    raise AssertionError(k)


def _construct(desc: FamilyDescriptor) -> FiniteGroup:
    p = desc.named
    k = desc.kind
    if k == "Cyclic":
        return cyclic_group(p["n"])
    if k == "Dihedral":
        return _cyclic_extension(p["m"], 2, -1, 0, desc)
    if k == "GeneralizedQuaternion":
        n = p["n"]
        return _cyclic_extension(2 * n, 2, -1, n, desc)
    if k == "Quasidihedral":
        n = p["n"]
        return _cyclic_extension(2 ** (n - 1), 2, 2 ** (n - 2) - 1, 0, desc)
    if k == "Metacyclic":
        return _cyclic_extension(p["m"], 2 * p["n"], -1, 0, desc)
    if k == "FrobeniusPQ":
        return _cyclic_extension(p["q"], p["p"], _primitive_root_of_order(p["p"], p["q"]), 0, desc)
    if k == "Sz20":
        # b^-1 a b = a^2  <=>  b a b^-1 = a^3
        return _cyclic_extension(5, 4, 3, 0, desc)
    if k == "M16":
        return _cyclic_extension(8, 2, 5, 0, desc)
    if k == "Z4rtimesZ4":
        return _cyclic_extension(4, 4, -1, 0, desc)
    if k == "CyclicSemidirect":
        return _cyclic_extension(p["m"], p["n"], p["r"], 0, desc)
    if k in ("Symmetric", "Alternating"):
        return _permutation_group(p["n"], k == "Alternating", desc)
    if k in ("GL2", "SL2", "PSL2"):
        return _matrix_group(p["q"], k, desc)
    if k == "HanakiTheta":
        return _hanaki_theta(p["n"], desc)
    if k == "HanakiP":
        return _hanaki_p(p["n"], p["p"], desc)
    if k == "SG16_3":
        return _sg16_3(desc)
    if k == "D8starZ4":
        d8, z4 = _construct(ds.dihedral(4)), cyclic_group(4)
        big = direct_product(d8, z4)
        a2 = d8.power(d8.generators["a"], 2)
        c2 = z4.power(z4.generators["c"], 2)
        identified = ElementSet.from_indices([0, a2 * 4 + c2], big.order)
        return quotient(big, identified, desc)
    if k == "Product":
        return direct_product(build_group(desc.factors[0]), build_group(desc.factors[1]), desc)
    raise AssertionError(k)


def build_group(desc: FamilyDescriptor | str, verify: bool = True) -> FiniteGroup:
    """Construct the group named by ``desc`` and sanity-check it.

    Raises DescriptorError for out-of-domain parameters and GroupAxiomError if
    the model fails an axiom, the expected order, or its presentation.
    """
    if isinstance(desc, str):
        desc = ds.parse(desc)
    ds.validate(desc)
    g = _construct(desc)
    if g.family != desc:
        g = FiniteGroup(g.order, g.table, g.identity, g.inverses, g.labels, desc, g.generators)
    if g.order != _expected_order(desc):
        raise GroupAxiomError(f"{desc} built with order {g.order}, expected {_expected_order(desc)}")
    if verify:
        check_axioms(g)
        rels = _relations(desc)
        if rels:
            gens = g.generators
            letters = "".join(sorted({c for lhs, rhs in rels for c in lhs + rhs if c.isalpha()}))
            if not gens or set(gens) != set(letters):
                gens = find_generators(g, letters, rels)
                if gens is None:
                    raise GroupAxiomError(f"no generators of {desc} satisfy its presentation")
                g = FiniteGroup(g.order, g.table, g.identity, g.inverses, g.labels, desc, gens)
            elif not relations_hold(g, rels, gens):
                raise GroupAxiomError(f"{desc} model violates its presentation")
    return g
