"""Group family descriptors and their text grammar.

    D:<2m>  Q:<4n>  QD:<2^n>  M:<m>,<n>  PQ:<p>,<q>  SZ20  S:<n>  A:<n>
    GL2:<q>  SL2:<q>  PSL2:<q>  HA:<n>  HP:<n>,<p>  M16  Z4xZ4s  D8sZ4
    SG16_3  Z:<n>  CS:<m>,<n>,<r>  prod(<d1>,<d2>)

``CS:m,n,r`` is the split metacyclic group <a, b : a^m = b^n = 1, bab^-1 = a^r>.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .gf import is_prime, prime_power


class DescriptorError(ValueError):
    """Unparsable descriptor text or out-of-domain family parameters."""


# kind -> (grammar keyword, parameter names)
KINDS: dict[str, tuple[str, tuple[str, ...]]] = {
    "Cyclic": ("Z", ("n",)),
    "Dihedral": ("D", ("m",)),
    "GeneralizedQuaternion": ("Q", ("n",)),
    "Quasidihedral": ("QD", ("n",)),
    "Metacyclic": ("M", ("m", "n")),
    "FrobeniusPQ": ("PQ", ("p", "q")),
    "Sz20": ("SZ20", ()),
    "Symmetric": ("S", ("n",)),
    "Alternating": ("A", ("n",)),
    "GL2": ("GL2", ("q",)),
    "SL2": ("SL2", ("q",)),
    "PSL2": ("PSL2", ("q",)),
    "HanakiTheta": ("HA", ("n",)),
    "HanakiP": ("HP", ("n", "p")),
    "M16": ("M16", ()),
    "Z4rtimesZ4": ("Z4xZ4s", ()),
    "D8starZ4": ("D8sZ4", ()),
    "SG16_3": ("SG16_3", ()),
    "CyclicSemidirect": ("CS", ("m", "n", "r")),
    "Product": ("prod", ()),
}
_BY_KEYWORD = {kw: kind for kind, (kw, _) in KINDS.items()}


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilyDescriptor", ...] = field(default=())

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DescriptorError(f"unknown family kind {self.kind!r}")
        names = KINDS[self.kind][1]
        if len(self.params) != len(names):
            raise DescriptorError(f"{self.kind} takes parameters {names}, got {self.params}")
        if (self.kind == "Product") != (len(self.factors) == 2):
            raise DescriptorError("Product takes exactly two factors")

    @property
    def named(self) -> dict[str, int]:
        return dict(zip(KINDS[self.kind][1], self.params))

    def __str__(self) -> str:
        kw = KINDS[self.kind][0]
        if self.kind == "Product":
            return f"prod({self.factors[0]},{self.factors[1]})"
        if not self.params:
            return kw
        p = self.named
        shown = {
            "Dihedral": [2 * p.get("m", 0)],
            "GeneralizedQuaternion": [4 * p.get("n", 0)],
            "Quasidihedral": [2 ** p.get("n", 0)],
        }.get(self.kind, list(self.params))
        return f"{kw}:" + ",".join(str(v) for v in shown)


def cyclic(n: int) -> FamilyDescriptor:
    return FamilyDescriptor("Cyclic", (n,))


def dihedral(m: int) -> FamilyDescriptor:
    """Dihedral group of order 2m."""
    return FamilyDescriptor("Dihedral", (m,))


def product(g: FamilyDescriptor, h: FamilyDescriptor) -> FamilyDescriptor:
    return FamilyDescriptor("Product", (), (g, h))


def validate(desc: FamilyDescriptor) -> None:
    """Raise DescriptorError naming the violated constraint, if any."""
    p = desc.named
    k = desc.kind

    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise DescriptorError(f"{k} requires {msg} (got {desc.params})")

    if k in ("Cyclic",):
        need(p["n"] >= 1, "n >= 1")
    elif k == "Dihedral":
        need(p["m"] >= 3, "m >= 3")
    elif k == "GeneralizedQuaternion":
        need(p["n"] >= 2, "n >= 2")
    elif k == "Quasidihedral":
        need(p["n"] >= 4, "n >= 4")
    elif k == "Metacyclic":
        need(p["m"] > 2, "m > 2")
        need(p["n"] >= 1, "n >= 1")
    elif k == "FrobeniusPQ":
        need(is_prime(p["p"]), "p prime")
        need(is_prime(p["q"]), "q prime")
        need((p["q"] - 1) % p["p"] == 0, "p | q-1")
    elif k in ("Symmetric", "Alternating"):
        need(1 <= p["n"] <= 6, "1 <= n <= 6")
    elif k in ("GL2", "SL2", "PSL2"):
        need(prime_power(p["q"]) is not None, "q a prime power")
    elif k == "HanakiTheta":
        need(p["n"] >= 2, "n >= 2")
    elif k == "HanakiP":
        need(p["n"] >= 1, "n >= 1")
        need(is_prime(p["p"]), "p prime")
    elif k == "CyclicSemidirect":
        m, n, r = p["m"], p["n"], p["r"]
        need(m >= 1 and n >= 1, "m, n >= 1")
        need(pow(r, n, m) == 1 % m, "r^n = 1 mod m")
        need(m == 1 or r % m != 0, "r a unit mod m")
    elif k == "Product":
        for f in desc.factors:
            validate(f)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<word>[A-Za-z][A-Za-z0-9_]*)|(?P<sym>[:,()^]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise DescriptorError(f"unexpected character {text[pos:].strip()[:1]!r} at offset {pos} in {text!r}")
        out.append(mt.group(mt.lastgroup))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise DescriptorError(f"unexpected end of descriptor {self.text!r}")
        if expected is not None and tok != expected:
            raise DescriptorError(f"expected {expected!r} but found token {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def number(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise DescriptorError(f"expected a number but found token {tok!r} in {self.text!r}")
        # the QD order may be written 2^n
        if self.peek() == "^":
            self.take("^")
            return int(tok) ** self.number()
        return int(tok)

    def descriptor(self) -> FamilyDescriptor:
        word = self.take()
        if word == "prod":
            self.take("(")
            a = self.descriptor()
            self.take(",")
            b = self.descriptor()
            self.take(")")
            return product(a, b)
        if word not in _BY_KEYWORD:
            raise DescriptorError(f"unknown family token {word!r} in {self.text!r}")
        kind = _BY_KEYWORD[word]
        arity = len(KINDS[kind][1])
        if arity == 0:
            return FamilyDescriptor(kind)
        self.take(":")
        values = [self.number()]
        for _ in range(arity - 1):
            self.take(",")
            values.append(self.number())
        return FamilyDescriptor(kind, tuple(self._from_order(kind, word, values)))

    def _from_order(self, kind: str, word: str, values: list[int]) -> list[int]:
        v = values[0]
        if kind == "Dihedral":
            if v % 2:
                raise DescriptorError(f"token {word}:{v}: dihedral order must be even")
            return [v // 2]
        if kind == "GeneralizedQuaternion":
            if v % 4:
                raise DescriptorError(f"token {word}:{v}: quaternion order must be divisible by 4")
            return [v // 4]
        if kind == "Quasidihedral":
            if v < 1 or v & (v - 1):
                raise DescriptorError(f"token {word}:{v}: quasidihedral order must be a power of 2")
            return [v.bit_length() - 1]
        return values


def parse(text: str) -> FamilyDescriptor:
    """Parse descriptor text, e.g. ``"prod(D:6,Z:3)"``."""
    parser = _Parser(text)
    desc = parser.descriptor()
    if parser.peek() is not None:
        raise DescriptorError(f"trailing token {parser.peek()!r} in {text!r}")
    return desc
