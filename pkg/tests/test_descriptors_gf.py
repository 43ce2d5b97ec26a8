from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superintegral.descriptors import DescriptorError, FamilyDescriptor, dihedral, parse, product, validate
from superintegral.gf import field, is_irreducible, is_prime, prime_power, smallest_irreducible


@pytest.mark.parametrize(
    "text,kind,params",
    [
        ("D:8", "Dihedral", (4,)),
        ("Q:16", "GeneralizedQuaternion", (4,)),
        ("QD:16", "Quasidihedral", (4,)),
        ("QD:2^5", "Quasidihedral", (5,)),
        ("M:3,2", "Metacyclic", (3, 2)),
        ("PQ:3,7", "FrobeniusPQ", (3, 7)),
        ("SZ20", "Sz20", ()),
        ("GL2:4", "GL2", (4,)),
        ("HP:1,3", "HanakiP", (1, 3)),
        ("Z4xZ4s", "Z4rtimesZ4", ()),
    ],
)
def test_parse(text, kind, params):
    d = parse(text)
    assert (d.kind, d.params) == (kind, params)


def test_parse_product():
    d = parse("prod(D:6, Z:3)")
    assert d == product(dihedral(3), FamilyDescriptor("Cyclic", (3,)))
    assert str(d) == "prod(D:6,Z:3)"


@pytest.mark.parametrize(
    "text,token",
    [("D:9", "D:9"), ("Q:10", "Q:10"), ("QD:24", "QD:24"), ("XYZ:3", "XYZ"), ("prod(D:6", "end"), ("D:8,", ",")],
)
def test_parse_errors_name_token(text, token):
    with pytest.raises(DescriptorError) as exc:
        parse(text)
    assert token in str(exc.value)


def test_validate_domains():
    with pytest.raises(DescriptorError, match="n >= 4"):
        validate(FamilyDescriptor("Quasidihedral", (3,)))
    with pytest.raises(DescriptorError, match="p prime"):
        validate(FamilyDescriptor("HanakiP", (1, 4)))
    with pytest.raises(DescriptorError, match="r\\^n"):
        validate(FamilyDescriptor("CyclicSemidirect", (9, 3, 2)))


@given(st.integers(1, 2000))
def test_prime_power(q):
    pk = prime_power(q)
    divisors = [p for p in range(2, q + 1) if q % p == 0 and is_prime(p)]
    if len(divisors) == 1:
        p = divisors[0]
        assert pk is not None and pk[0] == p and p ** pk[1] == q
    else:
        assert pk is None


@pytest.mark.parametrize(
    "p,k,poly",
    [(2, 2, (1, 1, 1)), (2, 3, (1, 1, 0, 1)), (3, 2, (1, 0, 1)), (2, 4, (1, 1, 0, 0, 1)), (5, 2, (2, 0, 1))],
)
def test_smallest_irreducible(p, k, poly):
    assert smallest_irreducible(p, k) == poly


def test_smallest_irreducible_is_first_in_order():
    # every monic polynomial ordered before it must be reducible
    p, k = 3, 3
    best = smallest_irreducible(p, k)
    for low in itertools.product(range(p), repeat=k):
        cand = tuple(reversed(low)) + (1,)
        if cand == best:
            break
        assert not is_irreducible(list(cand), p)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_field_axioms(q):
    f = field(q)
    els = range(q)
    for x in els:
        assert f.add(x, 0) == x and f.mul(x, 1) == x
        assert f.add(x, f.neg(x)) == 0
        if x:
            assert f.mul(x, f.inv(x)) == 1
    for x, y, z in itertools.product(els, repeat=3):
        if (x * 7 + y * 3 + z) % 5:
            continue  # thin sample
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
    units = [x for x in els if x]
    # multiplicative group is cyclic
    assert any(len({_pow(f, g, i) for i in range(q - 1)}) == q - 1 for g in units)


def _pow(f, x, k):
    r = 1
    for _ in range(k):
        r = f.mul(r, x)
    return r


def test_frobenius_is_additive():
    f = field(8)
    for x, y in itertools.product(range(8), repeat=2):
        assert f.frobenius(f.add(x, y)) == f.add(f.frobenius(x), f.frobenius(y))


def test_field_rejects_non_prime_power():
    with pytest.raises(ValueError):
        field(6)
