from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import group
from superintegral.closed_forms import (
    DOCUMENTED_ERRATA,
    THEOREMS,
    VERBATIM,
    ClosedFormError,
    FormulaError,
    TheoremId,
    clique_union_spectra,
    dispatch_listing,
    evaluate,
    evaluate_spectrum,
    expected_clique_decomposition,
    expected_spectra,
    normalize,
    split_terms,
    verbatim_spectra,
)
from superintegral.graphs import CliqueDecomposition, disjoint_cliques
from superintegral.spectra import KINDS, MatrixKind, spectrum
from superintegral.structure import center
from superintegral.verification import formula_diffs, instance_parameters, listing_diffs, sweep_instances

A, L, Q = MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN


def test_normalize():
    assert normalize([(2, 1), (0, 3), (2, 2), (5, 0)]) == ((2, 3), (0, 3))
    with pytest.raises(ClosedFormError):
        normalize([(1, -1)])


def test_clique_union_examples():
    s = clique_union_spectra(CliqueDecomposition.normalized([(4, 1), (3, 5)]))
    assert s[L] == ((4, 3), (3, 10), (0, 6))
    assert s[Q] == ((6, 1), (4, 5), (2, 3), (1, 10))
    assert s[A] == ((3, 1), (2, 5), (-1, 13))
    # K1 parts contribute a single zero to each spectrum
    s = clique_union_spectra(CliqueDecomposition.normalized([(1, 3)]))
    assert s == {A: ((0, 3),), L: ((0, 3),), Q: ((0, 3),)}
    # K2 parts: Q has 2 and 0
    assert clique_union_spectra(CliqueDecomposition.normalized([(2, 2)]))[Q] == ((2, 2), (0, 2))


@given(st.lists(st.tuples(st.integers(1, 7), st.integers(1, 3)), min_size=1, max_size=4))
def test_clique_union_spectra_match_oracle(parts):
    d = CliqueDecomposition.normalized(parts)
    closed = clique_union_spectra(d)
    g = disjoint_cliques(d)
    for kind in KINDS:
        out = spectrum(g, kind)
        assert out.is_integral
        assert normalize(out.integer_eigenvalues) == closed[kind]
        assert sum(m for _, m in closed[kind]) == d.vertex_count


def test_quaternion_n4():
    e = expected_spectra("QuaternionCor", {"n": 4})
    assert dict(e.laplacian) == {0: 5, 6: 5, 2: 4}
    assert dict(e.signless) == {10: 1, 4: 5, 2: 4, 0: 4}


@pytest.mark.parametrize(
    "tid,params,parts",
    [
        ("SzQuotient", {"z": 1}, ((4, 1), (3, 5))),
        ("PQProp", {"p": 3, "q": 7}, ((6, 1), (2, 7))),
        ("HanakiPProp", {"n": 1, "p": 2}, ((2, 3),)),
        ("HanakiThetaProp", {"n": 2}, ((4, 3),)),
        ("Order16Lemma", {}, ((4, 3),)),
        ("PSLProp", {"k": 2}, ((3, 5), (2, 10), (4, 6))),
        ("GLProp", {"q": 3}, ((2, 6), (6, 3), (4, 4))),
        ("DihedralCor", {"m": 7}, ((6, 1), (1, 7))),
        ("DihedralCor", {"m": 6}, ((4, 1), (2, 3))),
        ("MetacyclicCor", {"m": 4, "n": 2}, ((4, 1), (4, 2))),
        ("QuasidihedralProp", {"n": 5}, ((14, 1), (2, 8))),
        ("ACTheorem", {"z": 1, "X": [3, 2, 2, 2]}, ((2, 1), (1, 3))),
        ("ACProductCor", {"a": 3, "z": 1, "X": [3, 2, 2, 2]}, ((6, 1), (3, 3))),
    ],
)
def test_expected_decompositions(tid, params, parts):
    assert expected_clique_decomposition(tid, params) == CliqueDecomposition.normalized(parts)


def test_psl_k2_spectrum():
    assert dict(expected_spectra("PSLProp", {"k": 2}).laplacian) == {0: 21, 3: 10, 2: 10, 4: 18}


@pytest.mark.parametrize(
    "tid,params,symbol",
    [
        ("PQProp", {"p": 3, "q": 5}, "p"),
        ("PQProp", {"p": 4, "q": 5}, "p"),
        ("DihedralCor", {"m": 2}, "m"),
        ("QuasidihedralProp", {"n": 3}, "n"),
        ("GLProp", {"q": 6}, "q"),
        ("ElemAbelianQuotient", {"p": 2, "z": 0}, "z"),
        ("ACTheorem", {"z": 2, "X": [2, 4]}, "X"),
        ("PSLProp", {}, "k"),
    ],
)
def test_domain_errors_name_symbol(tid, params, symbol):
    with pytest.raises(ClosedFormError, match=repr(symbol) if not params or symbol not in params else symbol):
        expected_spectra(tid, params)


def test_unknown_theorem():
    with pytest.raises(ClosedFormError, match="unknown"):
        expected_spectra("Nope", {})


@pytest.mark.parametrize("tid", [t for t in TheoremId if t not in (TheoremId.CliqueUnion,)])
def test_sweep_instances_match_vertex_count(tid):
    """Multiplicities of the derived spectra sum to |G| - |Z(G)| on concrete groups."""
    for desc in sweep_instances(tid)[:4]:
        g = group(desc)
        e = expected_spectra(tid, instance_parameters(desc, tid, g))
        n = g.order - len(center(g))
        for kind in KINDS:
            assert sum(m for _, m in e.of(kind)) == n
        assert e.decomposition == CliqueDecomposition.normalized(e.decomposition.parts)


def test_derived_branch_internally_consistent():
    rng = random.Random(3)
    for _ in range(50):
        parts = [(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))]
        e = expected_spectra("CliqueUnion", {"parts": parts})
        d = e.decomposition
        # L has one zero per clique; trace identities for A, L, Q
        assert dict(e.laplacian)[0] == d.clique_count
        edges2 = sum(l * m * (m - 1) for m, l in d.parts)
        assert sum(v * m for v, m in e.adjacency) == 0
        assert sum(v * m for v, m in e.laplacian) == edges2
        assert sum(v * m for v, m in e.signless) == edges2


# -- formula evaluator ---------------------------------------------------------------


@pytest.mark.parametrize(
    "text,env,value",
    [
        ("2(p - 1)z - 2", {"p": 3, "z": 2}, 6),
        ("2^{n - 2}", {"n": 5}, 8),
        ("q(q + 1)/2", {"q": 4}, 10),
        ("-3 + 2^3", {}, 5),
        ("p^{2n} - p^n", {"p": 3, "n": 1}, 6),
        ("2^{k - 1}(2^k + 1)", {"k": 2}, 10),
        ("{{2^{n - 1} - 3}}", {"n": 4}, 5),
        ("mn - m/2", {"m": 4, "n": 3}, 10),
    ],
)
def test_evaluate(text, env, value):
    assert evaluate(text, env) == value


@pytest.mark.parametrize(
    "text,fragment", [("n + 1", "unbound"), ("(p^3 - 2p", "unbalanced"), ("3/2", "non-integral"), ("2 +", "operand"), ("1)", "trailing")]
)
def test_evaluate_errors(text, fragment):
    with pytest.raises(FormulaError, match=fragment):
        evaluate(text, {"p": 2})


def test_split_terms():
    assert split_terms("{0^{m + 1}, (m - 1)^{m - 2}}") == [("0", "{m + 1}"), ("(m - 1)", "{m - 2}")]
    assert evaluate_spectrum("{0^2, 3^1, 0^1, 5^0}", {}) == ((3, 1), (0, 3))
    with pytest.raises(FormulaError):
        split_terms("0^2")
    with pytest.raises(FormulaError, match="multiplicity"):
        split_terms("{3}")


# -- verbatim branch ---------------------------------------------------------------


def test_verbatim_kinds():
    assert all(kind is not A for _, kind in VERBATIM)
    assert set(verbatim_spectra("QuaternionCor", {"n": 3})) == {L, Q}


def test_verbatim_agrees_where_undocumented():
    v = verbatim_spectra("SzQuotient", {"z": 2})
    e = expected_spectra("SzQuotient", {"z": 2})
    assert v[L].spectrum == e.laplacian and v[Q].spectrum == e.signless


def test_verbatim_reports_problems():
    v = verbatim_spectra("DihedralCor", {"m": 7})
    assert v[L].spectrum == ((6, 5), (0, 8))
    assert v[Q].spectrum is None and "unbound" in v[Q].problem
    v = verbatim_spectra("PCubedCor", {"p": 3})
    assert v[L].spectrum is None and "unbalanced" in v[L].problem


def test_gl_q_sign_slip():
    v = verbatim_spectra("GLProp", {"q": 3})
    e = expected_spectra("GLProp", {"q": 3})
    assert v[L].spectrum == e.laplacian
    assert v[Q].spectrum != e.signless
    assert dict(v[Q].spectrum).get(-2) == 6  # 2q^2 - 6q - 2 at q = 3


def test_mechanical_diff_is_exactly_documented():
    found = set(formula_diffs()) | set(listing_diffs())
    assert found == set(DOCUMENTED_ERRATA)


def test_dispatch_listing():
    rows = dispatch_listing()
    assert [r["theorem"] for r in rows] == [t.value for t in THEOREMS]
    row = next(r for r in rows if r["theorem"] == "PQProp")
    assert row["symbols"] == ["p", "q"] and "p | q-1" in row["constraints"]
    assert row["verbatim_kinds"] == ["L", "Q"]
