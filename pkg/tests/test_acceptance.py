"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected in RESULTS and repeated in the terminal summary, so
they show up without ``-s``. Run this file directly for the lines alone.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from superintegral.closed_forms import DOCUMENTED_ERRATA, clique_union_spectra, normalize
from superintegral.graphs import CliqueDecomposition, commuting_graph, disjoint_cliques
from superintegral.groups import build_group
from superintegral.polynomials import IntPolynomial
from superintegral.spectra import KINDS, MatrixKind, graph_char_poly, spectrum
from superintegral.verification import (
    ORDER16_GROUPS,
    Verdict,
    check_applications,
    check_group_lists,
    classify,
    errata_report,
    group_facts,
    listing_diffs,
    multiset,
    rank_cross_check,
    verify_instance,
)

A, L, Q = MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN
RESULTS: list[str] = []


def _report(n: int, ok: bool, seconds: float, limit: float | None, detail: str) -> None:
    timed = seconds < limit if limit is not None else True
    status = "PASS" if ok and timed else "FAIL"
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"criterion {n}: {status} [{seconds:.2f}s{budget}] {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert timed, line


def _poly(*factors) -> IntPolynomial:
    return IntPolynomial.from_factors(factors)


lin = IntPolynomial.linear


def test_criterion_1_s4_polynomials():
    start = time.perf_counter()
    g = commuting_graph(build_group("S:4"))
    want_l = _poly((lin(0), 5), (lin(1), 3), (lin(2), 4), (lin(3), 6), (lin(5), 1), (IntPolynomial((3, -8, 1)), 2))
    want_q = _poly(
        (lin(0), 4), (lin(1), 6), (lin(2), 4), (lin(3), 3), (IntPolynomial((20, -11, 1)), 1), (IntPolynomial((11, -8, 1)), 2)
    )
    ok = graph_char_poly(g, L) == want_l and graph_char_poly(g, Q) == want_q
    _report(1, ok, time.perf_counter() - start, 1.0, "S4 L and Q characteristic polynomials bit-exact")


def test_criterion_2_s4_integer_parts():
    start = time.perf_counter()
    g = build_group("S:4")
    rep = classify(g, verify=True)
    lspec, qspec = rep.spectra[L], rep.spectra[Q]
    checks = {
        "L ints": lspec.as_dict() == {0: 5, 1: 3, 2: 4, 3: 6, 5: 1},
        "L residual": lspec.residual == IntPolynomial((3, -8, 1)) ** 2,
        "Q ints": qspec.as_dict() == {0: 4, 1: 6, 2: 4, 3: 3},
        "Q residual": qspec.residual == IntPolynomial((20, -11, 1)) * IntPolynomial((11, -8, 1)) ** 2,
        "not super integral": rep.super_integral is False,
    }
    diff = listing_diffs().get(("S4Listing", "Q", ""))
    checks["5^1 flagged"] = diff is not None and "unsupported terms 5^1" in diff[0] and diff[1]
    bad = [k for k, v in checks.items() if not v]
    _report(2, not bad, time.perf_counter() - start, None, "S4 integer parts and residuals" + (f"; failed {bad}" if bad else ""))


def test_criterion_3_random_clique_unions():
    start = time.perf_counter()
    rng = random.Random(20240601)
    failures = 0
    for _ in range(200):
        parts = [(rng.randint(1, 10), 1) for _ in range(rng.randint(1, 20))]
        d = CliqueDecomposition.normalized(parts)
        closed = clique_union_spectra(d)
        graph = disjoint_cliques(d)
        for kind in KINDS:
            out = spectrum(graph, kind)
            if not out.is_integral or normalize(out.integer_eigenvalues) != closed[kind]:
                failures += 1
    _report(3, failures == 0, time.perf_counter() - start, 30.0, f"200 random clique unions, {failures} disagreements")


# (descriptor, result id, expected L, expected Q); None means "whatever the derived branch says".
SWEEP_CASES: list[tuple[str, str, dict | None, dict | None]] = (
    [(f"D:{2 * m}", "DihedralCor", None, None) for m in range(3, 13)]
    + [(f"Q:{4 * n}", "QuaternionCor", None, None) for n in range(2, 9)]
    + [(f"QD:{2 ** n}", "QuasidihedralProp", None, None) for n in (4, 5)]
    + [(f"M:{m},2", "MetacyclicCor", None, None) for m in (3, 4, 5, 6)]
    + [("PQ:3,7", "PQProp", None, None)]
    + [(d, "ElemAbelianQuotient", None, None) for d in ("D:8", "Q:8", "HP:1,3", "CS:9,3,4")]
    + [("prod(D:8,Z:2)", "DihedralQuotient", None, None)]
    + [("HA:2", "HanakiThetaProp", {0: 3, 4: 9}, None)]
    + [("HP:1,2", "HanakiPProp", None, None), ("HP:1,3", "HanakiPProp", None, None)]
    + [("SZ20", "SzQuotient", {0: 6, 4: 3, 3: 10}, {6: 1, 2: 3, 4: 5, 1: 10})]
    + [("GL2:3", "GLProp", None, None)]
    + [("PSL2:4", "PSLProp", {0: 21, 3: 10, 2: 10, 4: 18}, None)]
    + [(d, "Order16Lemma", {0: 3, 4: 9}, {6: 3, 2: 9}) for d in ORDER16_GROUPS]
    + [("A:4", "ACTheorem", {0: 5, 3: 2, 2: 4}, {4: 1, 1: 2, 2: 4, 0: 4})]
    + [("SL2:3", "ACTheorem", {0: 7, 2: 3, 4: 12}, {0: 3, 2: 15, 6: 4})]
    + [("prod(D:6,Z:3)", "ACProductCor", None, None), ("prod(A:4,Z:2)", "ACProductCor", None, None)]
)


def test_criterion_4_family_sweeps():
    start = time.perf_counter()
    bad = []
    for desc, tid, want_l, want_q in SWEEP_CASES:
        r = verify_instance(desc, tid)
        ok = r.verdicts[L] is Verdict.Match and r.verdicts[Q] in (Verdict.Match, Verdict.MatchDerivedOnly)
        ok = ok and multiset(r.oracle[Q]) == r.derived.signless
        if want_l is not None:
            ok = ok and r.oracle[L].as_dict() == want_l and dict(r.derived.laplacian) == want_l
        if want_q is not None:
            ok = ok and r.oracle[Q].as_dict() == want_q and dict(r.derived.signless) == want_q
        if not ok:
            bad.append(f"{desc}/{tid}")
    detail = f"{len(SWEEP_CASES)} instances" + (f"; failed {bad}" if bad else "")
    _report(4, not bad, time.perf_counter() - start, 120.0, detail)


def test_criterion_5_errata_exact():
    start = time.perf_counter()
    rep = errata_report()
    found = {e.key for e in rep.errata}
    agree = all(e.oracle_agrees_with_derived for e in rep.errata)
    ok = found == set(DOCUMENTED_ERRATA) and agree and not rep.missing
    detail = f"found {sorted(found)}; oracle agrees: {agree}"
    _report(5, ok, time.perf_counter() - start, None, detail)


def test_criterion_6_applications():
    start = time.perf_counter()
    rep = check_applications()
    wanted = {"cent4", "cent5", "pr_set", "pr_smallest_prime"}
    relevant = [r for r in rep.results if r.criterion in wanted]
    failures = [f"{r.criterion}:{r.family}" for r in rep.failures]
    d8, d6 = group_facts("D:8"), group_facts("D:6")
    values = (
        (d8.centralizer_count, d8.commutativity_degree, d8.max_noncommuting) == (4, Fraction(5, 8), 3)
        and (d6.centralizer_count, d6.commutativity_degree, d6.max_noncommuting) == (5, Fraction(1, 2), 4)
        and d8.super_integral
        and d6.super_integral
    )
    ok = not failures and values and bool(relevant)
    detail = f"{len(rep.groups)} groups, {len(relevant)} hypothesis hits, D8/D6 values {'ok' if values else 'wrong'}"
    if failures:
        detail += f"; failed {failures}"
    _report(6, ok, time.perf_counter() - start, 60.0, detail)


def test_criterion_7_group_lists():
    start = time.perf_counter()
    rep = check_group_lists()
    failures = [f"{r.criterion}:{r.family}" for r in rep.failures]
    s4 = [r for r in rep.results if r.family == "S:4"]
    ok = not failures and all(r.computed is False for r in s4)
    detail = f"{len(rep.results)} list memberships checked" + (f"; failed {failures}" if failures else "")
    _report(7, ok, time.perf_counter() - start, 60.0, detail)


def test_criterion_8_rank_cross_check():
    start = time.perf_counter()
    rows = rank_cross_check()
    bad = [f"{f}/{k}" for f, k, ok in rows if ok is False]
    checked = sum(1 for *_, ok in rows if ok)
    skipped = sum(1 for *_, ok in rows if ok is None)
    detail = f"{checked} graph/kind pairs agree, {skipped} skipped (component > 64)"
    if bad:
        detail += f"; failed {bad}"
    _report(8, not bad and checked > 0, time.perf_counter() - start, 120.0, detail)


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
