"""JSON and plain-text rendering of analysis, verification and census reports.

JSON is emitted with sorted keys and fixed indentation, so parsing and
re-serializing any output reproduces it byte for byte. Rationals are strings
such as ``"5/8"``; spectra use the ``value^mult`` notation, descending.
"""

from __future__ import annotations

import json

from .closed_forms import VerbatimResult
from .spectra import KINDS, SpectrumOutcome, format_multiset
from .verification import (
    AnalysisReport,
    ApplicationReport,
    ErrataReport,
    SweepSummary,
    VerificationReport,
)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _yn(flag) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


def _spectrum_dict(s: SpectrumOutcome) -> dict:
    return {
        "integer_eigenvalues": format_multiset(s.integer_eigenvalues),
        "residual": s.residual.serialize(),
        "residual_factored": s.residual.factored(),
        "integral": s.is_integral,
    }


def _spectrum_text(s: SpectrumOutcome) -> str:
    text = format_multiset(s.integer_eigenvalues) or "(none)"
    if not s.is_integral:
        text += f"  | residual {s.residual.factored()}"
    return text


def _verbatim_text(v: VerbatimResult | None) -> str | None:
    if v is None:
        return None
    return format_multiset(v.spectrum) if v.spectrum is not None else f"unevaluable: {v.problem}"


# -- analysis ------------------------------------------------------------------


def analysis_json(r: AnalysisReport) -> dict:
    return {
        "family": r.family,
        "order": r.order,
        "center_size": r.center_size,
        "centralizer_count": r.centralizer_count,
        "commutativity_degree": str(r.commutativity_degree),
        "ac_group": r.ac_group,
        "solvable": r.solvable,
        "clique_decomposition": str(r.clique_decomposition) if r.clique_decomposition else None,
        "spectra": {k.value: _spectrum_dict(s) for k, s in r.spectra.items()},
        "integral": {k.value: v for k, v in r.integral.items()},
        "super_integral": r.super_integral,
        "theorems": list(r.theorems),
        "advisories": list(r.advisories),
    }


def analysis_text(r: AnalysisReport) -> str:
    rows = [
        ("group", r.family),
        ("order", r.order),
        ("|Z(G)|", r.center_size),
        ("|Cent(G)|", r.centralizer_count),
        ("Pr(G)", r.commutativity_degree),
        ("AC-group", _yn(r.ac_group)),
        ("solvable", _yn(r.solvable)),
        ("commuting graph", r.clique_decomposition or "not a disjoint union of cliques"),
    ]
    for k in KINDS:
        rows.append((f"{k.value}-spec", _spectrum_text(r.spectra[k]) if k in r.spectra else "not computed"))
    rows.append(("integral A/L/Q", " / ".join(_yn(r.integral[k]) for k in KINDS)))
    rows.append(("super integral", _yn(r.super_integral)))
    rows.append(("closed forms", ", ".join(r.theorems) or "none"))
    rows += [("advisory", a) for a in r.advisories]
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in rows)


# -- verification ----------------------------------------------------------------


def verification_json(r: VerificationReport) -> dict:
    return {
        "family": r.family,
        "theorem": r.theorem.value,
        "parameters": dict(r.parameters),
        "case": r.case,
        "verdicts": {k.value: v.value for k, v in r.verdicts.items()},
        "oracle": {k.value: s.serialize() for k, s in r.oracle.items()},
        "derived": {k.value: format_multiset(r.derived.of(k)) for k in KINDS},
        "verbatim": {k.value: _verbatim_text(r.verbatim.get(k)) for k in KINDS},
        "errata": [" ".join(e).strip() for e in r.errata()],
        "advisories": list(r.advisories),
    }


def sweep_json(s: SweepSummary) -> dict:
    return {
        "theorem": s.theorem.value,
        "counts": s.counts(),
        "reports": [verification_json(r) for r in s.reports],
        "skipped": list(s.skipped),
        "ok": s.ok,
    }


def sweeps_json(sweeps: list[SweepSummary]) -> dict:
    return {
        "sweeps": [sweep_json(s) for s in sweeps],
        "undocumented": [u for s in sweeps for r in s.reports for u in r.undocumented()],
        "ok": all(s.ok for s in sweeps),
    }


def sweeps_text(sweeps: list[SweepSummary]) -> str:
    lines = []
    for s in sweeps:
        lines.append(f"== {s.theorem} ({len(s.reports)} instances)")
        for r in s.reports:
            verdicts = "  ".join(f"{k.value}:{r.verdicts[k].value}" for k in KINDS)
            params = ", ".join(f"{k}={v}" for k, v in r.parameters.items())
            lines.append(f"  {r.family:<18} {params:<28} {verdicts}")
        for skip in s.skipped:
            lines.append(f"  skipped {skip}")
    problems = [u for s in sweeps for r in s.reports for u in r.undocumented()]
    lines.append("")
    lines += [f"UNDOCUMENTED {p}" for p in problems]
    total = sum(len(s.reports) for s in sweeps)
    lines.append(f"{total} instances, {len(problems)} undocumented disagreements")
    return "\n".join(lines) + "\n"


# -- errata ----------------------------------------------------------------------


def errata_json(r: ErrataReport) -> dict:
    return {
        "errata": [
            {
                "result": e.key[0],
                "kind": e.key[1],
                "case": e.key[2],
                "detail": e.detail,
                "witness": e.witness,
                "oracle_agrees_with_derived": e.oracle_agrees_with_derived,
                "documented": e.documented,
            }
            for e in r.errata
        ],
        "missing": [list(k) for k in r.missing],
        "ok": r.ok,
    }


def errata_text(r: ErrataReport) -> str:
    lines = []
    for e in r.errata:
        case = f" [{e.key[2]}]" if e.key[2] else ""
        status = "documented" if e.documented else "UNDOCUMENTED"
        lines.append(f"{e.key[0]} {e.key[1]}{case}: {status}")
        lines.append(f"  {e.detail}")
        if e.witness:
            claim = "is self-consistent" if e.key[0].endswith("Listing") else "agrees with derived branch"
            lines.append(f"  oracle on {e.witness} {claim}: {_yn(e.oracle_agrees_with_derived)}")
    for k in r.missing:
        lines.append(f"MISSING documented erratum {' '.join(k)}")
    lines.append(f"{len(r.errata)} errata, {'all documented' if r.ok else 'discrepancies present'}")
    return "\n".join(lines) + "\n"


# -- census ----------------------------------------------------------------------


def census_json(r: ApplicationReport, lists: ApplicationReport | None = None) -> dict:
    def results(rep):
        return [
            {
                "criterion": c.criterion,
                "family": c.family,
                "hypothesis": c.hypothesis,
                "predicted": c.predicted,
                "computed": c.computed,
                "passed": c.passed,
            }
            for c in rep.results
        ]

    out = {
        "groups": [
            {
                "family": f.family,
                "order": f.order,
                "centralizer_count": f.centralizer_count,
                "commutativity_degree": str(f.commutativity_degree),
                "p_group": f.p_group,
                "solvable": f.solvable,
                "max_noncommuting": f.max_noncommuting,
                "super_integral": f.super_integral,
            }
            for f in r.groups
        ],
        "results": results(r),
        "ok": r.ok and (lists is None or lists.ok),
    }
    if lists is not None:
        out["group_lists"] = results(lists)
    return out


def census_text(r: ApplicationReport, lists: ApplicationReport | None = None) -> str:
    lines = [f"{'group':<16} {'order':>5} {'|Cent|':>6} {'Pr':>7} {'r':>3}  SI"]
    for f in r.groups:
        rr = "-" if f.max_noncommuting is None else f.max_noncommuting
        lines.append(
            f"{f.family:<16} {f.order:>5} {f.centralizer_count:>6} {str(f.commutativity_degree):>7} {rr!s:>3}  {_yn(f.super_integral)}"
        )
    lines.append("")
    checked = list(r.results) + (list(lists.results) if lists else [])
    by_criterion: dict[str, list] = {}
    for c in checked:
        by_criterion.setdefault(c.criterion, []).append(c)
    for name, items in by_criterion.items():
        failed = [c for c in items if not c.passed]
        lines.append(f"{name:<30} {len(items):>3} checked, {len(failed)} failed")
        lines += [f"  FAIL {c.family}: {c.hypothesis}, predicted {_yn(c.predicted)}, computed {_yn(c.computed)}" for c in failed]
    return "\n".join(lines) + "\n"

