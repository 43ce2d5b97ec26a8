"""Closed forms against the exact oracle, group classification, and corpus checks."""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .closed_forms import (
    DOCUMENTED_ERRATA,
    ClosedFormError,
    ExpectedSpectra,
    TheoremId,
    VerbatimResult,
    expected_spectra,
    normalize,
    verbatim_case,
    verbatim_spectra,
)
from .descriptors import FamilyDescriptor, parse
from .gf import is_prime
from .graphs import CliqueDecomposition, clique_decomposition, commuting_graph
from .groups import FiniteGroup, build_group
from .spectra import KINDS, ComponentTooLargeError, MatrixKind, SpectrumOutcome, check_multiplicities, spectrum
from .structure import (
    center,
    centralizer_census,
    commutativity_degree,
    is_ac_group,
    is_p_group,
    is_solvable,
    max_noncommuting_set_size,
    noncentral_centralizers,
    quotient_by_center,
    recognize_small_quotient,
    smallest_prime_divisor,
)

T = TheoremId


class HypothesisError(ValueError):
    """The group does not satisfy the hypothesis of the requested result."""


class Verdict(str, enum.Enum):
    Match = "Match"
    MatchDerivedOnly = "MatchDerivedOnly"
    Mismatch = "Mismatch"


# -- descriptor identity -------------------------------------------------------

# Isomorphic spellings that matter for the hard-coded group lists.
_ALIASES = {"PSL2:4": "A:5", "S:3": "D:6", "PQ:2,3": "D:6", "SL2:2": "D:6", "GL2:2": "D:6"}


def canonical(desc: FamilyDescriptor | str) -> str:
    d = parse(desc) if isinstance(desc, str) else desc
    if d.kind == "Product":
        a, b = sorted(canonical(f) for f in d.factors)
        return f"prod({a},{b})"
    if d.kind == "Metacyclic" and d.named["n"] == 1:
        return f"D:{2 * d.named['m']}"
    if d.kind == "FrobeniusPQ" and d.named["p"] == 2:
        return f"D:{2 * d.named['q']}"
    text = str(d)
    return _ALIASES.get(text, text)


def _group_of(desc, g: FiniteGroup | None) -> tuple[FamilyDescriptor, FiniteGroup]:
    d = parse(desc) if isinstance(desc, str) else desc
    return d, (g if g is not None else build_group(d))


# -- hypotheses and parameters ---------------------------------------------------

ORDER16_GROUPS = ("prod(Z:2,D:8)", "prod(Z:2,Q:8)", "M16", "Z4xZ4s", "D8sZ4", "SG16_3")
_ORDER16_KEYS = {canonical(x) for x in ORDER16_GROUPS}

_FAMILY_THEOREMS: dict[TheoremId, str] = {
    T.DihedralCor: "Dihedral",
    T.QuaternionCor: "GeneralizedQuaternion",
    T.QuasidihedralProp: "Quasidihedral",
    T.MetacyclicCor: "Metacyclic",
    T.PQProp: "FrobeniusPQ",
    T.GLProp: "GL2",
    T.HanakiThetaProp: "HanakiTheta",
    T.HanakiPProp: "HanakiP",
}


def _centralizer_data(g: FiniteGroup) -> tuple[int, list[int]]:
    if g.is_abelian() or not is_ac_group(g):
        raise HypothesisError("not a non-abelian AC-group")
    return len(center(g)), sorted((len(c) for c in noncentral_centralizers(g)), reverse=True)


def instance_parameters(desc: FamilyDescriptor | str, tid: TheoremId | str, g: FiniteGroup | None = None) -> dict:
    """Parameter map for ``tid`` at this group, or HypothesisError."""
    tid = TheoremId(tid)
    d = parse(desc) if isinstance(desc, str) else desc
    if tid in _FAMILY_THEOREMS:
        if d.kind != _FAMILY_THEOREMS[tid]:
            raise HypothesisError(f"{tid} applies to {_FAMILY_THEOREMS[tid]} descriptors, not {d}")
        params = dict(d.named)
        if tid is T.GLProp and params["q"] <= 2:
            raise HypothesisError("GLProp needs q > 2")
        return params
    if tid is T.PSLProp:
        q = d.named.get("q", 0) if d.kind == "PSL2" else 0
        k = q.bit_length() - 1
        if q < 4 or q != 2**k:
            raise HypothesisError("PSLProp applies to PSL2:2^k with k >= 2")
        return {"k": k}
    if tid is T.Order16Lemma:
        if canonical(d) not in _ORDER16_KEYS:
            raise HypothesisError(f"{d} is not one of the six listed groups of order 16")
        return {}
    d, g = _group_of(d, g)
    if g.is_abelian():
        raise HypothesisError("abelian group")
    if tid is T.ACTheorem:
        z, xs = _centralizer_data(g)
        return {"z": z, "X": xs}
    if tid is T.ACProductCor:
        if d.kind != "Product":
            raise HypothesisError("ACProductCor needs a descriptor prod(H,A)")
        h_desc, a_desc = d.factors
        h, a = build_group(h_desc), build_group(a_desc)
        if h.is_abelian():
            h_desc, a_desc, h, a = a_desc, h_desc, a, h
        if not a.is_abelian():
            raise HypothesisError("ACProductCor needs an abelian factor")
        z, xs = _centralizer_data(h)
        return {"a": a.order, "z": z, "X": xs}
    z = len(center(g))
    kind = recognize_small_quotient(quotient_by_center(g))
    if tid is T.SzQuotient and kind.kind == "Frobenius20":
        return {"z": z}
    if tid is T.ElemAbelianQuotient and kind.kind == "ElemAbelianPSquared":
        return {"p": kind.param, "z": z}
    if tid is T.DihedralQuotient:
        if kind.kind == "Dihedral":
            return {"m": kind.param, "z": z}
        if kind.kind == "ElemAbelianPSquared" and kind.param == 2:
            return {"m": 2, "z": z}
    if tid is T.PCubedCor:
        p = is_p_group(g)
        if p is not None and g.order == p**3:
            return {"p": p}
        raise HypothesisError("PCubedCor needs a non-abelian group of order p^3")
    raise HypothesisError(f"central quotient is {kind}, outside the hypothesis of {tid}")


# -- verification ------------------------------------------------------------------


def multiset(outcome: SpectrumOutcome) -> tuple[tuple[int, int], ...] | None:
    """The spectrum as a multiset when fully integral, else None."""
    return normalize(outcome.integer_eigenvalues) if outcome.is_integral else None


def oracle_spectra(g: FiniteGroup, verify: bool = False) -> dict[MatrixKind, SpectrumOutcome]:
    graph = commuting_graph(g)
    return {k: spectrum(graph, k, verify=verify) for k in KINDS}


@dataclass(frozen=True)
class VerificationReport:
    family: str
    theorem: TheoremId
    parameters: Mapping[str, object]
    case: str
    oracle: Mapping[MatrixKind, SpectrumOutcome]
    derived: ExpectedSpectra
    verbatim: Mapping[MatrixKind, VerbatimResult]
    verdicts: Mapping[MatrixKind, Verdict]
    advisories: tuple[str, ...] = ()
    seconds: float = field(default=0.0, compare=False)

    def errata(self) -> list[tuple[str, str, str]]:
        return [
            (self.theorem.value, k.value, self.case) for k, v in self.verdicts.items() if v is Verdict.MatchDerivedOnly
        ]

    def undocumented(self) -> list[str]:
        """Mismatches and verbatim disagreements not in the documented errata."""
        out = [f"{self.family} {self.theorem} {k.value}: Mismatch" for k, v in self.verdicts.items() if v is Verdict.Mismatch]
        out += [f"{self.family} {' '.join(e)}: undocumented erratum" for e in self.errata() if e not in DOCUMENTED_ERRATA]
        return out

    @property
    def ok(self) -> bool:
        return not self.undocumented()


def _verdict(oracle: SpectrumOutcome, derived, verbatim: VerbatimResult | None) -> Verdict:
    if multiset(oracle) != derived:
        return Verdict.Mismatch
    if verbatim is None or verbatim.spectrum == derived:
        return Verdict.Match
    return Verdict.MatchDerivedOnly


def verify_instance(desc: FamilyDescriptor | str, tid: TheoremId | str, g: FiniteGroup | None = None) -> VerificationReport:
    """Build the group, run the oracle, compare with both closed-form branches.

    Disagreement is reported, not raised; hypothesis and construction errors
    propagate.
    """
    start = time.perf_counter()
    tid = TheoremId(tid)
    d, g = _group_of(desc, g)
    params = instance_parameters(d, tid, g)
    derived = expected_spectra(tid, params)
    verbatim = verbatim_spectra(tid, params)
    advisories = []
    try:
        oracle = oracle_spectra(g)
    except ComponentTooLargeError as exc:
        advisories.append(str(exc))
        oracle = {}
    verdicts = {
        k: (_verdict(oracle[k], derived.of(k), verbatim.get(k)) if k in oracle else Verdict.Mismatch) for k in KINDS
    }
    return VerificationReport(
        family=str(d),
        theorem=tid,
        parameters=params,
        case=verbatim_case(tid, params),
        oracle=oracle,
        derived=derived,
        verbatim=verbatim,
        verdicts=verdicts,
        advisories=tuple(advisories),
        seconds=time.perf_counter() - start,
    )


# -- sweeps ------------------------------------------------------------------------


@dataclass(frozen=True)
class Sweep:
    """Default parameter ranges and the groups realizing each assignment."""

    ranges: Mapping[str, tuple[int, ...]]
    groups: Callable[..., list[str]]
    long_ranges: Mapping[str, tuple[int, ...]] = field(default_factory=dict)


def _fixed(*descs: str) -> Sweep:
    return Sweep({}, lambda: list(descs))


def _with_center(base: str, c: int) -> str:
    return base if c == 1 else f"prod({base},Z:{c})"


def _p_cubed_groups(p: int) -> list[str]:
    if not is_prime(p):
        return []
    if p == 2:
        return ["D:8", "Q:8"]
    return [f"HP:1,{p}", f"CS:{p * p},{p},{p + 1}"]


def _dihedral_quotient_groups(m: int, z: int) -> list[str]:
    if m % 2:
        return [_with_center(f"D:{2 * m}", z)] if m >= 3 else []
    return [_with_center(f"D:{4 * m}", z // 2)] if z % 2 == 0 else []


def _primes_dividing(p: int, q: int) -> list[str]:
    ok = is_prime(p) and is_prime(q) and (q - 1) % p == 0
    return [f"PQ:{p},{q}"] if ok else []


def _r(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(range(lo, hi + 1))


SWEEPS: dict[TheoremId, Sweep] = {
    T.DihedralCor: Sweep({"m": _r(3, 12)}, lambda m: [f"D:{2 * m}"]),
    T.QuaternionCor: Sweep({"n": _r(2, 8)}, lambda n: [f"Q:{4 * n}"]),
    T.QuasidihedralProp: Sweep({"n": _r(4, 5)}, lambda n: [f"QD:{2 ** n}"]),
    T.MetacyclicCor: Sweep({"m": _r(3, 6), "n": (2,)}, lambda m, n: [f"M:{m},{n}"]),
    T.PQProp: Sweep({"p": _r(2, 3), "q": _r(3, 13)}, _primes_dividing),
    T.ElemAbelianQuotient: Sweep({"p": _r(2, 3)}, _p_cubed_groups),
    T.PCubedCor: Sweep({"p": _r(2, 3)}, _p_cubed_groups),
    T.DihedralQuotient: Sweep({"m": _r(2, 5), "z": (1, 2, 4)}, _dihedral_quotient_groups),
    T.HanakiThetaProp: Sweep({"n": (2, 3)}, lambda n: [f"HA:{n}"]),
    T.HanakiPProp: Sweep({"n": (1,), "p": (2, 3, 5)}, lambda n, p: [f"HP:{n},{p}"] if is_prime(p) else []),
    T.SzQuotient: Sweep({"z": (1, 2)}, lambda z: [_with_center("SZ20", z)]),
    T.GLProp: Sweep({"q": (3, 4)}, lambda q: [f"GL2:{q}"], {"q": (3, 4, 5)}),
    T.PSLProp: Sweep({"k": (2,)}, lambda k: [f"PSL2:{2 ** k}"], {"k": (2, 3)}),
    T.ACTheorem: _fixed("D:6", "D:10", "Q:12", "A:4", "SL2:3", "SZ20", "PQ:3,7", "GL2:3", "PSL2:4", "HA:2"),
    T.ACProductCor: _fixed("prod(D:6,Z:3)", "prod(A:4,Z:2)", "prod(Q:8,Z:2)", "prod(D:8,Z:2)", "prod(SZ20,Z:2)"),
    T.Order16Lemma: _fixed(*ORDER16_GROUPS),
}


def sweep_instances(tid: TheoremId | str, ranges: Mapping[str, Sequence[int]] | None = None, long: bool = False) -> list[str]:
    """Descriptors in deterministic parameter order; overrides replace default ranges."""
    sweep = SWEEPS[TheoremId(tid)]
    merged = {**sweep.ranges, **(sweep.long_ranges if long else {})}
    for sym, values in (ranges or {}).items():
        if sym not in merged:
            raise ClosedFormError(f"{TheoremId(tid)} has no range parameter {sym!r} (has {sorted(merged) or 'none'})")
        merged[sym] = tuple(values)
    names = list(sweep.ranges)
    out: list[str] = []
    for combo in itertools.product(*(merged[s] for s in names)):
        for desc in sweep.groups(*combo):
            if desc not in out:
                out.append(desc)
    return out


@dataclass(frozen=True)
class SweepSummary:
    theorem: TheoremId
    reports: tuple[VerificationReport, ...]
    skipped: tuple[str, ...] = ()  # instances outside the hypothesis

    def counts(self) -> dict[str, dict[str, int]]:
        out = {k.value: {v.value: 0 for v in Verdict} for k in KINDS}
        for r in self.reports:
            for k, v in r.verdicts.items():
                out[k.value][v.value] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


def verify_range(tid: TheoremId | str, ranges: Mapping[str, Sequence[int]] | None = None, long: bool = False) -> SweepSummary:
    tid = TheoremId(tid)
    reports, skipped = [], []
    for desc in sweep_instances(tid, ranges, long):
        try:
            reports.append(verify_instance(desc, tid))
        except HypothesisError as exc:
            skipped.append(f"{desc}: {exc}")
    return SweepSummary(tid, tuple(reports), tuple(skipped))


def verify_all(long: bool = False) -> list[SweepSummary]:
    return [verify_range(t, long=long) for t in SWEEPS]


# -- errata ------------------------------------------------------------------------

# Integer parts and irrational-eigenvalue counts as printed for five groups.
PRINTED_LISTINGS: dict[str, dict[MatrixKind, tuple[tuple[tuple[int, int], ...], int]]] = {
    "S:4": {
        MatrixKind.LAPLACIAN: (((0, 5), (1, 3), (2, 4), (3, 6), (5, 1)), 4),
        MatrixKind.SIGNLESS_LAPLACIAN: (((0, 4), (1, 6), (2, 4), (3, 3), (5, 1)), 6),
    },
    "A:4": {
        MatrixKind.LAPLACIAN: (((0, 5), (3, 2), (2, 4)), 0),
        MatrixKind.SIGNLESS_LAPLACIAN: (((4, 1), (1, 2), (2, 4), (0, 4)), 0),
    },
    "SZ20": {
        MatrixKind.LAPLACIAN: (((0, 6), (4, 3), (3, 10)), 0),
        MatrixKind.SIGNLESS_LAPLACIAN: (((6, 1), (2, 3), (4, 5), (1, 10)), 0),
    },
    "SL2:3": {
        MatrixKind.LAPLACIAN: (((0, 7), (2, 3), (4, 12)), 0),
        MatrixKind.SIGNLESS_LAPLACIAN: (((0, 3), (2, 15), (6, 4)), 0),
    },
    "A:5": {
        MatrixKind.LAPLACIAN: (((0, 21), (3, 10), (2, 10), (4, 18)), 0),
        MatrixKind.SIGNLESS_LAPLACIAN: (((4, 5), (1, 10), (2, 10), (0, 10), (6, 6), (2, 18)), 0),
    },
}

_LISTING_KEYS = {"S:4": "S4Listing", "A:4": "A4Listing", "SZ20": "Sz20Listing", "SL2:3": "SL23Listing", "A:5": "A5Listing"}

# Formula samples used to diff the verbatim and derived branches.
def _formula_samples() -> Iterable[tuple[TheoremId, dict]]:
    primes = (2, 3, 5, 7)
    for parts in ([(4, 1), (3, 5)], [(2, 3)], [(1, 4)], [(6, 1), (1, 7)], [(5, 2), (3, 1), (1, 3)]):
        yield T.CliqueUnion, {"parts": parts}
    for z in _r(1, 4):
        yield T.SzQuotient, {"z": z}
        for p in primes:
            yield T.ElemAbelianQuotient, {"p": p, "z": z}
        for m in _r(2, 7):
            yield T.DihedralQuotient, {"m": m, "z": z}
    for m in _r(3, 9):
        for n in _r(1, 3):
            yield T.MetacyclicCor, {"m": m, "n": n}
    for m in _r(3, 12):
        yield T.DihedralCor, {"m": m}
    for n in _r(2, 8):
        yield T.QuaternionCor, {"n": n}
    for p in primes:
        yield T.PCubedCor, {"p": p}
    for p, q in itertools.product(primes, (3, 5, 7, 11, 13)):
        if (q - 1) % p == 0:
            yield T.PQProp, {"p": p, "q": q}
    for n in _r(4, 7):
        yield T.QuasidihedralProp, {"n": n}
    for k in _r(2, 4):
        yield T.PSLProp, {"k": k}
    for q in (3, 4, 5, 7, 8, 9):
        yield T.GLProp, {"q": q}
    for n in _r(2, 4):
        yield T.HanakiThetaProp, {"n": n}
    for n, p in itertools.product((1, 2), (2, 3, 5)):
        yield T.HanakiPProp, {"n": n, "p": p}
    for z, xs in ((1, [3, 2, 2, 2]), (2, [6, 4, 4]), (4, [8, 8, 8])):
        yield T.ACTheorem, {"z": z, "X": xs}
        for a in _r(1, 3):
            yield T.ACProductCor, {"a": a, "z": z, "X": xs}
    yield T.Order16Lemma, {}


# A concrete group exhibiting each formula erratum, for oracle adjudication.
ERRATUM_WITNESSES = {"DihedralCor": "D:14", "PCubedCor": "HP:1,3", "GLProp": "GL2:3"}


@dataclass(frozen=True)
class Erratum:
    key: tuple[str, str, str]  # (result, kind, case)
    detail: str
    witness: str | None
    oracle_agrees_with_derived: bool | None
    documented: bool


@dataclass(frozen=True)
class ErrataReport:
    errata: tuple[Erratum, ...]
    missing: tuple[tuple[str, str, str], ...]  # documented but not reproduced

    @property
    def ok(self) -> bool:
        return not self.missing and all(e.documented and e.oracle_agrees_with_derived for e in self.errata)


def _fmt(terms) -> str:
    return ", ".join(f"{v}^{m}" for v, m in terms)


def formula_diffs() -> dict[tuple[str, str, str], str]:
    """(result, kind, case) -> first disagreement between verbatim and derived branches."""
    found: dict[tuple[str, str, str], str] = {}
    for tid, params in _formula_samples():
        derived = expected_spectra(tid, params)
        for kind, res in verbatim_spectra(tid, params).items():
            if res.spectrum == derived.of(kind):
                continue
            key = (tid.value, kind.value, verbatim_case(tid, params))
            if key not in found:
                got = res.problem or _fmt(res.spectrum)
                found[key] = f"at {dict(params)}: verbatim {got}; derived {_fmt(derived.of(kind))}"
    return found


def listing_diffs() -> dict[tuple[str, str, str], tuple[str, bool]]:
    """Printed listings against the oracle: key -> (detail, oracle self-consistent)."""
    found = {}
    for desc, kinds in PRINTED_LISTINGS.items():
        g = build_group(desc)
        graph = commuting_graph(g)
        for kind, (ints, irrational) in kinds.items():
            out = spectrum(graph, kind, verify=True)
            printed = normalize(ints)
            computed = normalize(out.integer_eigenvalues)
            total = sum(m for _, m in printed) + irrational
            if printed == computed and irrational == out.residual.degree:
                continue
            extra = dict(normalize((v, m) for v, m in printed if dict(computed).get(v, 0) < m))
            detail = (
                f"printed {_fmt(printed)} plus {irrational} irrational ({total} eigenvalues on "
                f"{graph.vertex_count} vertices); char poly gives {_fmt(computed)}, residual {out.residual.factored()}"
            )
            if extra:
                detail += f"; unsupported terms {_fmt(extra.items())}"
            found[(_LISTING_KEYS[desc], kind.value, "")] = (detail, out.size == graph.vertex_count)
    return found


def errata_report() -> ErrataReport:
    errata = []
    for key, detail in sorted(formula_diffs().items()):
        witness = ERRATUM_WITNESSES.get(key[0])
        agrees = None
        if witness is not None:
            rep = verify_instance(witness, key[0])
            kind = MatrixKind(key[1])
            agrees = rep.case == key[2] and rep.verdicts[kind] is Verdict.MatchDerivedOnly
        errata.append(Erratum(key, detail, witness, agrees, key in DOCUMENTED_ERRATA))
    for key, (detail, consistent) in sorted(listing_diffs().items()):
        desc = next(d for d, k in _LISTING_KEYS.items() if k == key[0])
        errata.append(Erratum(key, detail, desc, consistent, key in DOCUMENTED_ERRATA))
    seen = {e.key for e in errata}
    missing = tuple(sorted(k for k in DOCUMENTED_ERRATA if k not in seen))
    return ErrataReport(tuple(errata), missing)


# -- classification ----------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    family: str
    order: int
    center_size: int
    centralizer_count: int
    commutativity_degree: Fraction
    ac_group: bool
    solvable: bool
    clique_decomposition: CliqueDecomposition | None
    spectra: Mapping[MatrixKind, SpectrumOutcome]
    integral: Mapping[MatrixKind, bool | None]
    super_integral: bool | None
    theorems: tuple[str, ...]
    advisories: tuple[str, ...] = ()


def applicable_theorems(desc: FamilyDescriptor | str, g: FiniteGroup | None = None) -> list[TheoremId]:
    d, g = _group_of(desc, g)
    out = []
    for tid in TheoremId:
        if tid is T.CliqueUnion:
            continue
        try:
            instance_parameters(d, tid, g)
        except (HypothesisError, ClosedFormError):
            continue
        out.append(tid)
    return out


def classify(g: FiniteGroup, desc: FamilyDescriptor | str | None = None, verify: bool = False) -> AnalysisReport:
    """Full analysis of one non-abelian group."""
    if g.is_abelian():
        raise ValueError("classification applies to non-abelian groups only")
    d = (parse(desc) if isinstance(desc, str) else desc) or g.family
    graph = commuting_graph(g)
    spectra, advisories = {}, []
    for k in KINDS:
        try:
            spectra[k] = spectrum(graph, k, verify=verify)
        except ComponentTooLargeError as exc:
            advisories.append(f"{k.value}: {exc}")
    integral = {k: (spectra[k].is_integral if k in spectra else None) for k in KINDS}
    flags = list(integral.values())
    super_integral = None if None in flags and all(f is not False for f in flags) else all(flags)
    theorems = tuple(t.value for t in applicable_theorems(d, g)) if d is not None else ()
    return AnalysisReport(
        family=str(d) if d is not None else f"order {g.order}",
        order=g.order,
        center_size=len(center(g)),
        centralizer_count=centralizer_census(g)[0],
        commutativity_degree=commutativity_degree(g),
        ac_group=is_ac_group(g),
        solvable=is_solvable(g),
        clique_decomposition=clique_decomposition(graph),
        spectra=spectra,
        integral=integral,
        super_integral=super_integral,
        theorems=theorems,
        advisories=tuple(advisories),
    )


# -- applications over a corpus ----------------------------------------------------

PR_SET = (Fraction(5, 14), Fraction(2, 5), Fraction(11, 27), Fraction(1, 2), Fraction(5, 8))

PLANAR_GROUPS = (
    "D:6", "D:8", "D:10", "D:12", "Q:8", "Q:12", "prod(Z:2,D:8)", "prod(Z:2,Q:8)", "M16",
    "Z4xZ4s", "D8sZ4", "SG16_3", "A:4", "A:5", "S:4", "SL2:3", "SZ20",
)
PLANAR_EXCEPTION = "S:4"
TOROIDAL_GROUPS = ("D:14", "D:16", "Q:16", "QD:16", "prod(D:6,Z:3)", "prod(A:4,Z:2)", "PQ:3,7")
COMPLEMENT_PLANAR_GROUPS = ("D:6", "D:8", "Q:8")

_LIST_CRITERIA = {
    "planar": PLANAR_GROUPS,
    "toroidal": TOROIDAL_GROUPS,
    "complement_planar": COMPLEMENT_PLANAR_GROUPS,
}


def default_corpus(long: bool = False) -> list[str]:
    out = [f"D:{2 * m}" for m in _r(3, 20)]
    out += [f"Q:{4 * n}" for n in _r(2, 8)]
    out += ["QD:16", "QD:32"]
    out += [f"M:{m},{n}" for n in _r(2, 8) for m in _r(3, 24) if 2 * m * n <= 48]
    out += ["prod(D:8,Z:2)", "prod(Q:8,Z:2)", "M16", "Z4xZ4s", "D8sZ4", "SG16_3"]
    out += ["A:4", "S:4", "A:5", "SL2:3", "GL2:3", "PSL2:4", "SZ20", "PQ:3,7"]
    out += ["HA:2", "HP:1,2", "HP:1,3", "CS:9,3,4"]
    out += ["prod(D:6,Z:3)", "prod(A:4,Z:2)"]
    if long:
        out.append("PSL2:8")
    return out


@dataclass(frozen=True)
class GroupFacts:
    family: str
    order: int
    centralizer_count: int
    commutativity_degree: Fraction
    smallest_prime: int
    p_group: int | None
    solvable: bool
    max_noncommuting: int | None
    super_integral: bool | None


@dataclass(frozen=True)
class CriterionResult:
    criterion: str
    family: str
    hypothesis: str
    predicted: bool
    computed: bool | None

    @property
    def passed(self) -> bool:
        return self.computed is self.predicted


@dataclass(frozen=True)
class ApplicationReport:
    groups: tuple[GroupFacts, ...]
    results: tuple[CriterionResult, ...]

    @property
    def failures(self) -> list[CriterionResult]:
        return [r for r in self.results if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures


def group_facts(desc: str, g: FiniteGroup | None = None) -> GroupFacts:
    d, g = _group_of(desc, g)
    rep = classify(g, d)
    r = max_noncommuting_set_size(g) if g.order <= 64 else None
    return GroupFacts(
        family=str(d),
        order=g.order,
        centralizer_count=rep.centralizer_count,
        commutativity_degree=rep.commutativity_degree,
        smallest_prime=smallest_prime_divisor(g.order),
        p_group=is_p_group(g),
        solvable=rep.solvable,
        max_noncommuting=r,
        super_integral=rep.super_integral,
    )


def _criteria(f: GroupFacts) -> list[CriterionResult]:
    out = []

    def add(name, hypothesis, predicted=True):
        out.append(CriterionResult(name, f.family, hypothesis, predicted, f.super_integral))

    if f.centralizer_count == 4:
        add("cent4", "|Cent(G)| = 4")
    if f.centralizer_count == 5:
        add("cent5", "|Cent(G)| = 5")
    if f.p_group is not None and f.centralizer_count == f.p_group + 2:
        add("cent_p_plus_2", f"p-group with |Cent(G)| = {f.p_group} + 2")
    if f.commutativity_degree in PR_SET:
        add("pr_set", f"Pr(G) = {f.commutativity_degree}")
    p = f.smallest_prime
    if f.commutativity_degree == Fraction(p * p + p - 1, p**3):
        add("pr_smallest_prime", f"Pr(G) = (p^2 + p - 1)/p^3 with p = {p}")
    if f.commutativity_degree == Fraction(1, 12) and not f.solvable:
        add("pr_one_twelfth", "non-solvable with Pr(G) = 1/12")
    if f.max_noncommuting in (3, 4):
        add("max_noncommuting", f"r = {f.max_noncommuting}")
        expected_cent = f.max_noncommuting + 1
        out.append(
            CriterionResult(
                "max_noncommuting_centralizers",
                f.family,
                f"r = {f.max_noncommuting} gives |Cent(G)| = {expected_cent}",
                True,
                f.centralizer_count == expected_cent,
            )
        )
    key = canonical(f.family)
    for name, members in _LIST_CRITERIA.items():
        if key in {canonical(x) for x in members}:
            exception = name == "planar" and key == canonical(PLANAR_EXCEPTION)
            add(name, f"listed {name}" + (" (excluded member)" if exception else ""), not exception)
    return out


def check_applications(corpus: Iterable[str] | None = None, long: bool = False) -> ApplicationReport:
    """Evaluate every application criterion over the corpus."""
    facts, results = [], []
    for desc in corpus if corpus is not None else default_corpus(long):
        f = group_facts(desc)
        facts.append(f)
        results.extend(_criteria(f))
    return ApplicationReport(tuple(facts), tuple(results))


def check_group_lists() -> ApplicationReport:
    """Every group in the planar, toroidal and complement-planar lists, built directly."""
    descs = list(dict.fromkeys(PLANAR_GROUPS + TOROIDAL_GROUPS + COMPLEMENT_PLANAR_GROUPS))
    facts = [group_facts(d) for d in descs]
    results = [r for f in facts for r in _criteria(f) if r.criterion in _LIST_CRITERIA]
    return ApplicationReport(tuple(facts), tuple(results))


def rank_cross_check(corpus: Iterable[str] | None = None) -> list[tuple[str, str, bool | None]]:
    """(family, kind, ok) per corpus graph; None when a component exceeds the exact limit."""
    out = []
    for desc in corpus if corpus is not None else default_corpus():
        graph = commuting_graph(build_group(desc))
        for kind in KINDS:
            outcome = spectrum(graph, kind)
            try:
                check_multiplicities(graph, kind, outcome)
                out.append((desc, kind.value, True))
            except ComponentTooLargeError:
                out.append((desc, kind.value, None))
            except ArithmeticError:
                out.append((desc, kind.value, False))
    return out
