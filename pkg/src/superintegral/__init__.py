"""Exact spectra of commuting graphs of finite non-abelian groups.

Builds concrete Cayley tables for the classical families, forms the commuting
graph on the non-central elements, and computes adjacency, Laplacian and
signless Laplacian spectra by exact integer arithmetic. Closed-form spectra
for each family are checked against that oracle.
"""

from __future__ import annotations

from .closed_forms import (
    DOCUMENTED_ERRATA,
    ClosedFormError,
    ExpectedSpectra,
    TheoremId,
    clique_union_spectra,
    expected_clique_decomposition,
    expected_spectra,
    verbatim_spectra,
)
from .descriptors import DescriptorError, FamilyDescriptor, parse
from .graphs import CliqueDecomposition, SimpleGraph, clique_decomposition, commuting_graph, connected_components
from .groups import ElementSet, FiniteGroup, GroupAxiomError, build_group
from .polynomials import IntPolynomial
from .spectra import ComponentTooLargeError, MatrixKind, SpectrumOutcome, spectrum
from .structure import (
    center,
    centralizer,
    centralizer_census,
    commutativity_degree,
    is_ac_group,
    is_solvable,
    max_noncommuting_set_size,
    quotient_by_center,
    recognize_small_quotient,
)
from .verification import AnalysisReport, VerificationReport, check_applications, classify, verify_instance, verify_range

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CliqueDecomposition",
    "ClosedFormError",
    "ComponentTooLargeError",
    "DOCUMENTED_ERRATA",
    "DescriptorError",
    "ElementSet",
    "ExpectedSpectra",
    "FamilyDescriptor",
    "FiniteGroup",
    "GroupAxiomError",
    "IntPolynomial",
    "MatrixKind",
    "SimpleGraph",
    "SpectrumOutcome",
    "TheoremId",
    "VerificationReport",
    "build_group",
    "center",
    "centralizer",
    "centralizer_census",
    "check_applications",
    "classify",
    "clique_decomposition",
    "clique_union_spectra",
    "commutativity_degree",
    "commuting_graph",
    "connected_components",
    "expected_clique_decomposition",
    "expected_spectra",
    "is_ac_group",
    "is_solvable",
    "max_noncommuting_set_size",
    "parse",
    "quotient_by_center",
    "recognize_small_quotient",
    "spectrum",
    "verbatim_spectra",
    "verify_instance",
    "verify_range",
]
