"""Finite posets with pseudocomplemented sections and their set-valued operators."""

from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptyOperand,
    NoBottomElement,
    NonSingletonSection,
    NotALattice,
    NotAntisymmetric,
    NotPseudocomplemented,
    NotPseudocomplementedSections,
    NotTransitive,
    NoTopElement,
    OrderAxiomFailure,
    ParseError,
    PosetError,
    SectionMismatch,
    SizeLimitExceeded,
    UnknownLabel,
)
from .order import (
    Poset,
    bound_of_pair,
    build_from_covers,
    build_from_relation,
    cone,
    cover_relation,
    extremes,
    is_lattice,
    section,
)
from .reports import CheckReport, Verdict
from .sections import (
    SectionTable,
    glivenko_skeleton,
    has_pseudocomplemented_sections,
    negation,
    negation_laws_report,
    negation_map,
    pseudocomplement,
    relative_pseudocomplement,
    section_pseudocomplement,
    section_table,
    sectional_pseudocomplement,
    verify_pseudocomplemented_sections,
)
from .operators import (
    OperatorTable,
    conjunction,
    conjunction_of_sets,
    downset_conjunction,
    implication,
    implication_properties_report,
    operator_table,
)
from .ialgebra import (
    AXIOMS,
    IAlgebra,
    algebra_of,
    axioms_report,
    poset_of,
    roundtrip_check,
)
from .residuation import (
    ResiduationReport,
    divisibility_report,
    lattice_relative_residuation_report,
    unsharp_residuation_report,
)
from .corpus import (
    CorpusStats,
    corpus_stats,
    enumerate_canonical,
    enumerate_posets,
    filter_pc_sections,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "CheckReport",
    "CorpusStats",
    "CycleDetected",
    "DuplicateLabel",
    "EmptyOperand",
    "IAlgebra",
    "NoBottomElement",
    "NonSingletonSection",
    "NotALattice",
    "NotAntisymmetric",
    "NotPseudocomplemented",
    "NotPseudocomplementedSections",
    "NotTransitive",
    "NoTopElement",
    "OperatorTable",
    "OrderAxiomFailure",
    "ParseError",
    "Poset",
    "PosetError",
    "ResiduationReport",
    "SectionMismatch",
    "SectionTable",
    "SizeLimitExceeded",
    "UnknownLabel",
    "Verdict",
    "algebra_of",
    "axioms_report",
    "bound_of_pair",
    "build_from_covers",
    "build_from_relation",
    "cone",
    "conjunction",
    "conjunction_of_sets",
    "corpus_stats",
    "cover_relation",
    "divisibility_report",
    "downset_conjunction",
    "enumerate_canonical",
    "enumerate_posets",
    "extremes",
    "filter_pc_sections",
    "glivenko_skeleton",
    "has_pseudocomplemented_sections",
    "implication",
    "implication_properties_report",
    "is_lattice",
    "lattice_relative_residuation_report",
    "negation",
    "negation_laws_report",
    "negation_map",
    "operator_table",
    "poset_of",
    "pseudocomplement",
    "relative_pseudocomplement",
    "roundtrip_check",
    "section",
    "section_pseudocomplement",
    "section_table",
    "sectional_pseudocomplement",
    "unsharp_residuation_report",
    "verify_pseudocomplemented_sections",
]
