"""roofscope: marked Dynkin diagram combinatorics.

Exact root systems, homogeneous variety invariants, enumeration and
classification of roofs of P^{r-1}-bundles, and divisor arithmetic on
projectivized bundles over bases with H-power cohomology.
"""

from .root_system import (
    RootSystem,
    SimpleType,
    Weight,
    construct,
    pairing,
    positive_root_count,
    sum_positive_roots,
    weight_of,
)
from .dynkin import (
    ComponentShape,
    Diagram,
    Edge,
    MarkedDiagram,
    ParseError,
    cartan_from_edges,
    classify_components,
    diagram_of,
    parse,
    remove_node,
    serialize,
)
from .homog import (
    VarietyInvariants,
    fibration_fiber,
    gp_invariants,
    is_projective_space,
    point_components,
)
from .roofs import (
    ClassEntry,
    ClassificationQuery,
    ClassificationResult,
    Family,
    G2_DAGGER_RECORD,
    NON_HOMOGENEOUS,
    RoofRecord,
    TableReport,
    TableRow,
    classify_simple_kequiv,
    enumerate_roofs,
    family_diagram,
    is_roof,
    name_family,
    verify_paper_table,
)
from .chow import (
    BundleChowRing,
    ChowElement,
    CodimVerdict,
    CyclicBase,
    H,
    KEquivScenario,
    MukaiVerdict,
    OTTAVIANI_CHERNS_CYCLIC,
    OTTAVIANI_CHERNS_H,
    XI,
    blowup_discrepancy,
    canonical_class_pe,
    chern_units_to_h,
    kequiv_forces_equal_codim,
    mukai_pair_check,
    projective_space,
    quadric,
    twist_cherns,
)

__version__ = "0.1.0"

__all__ = [
    "BundleChowRing",
    "ChowElement",
    "ClassEntry",
    "ClassificationQuery",
    "ClassificationResult",
    "CodimVerdict",
    "ComponentShape",
    "CyclicBase",
    "Diagram",
    "Edge",
    "Family",
    "G2_DAGGER_RECORD",
    "H",
    "KEquivScenario",
    "MarkedDiagram",
    "MukaiVerdict",
    "NON_HOMOGENEOUS",
    "OTTAVIANI_CHERNS_CYCLIC",
    "OTTAVIANI_CHERNS_H",
    "ParseError",
    "RootSystem",
    "RoofRecord",
    "SimpleType",
    "TableReport",
    "TableRow",
    "VarietyInvariants",
    "Weight",
    "XI",
    "blowup_discrepancy",
    "canonical_class_pe",
    "cartan_from_edges",
    "chern_units_to_h",
    "classify_components",
    "classify_simple_kequiv",
    "construct",
    "diagram_of",
    "enumerate_roofs",
    "family_diagram",
    "fibration_fiber",
    "gp_invariants",
    "is_projective_space",
    "is_roof",
    "kequiv_forces_equal_codim",
    "mukai_pair_check",
    "name_family",
    "pairing",
    "parse",
    "point_components",
    "positive_root_count",
    "projective_space",
    "quadric",
    "remove_node",
    "serialize",
    "sum_positive_roots",
    "twist_cherns",
    "verify_paper_table",
    "weight_of",
]
