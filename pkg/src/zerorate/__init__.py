"""Zero-error rates for computing a function with side information.

Confusion graphs, graph products and their collapse laws, exact invariants
(clique, independence, chromatic, fractional chromatic, Lovász theta,
orthogonal rank brackets), orthogonal representations with verified one-way
protocols, and certified rate intervals with advantage verdicts.
"""

from .errors import (
    AssumptionViolation,
    ImproperColoring,
    InputError,
    InvalidCertificate,
    IsolatedVertex,
    ModeMismatch,
    RepresentationMismatch,
    SizeExceeded,
    SolverTimeout,
    StructureViolation,
    VerificationFailure,
    ZeroRateError,
)
from .graphs import (
    DirectedGraph,
    Graph,
    bidirect,
    build_graph,
    complement,
    digraph_to_dot,
    directed_line_graph,
    flatten_product_labels,
    graph_from_json_dict,
    graph_hash,
    graph_to_dot,
    graph_to_json_dict,
    named_graph,
    or_product,
    power,
    strong_product,
)
from .instances import (
    BOX_PLUS,
    Collapse,
    FunctionInstance,
    NonEdgeClassification,
    build_confusion_graph,
    build_m_instance_graph,
    builtin_instance,
    classify_nonedges,
    construct_or_instance,
    construct_strong_instance,
    instance_from_json_dict,
    instance_to_json_dict,
    make_instance,
    predict_product_collapse,
    with_uniform_probs,
)
from .invariants import (
    b_fold_chromatic,
    chromatic_bracket,
    chromatic_number,
    clique_number,
    edge_chromatic_directed,
    fractional_chromatic,
    fractional_chromatic_certificate,
    independence_number,
    maximum_independent_set,
    verify_g13_structure,
    xi_bounds,
)
from .protocol import (
    ProtocolEntry,
    ProtocolTranscript,
    SampleSummary,
    build_and_verify_protocol,
    sample_protocol,
)
from .rates import (
    Bound,
    ClassificationRow,
    ClassificationTable,
    FamilyReport,
    Interval,
    RateReport,
    advantage_report,
    casebook,
    classical_rate_bounds,
    classification_table,
    quantum_rate_bounds,
)
from .reps import (
    OrthRep,
    builtin_representation,
    coloring_to_representation,
    relabel_representation,
    rep_from_json_dict,
    rep_to_json_dict,
    retarget_representation,
    tensor_representation,
    verify_representation,
)
from .theta import ThetaResult, lovasz_theta

__version__ = "0.1.0"

__all__ = [
    "AssumptionViolation",
    "BOX_PLUS",
    "Bound",
    "ClassificationRow",
    "ClassificationTable",
    "Collapse",
    "DirectedGraph",
    "FamilyReport",
    "FunctionInstance",
    "Graph",
    "ImproperColoring",
    "InputError",
    "Interval",
    "InvalidCertificate",
    "IsolatedVertex",
    "ModeMismatch",
    "NonEdgeClassification",
    "OrthRep",
    "ProtocolEntry",
    "ProtocolTranscript",
    "RateReport",
    "RepresentationMismatch",
    "SampleSummary",
    "SizeExceeded",
    "SolverTimeout",
    "StructureViolation",
    "ThetaResult",
    "VerificationFailure",
    "ZeroRateError",
    "advantage_report",
    "b_fold_chromatic",
    "bidirect",
    "build_and_verify_protocol",
    "build_confusion_graph",
    "build_graph",
    "build_m_instance_graph",
    "builtin_instance",
    "builtin_representation",
    "casebook",
    "chromatic_bracket",
    "chromatic_number",
    "classical_rate_bounds",
    "classification_table",
    "classify_nonedges",
    "clique_number",
    "coloring_to_representation",
    "complement",
    "construct_or_instance",
    "construct_strong_instance",
    "digraph_to_dot",
    "directed_line_graph",
    "edge_chromatic_directed",
    "flatten_product_labels",
    "fractional_chromatic",
    "fractional_chromatic_certificate",
    "graph_from_json_dict",
    "graph_hash",
    "graph_to_dot",
    "graph_to_json_dict",
    "independence_number",
    "instance_from_json_dict",
    "instance_to_json_dict",
    "lovasz_theta",
    "make_instance",
    "maximum_independent_set",
    "named_graph",
    "or_product",
    "power",
    "predict_product_collapse",
    "quantum_rate_bounds",
    "relabel_representation",
    "rep_from_json_dict",
    "rep_to_json_dict",
    "retarget_representation",
    "sample_protocol",
    "strong_product",
    "tensor_representation",
    "verify_g13_structure",
    "verify_representation",
    "with_uniform_probs",
    "xi_bounds",
]
