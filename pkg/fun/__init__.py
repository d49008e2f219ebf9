# Fused-universe diagram, its exports and winning certificates
from fun.states import EdgeState, VertexState
from fun.diagram import (
    FunDiagram,
    fun_diagram,
    rv_put_winners,
    shuffled_edge_order,
    tie_order_divergence,
    vertex_state,
)
from fun.certificate import (
    Certificate,
    CertificateTree,
    certificate_tiebreaker,
    certify_all,
    directed_max_prim,
    verify_certificate,
)
from fun.export import diagram_to_dict, diagram_to_dot, diagram_to_json

__all__ = [
    "EdgeState",
    "VertexState",
    "FunDiagram",
    "fun_diagram",
    "rv_put_winners",
    "shuffled_edge_order",
    "tie_order_divergence",
    "vertex_state",
    "Certificate",
    "CertificateTree",
    "certificate_tiebreaker",
    "certify_all",
    "directed_max_prim",
    "verify_certificate",
    "diagram_to_dict",
    "diagram_to_dot",
    "diagram_to_json",
]
