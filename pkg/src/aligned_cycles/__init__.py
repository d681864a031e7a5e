"""Aligned disjoint paths in 2-connected graphs and long cycles built from them."""

from .aligned import AlignedPair, aligned_pair, escape_path
from .connectivity import ConnectivityReport, analyze, whitney_pair
from .errors import ContractError, GraphError, NoPathError, ParseError, ProofViolation
from .generators import GenSpec, generate
from .graph import (
    Cycle,
    Graph,
    Lollipop,
    Path,
    format_graph,
    is_aligned,
    parse_graph,
    to_dot,
    verify_cycle,
    verify_lollipop,
    verify_path,
)
from .long_cycle import CycleCertificate, ImprovementTrace, long_cycle, verify_certificate

__all__ = [
    "AlignedPair", "ConnectivityReport", "ContractError", "Cycle", "CycleCertificate",
    "GenSpec", "Graph", "GraphError", "ImprovementTrace", "Lollipop", "NoPathError",
    "ParseError", "Path", "ProofViolation", "aligned_pair", "analyze", "escape_path",
    "format_graph", "generate", "is_aligned", "long_cycle", "parse_graph", "to_dot",
    "verify_certificate", "verify_cycle", "verify_lollipop", "verify_path", "whitney_pair",
]
