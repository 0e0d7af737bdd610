"""Optimal acyclic and star colorings of cographs via cotrees."""

from .coloring import (NodeStats, NotACographError, StatsTable, color_cograph, color_cotree,
                       phase1_compute_ac, phase2_assign_colors, saturate)
from .cotree import (JOIN, LEAF, UNION, Cotree, CotreeBuilder, NodeKind, RecognitionResult,
                     find_p4, graph_of, is_skew, recognize, to_binary, to_canonical)
from .graph import (Coloring, Graph, Violation, ViolationKind, count_colors, normalize_colors,
                    verify_acyclic, verify_proper, verify_star)
from .triangulate import (Triangulation, WidthReport, clique_number_cograph,
                          is_phi_triangulatable, triangulate_with_coloring, width_report)

__version__ = "0.1.0"

__all__ = [
    "JOIN", "LEAF", "UNION", "Coloring", "Cotree", "CotreeBuilder", "Graph", "NodeKind",
    "NodeStats", "NotACographError", "RecognitionResult", "StatsTable", "Triangulation",
    "Violation", "ViolationKind", "WidthReport", "clique_number_cograph", "color_cograph",
    "color_cotree", "count_colors", "find_p4", "graph_of", "is_phi_triangulatable", "is_skew",
    "normalize_colors", "phase1_compute_ac", "phase2_assign_colors", "recognize", "saturate",
    "to_binary", "to_canonical", "triangulate_with_coloring", "verify_acyclic",
    "verify_proper", "verify_star", "width_report",
]
