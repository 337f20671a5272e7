"""Weak and strong chromatic polynomials of mixed graphs, order polynomials,
and exhaustive checks of their reciprocity theorems."""

from .chromatic import (
    check_prop_arc_identity,
    check_prop_edge_dc,
    check_scc_contraction,
    check_strongly_connected,
    exhaustive_verify,
    strong_chromatic_polynomial,
    verify_lemma4,
    verify_stanley_graph,
    verify_strong_reciprocity,
    verify_weak_reciprocity,
    weak_chromatic_polynomial,
    weak_chromatic_via_oracle,
)
from .graph import MixedGraph, Orientation, orientations
from .parsing import parse_dot_subset, parse_lines, parse_poset
from .polynomial import Polynomial, interpolate
from .poset import OmegaLabeling, Poset, order_polynomial
from .report import VerificationReport

__version__ = "0.1.0"
