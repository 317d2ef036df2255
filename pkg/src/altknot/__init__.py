"""Exact computations on the alternating number of torus knots."""

from .algebra import LaurentPoly, PiecewiseLinear
from .bounds import AltBounds, alt_exact, bounds, tau_upsilon_bound
from .braid import BraidWord, equal, normal_form, torus_braid
from .construction import DeformationCertificate, build_deformation, verify_certificate
from .diagram import PDCode, closure_diagram, is_alternating
from .invariants import BraidClosure, ConnectedSum, TorusKnot, invariant_set
from .upsilon import upsilon1, upsilon_torus

__all__ = [
    "AltBounds", "BraidClosure", "BraidWord", "ConnectedSum", "DeformationCertificate",
    "LaurentPoly", "PDCode", "PiecewiseLinear", "TorusKnot", "alt_exact", "bounds",
    "build_deformation", "closure_diagram", "equal", "invariant_set", "is_alternating",
    "normal_form", "tau_upsilon_bound", "torus_braid", "upsilon1", "upsilon_torus",
    "verify_certificate",
]
