"""Binary quadratic forms over Z, Z_S and Q[X]: composition, reduction, genus theory,
hyperelliptic Jacobians via forms of discriminant 4f, and specialization sieves."""

from .algebra import Poly, SRing, X
from .errors import GenusFormsError
from .forms import Mat2, QuadForm, act, apply_chain, compose, discriminant, principal_form
from .genus import in_principal_genus, psi, psi_poly_certificate, value_subgroup_H0
from .jacobian import Curve, MumfordDiv, cantor_add, form_to_mumford, lambda_descent, mumford_to_form
from .reduction import is_equivalent_to_principal, principal_equivalence
from .specialize import classify_specialization, empirical_density, eval_form, find_criterion, sieve

__version__ = "0.1.0"

__all__ = [
    "Curve",
    "GenusFormsError",
    "Mat2",
    "MumfordDiv",
    "Poly",
    "QuadForm",
    "SRing",
    "X",
    "act",
    "apply_chain",
    "cantor_add",
    "classify_specialization",
    "compose",
    "discriminant",
    "empirical_density",
    "eval_form",
    "find_criterion",
    "form_to_mumford",
    "in_principal_genus",
    "is_equivalent_to_principal",
    "lambda_descent",
    "mumford_to_form",
    "principal_equivalence",
    "principal_form",
    "psi",
    "psi_poly_certificate",
    "sieve",
    "value_subgroup_H0",
]
