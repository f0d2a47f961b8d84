"""Closed-form exponential-trigonometric integrals."""

from .models import Trig, Branch, ExpTrigMonomial, IntegralResult
from .monomial import (
    integrate_monomial,
    evaluate_monomial,
    closed_form_pair,
    upward_recursion,
    recursion_step,
)
from .products import (
    PRODUCT_TO_SUM,
    expand_xi_times_basis,
    integrate_xi_times_basis,
    xi_basis_value,
)
from .quadrature import integrate_quadrature, monomial_integrand

__all__ = [
    "Trig",
    "Branch",
    "ExpTrigMonomial",
    "IntegralResult",
    "integrate_monomial",
    "evaluate_monomial",
    "closed_form_pair",
    "upward_recursion",
    "recursion_step",
    "PRODUCT_TO_SUM",
    "expand_xi_times_basis",
    "integrate_xi_times_basis",
    "xi_basis_value",
    "integrate_quadrature",
    "monomial_integrand",
]
