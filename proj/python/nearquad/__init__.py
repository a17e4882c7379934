"""Corrected trapezoidal rules for near-singular and finite-part integrals."""

from ._nearquad import (
    bernoulli_number,
    converge,
    digamma,
    exact_test1,
    exact_test2,
    finite_part_reference,
    integrate_finite_part,
    integrate_near_singular,
    pks_closed_form,
    pks_table,
    reference_integral,
    self_check,
    zk_table,
    zks_table,
)

__all__ = [
    "bernoulli_number",
    "converge",
    "digamma",
    "exact_test1",
    "exact_test2",
    "finite_part_reference",
    "integrate_finite_part",
    "integrate_near_singular",
    "pks_closed_form",
    "pks_table",
    "reference_integral",
    "self_check",
    "zk_table",
    "zks_table",
]
