"""The ``polynomials`` command.

Collects chi, chi-bar, beta, the CSM degree polynomial with its h-vector
check, the Euler characteristic of the complement and, on the supported
families, the g-polynomial. Degrees come from the divisor method, checked
against deletion-contraction; the displacement rule is exercised by the
``hvector`` verification suite.
"""

import logging
from typing import List

from matroid_csm.exceptions import UnsupportedFamilyError
from matroid_csm.models.schemas import PolynomialReport
from matroid_csm.services.flat_lattice import (
    beta,
    characteristic_polynomial,
    reduced_characteristic_polynomial,
)
from matroid_csm.services.invariants import (
    csm_degree_polynomial,
    euler_char_complement,
    g_polynomial,
)
from matroid_csm.services.matroid import Matroid
from matroid_csm.services.polynomial import IntPolynomial

logger = logging.getLogger(__name__)


def _coefficients(polynomial: IntPolynomial) -> List[int]:
    return list(polynomial.coefficients)


def run_polynomials(name: str, matroid: Matroid) -> PolynomialReport:
    """Build the polynomial report of one matroid.

    Fields that are undefined for the matroid (rank 0, loops, a family
    without a g-polynomial formula) are left as ``None``.
    """
    report = PolynomialReport(
        matroid=name,
        size=matroid.size,
        rank=matroid.full_rank,
        charpoly=_coefficients(characteristic_polynomial(matroid)),
        beta=beta(matroid),
    )
    if matroid.full_rank == 0:
        return report

    reduced = reduced_characteristic_polynomial(matroid)
    degrees = csm_degree_polynomial(matroid, method="divisor")
    report.reduced_charpoly = _coefficients(reduced)
    report.degree_polynomial = _coefficients(degrees)
    report.hvector_holds = degrees == reduced.shift(1)
    if not matroid.has_loops:
        report.euler_characteristic = euler_char_complement(matroid)
    try:
        report.gpoly = _coefficients(g_polynomial(matroid))
    except UnsupportedFamilyError as exc:
        logger.debug("No g-polynomial: %s", exc)
    return report


def format_polynomial_table(report: PolynomialReport) -> str:
    def show(coefficients) -> str:
        if coefficients is None:
            return "-"
        return IntPolynomial(tuple(coefficients)).format()

    rows = [
        ("matroid", report.matroid),
        ("size", str(report.size)),
        ("rank", str(report.rank)),
        ("charpoly", show(report.charpoly)),
        ("reduced charpoly", show(report.reduced_charpoly)),
        ("beta", str(report.beta)),
        ("degree polynomial", show(report.degree_polynomial)),
        ("h-vector identity", "-" if report.hvector_holds is None else str(report.hvector_holds)),
        ("euler characteristic", "-" if report.euler_characteristic is None else str(report.euler_characteristic)),
        ("g-polynomial", show(report.gpoly)),
    ]
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label:<{width}}  {value}" for label, value in rows)
