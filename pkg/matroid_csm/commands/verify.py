"""Verification suites for the ``verify`` command.

Each suite turns the test catalog into a list of named cases. A case is a
zero-argument callable returning ``(passed, detail)``; the runner executes
the cases on a thread pool and reports them sorted by name, so the output
does not depend on scheduling.

Suites:
    balance: csm_k(M) is balanced for every catalog matroid and k.
    hvector: degree polynomial equals the reduced characteristic polynomial
        at 1 + t, with degrees from stable intersection, the divisor method
        and deletion-contraction.
    valuation: the three splits of the octahedron, the trivial subdivision
        of every catalog matroid and an optional subdivision file.
    pushforward: for every catalog matroid and non-coloop i, forgetting i
        maps csm_k(M) to csm_k(M minus i) - csm_k(M/i).
    gpoly: family-level consistency of the g-polynomial formulas.
    support: nonzero weights exactly on flags with connected loopless minors.
    beta: Möbius-sum and chi-bar(1) beta agree.
    uniform: closed form of the CSM cycles of uniform matroids.

Example:
    >>> from matroid_csm.commands.verify import run_suite
    >>> report = run_suite("balance", max_size=4)
    >>> report.passed
    True
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Callable, Dict, List, Optional, Tuple

from matroid_csm.config import get_settings
from matroid_csm.exceptions import MatroidCSMError, SpecParseError
from matroid_csm.models.schemas import CaseResult, VerificationReport
from matroid_csm.services.bergman import (
    coarse_support_check,
    csm_cycle,
    matroid_cycle,
    support_mismatches,
)
from matroid_csm.services.catalog import catalog, octahedron_subdivisions
from matroid_csm.services.flat_lattice import beta, reduced_characteristic_polynomial
from matroid_csm.services.invariants import (
    check_hvector,
    g_polynomial_rank3,
    g_polynomial_uniform,
)
from matroid_csm.services.matroid import Matroid
from matroid_csm.services.polytope import (
    Subdivision,
    check_beta_valuation,
    check_csm_valuation,
    validate_subdivision,
    valuation_defect,
)
from matroid_csm.services.tropical import (
    TropicalCycle,
    degree,
    degree_by_recursion,
    format_chain,
    is_balanced,
    pushforward_forget,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, str]
Case = Tuple[str, Callable[[], Outcome]]


def _dimensions(matroid: Matroid) -> range:
    return range(matroid.full_rank)


# -- balance --------------------------------------------------------------


def _balance_case(matroid: Matroid, k: int) -> Outcome:
    result = is_balanced(csm_cycle(matroid, k))
    if result:
        return True, ""
    return False, f"not balanced at {format_chain(result.witness)}"


def balance_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    return [
        (f"{name}/k={k}", lambda m=matroid, k=k: _balance_case(m, k))
        for name, matroid in catalog(max_size).items()
        for k in _dimensions(matroid)
    ]


# -- hvector --------------------------------------------------------------


def _hvector_case(matroid: Matroid) -> Outcome:
    if not check_hvector(matroid):
        return False, "degree polynomial differs from chi-bar(1 + t)"
    for k in _dimensions(matroid):
        by_divisor = degree(csm_cycle(matroid, k), method="divisor")
        if by_divisor != degree_by_recursion(matroid, k):
            return False, f"divisor degree of csm_{k} is {by_divisor}"
    return True, ""


def hvector_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    return [
        (name, lambda m=matroid: _hvector_case(m))
        for name, matroid in catalog(max_size).items()
    ]


# -- valuation ------------------------------------------------------------


def _valuation_case(subdivision: Subdivision) -> Outcome:
    check = validate_subdivision(subdivision)
    if not check:
        return False, f"invalid subdivision ({check.clause}): {check.detail}"
    for k in _dimensions(subdivision.parent):
        if not check_csm_valuation(subdivision, k):
            defect = valuation_defect(subdivision, k)
            return False, f"csm_{k} valuation defect on {len(defect)} cones"
    if not check_beta_valuation(subdivision):
        return False, "beta is not additive over the cells"
    return True, ""


def valuation_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    cases: List[Case] = [
        (name, lambda s=split: _valuation_case(s))
        for name, split in octahedron_subdivisions().items()
    ]
    cases.extend(
        (f"trivial:{name}", lambda m=matroid: _valuation_case(Subdivision.trivial(m)))
        for name, matroid in catalog(max_size).items()
    )
    if subdivision is not None:
        cases.append(("file", lambda: _valuation_case(subdivision)))
    return cases


# -- pushforward ----------------------------------------------------------


def _csm_or_empty(matroid: Matroid, k: int) -> TropicalCycle:
    if k > matroid.full_rank - 1:
        return TropicalCycle.empty(matroid.size, k)
    return csm_cycle(matroid, k)


def _pushforward_case(matroid: Matroid, element: int, k: int) -> Outcome:
    left = pushforward_forget(csm_cycle(matroid, k), element)
    right = _csm_or_empty(matroid.deletion(element), k) - _csm_or_empty(
        matroid.contraction(element), k
    )
    if left == right:
        return True, ""
    difference = (left - right).items()[:3]
    shown = ", ".join(f"{format_chain(c)}:{w}" for c, w in difference)
    return False, f"pushforward and deletion-contraction differ at {shown}"


def pushforward_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    targets: List[Tuple[str, Matroid, int]] = [("uniform:3,4", Matroid.uniform(3, 4), 3)]
    targets.extend(("uniform:2,4", Matroid.uniform(2, 4), i) for i in range(4))
    named = {(name, i) for name, _, i in targets}
    for name, matroid in catalog(max_size).items():
        targets.extend(
            (name, matroid, i)
            for i in range(matroid.size)
            if not matroid.is_coloop(i) and (name, i) not in named
        )
    return [
        (f"{name}/i={i}/k={k}", lambda m=matroid, i=i, k=k: _pushforward_case(m, i, k))
        for name, matroid, i in targets
        for k in _dimensions(matroid)
    ]


# -- gpoly ----------------------------------------------------------------


def _nonnegative(coefficients) -> Outcome:
    negative = [c for c in coefficients if c < 0]
    if negative:
        return False, f"negative coefficients {negative}"
    return True, ""


def _rank3_agreement_case(size: int) -> Outcome:
    uniform = g_polynomial_uniform(3, size)
    rank3 = g_polynomial_rank3(Matroid.uniform(3, size))
    if uniform != rank3:
        return False, f"uniform formula {uniform}, rank-3 formula {rank3}"
    return _nonnegative(uniform.coefficients)


def gpoly_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    cases: List[Case] = [
        (f"rank3-agree:uniform:3,{size}", lambda s=size: _rank3_agreement_case(s))
        for size in range(4, 8)
    ]
    for name, matroid in catalog(max_size).items():
        if matroid.is_uniform and matroid.full_rank < matroid.size:
            cases.append(
                (
                    f"uniform-formula:{name}",
                    lambda m=matroid: _nonnegative(
                        g_polynomial_uniform(m.full_rank, m.size).coefficients
                    ),
                )
            )
        elif matroid.full_rank == 3 and matroid.is_simple and matroid.is_connected:
            cases.append(
                (
                    f"rank3-formula:{name}",
                    lambda m=matroid: _nonnegative(g_polynomial_rank3(m).coefficients),
                )
            )
    return cases


# -- support, beta, uniform -----------------------------------------------


def _support_case(matroid: Matroid, k: int) -> Outcome:
    if coarse_support_check(matroid, k):
        return True, ""
    flags = support_mismatches(matroid, k)
    return False, f"{len(flags)} flags disagree, first {format_chain(flags[0])}"


def support_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    return [
        (f"{name}/k={k}", lambda m=matroid, k=k: _support_case(m, k))
        for name, matroid in catalog(max_size).items()
        for k in _dimensions(matroid)
    ]


def _beta_case(matroid: Matroid) -> Outcome:
    via_mobius = beta(matroid)
    rank = matroid.full_rank
    via_reduced = (-1) ** (rank - 1) * reduced_characteristic_polynomial(matroid)(1)
    if via_mobius != via_reduced:
        return False, f"Möbius sum {via_mobius}, chi-bar(1) formula {via_reduced}"
    return True, f"beta={via_mobius}"


def beta_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    return [
        (name, lambda m=matroid: _beta_case(m))
        for name, matroid in catalog(max_size).items()
    ]


def _uniform_case(rank: int, size: int, k: int) -> Outcome:
    d, n = rank - 1, size - 1
    sign = (-1) ** (d - k)
    expected = matroid_cycle(Matroid.uniform(k + 1, size)).scale(sign * comb(n - k - 1, d - k))
    actual = csm_cycle(Matroid.uniform(rank, size), k)
    if actual == expected:
        return True, ""
    return False, f"expected {sign * comb(n - k - 1, d - k)} times B(U_{{{k + 1},{size}}})"


def uniform_cases(max_size: int, subdivision: Optional[Subdivision] = None) -> List[Case]:
    return [
        (f"uniform:{rank},{size}/k={k}", lambda r=rank, s=size, k=k: _uniform_case(r, s, k))
        for size in range(2, max_size + 1)
        for rank in range(1, size)
        for k in range(rank)
    ]


SUITE_MAP: Dict[str, Callable[..., List[Case]]] = {
    "balance": balance_cases,
    "hvector": hvector_cases,
    "valuation": valuation_cases,
    "pushforward": pushforward_cases,
    "gpoly": gpoly_cases,
    "support": support_cases,
    "beta": beta_cases,
    "uniform": uniform_cases,
}


def _run_case(name: str, case: Callable[[], Outcome]) -> CaseResult:
    try:
        passed, detail = case()
    except MatroidCSMError as exc:
        logger.warning("Case %s raised %s", name, exc)
        return CaseResult(case=name, passed=False, detail=f"{type(exc).__name__}: {exc}")
    except Exception as exc:
        logger.error(f"Unexpected error in case {name}: {str(exc)}")
        raise
    return CaseResult(case=name, passed=passed, detail=detail)


def run_suite(
    suite: str,
    max_size: Optional[int] = None,
    workers: Optional[int] = None,
    subdivision: Optional[Subdivision] = None,
) -> VerificationReport:
    """Run one verification suite.

    Args:
        suite: A key of ``SUITE_MAP``.
        max_size: Largest ground set in the catalog; defaults to
            ``Settings.default_max_size``.
        workers: Thread count; defaults to ``Settings.max_workers``.
        subdivision: Extra subdivision checked by the ``valuation`` suite.

    Returns:
        VerificationReport with the cases sorted by name.

    Raises:
        SpecParseError: If the suite name is unknown.
    """
    if suite not in SUITE_MAP:
        raise SpecParseError(
            f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITE_MAP))}"
        )
    settings = get_settings()
    max_size = max_size if max_size is not None else settings.default_max_size
    workers = workers if workers is not None else settings.max_workers

    cases = SUITE_MAP[suite](max_size, subdivision)
    logger.info("Running %d cases of suite %s (max size %d)", len(cases), suite, max_size)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda item: _run_case(*item), cases))
    results.sort(key=lambda result: result.case)

    failures = sum(1 for result in results if not result.passed)
    return VerificationReport(
        suite=suite,
        max_size=max_size,
        passed=failures == 0,
        total=len(results),
        failures=failures,
        cases=results,
    )


def format_report_table(report: VerificationReport) -> str:
    lines = [
        f"suite {report.suite} (max size {report.max_size}): "
        f"{report.total - report.failures}/{report.total} passed"
    ]
    for result in report.cases:
        status = "PASS" if result.passed else "FAIL"
        suffix = f"  {result.detail}" if result.detail else ""
        lines.append(f"{status}  {result.case}{suffix}")
    return "\n".join(lines)
