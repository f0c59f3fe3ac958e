"""Closed-form bounds on gamma_rt for cubic graphs and the family P(ck, k).

Every formula is evaluated on Fractions and rounded once at the end: lower bounds round up,
and upper bounds stated without explicit rounding are rounded up as well. Strict lower
bounds ("ck < gamma") become ck + 1.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from rainbowforge.errors import ParameterDomainError
from rainbowforge.models.assignment import MAX_COLORS
from rainbowforge.models.bounds import BoundMode, BoundReport
from rainbowforge.models.graph import PetersenParams

logger = logging.getLogger(__name__)

CUBIC_DEGREE = 3
EXTREMAL_COLORS = (3, 4, 5)
DEFAULT_T_MAX = 7


def generic_lower_bound(n_vertices: int, degree: int, t: int) -> int:
    """ceil(t |V| / 2d) for t < 2d, and |V| once t >= 2d."""
    if degree < 1:
        raise ParameterDomainError(f"generic lower bound needs degree >= 1, got {degree}")
    if t < 1:
        raise ParameterDomainError(f"generic lower bound needs t >= 1, got {t}")
    if t >= 2 * degree:
        return n_vertices
    return math.ceil(Fraction(t * n_vertices, 2 * degree))


def is_characterized_extremal(n: int, k: int, t: int) -> bool:
    """Whether P(n, k) attains t n / 3 for t in {3, 4, 5}."""
    if t not in EXTREMAL_COLORS:
        raise ParameterDomainError(
            f"extremal characterization needs t in {{3, 4, 5}}, got t={t}"
        )
    PetersenParams(n=n, k=k)
    return n % 6 == 0 and k % 6 in (1, 5)


def characterization_r1(n: int, k: int) -> bool:
    """gamma(P(n, k)) = n / 2 exactly when n = 0 (mod 4) and k is odd."""
    PetersenParams(n=n, k=k)
    return n % 4 == 0 and k % 2 == 1


def characterization_r2(c: int, k: int) -> bool:
    """The 2-rainbow characterization predicate for P(ck, k), as stated."""
    _check_family(c, k)
    return c % 5 == 0 and k % 10 in (2, 8)


def known_exact_pn1(n: int, t: int) -> int | None:
    """Literature values of gamma_rt(P(n, 1)), or None where none is known."""
    PetersenParams(n=n, k=1)
    if t == 2 and n >= 5:
        return n
    if t == 3 and n >= 6:
        alpha = {0: 0, 4: 2}.get(n % 6, 1)
        return n + alpha
    if t >= 2 * CUBIC_DEGREE:
        return 2 * n
    return None


def _check_family(c: int, k: int, t: int | None = None) -> None:
    if c < 3:
        raise ParameterDomainError(f"P(ck,k) bounds need c >= 3, got c={c}")
    if k < 1:
        raise ParameterDomainError(f"P(ck,k) bounds need k >= 1, got k={k}")
    if t is not None and not 1 <= t <= MAX_COLORS:
        raise ParameterDomainError(f"t must lie in 1..{MAX_COLORS}, got t={t}")


def _r3_case(c: int, k: int) -> tuple[Fraction, str]:
    """Singleton 3-rainbow upper bound of P(ck, k) from the case tables."""
    k_mod = k % 6
    if c % 6 == 0:
        if k_mod in (1, 5):
            value = Fraction(c * k)
        elif k % 2 == 0:
            value = c * (k + Fraction(1, 2))
        else:
            value = Fraction(c * (k + 1))
        return value, "MainTheoremOLD"
    if c % 2 == 1:
        if k_mod in (1, 5):
            value = Fraction(c * k + math.ceil(Fraction(k, 2)))
        elif k % 2 == 0:
            value = c * k + c // 2 + Fraction(k, 2)
        else:
            value = Fraction(c * (k + 1) + math.ceil(Fraction(k - 2, 2)))
        return value, "MainTheorem2OLD"
    if k_mod in (1, 5):
        value = Fraction(c * k + k + 1)
    elif k % 2 == 0:
        value = c * k + Fraction(c, 2) + k
    else:
        value = Fraction(c * k + c + k - 2)
    return value, "MainTheorem3OLD"


def _detail_coefficient(c: int, k: int, t: int, mode: BoundMode) -> Fraction:
    # the 4-rainbow rows for c = 0 (mod 6), k even or k = 3 (mod 6) are printed with 5/3
    if mode is BoundMode.AS_PRINTED and t == 4 and c % 6 == 0 and k % 6 not in (1, 5):
        return Fraction(5, 3)
    return Fraction(t, 3)


@dataclass
class _Draft:
    lower: int
    upper: int
    exact: int | None = None
    singleton_upper: int | None = None
    sources: list[str] = field(default_factory=list)
    discrepancy: str | None = None
    alternative_values: list[int] = field(default_factory=list)

    def cite(self, *labels: str) -> None:
        for label in labels:
            if label not in self.sources:
                self.sources.append(label)

    def pin(self, value: int) -> None:
        self.exact = self.lower = self.upper = value


def _domination(c: int, k: int) -> _Draft:
    n = c * k
    draft = _Draft(lower=0, upper=math.ceil(Fraction((c + 1) * k, 2) + 1))
    draft.cite("MainTheorem1")
    half = Fraction(n, 2)
    if characterization_r1(n, k):
        draft.cite("Ebrahimi")
        draft.pin(n // 2)
    elif half.denominator == 1:
        # n / 2 is attained only in the characterized case
        draft.cite("Ebrahimi")
        draft.lower = n // 2 + 1
    else:
        draft.lower = math.ceil(half)
    return draft


def _two_rainbow(c: int, k: int) -> _Draft:
    n = c * k
    draft = _Draft(
        lower=math.ceil(Fraction(4, 5) * n),
        upper=math.ceil(Fraction(4, 5) * (c + 1) * (k + 1) + 1),
    )
    draft.cite("MainTheorem2")
    if k == 1 and (exact := known_exact_pn1(n, 2)) is not None:
        draft.cite("KnownPn1R2")
        draft.pin(exact)
    if characterization_r2(c, k):
        draft.cite("R2Characterization")
        draft.discrepancy = (
            f"characterization states gamma_r2 = ck = {n}, "
            f"equality at the lower bound would give 4ck/5 = {math.ceil(Fraction(4, 5) * n)}"
        )
        draft.alternative_values = [n, math.ceil(Fraction(4, 5) * n)]
    return draft


def _three_rainbow(c: int, k: int) -> _Draft:
    n = c * k
    case_value, case_label = _r3_case(c, k)
    general = (c + 1) * (k + 1) - 3
    singleton = math.ceil(case_value)
    draft = _Draft(lower=n + 1, upper=min(singleton, general), singleton_upper=singleton)
    draft.cite(case_label, "MainTheorem3")
    if c % 6 == 0 and k % 6 in (1, 5):
        draft.cite("R3Characterization", "MainTheoremX1")
        draft.pin(n)
    else:
        draft.cite("R3Characterization")
    if k == 1 and (exact := known_exact_pn1(n, 3)) is not None:
        draft.cite("KnownPn1R3")
        draft.pin(exact)
    return draft


def _four_five_rainbow(c: int, k: int, t: int, mode: BoundMode) -> _Draft:
    """The lower end stays at ceil(t n / 3) off the characterized cases.

    gamma_rt exceeds t n / 3 strictly there, but unlike t = 3 the strict inequality is
    not turned into t n / 3 + 1.
    """
    n = c * k
    coefficient = Fraction(t, 3)
    general = math.ceil(coefficient * (c + 1) * (k + 1) - t)
    case_value, _ = _r3_case(c, k)
    detail = math.ceil(_detail_coefficient(c, k, t, mode) * case_value)
    draft = _Draft(
        lower=generic_lower_bound(2 * n, CUBIC_DEGREE, t), upper=min(general, detail)
    )
    draft.cite("LBKuzman", "MainTheoremX1", f"MainTheorem{t}", f"MainTheoremDETAILS{t}")
    if is_characterized_extremal(n, k, t):
        draft.cite("MainTheoremX2novi")
        draft.pin(t * n // 3)
    return draft


def bounds_pckk(c: int, k: int, t: int, mode: BoundMode = BoundMode.CORRECTED) -> BoundReport:
    """Bounds on gamma_rt(P(ck, k)) with the theorems they come from."""
    _check_family(c, k, t)
    n = c * k
    PetersenParams(n=n, k=k)
    if t == 1:
        draft = _domination(c, k)
    elif t == 2:
        draft = _two_rainbow(c, k)
    elif t == 3:
        draft = _three_rainbow(c, k)
    elif t in (4, 5):
        draft = _four_five_rainbow(c, k, t, mode)
    else:
        draft = _Draft(lower=0, upper=0)
        draft.cite("LBKuzman")
        draft.pin(generic_lower_bound(2 * n, CUBIC_DEGREE, t))

    return BoundReport(
        c=c,
        k=k,
        n=n,
        t=t,
        lower=draft.lower,
        upper=draft.upper,
        exact=draft.exact,
        singleton_upper=draft.singleton_upper,
        sources=draft.sources,
        mode=mode,
        discrepancy=draft.discrepancy,
        alternative_values=draft.alternative_values,
    )


def monotone_envelope(
    c: int, k: int, t_max: int = DEFAULT_T_MAX, mode: BoundMode = BoundMode.CORRECTED
) -> list[BoundReport]:
    """Reports for t = 1..t_max tightened across t.

    gamma_rt <= gamma_r(t+1) carries lower bounds up and upper bounds down; |V| caps every
    upper bound. The result is nondecreasing in t on both ends.
    """
    _check_family(c, k, t_max)
    raw = [bounds_pckk(c, k, t, mode) for t in range(1, t_max + 1)]
    n_vertices = 2 * c * k
    lowers = [r.lower for r in raw]
    uppers = [r.upper for r in raw]
    for i in range(1, len(lowers)):
        lowers[i] = max(lowers[i], lowers[i - 1])
    capped = [min(u, n_vertices) for u in uppers]
    for i in range(len(capped) - 2, -1, -1):
        capped[i] = min(capped[i], capped[i + 1])

    reports = []
    for i, report in enumerate(raw):
        sources = list(report.sources)
        if lowers[i] > report.lower or capped[i] < min(report.upper, n_vertices):
            sources.append("RainbowMonotonicity")
        if n_vertices < report.upper and capped[i] == n_vertices:
            sources.append("TrivialUpperBound")
        exact = report.exact
        if exact is None and lowers[i] == capped[i]:
            exact = lowers[i]
        update = {"lower": lowers[i], "upper": capped[i], "exact": exact, "sources": sources}
        reports.append(BoundReport.model_validate(report.model_dump() | update))
    logger.debug("envelope for c=%d k=%d: %s", c, k, [(r.lower, r.upper) for r in reports])
    return reports
