"""Elementary indicators: metric value -> [0, 100] score -> acceptability level."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .metrics import METRIC_FOR_ATTRIBUTE, MeasureSet


class AcceptabilityLevel(enum.Enum):
    UNSATISFACTORY = "Unsatisfactory"
    MARGINAL = "Marginal"
    SATISFACTORY = "Satisfactory"

    @property
    def range(self) -> tuple[float, float]:
        return _LEVEL_RANGES[self]

    @property
    def rank(self) -> int:
        return list(AcceptabilityLevel).index(self)

    def __str__(self):
        return self.value


# Unsatisfactory is closed at both ends; the others are open below.
_LEVEL_RANGES = {
    AcceptabilityLevel.UNSATISFACTORY: (0.0, 60.0),
    AcceptabilityLevel.MARGINAL: (60.0, 85.0),
    AcceptabilityLevel.SATISFACTORY: (85.0, 100.0),
}


def classify(score: float) -> AcceptabilityLevel:
    if not 0 <= score <= 100:
        raise DomainError(f"score {score!r} is outside [0, 100]")
    if score <= 60:
        return AcceptabilityLevel.UNSATISFACTORY
    if score <= 85:
        return AcceptabilityLevel.MARGINAL
    return AcceptabilityLevel.SATISFACTORY


@dataclass(frozen=True)
class Segment:
    """One piece of a piecewise function: ``slope*x + intercept`` on an interval."""

    lo: float
    hi: float
    lo_closed: bool
    hi_closed: bool
    slope: float
    intercept: float

    def contains(self, x) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    def __call__(self, x):
        return self.slope * x + self.intercept


@dataclass(frozen=True)
class ElementaryFunctionSpec:
    kind: str  # identity | piecewise_linear | step
    pieces: tuple[Segment, ...] = ()
    lo: float = 0.0
    hi: float = 100.0
    integer_domain: bool = False

    def in_domain(self, x) -> bool:
        if isinstance(x, bool) or not isinstance(x, (int, float, Fraction)):
            return False
        if isinstance(x, float) and math.isnan(x):
            return False
        if self.integer_domain and x != int(x):
            return False
        return self.lo <= x <= self.hi

    def problems(self) -> list[str]:
        """Coverage, overlap and continuity checks over the declared domain."""
        if self.kind == "identity":
            return []
        out = []
        ps = self.pieces
        if not ps:
            return ["no pieces"]
        if self.integer_domain:
            last = max(p.lo for p in ps) + 2
            for n in range(int(self.lo), int(min(self.hi, last)) + 1):
                hits = sum(p.contains(n) for p in ps)
                if hits != 1:
                    out.append(f"{n} is covered by {hits} pieces")
            return out
        if ps[0].lo != self.lo or not ps[0].lo_closed:
            out.append("domain lower bound not covered")
        if ps[-1].hi != self.hi or not (ps[-1].hi_closed or math.isinf(self.hi)):
            out.append("domain upper bound not covered")
        for a, b in zip(ps, ps[1:]):
            if a.hi != b.lo:
                out.append(f"gap or overlap between {a.hi} and {b.lo}")
            elif a.hi_closed == b.lo_closed:
                out.append(f"breakpoint {a.hi} is {'claimed twice' if a.hi_closed else 'not covered'}")
            if self.kind == "piecewise_linear" and abs(a(a.hi) - b(b.lo)) > 1e-9:
                out.append(f"discontinuity at {a.hi}")
        return out


def eval_elementary(spec: ElementaryFunctionSpec, x) -> float:
    if not spec.in_domain(x):
        raise DomainError(f"{x!r} is outside the function domain [{spec.lo}, {spec.hi}]")
    if spec.kind == "identity":
        return x
    for piece in spec.pieces:
        if piece.contains(x):
            return float(piece(x))
    raise DomainError(f"no piece covers {x!r}")


def _seg(lo, hi, lo_closed, hi_closed, slope, intercept):
    return Segment(lo, hi, lo_closed, hi_closed, slope, intercept)


def _const(lo, hi, lo_closed, hi_closed, value):
    return Segment(lo, hi, lo_closed, hi_closed, 0, value)


IDENTITY = ElementaryFunctionSpec("identity")

# Tent peaking at an even non-taxonomic/taxonomic split.
TENT_BNTR = ElementaryFunctionSpec("piecewise_linear", (
    _seg(0, 10, True, False, 6, 0),
    _seg(10, 40, True, False, 5 / 6, 155 / 3),
    _seg(40, 50, True, True, 3 / 2, 25),
    _seg(50, 60, False, True, -3 / 2, 175),
    _seg(60, 90, False, True, -5 / 6, 135),
    _seg(90, 100, False, True, -6, 600),
))

STEP_STFO = ElementaryFunctionSpec("step", (
    _const(0, 70, True, False, 0),
    _const(70, 95, True, False, 60),
    _const(95, 100, True, False, 85),
    _const(100, 100, True, True, 100),
))

STEP_SNTRFO = ElementaryFunctionSpec("step", (
    _const(0, 20, True, False, 0),
    _const(20, 70, True, False, 20),
    _const(70, 95, True, False, 60),
    _const(95, 100, True, False, 85),
    _const(100, 100, True, True, 100),
))

STEP_UISG = ElementaryFunctionSpec("step", (
    _const(0, 0, True, True, 0),
    _const(1, 1, True, True, 75),
    _const(2, math.inf, True, True, 100),
), lo=0, hi=math.inf, integer_domain=True)


def tent_bntr(x: float) -> float:
    return eval_elementary(TENT_BNTR, x)


def step_stfo(x: float) -> float:
    return eval_elementary(STEP_STFO, x)


def step_sntrfo(x: float) -> float:
    return eval_elementary(STEP_SNTRFO, x)


def step_uisg(n: int) -> float:
    return eval_elementary(STEP_UISG, n)


@dataclass(frozen=True)
class Indicator:
    name: str
    attribute_id: str
    spec: ElementaryFunctionSpec

    @property
    def metric(self) -> str:
        return METRIC_FOR_ATTRIBUTE[self.attribute_id]

    def __call__(self, x) -> float:
        return eval_elementary(self.spec, x)


INDICATORS = {ind.name: ind for ind in [
    Indicator("PL_DTA", "1.1.1", IDENTITY),
    Indicator("PL_DPA", "1.1.2", IDENTITY),
    Indicator("PL_FSAA", "1.1.3", IDENTITY),
    Indicator("PL_DNTRA", "1.1.4.1", IDENTITY),
    Indicator("PL_BNTRRA", "1.1.4.2", TENT_BNTR),
    Indicator("P_LRTFO", "1.2.1.1", STEP_STFO),
    Indicator("P_LRNRFO", "1.2.1.2", STEP_SNTRFO),
    Indicator("P_LUISG", "1.2.2", STEP_UISG),
]}

# Spellings seen in published result tables.
ALIASES = {"PL_BNTTRA": "PL_BNTRRA", "P_LRTRFO": "P_LRTFO", "P_LRNRTRFO": "P_LRNRFO"}


def get_indicator(name: str) -> Indicator:
    try:
        return INDICATORS[ALIASES.get(name, name)]
    except KeyError:
        raise KeyError(f"unknown indicator {name!r}; valid names: {', '.join(INDICATORS)}") from None


@dataclass(frozen=True)
class ElementaryResult:
    attribute_id: str
    indicator_name: str
    input: float
    score: float
    level: AcceptabilityLevel


def evaluate_attributes(m: MeasureSet) -> list[ElementaryResult]:
    results = []
    for ind in INDICATORS.values():
        x = m.value(ind.metric)
        score = ind(x)
        results.append(ElementaryResult(ind.attribute_id, ind.name, x, score, classify(score)))
    return results


def sample(name: str, step: float = 0.5) -> list[tuple[float, float]]:
    """(x, score) pairs over the indicator's domain; counts are sampled 0..10."""
    ind = get_indicator(name)
    if ind.spec.integer_domain:
        return [(n, ind(n)) for n in range(0, 11)]
    n = int(round((ind.spec.hi - ind.spec.lo) / step))
    return [(x, ind(x)) for x in (ind.spec.lo + i * step for i in range(n + 1))]
