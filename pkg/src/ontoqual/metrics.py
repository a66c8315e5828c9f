"""Indirect metrics computed from the direct counts.

Values are kept at full float precision; rounding happens only when a
report is rendered.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError, EmptyOntologyError, NoRelationshipsError
from .inventory import MeasurementBasis

# Attribute id -> MeasureSet field holding the metric that quantifies it.
METRIC_FOR_ATTRIBUTE = {
    "1.1.1": "pct_dt",
    "1.1.2": "pct_dp",
    "1.1.3": "pct_sa",
    "1.1.4.1": "pct_dntr",
    "1.1.4.2": "pct_bntr",
    "1.2.1.1": "pct_stfo",
    "1.2.1.2": "pct_sntrfo",
    "1.2.2": "uisg",
}

METRIC_LABELS = {
    "pct_dt": "%DT",
    "pct_dp": "%DP",
    "pct_sa": "%SA",
    "pct_dntr": "%DNTR",
    "pct_bntr": "%BNTR",
    "pct_stfo": "%STFO",
    "pct_sntrfo": "%SNTRFO",
    "uisg": "#UISG",
}


@dataclass(frozen=True)
class MeasureSet:
    basis: MeasurementBasis
    pct_dt: float
    pct_dp: float
    pct_sa: float
    pct_dntr: float
    pct_bntr: float
    pct_stfo: float
    pct_sntrfo: float
    uisg: int

    def value(self, metric: str):
        return getattr(self, metric)


def _check_counts(numerator, denominator):
    if numerator < 0 or denominator < 0:
        raise ContractError(f"counts must be non-negative, got {numerator}/{denominator}")
    if numerator > denominator:
        raise ContractError(f"numerator {numerator} exceeds denominator {denominator}")


def guarded_ratio(numerator: int, denominator: int) -> float:
    """Percentage ``numerator/denominator * 100``, defined as 0 when the denominator is 0."""
    _check_counts(numerator, denominator)
    if denominator == 0:
        return 0.0
    return 100 * numerator / denominator


def pct_specialized_terms(stdfo: int, stifo: int, tt: int) -> float:
    if tt == 0:
        raise EmptyOntologyError("percentage of specialized terms is undefined for an ontology with no terms")
    if stdfo < 0 or stifo < 0:
        raise ContractError("specialized term counts must be non-negative")
    _check_counts(stdfo + stifo, tt)
    return 100 * (stdfo + stifo) / tt


def measure(basis: MeasurementBasis) -> MeasureSet:
    problems = basis.violations()
    if problems:
        raise ContractError("inconsistent measurement basis: " + "; ".join(problems))
    if basis.tt == 0:
        raise EmptyOntologyError("cannot measure an ontology with no terms")
    if basis.tr == 0:
        raise NoRelationshipsError("%BNTR is undefined for an ontology with no relationships")
    return MeasureSet(
        basis=basis,
        pct_dt=guarded_ratio(basis.dt, basis.tt),
        pct_dp=guarded_ratio(basis.dp, basis.tp),
        pct_sa=guarded_ratio(basis.sa, basis.ta),
        pct_dntr=guarded_ratio(basis.dntr, basis.tntr),
        pct_bntr=100 * basis.tntr / basis.tr,
        pct_stfo=pct_specialized_terms(basis.stdfo, basis.stifo, basis.tt),
        pct_sntrfo=guarded_ratio(basis.sntrfo, basis.tntr),
        uisg=basis.uisg,
    )
