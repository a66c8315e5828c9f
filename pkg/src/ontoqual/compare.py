"""End-to-end evaluation, multi-entity comparison and before/after re-evaluation."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import InvalidInventoryError, OntoQualError, PairingError
from .indicators import AcceptabilityLevel, ElementaryResult, evaluate_attributes
from .inventory import MeasurementBasis, OntologyInventory, derive_basis, validate
from .lsp import EvaluationResult, RequirementsModel, evaluate_tree
from .metrics import MeasureSet, measure

WINNER_TOLERANCE = 1e-9


@dataclass(frozen=True)
class EntityEvaluation:
    """Everything computed for one entity, from counts to the scored tree."""

    inventory: OntologyInventory
    basis: MeasurementBasis
    measures: MeasureSet
    elementary: tuple[ElementaryResult, ...]
    result: EvaluationResult

    @property
    def entity_name(self) -> str:
        return self.inventory.entity_name

    @property
    def global_value(self) -> float:
        return self.result.value


class EntityError(OntoQualError):
    """Wraps a failure with the name of the entity being evaluated."""

    def __init__(self, entity_name, cause):
        self.entity_name = entity_name
        self.cause = cause
        super().__init__(f"{entity_name}: {cause}")


def evaluate_inventory(model: RequirementsModel, inv: OntologyInventory) -> EntityEvaluation:
    report = validate(inv)
    if not report.ok:
        raise InvalidInventoryError(inv.entity_name, report.violations)
    basis = derive_basis(inv)
    measures = measure(basis)
    elementary = tuple(evaluate_attributes(measures))
    return EntityEvaluation(inv, basis, measures, elementary, evaluate_tree(model, elementary))


@dataclass
class ComparisonReport:
    model_id: str
    entities: list[tuple[str, EvaluationResult]]
    ranking: list[str]
    per_node_winner: dict[str, list[str]]
    evaluations: list[EntityEvaluation] = field(default_factory=list, repr=False)

    def global_values(self) -> dict[str, float]:
        return {name: result.value for name, result in self.entities}


def _tagged(model, inv):
    try:
        return evaluate_inventory(model, inv)
    except OntoQualError as exc:
        raise EntityError(inv.entity_name, exc) from exc


def compare(model: RequirementsModel, inventories: list[OntologyInventory]) -> ComparisonReport:
    if len(inventories) < 2:
        raise ValueError("a comparison needs at least two inventories")
    with ThreadPoolExecutor() as pool:
        evaluations = list(pool.map(lambda inv: _tagged(model, inv), inventories))

    names = [inv.entity_name for inv in inventories]
    if len(set(names)) < len(names):
        names = [inv.label for inv in inventories]
    if len(set(names)) < len(names):
        raise ValueError("inventories must differ by entity name or version")
    entities = [(name, ev.result) for name, ev in zip(names, evaluations)]
    ranking = [name for name, result in sorted(entities, key=lambda e: (-e[1].value, e[0]))]

    winners = {}
    for node in model.root.walk():
        values = {name: result.find(node.id).value for name, result in entities}
        top = max(values.values())
        winners[node.id] = sorted(name for name, v in values.items() if top - v <= WINNER_TOLERANCE)
    return ComparisonReport(model.model_id, entities, ranking, winners, evaluations)


def weaknesses(result: EvaluationResult) -> list[tuple[str, float, AcceptabilityLevel]]:
    """Attribute leaves below Satisfactory, worst first."""
    found = [(n.node_id, n.value, n.level) for n in result.walk()
             if not n.children and n.level is not AcceptabilityLevel.SATISFACTORY]
    return sorted(found, key=lambda t: (t[1], t[2].rank, t[0]))


@dataclass
class ImprovementReport:
    entity_name: str
    before: EvaluationResult
    after: EvaluationResult
    deltas: dict[str, float]
    addressed_attributes: list[str]
    before_version: str = ""
    after_version: str = ""


def _same_topology(a: EvaluationResult, b: EvaluationResult) -> bool:
    return a.node_id == b.node_id and len(a.children) == len(b.children) and all(
        _same_topology(x, y) for x, y in zip(a.children, b.children))


def reevaluate(model: RequirementsModel, before: OntologyInventory,
               after: OntologyInventory) -> ImprovementReport:
    if before.entity_name != after.entity_name:
        raise PairingError(
            f"cannot pair '{before.entity_name}' with '{after.entity_name}': entity names differ")
    old = _tagged(model, before).result
    new = _tagged(model, after).result
    if not _same_topology(old, new):
        raise PairingError("before and after results do not share a tree topology")
    deltas = {a.node_id: b.value - a.value for a, b in zip(old.walk(), new.walk())}
    addressed = [a.node_id for a, b in zip(old.walk(), new.walk())
                 if not a.children and b.level.rank > a.level.rank]
    return ImprovementReport(before.entity_name, old, new, deltas, addressed,
                             before.version, after.version)
