"""Logic Scoring of Preference aggregation over a requirements tree.

Characteristics aggregate their children with a weighted power mean whose
exponent is picked from the generalized conjunction/disjunction operator
table by operator label and number of inputs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .errors import BindingError, ContractError, ModelError
from .indicators import ALIASES, INDICATORS, AcceptabilityLevel, ElementaryResult, classify, get_indicator

LABELS = ("D", "D++", "D+", "D+-", "DA", "D-+", "D-", "D--", "A",
          "C--", "C-", "C-+", "CA", "C+-", "C+", "C++", "C")
LIMITS = {"C": -math.inf, "D": math.inf}
ARITIES = (2, 3, 4, 5)

WEIGHT_TOLERANCE = 1e-9
GEOMETRIC_BAND = 1e-6
LOG_SPACE_BELOW = 1e-3


def _load_table(text: str) -> dict[str, dict[int, float]]:
    raw = json.loads(text)
    table = {}
    for label, row in raw.items():
        if label in LIMITS:
            continue
        if label not in LABELS:
            raise ModelError(f"unknown operator label {label!r}")
        table[label] = {int(n): float(r) for n, r in row.items()}
    return table


DEFAULT_EXPONENTS = _load_table(
    resources.files("ontoqual.data").joinpath("operators.json").read_text(encoding="utf-8"))


def exponent_for(label: str, arity: int, table: Mapping[str, Mapping[int, float]] | None = None) -> float:
    """Exponent of operator ``label`` for ``arity`` inputs.

    The limit operators return ``-inf`` (C, min) and ``+inf`` (D, max), which
    :func:`weighted_power_mean` treats as its min/max branches. Arities outside
    the tabulated range use the nearest tabulated arity.
    """
    if label in LIMITS:
        return LIMITS[label]
    if label == "A":
        return 1.0
    row = (table or DEFAULT_EXPONENTS).get(label)
    if row is None:
        row = DEFAULT_EXPONENTS.get(label)
    if row is None:
        raise ModelError(f"unknown operator label {label!r}")
    if arity in row:
        return row[arity]
    nearest = min(row, key=lambda n: (abs(n - arity), n))
    return row[nearest]


def weighted_power_mean(values: Sequence[float], weights: Sequence[float], r: float) -> float:
    if len(values) != len(weights):
        raise ContractError(f"{len(values)} values but {len(weights)} weights")
    if len(values) < 2:
        raise ContractError("at least two inputs are required")
    if any(w <= 0 for w in weights):
        raise ContractError("weights must be positive")
    total = math.fsum(weights)
    if abs(total - 1) > WEIGHT_TOLERANCE:
        raise ContractError(f"weights sum to {total!r}, not 1")
    if any(not 0 <= x <= 100 for x in values):
        raise ContractError("values must lie in [0, 100]")
    weights = [w / total for w in weights]

    if r == math.inf:
        return float(max(values))
    if r == -math.inf:
        return float(min(values))
    if r < 0 and min(values) == 0:
        return 0.0
    if abs(r) < GEOMETRIC_BAND:
        if min(values) == 0:
            return 0.0
        return math.exp(math.fsum(w * math.log(x) for w, x in zip(weights, values)))
    if r < 0 and min(values) < LOG_SPACE_BELOW:
        return _log_space_mean(values, weights, r)
    try:
        total = math.fsum(w * x ** r for w, x in zip(weights, values))
    except OverflowError:
        total = math.inf
    if min(values) > 0 and (total == 0 or math.isinf(total)):
        return _log_space_mean(values, weights, r)
    mean = total ** (1 / r)
    # Rounding can push the mean a few ulps past its inputs.
    return min(max(mean, min(values)), max(values))


def _log_space_mean(values, weights, r):
    terms = [math.log(w) + r * math.log(x) for w, x in zip(weights, values)]
    top = max(terms)
    lse = top + math.log(math.fsum(math.exp(t - top) for t in terms))
    return math.exp(lse / r)


@dataclass(frozen=True)
class RequirementsNode:
    id: str
    name: str
    kind: str  # attribute | characteristic
    weight: float = 1.0
    operator: str | None = None
    children: tuple["RequirementsNode", ...] = ()
    indicator: str | None = None

    @property
    def is_attribute(self) -> bool:
        return self.kind == "attribute"

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def leaves(self):
        return [n for n in self.walk() if n.is_attribute]


@dataclass(frozen=True)
class RequirementsModel:
    model_id: str
    root: RequirementsNode
    exponents: Mapping[str, Mapping[int, float]] = field(default_factory=lambda: DEFAULT_EXPONENTS)

    def exponent(self, node: RequirementsNode) -> float:
        return exponent_for(node.operator, len(node.children), self.exponents)


def _node_from_dict(d, path="root") -> RequirementsNode:
    if not isinstance(d, dict):
        raise ModelError(f"{path}: expected an object")
    for key in ("id", "name", "kind"):
        if not isinstance(d.get(key), str):
            raise ModelError(f"{path}: missing or non-text field {key!r}")
    kind = d["kind"]
    weight = d.get("weight", 1.0)
    if isinstance(weight, bool) or not isinstance(weight, (int, float)):
        raise ModelError(f"{path}.weight: expected a number")
    if kind == "attribute":
        if d.get("children"):
            raise ModelError(f"{path}: attribute {d['id']} cannot have children")
        return RequirementsNode(d["id"], d["name"], kind, float(weight), indicator=d.get("indicator"))
    if kind == "characteristic":
        children = tuple(_node_from_dict(c, f"{path}.children[{i}]")
                         for i, c in enumerate(d.get("children") or []))
        return RequirementsNode(d["id"], d["name"], kind, float(weight), d.get("operator"), children)
    raise ModelError(f"{path}: unknown node kind {kind!r}")


def check_tree(root: RequirementsNode) -> list[str]:
    problems = []
    ids = set()
    for node in root.walk():
        if node.id in ids:
            problems.append(f"duplicate node id {node.id}")
        ids.add(node.id)
        if not 0 < node.weight <= 1:
            problems.append(f"{node.id}: weight {node.weight} outside (0, 1]")
        if node.is_attribute:
            if node.indicator is not None and node.indicator not in INDICATORS \
                    and node.indicator not in ALIASES:
                problems.append(f"{node.id}: unknown indicator {node.indicator}")
            continue
        if node.operator not in LABELS:
            problems.append(f"{node.id}: unknown operator {node.operator!r}")
        if len(node.children) < 2:
            problems.append(f"{node.id}: a characteristic needs at least two children")
        total = math.fsum(c.weight for c in node.children)
        if node.children and abs(total - 1) > WEIGHT_TOLERANCE:
            problems.append(f"{node.id}: child weights sum to {total:.12g}")
    if root.weight != 1:
        problems.append("root weight must be 1")
    return problems


def model_from_dict(doc, model_id="custom") -> RequirementsModel:
    exponents = dict(DEFAULT_EXPONENTS)
    if isinstance(doc, dict) and "exponents" in doc:
        overrides = _load_table(json.dumps(doc["exponents"]))
        exponents.update({k: {**exponents.get(k, {}), **v} for k, v in overrides.items()})
        doc = {k: v for k, v in doc.items() if k != "exponents"}
    root = _node_from_dict(doc)
    problems = check_tree(root)
    if problems:
        raise ModelError("invalid requirements model:\n" + "\n".join(f"  - {p}" for p in problems))
    return RequirementsModel(model_id, root, exponents)


def load_model(path) -> RequirementsModel:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return model_from_dict(doc, path.stem)


def default_model() -> RequirementsModel:
    text = resources.files("ontoqual.data").joinpath("default_model.json").read_text(encoding="utf-8")
    return model_from_dict(json.loads(text), "default")


@dataclass(frozen=True)
class EvaluationResult:
    node_id: str
    name: str
    value: float
    level: AcceptabilityLevel
    children: tuple["EvaluationResult", ...] = ()
    kind: str = "attribute"
    weight: float = 1.0
    operator: str | None = None

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def find(self, node_id: str) -> "EvaluationResult":
        for node in self.walk():
            if node.node_id == node_id:
                return node
        raise KeyError(node_id)

    def values(self) -> dict[str, float]:
        return {n.node_id: n.value for n in self.walk()}


def evaluate_tree(model: RequirementsModel | RequirementsNode,
                  elems: Sequence[ElementaryResult]) -> EvaluationResult:
    if isinstance(model, RequirementsNode):
        model = RequirementsModel("custom", model)
    by_id: dict[str, ElementaryResult] = {}
    duplicates = set()
    for e in elems:
        if e.attribute_id in by_id:
            duplicates.add(e.attribute_id)
        by_id[e.attribute_id] = e
    leaf_ids = {leaf.id for leaf in model.root.leaves()}
    if duplicates & leaf_ids:
        raise BindingError(f"duplicate elementary results for {sorted(duplicates & leaf_ids)}")
    missing = sorted(leaf_ids - by_id.keys())
    if missing:
        raise BindingError(f"no elementary result for attributes {missing}")

    def visit(node: RequirementsNode) -> EvaluationResult:
        if node.is_attribute:
            e = by_id[node.id]
            if node.indicator and get_indicator(node.indicator).name != get_indicator(e.indicator_name).name:
                raise BindingError(
                    f"attribute {node.id} expects indicator {node.indicator}, got {e.indicator_name}")
            return EvaluationResult(node.id, node.name, e.score, classify(e.score),
                                    weight=node.weight)
        kids = tuple(visit(c) for c in node.children)
        value = weighted_power_mean([k.value for k in kids], [c.weight for c in node.children],
                                    model.exponent(node))
        return EvaluationResult(node.id, node.name, value, classify(value), kids,
                                "characteristic", node.weight, node.operator)

    return visit(model.root)
