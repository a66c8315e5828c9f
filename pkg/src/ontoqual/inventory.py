"""Ontology inventories: data model, JSON parsing, validation and direct counts.

An inventory is the itemized record a collector fills in for one ontology:
its terms, properties, axioms, relationships, foundational-ontology reuse
mappings and the standard glossaries it refers to. Every direct metric is a
plain filter-and-count over these lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path

import jsonschema

from .errors import InventoryParseError, SchemaVersionError

SCHEMA_VERSION = "1"

SOURCE_KINDS = ("direct", "indirect")
RELATIONSHIP_KINDS = ("is_a", "part_of", "non_taxonomic")


@dataclass(frozen=True)
class ReuseMapping:
    source_kind: str
    target: str


@dataclass(frozen=True)
class TermEntry:
    name: str
    defined: bool
    reuse: ReuseMapping | None = None


@dataclass(frozen=True)
class PropertyEntry:
    owner_term: str
    name: str
    defined: bool


@dataclass(frozen=True)
class AxiomEntry:
    identifier: str
    formally_specified: bool


@dataclass(frozen=True)
class RelationshipEntry:
    name: str
    kind: str
    source_term: str
    target_term: str
    defined: bool = False
    reused_from_fo: bool = False

    @property
    def taxonomic(self) -> bool:
        return self.kind != "non_taxonomic"


@dataclass(frozen=True)
class OntologyInventory:
    entity_name: str
    version: str
    terms: tuple[TermEntry, ...]
    properties: tuple[PropertyEntry, ...] = ()
    axioms: tuple[AxiomEntry, ...] = ()
    relationships: tuple[RelationshipEntry, ...] = ()
    glossaries: tuple[str, ...] = ()
    provenance: str = ""

    @property
    def label(self) -> str:
        return f"{self.entity_name} {self.version}".strip()


@dataclass(frozen=True)
class MeasurementBasis:
    """Direct-metric counts for one entity."""

    tt: int
    dt: int
    tp: int
    dp: int
    ta: int
    sa: int
    tntr: int
    dntr: int
    tr: int
    stdfo: int
    stifo: int
    sntrfo: int
    uisg: int

    def violations(self) -> list[str]:
        out = [f"{f.name} is negative" for f in fields(self) if getattr(self, f.name) < 0]
        for small, big in [("dt", "tt"), ("dp", "tp"), ("sa", "ta"), ("dntr", "tntr"),
                           ("tntr", "tr"), ("sntrfo", "tntr")]:
            if getattr(self, small) > getattr(self, big):
                out.append(f"{small} > {big}")
        if self.stdfo + self.stifo > self.tt:
            out.append("stdfo + stifo > tt")
        return out

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str

    def __str__(self):
        return f"[{self.code}] {self.path}: {self.message}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)


# ---------------------------------------------------------------------------
# Document schema

_REUSE = {
    "type": ["object", "null"],
    "properties": {
        "source_kind": {"enum": list(SOURCE_KINDS)},
        "target": {"type": "string"},
    },
    "required": ["source_kind", "target"],
    "additionalProperties": False,
}

INVENTORY_SCHEMA = {
    "type": "object",
    "properties": {
        "schema_version": {"type": "string"},
        "entity_name": {"type": "string"},
        "version": {"type": "string"},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "defined": {"type": "boolean"},
                    "reuse": _REUSE,
                },
                "required": ["name", "defined"],
                "additionalProperties": False,
            },
        },
        "properties": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "owner_term": {"type": "string"},
                    "name": {"type": "string"},
                    "defined": {"type": "boolean"},
                },
                "required": ["owner_term", "name", "defined"],
                "additionalProperties": False,
            },
        },
        "axioms": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string"},
                    "formally_specified": {"type": "boolean"},
                },
                "required": ["id", "formally_specified"],
                "additionalProperties": False,
            },
        },
        "relationships": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "name": {"type": "string"},
                    "kind": {"enum": list(RELATIONSHIP_KINDS)},
                    "source": {"type": "string"},
                    "target": {"type": "string"},
                    "defined": {"type": "boolean"},
                    "reused_from_fo": {"type": "boolean"},
                },
                "required": ["name", "kind", "source", "target"],
                "additionalProperties": False,
            },
        },
        "glossaries": {"type": "array", "items": {"type": "string"}},
        "provenance": {"type": "string"},
    },
    "required": ["schema_version", "entity_name", "version", "terms"],
    "additionalProperties": False,
}

_validator = jsonschema.Draft7Validator(INVENTORY_SCHEMA)


def _json_path(path) -> str:
    out = ""
    for part in path:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out or "<document>"


def parse_inventory(source: str) -> OntologyInventory:
    """Parse an inventory JSON document.

    Only structural well-formedness is checked here; call :func:`validate`
    for the semantic invariants.
    """
    if not source.strip():
        raise InventoryParseError("empty document", "line 1, column 1")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise InventoryParseError(exc.msg, f"line {exc.lineno}, column {exc.colno}") from None
    if isinstance(doc, dict) and "schema_version" in doc and doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"unsupported schema version {doc['schema_version']!r} (expected {SCHEMA_VERSION!r})",
            "schema_version")
    error = jsonschema.exceptions.best_match(_validator.iter_errors(doc))
    if error is not None:
        raise InventoryParseError(error.message, _json_path(error.absolute_path))
    return _from_document(doc)


def _from_document(doc: dict) -> OntologyInventory:
    terms = tuple(
        TermEntry(t["name"], t["defined"],
                  ReuseMapping(t["reuse"]["source_kind"], t["reuse"]["target"]) if t.get("reuse") else None)
        for t in doc["terms"])
    return OntologyInventory(
        entity_name=doc["entity_name"],
        version=doc["version"],
        terms=terms,
        properties=tuple(PropertyEntry(p["owner_term"], p["name"], p["defined"])
                         for p in doc.get("properties", [])),
        axioms=tuple(AxiomEntry(a["id"], a["formally_specified"]) for a in doc.get("axioms", [])),
        relationships=tuple(
            RelationshipEntry(r["name"], r["kind"], r["source"], r["target"],
                              r.get("defined", False), r.get("reused_from_fo", False))
            for r in doc.get("relationships", [])),
        glossaries=tuple(doc.get("glossaries", [])),
        provenance=doc.get("provenance", ""),
    )


def to_document(inv: OntologyInventory) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "entity_name": inv.entity_name,
        "version": inv.version,
        "terms": [{"name": t.name, "defined": t.defined,
                   "reuse": None if t.reuse is None else
                   {"source_kind": t.reuse.source_kind, "target": t.reuse.target}}
                  for t in inv.terms],
        "properties": [{"owner_term": p.owner_term, "name": p.name, "defined": p.defined}
                       for p in inv.properties],
        "axioms": [{"id": a.identifier, "formally_specified": a.formally_specified} for a in inv.axioms],
        "relationships": [{"name": r.name, "kind": r.kind, "source": r.source_term,
                           "target": r.target_term, "defined": r.defined,
                           "reused_from_fo": r.reused_from_fo}
                          for r in inv.relationships],
        "glossaries": list(inv.glossaries),
        "provenance": inv.provenance,
    }


def dump_inventory(inv: OntologyInventory) -> str:
    return json.dumps(to_document(inv), indent=2, ensure_ascii=False) + "\n"


def load_inventory(path) -> OntologyInventory:
    return parse_inventory(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# Validation


def validate(inv: OntologyInventory) -> ValidationReport:
    """Report every violated inventory invariant. Never raises."""
    report = ValidationReport()
    add = lambda code, path, msg: report.violations.append(Violation(code, path, msg))  # noqa: E731

    if not inv.terms:
        add("empty-ontology", "terms", "an ontology must have at least one term")

    term_names = set()
    for i, t in enumerate(inv.terms):
        if not t.name.strip():
            add("empty-name", f"terms[{i}].name", "term name is empty")
        elif t.name in term_names:
            add("duplicate", f"terms[{i}].name", f"duplicate term {t.name!r}")
        term_names.add(t.name)
        if t.reuse is not None and t.reuse.source_kind not in SOURCE_KINDS:
            add("invalid-value", f"terms[{i}].reuse.source_kind",
                f"unknown source kind {t.reuse.source_kind!r}")

    seen_props = set()
    for i, p in enumerate(inv.properties):
        if not p.name.strip():
            add("empty-name", f"properties[{i}].name", "property name is empty")
        if p.owner_term not in term_names:
            add("dangling-reference", f"properties[{i}].owner_term", f"unknown term {p.owner_term!r}")
        key = (p.owner_term, p.name)
        if key in seen_props:
            add("duplicate", f"properties[{i}]", f"duplicate property {p.owner_term}.{p.name}")
        seen_props.add(key)

    seen_axioms = set()
    for i, a in enumerate(inv.axioms):
        if a.identifier in seen_axioms:
            add("duplicate", f"axioms[{i}].id", f"duplicate axiom {a.identifier!r}")
        seen_axioms.add(a.identifier)

    seen_rels = set()
    for i, r in enumerate(inv.relationships):
        if r.kind not in RELATIONSHIP_KINDS:
            add("invalid-value", f"relationships[{i}].kind", f"unknown relationship kind {r.kind!r}")
        for attr, label in (("source_term", "source"), ("target_term", "target")):
            name = getattr(r, attr)
            if name not in term_names:
                add("dangling-reference", f"relationships[{i}].{label}", f"unknown term {name!r}")
        if r.reused_from_fo and r.kind != "non_taxonomic":
            add("invalid-reuse-flag", f"relationships[{i}].reused_from_fo",
                "only non-taxonomic relationships can be reused from a foundational ontology")
        key = (r.name, r.kind, r.source_term, r.target_term)
        if key in seen_rels:
            add("duplicate", f"relationships[{i}]",
                f"duplicate relationship {r.name}({r.source_term}, {r.target_term})")
        seen_rels.add(key)

    seen_gloss = set()
    for i, g in enumerate(inv.glossaries):
        norm = " ".join(g.split())
        if not norm:
            add("empty-name", f"glossaries[{i}]", "glossary name is empty")
        elif norm in seen_gloss:
            add("duplicate", f"glossaries[{i}]", f"duplicate glossary {norm!r}")
        seen_gloss.add(norm)

    return report


def derive_basis(inv: OntologyInventory) -> MeasurementBasis:
    """Count the direct metrics of a valid inventory."""
    ntr = [r for r in inv.relationships if r.kind == "non_taxonomic"]
    return MeasurementBasis(
        tt=len(inv.terms),
        dt=sum(1 for t in inv.terms if t.defined),
        tp=len(inv.properties),
        dp=sum(1 for p in inv.properties if p.defined),
        ta=len(inv.axioms),
        sa=sum(1 for a in inv.axioms if a.formally_specified),
        tntr=len(ntr),
        dntr=sum(1 for r in ntr if r.defined),
        tr=len(inv.relationships),
        stdfo=sum(1 for t in inv.terms if t.reuse is not None and t.reuse.source_kind == "direct"),
        stifo=sum(1 for t in inv.terms if t.reuse is not None and t.reuse.source_kind == "indirect"),
        sntrfo=sum(1 for r in ntr if r.reused_from_fo),
        uisg=len(inv.glossaries),
    )
