"""Text, CSV and JSON renderings of evaluation, comparison and diff reports.

Text output shows two decimals rounded half away from zero. CSV and JSON
carry the same rounded figure next to the full-precision float.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal

from .compare import ComparisonReport, EntityEvaluation, ImprovementReport, weaknesses
from .lsp import EvaluationResult
from .metrics import METRIC_LABELS

# Indirect metric -> the direct counts it is computed from.
METRIC_INPUTS = {
    "pct_dt": ("dt", "tt"),
    "pct_dp": ("dp", "tp"),
    "pct_sa": ("sa", "ta"),
    "pct_dntr": ("dntr", "tntr"),
    "pct_bntr": ("tntr", "tr"),
    "pct_stfo": ("stdfo", "stifo", "tt"),
    "pct_sntrfo": ("sntrfo", "tntr"),
}


def fmt2(x) -> str:
    d = Decimal(repr(float(x))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    if d == 0:
        d = abs(d)
    return f"{d:.2f}"


def fmt_delta(x) -> str:
    s = fmt2(x)
    return s if s.startswith("-") else "+" + s


def fmt_weight(w) -> str:
    return f"{w:g}"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _num(x) -> dict:
    return {"value": x, "rounded": fmt2(x)}


def _tree_json(r: EvaluationResult) -> dict:
    node = {"id": r.node_id, "name": r.name, "kind": r.kind, "weight": r.weight,
            **_num(r.value), "level": r.level.value}
    if r.operator:
        node["operator"] = r.operator
    if r.children:
        node["children"] = [_tree_json(c) for c in r.children]
    return node


def _depth(node_id: str) -> int:
    return node_id.count(".")


def _weakness_lines(result, indent="  "):
    found = weaknesses(result)
    if not found:
        return [f"{indent}none"]
    return [f"{indent}{aid} {fmt2(score)} {level}" for aid, score, level in found]


# ---------------------------------------------------------------------------
# evaluate


def evaluation_text(ev: EntityEvaluation, model_id: str) -> str:
    b = ev.basis.as_dict()
    lines = [f"Entity: {ev.inventory.label}", f"Model: {model_id}", "", "Measures"]
    for metric, label in METRIC_LABELS.items():
        if metric == "uisg":
            lines.append(f"  {label} {ev.measures.uisg}")
            continue
        counts = ", ".join(f"#{c.upper()} {b[c]}" for c in METRIC_INPUTS[metric])
        lines.append(f"  {label} {fmt2(ev.measures.value(metric))} ({counts})")
    lines += ["", "Elementary indicators"]
    for e in ev.elementary:
        lines.append(f"  {e.attribute_id} {e.indicator_name} {fmt2(e.score)} {e.level}")
    lines += ["", "Derived indicators"]
    for node in ev.result.walk():
        extra = [] if node.node_id == ev.result.node_id else [f"weight {fmt_weight(node.weight)}"]
        if node.operator:
            extra.append(f"op {node.operator}")
        lines.append(f"{'  ' * (_depth(node.node_id) + 1)}{node.node_id} {node.name} "
                     f"{fmt2(node.value)} {node.level} ({', '.join(extra)})")
    lines += ["", "Weaknesses"] + _weakness_lines(ev.result)
    return "\n".join(lines) + "\n"


def evaluation_csv(ev: EntityEvaluation) -> str:
    rows = [("section", "key", "value", "level", "value_full", "detail")]
    for name, count in ev.basis.as_dict().items():
        rows.append(("count", f"#{name.upper()}", count, "", count, ""))
    for metric, label in METRIC_LABELS.items():
        v = ev.measures.value(metric)
        rows.append(("measure", label, v if metric == "uisg" else fmt2(v), "", repr(v), ""))
    for e in ev.elementary:
        rows.append(("indicator", e.attribute_id, fmt2(e.score), e.level.value, repr(e.score),
                     e.indicator_name))
    for node in ev.result.walk():
        rows.append(("tree", node.node_id, fmt2(node.value), node.level.value, repr(node.value),
                     node.name))
    return _csv(rows)


def evaluation_json(ev: EntityEvaluation, model_id: str) -> str:
    return _json({
        "entity_name": ev.inventory.entity_name,
        "version": ev.inventory.version,
        "model_id": model_id,
        "counts": ev.basis.as_dict(),
        "measures": {METRIC_LABELS[m]: _num(ev.measures.value(m)) for m in METRIC_LABELS},
        "elementary": [{"attribute_id": e.attribute_id, "indicator": e.indicator_name,
                        "input": e.input, **_num(e.score), "level": e.level.value}
                       for e in ev.elementary],
        "tree": _tree_json(ev.result),
        "weaknesses": [{"attribute_id": a, **_num(s), "level": lv.value}
                       for a, s, lv in weaknesses(ev.result)],
    })


# ---------------------------------------------------------------------------
# compare


def comparison_text(report: ComparisonReport) -> str:
    names = [name for name, _ in report.entities]
    first = report.entities[0][1]
    labels = [("  " * _depth(n.node_id)) + f"{n.node_id} {n.name}" for n in first.walk()]
    width = max(len(s) for s in labels + ["Node"])
    cols = [max(len(name), 6) for name in names]
    header = f"{'Node':<{width}}  {'Weights':>7}  {'Op.':<4}" + "".join(
        f"  {name:>{w}}" for name, w in zip(names, cols))
    lines = [f"Comparison (model: {report.model_id})", "", header, "-" * len(header)]
    nodes = [list(result.walk()) for _, result in report.entities]
    for i, label in enumerate(labels):
        ref = nodes[0][i]
        weight = "" if i == 0 else fmt_weight(ref.weight)
        row = f"{label:<{width}}  {weight:>7}  {ref.operator or '':<4}"
        row += "".join(f"  {fmt2(ns[i].value):>{w}}" for ns, w in zip(nodes, cols))
        lines.append(row.rstrip())
    values = report.global_values()
    lines += ["", "Ranking: " + ", ".join(report.ranking)]
    lines += [f"  {pos}. {name} {fmt2(values[name])}" for pos, name in enumerate(report.ranking, 1)]
    lines += ["", "Weaknesses"]
    for name, result in report.entities:
        lines.append(f"  {name}")
        lines += _weakness_lines(result, "    ")
    return "\n".join(lines) + "\n"


def comparison_csv(report: ComparisonReport) -> str:
    names = [name for name, _ in report.entities]
    header = ["node_id", "name", "weight", "operator"]
    for name in names:
        header += [name, f"{name}_level", f"{name}_full"]
    header.append("winners")
    rows = [header]
    nodes = [list(result.walk()) for _, result in report.entities]
    for i, ref in enumerate(nodes[0]):
        row = [ref.node_id, ref.name, ref.weight, ref.operator or ""]
        for ns in nodes:
            row += [fmt2(ns[i].value), ns[i].level.value, repr(ns[i].value)]
        row.append(";".join(report.per_node_winner[ref.node_id]))
        rows.append(row)
    return _csv(rows)


def comparison_json(report: ComparisonReport) -> str:
    return _json({
        "model_id": report.model_id,
        "entities": [{"name": name, "tree": _tree_json(result),
                      "weaknesses": [{"attribute_id": a, **_num(s), "level": lv.value}
                                     for a, s, lv in weaknesses(result)]}
                     for name, result in report.entities],
        "ranking": [{"name": n, **_num(report.global_values()[n])} for n in report.ranking],
        "per_node_winner": report.per_node_winner,
    })


# ---------------------------------------------------------------------------
# diff


def diff_text(report: ImprovementReport, model_id: str) -> str:
    before, after = report.before_version or "before", report.after_version or "after"
    lines = [f"Re-evaluation: {report.entity_name} {before} -> {after} (model: {model_id})", "",
             f"Node {before} {after} Delta"]
    for a, b in zip(report.before.walk(), report.after.walk()):
        lines.append(f"{'  ' * _depth(a.node_id)}{a.node_id} {a.name} "
                     f"{fmt2(a.value)} {fmt2(b.value)} {fmt_delta(report.deltas[a.node_id])}")
    lines += ["", "Addressed attributes: " + (", ".join(report.addressed_attributes) or "none")]
    for aid in report.addressed_attributes:
        a, b = report.before.find(aid), report.after.find(aid)
        lines.append(f"  {aid} {a.level} -> {b.level}")
    return "\n".join(lines) + "\n"


def diff_csv(report: ImprovementReport) -> str:
    rows = [("node_id", "name", "before", "after", "delta", "before_full", "after_full",
             "delta_full", "before_level", "after_level", "addressed")]
    addressed = set(report.addressed_attributes)
    for a, b in zip(report.before.walk(), report.after.walk()):
        d = report.deltas[a.node_id]
        rows.append((a.node_id, a.name, fmt2(a.value), fmt2(b.value), fmt_delta(d), repr(a.value),
                     repr(b.value), repr(d), a.level.value, b.level.value,
                     "yes" if a.node_id in addressed else ""))
    return _csv(rows)


def diff_json(report: ImprovementReport, model_id: str) -> str:
    return _json({
        "entity_name": report.entity_name,
        "before_version": report.before_version,
        "after_version": report.after_version,
        "model_id": model_id,
        "before": _tree_json(report.before),
        "after": _tree_json(report.after),
        "deltas": {k: {"value": v, "rounded": fmt_delta(v)} for k, v in report.deltas.items()},
        "addressed_attributes": report.addressed_attributes,
    })


# ---------------------------------------------------------------------------
# plot data


def plot_data_csv(samples, integer_domain: bool) -> str:
    rows = [("x", "score")]
    for x, score in samples:
        if integer_domain:
            rows.append((int(x), int(score) if float(score).is_integer() else fmt2(score)))
        else:
            rows.append((f"{x:.1f}", fmt2(score)))
    return _csv(rows)
