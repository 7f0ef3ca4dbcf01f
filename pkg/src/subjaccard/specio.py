"""JSON spec files and report documents.

Spec files carry ``family``, ``ground`` and the family's parameters; numbers
are integers, decimal strings or ``"p/q"`` strings so exact values survive
the round trip. Unknown fields are rejected.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import setfun
from .errors import MalformedSpec
from .report import PropertyReport, Value, Verdict, ViolationRecord
from .setcore import GroundSet, SubsetMask
from .setfun import SetFunctionSpec, as_fraction

EMPTY_SET = "-"

_FIELDS = {
    "cardinality": (set(), set()),
    "weighted_modular": ({"weights"}, {"gamma"}),
    "budgeted_linear": ({"budget", "weights"}, set()),
    "bipartite_neighborhood": ({"right_labels", "edges"}, set()),
    "uniform_matroid_rank": ({"k"}, set()),
    "partition_matroid_rank": ({"partitions", "capacities"}, set()),
    "joint_entropy": ({"cardinalities", "table"}, {"variables"}),
    "explicit_table": ({"values"}, {"exact"}),
}


def _labels(xs, what: str) -> list[str]:
    if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
        raise MalformedSpec(f"{what} must be a list of strings")
    for x in xs:
        if not x or x == EMPTY_SET or "," in x or x != x.strip():
            raise MalformedSpec(f"invalid label {x!r}: labels must be non-empty, not '-', without commas")
    return xs


def parse_subset(g: GroundSet, text: str) -> SubsetMask:
    """Comma-separated labels; ``-`` (or the empty string) is the empty set."""
    text = text.strip()
    if text in ("", EMPTY_SET):
        return g.empty()
    return g.subset(x.strip() for x in text.split(","))


def format_subset(s: SubsetMask) -> str:
    return ",".join(s.labels()) or EMPTY_SET


def parse_spec(doc: Any) -> SetFunctionSpec:
    if not isinstance(doc, dict):
        raise MalformedSpec("spec document must be a JSON object")
    family = doc.get("family")
    if family not in _FIELDS:
        raise MalformedSpec(f"unknown or missing family {family!r}")
    required, optional = _FIELDS[family]
    keys = set(doc) - {"family", "ground"}
    if "ground" not in doc:
        raise MalformedSpec("missing field 'ground'")
    if missing := required - keys:
        raise MalformedSpec(f"missing fields for {family}: {sorted(missing)}")
    if unknown := keys - required - optional:
        raise MalformedSpec(f"unknown fields for {family}: {sorted(unknown)}")
    try:
        g = GroundSet(_labels(doc["ground"], "ground"))
    except ValueError as e:
        raise MalformedSpec(str(e)) from None

    if family == "cardinality":
        return setfun.cardinality(g)
    if family == "weighted_modular":
        return setfun.weighted_modular(g, _weights(doc["weights"]), doc.get("gamma", 0))
    if family == "budgeted_linear":
        return setfun.budgeted_linear(g, _weights(doc["weights"]), doc["budget"])
    if family == "bipartite_neighborhood":
        edges = doc["edges"]
        if not isinstance(edges, list):
            raise MalformedSpec("edges must be a list of [left, right] pairs")
        return setfun.bipartite_neighborhood(g, _labels(doc["right_labels"], "right_labels"), edges)
    if family == "uniform_matroid_rank":
        return setfun.uniform_matroid_rank(g, doc["k"])
    if family == "partition_matroid_rank":
        parts = doc["partitions"]
        if not isinstance(parts, list):
            raise MalformedSpec("partitions must be a list of label lists")
        blocks = [_labels(b, "partition block") for b in parts]
        return setfun.partition_matroid_rank(g, blocks, _list(doc["capacities"], "capacities"))
    if family == "joint_entropy":
        return _parse_entropy(g, doc)
    return _parse_table(g, doc)


def _list(x, what):
    if not isinstance(x, list):
        raise MalformedSpec(f"{what} must be a list")
    return x


def _weights(w):
    if isinstance(w, (list, dict)):
        return w
    raise MalformedSpec("weights must be a list or a label -> number object")


def _flatten(x):
    if isinstance(x, list):
        for y in x:
            yield from _flatten(y)
    else:
        yield x


def _parse_entropy(g: GroundSet, doc) -> SetFunctionSpec:
    import numpy as np

    cards = [setfun._nonneg_int(c, "cardinality") for c in _list(doc["cardinalities"], "cardinalities")]
    probs = [float(as_fraction(p)) for p in _flatten(_list(doc["table"], "table"))]
    variables = doc.get("variables", list(g.labels))
    _labels(variables, "variables")
    if sorted(variables) != sorted(g.labels) or len(variables) != len(cards):
        raise MalformedSpec("variables must list every ground label exactly once")
    if len(probs) != int(np.prod(cards)):
        raise MalformedSpec("table size does not match cardinalities")
    arr = np.asarray(probs).reshape(cards)
    order = [variables.index(x) for x in g.labels]
    arr = np.transpose(arr, order)
    return setfun.joint_entropy(g, arr)


def _parse_table(g: GroundSet, doc) -> SetFunctionSpec:
    exact = doc.get("exact", True)
    if not isinstance(exact, bool):
        raise MalformedSpec("exact must be true or false")
    values = doc["values"]
    if isinstance(values, dict):
        items = [(parse_subset(g, k), v) for k, v in values.items()]
    elif isinstance(values, list):
        items = []
        for entry in values:
            if not (isinstance(entry, list) and len(entry) == 2):
                raise MalformedSpec("table entries must be [label-list, value] pairs")
            items.append((g.subset(_labels(entry[0], "subset")), entry[1]))
    else:
        raise MalformedSpec("values must be an object or a list of pairs")
    table: dict[int, Any] = {}
    for s, v in items:
        if s.bits in table:
            raise MalformedSpec(f"duplicate table entry for {format_subset(s)}")
        q = as_fraction(v)
        table[s.bits] = q if exact else float(q)
    return setfun.explicit_table(g, table)


def _num(x: Value):
    return str(x) if isinstance(x, Fraction) else x


def dump_spec(spec: SetFunctionSpec) -> dict:
    """Canonical document; ``parse_spec(dump_spec(s)) == s``."""
    g, p = spec.ground, spec.params
    doc: dict[str, Any] = {"family": spec.family, "ground": list(g.labels)}
    if spec.family in ("weighted_modular", "budgeted_linear"):
        doc["weights"] = [_num(w) for w in p["weights"]]
        if spec.family == "weighted_modular":
            doc["gamma"] = _num(p["gamma"])
        else:
            doc["budget"] = _num(p["budget"])
    elif spec.family == "bipartite_neighborhood":
        doc["right_labels"] = list(p["right_labels"])
        doc["edges"] = [[g.labels[i], p["right_labels"][j]] for i, j in p["edges"]]
    elif spec.family == "uniform_matroid_rank":
        doc["k"] = p["k"]
    elif spec.family == "partition_matroid_rank":
        doc["partitions"] = [g.mask(b).labels() for b in p["partitions"]]
        doc["capacities"] = list(p["capacities"])
    elif spec.family == "joint_entropy":
        doc["variables"] = list(g.labels)
        doc["cardinalities"] = list(p["cardinalities"])
        doc["table"] = list(p["table"])
    elif spec.family == "explicit_table":
        doc["exact"] = p["exact"]
        doc["values"] = {format_subset(g.mask(m)): _num(v) for m, v in enumerate(p["values"])}
    return doc


def canonical_json(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def spec_digest(spec: SetFunctionSpec) -> str:
    return "sha256:" + hashlib.sha256(canonical_json(dump_spec(spec)).encode()).hexdigest()


def loads_spec(text: str) -> SetFunctionSpec:
    try:
        doc = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as e:
        raise MalformedSpec(f"invalid JSON: {e}") from None
    return parse_spec(doc)


def load_spec(path) -> SetFunctionSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedSpec(f"cannot read {path}: {e}") from None
    return loads_spec(text)


def save_spec(spec: SetFunctionSpec, path) -> None:
    write_atomic(path, json.dumps(dump_spec(spec), indent=2) + "\n")


def write_atomic(path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


# -- reports ----------------------------------------------------------------


def render_value(x: Value) -> str:
    """Exact values as ``"p/q"`` (or an integer), floats as their repr."""
    return str(x) if isinstance(x, Fraction) else repr(float(x))


def read_value(text: str, exact: bool) -> Value:
    return Fraction(text) if exact else float(text)


def violation_doc(v: ViolationRecord) -> dict:
    return {
        "kind": v.kind,
        "sets": [s.labels() for s in v.witness],
        "lhs": render_value(v.lhs),
        "rhs": render_value(v.rhs),
        "margin": render_value(v.margin),
    }


def report_doc(report: PropertyReport, *, exact: bool) -> dict:
    doc = {
        "check": report.name,
        "verdict": report.verdict.value,
        "exact": exact,
        "checked": report.checked,
        "violation_count": report.violation_count,
        "witnesses": [violation_doc(v) for v in report.violations],
        "seed": report.seed,
        "elapsed": report.elapsed,
    }
    if report.informational_count:
        doc["informational"] = [[s.labels() for s in tup] for tup in report.informational]
        doc["informational_count"] = report.informational_count
    return doc


def violation_from_doc(doc: dict, g: GroundSet, exact: bool) -> ViolationRecord:
    return ViolationRecord(
        doc["kind"],
        tuple(g.subset(s) for s in doc["sets"]),
        read_value(doc["lhs"], exact),
        read_value(doc["rhs"], exact),
        read_value(doc["margin"], exact),
    )


def report_from_doc(doc: dict, g: GroundSet) -> PropertyReport:
    exact = doc["exact"]
    return PropertyReport(
        name=doc["check"],
        verdict=Verdict(doc["verdict"]),
        checked=doc["checked"],
        violations=[violation_from_doc(v, g, exact) for v in doc["witnesses"]],
        seed=doc["seed"],
        informational=[tuple(g.subset(s) for s in tup) for tup in doc.get("informational", [])],
        informational_count=doc.get("informational_count", 0),
        violation_count=doc["violation_count"],
        elapsed=doc["elapsed"],
    )
