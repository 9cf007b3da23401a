"""JSON documents for spaces, ideals, maps and reports.

Every document is a JSON object with ``format_version`` and ``kind``
fields. Points are string labels; sets are arrays of labels. Unknown
fields are rejected.

Space::

    {"format_version": 1, "kind": "space",
     "points": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}

Ideal (generator form, or explicit ``"members"`` family)::

    {"format_version": 1, "kind": "ideal", "points": ["a", "b", "c"], "generator": ["a"]}

Map::

    {"format_version": 1, "kind": "map", "assignment": {"0": "a", "1": "b"}}
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .continuity import SpaceMap
from .errors import DocumentSyntaxError, FormatVersionMismatch, InvalidMap, SchemaError, UnknownField, UnknownLabel
from .setspace import FiniteSpace, Ideal, PointSet, make_ideal, make_space, mask_members

FORMAT_VERSION = 1

_FIELDS = {
    "space": ({"format_version", "kind", "points", "opens"}, {"format_version", "kind", "points", "opens"}),
    "ideal": ({"format_version", "kind", "points"}, {"format_version", "kind", "points", "generator", "members"}),
    "map": ({"format_version", "kind", "assignment"}, {"format_version", "kind", "assignment", "domain", "codomain"}),
}


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise SchemaError("a document must be a JSON object")
    return doc


def _validate(doc: dict, kind: str) -> None:
    required, allowed = _FIELDS[kind]
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise UnknownField(f"unknown field(s) in {kind} document: {', '.join(unknown)}", fields=unknown)
    if "format_version" not in doc:
        raise FormatVersionMismatch("missing format_version")
    if doc["format_version"] != FORMAT_VERSION:
        raise FormatVersionMismatch(
            f"format_version {doc['format_version']!r} is not supported (expected {FORMAT_VERSION})"
        )
    missing = sorted(required - set(doc))
    if missing:
        raise SchemaError(f"{kind} document is missing field(s): {', '.join(missing)}", fields=missing)
    if doc["kind"] != kind:
        raise SchemaError(f"expected a {kind} document, got kind {doc['kind']!r}")


def _points(doc: dict) -> list[str]:
    points = doc["points"]
    if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
        raise SchemaError("points must be an array of strings")
    if len(set(points)) != len(points):
        raise SchemaError("point labels must be distinct")
    return points


def _label_set(labels: Sequence[str], lookup: dict[str, int], where: str) -> int:
    if not isinstance(labels, list):
        raise SchemaError(f"{where} must be an array of labels")
    mask = 0
    for lab in labels:
        if lab not in lookup:
            raise UnknownLabel(f"unknown point label {lab!r} in {where}", label=lab)
        mask |= 1 << lookup[lab]
    return mask


def _as_doc(source: str | dict) -> dict:
    return loads(source) if isinstance(source, str) else source


def parse_space(source: str | dict) -> FiniteSpace:
    doc = _as_doc(source)
    _validate(doc, "space")
    points = _points(doc)
    lookup = {p: i for i, p in enumerate(points)}
    if not isinstance(doc["opens"], list):
        raise SchemaError("opens must be an array of label arrays")
    opens = [_label_set(o, lookup, "opens") for o in doc["opens"]]
    return make_space(len(points), opens, points)


def parse_ideal(source: str | dict, space: FiniteSpace | None = None) -> Ideal:
    doc = _as_doc(source)
    _validate(doc, "ideal")
    points = _points(doc)
    if space is not None and list(space.labels or map(str, range(space.n))) != points:
        raise SchemaError("ideal points do not match the space's points")
    lookup = {p: i for i, p in enumerate(points)}
    has_gen, has_members = "generator" in doc, "members" in doc
    if has_gen == has_members:
        raise SchemaError("an ideal document needs exactly one of generator or members")
    if has_gen:
        return make_ideal(len(points), generator=_label_set(doc["generator"], lookup, "generator"))
    if not isinstance(doc["members"], list):
        raise SchemaError("members must be an array of label arrays")
    family = [_label_set(m, lookup, "members") for m in doc["members"]]
    return make_ideal(len(points), family=family)


def parse_map(source: str | dict, domain: FiniteSpace, codomain: FiniteSpace) -> SpaceMap:
    doc = _as_doc(source)
    _validate(doc, "map")
    assignment = doc["assignment"]
    if not isinstance(assignment, dict):
        raise SchemaError("assignment must be an object mapping labels to labels")
    dom = {lab: i for i, lab in enumerate(labels_of(domain))}
    cod = {lab: i for i, lab in enumerate(labels_of(codomain))}
    for key, labels, side in (("domain", dom, "domain"), ("codomain", cod, "codomain")):
        if key in doc and doc[key] != list(labels):
            raise SchemaError(f"map {side} points do not match the {side} space")
    table = [None] * domain.n
    for src, dst in assignment.items():
        if src not in dom:
            raise UnknownLabel(f"unknown domain label {src!r} in map", label=src)
        if not isinstance(dst, str) or dst not in cod:
            raise UnknownLabel(f"unknown codomain label {dst!r} in map", label=dst)
        table[dom[src]] = cod[dst]
    missing = [labels_of(domain)[i] for i, y in enumerate(table) if y is None]
    if missing:
        raise InvalidMap(f"map is not total: no image for {', '.join(missing)}", points=missing)
    return SpaceMap(domain, codomain, tuple(table))


def parse_set(text: str, space: FiniteSpace) -> PointSet:
    """Comma-separated labels, e.g. ``"a,c"``; an empty string is the empty set."""
    lookup = {lab: i for i, lab in enumerate(labels_of(space))}
    labels = [t.strip() for t in text.split(",") if t.strip()]
    return PointSet(space.n, _label_set(labels, lookup, "--set"))


def labels_of(space: FiniteSpace) -> list[str]:
    return list(space.labels) if space.labels is not None else [str(i) for i in range(space.n)]


def set_labels(space: FiniteSpace, mask: int) -> list[str]:
    labels = labels_of(space)
    return [labels[i] for i in mask_members(mask)]


def space_doc(space: FiniteSpace) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "space",
        "points": labels_of(space),
        "opens": [set_labels(space, o) for o in space.open_masks],
    }


def ideal_doc(ideal: Ideal, space: FiniteSpace | None = None) -> dict:
    labels = labels_of(space) if space is not None else [str(i) for i in range(ideal.carrier_size)]
    return {
        "format_version": FORMAT_VERSION,
        "kind": "ideal",
        "points": labels,
        "generator": [labels[i] for i in mask_members(ideal.generator_mask)],
    }


def map_doc(f: SpaceMap) -> dict:
    dom, cod = labels_of(f.domain), labels_of(f.codomain)
    return {
        "format_version": FORMAT_VERSION,
        "kind": "map",
        "assignment": {dom[x]: cod[y] for x, y in enumerate(f.assignment)},
    }


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def serialize_space(space: FiniteSpace) -> str:
    return dumps(space_doc(space))


def serialize_ideal(ideal: Ideal, space: FiniteSpace | None = None) -> str:
    return dumps(ideal_doc(ideal, space))


def serialize_map(f: SpaceMap) -> str:
    return dumps(map_doc(f))
