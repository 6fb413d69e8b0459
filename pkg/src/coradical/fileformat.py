"""JSON file format for coalgebras.

Scalars are strings (``"p/q"`` over Q, ``"r mod p"`` over F_p); degrees are
group labels.  Serialization is deterministic, so generate -> parse ->
serialize reproduces the same bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .coalg import Coalgebra
from .exactla import FieldSpec
from .graded import GradedSpace, Group

__all__ = ["ParseError", "FORMAT", "to_json", "dumps", "loads", "load", "save"]

FORMAT = "coradical-coalgebra/1"


class ParseError(ValueError):
    """The file is not a well-formed coalgebra description."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.where = path


def to_json(c: Coalgebra, metadata: dict | None = None) -> dict:
    F, G = c.field, c.group
    comult = []
    for k, d in enumerate(c.comult):
        for (i, j), x in sorted(d.items()):
            comult.append([i, j, k, F.format(x)])
    comult.sort(key=lambda r: (r[2], r[0], r[1]))
    return {
        "format": FORMAT,
        "name": c.name,
        "field": F.label(),
        "group": G.to_json(),
        "basis": {"labels": list(c.labels), "degrees": [G.labels[d] for d in c.space.degrees]},
        "comult": comult,
        "counit": [[k, F.format(x)] for k, x in enumerate(c.counit) if x != 0],
        "metadata": metadata or {},
    }


def dumps(c: Coalgebra, metadata: dict | None = None) -> str:
    return json.dumps(to_json(c, metadata), indent=1, ensure_ascii=False) + "\n"


def _need(d: dict, key: str, kind, where: str):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(f"missing field {key!r}", where)
    val = d[key]
    if not isinstance(val, kind):
        raise ParseError(f"field {key!r} has the wrong type", where)
    return val


def from_json(d: dict, field: FieldSpec | None = None) -> tuple[Coalgebra, dict]:
    """Parse a decoded document; ``field`` overrides (reduces) the stored field."""
    if not isinstance(d, dict):
        raise ParseError("top level must be an object")
    if d.get("format", FORMAT) != FORMAT:
        raise ParseError(f"unsupported format {d.get('format')!r}", "format")
    try:
        stored = FieldSpec.from_label(_need(d, "field", str, ""))
    except ValueError as exc:
        raise ParseError(str(exc), "field") from None
    F = field or stored
    g = _need(d, "group", dict, "")
    try:
        G = Group.from_json(g)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"bad group: {exc}", "group") from None
    if len(set(G.labels)) != G.order:
        raise ParseError("group labels must be distinct", "group.labels")
    basis = _need(d, "basis", dict, "")
    labels = _need(basis, "labels", list, "basis")
    degs = _need(basis, "degrees", list, "basis")
    if len(labels) != len(degs):
        raise ParseError("labels and degrees differ in length", "basis")
    lookup = {str(x): i for i, x in enumerate(G.labels)}
    try:
        degrees = tuple(lookup[str(x)] for x in degs)
    except KeyError as exc:
        raise ParseError(f"unknown degree {exc.args[0]!r}", "basis.degrees") from None
    n = len(labels)

    def scalar(s, where):
        if not isinstance(s, str):
            raise ParseError("scalars must be strings", where)
        try:
            x = stored.parse(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {s!r}: {exc}", where) from None
        return F(Fraction(x)) if F != stored else x

    comult = [dict() for _ in range(n)]
    for t, row in enumerate(_need(d, "comult", list, "")):
        where = f"comult[{t}]"
        if not (isinstance(row, list) and len(row) == 4 and all(isinstance(x, int) for x in row[:3])):
            raise ParseError("entries must be [i, j, k, scalar]", where)
        i, j, k, s = row
        if not all(0 <= x < n for x in (i, j, k)):
            raise ParseError("basis index out of range", where)
        if (i, j) in comult[k]:
            raise ParseError("duplicate entry", where)
        comult[k][(i, j)] = scalar(s, where)
    counit = [F.zero()] * n
    for t, row in enumerate(_need(d, "counit", list, "")):
        where = f"counit[{t}]"
        if not (isinstance(row, list) and len(row) == 2 and isinstance(row[0], int) and 0 <= row[0] < n):
            raise ParseError("entries must be [k, scalar]", where)
        counit[row[0]] = scalar(row[1], where)
    c = Coalgebra(F, GradedSpace(G, degrees), comult, counit, labels, str(d.get("name", "")))
    return c, dict(d.get("metadata") or {})


def loads(text: str, field: FieldSpec | None = None) -> tuple[Coalgebra, dict]:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_json(d, field)


def load(path: str, field: FieldSpec | None = None) -> tuple[Coalgebra, dict]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return loads(text, field)


def save(c: Coalgebra, path: str, metadata: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(c, metadata))
