"""JSON ingestion and emission for semirings, ideals, and reports.

The semiring document is the unit of persistence everywhere:

    {"id": str, "n": int, "one": int, "add": [[int]], "mul": [[int]]}

Tables are row-major; element 0 is always the additive identity.
Canonical text is json.dumps with sorted keys and two-space indentation,
so emit(ingest(x)) is the identity on canonical documents.
"""

import json

from .errors import ParseError
from .ideals import ideal_from_members
from .semiring import validate_semiring


def canonical_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def semiring_to_json(s):
    return {
        "id": s.id,
        "n": s.n,
        "one": s.one,
        "add": s.add.tolist(),
        "mul": s.mul.tolist(),
    }


def semiring_from_json(doc):
    if not isinstance(doc, dict):
        raise ParseError("semiring document must be a JSON object")
    for key, kind in (("id", str), ("n", int), ("one", int), ("add", list), ("mul", list)):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
        if not isinstance(doc[key], kind):
            raise ParseError(f"field {key!r} must be {kind.__name__}")
    n = doc["n"]
    for key in ("add", "mul"):
        table = doc[key]
        if len(table) != n:
            raise ParseError(f"field {key!r} must have {n} rows, got {len(table)}")
        for r, row in enumerate(table):
            if not isinstance(row, list) or len(row) != n:
                raise ParseError(f"field {key!r} row {r} must have {n} entries")
            for c, v in enumerate(row):
                if not isinstance(v, int):
                    raise ParseError(f"field {key!r}[{r}][{c}] must be an integer")
    return validate_semiring(doc["add"], doc["mul"], doc["one"], id=doc["id"])


def ingest(path):
    """Load and validate a semiring JSON document from a file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
            ) from exc
    return semiring_from_json(doc)


def emit(path, s):
    """Write the canonical JSON document for a semiring."""
    text = canonical_json(semiring_to_json(s))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


def ideal_from_json(s, doc):
    if not isinstance(doc, dict) or "members" not in doc:
        raise ParseError("ideal document must carry a 'members' list")
    if doc.get("semiring", s.id) != s.id:
        raise ParseError(
            f"ideal belongs to {doc['semiring']!r}, not {s.id!r}"
        )
    members = doc["members"]
    if not isinstance(members, list) or not all(isinstance(m, int) for m in members):
        raise ParseError("field 'members' must be a list of integers")
    return ideal_from_members(s, members)
