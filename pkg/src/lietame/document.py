"""JSON algebra documents.

Schema::

    {"name": "sl2", "dim": 3, "basis": ["e", "h", "f"],
     "brackets": [{"left": "h", "right": "e", "result": [{"basis": "e", "coeff": "2"}]}, ...]}

Coefficients are exact rationals written ``"p/q"`` (or ``"p"``); JSON
integers are accepted, floats are not.  Missing pairs bracket to zero and
``[b, a]`` is filled in from ``[a, b]`` by antisymmetry.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lie import LieAlgebra, LieError, StructureConstants, validate


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


def _rational(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise ParseError(f"coefficient {text!r} must be an exact rational string")
    try:
        return Fraction(text) if isinstance(text, int) else Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_algebra(doc: str | bytes) -> LieAlgebra:
    alg, _ = parse_document(doc)
    return alg


def parse_document(doc: str | bytes) -> tuple[LieAlgebra, str]:
    """Parse and validate; returns the algebra and the document's name."""
    try:
        data = json.loads(doc)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    try:
        basis = data["basis"]
        brackets = data.get("brackets", [])
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from exc
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise ParseError("basis must be a list of labels")
    if len(set(basis)) != len(basis):
        raise ParseError("basis labels must be unique")
    if "dim" in data and data["dim"] != len(basis):
        raise ParseError(f"dim {data['dim']} does not match {len(basis)} basis labels")
    index = {b: i for i, b in enumerate(basis)}

    def lookup(label):
        if label not in index:
            raise ParseError(f"undeclared basis label {label!r}")
        return index[label]

    table: dict[tuple[int, int], dict[int, Fraction]] = {}
    if not isinstance(brackets, list):
        raise ParseError("brackets must be a list")
    for entry in brackets:
        try:
            i, j = lookup(entry["left"]), lookup(entry["right"])
            result = {}
            for term in entry["result"]:
                k = lookup(term["basis"])
                result[k] = result.get(k, Fraction(0)) + _rational(term["coeff"])
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed bracket entry {entry!r}") from exc
        if (i, j) in table:
            raise ParseError(f"bracket [{entry['left']}, {entry['right']}] given twice")
        table[(i, j)] = result
    try:
        sc = StructureConstants.from_brackets(basis, table)
        alg = validate(sc)
    except LieError as exc:
        raise ValidationError(str(exc)) from exc
    return alg, str(data.get("name", ""))


def algebra_to_document(alg: LieAlgebra, name: str = "") -> dict:
    brackets = []
    for (i, j), entries in sorted(alg.sc.table.items()):
        brackets.append(
            {
                "left": alg.names[i],
                "right": alg.names[j],
                "result": [{"basis": alg.names[k], "coeff": _format_rational(c)} for k, c in entries],
            }
        )
    return {"name": name, "dim": alg.dim, "basis": list(alg.names), "brackets": brackets}


def emit_algebra(alg: LieAlgebra, name: str = "") -> str:
    return json.dumps(algebra_to_document(alg, name), indent=2)
