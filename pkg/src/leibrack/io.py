"""JSON interchange for algebras.

An algebra file looks like::

    {
      "name": "heisenberg",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [
        {"i": 1, "j": 2, "value": [[0, 1], [0, 1], [1, 1]]},
        {"i": 2, "j": 1, "value": [[0, 1], [0, 1], [-1, 1]]}
      ]
    }

Indices are 1-based, each value is a dense coordinate vector of fractions as
``[numerator, denominator]`` pairs in lowest terms with positive denominator,
and omitted (i, j) pairs mean a zero bracket.
"""

import json
from fractions import Fraction
from math import gcd

from .algebra import LeibnizAlgebra


class InterchangeError(ValueError):
    """Raised when an algebra JSON document is malformed."""


def pair_to_fraction(pair, where):
    if (
        not isinstance(pair, (list, tuple))
        or len(pair) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
    ):
        raise InterchangeError(f"{where}: expected [numerator, denominator] integers, got {pair!r}")
    num, den = pair
    if den <= 0:
        raise InterchangeError(f"{where}: denominator must be positive, got {den}")
    if gcd(abs(num), den) != 1:
        raise InterchangeError(f"{where}: fraction {num}/{den} is not in lowest terms")
    return Fraction(num, den)


def fraction_to_pair(value):
    f = Fraction(value)
    return [f.numerator, f.denominator]


def algebra_from_dict(doc):
    if not isinstance(doc, dict):
        raise InterchangeError("top level must be a JSON object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InterchangeError(f"dim: expected a positive integer, got {dim!r}")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise InterchangeError("name: expected a string")
    basis = doc.get("basis")
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim or not all(
            isinstance(b, str) for b in basis
        ):
            raise InterchangeError(f"basis: expected {dim} strings")
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise InterchangeError("brackets: expected a list")
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for pos, entry in enumerate(entries):
        where = f"brackets[{pos}]"
        if not isinstance(entry, dict):
            raise InterchangeError(f"{where}: expected an object")
        unknown = set(entry) - {"i", "j", "value"}
        if unknown:
            raise InterchangeError(f"{where}: unknown fields {sorted(unknown)}")
        try:
            i, j, value = entry["i"], entry["j"], entry["value"]
        except KeyError as missing:
            raise InterchangeError(f"{where}: missing field {missing.args[0]!r}") from None
        for label, idx in (("i", i), ("j", j)):
            if not isinstance(idx, int) or isinstance(idx, bool) or not 1 <= idx <= dim:
                raise InterchangeError(f"{where}.{label}: index {idx!r} outside 1..{dim}")
        if (i, j) in seen:
            raise InterchangeError(f"{where}: duplicate bracket for pair ({i}, {j})")
        seen.add((i, j))
        if not isinstance(value, list) or len(value) != dim:
            raise InterchangeError(f"{where}.value: expected {dim} fraction pairs")
        for k, pair in enumerate(value):
            table[i - 1][j - 1][k] = pair_to_fraction(pair, f"{where}.value[{k}]")
    return LeibnizAlgebra(table, basis=basis, name=name)


def algebra_to_dict(algebra):
    doc = {
        "name": algebra.name,
        "dim": algebra.dim,
        "basis": list(algebra.basis),
        "brackets": [],
    }
    for i in range(algebra.dim):
        for j in range(algebra.dim):
            row = algebra.table[i][j]
            if any(c != 0 for c in row):
                doc["brackets"].append(
                    {"i": i + 1, "j": j + 1, "value": [fraction_to_pair(c) for c in row]}
                )
    return doc


def load_algebra(path):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as err:
            raise InterchangeError(f"{path}: invalid JSON ({err})") from None
    return algebra_from_dict(doc)


def save_algebra(algebra, path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(algebra_to_dict(algebra), handle, indent=2, sort_keys=True)
        handle.write("\n")


def scalar_repr(value):
    """Deterministic string form of an exact or float scalar for reports."""
    if isinstance(value, float):
        return repr(value)
    return str(Fraction(value))
