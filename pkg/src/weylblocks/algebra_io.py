"""Algebra-definition JSON files (schema version 1).

    {
      "name": "sl3",
      "dim": 8,
      "labels": ["y1", ...],
      "structure": [[i, j, k, num, den], ...],   # c_ij^k, 0-based, both orders listed
      "cartan": [6, 7],
      "triples": [[x, y, h], ...],
      "embeddings": [{"name": ..., "labels": [...], "generator_indices": [...],
                      "basis_change": [[q, ...], ...], "sub_cartan": [...]}]
    }

Rationals in ``basis_change`` are integers or strings such as "1/2".
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exactmath import RatMatrix
from .liealg import LieAlgebra, LieAlgebraError, SubgroupEmbedding, build_sl, make_algebra, sl2_in_sl3


class AlgebraFileError(ValueError):
    """Malformed algebra file; the message names the offending field."""


def _fraction_text(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def algebra_to_dict(g: LieAlgebra, embeddings=()) -> dict:
    structure = []
    for i in range(g.dim):
        for j in range(g.dim):
            for k, c in enumerate(g.structure[i][j]):
                if c:
                    structure.append([i, j, k, c.numerator, c.denominator])
    return {
        "name": g.name,
        "dim": g.dim,
        "labels": list(g.labels),
        "structure": structure,
        "cartan": list(g.cartan),
        "triples": [list(t) for t in g.triples],
        "embeddings": [
            {
                "name": e.name,
                "labels": list(e.labels),
                "generator_indices": list(e.generator_indices),
                "basis_change": [[_fraction_text(x) for x in row] for row in e.basis_change.rows],
                "sub_cartan": list(e.sub_cartan),
            }
            for e in embeddings
        ],
    }


def _need(d: dict, key: str, kind, where: str):
    if key not in d:
        raise AlgebraFileError(f"{where}: missing field {key!r}")
    v = d[key]
    if not isinstance(v, kind) or isinstance(v, bool):
        raise AlgebraFileError(f"{where}: field {key!r} has the wrong type")
    return v


def _int_list(v, field: str, n: int | None = None) -> list[int]:
    if not isinstance(v, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in v):
        raise AlgebraFileError(f"field {field!r} must be a list of integers")
    if n is not None and any(not 0 <= x < n for x in v):
        raise AlgebraFileError(f"field {field!r} has an index outside 0..{n - 1}")
    return v


def _rational(x, field: str) -> Fraction:
    try:
        if isinstance(x, bool) or isinstance(x, float):
            raise TypeError
        return Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise AlgebraFileError(f"field {field!r}: {x!r} is not an exact rational") from None


def load_algebra_dict(d: dict) -> tuple[LieAlgebra, dict[str, SubgroupEmbedding]]:
    """Parse and validate; raises AlgebraFileError or LieAlgebraError."""
    if not isinstance(d, dict):
        raise AlgebraFileError("algebra file must contain a JSON object")
    name = _need(d, "name", str, "algebra")
    dim = _need(d, "dim", int, "algebra")
    labels = _need(d, "labels", list, "algebra")
    if len(labels) != dim or any(not isinstance(x, str) or not x.isidentifier() for x in labels):
        raise AlgebraFileError("field 'labels' must hold dim identifier strings")
    if len(set(labels)) != dim:
        raise AlgebraFileError("field 'labels' has duplicates")
    entries = _need(d, "structure", list, "algebra")
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for e in entries:
        if not isinstance(e, list) or len(e) != 5 or any(not isinstance(x, int) or isinstance(x, bool) for x in e):
            raise AlgebraFileError(f"field 'structure': entry {e!r} must be [i, j, k, num, den] integers")
        i, j, k, num, den = e
        if not all(0 <= x < dim for x in (i, j, k)):
            raise AlgebraFileError(f"field 'structure': entry {e!r} has an index outside 0..{dim - 1}")
        if den == 0:
            raise AlgebraFileError(f"field 'structure': entry {e!r} has zero denominator")
        c[i][j][k] = Fraction(num, den)
    cartan = _int_list(_need(d, "cartan", list, "algebra"), "cartan", dim)
    triples = d.get("triples", [])
    if not isinstance(triples, list):
        raise AlgebraFileError("field 'triples' must be a list")
    for t in triples:
        _int_list(t, "triples", dim)
        if len(t) != 3:
            raise AlgebraFileError("field 'triples': each triple needs 3 indices")
    g = make_algebra(name, labels, c, cartan, triples, validate=True)

    embeddings = {}
    for raw in d.get("embeddings", []) or []:
        if not isinstance(raw, dict):
            raise AlgebraFileError("field 'embeddings' must hold objects")
        ename = _need(raw, "name", str, "embedding")
        rows = _need(raw, "basis_change", list, f"embedding {ename}")
        if len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
            raise AlgebraFileError(f"embedding {ename}: field 'basis_change' must be {dim}x{dim}")
        B = RatMatrix([[_rational(x, "basis_change") for x in r] for r in rows])
        elabels = raw.get("labels", labels)
        if not isinstance(elabels, list) or len(elabels) != dim or any(not isinstance(x, str) for x in elabels):
            raise AlgebraFileError(f"embedding {ename}: field 'labels' must hold {dim} strings")
        gens = _int_list(_need(raw, "generator_indices", list, f"embedding {ename}"), "generator_indices", dim)
        sub_cartan = _int_list(_need(raw, "sub_cartan", list, f"embedding {ename}"), "sub_cartan", dim)
        etriples = raw.get("triples")
        embeddings[ename] = SubgroupEmbedding(
            name=ename,
            basis_change=B,
            labels=tuple(elabels),
            generator_indices=tuple(gens),
            sub_cartan=tuple(sub_cartan),
            triples=None if etriples is None else tuple(tuple(_int_list(t, "triples", dim)) for t in etriples),
        )
    return g, embeddings


def builtin_dict(name: str) -> dict:
    if name == "sl2":
        return algebra_to_dict(build_sl(2))
    if name == "sl3":
        return algebra_to_dict(build_sl(3), [sl2_in_sl3()])
    raise KeyError(name)


BUILTINS = ("sl2", "sl3")


def resolve_algebra(source: str) -> tuple[LieAlgebra, dict[str, SubgroupEmbedding]]:
    """A built-in name or a path to an algebra JSON file."""
    if source in BUILTINS:
        return load_algebra_dict(builtin_dict(source))
    path = Path(source)
    if not path.exists():
        raise AlgebraFileError(f"unknown algebra {source!r}: not a built-in ({', '.join(BUILTINS)}) and no such file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{source}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    return load_algebra_dict(data)


__all__ = ["AlgebraFileError", "BUILTINS", "LieAlgebraError", "algebra_to_dict", "builtin_dict",
           "load_algebra_dict", "resolve_algebra"]
