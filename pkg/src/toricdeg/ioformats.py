"""Readers and writers for the on-disk formats.

Ideal files: a `vars:` header line, an optional `grading:` line, then one
polynomial per line in the ASCII grammar.  Matrices are JSON arrays of arrays
(row-major).  Semigroups are JSON objects with gens, degree_coord and
optional labels.
"""

from __future__ import annotations

import json

from .groebner import Ideal
from .intlat import IntMatrix
from .polycore import Grading, format_polynomial, parse_polynomial
from .toric import Semigroup


def parse_ideal_text(text: str) -> Ideal:
    vars = None
    grading = None
    gens = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vars:"):
            vars = tuple(v.strip() for v in line[len("vars:"):].split(",") if v.strip())
            continue
        if line.startswith("grading:"):
            grading = Grading([int(x) for x in line[len("grading:"):].split(",")])
            continue
        if vars is None:
            raise ValueError("ideal file must declare vars before polynomials")
        p = parse_polynomial(line, vars)
        if not p.is_zero():
            gens.append(p)
    if vars is None:
        raise ValueError("ideal file has no vars header")
    return Ideal(gens, vars, grading=grading)


def read_ideal(path: str) -> Ideal:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".json"):
        return ideal_from_json(json.loads(text))
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return ideal_from_json(json.loads(text))
    return parse_ideal_text(text)


def ideal_to_text(I: Ideal) -> str:
    lines = [f"vars: {','.join(I.vars)}"]
    if I.grading is not None:
        lines.append(f"grading: {','.join(str(w) for w in I.grading.weights)}")
    for g in I.gens:
        lines.append(format_polynomial(g))
    return "\n".join(lines) + "\n"


def ideal_to_json(I: Ideal) -> dict:
    out = {"vars": list(I.vars),
           "gens": [format_polynomial(g) for g in I.gens]}
    if I.grading is not None:
        out["grading"] = list(I.grading.weights)
    return out


def ideal_from_json(obj: dict) -> Ideal:
    vars = tuple(obj["vars"])
    grading = Grading(obj["grading"]) if "grading" in obj else None
    gens = [parse_polynomial(s, vars) for s in obj.get("gens", [])]
    gens = [g for g in gens if not g.is_zero()]
    return Ideal(gens, vars, grading=grading)


def write_ideal(I: Ideal, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        if path.endswith(".json"):
            json.dump(ideal_to_json(I), fh, indent=2, sort_keys=True)
            fh.write("\n")
        else:
            fh.write(ideal_to_text(I))


def read_matrix(path: str) -> IntMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return IntMatrix(data)


def write_matrix(A: IntMatrix, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([list(r) for r in A.entries], fh)
        fh.write("\n")


def semigroup_to_json(S: Semigroup) -> dict:
    out = {"degree_coord": S.degree_coord, "gens": [list(g) for g in S.gens]}
    if S.labels is not None:
        out["labels"] = list(S.labels)
    if S.degree_scale != 1:
        out["degree_scale"] = S.degree_scale
    return out


def semigroup_from_json(obj: dict) -> Semigroup:
    return Semigroup(obj["gens"], degree_coord=obj.get("degree_coord", 0),
                     labels=obj.get("labels"),
                     degree_scale=obj.get("degree_scale", 1))


def read_semigroup(path: str) -> Semigroup:
    with open(path, "r", encoding="utf-8") as fh:
        return semigroup_from_json(json.load(fh))
