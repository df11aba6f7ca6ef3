"""JSON formats for algebras, modules, Kronecker representations, reports.

Scalars serialize as strings ("3/2", "-1"), never floats, so files stay
exact end-to-end.  Emission is deterministic: keys sorted, structure
triples sorted, indent fixed.
"""

from __future__ import annotations

import json
import os
from typing import Optional

from .algebra import ShortAlgebra
from .errors import BadParams
from .kronecker import KroneckerRep
from .linalg import Field, Matrix
from .modules import AModule


def field_to_dict(field: Field) -> dict:
    if field.is_rationals:
        return {"kind": "Q"}
    return {"kind": "Fp", "p": field.characteristic}


def field_from_dict(d: dict) -> Field:
    kind = d.get("kind")
    if kind == "Q":
        return Field.rationals()
    if kind == "Fp":
        return Field.prime(int(d["p"]))
    raise BadParams(f"unknown field kind {kind!r}")


def matrix_to_lists(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m.data]


def matrix_from_lists(field: Field, rows: list[list[str]], cols: Optional[int] = None) -> Matrix:
    return Matrix.from_rows(field, rows, cols=cols)


def algebra_to_dict(alg: ShortAlgebra) -> dict:
    out = {
        "field": field_to_dict(alg.field),
        "e": alg.e,
        "a": alg.a,
        "structure": [[i, j, m, str(c)] for (i, j, m), c in sorted(alg.structure.items())],
        "name": alg.name,
    }
    if alg.tags:
        out["tags"] = _jsonable_tags(alg.tags)
    return out


def _jsonable_tags(tags: dict) -> dict:
    out = {}
    for k, v in tags.items():
        if isinstance(v, tuple):
            out[k] = list(v)
        else:
            out[k] = v
    return out


def algebra_from_dict(d: dict) -> ShortAlgebra:
    field = field_from_dict(d["field"])
    structure = {}
    for entry in d.get("structure", []):
        i, j, m, c = entry
        structure[(int(i), int(j), int(m))] = field.of(c)
    tags = d.get("tags") or {}
    if "generators" in tags and isinstance(tags["generators"], list):
        tags = dict(tags, generators=tuple(tags["generators"]))
    alg = ShortAlgebra(field, int(d["e"]), int(d["a"]), structure,
                       name=d.get("name", ""), tags=tags)
    alg.validate()
    return alg


def module_to_dict(M: AModule, algebra: Optional[object] = None) -> dict:
    """Serialize a module; ``algebra`` may be a file-reference string."""
    alg_part = algebra if isinstance(algebra, str) else algebra_to_dict(M.algebra)
    return {
        "algebra": alg_part,
        "dim": M.dim,
        "actions": [matrix_to_lists(X) for X in M.actions],
    }


def module_from_dict(d: dict, base_dir: str = ".") -> AModule:
    alg_part = d["algebra"]
    if isinstance(alg_part, str):
        path = alg_part if os.path.isabs(alg_part) else os.path.join(base_dir, alg_part)
        alg = load_algebra(path)
    else:
        alg = algebra_from_dict(alg_part)
    dim = int(d["dim"])
    actions = [matrix_from_lists(alg.field, rows, cols=dim) for rows in d["actions"]]
    return AModule(alg, dim, actions)


def kronecker_to_dict(rep: KroneckerRep) -> dict:
    return {
        "e": rep.e,
        "dim0": rep.dim0,
        "dim1": rep.dim1,
        "maps": [matrix_to_lists(phi) for phi in rep.maps],
    }


def kronecker_from_dict(d: dict, field: Field) -> KroneckerRep:
    dim0, dim1 = int(d["dim0"]), int(d["dim1"])
    maps = tuple(matrix_from_lists(field, rows, cols=dim0) for rows in d["maps"])
    return KroneckerRep(e=int(d["e"]), dim0=dim0, dim1=dim1, maps=maps)


def report(op: str, inputs: dict, *, bound: Optional[int] = None,
           values=None, flags: Optional[list[str]] = None, **extra) -> dict:
    """The result envelope used for machine output."""
    out = {"op": op, "inputs": inputs, "bound": bound, "values": values,
           "flags": flags or []}
    out.update(extra)
    return out


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def save_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def load_algebra(path: str) -> ShortAlgebra:
    return algebra_from_dict(load_json(path))


def load_module(path: str) -> AModule:
    return module_from_dict(load_json(path), base_dir=os.path.dirname(path) or ".")
