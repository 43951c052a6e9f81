"""JSON curve descriptors.

A descriptor looks like::

    {"degree": 17,
     "cusps": [{"newton_pairs": [[2, 7], [4, 17]]}],
     "stab_dim": 0,            # optional, 0..6
     "kappa_bar": "2",         # optional: "-inf", "0", "1", "2", "unknown"
     "pencil": [17, 5]}        # optional (d, a) of y^d + s z^a x^(d-a)

Each cusp carries exactly one of ``newton_pairs`` or
``semigroup_generators``.
"""
from __future__ import annotations

import json
from typing import Any

from .branchdata import (
    InvalidBranch,
    InvalidSemigroup,
    branch_from_newton_pairs,
    semigroup_from_generators,
)
from .curvecheck import KAPPA_VALUES, CurveSpec


class DescriptorError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def _int(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptorError(path, f"expected an integer, got {value!r}")
    return value


def _list(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise DescriptorError(path, f"expected a list, got {value!r}")
    return value


def parse_cusp(obj: Any, path: str):
    if not isinstance(obj, dict):
        raise DescriptorError(path, "expected an object")
    keys = {"newton_pairs", "semigroup_generators"} & obj.keys()
    if len(keys) != 1:
        raise DescriptorError(path, "give exactly one of newton_pairs / semigroup_generators")
    unknown = obj.keys() - {"newton_pairs", "semigroup_generators"}
    if unknown:
        raise DescriptorError(path, f"unknown field(s) {sorted(unknown)}")
    if "newton_pairs" in obj:
        pairs = []
        for i, pair in enumerate(_list(obj["newton_pairs"], f"{path}.newton_pairs")):
            ppath = f"{path}.newton_pairs[{i}]"
            pair = _list(pair, ppath)
            if len(pair) != 2:
                raise DescriptorError(ppath, "a Newton pair is [p, q]")
            pairs.append((_int(pair[0], ppath + "[0]"), _int(pair[1], ppath + "[1]")))
        try:
            return branch_from_newton_pairs(pairs)
        except InvalidBranch as exc:
            raise DescriptorError(f"{path}.newton_pairs", str(exc))
    gpath = f"{path}.semigroup_generators"
    gens = [_int(g, f"{gpath}[{i}]") for i, g in enumerate(_list(obj["semigroup_generators"], gpath))]
    try:
        sg = semigroup_from_generators(gens)
    except InvalidSemigroup as exc:
        raise DescriptorError(gpath, str(exc))
    if not sg.is_symmetric():
        raise DescriptorError(gpath, "semigroup is not symmetric, so not the semigroup of a plane branch")
    return sg


def parse_descriptor(obj: Any) -> CurveSpec:
    if not isinstance(obj, dict):
        raise DescriptorError("$", "descriptor must be a JSON object")
    unknown = obj.keys() - {"degree", "cusps", "stab_dim", "kappa_bar", "pencil"}
    if unknown:
        raise DescriptorError("$", f"unknown field(s) {sorted(unknown)}")
    if "degree" not in obj:
        raise DescriptorError("degree", "missing")
    degree = _int(obj["degree"], "degree")
    if degree < 3:
        raise DescriptorError("degree", f"must be >= 3, got {degree}")
    cusps_raw = _list(obj.get("cusps"), "cusps")
    if not cusps_raw:
        raise DescriptorError("cusps", "at least one cusp is required")
    cusps = tuple(parse_cusp(c, f"cusps[{i}]") for i, c in enumerate(cusps_raw))
    stab = obj.get("stab_dim")
    if stab is not None:
        stab = _int(stab, "stab_dim")
        if not 0 <= stab <= 6:
            raise DescriptorError("stab_dim", f"must be in 0..6, got {stab}")
    kappa = obj.get("kappa_bar")
    if kappa is not None:
        kappa = str(kappa)
        if kappa not in KAPPA_VALUES:
            raise DescriptorError("kappa_bar", f"must be one of {list(KAPPA_VALUES)}")
    pencil = obj.get("pencil")
    if pencil is not None:
        pencil = _list(pencil, "pencil")
        if len(pencil) != 2:
            raise DescriptorError("pencil", "expected [d, a]")
        pencil = (_int(pencil[0], "pencil[0]"), _int(pencil[1], "pencil[1]"))
    return CurveSpec(degree, cusps, stab_dim=stab, kappa_bar=kappa, pencil=pencil)


def load_descriptor(text: str) -> CurveSpec:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError("$", f"invalid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})")
    return parse_descriptor(obj)
