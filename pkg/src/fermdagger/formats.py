"""JSON file formats.

Scalars are stored as strings such as ``"1/2-3*i"``.  Entries are row-major.

    matrix   {"dims_dom": [p, q], "dims_cod": [p, q], "entries": [[...], ...]}
             ("dims" may replace both when the map is an endomorphism)
    pairing  {"dims": [p, q], "convention": "super" | "graded", "entries": [[...], ...]}
    spec     {"flavor": "spin" | "oriented", "target": "shilb" | "sherm",
              "statePairing": <pairing>, "theta": <matrix> | null,
              "ev": <matrix> | "solve"}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import supervect as sv
from . import tqft
from .bordism1 import Flavor
from .errors import FermDaggerError
from .exactnum import format_scalar, parse_scalar
from .hermforms import Pairing, PositivityClass
from .supervect import Convention, EvenMap, SuperDims


class FormatError(FermDaggerError, ValueError):
    pass


def _dims(obj) -> SuperDims:
    try:
        p, q = obj
        return SuperDims(int(p), int(q))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad dims {obj!r}") from exc


def _entries(rows) -> tuple:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise FormatError("entries must be a list of rows")
    return tuple(tuple(parse_scalar(str(x)) for x in row) for row in rows)


def _dump_entries(m) -> list:
    return [[format_scalar(x) for x in row] for row in m]


def _enum(cls, text: str, field: str):
    try:
        return cls[str(text).upper()]
    except KeyError:
        choices = "|".join(c.name.lower() for c in cls)
        raise FormatError(f"{field} must be one of {choices}, got {text!r}") from None


def convention(text: str) -> Convention:
    return _enum(Convention, text, "convention")


def flavor(text: str) -> Flavor:
    return _enum(Flavor, text, "flavor")


def target(text: str) -> PositivityClass:
    return _enum(PositivityClass, text, "target")


# decoding --------------------------------------------------------------------

def matrix_from_obj(obj: dict[str, Any]) -> EvenMap:
    if "dims" in obj:
        dom = cod = _dims(obj["dims"])
    else:
        dom, cod = _dims(obj.get("dims_dom")), _dims(obj.get("dims_cod"))
    return EvenMap(dom, cod, _entries(obj.get("entries")))


def pairing_from_obj(obj: dict[str, Any]) -> Pairing:
    conv = convention(obj.get("convention", "super"))
    return Pairing(_dims(obj.get("dims")), _entries(obj.get("entries")), conv)


def spec_from_obj(obj: dict[str, Any]) -> tqft.FunctorSpec:
    fl = flavor(obj.get("flavor", "spin"))
    h = pairing_from_obj(obj["statePairing"])
    tg = target(obj["target"]) if obj.get("target") else None
    theta = obj.get("theta")
    th = matrix_from_obj(theta) if isinstance(theta, dict) else None
    ev = obj.get("ev", "solve")
    if ev == "solve":
        if th is None:
            th = sv.parity(h.space) if fl is Flavor.SPIN else sv.identity_map(h.space)
        ev_map = tqft.solveDuality(h, th, fl, tg)
        if ev_map is None:
            raise FormatError("no evaluation map makes this a dagger functor")
    elif isinstance(ev, dict):
        ev_map = matrix_from_obj(ev)
    else:
        raise FormatError('ev must be a matrix or "solve"')
    return tqft.make_spec(h, th, fl, tg, ev_map)


def load_json(path: str | Path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_pairing(path: str | Path) -> Pairing:
    return pairing_from_obj(load_json(path))


def load_matrix(path: str | Path) -> EvenMap:
    return matrix_from_obj(load_json(path))


def load_spec(path: str | Path) -> tqft.FunctorSpec:
    return spec_from_obj(load_json(path))


# encoding --------------------------------------------------------------------

def matrix_to_obj(m: EvenMap) -> dict:
    return {"dims_dom": [m.dom.p, m.dom.q], "dims_cod": [m.cod.p, m.cod.q],
            "entries": _dump_entries(m.entries)}


def pairing_to_obj(h: Pairing) -> dict:
    return {"dims": [h.space.p, h.space.q], "convention": h.conv.name.lower(),
            "entries": _dump_entries(h.H)}


def spec_to_obj(spec: tqft.FunctorSpec) -> dict:
    return {"flavor": spec.flavor.value, "target": spec.target.name.lower(),
            "statePairing": pairing_to_obj(spec.statePairing),
            "theta": matrix_to_obj(spec.thetaImage), "ev": matrix_to_obj(spec.evImage)}


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2)
