from __future__ import annotations

import json

import pytest

from fermdagger import formats as fmt
from fermdagger import hermforms as hf
from fermdagger import supervect as sv
from fermdagger import tqft
from fermdagger.bordism1 import ORIENTED
from fermdagger.exactnum import I
from fermdagger.hermforms import Pairing
from fermdagger.supervect import Convention, EvenMap, SuperDims

MIXED = SuperDims(1, 1)


def test_pairing_round_trip():
    h = Pairing.diagonal(SuperDims(1, 2), [2, I, -3 * I])
    obj = fmt.pairing_to_obj(h)
    assert obj["convention"] == "super" and obj["entries"][1][1] == "i"
    assert fmt.pairing_from_obj(json.loads(fmt.dumps(obj))) == h


def test_matrix_round_trip():
    m = EvenMap.of(MIXED, SuperDims(2, 1), [[1, 0], [I / 2, 0], [0, -1]])
    assert fmt.matrix_from_obj(fmt.matrix_to_obj(m)) == m
    assert fmt.matrix_from_obj({"dims": [1, 1], "entries": [["1", "0"], ["0", "1"]]}) == \
        sv.identity_map(MIXED)


def test_spec_solve():
    obj = {"flavor": "oriented", "target": "sherm",
           "statePairing": {"dims": [0, 1], "convention": "super", "entries": [["-i"]]},
           "theta": None, "ev": "solve"}
    spec = fmt.spec_from_obj(obj)
    assert spec.flavor is ORIENTED
    rep = tqft.validate(spec)
    assert rep.ok and not rep.isEquivariant
    again = fmt.spec_from_obj(json.loads(fmt.dumps(fmt.spec_to_obj(spec))))
    assert again == spec


def test_unsolvable_spec():
    obj = {"flavor": "spin", "target": "shilb",
           "statePairing": {"dims": [1, 1], "entries": [["1", "0"], ["0", "i"]]},
           "theta": {"dims": [1, 1], "entries": [["1", "0"], ["0", "1"]]}, "ev": "solve"}
    with pytest.raises(fmt.FormatError):
        fmt.spec_from_obj(obj)


@pytest.mark.parametrize("obj", [
    {"dims": [1], "entries": [["1"]]},
    {"dims": [1, 0], "entries": "1"},
    {"dims": [1, 0], "convention": "weird", "entries": [["1"]]},
])
def test_bad_pairings(obj):
    with pytest.raises(fmt.FormatError):
        fmt.pairing_from_obj(obj)


def test_graded_convention():
    h = fmt.pairing_from_obj({"dims": [0, 1], "convention": "graded", "entries": [["1"]]})
    assert h.conv is Convention.GRADED and hf.checkPairing(h)
