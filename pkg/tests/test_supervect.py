from __future__ import annotations

import random

import pytest
from hypothesis import given

from fermdagger import linalg as la
from fermdagger import sampling as smp
from fermdagger import supervect as sv
from fermdagger.errors import DimensionMismatch, MissingSecondSpace, NotEven
from fermdagger.exactnum import I
from fermdagger.supervect import Convention, EvenMap, SuperDims
from conftest import seeds

SUPER, GRADED = Convention.SUPER, Convention.GRADED
EVEN, ODD, MIXED = SuperDims(1, 0), SuperDims(0, 1), SuperDims(1, 1)


@pytest.mark.parametrize("V,W,expected", [
    (EVEN, EVEN, EVEN),
    (ODD, ODD, EVEN),
    (MIXED, MIXED, SuperDims(2, 2)),
    (SuperDims(2, 1), SuperDims(1, 3), SuperDims(5, 7)),
])
def test_tensor_dims(V, W, expected):
    assert sv.tensor(V, W) == expected


def test_tensor_of_identities():
    assert sv.tensor(sv.identity_map(MIXED), sv.identity_map(MIXED)) == sv.identity_map(SuperDims(2, 2))


@pytest.mark.parametrize("V,W,expected", [
    (EVEN, EVEN, [[1]]),
    (ODD, ODD, [[-1]]),
])
def test_braid_small(V, W, expected):
    assert sv.braid(V, W).entries == la.mat(expected)


def test_braid_mixed_with_even_has_no_signs():
    B = sv.braid(MIXED, EVEN)
    assert all(x in (0, 1) for row in B.entries for x in row)
    assert la.rank(B.entries) == 2


def test_uneven_map_rejected():
    with pytest.raises(NotEven):
        EvenMap(MIXED, MIXED, la.mat([[1, 1], [0, 1]]))


def test_shape_checked():
    with pytest.raises(DimensionMismatch):
        EvenMap(MIXED, EVEN, la.mat([[1, 0], [0, 1]]))


@pytest.mark.parametrize("T,expected", [
    ([[0, 1], [0, 0]], [[0, 0], [1, 0]]),
    ([[1, 2], [3, 4]], [[1, 3], [2, 4]]),
])
def test_dualize_is_transpose(T, expected):
    V = SuperDims(2, 0)
    assert sv.dualizeMap(EvenMap.of(V, V, T)).entries == la.mat(expected)


def test_conjugate_and_anti_involution():
    assert sv.conjugateMap(EvenMap.of(ODD, ODD, [[I]])).entries == la.mat([[-I]])
    assert sv.antiInv(EvenMap.of(ODD, ODD, [[I]])).entries == la.mat([[-I]])
    T = EvenMap.of(MIXED, MIXED, [[1, 0], [0, I]])
    assert sv.antiInv(T).entries == la.mat([[1, 0], [0, -I]])


def test_structure_isos():
    assert sv.parity(MIXED).entries == la.diag([1, -1])
    assert sv.compose(sv.iF(ODD), sv.iF(ODD)) == sv.parity(ODD)
    assert sv.eta(ODD, SUPER).entries == la.mat([[-1]])
    assert sv.eta(ODD, GRADED).entries == la.mat([[1]])
    with pytest.raises(MissingSecondSpace):
        sv.structureIso("chi", MIXED)


def test_iF_is_not_monoidal():
    lhs = sv.iF(sv.tensor(ODD, ODD))
    rhs = sv.tensor(sv.iF(ODD), sv.iF(ODD))
    assert lhs.entries == la.mat([[1]]) and rhs.entries == la.mat([[-1]])


@given(seeds)
def test_zigzags(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    ev, coev = sv.evStd(V), sv.coevStd(V)
    assert sv.is_identity(sv.zigzag_left(V, ev, coev))
    assert sv.is_identity(sv.zigzag_right(V, ev, coev))


@given(seeds)
def test_braid_symmetry_and_naturality(seed):
    rng = random.Random(seed)
    V, W = smp.rand_dims(rng, 3), smp.rand_dims(rng, 3)
    assert sv.is_identity(sv.compose(sv.braid(W, V), sv.braid(V, W)))
    T, S = smp.rand_map(rng, V, V), smp.rand_map(rng, W, W)
    assert sv.compose(sv.braid(V, W), sv.tensor(T, S)) == \
        sv.compose(sv.tensor(S, T), sv.braid(V, W))


@given(seeds)
def test_associator_natural(seed):
    rng = random.Random(seed)
    U, V, W = (smp.rand_dims(rng, 2) for _ in range(3))
    f, g, h = (smp.rand_map(rng, X, X) for X in (U, V, W))
    a = sv.associator(U, V, W)
    assert sv.compose(a, sv.tensor(sv.tensor(f, g), h)) == \
        sv.compose(sv.tensor(f, sv.tensor(g, h)), a)


@given(seeds)
def test_eta_coherence(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 5)
    for conv in (SUPER, GRADED):
        assert sv.is_identity(sv.compose(sv.antiInv(sv.eta(V, conv)), sv.eta(V, conv)))


@given(seeds)
def test_parity_is_monoidal(seed):
    rng = random.Random(seed)
    V, W = smp.rand_dims(rng, 3), smp.rand_dims(rng, 3)
    assert sv.parity(sv.tensor(V, W)) == sv.tensor(sv.parity(V), sv.parity(W))


@given(seeds)
def test_contravariance(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    S, T = smp.rand_map(rng, V, V), smp.rand_map(rng, V, V)
    assert sv.antiInv(sv.compose(S, T)) == sv.compose(sv.antiInv(T), sv.antiInv(S))
    assert sv.dualizeMap(sv.compose(S, T)) == sv.compose(sv.dualizeMap(T), sv.dualizeMap(S))
    assert sv.conjugateMap(sv.conjugateMap(S)) == S


def test_compose_mismatch():
    with pytest.raises(DimensionMismatch):
        sv.compose(sv.identity_map(EVEN), sv.identity_map(MIXED))
