from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given

from fermdagger import hermforms as hf
from fermdagger import linalg as la
from fermdagger import sampling as smp
from fermdagger import supervect as sv
from fermdagger.errors import ConventionMismatch, DimensionMismatch, NotAPairing
from fermdagger.exactnum import I, ONE, Scalar
from fermdagger.hermforms import CompactMode, Pairing, PositivityClass as PC, SignatureQuad
from fermdagger.supervect import Convention, EvenMap, SuperDims
from fermdagger.verify import lambda_oracle
from conftest import seeds

SUPER, GRADED = Convention.SUPER, Convention.GRADED
EVEN, ODD, MIXED = SuperDims(1, 0), SuperDims(0, 1), SuperDims(1, 1)


def diag(V, entries, conv=SUPER):
    return Pairing.diagonal(V, entries, conv)


@pytest.mark.parametrize("h,ok", [
    (diag(EVEN, [1]), True),
    (diag(ODD, [I]), True),
    (diag(ODD, [I], GRADED), False),
    (diag(MIXED, [1, 1]), False),
    (diag(MIXED, [1, 1], GRADED), True),
    (Pairing.of(SuperDims(2, 0), [[0, 1], [1, 0]]), True),
    (Pairing.of(SuperDims(2, 0), [[0, 1], [2, 0]]), False),
])
def test_check_pairing(h, ok):
    assert hf.checkPairing(h) is ok


def test_singular_gram_rejected():
    with pytest.raises(NotAPairing):
        Pairing.of(SuperDims(2, 0), [[1, 1], [1, 1]])


@pytest.mark.parametrize("a", [Scalar(2, 1), Scalar(0, 3), Scalar(-1)])
def test_dagger_on_odd_lines(a):
    T = EvenMap.of(ODD, ODD, [[a]])
    assert hf.dagger(T, diag(ODD, [I]), diag(ODD, [I])).entries == la.mat([[a.conj()]])
    assert hf.dagger(T, diag(ODD, [I]), diag(ODD, [-I])).entries == la.mat([[-a.conj()]])


def test_parity_self_adjoint():
    h = diag(MIXED, [1, I])
    assert hf.dagger(sv.parity(MIXED), h, h) == sv.parity(MIXED)


def test_transfer_example():
    h2 = hf.transfer(diag(EVEN, [1]), sv.diagonal_map(EVEN, [2]))
    assert h2.H == la.mat([[4]])
    assert hf.signature(h2) == SignatureQuad(1, 0, 0, 0)


@pytest.mark.parametrize("h1,h2,expected", [
    (diag(EVEN, [1]), diag(EVEN, [1]), [[1]]),
    (diag(ODD, [I]), diag(ODD, [I]), [[1]]),
    (diag(ODD, [-I]), diag(ODD, [I]), [[-1]]),
])
def test_tensor_pairing_lines(h1, h2, expected):
    assert hf.tensorPairing(h1, h2).H == la.mat(expected)


def test_mismatched_convention_square_is_negative():
    odd = diag(ODD, [1], GRADED)
    assert hf.tensorPairing(odd, odd, chi=SUPER).H == la.mat([[-1]])
    assert hf.tensorPairing(odd, odd).H == la.mat([[1]])


def test_tensor_convention_mismatch():
    with pytest.raises(ConventionMismatch):
        hf.tensorPairing(diag(EVEN, [1]), diag(EVEN, [1], GRADED))


@pytest.mark.parametrize("h,sig", [
    (diag(MIXED, [1, I]), (1, 0, 0, 1)),
    (diag(EVEN, [1]), (1, 0, 0, 0)),
    (diag(ODD, [-I]), (0, 0, 1, 0)),
])
def test_dual_pairing(h, sig):
    assert hf.signature(hf.dualPairing(h)).as_tuple() == sig


def test_dual_of_real_even_norm():
    assert hf.dualPairing(diag(EVEN, [1])).H == la.mat([[1]])


def test_conj_pairing():
    assert hf.conjPairing(diag(EVEN, [1])).H == la.mat([[1]])
    assert hf.conjPairing(diag(EVEN, [2])).H == la.mat([[Scalar(Fraction(1, 2))]])
    h = diag(ODD, [I])
    k = hf.conjPairing(h)
    assert hf.checkPairing(k)
    assert hf.is_unitary(h.morphism, h, k)


@pytest.mark.parametrize("h,sig", [
    (diag(SuperDims(2, 0), [1, -1]), (1, 1, 0, 0)),
    (Pairing.of(SuperDims(2, 0), [[0, 1], [1, 0]]), (1, 1, 0, 0)),
    (diag(SuperDims(0, 3), [I, -I, I]), (0, 0, 2, 1)),
    (diag(MIXED, [1, I]), (1, 0, 1, 0)),
    (Pairing.of(SuperDims(0, 2), [[0, 1], [-1, 0]]), (0, 0, 1, 1)),
])
def test_signature(h, sig):
    assert hf.signature(h).as_tuple() == sig


def test_signature_rejects_non_pairing():
    with pytest.raises(NotAPairing):
        hf.signature(diag(MIXED, [1, 1]))


@pytest.mark.parametrize("f,h,P,expected", [
    (sv.identity_map(MIXED), diag(MIXED, [1, I]), PC.SHILB, True),
    (sv.parity(MIXED), diag(MIXED, [1, I]), PC.SHILB, False),
    (sv.diagonal_map(EVEN, [-1]), diag(EVEN, [-1]), PC.SHERM, True),
    (sv.diagonal_map(EVEN, [-1]), diag(EVEN, [1]), PC.SHILB, False),
])
def test_iso_positive(f, h, P, expected):
    assert hf.isoPositive(f, h, P) is expected


def test_iso_positive_shape():
    with pytest.raises(DimensionMismatch):
        hf.isoPositive(sv.identity_map(EVEN), diag(MIXED, [1, I]), PC.SHILB)


def test_parity_not_positive_by_witness_search():
    rng = random.Random(3)
    h = diag(MIXED, [1, I])
    for _ in range(300):
        g = smp.rand_invertible(rng, MIXED)
        assert sv.compose(hf.dagger(g, h, h), g) != sv.parity(MIXED)


@pytest.mark.parametrize("h", [
    diag(EVEN, [1]),
    diag(ODD, [I]),
    diag(MIXED, [1, I]),
    diag(SuperDims(1, 2), [2, I, -3 * I]),
    diag(MIXED, [1, 1], GRADED),
])
def test_lambda_matches_oracle(h):
    assert hf.lambdaAuto(h) == lambda_oracle(h)


def test_lambda_examples():
    assert sv.is_identity(hf.lambdaAuto(diag(EVEN, [1])))
    h = diag(ODD, [I])
    lam = hf.lambdaAuto(h)
    assert hf.isoPositive(sv.compose(lam, sv.parity(ODD)), hf.dualPairing(h), PC.SHILB)


@pytest.mark.parametrize("P,dims,mode,expected", [
    (PC.SHILB, MIXED, CompactMode.DAGGER_COMPACT, False),
    (PC.SHILB, MIXED, CompactMode.FERM_DAGGER_COMPACT, True),
    (PC.SHILB, SuperDims(2, 0), CompactMode.DAGGER_COMPACT, True),
    (PC.SHERM, MIXED, CompactMode.DAGGER_COMPACT, True),
    (PC.SHILB_ODD_NEG, MIXED, CompactMode.DAGGER_COMPACT, False),
])
def test_compactness(P, dims, mode, expected):
    assert hf.compactness(P, dims, mode) is expected


def test_conv_equivalence_examples():
    g = hf.convEquivalence(diag(MIXED, [1, I]), "SUPER_TO_GRADED")
    assert g.conv is GRADED and g.H == la.diag([1, 1])
    even = diag(SuperDims(2, 0), [3, -1])
    assert hf.convEquivalence(even, "SUPER_TO_GRADED").H == even.H
    with pytest.raises(ConventionMismatch):
        hf.convEquivalence(g, "SUPER_TO_GRADED")


# properties ----------------------------------------------------------------------

@given(seeds)
def test_adjoint_identity(seed):
    rng = random.Random(seed)
    conv = rng.choice((SUPER, GRADED))
    V, W = smp.rand_dims(rng, 3), smp.rand_dims(rng, 3)
    h1, h2 = smp.rand_pairing(rng, V, conv), smp.rand_pairing(rng, W, conv)
    T = smp.rand_map(rng, V, W)
    Td = hf.dagger(T, h1, h2)
    assert hf.dagger(Td, h2, h1) == T
    for a in range(V.total):
        for b in range(W.total):
            v = [ONE if k == a else 0 * ONE for k in range(V.total)]
            w = [ONE if k == b else 0 * ONE for k in range(W.total)]
            Tv = [r[a] for r in T.entries]
            Tdw = [r[b] for r in Td.entries]
            assert h2.form(Tv, w) == h1.form(v, Tdw)


@given(seeds)
def test_signature_transfer_invariant(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    h = smp.rand_pairing(rng, V)
    g = smp.rand_invertible(rng, V)
    assert hf.signature(hf.transfer(h, g)) == hf.signature(h)


@given(seeds)
def test_dual_swaps_odd_counts(seed):
    rng = random.Random(seed)
    conv = rng.choice((SUPER, GRADED))
    h = smp.rand_pairing(rng, smp.rand_dims(rng, 5), conv)
    assert hf.signature(hf.dualPairing(h)) == hf.signature(h).swap34()


@given(seeds)
def test_tensor_of_shilb_is_shilb(seed):
    rng = random.Random(seed)
    h1 = smp.rand_pairing(rng, smp.rand_dims(rng, 3), SUPER, PC.SHILB)
    h2 = smp.rand_pairing(rng, smp.rand_dims(rng, 3), SUPER, PC.SHILB)
    assert hf.in_class(hf.tensorPairing(h1, h2), PC.SHILB)


@given(seeds)
def test_conv_equivalence_preserves_daggers(seed):
    rng = random.Random(seed)
    V, W = smp.rand_dims(rng, 3), smp.rand_dims(rng, 3)
    h1 = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    h2 = smp.rand_pairing(rng, W, SUPER, PC.SHILB)
    T = smp.rand_map(rng, V, W)
    g1 = hf.convEquivalence(h1, "SUPER_TO_GRADED")
    g2 = hf.convEquivalence(h2, "SUPER_TO_GRADED")
    assert hf.dagger(T, h1, h2) == hf.dagger(T, g1, g2)
    assert hf.convEquivalence(g1, "GRADED_TO_SUPER") == h1
    assert hf.signature(g1) == SignatureQuad(V.p, 0, V.q, 0)


@given(seeds)
def test_equal_signature_gives_unitary(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    sig = smp.rand_signature(rng, V)
    h1 = hf.transfer(hf.canonical_pairing(sig), smp.rand_invertible(rng, V))
    h2 = hf.transfer(hf.canonical_pairing(sig), smp.rand_invertible(rng, V))
    u = hf.unitary_between(h1, h2)
    if u is not None:
        assert hf.is_unitary(u, h1, h2)


@given(seeds)
def test_diagonalize(seed):
    rng = random.Random(seed)
    h = smp.rand_pairing(rng, smp.rand_dims(rng, 5), rng.choice((SUPER, GRADED)))
    g, d = hf.diagonalize(h)
    assert hf.transfer(h, g).H == la.diag(d)


@given(seeds)
def test_self_adjoint_automorphisms_iso_positive_in_sherm(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    h = smp.rand_pairing(rng, V)
    A = smp.rand_map(rng, V, V)
    f = EvenMap(V, V, la.add(A.entries, hf.dagger(A, h, h).entries))
    if la.is_invertible(f.entries):
        assert hf.isoPositive(f, h, PC.SHERM)


@given(seeds)
def test_check_pairing_agrees_with_diagram(seed):
    rng = random.Random(seed)
    V = smp.rand_dims(rng, 4)
    conv = rng.choice((SUPER, GRADED))
    M = smp.rand_invertible(rng, V)
    try:
        h = Pairing(V, M.entries, conv)
    except NotAPairing:
        return
    assert hf._symmetry_ok(h) == hf._diagram_ok(h)
    h = smp.rand_pairing(rng, V, conv)
    assert hf._symmetry_ok(h) and hf._diagram_ok(h)
