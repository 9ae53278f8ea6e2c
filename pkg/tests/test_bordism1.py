from __future__ import annotations

import random

import pytest
from hypothesis import given

from fermdagger import bordism1 as bd
from fermdagger import sampling as smp
from fermdagger.bordism1 import ORIENTED, SPIN
from fermdagger.errors import MalformedBordism, ObjectMismatch, ThetaNotInOriented
from fermdagger.verify import coev_word, ev_word, word_dual
from conftest import seeds

ID = bd.identity("p")
THETA = bd.theta()
EV, COEV = bd.ev(), bd.coev()
EMPTY = bd.identity("")


def closure(flavor=SPIN):
    return bd.compose_all(bd.ev(flavor), bd.braidNF("p", "d", flavor), bd.coev(flavor))


def test_theta_involution():
    assert bd.compose(THETA, THETA) == ID


def test_zigzags():
    left = bd.compose_all(bd.tensorBord(ID, EV), bd.tensorBord(COEV, ID))
    right = bd.compose_all(bd.tensorBord(EV, bd.identity("d")),
                           bd.tensorBord(bd.identity("d"), COEV))
    assert left == ID
    assert right == bd.identity("d")


def test_theta_absent_in_oriented():
    with pytest.raises(ThetaNotInOriented):
        bd.generator("THETA", ORIENTED)
    with pytest.raises(ThetaNotInOriented):
        bd.circle(True, ORIENTED)


def test_double_of_ev_is_antiperiodic():
    assert bd.compose(EV, bd.daggerBord(EV)) == bd.circle(True)


def test_closure_of_identity_is_periodic():
    assert closure() == bd.circle(False)
    assert closure(ORIENTED) == bd.circle(False, ORIENTED)


def test_identity_composition():
    assert bd.compose(ID, ID) == ID


def test_compose_mismatch():
    with pytest.raises(ObjectMismatch):
        bd.compose(EV, COEV)
    with pytest.raises(ObjectMismatch):
        bd.compose(bd.identity("p", ORIENTED), ID)


def test_tensor_examples():
    assert bd.tensorBord(ID, ID) == bd.identity("pp")
    m = bd.tensorBord(EV, COEV)
    assert len(m.strands) == 2 and m.src == ("d", "p") and m.tgt == ("p", "d")
    assert bd.tensorBord(EMPTY, EV) == EV == bd.tensorBord(EV, EMPTY)


def test_dagger_examples():
    spin = bd.compose_all(bd.tensorBord(bd.theta("d"), ID), bd.braidNF("p", "d"), COEV)
    assert bd.daggerBord(EV) == spin
    assert bd.daggerBord(THETA) == THETA
    ev_o = bd.ev(ORIENTED)
    assert bd.daggerBord(ev_o) == bd.compose(bd.braidNF("p", "d", ORIENTED), bd.coev(ORIENTED))


def test_flip_action():
    assert bd.flipAction("") == EMPTY
    assert bd.flipAction("p") == THETA
    f = bd.flipAction("pp")
    assert bd.compose(f, f) == bd.identity("pp")


@pytest.mark.parametrize("strands", [
    [(("s", 0), ("t", 0), 0), (("s", 0), ("t", 1), 0)],
    [(("s", 0), ("s", 1), 0)],
    [(("s", 0), ("t", 0), 2)],
])
def test_malformed(strands):
    with pytest.raises(MalformedBordism):
        bd.BordMorphism(("p", "p"), ("p", "p"), tuple(strands))


def test_polarity_enforced():
    with pytest.raises(MalformedBordism):
        bd.make("p", "d", [(("s", 0), ("t", 0), 0)])


def test_ev_coev_for_words():
    for w in ["", "p", "pd", "ddp"]:
        w = tuple(w)
        ev, coev = ev_word(w), coev_word(w)
        ident = bd.identity(w)
        zig = bd.compose_all(bd.tensorBord(ident, ev), bd.tensorBord(coev, ident))
        assert zig == ident
        assert ev.src == word_dual(w) + w


def _composable(rng, flavor=SPIN):
    A = smp.rand_word(rng, 4)
    B = smp.rand_target_word(rng, A, 4)
    C = smp.rand_target_word(rng, B, 4)
    return smp.rand_bordism(rng, A, B, flavor), smp.rand_bordism(rng, B, C, flavor)


@given(seeds)
def test_dagger_category_axioms(seed):
    rng = random.Random(seed)
    flavor = rng.choice((SPIN, ORIENTED))
    f, g = _composable(rng, flavor)
    dag = bd.daggerBord
    assert dag(dag(f)) == f
    assert dag(bd.compose(g, f)) == bd.compose(dag(f), dag(g))
    assert dag(bd.identity(f.src, flavor)) == bd.identity(f.src, flavor)
    assert dag(bd.tensorBord(f, g)) == bd.tensorBord(dag(f), dag(g))


@given(seeds)
def test_category_axioms(seed):
    rng = random.Random(seed)
    f, g = _composable(rng)
    h = smp.rand_bordism(rng, g.tgt, smp.rand_target_word(rng, g.tgt, 4))
    assert bd.compose(h, bd.compose(g, f)) == bd.compose(bd.compose(h, g), f)
    assert bd.compose(f, bd.identity(f.src)) == f == bd.compose(bd.identity(f.tgt), f)


@given(seeds)
def test_braid_unitary(seed):
    rng = random.Random(seed)
    a, b = smp.rand_word(rng, 3), smp.rand_word(rng, 3)
    br = bd.braidNF(a, b)
    assert bd.compose(bd.daggerBord(br), br) == bd.identity(a + b)
    assert bd.compose(bd.braidNF(b, a), br) == bd.identity(a + b)


@given(seeds)
def test_theta_slides(seed):
    rng = random.Random(seed)
    A = smp.rand_word(rng, 4)
    B = smp.rand_target_word(rng, A, 4)
    f = smp.rand_bordism(rng, A, B)
    lhs = bd.compose(bd.theta(B), f)
    rhs = bd.compose(f, bd.theta(A))
    assert lhs == rhs


@given(seeds)
def test_fermionic_compactness_relation(seed):
    rng = random.Random(seed)
    w = smp.rand_word(rng, 4)
    ev = ev_word(w)
    dual = word_dual(w)
    twisted = bd.compose_all(bd.tensorBord(bd.theta(dual), bd.identity(w)),
                             bd.braidNF(w, dual), coev_word(w))
    assert bd.daggerBord(ev) == twisted
    ev_o = ev_word(w, ORIENTED)
    assert bd.daggerBord(ev_o) == bd.compose(bd.braidNF(w, dual, ORIENTED), coev_word(w, ORIENTED))


@given(seeds)
def test_decompose_orders_are_permutations(seed):
    rng = random.Random(seed)
    f, _ = _composable(rng)
    dec = bd.decompose(f)
    assert sorted(dec.src_order) == list(range(len(f.src)))
    assert sorted(dec.tgt_order) == list(range(len(f.tgt)))
    assert bd.inverse_order(bd.inverse_order(dec.tgt_order)) == dec.tgt_order
