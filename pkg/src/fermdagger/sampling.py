"""Seeded random generators for scalars, even maps, pairings and bordisms."""

from __future__ import annotations

import random
from fractions import Fraction

from . import bordism1 as bd
from . import hermforms as hf
from . import linalg as la
from . import supervect as sv
from .exactnum import ZERO, Scalar
from .hermforms import Pairing, PositivityClass, SignatureQuad
from .supervect import Convention, EvenMap, SuperDims


def rand_scalar(rng: random.Random, height: int = 3, gaussian: bool = True) -> Scalar:
    def rat():
        return Fraction(rng.randint(-height, height), rng.randint(1, 2))
    return Scalar(rat(), rat() if gaussian else 0)


def rand_map(rng: random.Random, dom: SuperDims, cod: SuperDims, height: int = 3,
             density: float = 0.8) -> EvenMap:
    rows = []
    for i in range(cod.total):
        row = []
        for j in range(dom.total):
            if cod.degree(i) == dom.degree(j) and rng.random() < density:
                row.append(rand_scalar(rng, height))
            else:
                row.append(ZERO)
        rows.append(tuple(row))
    return EvenMap(dom, cod, tuple(rows))


def rand_invertible(rng: random.Random, V: SuperDims, height: int = 2) -> EvenMap:
    while True:
        g = rand_map(rng, V, V, height)
        if la.is_invertible(g.entries):
            return g


def rand_dims(rng: random.Random, max_total: int = 6, min_total: int = 1) -> SuperDims:
    while True:
        p = rng.randint(0, max_total)
        q = rng.randint(0, max_total - p)
        if p + q >= min_total:
            return SuperDims(p, q)


def rand_signature(rng: random.Random, V: SuperDims,
                   P: PositivityClass = PositivityClass.SHERM) -> SignatureQuad:
    return rng.choice(hf.class_signatures(P, V))


def rand_pairing(rng: random.Random, V: SuperDims, conv: Convention = Convention.SUPER,
                 P: PositivityClass = PositivityClass.SHERM, height: int = 2) -> Pairing:
    """Transfer a canonical representative along a random invertible map."""
    base = hf.canonical_pairing(rand_signature(rng, V, P), conv)
    return hf.transfer(base, rand_invertible(rng, V, height))


def rand_unitary_involution(rng: random.Random, h: Pairing) -> tuple[EvenMap, EvenMap]:
    """A unitary involution for h together with the signed diagonal it conjugates.

    transfer(h, g) is diagonal, so g: (V, diag) -> (V, h) is unitary and any
    signed diagonal D gives the unitary involution g D g^{-1}.
    """
    V = h.space
    g, _ = hf.diagonalize(h)
    D = sv.diagonal_map(V, [rng.choice((1, -1)) for _ in range(V.total)])
    return sv.compose_all(g, D, sv.inverse_map(g)), D


def rand_word(rng: random.Random, max_len: int = 4, min_len: int = 0) -> tuple:
    n = rng.randint(min_len, max_len)
    return tuple(rng.choice("pd") for _ in range(n))


def rand_bordism(rng: random.Random, src, tgt, flavor=bd.SPIN,
                 max_circles: int = 1) -> bd.BordMorphism:
    """A uniformly random matching between the positive and negative endpoints."""
    plus, minus = [], []
    for i, x in enumerate(src):
        (minus if x == bd.PT else plus).append(("s", i))
    for i, x in enumerate(tgt):
        (plus if x == bd.PT else minus).append(("t", i))
    if len(plus) != len(minus):
        raise ValueError("words admit no bordism")
    rng.shuffle(minus)
    spin = flavor is bd.SPIN
    strands = [(a, b, rng.randint(0, 1) if spin else 0) for a, b in zip(plus, minus)]
    per = rng.randint(0, max_circles)
    ap = rng.randint(0, max_circles) if spin else 0
    return bd.make(src, tgt, strands, per, ap, flavor)


def rand_target_word(rng: random.Random, src, max_len: int = 4) -> tuple:
    """A word admitting bordisms from ``src``: equal charge p - d."""
    charge = sum(1 if x == bd.PT else -1 for x in src)
    while True:
        w = rand_word(rng, max_len)
        if sum(1 if x == bd.PT else -1 for x in w) == charge:
            return w
