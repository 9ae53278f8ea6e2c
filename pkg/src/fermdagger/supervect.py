"""Finite-dimensional super vector spaces and even maps.

A space of dimension ``(p|q)`` has slots ``0..p-1`` even and ``p..p+q-1``
odd.  The tensor product orders the product basis lexicographically and then
stably moves even slots in front of odd ones.  That ordering is not strictly
associative, so :func:`associator` supplies the explicit permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from . import linalg as la
from .errors import DimensionMismatch, MissingSecondSpace, NotEven
from .exactnum import I, ONE, ZERO


class Convention(Enum):
    SUPER = "super"
    GRADED = "graded"


@dataclass(frozen=True, order=True)
class SuperDims:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("dimensions must be nonnegative")

    @property
    def total(self) -> int:
        return self.p + self.q

    def degree(self, k: int) -> int:
        return 0 if k < self.p else 1

    def degrees(self) -> tuple[int, ...]:
        return (0,) * self.p + (1,) * self.q

    def __str__(self):
        return f"({self.p}|{self.q})"


UNIT = SuperDims(1, 0)


@dataclass(frozen=True)
class EvenMap:
    dom: SuperDims
    cod: SuperDims
    entries: tuple

    def __post_init__(self):
        m = self.entries
        if len(m) != self.cod.total or any(len(row) != self.dom.total for row in m):
            raise DimensionMismatch(
                f"entries do not have shape {self.cod.total}x{self.dom.total}")
        for i, row in enumerate(m):
            di = self.cod.degree(i)
            for j, x in enumerate(row):
                if self.dom.degree(j) != di and not x.is_zero():
                    raise NotEven(f"entry ({i},{j}) links slots of different degree")

    @classmethod
    def of(cls, dom: SuperDims, cod: SuperDims, rows) -> "EvenMap":
        return cls(dom, cod, la.mat(rows))

    def __matmul__(self, other: "EvenMap") -> "EvenMap":
        return compose(self, other)

    def __str__(self):
        return la.format_matrix(self.entries)


@lru_cache(maxsize=None)
def identity_map(V: SuperDims) -> EvenMap:
    return EvenMap(V, V, la.identity(V.total))


def diagonal_map(V: SuperDims, entries: Sequence) -> EvenMap:
    return EvenMap(V, V, la.diag(entries))


def compose(g: EvenMap, f: EvenMap) -> EvenMap:
    """g after f."""
    if f.cod != g.dom:
        raise DimensionMismatch(f"cannot compose {g.dom}->{g.cod} after {f.dom}->{f.cod}")
    return EvenMap(f.dom, g.cod, la.matmul(g.entries, f.entries, cols=f.dom.total))


def compose_all(*maps: EvenMap) -> EvenMap:
    """compose_all(a, b, c) = a after b after c."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def inverse_map(f: EvenMap) -> EvenMap:
    return EvenMap(f.cod, f.dom, la.inverse(f.entries))


def scalar_map(c) -> EvenMap:
    return EvenMap(UNIT, UNIT, la.mat([[c]]))


# tensor products --------------------------------------------------------------

@lru_cache(maxsize=None)
def _tensor_layout(V: SuperDims, W: SuperDims):
    """Graded slot order of V (x) W and its inverse, in raw Kronecker indices."""
    nw = W.total
    raw = [(a * nw + b, (V.degree(a) + W.degree(b)) % 2)
           for a in range(V.total) for b in range(nw)]
    order = tuple(r for r, _ in sorted(raw, key=lambda t: t[1]))
    pos = [0] * len(order)
    for k, r in enumerate(order):
        pos[r] = k
    even = sum(1 for _, d in raw if d == 0)
    return SuperDims(even, len(raw) - even), order, tuple(pos)


def tensor_dims(V: SuperDims, W: SuperDims) -> SuperDims:
    return _tensor_layout(V, W)[0]


def slot(V: SuperDims, W: SuperDims, a: int, b: int) -> int:
    """Graded slot of e_a (x) f_b in V (x) W."""
    return _tensor_layout(V, W)[2][a * W.total + b]


def unslot(V: SuperDims, W: SuperDims, k: int) -> tuple[int, int]:
    return divmod(_tensor_layout(V, W)[1][k], W.total)


def tensor(a, b):
    """Tensor product of two SuperDims or of two EvenMaps (no Koszul sign)."""
    if isinstance(a, SuperDims) and isinstance(b, SuperDims):
        return tensor_dims(a, b)
    if isinstance(a, EvenMap) and isinstance(b, EvenMap):
        return tensor_maps(a, b)
    raise TypeError("tensor expects two SuperDims or two EvenMaps")


def tensor_maps(f: EvenMap, g: EvenMap) -> EvenMap:
    dom = tensor_dims(f.dom, g.dom)
    cod = tensor_dims(f.cod, g.cod)
    _, dorder, _ = _tensor_layout(f.dom, g.dom)
    _, corder, _ = _tensor_layout(f.cod, g.cod)
    ng, mg = g.cod.total, g.dom.total
    F, G = f.entries, g.entries
    rows = []
    for r in corder:
        i, k = divmod(r, ng)
        fi, gk = F[i], G[k]
        row = []
        for c in dorder:
            j, l = divmod(c, mg)
            x, y = fi[j], gk[l]
            row.append(ZERO if x.is_zero() or y.is_zero() else x * y)
        rows.append(tuple(row))
    return EvenMap(dom, cod, tuple(rows))


def tensor_many(items: Sequence):
    """Left-folded tensor product ((a (x) b) (x) c) ...; empty gives the unit."""
    if not items:
        return UNIT
    out = items[0]
    for x in items[1:]:
        out = tensor(out, x)
    return out


def tensor_many_maps(maps: Sequence[EvenMap]) -> EvenMap:
    if not maps:
        return identity_map(UNIT)
    out = maps[0]
    for m in maps[1:]:
        out = tensor_maps(out, m)
    return out


@lru_cache(maxsize=None)
def fold_layout(factors: tuple) -> tuple[SuperDims, dict]:
    """Left-folded tensor of ``factors`` with a map multi-index -> slot."""
    if not factors:
        return UNIT, {(): 0}
    dims = factors[0]
    table = {(a,): a for a in range(dims.total)}
    for W in factors[1:]:
        new = {}
        for idx, k in table.items():
            for b in range(W.total):
                new[idx + (b,)] = slot(dims, W, k, b)
        dims = tensor_dims(dims, W)
        table = new
    return dims, table


def permute_factors(factors: Sequence[SuperDims], perm: Sequence[int]) -> EvenMap:
    """Koszul-signed map V_0 (x) ... (x) V_{n-1} -> V_perm[0] (x) ... (x) V_perm[n-1].

    Both sides are left-folded tensor products.
    """
    factors = tuple(factors)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(factors))):
        raise ValueError("not a permutation")
    dom, dtable = fold_layout(factors)
    cod, ctable = fold_layout(tuple(factors[k] for k in perm))
    n = len(factors)
    rows = [[ZERO] * dom.total for _ in range(cod.total)]
    for idx, j in dtable.items():
        degs = [factors[k].degree(idx[k]) for k in range(n)]
        sign = 0
        # an inversion of the output order swaps two factors past each other
        for x in range(n):
            for y in range(x + 1, n):
                if perm[x] > perm[y]:
                    sign += degs[perm[x]] * degs[perm[y]]
        new_idx = tuple(idx[k] for k in perm)
        rows[ctable[new_idx]][j] = -ONE if sign % 2 else ONE
    return EvenMap(dom, cod, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def braid(V: SuperDims, W: SuperDims) -> EvenMap:
    """v (x) w -> (-1)^{|v||w|} w (x) v."""
    dom = tensor_dims(V, W)
    cod = tensor_dims(W, V)
    rows = [[ZERO] * dom.total for _ in range(cod.total)]
    for a in range(V.total):
        for b in range(W.total):
            s = -ONE if V.degree(a) and W.degree(b) else ONE
            rows[slot(W, V, b, a)][slot(V, W, a, b)] = s
    return EvenMap(dom, cod, tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def associator(U: SuperDims, V: SuperDims, W: SuperDims) -> EvenMap:
    """(U (x) V) (x) W -> U (x) (V (x) W); a permutation matrix."""
    UV = tensor_dims(U, V)
    VW = tensor_dims(V, W)
    dom = tensor_dims(UV, W)
    cod = tensor_dims(U, VW)
    rows = [[ZERO] * dom.total for _ in range(cod.total)]
    for a in range(U.total):
        for b in range(V.total):
            for c in range(W.total):
                src = slot(UV, W, slot(U, V, a, b), c)
                dst = slot(U, VW, a, slot(V, W, b, c))
                rows[dst][src] = ONE
    return EvenMap(dom, cod, tuple(tuple(r) for r in rows))


# dual and conjugate -----------------------------------------------------------

def dualizeMap(T: EvenMap) -> EvenMap:
    """T^*: cod* -> dom*, the transpose."""
    return EvenMap(T.cod, T.dom, la.transpose(T.entries, rows=T.dom.total))


def conjugateMap(T: EvenMap) -> EvenMap:
    return EvenMap(T.dom, T.cod, la.conj_mat(T.entries))


def antiInv(T: EvenMap) -> EvenMap:
    """Action of d = conj-dual on morphisms: the conjugate transpose."""
    return EvenMap(T.cod, T.dom, la.conj_mat(la.transpose(T.entries, rows=T.dom.total)))


def d_obj(V: SuperDims) -> SuperDims:
    return V


# structure isomorphisms -----------------------------------------------------

@lru_cache(maxsize=None)
def parity(V: SuperDims) -> EvenMap:
    return diagonal_map(V, [1] * V.p + [-1] * V.q)


@lru_cache(maxsize=None)
def iF(V: SuperDims) -> EvenMap:
    return diagonal_map(V, [ONE] * V.p + [I] * V.q)


@lru_cache(maxsize=None)
def eta(V: SuperDims, conv: Convention = Convention.SUPER) -> EvenMap:
    """V -> d^2 V.  The Koszul sign pairs an odd functional with an odd vector."""
    if conv is Convention.SUPER:
        return parity(V)
    return identity_map(V)


@lru_cache(maxsize=None)
def chi(V: SuperDims, W: SuperDims, conv: Convention = Convention.SUPER) -> EvenMap:
    """dV (x) dW -> d(V (x) W)."""
    VW = tensor_dims(V, W)
    if conv is Convention.GRADED:
        return identity_map(VW)
    signs = [ONE] * VW.total
    for a in range(V.total):
        for b in range(W.total):
            if V.degree(a) and W.degree(b):
                signs[slot(V, W, a, b)] = -ONE
    return diagonal_map(VW, signs)


@lru_cache(maxsize=None)
def evStd(V: SuperDims) -> EvenMap:
    """V* (x) V -> 1, f_a (x) e_b -> delta_ab."""
    VV = tensor_dims(V, V)
    row = [ZERO] * VV.total
    for a in range(V.total):
        row[slot(V, V, a, a)] = ONE
    return EvenMap(VV, UNIT, (tuple(row),))


@lru_cache(maxsize=None)
def coevStd(V: SuperDims) -> EvenMap:
    """1 -> V (x) V*, 1 -> sum_b e_b (x) f_b."""
    VV = tensor_dims(V, V)
    col = [ZERO] * VV.total
    for b in range(V.total):
        col[slot(V, V, b, b)] = ONE
    return EvenMap(UNIT, VV, tuple((x,) for x in col))


def structureIso(kind: str, V: SuperDims, W: SuperDims | None = None,
                 conv: Convention = Convention.SUPER) -> EvenMap:
    kind = kind.lower()
    if kind == "eta":
        return eta(V, conv)
    if kind == "chi":
        if W is None:
            raise MissingSecondSpace("chi needs two spaces")
        return chi(V, W, conv)
    if kind == "parity":
        return parity(V)
    if kind == "if":
        return iF(V)
    if kind == "evstd":
        return evStd(V)
    if kind == "coevstd":
        return coevStd(V)
    raise ValueError(f"unknown structure isomorphism {kind!r}")


def is_identity(f: EvenMap) -> bool:
    return f.dom == f.cod and f.entries == la.identity(f.dom.total)


def zigzag_left(V: SuperDims, ev: EvenMap, coev: EvenMap) -> EvenMap:
    """V -> (V (x) V*) (x) V -> V (x) (V* (x) V) -> V."""
    return compose_all(tensor_maps(identity_map(V), ev),
                       associator(V, V, V),
                       tensor_maps(coev, identity_map(V)))


def zigzag_right(V: SuperDims, ev: EvenMap, coev: EvenMap) -> EvenMap:
    """V* -> V* (x) (V (x) V*) -> (V* (x) V) (x) V* -> V*."""
    return compose_all(tensor_maps(ev, identity_map(V)),
                       inverse_map(associator(V, V, V)),
                       tensor_maps(identity_map(V), coev))
