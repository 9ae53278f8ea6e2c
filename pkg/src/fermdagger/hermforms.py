"""Hermitian pairings on super vector spaces and the dagger they induce.

A pairing is stored by its Gram matrix ``H[i][j] = <e_i, e_j>``, linear in
the first argument and conjugate-linear in the second.  The categorical
morphism ``h: V -> dV`` has matrix ``H^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import linalg as la
from . import supervect as sv
from .errors import (ConventionMismatch, DimensionMismatch, NotAPairing,
                     NotInvertible)
from .exactnum import I, ONE, ZERO, Scalar
from .supervect import Convention, EvenMap, SuperDims

SUPER = Convention.SUPER
GRADED = Convention.GRADED


class PositivityClass(Enum):
    SHILB = "shilb"
    SHERM = "sherm"
    SHILB_ODD_NEG = "shilb_odd_neg"


class CompactMode(Enum):
    DAGGER_COMPACT = "dagger_compact"
    FERM_DAGGER_COMPACT = "ferm_dagger_compact"


@dataclass(frozen=True)
class SignatureQuad:
    p1: int
    p2: int
    p3: int
    p4: int

    def swap34(self) -> "SignatureQuad":
        return SignatureQuad(self.p1, self.p2, self.p4, self.p3)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.p1, self.p2, self.p3, self.p4)

    def __str__(self):
        return f"{self.p1},{self.p2},{self.p3},{self.p4}"


@dataclass(frozen=True)
class Pairing:
    space: SuperDims
    H: tuple
    conv: Convention = SUPER

    def __post_init__(self):
        n = self.space.total
        if len(self.H) != n or any(len(r) != n for r in self.H):
            raise DimensionMismatch(f"Gram matrix is not {n}x{n}")
        if not la.is_invertible(self.H):
            raise NotAPairing("Gram matrix is not invertible")

    @classmethod
    def trusted(cls, space: SuperDims, H, conv: Convention = SUPER) -> "Pairing":
        """Skip the invertibility check for Gram matrices known to be invertible."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "H", H)
        object.__setattr__(obj, "conv", conv)
        return obj

    @classmethod
    def of(cls, space: SuperDims, rows, conv: Convention = SUPER) -> "Pairing":
        return cls(space, la.mat(rows), conv)

    @classmethod
    def diagonal(cls, space: SuperDims, entries: Sequence, conv: Convention = SUPER) -> "Pairing":
        return cls(space, la.diag(entries), conv)

    @property
    def morphism(self) -> EvenMap:
        """The map h: V -> dV."""
        return EvenMap(self.space, self.space, la.transpose(self.H))

    def form(self, x: Sequence, y: Sequence) -> Scalar:
        """<x, y> for coordinate vectors x, y."""
        acc = ZERO
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if not yj.is_zero() and not self.H[i][j].is_zero():
                    acc = acc + xi * self.H[i][j] * yj.conj()
        return acc

    def __str__(self):
        return la.format_matrix(self.H)


def pairing_from_morphism(m: EvenMap, conv: Convention) -> Pairing:
    return Pairing(m.dom, la.transpose(m.entries), conv)


def unit_pairing(conv: Convention = SUPER) -> Pairing:
    return Pairing(sv.UNIT, la.identity(1), conv)


# validity ----------------------------------------------------------------------

def _symmetry_ok(h: Pairing) -> bool:
    V, H = h.space, h.H
    n = V.total
    for i in range(n):
        for j in range(n):
            x = H[i][j]
            if V.degree(i) != V.degree(j):
                if not x.is_zero():
                    return False
                continue
            s = -1 if (h.conv is SUPER and V.degree(i) and V.degree(j)) else 1
            if H[j][i] != s * x.conj():
                return False
    return True


def _diagram_ok(h: Pairing) -> bool:
    """dh . eta = h as morphisms V -> dV."""
    try:
        M = h.morphism
    except Exception:
        return False
    lhs = sv.compose(sv.antiInv(M), sv.eta(h.space, h.conv))
    return lhs == M


def checkPairing(h: Pairing) -> bool:
    V = h.space
    if len(h.H) != V.total:
        raise DimensionMismatch("pairing matrix does not match its space")
    for i, row in enumerate(h.H):
        for j, x in enumerate(row):
            if V.degree(i) != V.degree(j) and not x.is_zero():
                return False
    if not la.is_invertible(h.H):
        return False
    ok = _diagram_ok(h)
    # The direct entrywise symmetry test must agree with the diagram test.
    assert ok == _symmetry_ok(h)
    return ok


# dagger and transport ---------------------------------------------------------

def _same_conv(*hs: Pairing) -> Convention:
    convs = {h.conv for h in hs}
    if len(convs) != 1:
        raise ConventionMismatch("pairings use different sign conventions")
    return convs.pop()


def dagger(T: EvenMap, hDom: Pairing, hCod: Pairing) -> EvenMap:
    """hDom^{-1} . dT . hCod, the adjoint of T: dom -> cod."""
    _same_conv(hDom, hCod)
    if T.dom != hDom.space or T.cod != hCod.space:
        raise DimensionMismatch("map does not match the pairings' spaces")
    return sv.compose_all(sv.inverse_map(hDom.morphism), sv.antiInv(T), hCod.morphism)


def _gram(h: Pairing, g: EvenMap):
    return la.matmul_chain(la.transpose(g.entries, rows=g.dom.total), h.H, la.conj_mat(g.entries))


def is_unitary(T: EvenMap, hDom: Pairing, hCod: Pairing) -> bool:
    """T preserves the pairings and is square, hence invertible with T^dagger T = id."""
    _same_conv(hDom, hCod)
    if T.dom != hDom.space or T.cod != hCod.space:
        raise DimensionMismatch("map does not match the pairings' spaces")
    if T.dom.total != T.cod.total:
        return False
    return _gram(hCod, T) == hDom.H


def transfer(h: Pairing, g: EvenMap) -> Pairing:
    """The pairing <g v, g w>_h on dom(g)."""
    if g.cod != h.space:
        raise DimensionMismatch("g does not land in the pairing's space")
    if g.dom.total != g.cod.total or not la.is_invertible(g.entries):
        raise NotInvertible("transfer needs an invertible map")
    return Pairing.trusted(g.dom, _gram(h, g), h.conv)


def tensorPairing(h1: Pairing, h2: Pairing, chi: Convention | None = None) -> Pairing:
    """Pairing on V (x) W given by chi . (h1 (x) h2).

    ``chi`` overrides the convention used for the structure map, which
    models mixing the two sign conventions.
    """
    conv = _same_conv(h1, h2)
    c = sv.chi(h1.space, h2.space, chi if chi is not None else conv)
    M = sv.compose(c, sv.tensor_maps(h1.morphism, h2.morphism))
    return Pairing.trusted(M.dom, la.transpose(M.entries), conv)


@lru_cache(maxsize=None)
def dual_identification(V: SuperDims, conv: Convention) -> EvenMap:
    """The comparison (dV)* -> d(V*) forced by uniqueness of duals.

    Built from ev_{dV}, the conjugate of ev_V, chi and the braiding.
    """
    ev = sv.evStd(V)
    dev = sv.antiInv(ev)                          # 1 -> d(V* (x) V)
    chi_inv = sv.inverse_map(sv.chi(V, V, conv))  # -> d(V*) (x) dV
    leg = sv.compose_all(sv.braid(V, V), chi_inv, dev)   # 1 -> dV (x) d(V*)
    step = sv.tensor_maps(sv.identity_map(V), leg)      # (dV)* -> (dV)* (x) (dV (x) d(V*))
    back = sv.inverse_map(sv.associator(V, V, V))
    return sv.compose_all(sv.tensor_maps(sv.evStd(V), sv.identity_map(V)), back, step)


def dualPairing(h: Pairing) -> Pairing:
    """Pairing on V*: the inverse dual of h followed by (dV)* = d(V*)."""
    inv_dual = sv.inverse_map(sv.dualizeMap(h.morphism))
    M = sv.compose(dual_identification(h.space, h.conv), inv_dual)
    return pairing_from_morphism(M, h.conv)


def conjPairing(h: Pairing) -> Pairing:
    """The pairing (dh)^{-1} on dV."""
    M = sv.inverse_map(sv.antiInv(h.morphism))
    return pairing_from_morphism(M, h.conv)


# signature -----------------------------------------------------------------

def hermitian_inertia(M: Sequence[Sequence[Scalar]]) -> tuple[int, int]:
    """(positive, negative) counts of a Hermitian matrix by exact congruence."""
    A = [list(r) for r in M]
    n = len(A)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if not A[i][i].is_zero()), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active
                         if i != j and not A[i][j].is_zero()), None)
            if pair is None:
                break  # remaining block is zero: degenerate
            i, j = pair
            # shear e_i += t e_j so that the new diagonal entry is 2|A_ij|^2
            t = A[i][j].conj()
            for r in range(n):
                A[r][i] = A[r][i] + A[r][j] * t
            tc = t.conj()
            for c in range(n):
                A[i][c] = A[i][c] + A[j][c] * tc
            k = i
        d = A[k][k]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = A[i][k] / d
            if f.is_zero():
                continue
            fc = f.conj()
            for c in range(n):
                A[i][c] = A[i][c] - f * A[k][c]
            for r in range(n):
                A[r][i] = A[r][i] - fc * A[r][k]
    return pos, neg


def _blocks(h: Pairing):
    p = h.space.p
    even = [row[:p] for row in h.H[:p]]
    odd = [row[p:] for row in h.H[p:]]
    if h.conv is SUPER:
        odd = [[x / I for x in row] for row in odd]
    return even, odd


def signature(h: Pairing) -> SignatureQuad:
    if not checkPairing(h):
        raise NotAPairing("signature of an invalid pairing")
    even, odd = _blocks(h)
    p1, p2 = hermitian_inertia(even)
    p3, p4 = hermitian_inertia(odd)
    return SignatureQuad(p1, p2, p3, p4)


def canonical_pairing(sig: SignatureQuad, conv: Convention = SUPER) -> Pairing:
    """Diagonal pairing with norms +1, -1, then the odd norms for ``sig``."""
    if conv is SUPER:
        odd_pos, odd_neg = I, -I
    else:
        odd_pos, odd_neg = ONE, -ONE
    entries = ([ONE] * sig.p1 + [-ONE] * sig.p2 + [odd_pos] * sig.p3 + [odd_neg] * sig.p4)
    return Pairing.diagonal(SuperDims(sig.p1 + sig.p2, sig.p3 + sig.p4), entries, conv)


def class_signatures(P: PositivityClass, dims: SuperDims) -> list[SignatureQuad]:
    p, q = dims.p, dims.q
    if P is PositivityClass.SHILB:
        return [SignatureQuad(p, 0, q, 0)]
    if P is PositivityClass.SHILB_ODD_NEG:
        return [SignatureQuad(p, 0, 0, q)]
    return [SignatureQuad(a, p - a, b, q - b) for a in range(p + 1) for b in range(q + 1)]


def in_class(h: Pairing, P: PositivityClass) -> bool:
    return checkPairing(h) and signature(h) in class_signatures(P, h.space)


# positivity ------------------------------------------------------------------

def isoPositive(f: EvenMap, h: Pairing, P: PositivityClass) -> bool:
    """Is f = g^dagger g for an isomorphism g into some pairing of class P?"""
    if f.dom != h.space or f.cod != h.space:
        raise DimensionMismatch("f must be an endomorphism of the pairing's space")
    if not la.is_invertible(f.entries):
        return False
    hf = pairing_from_morphism(sv.compose(h.morphism, f), h.conv)
    return in_class(hf, P)


def lambdaAuto(h: Pairing) -> EvenMap:
    """The automorphism of V* built from coev, the braiding and coev^dagger."""
    V = h.space
    coev = sv.coevStd(V)
    hVVs = tensorPairing(h, dualPairing(h))
    coev_dag = dagger(coev, unit_pairing(h.conv), hVVs)   # V (x) V* -> 1
    step1 = sv.tensor_maps(sv.identity_map(V), coev)     # V* -> V* (x) (V (x) V*)
    step2 = sv.inverse_map(sv.associator(V, V, V))       # -> (V* (x) V) (x) V*
    step3 = sv.tensor_maps(sv.braid(V, V), sv.identity_map(V))  # -> (V (x) V*) (x) V*
    step4 = sv.tensor_maps(coev_dag, sv.identity_map(V))       # -> V*
    return sv.compose_all(step4, step3, step2, step1)


def compactness(P: PositivityClass, dims: SuperDims, mode: CompactMode) -> bool:
    """Decide P* = P, or P* = P twisted by parity, at the given dimensions."""
    sigs = class_signatures(P, dims)
    images = set()
    for s in sigs:
        k = dualPairing(canonical_pairing(s))
        if mode is CompactMode.FERM_DAGGER_COMPACT:
            k = pairing_from_morphism(sv.compose(k.morphism, sv.parity(dims)), k.conv)
        if not checkPairing(k):
            return False
        images.add(signature(k))
    return images == set(sigs)


def convEquivalence(h: Pairing, direction: str) -> Pairing:
    """Move a pairing between conventions by the twist i^{-F} or i^F."""
    direction = direction.upper()
    if direction == "SUPER_TO_GRADED":
        if h.conv is not SUPER:
            raise ConventionMismatch("expected a super-convention pairing")
        factor, target = -I, GRADED
    elif direction == "GRADED_TO_SUPER":
        if h.conv is not GRADED:
            raise ConventionMismatch("expected a graded-convention pairing")
        factor, target = I, SUPER
    else:
        raise ValueError(f"unknown direction {direction!r}")
    p = h.space.p
    H = tuple(tuple(x if i < p else factor * x for x in row) for i, row in enumerate(h.H))
    return Pairing(h.space, H, target)


# diagonalization and explicit unitaries ------------------------------------------

def diagonalize(h: Pairing) -> tuple[EvenMap, tuple[Scalar, ...]]:
    """An invertible g with transfer(h, g) diagonal; returns (g, diagonal).

    Transfer along g is the congruence S^* H S with S = conj(g).  Each
    block of H is Hermitian or skew-Hermitian, so eliminating a row entry
    also clears the mirrored column entry.
    """
    n = h.space.total
    A = [list(r) for r in h.H]
    S = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]

    def col_add(i, j, t):
        # column i += t * column j, then row i += conj(t) * row j
        for r in range(n):
            A[r][i] = A[r][i] + A[r][j] * t
            S[r][i] = S[r][i] + S[r][j] * t
        tc = t.conj()
        for c in range(n):
            A[i][c] = A[i][c] + A[j][c] * tc

    for lo, hi in ((0, h.space.p), (h.space.p, n)):
        active = list(range(lo, hi))
        while active:
            k = next((i for i in active if not A[i][i].is_zero()), None)
            if k is None:
                i, j = next((i, j) for i in active for j in active
                            if i != j and not A[i][j].is_zero())
                t = A[i][j].conj()
                if (t * A[i][j] + t.conj() * A[j][i]).is_zero():
                    t = t * I
                col_add(i, j, t)
                k = i
            active.remove(k)
            for i in active:
                f = A[k][i] / A[k][k]
                if not f.is_zero():
                    col_add(i, k, -f)
    g = EvenMap(h.space, h.space, la.conj_mat(tuple(tuple(r) for r in S)))
    d = transfer(h, g)
    return g, tuple(d.H[i][i] for i in range(n))


def _two_squares(n: int) -> tuple[int, int] | None:
    """Integers (x, y) with x^2 + y^2 = n, or None."""
    if n < 0:
        return None
    if n == 0:
        return (0, 0)
    # factor by trial division
    fac: dict[int, int] = {}
    m, p = n, 2
    while p * p <= m:
        while m % p == 0:
            fac[p] = fac.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        fac[m] = fac.get(m, 0) + 1
    x, y = 1, 0  # running Gaussian integer x + yi
    for p, e in fac.items():
        if p % 4 == 3:
            if e % 2:
                return None
            x, y = x * p ** (e // 2), y * p ** (e // 2)
            continue
        if p == 2:
            a, b = 1, 1
        else:
            # find a square root of -1 mod p, then run Euclid (Hermite-Serret)
            c = next(pow(z, (p - 1) // 4, p) for z in range(2, p)
                     if pow(z, (p - 1) // 2, p) == p - 1)
            r0, r1 = p, c
            lim = isqrt(p)
            while r1 > lim:
                r0, r1 = r1, r0 % r1
            a = r1
            b = isqrt(p - a * a)
        for _ in range(e):
            x, y = x * a - y * b, x * b + y * a
    return abs(x), abs(y)


def norm_witness(r: Fraction) -> Scalar | None:
    """A Gaussian rational s with |s|^2 = r, or None."""
    if r <= 0:
        return None
    n, d = r.numerator, r.denominator
    xy = _two_squares(n * d)
    if xy is None:
        return None
    return Scalar(Fraction(xy[0], d), Fraction(xy[1], d))


def unitary_between(h1: Pairing, h2: Pairing) -> EvenMap | None:
    """A unitary (V, h1) -> (V, h2), found by matching diagonal norms.

    Returns None when no matching of norm ratios by Gaussian rationals exists;
    this always happens when the signatures differ.
    """
    _same_conv(h1, h2)
    if h1.space != h2.space:
        return None
    g1, d1 = diagonalize(h1)
    g2, d2 = diagonalize(h2)
    n = h1.space.total
    V = h1.space

    def ok(k, l):
        if V.degree(k) != V.degree(l):
            return None
        ratio = d1[k] / d2[l]
        if not ratio.is_real():
            return None
        return norm_witness(ratio.re)

    cand = {k: {l: s for l in range(n) if (s := ok(k, l)) is not None} for k in range(n)}
    match: dict[int, int] = {}

    def augment(k, seen):
        for l in cand[k]:
            if l in seen:
                continue
            seen.add(l)
            if l not in match or augment(match[l], seen):
                match[l] = k
                return True
        return False

    for k in range(n):
        if not augment(k, set()):
            return None
    rows = [[ZERO] * n for _ in range(n)]
    for l, k in match.items():
        rows[l][k] = cand[k][l]
    c = EvenMap(V, V, tuple(tuple(r) for r in rows))
    # c: (V, d1) -> (V, d2) unitary; g_i: (V, d_i) -> (V, h_i) unitary
    return sv.compose_all(g2, c, sv.inverse_map(g1))
