"""Candidate functors from the bordism model into super Hermitian spaces.

A point ``p`` goes to ``(V, h)`` and its dual ``d`` to ``(V*, K)``.  Words go
to left-folded tensor products.  The pairing ``K`` is never supplied: it is
the unique pairing for which the image of the evaluation has the dagger
that the bordism relation demands, and the functor exists exactly when
``K`` is a legitimate pairing of the target class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import bordism1 as bd
from . import hermforms as hf
from . import linalg as la
from . import supervect as sv
from .bordism1 import ORIENTED, SPIN, BordMorphism, Flavor
from .errors import NotAValidFunctor, NotEven, NotInvertible, NotUnitaryInvolution, NotAPairing
from .exactnum import ONE, ZERO, I
from .hermforms import Pairing, PositivityClass
from .supervect import Convention, EvenMap, SuperDims


@dataclass(frozen=True)
class FunctorSpec:
    flavor: Flavor
    target: PositivityClass
    statePairing: Pairing
    thetaImage: EvenMap
    evImage: EvenMap

    @property
    def space(self) -> SuperDims:
        return self.statePairing.space


@dataclass(frozen=True)
class Failure:
    generator: str
    expected: EvenMap | None
    actual: EvenMap | None
    message: str = ""


@dataclass
class ValidationReport:
    isMonoidal: bool
    isDagger: bool
    isEquivariant: bool
    failures: list = field(default_factory=list)
    dualPairing: Pairing | None = None
    regradedEquivariant: bool | None = None

    @property
    def ok(self) -> bool:
        return self.isMonoidal and self.isDagger


# duality data ------------------------------------------------------------------

def ev_matrix(ev: EvenMap, V: SuperDims) -> tuple:
    """E[a][b] = ev(f_a (x) e_b)."""
    row = ev.entries[0]
    return tuple(tuple(row[sv.slot(V, V, a, b)] for b in range(V.total))
                 for a in range(V.total))


def ev_from_matrix(E, V: SuperDims) -> EvenMap:
    VV = sv.tensor_dims(V, V)
    row = [ZERO] * VV.total
    for a in range(V.total):
        for b in range(V.total):
            row[sv.slot(V, V, a, b)] = E[a][b]
    return EvenMap(VV, sv.UNIT, (tuple(row),))


def coev_from_ev(ev: EvenMap, V: SuperDims) -> EvenMap:
    """The unique coevaluation satisfying the zigzag identities with ev."""
    C = la.inverse(ev_matrix(ev, V))
    VV = sv.tensor_dims(V, V)
    col = [ZERO] * VV.total
    for b in range(V.total):
        for a in range(V.total):
            col[sv.slot(V, V, b, a)] = C[b][a]
    return EvenMap(sv.UNIT, VV, tuple((x,) for x in col))


def dual_map(T: EvenMap, E) -> EvenMap:
    """The map V* -> V* with ev(T^* x (x) y) = ev(x (x) T y)."""
    M = la.matmul_chain(E, T.entries, la.inverse(E))
    return EvenMap(T.dom, T.cod, la.transpose(M))


def _elbow(V: SuperDims, theta: EvenMap, coev: EvenMap, flavor: Flavor) -> EvenMap:
    """1 -> V* (x) V: the braided coevaluation, with the flip on the V leg in spin."""
    if flavor is SPIN:
        coev = sv.compose(sv.tensor_maps(theta, sv.identity_map(V)), coev)
    return sv.compose(sv.braid(V, V), coev)


def solve_dual_pairing(h: Pairing, theta: EvenMap, ev: EvenMap, flavor: Flavor) -> Pairing | None:
    """The pairing K on V* with dagger(ev) equal to the braided coevaluation.

    From chi (M_K (x) M_h) X = d(ev) one gets M_K Xm M_h^T = Ym, where Xm and
    Ym are X and chi^{-1} d(ev) read as matrices on V* x V.  None when the
    solution is not a valid super Hermitian pairing.
    """
    V = h.space
    X = _elbow(V, theta, coev_from_ev(ev, V), flavor)
    Y = sv.compose(sv.inverse_map(sv.chi(V, V, h.conv)), sv.antiInv(ev))
    Xm = ev_matrix(sv.dualizeMap(X), V)
    Ym = ev_matrix(sv.dualizeMap(Y), V)
    try:
        Mk = la.matmul_chain(Ym, la.inverse(h.H), la.inverse(Xm))
        K = Pairing(V, la.transpose(Mk), h.conv)
        sv.EvenMap(V, V, Mk)
    except (NotInvertible, NotEven, NotAPairing):
        return None
    if not hf.checkPairing(K):
        return None
    # the defining relation, recomputed through the general dagger
    assert hf.dagger(ev, hf.tensorPairing(K, h), hf.unit_pairing(h.conv)) == X
    return K


def is_unitary_involution(theta: EvenMap, h: Pairing) -> bool:
    if theta.dom != h.space or theta.cod != h.space:
        return False
    if not sv.is_identity(sv.compose(theta, theta)):
        return False
    return hf.is_unitary(theta, h, h)


def default_target(h: Pairing) -> PositivityClass:
    return PositivityClass.SHILB if hf.in_class(h, PositivityClass.SHILB) else PositivityClass.SHERM


def solveDuality(h: Pairing, theta: EvenMap, flavor: Flavor,
                 target: PositivityClass | None = None) -> EvenMap | None:
    """An evaluation map making the functor a dagger functor, or None.

    Any two evaluations differ by an automorphism of V*, which transfers
    the induced dual pairing without changing its signature; so trying the
    standard evaluation decides existence.
    """
    if not is_unitary_involution(theta, h):
        raise NotUnitaryInvolution("theta must be a unitary involution for h")
    if target is None:
        target = default_target(h)
    if not hf.in_class(h, target):
        return None
    ev = sv.evStd(h.space)
    K = solve_dual_pairing(h, theta, ev, flavor)
    if K is None or not hf.in_class(K, target):
        return None
    return ev


def regraded_equivariant(h: Pairing, theta: EvenMap) -> bool | None:
    """Would theta be the parity after regrading V by theta's eigenspaces?

    The pairing is first made ungraded, then restricted to the eigenspaces:
    the +1 eigenspace becomes even, the -1 eigenspace odd, and the new odd
    block is multiplied by i to land in the super convention.
    """
    if not is_unitary_involution(theta, h):
        return None
    V = h.space
    n = V.total
    one = la.identity(n)
    cols = []
    for sign in (1, -1):
        A = la.sub(theta.entries, la.scale(sign, one))
        basis = _kernel(A)
        cols.append(basis)
    plus, minus = cols
    B = tuple(tuple(vec[i] for vec in plus + minus) for i in range(n))
    flat = h.H if h.conv is Convention.GRADED else hf.convEquivalence(h, "SUPER_TO_GRADED").H
    G = la.matmul_chain(la.transpose(B), flat, la.conj_mat(B))
    W = SuperDims(len(plus), len(minus))
    G = tuple(tuple(x if i < W.p else I * x for x in row) for i, row in enumerate(G))
    try:
        h2 = Pairing(W, G, Convention.SUPER)
    except NotAPairing:
        return False
    if not hf.checkPairing(h2):
        return False
    target = PositivityClass.SHILB if hf.in_class(h, PositivityClass.SHILB) else PositivityClass.SHERM
    K = solve_dual_pairing(h2, sv.parity(W), sv.evStd(W), SPIN)
    return K is not None and hf.in_class(h2, target) and hf.in_class(K, target)


def _kernel(A) -> list:
    """A basis of the null space of A."""
    n = len(A)
    rows = [list(r) for r in A]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [ZERO] * n
        v[fc] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


# word spaces and evaluation --------------------------------------------------------

@lru_cache(maxsize=None)
def regroup(groups: tuple) -> EvenMap:
    """Flat left fold of all factors -> left fold of the left folds of each group."""
    flat = tuple(x for g in groups for x in g)
    dom, ftable = sv.fold_layout(flat)
    inner = [sv.fold_layout(g) for g in groups]
    cod, ntable = sv.fold_layout(tuple(d for d, _ in inner))
    rows = [[ZERO] * dom.total for _ in range(cod.total)]
    for idx, j in ftable.items():
        pos = 0
        parts = []
        for g, (_, table) in zip(groups, inner):
            parts.append(table[idx[pos:pos + len(g)]])
            pos += len(g)
        rows[ntable[tuple(parts)]][j] = ONE
    return EvenMap(dom, cod, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class _Data:
    flavor: Flavor
    V: SuperDims
    h: Pairing
    K: Pairing | None
    theta: EvenMap
    theta_d: EvenMap
    ev: EvenMap
    coev: EvenMap


def _data(spec: FunctorSpec) -> _Data:
    V = spec.space
    E = ev_matrix(spec.evImage, V)
    coev = coev_from_ev(spec.evImage, V)
    theta = spec.thetaImage
    theta_d = dual_map(theta, E)
    K = solve_dual_pairing(spec.statePairing, theta, spec.evImage, spec.flavor)
    return _Data(spec.flavor, V, spec.statePairing, K, theta, theta_d, spec.evImage, coev)


def word_space(V: SuperDims, w) -> SuperDims:
    return sv.fold_layout(tuple(V for _ in w))[0]


def word_pairing(data: _Data, w) -> Pairing:
    out = hf.unit_pairing(data.h.conv)
    first = True
    for x in w:
        p = data.h if x == bd.PT else data.K
        out = p if first else hf.tensorPairing(out, p)
        first = False
    return out


def circle_values(data: _Data):
    """(periodic, antiperiodic) scalars by contracting the duality data."""
    V = data.V
    per = sv.compose_all(data.ev, sv.braid(V, V), data.coev)
    ap = sv.compose_all(data.ev, sv.braid(V, V),
                        sv.tensor_maps(data.theta, sv.identity_map(V)), data.coev)
    return per.entries[0][0], ap.entries[0][0]


def _power(x, n):
    out = ONE
    for _ in range(n):
        out = out * x
    return out


def _evaluate(data: _Data, m: BordMorphism) -> EvenMap:
    V = data.V
    dec = bd.decompose(m)
    idV = sv.identity_map(V)

    def fac(w):
        return tuple(V for _ in w)

    def flip(letter, f):
        if not f:
            return idV
        return data.theta if letter == bd.PT else data.theta_d

    p_src = sv.permute_factors(fac(m.src), dec.src_order)

    nthr = len(dec.throughs)
    cap_maps = [sv.compose(data.ev, sv.tensor_maps(flip(bd.DUAL_PT, f), idV))
                for f in dec.cap_flips]
    thr_maps = [flip(x, f) for x, f in dec.throughs]
    dom_groups = ((V, V),) * len(cap_maps) + ((V,),) * nthr
    cod_groups = ((),) * len(cap_maps) + ((V,),) * nthr
    layer1 = sv.compose_all(sv.inverse_map(regroup(cod_groups)),
                            sv.tensor_many_maps(cap_maps + thr_maps),
                            regroup(dom_groups))

    cup_maps = [sv.compose(sv.tensor_maps(flip(bd.PT, f), idV), data.coev)
                for f in dec.cup_flips]
    dom_groups = ((V,),) * nthr + ((),) * len(cup_maps)
    cod_groups = ((V,),) * nthr + ((V, V),) * len(cup_maps)
    layer2 = sv.compose_all(sv.inverse_map(regroup(cod_groups)),
                            sv.tensor_many_maps([idV] * nthr + cup_maps),
                            regroup(dom_groups))

    after = tuple(x for x, _ in dec.throughs) + (bd.PT, bd.DUAL_PT) * len(cup_maps)
    p_tgt = sv.permute_factors(fac(after), bd.inverse_order(dec.tgt_order))

    out = sv.compose_all(p_tgt, layer2, layer1, p_src)
    if dec.periodic or dec.antiperiodic:
        per, ap = circle_values(data)
        c = _power(per, dec.periodic) * _power(ap, dec.antiperiodic)
        out = EvenMap(out.dom, out.cod, la.scale(c, out.entries))
    return out


def monoidal_map(V: SuperDims, a, b) -> EvenMap:
    """mu: Z(a) (x) Z(b) -> Z(a b)."""
    return sv.inverse_map(regroup((tuple(V for _ in a), tuple(V for _ in b))))


# validation ------------------------------------------------------------------

def _generators(flavor: Flavor):
    gens = [("EV", bd.ev(flavor)), ("COEV", bd.coev(flavor))]
    for a in ("p", "d"):
        for b in ("p", "d"):
            gens.append((f"SWAP({a},{b})", bd.braidNF(a, b, flavor)))
    if flavor is SPIN:
        gens += [("THETA", bd.theta("p", flavor)), ("THETA(d)", bd.theta("d", flavor))]
    return gens


_WORDS = [(), ("p",), ("d",), ("p", "p"), ("p", "d"), ("d", "p"), ("d", "d")]


@lru_cache(maxsize=256)
def validate(spec: FunctorSpec) -> ValidationReport:
    failures = []
    h, theta, V = spec.statePairing, spec.thetaImage, spec.space

    def fail(gen, msg, expected=None, actual=None):
        failures.append(Failure(gen, expected, actual, msg))

    structural = True
    if h.conv is not Convention.SUPER:
        fail("STATE", "state pairing must use the super convention")
        structural = False
    elif not hf.checkPairing(h):
        fail("STATE", "state pairing is not super Hermitian")
        structural = False
    elif not hf.in_class(h, spec.target):
        fail("STATE", f"state pairing is not in {spec.target.name}")
    if theta.dom != V or theta.cod != V:
        fail("THETA", "theta has the wrong shape")
        structural = False
    if spec.flavor is ORIENTED and structural and not sv.is_identity(theta):
        fail("THETA", "oriented functors send theta to the identity",
             sv.identity_map(V), theta)
    if structural and not is_unitary_involution(theta, h):
        fail("THETA", "theta is not a unitary involution", sv.identity_map(V),
             sv.compose(theta, theta))
    ev = spec.evImage
    E = None
    if ev.dom != sv.tensor_dims(V, V) or ev.cod != sv.UNIT:
        fail("EV", "evaluation has the wrong shape")
        structural = False
    else:
        E = ev_matrix(ev, V)
        if not la.is_invertible(E):
            fail("EV", "evaluation is degenerate")
            structural = False

    if not structural:
        return ValidationReport(False, False, False, failures)

    data = _data(spec)
    for name, zz in (("ZIGZAG_V", sv.zigzag_left(V, ev, data.coev)),
                     ("ZIGZAG_V*", sv.zigzag_right(V, ev, data.coev))):
        if not sv.is_identity(zz):
            fail(name, "zigzag identity fails", sv.identity_map(V), zz)

    K = data.K
    if K is None:
        fail("EV", "no super Hermitian pairing on the dual makes ev compatible with the dagger")
    elif not hf.in_class(K, spec.target):
        fail("EV", f"the induced dual pairing has signature {hf.signature(K)}, "
                   f"outside {spec.target.name}")

    monoidal = True
    if K is not None:
        for a in _WORDS:
            for b in _WORDS:
                if len(a) + len(b) > 3:
                    continue
                mu = monoidal_map(V, a, b)
                src = hf.tensorPairing(word_pairing(data, a), word_pairing(data, b))
                if not hf.is_unitary(mu, src, word_pairing(data, a + b)):
                    fail("MONOIDAL", f"structure map for {''.join(a)}|{''.join(b)} is not unitary")
                    monoidal = False
        for name, g in _generators(spec.flavor):
            gd = bd.daggerBord(g)
            expected = _evaluate(data, gd)
            actual = hf.dagger(_evaluate(data, g), word_pairing(data, g.src),
                               word_pairing(data, g.tgt))
            if expected != actual:
                fail(name, "dagger of the image differs from the image of the dagger",
                     expected, actual)
    else:
        monoidal = False

    is_dagger = not failures
    equivariant = theta == sv.parity(V)
    regraded = regraded_equivariant(h, theta) if spec.flavor is SPIN else None
    return ValidationReport(monoidal, is_dagger, equivariant, failures, K, regraded)


def evaluate(spec: FunctorSpec, m: BordMorphism) -> EvenMap:
    if m.flavor is not spec.flavor:
        raise NotAValidFunctor("bordism flavor does not match the functor")
    rep = validate(spec)
    if not rep.ok:
        raise NotAValidFunctor("; ".join(f"{f.generator}: {f.message}" for f in rep.failures))
    return _evaluate(_data(spec), m)


def dagger_of_image(spec: FunctorSpec, m: BordMorphism) -> EvenMap:
    """dagger(evaluate(m)) with respect to the word pairings."""
    data = _data(spec)
    return hf.dagger(evaluate(spec, m), word_pairing(data, m.src), word_pairing(data, m.tgt))


def make_spec(h: Pairing, theta: EvenMap | None = None, flavor: Flavor = SPIN,
              target: PositivityClass | None = None, ev: EvenMap | None = None) -> FunctorSpec:
    """Assemble a spec; ``ev=None`` uses the standard evaluation."""
    if theta is None:
        theta = sv.parity(h.space) if flavor is SPIN else sv.identity_map(h.space)
    if target is None:
        target = default_target(h)
    if ev is None:
        ev = sv.evStd(h.space)
    return FunctorSpec(flavor, target, h, theta, ev)


# sweeps ----------------------------------------------------------------------

@dataclass
class SweepReport:
    seed: int
    samples: int = 0
    parity_cases: int = 0
    successes: int = 0
    violations: list = field(default_factory=list)

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(self.seed, self.samples + other.samples,
                           self.parity_cases + other.parity_cases,
                           self.successes + other.successes,
                           self.violations + other.violations)


def equivarianceTheoremSweep(dimsMax: int = 4, samples: int = 100, seed: int = 0,
                             dims: SuperDims | None = None) -> SweepReport:
    """Random SHILB state spaces and unitary involutions: solvable iff parity."""
    from .sampling import rand_pairing, rand_unitary_involution
    if dimsMax > 4:
        raise ValueError("dimsMax is limited to 4")
    rep = SweepReport(seed)
    for k in range(samples):
        rng = random.Random(f"sweep/{seed}/{k}")
        V = dims
        if V is None:
            while True:
                p = rng.randint(0, min(2, dimsMax))
                q = rng.randint(0, min(2, dimsMax - p))
                if p + q:
                    break
            V = SuperDims(p, q)
        h = rand_pairing(rng, V, P=PositivityClass.SHILB)
        if k % 2 == 0:
            theta = sv.parity(V)
        else:
            theta, _ = rand_unitary_involution(rng, h)
        is_par = theta == sv.parity(V)
        ok = solveDuality(h, theta, SPIN, PositivityClass.SHILB) is not None
        rep.samples += 1
        rep.parity_cases += is_par
        rep.successes += ok
        if ok != is_par:
            rep.violations.append((k, str(V)))
    return rep
