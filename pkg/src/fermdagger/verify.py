"""Named, seeded property suites.

Each suite is a function of a per-case random generator that returns None
on success or a failure message.  Case ``k`` of suite ``name`` under seed
``s`` always draws from ``random.Random(f"{name}/{s}/{k}")``, so any failure
replays from its (name, seed, case) triple alone.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import bordism1 as bd
from . import hermforms as hf
from . import linalg as la
from . import sampling as smp
from . import supervect as sv
from . import tqft
from .bordism1 import ORIENTED, SPIN
from .errors import UnknownSuite
from .exactnum import ONE, ZERO, Scalar
from .hermforms import GRADED, SUPER, CompactMode, Pairing, PositivityClass as PC
from .supervect import Convention, EvenMap, SuperDims


@dataclass
class SuiteResult:
    suite: str
    cases: int
    failures: list = field(default_factory=list)   # (seed, digest, message)
    elapsed: float = 0.0
    seed: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self, timing: bool = True) -> str:
        ms = f"{self.elapsed * 1000:.0f}" if timing else "-"
        return f"SUITE {self.suite} {self.cases} {len(self.failures)} {ms} {self.seed}"

    def digest(self) -> str:
        """Hash of everything except timing."""
        h = hashlib.sha256()
        h.update(f"{self.suite}|{self.cases}|{self.seed}".encode())
        for s, d, msg in self.failures:
            h.update(f"|{s}|{d}|{msg}".encode())
        return h.hexdigest()[:16]


_REGISTRY: dict[str, tuple[Callable, int]] = {}


def suite(name: str, default_scale: int):
    def deco(fn):
        _REGISTRY[name] = (fn, default_scale)
        return fn
    return deco


def suite_names() -> list[str]:
    return list(_REGISTRY)


def runSuite(name: str, seed: int = 0, scale: int | None = None) -> SuiteResult:
    if name not in _REGISTRY:
        raise UnknownSuite(name)
    fn, default = _REGISTRY[name]
    n = default if scale is None else scale
    res = SuiteResult(name, n, seed=seed)
    t0 = time.perf_counter()
    for k in range(n):
        rng = random.Random(f"{name}/{seed}/{k}")
        try:
            msg = fn(rng)
        except Exception as exc:   # a crash is a failure of the case, not the run
            msg = f"{type(exc).__name__}: {exc}"
        if msg:
            digest = hashlib.sha256(f"{name}/{seed}/{k}".encode()).hexdigest()[:12]
            res.failures.append((seed, digest, f"case {k}: {msg}"))
    res.elapsed = time.perf_counter() - t0
    return res


def _run_one(args):
    return runSuite(*args)


def runAll(seed: int = 0, scale: int | None = None, names=None, jobs: int = 1) -> list[SuiteResult]:
    names = list(names or suite_names())
    for n in names:
        if n not in _REGISTRY:
            raise UnknownSuite(n)
    tasks = [(n, seed, scale) for n in names]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, tasks))
    return [_run_one(t) for t in tasks]


def report(results, timing: bool = True) -> str:
    lines = [r.line(timing) for r in results]
    h = hashlib.sha256("".join(r.digest() for r in results).encode()).hexdigest()[:16]
    lines.append(f"DIGEST {h}")
    return "\n".join(lines)


# helpers ------------------------------------------------------------------------

def _conv(rng) -> Convention:
    return rng.choice((SUPER, GRADED))


def _small_dims(rng, max_total=3, min_total=1):
    return smp.rand_dims(rng, max_total, min_total)


def lambda_oracle(h: Pairing) -> EvenMap:
    """lambda by explicit index contraction.

    lambda(f_c) = sum_b (-1)^{|c||b|} coev^dagger(e_b (x) f_c) f_b with
    coev^dagger(x) = conj <coev(1), x>, and the tensor pairing sign
    (-1)^{|a||b|} present only in the super convention.
    """
    V = h.space
    K = hf.dualPairing(h).H
    H = h.H
    n = V.total
    rows = [[ZERO] * n for _ in range(n)]
    for c in range(n):
        for b in range(n):
            acc = ZERO
            for a in range(n):
                s = -1 if (h.conv is SUPER and V.degree(a) and V.degree(b)) else 1
                acc = acc + s * H[a][b] * K[a][c]
            sign = -1 if V.degree(c) and V.degree(b) else 1
            rows[b][c] = sign * acc.conj()
    return EvenMap(V, V, tuple(tuple(r) for r in rows))


def word_dual(w) -> tuple:
    return tuple("d" if x == "p" else "p" for x in reversed(w))


def ev_word(w, flavor=SPIN) -> bd.BordMorphism:
    """Nested evaluation Y* Y -> empty."""
    n = len(w)
    src = word_dual(w) + tuple(w)
    return bd.make(src, (), [(("s", n - 1 - i), ("s", n + i), 0) for i in range(n)],
                   flavor=flavor)


def coev_word(w, flavor=SPIN) -> bd.BordMorphism:
    """Nested coevaluation empty -> Y Y*."""
    n = len(w)
    tgt = tuple(w) + word_dual(w)
    return bd.make((), tgt, [(("t", i), ("t", 2 * n - 1 - i), 0) for i in range(n)],
                   flavor=flavor)


# suites ---------------------------------------------------------------------------

@suite("dagger-axioms", 200)
def _dagger_axioms(rng):
    conv = _conv(rng)
    V, W, U = (_small_dims(rng) for _ in range(3))
    hV, hW, hU = (smp.rand_pairing(rng, X, conv) for X in (V, W, U))
    T = smp.rand_map(rng, V, W)
    S = smp.rand_map(rng, W, U)
    Td = hf.dagger(T, hV, hW)
    if hf.dagger(Td, hW, hV) != T:
        return "dagger is not involutive"
    if hf.dagger(sv.compose(S, T), hV, hU) != sv.compose(Td, hf.dagger(S, hW, hU)):
        return "dagger is not contravariant"
    if hf.dagger(sv.identity_map(V), hV, hV) != sv.identity_map(V):
        return "dagger of the identity"
    X = _small_dims(rng, 2)
    hX = smp.rand_pairing(rng, X, conv)
    R = smp.rand_map(rng, X, X)
    lhs = hf.dagger(sv.tensor_maps(T, R), hf.tensorPairing(hV, hX), hf.tensorPairing(hW, hX))
    if lhs != sv.tensor_maps(Td, hf.dagger(R, hX, hX)):
        return "dagger is not monoidal"
    if not hf.is_unitary(sv.braid(V, X), hf.tensorPairing(hV, hX), hf.tensorPairing(hX, hV)):
        return "braiding is not unitary"
    Y = _small_dims(rng, 2)
    hY = smp.rand_pairing(rng, Y, conv)
    a = sv.associator(V, X, Y)
    if not hf.is_unitary(a, hf.tensorPairing(hf.tensorPairing(hV, hX), hY),
                         hf.tensorPairing(hV, hf.tensorPairing(hX, hY))):
        return "associator is not unitary"
    return None


@suite("herm-diagram", 200)
def _herm_diagram(rng):
    conv = _conv(rng)
    V = smp.rand_dims(rng, 6)
    h = smp.rand_pairing(rng, V, conv)
    if not hf.checkPairing(h) or not hf._diagram_ok(h):
        return "generated pairing fails the diagram test"
    raw = smp.rand_invertible(rng, V)
    cand = Pairing(V, raw.entries, conv)
    if hf.checkPairing(cand) != hf._symmetry_ok(cand):
        return "diagram test disagrees with the entrywise test"
    # symmetrising the raw matrix always yields a form satisfying the diagram
    M = cand.morphism
    sym = sv.compose(sv.antiInv(M), sv.eta(V, conv))
    S = EvenMap(V, V, la.add(M.entries, sym.entries))
    if la.is_invertible(S.entries):
        if not hf.checkPairing(hf.pairing_from_morphism(S, conv)):
            return "h + dh.eta is not Hermitian"
    return None


@suite("transfer-signature", 200)
def _transfer_signature(rng):
    conv = _conv(rng)
    V = smp.rand_dims(rng, 4)
    h = smp.rand_pairing(rng, V, conv)
    g = smp.rand_invertible(rng, V)
    t = hf.transfer(h, g)
    if hf.signature(t) != hf.signature(h):
        return f"signature changed: {hf.signature(h)} -> {hf.signature(t)}"
    if hf.transfer(h, sv.identity_map(V)) != h:
        return "transfer along the identity"
    if not hf.is_unitary(g, t, h):
        return "g is not unitary from the transferred pairing"
    u = hf.unitary_between(h, t)
    if u is not None and not hf.is_unitary(u, h, t):
        return "constructed map is not unitary"
    other = smp.rand_pairing(rng, V, conv)
    if hf.signature(other) != hf.signature(h) and hf.unitary_between(h, other) is not None:
        return "unitary found between different signatures"
    return None


@suite("tensor-closure", 200)
def _tensor_closure(rng):
    V = _small_dims(rng)
    W = _small_dims(rng)
    h1 = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    h2 = smp.rand_pairing(rng, W, SUPER, PC.SHILB)
    t = hf.tensorPairing(h1, h2)
    if not hf.in_class(t, PC.SHILB):
        return f"tensor of positive pairings has signature {hf.signature(t)}"
    c = smp.rand_scalar(rng, 3, gaussian=False)
    if c.is_zero():
        c = ONE
    c = Scalar(abs(c.re))
    line = Pairing.diagonal(SuperDims(0, 1), [c], GRADED)
    sq = hf.tensorPairing(line, line, chi=SUPER)
    if not (sq.H[0][0].is_real() and sq.H[0][0].re < 0):
        return "mismatched tensor square of a positive odd line is not negative"
    good = hf.tensorPairing(line, line)
    if not good.H[0][0].re > 0:
        return "graded tensor square of a positive odd line is not positive"
    return None


@suite("dual-signature", 200)
def _dual_signature(rng):
    conv = _conv(rng)
    V = smp.rand_dims(rng, 6)
    h = smp.rand_pairing(rng, V, conv)
    k = hf.dualPairing(h)
    if not hf.checkPairing(k):
        return "dual pairing is not Hermitian"
    if hf.signature(k) != hf.signature(h).swap34():
        return f"{hf.signature(h)} dualised to {hf.signature(k)}"
    return None


@suite("eta-coherence", 200)
def _eta_coherence(rng):
    conv = _conv(rng)
    V = smp.rand_dims(rng, 4)
    e = sv.eta(V, conv)
    if not sv.is_identity(sv.compose(sv.antiInv(e), sv.eta(sv.d_obj(V), conv))):
        return "d(eta) is not the inverse of eta_d"
    U, W = _small_dims(rng, 2), _small_dims(rng, 2)
    X = _small_dims(rng, 2)
    # chi is associative up to the associator
    left = sv.compose(sv.chi(sv.tensor_dims(U, W), X, conv),
                      sv.tensor_maps(sv.chi(U, W, conv), sv.identity_map(X)))
    right = sv.compose(sv.chi(U, sv.tensor_dims(W, X), conv),
                       sv.tensor_maps(sv.identity_map(U), sv.chi(W, X, conv)))
    a = sv.associator(U, W, X)
    if sv.compose_all(sv.antiInv(a), right, a) != left:
        return "chi is not associative"
    # chi is compatible with the braiding
    lhs = sv.compose_all(sv.antiInv(sv.braid(U, W)), sv.chi(W, U, conv), sv.braid(U, W))
    if lhs != sv.chi(U, W, conv):
        return "chi is not symmetric"
    # eta is monoidal
    UW = sv.tensor_dims(U, W)
    lhs = sv.compose(sv.antiInv(sv.chi(U, W, conv)), sv.eta(UW, conv))
    rhs = sv.compose(sv.chi(U, W, conv), sv.tensor_maps(sv.eta(U, conv), sv.eta(W, conv)))
    if lhs != rhs:
        return "eta is not monoidal"
    if sv.parity(UW) != sv.tensor_maps(sv.parity(U), sv.parity(W)):
        return "parity is not monoidal"
    # iF fails to be monoidal exactly by the Koszul sign
    defect = sv.compose(sv.tensor_maps(sv.iF(U), sv.iF(W)), sv.inverse_map(sv.iF(UW)))
    if defect != sv.chi(U, W, SUPER):
        return "iF monoidality defect differs from the Koszul sign"
    # braiding: symmetry and naturality
    if not sv.is_identity(sv.compose(sv.braid(W, U), sv.braid(U, W))):
        return "braiding is not symmetric"
    T, S = smp.rand_map(rng, U, U), smp.rand_map(rng, W, W)
    if sv.compose(sv.braid(U, W), sv.tensor_maps(T, S)) != \
            sv.compose(sv.tensor_maps(S, T), sv.braid(U, W)):
        return "braiding is not natural"
    if not sv.is_identity(sv.zigzag_left(V, sv.evStd(V), sv.coevStd(V))) or \
            not sv.is_identity(sv.zigzag_right(V, sv.evStd(V), sv.coevStd(V))):
        return "standard duality fails a zigzag identity"
    return None


@suite("lambda-consistency", 200)
def _lambda_consistency(rng):
    conv = _conv(rng)
    V = _small_dims(rng, 3)
    h = smp.rand_pairing(rng, V, conv)
    lam = hf.lambdaAuto(h)
    if lam != lambda_oracle(h):
        return "composite differs from the contraction oracle"
    if conv is SUPER:
        hp = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
        k = hf.dualPairing(hp)
        twisted = sv.compose(hf.lambdaAuto(hp), sv.parity(V))
        if not hf.isoPositive(twisted, k, PC.SHILB):
            return "lambda twisted by parity is not iso-positive"
        if V.q and hf.isoPositive(hf.lambdaAuto(hp), k, PC.SHILB):
            return "untwisted lambda is iso-positive despite odd dimensions"
    return None


@suite("compactness-tfae", 150)
def _compactness_tfae(rng):
    V = smp.rand_dims(rng, 4)
    P = rng.choice(list(PC))
    for mode, theta, flavor in ((CompactMode.DAGGER_COMPACT, sv.identity_map(V), ORIENTED),
                                (CompactMode.FERM_DAGGER_COMPACT, sv.parity(V), SPIN)):
        c1 = hf.compactness(P, V, mode)
        c2 = True
        c3 = True
        for s in hf.class_signatures(P, V):
            h = hf.transfer(hf.canonical_pairing(s), smp.rand_invertible(rng, V))
            k = hf.dualPairing(h)
            lam = sv.compose(hf.lambdaAuto(h), theta)
            c2 = c2 and hf.isoPositive(lam, k, P)
            K = tqft.solve_dual_pairing(h, theta, sv.evStd(V), flavor)
            c3 = c3 and K is not None and hf.in_class(K, P)
        if not c1 == c2 == c3:
            return f"{P.name} {V} {mode.name}: {c1}, {c2}, {c3}"
    return None


@suite("ferm-compact-shilb", 200)
def _ferm_compact_shilb(rng):
    V = smp.rand_dims(rng, 6)
    h = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    k = hf.dualPairing(h)
    if not hf.in_class(k, PC.SHILB_ODD_NEG):
        return f"dual of a super Hilbert space has signature {hf.signature(k)}"
    twisted = hf.pairing_from_morphism(sv.compose(k.morphism, sv.parity(V)), SUPER)
    if not hf.in_class(twisted, PC.SHILB):
        return "parity-twisted dual is not positive"
    if not hf.compactness(PC.SHILB, V, CompactMode.FERM_DAGGER_COMPACT):
        return "not fermionically dagger compact"
    if hf.compactness(PC.SHILB, V, CompactMode.DAGGER_COMPACT) != (V.q == 0):
        return "dagger compactness should hold exactly when there are no odd dimensions"
    return None


@suite("convention-equivalence", 200)
def _convention_equivalence(rng):
    V, W = smp.rand_dims(rng, 4), smp.rand_dims(rng, 4)
    h1 = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    h2 = smp.rand_pairing(rng, W, SUPER, PC.SHILB)
    T = smp.rand_map(rng, V, W)
    g1, g2 = hf.convEquivalence(h1, "SUPER_TO_GRADED"), hf.convEquivalence(h2, "SUPER_TO_GRADED")
    if hf.dagger(T, h1, h2) != hf.dagger(T, g1, g2):
        return "daggers differ across conventions"
    if hf.convEquivalence(g1, "GRADED_TO_SUPER") != h1:
        return "round trip is not the identity"
    if not hf.checkPairing(g1) or hf.signature(g1) != hf.signature(h1):
        return "positivity not preserved"
    gr = smp.rand_pairing(rng, V, GRADED)
    if hf.convEquivalence(hf.convEquivalence(gr, "GRADED_TO_SUPER"), "SUPER_TO_GRADED") != gr:
        return "reverse round trip is not the identity"
    return None


@suite("wrong-convention", 200)
def _wrong_convention(rng):
    q = rng.randint(1, 3)
    h = smp.rand_pairing(rng, SuperDims(0, q), GRADED, PC.SHILB)
    sq = hf.tensorPairing(h, h, chi=SUPER)
    if not hf.checkPairing(sq):
        return "mismatched tensor square is not Hermitian"
    if hf.signature(sq) != hf.SignatureQuad(0, q * q, 0, 0):
        return f"mismatched tensor square has signature {hf.signature(sq)}"
    s = smp.rand_pairing(rng, SuperDims(0, q), SUPER, PC.SHILB)
    if hf.signature(hf.tensorPairing(s, s)) != hf.SignatureQuad(q * q, 0, 0, 0):
        return "super tensor square of an odd Hilbert space is not positive"
    return None


@suite("bordism-axioms", 200)
def _bordism_axioms(rng):
    flavor = rng.choice((SPIN, ORIENTED))
    A = smp.rand_word(rng, 3)
    B = smp.rand_target_word(rng, A, 3)
    C = smp.rand_target_word(rng, B, 3)
    f = smp.rand_bordism(rng, A, B, flavor)
    g = smp.rand_bordism(rng, B, C, flavor)
    D = smp.rand_word(rng, 2)
    k = smp.rand_bordism(rng, D, smp.rand_target_word(rng, D, 2), flavor)
    dag = bd.daggerBord
    if dag(dag(f)) != f:
        return "dagger not involutive"
    if dag(bd.compose(g, f)) != bd.compose(dag(f), dag(g)):
        return "dagger not contravariant"
    if dag(bd.identity(A, flavor)) != bd.identity(A, flavor):
        return "dagger not identity on objects"
    if dag(bd.tensorBord(f, k)) != bd.tensorBord(dag(f), dag(k)):
        return "dagger not monoidal"
    if bd.compose(f, bd.identity(A, flavor)) != f or bd.compose(bd.identity(B, flavor), f) != f:
        return "identity law"
    h = smp.rand_bordism(rng, C, smp.rand_target_word(rng, C, 3), flavor)
    if bd.compose(h, bd.compose(g, f)) != bd.compose(bd.compose(h, g), f):
        return "composition not associative"
    sw = bd.braidNF(A, D, flavor)
    if dag(sw) != bd.braidNF(D, A, flavor) or \
            bd.compose(bd.braidNF(D, A, flavor), sw) != bd.identity(A + D, flavor):
        return "braiding not unitary"
    from .dsl import parseBordTerm, print_term
    if parseBordTerm(print_term(f), flavor) != f:
        return "print/parse round trip"
    Y = smp.rand_word(rng, 4)
    ev_y, coev_y = ev_word(Y, flavor), coev_word(Y, flavor)
    Ys = word_dual(Y)
    zig = bd.compose(bd.tensorBord(bd.identity(Y, flavor), ev_y),
                     bd.tensorBord(coev_y, bd.identity(Y, flavor)))
    if zig != bd.identity(Y, flavor):
        return "zigzag identity"
    elbow = bd.compose(bd.braidNF(Y, Ys, flavor), coev_y)
    if flavor is SPIN:
        elbow = bd.compose(bd.tensorBord(bd.flipAction(Ys), bd.identity(Y)), elbow)
    if dag(ev_y) != elbow:
        return "dagger of the evaluation is not the braided coevaluation"
    if flavor is SPIN:
        x = rng.choice("pd")
        th = bd.theta(x)
        if bd.compose(th, th) != bd.identity(x):
            return "theta is not an involution"
        # the flip slides through caps
        lhs = bd.compose(bd.ev(), bd.tensorBord(bd.theta("d"), bd.identity("p")))
        rhs = bd.compose(bd.ev(), bd.tensorBord(bd.identity("d"), bd.theta("p")))
        if lhs != rhs:
            return "theta does not slide across ev"
        if bd.compose(bd.ev(), dag(bd.ev())) != bd.circle(True):
            return "double of ev is not the antiperiodic circle"
    closure = bd.compose_all(bd.ev(flavor), bd.braidNF("p", "d", flavor), bd.coev(flavor))
    if closure != bd.circle(False, flavor):
        return "closure of the identity is not the periodic circle"
    return None


def _rand_shilb_spec(rng, max_each=2):
    p = rng.randint(0, max_each)
    q = rng.randint(0 if p else 1, max_each)
    V = SuperDims(p, q)
    h = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    return tqft.make_spec(h, sv.parity(V), SPIN, PC.SHILB)


@suite("spin-statistics", 50)
def _spin_statistics(rng):
    p = rng.randint(0, 2)
    q = rng.randint(0 if p else 1, 2)
    V = SuperDims(p, q)
    h = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    thetas = [sv.parity(V), sv.identity_map(V)]
    thetas += [smp.rand_unitary_involution(rng, h)[0] for _ in range(3)]
    for th in thetas:
        ok = tqft.solveDuality(h, th, SPIN, PC.SHILB) is not None
        if ok != (th == sv.parity(V)):
            return f"solvability {ok} for theta {th.entries}"
    spec = tqft.make_spec(h, sv.parity(V), SPIN, PC.SHILB)
    rep = tqft.validate(spec)
    if not (rep.isDagger and rep.isMonoidal and rep.isEquivariant):
        return "parity spec does not validate"
    if tqft.evaluate(spec, bd.theta("p")) != sv.parity(V):
        return "theta does not evaluate to parity"
    # functoriality and dagger preservation on random bordisms
    A = smp.rand_word(rng, 1 if V.total > 2 else 2)
    B = smp.rand_target_word(rng, A, 2)
    C = smp.rand_target_word(rng, B, 2)
    f = smp.rand_bordism(rng, A, B)
    g = smp.rand_bordism(rng, B, C)
    if tqft.evaluate(spec, bd.compose(g, f)) != \
            sv.compose(tqft.evaluate(spec, g), tqft.evaluate(spec, f)):
        return "evaluation does not respect composition"
    if tqft.evaluate(spec, bd.daggerBord(f)) != tqft.dagger_of_image(spec, f):
        return "evaluation does not respect the dagger"
    return None


@suite("counterexample", 100)
def _counterexample(rng):
    q = rng.randint(1, 2)
    p = rng.randint(0, 1)
    V = SuperDims(p, q)
    h = hf.transfer(hf.canonical_pairing(hf.SignatureQuad(p, 0, 0, q)), smp.rand_invertible(rng, V))
    spec = tqft.make_spec(h, sv.identity_map(V), ORIENTED, PC.SHERM)
    rep = tqft.validate(spec)
    if not (rep.isDagger and rep.isMonoidal):
        return "oriented odd-negative spec is not a dagger functor"
    if rep.isEquivariant:
        return "oriented odd-negative spec reported equivariant"
    if tqft.evaluate(spec, bd.circle(False, ORIENTED)) != sv.scalar_map(p - q):
        return "circle value"
    # the state space is Hermitian but not a super Hilbert space
    if hf.in_class(h, PC.SHILB):
        return "odd-negative state space classified as positive"
    return None


@suite("minimality", 200)
def _minimality(rng):
    V = smp.rand_dims(rng, 4)
    h = smp.rand_pairing(rng, V, SUPER)
    A = smp.rand_map(rng, V, V)
    f = EvenMap(V, V, la.add(A.entries, hf.dagger(A, h, h).entries))
    if hf.dagger(f, h, h) != f:
        return "constructed map is not self-adjoint"
    if la.is_invertible(f.entries) and not hf.isoPositive(f, h, PC.SHERM):
        return "self-adjoint automorphism not iso-positive in SHERM"
    hp = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    target = smp.rand_pairing(rng, V, SUPER, PC.SHILB)
    g = smp.rand_invertible(rng, V)
    gg = sv.compose(hf.dagger(g, hp, target), g)
    if not hf.isoPositive(gg, hp, PC.SHILB):
        return "g^dagger g is not iso-positive"
    minus = sv.diagonal_map(V, [-1] * V.total)
    if hf.isoPositive(minus, hp, PC.SHILB):
        return "-id is iso-positive in SHILB"
    if hf.isoPositive(f, hp, PC.SHILB):
        hf_pair = hf.pairing_from_morphism(sv.compose(hp.morphism, f), SUPER)
        if not hf.in_class(hf_pair, PC.SHILB):
            return "iso-positive without positive signature"
    return None
