"""Normal forms for one-dimensional spin and oriented bordisms.

Objects are words over ``'p'`` (a positively framed point) and ``'d'`` (its
dual).  A morphism is a perfect matching of its boundary points in which
each strand carries a flip bit in Z/2, together with counts of periodic and
antiperiodic circles.  Boundary points are named ``('s', i)`` on the source
and ``('t', i)`` on the target.

Polarity: a source ``p`` and a target ``d`` are negative, a source ``d`` and
a target ``p`` are positive; every strand joins opposite polarities.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import MalformedBordism, ObjectMismatch, ThetaNotInOriented

PT, DUAL_PT = "p", "d"


class Flavor(Enum):
    SPIN = "spin"
    ORIENTED = "oriented"


SPIN = Flavor.SPIN
ORIENTED = Flavor.ORIENTED

Word = tuple  # tuple[str, ...]
End = tuple   # ('s' | 't', index)


def word(text: str | Iterable[str]) -> Word:
    w = tuple(text)
    for c in w:
        if c not in (PT, DUAL_PT):
            raise MalformedBordism(f"bad object letter {c!r}")
    return w


def _polarity(end: End, src: Word, tgt: Word) -> int:
    side, i = end
    letter = src[i] if side == "s" else tgt[i]
    if side == "s":
        return -1 if letter == PT else 1
    return 1 if letter == PT else -1


@dataclass(frozen=True)
class BordMorphism:
    src: Word
    tgt: Word
    strands: tuple          # sorted tuple of (end, end, flip) with end < end
    periodic: int = 0
    antiperiodic: int = 0
    flavor: Flavor = SPIN

    def __post_init__(self):
        seen = set()
        for a, b, f in self.strands:
            if not a < b:
                raise MalformedBordism("strand endpoints must be ordered")
            if f not in (0, 1):
                raise MalformedBordism("flip must be 0 or 1")
            if self.flavor is ORIENTED and f:
                raise ThetaNotInOriented("oriented bordisms carry no flips")
            for e in (a, b):
                side, i = e
                n = len(self.src) if side == "s" else len(self.tgt)
                if side not in ("s", "t") or not 0 <= i < n:
                    raise MalformedBordism(f"endpoint {e} out of range")
                if e in seen:
                    raise MalformedBordism(f"endpoint {e} used twice")
                seen.add(e)
            if _polarity(a, self.src, self.tgt) == _polarity(b, self.src, self.tgt):
                raise MalformedBordism(f"strand {a}-{b} joins equal polarities")
        if len(seen) != len(self.src) + len(self.tgt):
            raise MalformedBordism("strands do not cover every boundary point")
        if self.periodic < 0 or self.antiperiodic < 0:
            raise MalformedBordism("negative circle count")
        if self.flavor is ORIENTED and self.antiperiodic:
            raise MalformedBordism("oriented bordisms have one circle type")

    @property
    def circles(self) -> tuple[int, int]:
        return (self.periodic, self.antiperiodic)

    def __str__(self):
        from .dsl import print_term
        return print_term(self)


def make(src, tgt, strands, periodic=0, antiperiodic=0, flavor=SPIN) -> BordMorphism:
    """Build a morphism, normalising endpoint order inside each strand."""
    norm = []
    for a, b, f in strands:
        a, b = tuple(a), tuple(b)
        if b < a:
            a, b = b, a
        norm.append((a, b, f % 2))
    return BordMorphism(word(src), word(tgt), tuple(sorted(norm)), periodic,
                        antiperiodic, flavor)


def identity(obj, flavor=SPIN) -> BordMorphism:
    w = word(obj)
    return make(w, w, [(("s", i), ("t", i), 0) for i in range(len(w))], flavor=flavor)


def theta(obj=PT, flavor=SPIN) -> BordMorphism:
    if flavor is ORIENTED:
        raise ThetaNotInOriented("the spin flip does not exist in the oriented category")
    w = word(obj)
    return make(w, w, [(("s", i), ("t", i), 1) for i in range(len(w))], flavor=flavor)


def ev(flavor=SPIN) -> BordMorphism:
    return make((DUAL_PT, PT), (), [(("s", 0), ("s", 1), 0)], flavor=flavor)


def coev(flavor=SPIN) -> BordMorphism:
    return make((), (PT, DUAL_PT), [(("t", 0), ("t", 1), 0)], flavor=flavor)


def generator(kind: str, flavor: Flavor = SPIN) -> BordMorphism:
    kind = kind.upper()
    if kind == "ID":
        return identity(PT, flavor)
    if kind == "THETA":
        return theta(PT, flavor)
    if kind == "EV":
        return ev(flavor)
    if kind == "COEV":
        return coev(flavor)
    raise ValueError(f"unknown generator {kind!r}")


def braidNF(a, b, flavor=SPIN) -> BordMorphism:
    """The crossing a (x) b -> b (x) a."""
    a, b = word(a), word(b)
    strands = [(("s", i), ("t", len(b) + i), 0) for i in range(len(a))]
    strands += [(("s", len(a) + j), ("t", j), 0) for j in range(len(b))]
    return make(a + b, b + a, strands, flavor=flavor)


def permutation(src, order, flavor=SPIN) -> BordMorphism:
    """src -> [src[order[0]], src[order[1]], ...] by crossings only."""
    src = word(src)
    tgt = tuple(src[k] for k in order)
    return make(src, tgt, [(("s", k), ("t", j), 0) for j, k in enumerate(order)],
                flavor=flavor)


def flipAction(obj, flavor=SPIN) -> BordMorphism:
    return theta(obj, flavor)


def circle(antiperiodic: bool = False, flavor=SPIN) -> BordMorphism:
    if antiperiodic:
        if flavor is ORIENTED:
            raise ThetaNotInOriented("no antiperiodic circle in the oriented category")
        return BordMorphism((), (), (), 0, 1, flavor)
    return BordMorphism((), (), (), 1, 0, flavor)


def _same_flavor(f: BordMorphism, g: BordMorphism) -> Flavor:
    if f.flavor is not g.flavor:
        raise ObjectMismatch("cannot combine spin and oriented bordisms")
    return f.flavor


def compose(g: BordMorphism, f: BordMorphism) -> BordMorphism:
    """g after f; glues tgt(f) to src(g)."""
    flavor = _same_flavor(f, g)
    if f.tgt != g.src:
        raise ObjectMismatch(f"cannot glue target {''.join(f.tgt) or '()'} "
                             f"to source {''.join(g.src) or '()'}")
    # relabel: f's source -> 'a', middle -> 'm', g's target -> 'c'
    edges = []
    inc: dict[tuple, list] = {}

    def link(x, y, flip):
        inc.setdefault(x, []).append(len(edges))
        inc.setdefault(y, []).append(len(edges))
        edges.append((x, y, flip))

    for a, b, fl in f.strands:
        link(*(("a", e[1]) if e[0] == "s" else ("m", e[1]) for e in (a, b)), fl)
    for a, b, fl in g.strands:
        link(*(("m", e[1]) if e[0] == "s" else ("c", e[1]) for e in (a, b)), fl)

    def walk(node, edge):
        """Follow edges from ``node`` leaving by ``edge`` until an outer point."""
        flip = 0
        while True:
            x, y, fl = edges[edge]
            flip += fl
            node = y if x == node else x
            used.add(edge)
            if node[0] != "m" or node == start:
                return node, flip
            e0, e1 = inc[node]
            edge = e1 if e0 == edge else e0

    used: set[int] = set()
    strands = []
    for start in sorted(n for n in inc if n[0] != "m"):
        (e,) = inc[start]
        if e in used:
            continue
        end_node, flip = walk(start, e)
        strands.append((_back(start), _back(end_node), flip))

    periodic, antiperiodic = f.periodic + g.periodic, f.antiperiodic + g.antiperiodic
    for e in range(len(edges)):
        if e in used:
            continue
        start = edges[e][0]
        _, flip = walk(start, e)
        if flip % 2:
            antiperiodic += 1
        else:
            periodic += 1
    if flavor is ORIENTED:
        periodic, antiperiodic = periodic + antiperiodic, 0
    return make(f.src, g.tgt, strands, periodic, antiperiodic, flavor)


def _back(e):
    side, i = e
    return ("s", i) if side == "a" else ("t", i)


def compose_all(*ms: BordMorphism) -> BordMorphism:
    """compose_all(a, b, c) = a after b after c."""
    out = ms[-1]
    for m in reversed(ms[:-1]):
        out = compose(m, out)
    return out


def tensorBord(f: BordMorphism, g: BordMorphism) -> BordMorphism:
    flavor = _same_flavor(f, g)
    ns, nt = len(f.src), len(f.tgt)

    def shift(e):
        return (e[0], e[1] + (ns if e[0] == "s" else nt))

    strands = list(f.strands) + [(shift(a), shift(b), fl) for a, b, fl in g.strands]
    return make(f.src + g.src, f.tgt + g.tgt, strands, f.periodic + g.periodic,
                f.antiperiodic + g.antiperiodic, flavor)


def tensor_all(ms: Iterable[BordMorphism], flavor=SPIN) -> BordMorphism:
    out = identity((), flavor)
    for m in ms:
        out = tensorBord(out, m)
    return out


def daggerBord(f: BordMorphism) -> BordMorphism:
    """Reflect: swap source and target; in the spin case turn-backs gain a flip."""
    swap = {"s": "t", "t": "s"}
    strands = []
    for a, b, fl in f.strands:
        if a[0] == b[0] and f.flavor is SPIN:
            fl += 1
        strands.append(((swap[a[0]], a[1]), (swap[b[0]], b[1]), fl))
    return make(f.tgt, f.src, strands, f.periodic, f.antiperiodic, f.flavor)


# normal-form decomposition ------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    """m = tgt_perm . (id(mid) (x) cups) . (caps (x) throughs) . src_perm, times circles.

    ``src_order`` lists source indices in the order [cap d, cap p, ...,
    through strands]; ``tgt_order`` lists target indices in the order
    [through strands, cup p, cup d, ...].
    """
    src_order: tuple
    cap_flips: tuple
    throughs: tuple      # (letter, flip) in the middle word order
    cup_flips: tuple
    tgt_order: tuple
    periodic: int
    antiperiodic: int


def decompose(m: BordMorphism) -> Decomposition:
    caps, cups, thr = [], [], []
    for a, b, fl in m.strands:
        if a[0] == "s" and b[0] == "s":
            i, j = a[1], b[1]
            d_idx, p_idx = (i, j) if m.src[i] == DUAL_PT else (j, i)
            caps.append((d_idx, p_idx, fl))
        elif a[0] == "t" and b[0] == "t":
            i, j = a[1], b[1]
            p_idx, d_idx = (i, j) if m.tgt[i] == PT else (j, i)
            cups.append((p_idx, d_idx, fl))
        else:
            thr.append((b[1], a[1], fl))   # (tgt index, src index, flip)
    thr.sort()
    src_order = tuple(x for d, p, _ in caps for x in (d, p)) + tuple(s for _, s, _ in thr)
    tgt_order = tuple(t for t, _, _ in thr) + tuple(x for p, d, _ in cups for x in (p, d))
    return Decomposition(
        src_order=src_order,
        cap_flips=tuple(fl for _, _, fl in caps),
        throughs=tuple((m.src[s], fl) for _, s, fl in thr),
        cup_flips=tuple(fl for _, _, fl in cups),
        tgt_order=tgt_order,
        periodic=m.periodic,
        antiperiodic=m.antiperiodic,
    )


def inverse_order(order) -> tuple:
    inv = [0] * len(order)
    for j, k in enumerate(order):
        inv[k] = j
    return tuple(inv)
