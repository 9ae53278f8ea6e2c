"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad input of any kind.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bordism1 as bd
from . import formats as fmt
from . import hermforms as hf
from . import linalg as la
from . import supervect as sv
from . import tqft
from . import verify
from .bordism1 import BordMorphism, Flavor
from .dsl import parseBordTerm, print_term
from .errors import FermDaggerError
from .hermforms import Pairing, PositivityClass
from .supervect import EvenMap, SuperDims

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(text: str = "") -> None:
    sys.stdout.write(text + "\n")


def _pairing(path: str, args) -> Pairing:
    h = fmt.load_pairing(path)
    if getattr(args, "convention", None):
        h = Pairing(h.space, h.H, fmt.convention(args.convention))
    return h


def _show_pairing(h: Pairing, as_json: bool) -> None:
    if as_json:
        _out(fmt.dumps(fmt.pairing_to_obj(h)))
        return
    _out(f"dims {h.space} convention {h.conv.value}")
    _out(la.format_matrix(h.H))
    if hf.checkPairing(h):
        _out(f"signature {hf.signature(h)}")


def _show_map(m: EvenMap, as_json: bool) -> None:
    if as_json:
        _out(fmt.dumps(fmt.matrix_to_obj(m)))
        return
    _out(f"{m.dom} -> {m.cod}")
    _out(la.format_matrix(m.entries))


def describe(m: BordMorphism) -> str:
    lines = [f"src {''.join(m.src) or '()'}", f"tgt {''.join(m.tgt) or '()'}"]
    for a, b, fl in m.strands:
        lines.append(f"strand {a[0]}{a[1]}-{b[0]}{b[1]} flip {fl}")
    lines.append(f"circles periodic {m.periodic} antiperiodic {m.antiperiodic}")
    lines.append(f"term {print_term(m)}")
    return "\n".join(lines)


# verbs -----------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.list:
        for n in verify.suite_names():
            _out(n)
        return EXIT_OK
    if not args.all and not args.suite:
        raise UsageError("verify needs --all or --suite NAME")
    names = verify.suite_names() if args.all else args.suite
    results = verify.runAll(args.seed, args.scale, names, args.jobs)
    _out(verify.report(results, timing=not args.no_timing))
    bad = [r for r in results if not r.passed]
    for r in bad:
        for seed, digest, msg in r.failures[:5]:
            sys.stderr.write(f"FAIL {r.suite} seed {seed} {digest} {msg}\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_sig(args) -> int:
    h = _pairing(args.pairing, args)
    if not hf.checkPairing(h):
        sys.stderr.write("error: not a super Hermitian pairing\n")
        return EXIT_FAIL
    _out(str(hf.signature(h)))
    return EXIT_OK


def cmd_dagger(args) -> int:
    T = fmt.load_matrix(args.matrix)
    h_dom = _pairing(args.dom, args)
    h_cod = _pairing(args.cod, args) if args.cod else h_dom
    _show_map(hf.dagger(T, h_dom, h_cod), args.json)
    return EXIT_OK


def cmd_dual(args) -> int:
    _show_pairing(hf.dualPairing(_pairing(args.pairing, args)), args.json)
    return EXIT_OK


def cmd_tensor(args) -> int:
    h1, h2 = _pairing(args.first, args), _pairing(args.second, args)
    chi = fmt.convention(args.sign) if args.sign else None
    _show_pairing(hf.tensorPairing(h1, h2, chi), args.json)
    return EXIT_OK


def cmd_eval(args) -> int:
    spec = fmt.load_spec(args.spec)
    m = parseBordTerm(args.term, spec.flavor)
    rep = tqft.validate(spec)
    if not rep.ok:
        _report(rep)
        return EXIT_FAIL
    _show_map(tqft.evaluate(spec, m), args.json)
    return EXIT_OK


def cmd_solve(args) -> int:
    h = _pairing(args.pairing, args)
    flavor = fmt.flavor(args.flavor)
    if args.theta:
        theta = fmt.load_matrix(args.theta)
    else:
        theta = sv.parity(h.space) if flavor is Flavor.SPIN else sv.identity_map(h.space)
    tg = fmt.target(args.target) if args.target else None
    ev = tqft.solveDuality(h, theta, flavor, tg)
    if ev is None:
        _out("NONE")
        return EXIT_OK
    _show_map(ev, args.json)
    return EXIT_OK


def cmd_parse(args) -> int:
    m = parseBordTerm(args.term, fmt.flavor(args.flavor))
    _out(describe(m))
    return EXIT_OK


def _flag(b) -> str:
    return "true" if b else "false"


def _report(rep: tqft.ValidationReport) -> None:
    _out(f"isMonoidal={_flag(rep.isMonoidal)} isDagger={_flag(rep.isDagger)} "
         f"isEquivariant={_flag(rep.isEquivariant)}")
    if rep.regradedEquivariant is not None:
        _out(f"regradedEquivariant={_flag(rep.regradedEquivariant)}")
    for f in rep.failures:
        _out(f"failure {f.generator}: {f.message}")


def _demo_spec(h: Pairing, theta: EvenMap, flavor: Flavor, target: PositivityClass):
    _out(f"state space {h.space}, pairing")
    _out(la.format_matrix(h.H))
    _out(f"signature {hf.signature(h)}")
    _out("theta")
    _out(la.format_matrix(theta.entries))
    ev = tqft.solveDuality(h, theta, flavor, target)
    if ev is None:
        _out("solveDuality: NONE")
        return None
    _out("solveDuality: ev")
    _out(la.format_matrix(ev.entries))
    spec = tqft.make_spec(h, theta, flavor, target, ev)
    rep = tqft.validate(spec)
    _report(rep)
    return spec


def demo_spin_statistics() -> int:
    V = SuperDims(1, 1)
    h = Pairing.diagonal(V, [1, hf.I])
    _out("== SPIN into SHILB with theta = parity")
    spec = _demo_spec(h, sv.parity(V), bd.SPIN, PositivityClass.SHILB)
    if spec is None:
        return EXIT_FAIL
    _out("image of theta")
    _out(la.format_matrix(tqft.evaluate(spec, bd.theta()).entries))
    per = tqft.evaluate(spec, bd.circle(False)).entries[0][0]
    ap = tqft.evaluate(spec, bd.circle(True)).entries[0][0]
    _out(f"periodic circle {per}")
    _out(f"antiperiodic circle {ap}")
    _out("== SPIN into SHILB with theta = identity")
    other = _demo_spec(h, sv.identity_map(V), bd.SPIN, PositivityClass.SHILB)
    return EXIT_OK if other is None else EXIT_FAIL


def demo_counterexample() -> int:
    V = SuperDims(0, 1)
    h = Pairing.diagonal(V, [-hf.I])
    _out("== ORIENTED into SHERM, odd line with norm -i, theta = identity")
    spec = _demo_spec(h, sv.identity_map(V), bd.ORIENTED, PositivityClass.SHERM)
    if spec is None:
        return EXIT_FAIL
    rep = tqft.validate(spec)
    circ = tqft.evaluate(spec, bd.circle(False, bd.ORIENTED)).entries[0][0]
    _out(f"circle {circ}")
    _out(f"state space in SHILB: {_flag(hf.in_class(h, PositivityClass.SHILB))}")
    return EXIT_OK if rep.ok and not rep.isEquivariant else EXIT_FAIL


def cmd_demo(args) -> int:
    return {"spin-statistics": demo_spin_statistics,
            "counterexample": demo_counterexample}[args.name]()


# parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fermdagger",
                                description="Exact super Hermitian algebra and 1d spin TQFTs.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        return sp

    def conv_flag(sp):
        sp.add_argument("--convention", choices=["super", "graded"],
                        help="override the convention stored in pairing files")

    def json_flag(sp):
        sp.add_argument("--json", action="store_true", help="print JSON instead of text")

    v = add("verify", cmd_verify, "run property suites")
    v.add_argument("--all", action="store_true")
    v.add_argument("--suite", action="append", metavar="NAME")
    v.add_argument("--list", action="store_true", help="list suite names")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--scale", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true",
                   help="print '-' for elapsed time so reports are reproducible")

    s = add("sig", cmd_sig, "signature p1,p2,p3,p4 of a pairing")
    s.add_argument("pairing")
    conv_flag(s)

    d = add("dagger", cmd_dagger, "adjoint of a matrix between pairings")
    d.add_argument("matrix")
    d.add_argument("--dom", required=True, help="pairing on the domain")
    d.add_argument("--cod", help="pairing on the codomain (default: --dom)")
    conv_flag(d)
    json_flag(d)

    du = add("dual", cmd_dual, "dual pairing")
    du.add_argument("pairing")
    conv_flag(du)
    json_flag(du)

    t = add("tensor", cmd_tensor, "tensor product of two pairings")
    t.add_argument("first")
    t.add_argument("second")
    t.add_argument("--sign", choices=["super", "graded"],
                   help="tensor sign rule, if different from the pairings' convention")
    conv_flag(t)
    json_flag(t)

    e = add("eval", cmd_eval, "evaluate a bordism term under a functor spec")
    e.add_argument("term")
    e.add_argument("spec")
    json_flag(e)

    so = add("solve", cmd_solve, "find an evaluation making a dagger functor")
    so.add_argument("pairing")
    so.add_argument("--theta", help="matrix file for the image of the spin flip")
    so.add_argument("--flavor", choices=["spin", "oriented"], default="spin")
    so.add_argument("--target", choices=["shilb", "sherm"])
    conv_flag(so)
    json_flag(so)

    pa = add("parse", cmd_parse, "parse a bordism term and print its normal form")
    pa.add_argument("term")
    pa.add_argument("--flavor", choices=["spin", "oriented"], default="spin")

    de = add("demo", cmd_demo, "worked instances")
    de.add_argument("name", choices=["spin-statistics", "counterexample"])
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (FermDaggerError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
