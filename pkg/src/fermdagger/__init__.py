"""Exact super Hermitian linear algebra and one-dimensional spin TQFTs over Q(i)."""

from __future__ import annotations

from .bordism1 import BordMorphism, Flavor
from .dsl import parseBordTerm, print_term
from .exactnum import Scalar, format_scalar, parse_scalar
from .hermforms import (CompactMode, Pairing, PositivityClass, SignatureQuad, compactness,
                        convEquivalence, dagger, dualPairing, signature, tensorPairing,
                        transfer)
from .supervect import Convention, EvenMap, SuperDims
from .tqft import FunctorSpec, ValidationReport, evaluate, solveDuality, validate
from .verify import runAll, runSuite

__version__ = "0.1.0"

__all__ = [
    "BordMorphism", "CompactMode", "Convention", "EvenMap", "Flavor", "FunctorSpec",
    "Pairing", "PositivityClass", "Scalar", "SignatureQuad", "SuperDims",
    "ValidationReport", "compactness", "convEquivalence", "dagger", "dualPairing",
    "evaluate", "format_scalar", "parseBordTerm", "parse_scalar", "print_term",
    "runAll", "runSuite", "signature", "solveDuality", "tensorPairing", "transfer",
    "validate",
]
