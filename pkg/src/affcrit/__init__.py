"""Exact combinatorics of critical-level category O for untwisted affine Kac-Moody algebras."""
from .errors import PreconditionError
from .rootsys import AffineWeight, CartanType, ImaginaryRoot, RealRoot, RootSystem, build_root_system
from .weights import Window

__all__ = [
    "AffineWeight",
    "CartanType",
    "ImaginaryRoot",
    "PreconditionError",
    "RealRoot",
    "RootSystem",
    "Window",
    "build_root_system",
]
