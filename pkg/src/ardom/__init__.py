"""Exact homological invariants of bound quiver algebras over GF(p).

The package computes dominant dimensions, torsion submodules, grades,
higher torsion-free classes and almost split sequences for bound quiver
algebras presented over a prime field, entirely in exact arithmetic.
"""

from .linalg import PrimeField

__all__ = ["PrimeField"]
__version__ = "0.1.0"
