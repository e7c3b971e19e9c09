"""Computable harmonic analysis on real Grassmannians.

Subpackages cover: even-partition type enumeration and exact densities,
exact rational polynomial arithmetic, Grassmannian geometry with Haar
sampling and the rescaling flow, zonal harmonic construction, spectral
multipliers of the cosine / alpha-cosine / Radon transforms, exact kernel
dimensions of polynomial-coefficient differential operators, and the
factorial / Cauchy determinant identities.
"""

from . import (determinants, exactpoly, grassmann, linalg_exact, partitions,
               pdekernel, transforms, zonal)

__all__ = [
    "determinants", "exactpoly", "grassmann", "linalg_exact",
    "partitions", "pdekernel", "transforms", "zonal",
]

__version__ = "0.1.0"
