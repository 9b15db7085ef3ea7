"""Exact eigenfunction machinery for star graphs on the symmetric group.

The main entry points:

* :mod:`stareigen.perm` permutations, composition, enumeration
* :mod:`stareigen.graphs` the StarS and StarJM Cayley graphs, eigen checks
* :mod:`stareigen.pi` PI-eigenfunctions and the eigenvalue n-2 basis
* :mod:`stareigen.tableaux` tableaux, polytabloids, Jucys-Murphy action, phi
* :mod:`stareigen.decomposition` f_phi(e_t) as a sum of PI-eigenfunctions
* :mod:`stareigen.reconstruction` the matrix M_n and reconstruction from N_2
"""
from .errors import (
    IntegralityError,
    ParseError,
    PreconditionError,
    ResourceError,
    SizeError,
    SpecError,
    StarEigenError,
)
from .graphs import GraphVariant, SparseFunction, Variant, star, star_jm, verify_eigenfunction
from .perm import Permutation, compose, enumerate_symmetric_group
from .pi import PISpec, f2_basis

__all__ = [
    "GraphVariant",
    "IntegralityError",
    "PISpec",
    "ParseError",
    "Permutation",
    "PreconditionError",
    "ResourceError",
    "SizeError",
    "SparseFunction",
    "SpecError",
    "StarEigenError",
    "Variant",
    "compose",
    "enumerate_symmetric_group",
    "f2_basis",
    "star",
    "star_jm",
    "verify_eigenfunction",
]
__version__ = "0.1.0"
