"""Reconstructing eigenfunctions for eigenvalue n-2 from the second neighbourhood.

Rows of M_n are the basis functions f_i^{2,k} (cohort order), columns the
3-cycles (1 r s) around the identity (block order), entries the function
values.  M_n is non-singular, so the restriction of any eigenfunction with
eigenvalue n-2 to the second neighbourhood determines its coefficients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError, SizeError
from .graphs import (
    SparseFunction,
    Variant,
    second_neighborhood_identity,
    star,
    translate,
    verify_eigenfunction,
)
from .linalg import bareiss_det, solve, transpose
from .perm import Permutation, compose
from .pi import evaluate, f2_basis


@dataclass(frozen=True)
class ReconstructionMatrix:
    n: int
    entries: tuple
    row_labels: tuple
    col_labels: tuple

    @property
    def size(self) -> int:
        return len(self.entries)


def build_mn(n: int) -> ReconstructionMatrix:
    """Evaluate every basis function on every second-neighbourhood vertex."""
    if n < 3:
        raise PreconditionError("M_n is defined for n >= 3")
    rows = f2_basis(n)
    cols = second_neighborhood_identity(star(n))
    entries = tuple(tuple(evaluate(f, c) for c in cols) for f in rows)
    return ReconstructionMatrix(n, entries, tuple(rows), tuple(cols))


def closed_form_det(n: int) -> int:
    return (-1) ** (n - 3) * (n - 2) ** (n - 2) * (n * n - 5 * n + 5)


def det_exact(mat: ReconstructionMatrix) -> int:
    return bareiss_det(mat.entries)


def block_formula_matrix(n: int) -> list[list[int]]:
    """M_n assembled from the block formulas: -I, E, D and C^l."""
    d = n - 2

    def minus_identity():
        return [[-1 if r == c else 0 for c in range(d)] for r in range(d)]

    def e_block():
        return [[0 if c == 0 else 1 for c in range(d)] for _ in range(d)]

    def d_block():
        rows = [[1] + [0] * (d - 1)]
        for r in range(1, d):
            rows.append([1] + [-1 if c == r else 0 for c in range(1, d)])
        return rows

    def c_block(l):
        top = [0 if c == l - 1 else -1 for c in range(d)]
        return [top] + [[0] * d for _ in range(d - 1)]

    size = (n - 1) * d
    out = [[0] * size for _ in range(size)]
    for bi, i1 in enumerate(range(2, n + 1)):
        for bj, i2 in enumerate(range(2, n + 1)):
            if i1 == 2:
                block = minus_identity() if i2 == 2 else e_block()
            elif i1 == i2:
                block = d_block()
            else:
                block = c_block(i1 - 2 if i1 > i2 else i1 - 1)
            for r in range(d):
                out[bi * d + r][bj * d : bj * d + d] = block[r]
    return out


@dataclass
class BlockReport:
    n: int
    agrees: bool
    first_difference: tuple | None = None


def check_block_structure(mat: ReconstructionMatrix) -> BlockReport:
    n = mat.n
    if n < 4:
        raise PreconditionError("block formulas are stated for n >= 4")
    formula = block_formula_matrix(n)
    for r, (ev_row, fm_row) in enumerate(zip(mat.entries, formula)):
        for c, (a, b) in enumerate(zip(ev_row, fm_row)):
            if a != b:
                return BlockReport(n, False, (r, c, a, b))
    return BlockReport(n, True)


@dataclass
class Reconstruction:
    n: int
    coefficients: list
    base: Permutation
    basis: list = field(repr=False)

    def evaluate(self, pi: Permutation) -> Fraction:
        x = compose(self.base.inverse(), pi)
        return sum((c * evaluate(f, x) for c, f in zip(self.coefficients, self.basis) if c), Fraction(0))

    __call__ = evaluate

    def to_sparse(self, ceiling: int | None = None) -> SparseFunction:
        return SparseFunction.from_callable(self.n, self.evaluate, Variant.STAR, ceiling)


def second_neighborhood(n: int, base: Permutation | None = None) -> list[Permutation]:
    cols = second_neighborhood_identity(star(n))
    if base is None:
        return cols
    return [compose(base, c) for c in cols]


def reconstruct(n: int, boundary: dict, base: Permutation | None = None) -> Reconstruction:
    """Recover an eigenvalue n-2 eigenfunction from its values on the second neighbourhood of ``base``.

    Solves c M_n = b exactly; the result is the corresponding combination of
    the basis functions, translated so that ``base`` plays the identity's role.
    """
    base = base or Permutation.identity(n)
    if base.n != n:
        raise SizeError(f"base vertex {base} is not in Sym_{n}")
    verts = second_neighborhood(n, base)
    keys = set(boundary)
    missing = [v for v in verts if v not in keys]
    extra = keys.difference(verts)
    if missing or extra:
        raise PreconditionError(
            f"boundary must be exactly the second neighbourhood: {len(missing)} missing, {len(extra)} extra"
        )
    mat = build_mn(n)
    b = [Fraction(boundary[v]) for v in verts]
    coeffs = solve(transpose(mat.entries), b)
    return Reconstruction(n, coeffs, base, list(mat.row_labels))


def restrict(f, n: int, base: Permutation | None = None) -> dict:
    ev = getattr(f, "evaluate", f)
    return {v: Fraction(ev(v)) for v in second_neighborhood(n, base)}


def combination(n: int, coeffs) -> SparseFunction:
    """Sum of coefficient times basis function, materialised over Sym_n."""
    basis = f2_basis(n)
    return SparseFunction.from_callable(
        n, lambda p: sum(c * evaluate(f, p) for c, f in zip(coeffs, basis) if c), Variant.STAR
    )


@dataclass
class RoundTripReport:
    n: int
    trials: int
    exact: int
    eigen_ok: int
    seed: int
    failures: list = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.exact == self.trials and self.eigen_ok == self.trials


def verify_reconstruction_theorem(n: int, trials: int, seed: int, base: Permutation | None = None) -> RoundTripReport:
    """Random integer combinations in [-9, 9] of the basis, restricted and reconstructed."""
    rng = random.Random(seed)
    size = (n - 1) * (n - 2)
    g = star(n)
    exact = eigen_ok = 0
    failures = []
    for trial in range(trials):
        coeffs = [0] * size
        while not any(coeffs):
            coeffs = [rng.randint(-9, 9) for _ in range(size)]
        f = combination(n, coeffs)
        if base is not None:
            moved = translate(f, base)
            f = SparseFunction.from_callable(n, moved, Variant.STAR)
        rec = reconstruct(n, restrict(f, n, base), base)
        got = rec.to_sparse()
        if got == f:
            exact += 1
        else:
            failures.append(trial)
        if verify_eigenfunction(g, got, n - 2).is_eigenfunction:
            eigen_ok += 1
    return RoundTripReport(n, trials, exact, eigen_ok, seed, failures)
