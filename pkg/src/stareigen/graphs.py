"""Star graphs on Sym_n and exact eigenfunction checks.

Two Cayley graph variants are modelled implicitly:

* ``StarS``  -- the Star graph: pi is adjacent to the words obtained by
  exchanging the entry at position 1 with the entry at position s, s = 2..n.
* ``StarJM`` -- the Jucys-Murphy variant: exchange position n with s = 1..n-1.

Exchanging entries at positions p, q is right-composition with the
transposition (p q), so left translations ``pi -> h o pi`` are graph
automorphisms of both variants.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from .errors import IntegralityError, PreconditionError, ResourceError, SizeError
from .perm import (
    Permutation,
    compose,
    enumerate_symmetric_group,
    enumeration_ceiling,
    from_cycle,
    swap_positions,
)

SPECTRUM_CEILING = 6
INTEGRALITY_TOL = 1e-8


class Variant(str, enum.Enum):
    STAR = "StarS"
    JM = "StarJM"


@dataclass(frozen=True)
class GraphVariant:
    kind: Variant
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", Variant(self.kind))
        if self.n < 2:
            raise SizeError("star graphs need n >= 2")

    @property
    def pivot(self) -> int:
        return 1 if self.kind is Variant.STAR else self.n

    @property
    def degree(self) -> int:
        return self.n - 1

    def generator_positions(self) -> range:
        if self.kind is Variant.STAR:
            return range(2, self.n + 1)
        return range(1, self.n)


def star(n: int) -> GraphVariant:
    return GraphVariant(Variant.STAR, n)


def star_jm(n: int) -> GraphVariant:
    return GraphVariant(Variant.JM, n)


def neighbors(g: GraphVariant, pi: Permutation) -> list[Permutation]:
    if pi.n != g.n:
        raise SizeError(f"vertex of size {pi.n} on a graph over Sym_{g.n}")
    piv = g.pivot
    return [swap_positions(pi, piv, s) for s in g.generator_positions()]


def second_neighborhood_identity(g: GraphVariant) -> list[Permutation]:
    """The 3-cycles (1 r s) in block order: s = 2..n, and within a block r ascending over {2..n} - {s}.

    (1 r s) is read as 1 -> r -> s -> 1.
    """
    if g.kind is not Variant.STAR:
        raise PreconditionError("second neighbourhood ordering is defined for StarS only")
    n = g.n
    if n < 3:
        raise PreconditionError("the second neighbourhood is empty for n < 3")
    out = []
    for s in range(2, n + 1):
        for r in range(2, n + 1):
            if r != s:
                out.append(from_cycle(n, (1, r, s)))
    return out


@dataclass
class SparseFunction:
    """Finitely supported exact function on Sym_n (absent keys are 0)."""

    n: int
    entries: dict = field(default_factory=dict)
    variant: Variant | None = None

    def __post_init__(self):
        clean = {}
        for pi, v in self.entries.items():
            if pi.n != self.n:
                raise SizeError(f"key {pi} does not belong to Sym_{self.n}")
            v = Fraction(v)
            if v:
                clean[pi] = v
        self.entries = clean
        if self.variant is not None:
            self.variant = Variant(self.variant)

    def evaluate(self, pi: Permutation) -> Fraction:
        return self.entries.get(pi, Fraction(0))

    __call__ = evaluate

    def support(self) -> Iterable[Permutation]:
        return self.entries.keys()

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "SparseFunction") -> "SparseFunction":
        if self.n != other.n:
            raise SizeError("cannot add functions on different Sym_n")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return SparseFunction(self.n, out, self.variant)

    def scale(self, c) -> "SparseFunction":
        c = Fraction(c)
        return SparseFunction(self.n, {k: c * v for k, v in self.entries.items()}, self.variant)

    def __eq__(self, other):
        return isinstance(other, SparseFunction) and self.n == other.n and self.entries == other.entries

    @classmethod
    def from_callable(cls, n: int, f: Callable, variant=None, ceiling=None) -> "SparseFunction":
        return cls(n, {pi: f(pi) for pi in enumerate_symmetric_group(n, ceiling)}, variant)


def as_evaluator(f) -> Callable[[Permutation], object]:
    """Accept anything with ``evaluate`` (SparseFunction, PISpec, PermSum) or a plain callable."""
    ev = getattr(f, "evaluate", None)
    if ev is not None:
        return ev
    if callable(f):
        return f
    raise TypeError(f"cannot evaluate {type(f).__name__} as a function on Sym_n")


@dataclass
class EigenReport:
    holds: bool
    nonzero: bool
    theta: Fraction
    checked: int
    witnesses: list = field(default_factory=list)

    @property
    def is_eigenfunction(self) -> bool:
        return self.holds and self.nonzero


def verify_eigenfunction(
    g: GraphVariant,
    f,
    theta,
    *,
    max_witnesses: int = 10,
    support_closure: bool = False,
    ceiling: int | None = None,
) -> EigenReport:
    """Check ``theta * f(x) == sum of f over N(x)`` exactly at every vertex.

    With ``support_closure`` only vertices in supp(f) and its neighbourhood are
    visited.  Everywhere else both sides are 0, so for a function given by an
    explicit support the check is still complete; it only needs ``f.support()``.
    """
    theta = Fraction(theta)
    ev = as_evaluator(f)
    if support_closure:
        supp = list(f.support())
        vertices = set(supp)
        for x in supp:
            vertices.update(neighbors(g, x))
        vertices = sorted(vertices)
    else:
        limit = enumeration_ceiling() if ceiling is None else ceiling
        if g.n > limit:
            raise ResourceError(
                f"full vertex sweep of Sym_{g.n} exceeds the ceiling {limit}; use support_closure"
            )
        vertices = enumerate_symmetric_group(g.n, limit)

    holds = True
    nonzero = False
    checked = 0
    witnesses = []
    for x in vertices:
        fx = ev(x)
        if fx:
            nonzero = True
        total = sum(ev(y) for y in neighbors(g, x))
        checked += 1
        if theta * fx != total:
            holds = False
            if len(witnesses) < max_witnesses:
                witnesses.append(x)
    return EigenReport(holds, nonzero, theta, checked, witnesses)


def adjacency_matrix(g: GraphVariant, ceiling: int = SPECTRUM_CEILING) -> tuple[np.ndarray, list]:
    if g.n > ceiling:
        raise ResourceError(f"dense adjacency for Sym_{g.n} exceeds the spectrum ceiling {ceiling}")
    verts = list(enumerate_symmetric_group(g.n, max(ceiling, g.n)))
    index = {v: i for i, v in enumerate(verts)}
    a = np.zeros((len(verts), len(verts)))
    for i, v in enumerate(verts):
        for u in neighbors(g, v):
            a[i, index[u]] = 1.0
    return a, verts


def spectrum_report(g: GraphVariant, ceiling: int = SPECTRUM_CEILING, tol: float = INTEGRALITY_TOL) -> dict:
    """Integer eigenvalue -> multiplicity, via a symmetric floating eigensolver.

    Raises IntegralityError if any eigenvalue is farther than ``tol`` from an integer.
    """
    a, _ = adjacency_matrix(g, ceiling)
    vals = np.linalg.eigvalsh(a)
    rounded = np.rint(vals)
    dev = np.abs(vals - rounded)
    if dev.max() > tol:
        bad = float(vals[int(dev.argmax())])
        raise IntegralityError(f"eigenvalue {bad!r} is not within {tol} of an integer")
    return dict(sorted(Counter(int(x) for x in rounded).items()))


def jm_isomorphism(f: SparseFunction, direction: str = "to_jm") -> SparseFunction:
    """Transport f between StarS and StarJM by exchanging positions 1 and n of the argument.

    pi -> pi o (1 n) maps StarS edges onto StarJM edges and is an involution,
    so both directions apply the same relabelling.
    """
    if direction not in ("to_jm", "to_star"):
        raise ValueError(f"direction must be 'to_jm' or 'to_star', not {direction!r}")
    target = Variant.JM if direction == "to_jm" else Variant.STAR
    source = Variant.STAR if target is Variant.JM else Variant.JM
    if f.variant is not None and f.variant is not source:
        raise PreconditionError(f"{direction} expects a {source.value} function, got {f.variant.value}")
    n = f.n
    if n < 2:
        raise SizeError("n must be at least 2")
    return SparseFunction(n, {swap_positions(pi, 1, n): v for pi, v in f.entries.items()}, target)


def translate(f, h: Permutation):
    """The function x -> f(h^-1 o x); eigenfunctions map to eigenfunctions (left translation)."""
    ev = as_evaluator(f)
    h_inv = h.inverse()
    return lambda x: ev(compose(h_inv, x))
