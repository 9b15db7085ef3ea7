"""PI-eigenfunctions of the star graphs.

A spec fixes values ``I = (i_1..i_m)`` and position pairs ``P = ((j_1,k_1)..)``.
At pi the function is 0 unless every i_t sits at position j_t or k_t; then it
is ``(-1)**(number of t with pi_{j_t} == i_t)``.  It is an eigenfunction with
eigenvalue n - m - 1.

The m = 1 functions ``f_i^{j,k}`` used for eigenvalue n - 2 carry the opposite
sign convention (+1 when i is at j).  They are represented by the spec with the
pair reversed, see :func:`m1_spec`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import SpecError
from .graphs import SparseFunction, Variant
from .perm import Permutation, enumerate_symmetric_group


@dataclass(frozen=True)
class PISpec:
    n: int
    variant: Variant
    I: tuple
    P: tuple

    def __post_init__(self):
        object.__setattr__(self, "variant", Variant(self.variant))
        object.__setattr__(self, "I", tuple(int(x) for x in self.I))
        object.__setattr__(self, "P", tuple((int(a), int(b)) for a, b in self.P))

    @property
    def m(self) -> int:
        return len(self.I)

    @property
    def eigenvalue(self) -> int:
        return self.n - self.m - 1

    def evaluate(self, pi: Permutation) -> int:
        return evaluate(self, pi)

    __call__ = evaluate

    def flipped(self, t: int) -> "PISpec":
        """The same spec with pair t (0-based) reversed; this negates the function."""
        P = list(self.P)
        a, b = P[t]
        P[t] = (b, a)
        return PISpec(self.n, self.variant, self.I, tuple(P))


def validate(spec: PISpec) -> PISpec:
    n, m = spec.n, spec.m
    if n < 3:
        raise SpecError(f"n = {n}: the family needs n >= 3")
    if m < 1:
        raise SpecError("m must be at least 1")
    if len(spec.P) != m:
        raise SpecError(f"I has {m} values but P has {len(spec.P)} pairs")
    if n <= 2 * m:
        raise SpecError(f"n = {n} must exceed 2m = {2 * m}")
    if len(set(spec.I)) != m:
        raise SpecError(f"I = {spec.I} has repeated values")
    for v in spec.I:
        if not 1 <= v <= n:
            raise SpecError(f"value {v} in I outside 1..{n}")
    positions = [p for pair in spec.P for p in pair]
    if len(set(positions)) != len(positions):
        raise SpecError(f"P = {spec.P} repeats a position")
    pivot = 1 if spec.variant is Variant.STAR else n
    for p in positions:
        if not 1 <= p <= n:
            raise SpecError(f"position {p} in P outside 1..{n}")
        if p == pivot:
            raise SpecError(f"position {p} is the pivot of {spec.variant.value}")
    return spec


def evaluate(spec: PISpec, pi: Permutation) -> int:
    w = pi.word
    ones = 0
    # zero case takes precedence over the parity rule
    for v, (j, k) in zip(spec.I, spec.P):
        if w[j - 1] == v:
            ones += 1
        elif w[k - 1] != v:
            return 0
    return -1 if ones & 1 else 1


def eval_m1(n: int, i: int, j: int, k: int, pi: Permutation) -> int:
    """f_i^{j,k}: +1 if pi_j == i, -1 if pi_k == i, else 0."""
    if pi[j] == i:
        return 1
    if pi[k] == i:
        return -1
    return 0


def m1_spec(n: int, i: int, j: int, k: int, variant=Variant.STAR) -> PISpec:
    """The spec whose evaluation equals f_i^{j,k}."""
    return PISpec(n, variant, (i,), ((k, j),))


def f2_basis(n: int) -> list[PISpec]:
    """f_i^{2,k}, i in 2..n, k in 3..n, in cohort order.

    Cohort i = 2 is f_2^{2,3}..f_2^{2,n}; cohort i >= 3 starts with f_i^{2,i}
    and continues with the remaining k ascending.
    """
    if n < 3:
        raise SpecError("the basis is defined for n >= 3")
    out = []
    for i in range(2, n + 1):
        ks = list(range(3, n + 1))
        if i >= 3:
            ks.remove(i)
            ks.insert(0, i)
        out.extend(m1_spec(n, i, 2, k) for k in ks)
    return out


def m1_label(spec: PISpec) -> str:
    """Render an m = 1 spec as f_i^{j,k}."""
    (i,), ((k, j),) = spec.I, spec.P
    return f"f_{i}^{{{j},{k}}}"


def as_sparse(spec: PISpec, ceiling: int | None = None) -> SparseFunction:
    return SparseFunction(
        spec.n,
        {pi: v for pi in enumerate_symmetric_group(spec.n, ceiling) if (v := evaluate(spec, pi))},
        spec.variant,
    )


def all_specs(n: int, m: int, variant=Variant.STAR):
    """Every valid spec for (n, m, variant), deterministic order."""
    pivot = 1 if Variant(variant) is Variant.STAR else n
    positions = [p for p in range(1, n + 1) if p != pivot]
    for I in itertools.permutations(range(1, n + 1), m):
        for flat in itertools.permutations(positions, 2 * m):
            P = tuple((flat[2 * t], flat[2 * t + 1]) for t in range(m))
            yield PISpec(n, variant, I, P)


def random_spec(rng: random.Random, n: int, m: int, variant=Variant.STAR) -> PISpec:
    pivot = 1 if Variant(variant) is Variant.STAR else n
    positions = [p for p in range(1, n + 1) if p != pivot]
    I = rng.sample(range(1, n + 1), m)
    flat = rng.sample(positions, 2 * m)
    P = tuple((flat[2 * t], flat[2 * t + 1]) for t in range(m))
    return validate(PISpec(n, variant, tuple(I), P))
