"""Young tableaux, tabloids, polytabloids and the embedding of M^lambda into the group algebra.

Conventions (value-composition, see :mod:`stareigen.perm`):

* ``sigma`` acts on a tableau by replacing every entry v with sigma(v).
* ``tau(t)`` is the permutation sending the entry of each cell of t to the
  entry of the same cell of ``id_tableau``.  Then
  ``tau(apply_perm(s, t)) == compose(tau(t), s.inverse())``.
* The group algebra product composes left to right, so its left
  multiplication by g sends a basis element pi to ``compose(pi, g)``.  With
  g = (i n) that exchanges positions i and n of the word, which is exactly
  the StarJM adjacency.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParseError, PreconditionError, ResourceError, SizeError
from .graphs import SparseFunction, Variant
from .perm import Permutation, compose, permutations_of_set, transposition

STABILIZER_CEILING = 10**6


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts or any(p <= 0 for p in parts):
            raise ParseError(f"partition parts must be positive, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return self.n - self.parts[0]

    @property
    def k(self) -> int:
        """Number of columns of length greater than one."""
        return self.parts[1] if len(self.parts) > 1 else 0

    def conjugate(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def admissible(self) -> bool:
        """At least two rows and a strictly longer first row."""
        return self.s >= 2 and self.parts[0] > self.parts[1]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


@dataclass(frozen=True)
class Tableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(tuple(len(r) for r in rows))
        flat = sorted(v for r in rows for v in r)
        if flat != list(range(1, len(flat) + 1)):
            raise ParseError(f"tableau {rows} is not a bijective filling of 1..{len(flat)}")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))]

    def is_standard(self) -> bool:
        rows_ok = all(a < b for r in self.rows for a, b in zip(r, r[1:]))
        cols_ok = all(a < b for c in self.columns() for a, b in zip(c, c[1:]))
        return rows_ok and cols_ok

    def n_upper_right(self) -> bool:
        return self.rows[0][-1] == self.n

    def position(self, v: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            if v in r:
                return i, r.index(v)
        raise KeyError(v)

    def __str__(self):
        return format_tableau(self)


def parse_tableau(text: str) -> Tableau:
    """Parse ``"1,2,5/3,4"``."""
    try:
        rows = [tuple(int(x) for x in part.split(",")) for part in text.strip().split("/")]
    except ValueError:
        raise ParseError(f"cannot parse tableau {text!r}") from None
    return Tableau(tuple(rows))


def format_tableau(t: Tableau) -> str:
    return "/".join(",".join(map(str, r)) for r in t.rows)


def id_tableau(shape: Partition) -> Tableau:
    rows, start = [], 1
    for p in shape.parts:
        rows.append(tuple(range(start, start + p)))
        start += p
    return Tableau(tuple(rows))


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """Standard tableaux of the given shape, in lexicographic order of their row words."""
    parts = shape.parts
    n = shape.n

    def fill(v, rows):
        if v > n:
            yield Tableau(tuple(tuple(r) for r in rows))
            return
        for i, r in enumerate(rows):
            if len(r) < parts[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(v)
                yield from fill(v + 1, rows)
                r.pop()

    found = list(fill(1, [[] for _ in parts]))
    yield from sorted(found, key=lambda t: t.rows)


@dataclass(frozen=True)
class Tabloid:
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(sorted(r)) for r in self.rows))

    @classmethod
    def of(cls, t: Tableau) -> "Tabloid":
        return cls(t.rows)

    def __lt__(self, other):
        return self.rows < other.rows


class TabloidSum:
    """Integer combination of tabloids (an element of M^lambda)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for tb, c in (terms or {}).items():
            if c:
                self.terms[tb] = int(c)

    def __add__(self, other):
        out = dict(self.terms)
        for tb, c in other.terms.items():
            out[tb] = out.get(tb, 0) + c
        return TabloidSum(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return TabloidSum({tb: c * v for tb, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, TabloidSum) and self.terms == other.terms

    def __repr__(self):
        body = " + ".join(f"{c}*{list(map(list, tb.rows))}" for tb, c in sorted(self.terms.items()))
        return f"TabloidSum({body or '0'})"

    def __len__(self):
        return len(self.terms)


class PermSum:
    """Exact rational combination of permutations (an element of the group algebra)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        for pi, c in (terms or {}).items():
            if pi.n != n:
                raise SizeError(f"{pi} is not in Sym_{n}")
            c = Fraction(c)
            if c:
                self.terms[pi] = c

    def __add__(self, other):
        if other.n != self.n:
            raise SizeError("cannot add elements of different group algebras")
        out = dict(self.terms)
        for pi, c in other.terms.items():
            out[pi] = out.get(pi, 0) + c
        return PermSum(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return PermSum(self.n, {pi: c * v for pi, v in self.terms.items()})

    def right_compose(self, g: Permutation) -> "PermSum":
        """Each term pi becomes pi o g (left multiplication in the left-to-right product)."""
        return PermSum(self.n, {compose(pi, g): c for pi, c in self.terms.items()})

    def evaluate(self, pi: Permutation) -> Fraction:
        return self.terms.get(pi, Fraction(0))

    def support(self):
        return self.terms.keys()

    def __eq__(self, other):
        return isinstance(other, PermSum) and self.n == other.n and self.terms == other.terms

    def __repr__(self):
        return f"PermSum(n={self.n}, {len(self.terms)} terms)"


def apply_perm(sigma: Permutation, x):
    """Replace each value v by sigma(v); linear on TabloidSum."""
    if isinstance(x, Tableau):
        if x.n != sigma.n:
            raise SizeError("permutation and tableau sizes differ")
        return Tableau(tuple(tuple(sigma(v) for v in r) for r in x.rows))
    if isinstance(x, Tabloid):
        return Tabloid(tuple(tuple(sigma(v) for v in r) for r in x.rows))
    if isinstance(x, TabloidSum):
        out = {}
        for tb, c in x.terms.items():
            key = apply_perm(sigma, tb)
            out[key] = out.get(key, 0) + c
        return TabloidSum(out)
    raise TypeError(f"cannot act on {type(x).__name__}")


def tau(t: Tableau) -> Permutation:
    ident = id_tableau(t.shape)
    word = [0] * t.n
    for r, ir in zip(t.rows, ident.rows):
        for v, target in zip(r, ir):
            word[v - 1] = target
    return Permutation(word)


def _check_budget(size: int, what: str, ceiling: int):
    if size > ceiling:
        raise ResourceError(f"{what} has {size} elements, above the ceiling {ceiling}")


def _product_of_symmetric_groups(blocks: Iterable[tuple], n: int) -> Iterator[Permutation]:
    factors = [list(permutations_of_set(b, n)) for b in blocks]
    for combo in itertools.product(*factors):
        acc = Permutation.identity(n)
        for p in combo:
            acc = compose(acc, p)
        yield acc


def column_stabilizer(t: Tableau, ceiling: int = STABILIZER_CEILING) -> list[Permutation]:
    cols = [c for c in t.columns() if len(c) > 1]
    _check_budget(math.prod(math.factorial(len(c)) for c in cols), "column stabilizer", ceiling)
    return list(_product_of_symmetric_groups(cols, t.n))


def row_stabilizer_tail(t: Tableau, ceiling: int = STABILIZER_CEILING) -> list[Permutation]:
    """R_t(2) x ... x R_t(s): permutations of the entries within rows 2..s."""
    rows = t.rows[1:]
    _check_budget(math.prod(math.factorial(len(r)) for r in rows), "row stabilizer tail", ceiling)
    return list(_product_of_symmetric_groups(rows, t.n))


@lru_cache(maxsize=4096)
def polytabloid(t: Tableau) -> TabloidSum:
    terms = {}
    for sigma in column_stabilizer(t):
        tb = Tabloid.of(apply_perm(sigma, t))
        terms[tb] = terms.get(tb, 0) + sigma.sign()
    return TabloidSum(terms)


def jm_on_tabloid_sum(x: TabloidSum, n: int, indices: Iterable[int] | None = None) -> TabloidSum:
    """Sum over i of (i n) acting on x; i ranges over 1..n-1 unless ``indices`` is given."""
    idx = range(1, n) if indices is None else indices
    out = TabloidSum()
    for i in idx:
        out = out + apply_perm(transposition(n, i, n), x)
    return out


def jm_on_perm_sum(v: PermSum) -> PermSum:
    n = v.n
    out = PermSum(n)
    for i in range(1, n):
        out = out + v.right_compose(transposition(n, i, n))
    return out


def _tabloid_phi(tb: Tabloid, shape: Partition) -> list[Permutation]:
    blocks = id_tableau(shape).rows
    n = shape.n
    per_row = []
    for values, targets in zip(tb.rows, blocks):
        per_row.append([tuple(zip(arr, targets)) for arr in itertools.permutations(values)])
    out = []
    for combo in itertools.product(*per_row):
        word = [0] * n
        for pairs in combo:
            for v, target in pairs:
                word[v - 1] = target
        out.append(Permutation._trusted(tuple(word)))
    return out


def phi(x, shape: Partition | None = None, ceiling: int = STABILIZER_CEILING) -> PermSum:
    """Send a tabloid {t} to the sum of tau(t') over the tableaux t' in it; linear on TabloidSum."""
    if isinstance(x, Tabloid):
        x = TabloidSum({x: 1})
    if not x.terms:
        if shape is None:
            raise PreconditionError("phi(0) needs an explicit shape")
        return PermSum(shape.n)
    first = next(iter(x.terms))
    sh = shape or Partition(tuple(len(r) for r in first.rows))
    _check_budget(math.prod(math.factorial(p) for p in sh.parts), "tabloid", ceiling)
    terms = {}
    for tb, c in x.terms.items():
        for pi in _tabloid_phi(tb, sh):
            terms[pi] = terms.get(pi, 0) + c
    return PermSum(sh.n, terms)


def phi_polytabloid_alt(t: Tableau) -> PermSum:
    """phi(e_t) as sum over C_t of sgn(pi) times phi({t}) right-composed with pi^-1."""
    base = phi(Tabloid.of(t))
    out = PermSum(t.n)
    for p in column_stabilizer(t):
        out = out + base.right_compose(p.inverse()).scale(p.sign())
    return out


def psi(v: PermSum) -> SparseFunction:
    """View a group algebra element as the coefficient function on the StarJM graph."""
    return SparseFunction(v.n, dict(v.terms), Variant.JM)


def tabloid_of_tau(shape: Partition, pi: Permutation) -> Tabloid:
    """The tabloid {t'} of the tableau t' with tau(t') == pi."""
    inv = pi.inverse()
    return Tabloid(tuple(tuple(inv(v) for v in r) for r in id_tableau(shape).rows))


def eval_f_phi_e(t: Tableau, pi: Permutation) -> int:
    """Coefficient of pi in phi(e_t), without materialising phi(e_t)."""
    return polytabloid(t).terms.get(tabloid_of_tau(t.shape, pi), 0)


def column_split(t: Tableau) -> tuple[frozenset, frozenset]:
    """(X_t, Y_t): entries of the columns of length > 1, and of the length-one columns but the last."""
    k = t.shape.k
    cols = t.columns()
    x = frozenset(v for c in cols[:k] for v in c)
    y = frozenset(c[0] for c in cols[k:-1])
    return x, y


def require_pipeline_tableau(t: Tableau):
    sh = t.shape
    if not sh.admissible():
        raise PreconditionError(f"shape {sh} needs at least two rows and lambda_1 > lambda_2")
    if not t.is_standard():
        raise PreconditionError(f"{format_tableau(t)} is not standard")
    if not t.n_upper_right():
        raise PreconditionError(f"{format_tableau(t)} does not have n in its upper right cell")


@dataclass
class PolytabloidEigenReport:
    tableau: Tableau
    theta: int
    k: int
    holds: bool
    x_part_holds: bool
    y_part_holds: bool
    terms: int = field(default=0)


def verify_polytabloid_eigen(t: Tableau) -> PolytabloidEigenReport:
    """Check J_n(e_t) = (n-m-1) e_t, with J^X(e_t) = k e_t and J^Y(e_t) = |Y_t| e_t."""
    require_pipeline_tableau(t)
    n, sh = t.n, t.shape
    e = polytabloid(t)
    x, y = column_split(t)
    jx = jm_on_tabloid_sum(e, n, sorted(x))
    jy = jm_on_tabloid_sum(e, n, sorted(y))
    full = jm_on_tabloid_sum(e, n)
    theta = n - sh.m - 1
    return PolytabloidEigenReport(
        tableau=t,
        theta=theta,
        k=sh.k,
        holds=full == e.scale(theta),
        x_part_holds=jx == e.scale(sh.k),
        y_part_holds=jy == e.scale(len(y)),
        terms=len(e),
    )


def pipeline_tableaux(n: int, require_n_gt_2m: bool = False) -> Iterator[Tableau]:
    """Standard tableaux with n in the upper right cell, over all admissible shapes of n."""
    for sh in partitions(n):
        if not sh.admissible():
            continue
        if require_n_gt_2m and not n > 2 * sh.m:
            continue
        for t in standard_tableaux(sh):
            if t.n_upper_right():
                yield t
