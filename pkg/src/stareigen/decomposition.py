"""Writing f_{phi(e_t)} as a sum of PI-eigenfunctions of the StarJM graph.

Permutations are grouped into cosets of Sym({1..n-m}); a coset is named by
its code ``(pi^-1(n-m+1), ..., pi^-1(n))``, the cells of rows 2..s of the
tableaux t' with tau(t') in the coset.

For t standard with n in its upper right cell, lambda_1 > lambda_2 and
n > 2m, every summand is indexed by a row rearrangement sigma of rows 2..s
and an even column permutation pi of t.  Cell c of rows 2..s is assigned the
column of t that holds sigma(t)(c); the pair for c is read from that column of
pi(t): (top, second) entries for a row-2 cell, (y_c, entry in c's row) for a
lower cell, where y_c is a fixed element of Y_t.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

from .errors import PreconditionError, ResourceError
from .graphs import Variant
from .perm import Permutation, compose, enumerate_symmetric_group, permutations_of_set
from .pi import PISpec, evaluate, validate
from .tableaux import (
    Tableau,
    apply_perm,
    column_split,
    column_stabilizer,
    eval_f_phi_e,
    require_pipeline_tableau,
    row_stabilizer_tail,
    tau,
)

DECOMPOSITION_CAP = 10**6


def coset_code(t: Tableau) -> tuple:
    """Rows 2..s of t read left to right, top to bottom."""
    return tuple(v for r in t.rows[1:] for v in r)


def coset_code_of_perm(pi: Permutation, m: int) -> tuple:
    n = pi.n
    inv = pi.inverse()
    return tuple(inv(v) for v in range(n - m + 1, n + 1))


def coset_members(code: tuple, n: int) -> list[Permutation]:
    """All permutations with the given code."""
    m = len(code)
    free_positions = [p for p in range(1, n + 1) if p not in code]
    out = []
    for arrangement in itertools.permutations(range(1, n - m + 1)):
        word = [0] * n
        for p, v in zip(free_positions, arrangement):
            word[p - 1] = v
        for idx, p in enumerate(code):
            word[p - 1] = n - m + 1 + idx
        out.append(Permutation(word))
    return out


def tableau_coset(t: Tableau) -> set:
    """tau of every tableau sharing rows 2..s with t."""
    first = t.rows[0]
    return {tau(Tableau((arr,) + t.rows[1:])) for arr in itertools.permutations(first)}


def even_column_stabilizer(t: Tableau) -> list[tuple]:
    """CA_t as factored tuples (pi_1, ..., pi_k), one even permutation per column of length > 1."""
    cols = [c for c in t.columns() if len(c) > 1]
    size = math.prod(max(1, math.factorial(len(c)) // 2) for c in cols)
    if size > DECOMPOSITION_CAP:
        raise ResourceError(f"CA_t has {size} elements, above the cap {DECOMPOSITION_CAP}")
    factors = [[p for p in permutations_of_set(c, t.n) if p.sign() == 1] for c in cols]
    return list(itertools.product(*factors))


def combine(factors: tuple, n: int) -> Permutation:
    acc = Permutation.identity(n)
    for p in factors:
        acc = compose(acc, p)
    return acc


def lower_cells(t: Tableau) -> list[tuple[int, int]]:
    """Cells of rows 3..s as (row, position), 0-based, in reading order."""
    return [(r, p) for r in range(2, len(t.rows)) for p in range(len(t.rows[r]))]


def y_assignment(t: Tableau, order: str = "asc") -> dict:
    """Distinct elements of Y_t for the cells of rows 3..s, taken in sorted order."""
    if order not in ("asc", "desc"):
        raise ValueError(f"y-assignment must be 'asc' or 'desc', not {order!r}")
    _, y = column_split(t)
    cells = lower_cells(t)
    pool = sorted(y, reverse=(order == "desc"))
    if len(pool) < len(cells):
        raise PreconditionError(f"|Y_t| = {len(pool)} < m - k = {len(cells)}; needs n > 2m")
    return dict(zip(cells, pool))


@dataclass(frozen=True)
class PPiVector:
    n: int
    m: int
    k: int
    pairs: tuple
    tableau: Tableau
    sigma: Permutation
    pi: Permutation

    def spec(self) -> PISpec:
        return PISpec(self.n, Variant.JM, tuple(range(self.n - self.m + 1, self.n + 1)), self.pairs)


def build_p_pi(t: Tableau, sigma: Permutation, pi: Permutation, ys: dict) -> PPiVector:
    """Pair vector for the summand (sigma, pi); pi must preserve the columns of t."""
    sh = t.shape
    u_cols = apply_perm(pi, t).columns()
    st = apply_perm(sigma, t)
    pairs = []
    for r in range(1, len(t.rows)):
        for p in range(len(t.rows[r])):
            j = t.rows[r].index(st.rows[r][p])
            col = u_cols[j]
            if r == 1:
                pairs.append((col[0], col[1]))
            else:
                pairs.append((ys[(r, p)], col[r]))
    return PPiVector(t.n, sh.m, sh.k, tuple(pairs), t, sigma, pi)


def omega_code(p: PPiVector, omega) -> tuple:
    """First coordinate of pair t where omega[t] == 1, second where it is 0."""
    if len(omega) != p.m:
        raise ValueError(f"omega must have length {p.m}")
    return tuple(a if bit else b for (a, b), bit in zip(p.pairs, omega))


def _require(t: Tableau):
    require_pipeline_tableau(t)
    sh = t.shape
    if not t.n > 2 * sh.m:
        raise PreconditionError(f"n = {t.n} must exceed 2m = {2 * sh.m}")


def decomposition_terms(t: Tableau, y_order: str = "asc") -> list[PPiVector]:
    """P-vectors for every (sigma, pi), sigma over R_t(2)x..xR_t(s), pi over CA_t, in that order."""
    _require(t)
    ys = y_assignment(t, y_order)
    sigmas = row_stabilizer_tail(t)
    cas = even_column_stabilizer(t)
    if len(sigmas) * len(cas) > DECOMPOSITION_CAP:
        raise ResourceError(f"{len(sigmas) * len(cas)} summands exceed the cap {DECOMPOSITION_CAP}")
    out = []
    for sigma in sigmas:
        for factors in cas:
            out.append(build_p_pi(t, sigma, combine(factors, t.n), ys))
    return out


def decompose(t: Tableau, y_order: str = "asc") -> list[PISpec]:
    return [validate(p.spec()) for p in decomposition_terms(t, y_order)]


@dataclass
class DecompositionReport:
    tableau: Tableau
    summands: int
    duplicates: int
    checked: int
    equal: bool
    mismatches: list = field(default_factory=list)


def verify_decomposition(t: Tableau, y_order: str = "asc", max_mismatches: int = 10) -> DecompositionReport:
    """Compare the summed PI functions with f_{phi(e_t)} at every permutation."""
    specs = decompose(t, y_order)
    dup = sum(c - 1 for c in Counter(specs).values() if c > 1)
    equal = True
    mismatches = []
    checked = 0
    for pi in enumerate_symmetric_group(t.n):
        lhs = eval_f_phi_e(t, pi)
        rhs = sum(evaluate(s, pi) for s in specs)
        checked += 1
        if lhs != rhs:
            equal = False
            if len(mismatches) < max_mismatches:
                mismatches.append((pi, lhs, rhs))
    return DecompositionReport(t, len(specs), dup, checked, equal, mismatches)


def y_cosets_cancel(t: Tableau, y_order: str = "asc") -> bool:
    """The summed function vanishes on every summand coset whose code meets Y_t."""
    _, y = column_split(t)
    terms = decomposition_terms(t, y_order)
    specs = [p.spec() for p in terms]
    codes = set()
    for p in terms:
        for omega in itertools.product((0, 1), repeat=p.m):
            code = omega_code(p, omega)
            if y.intersection(code):
                codes.add(code)
    for code in codes:
        rep = coset_members(code, t.n)[0]
        if sum(evaluate(s, rep) for s in specs):
            return False
    return True


def _coset_values(f, n: int, m: int):
    """Group f over Sym_n by coset code; returns (constant_on_cosets, {code: value} for nonzero cosets)."""
    values = {}
    constant = True
    for pi in enumerate_symmetric_group(n):
        code = coset_code_of_perm(pi, m)
        v = f(pi)
        if code in values and values[code] != v:
            constant = False
        values.setdefault(code, v)
    return constant, {c: v for c, v in values.items() if v}


@dataclass
class SupportReport:
    tableau: Tableau
    values_in_pm1: bool
    polytabloid_supports: bool
    summand_supports: bool
    inner_sum_supports: bool
    inner_sums_disjoint: bool
    union_is_support: bool

    @property
    def holds(self) -> bool:
        return all(
            (
                self.values_in_pm1,
                self.polytabloid_supports,
                self.summand_supports,
                self.inner_sum_supports,
                self.inner_sums_disjoint,
                self.union_is_support,
            )
        )


def verify_support_partitions(t: Tableau, y_order: str = "asc") -> SupportReport:
    """Check the coset structure of the supports of f_{phi(e_t)}, of each summand and of each inner sum.

    * f_{phi(e_t)} is a (0,-1,1)-function; its +/- supports are the cosets
      [s(p(t))], p in C_t even/odd, s permuting within rows 2..s of p(t).
    * each summand is +1 on the cosets P^Omega with Omega of even weight,
      -1 on those of odd weight, and 0 elsewhere.
    * the inner sum f_sigma over CA_t is a (0,-1,1)-function equal to sgn(r)
      on the coset [r(sigma(t))] for r in C_t and 0 elsewhere; distinct sigma
      give disjoint supports whose union is the support of f_{phi(e_t)}.
    """
    _require(t)
    n, m = t.n, t.shape.m
    const, actual = _coset_values(lambda p: eval_f_phi_e(t, p), n, m)
    values_ok = const and all(v in (-1, 1) for v in actual.values())

    predicted = {}
    consistent = True
    for p in column_stabilizer(t):
        pt = apply_perm(p, t)
        for s in row_stabilizer_tail(pt):
            code = coset_code(apply_perm(s, pt))
            if predicted.setdefault(code, p.sign()) != p.sign():
                consistent = False
    poly_ok = consistent and predicted == actual

    terms = decomposition_terms(t, y_order)
    summand_ok = True
    for pv in terms:
        spec = pv.spec()
        c, got = _coset_values(spec.evaluate, n, m)
        want = {}
        for omega in itertools.product((0, 1), repeat=m):
            want[omega_code(pv, omega)] = -1 if sum(omega) % 2 else 1
        if not c or got != want:
            summand_ok = False

    by_sigma = {}
    for pv in terms:
        by_sigma.setdefault(pv.sigma, []).append(pv.spec())
    inner_ok = True
    supports = []
    for sigma, specs in by_sigma.items():
        c, got = _coset_values(lambda p: sum(evaluate(s, p) for s in specs), n, m)
        st = apply_perm(sigma, t)
        want = {coset_code(apply_perm(r, st)): r.sign() for r in column_stabilizer(t)}
        if not c or got != want or any(v not in (-1, 1) for v in got.values()):
            inner_ok = False
        supports.append(got)

    disjoint = True
    union = {}
    for got in supports:
        if union.keys() & got.keys():
            disjoint = False
        union.update(got)
    return SupportReport(t, values_ok, poly_ok, summand_ok, inner_ok, disjoint, union == actual)
