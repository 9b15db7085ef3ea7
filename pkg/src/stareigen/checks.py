"""The reproduction checks, one per acceptance criterion.

Each check returns :class:`CheckResult` objects with a deterministic ``detail``
string; the CLI and the test suite share them.  ``max_n`` caps the sizes that
need a sweep over Sym_n.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .decomposition import decompose, verify_decomposition, verify_support_partitions
from .errors import IntegralityError
from .graphs import Variant, spectrum_report, star, star_jm, verify_eigenfunction
from .linalg import rank
from .perm import enumerate_symmetric_group
from .pi import PISpec, all_specs, evaluate, f2_basis, m1_label, random_spec
from .reconstruction import (
    build_mn,
    check_block_structure,
    closed_form_det,
    det_exact,
    verify_reconstruction_theorem,
)
from .tableaux import (
    Tableau,
    TabloidSum,
    jm_on_perm_sum,
    jm_on_tabloid_sum,
    phi,
    phi_polytabloid_alt,
    pipeline_tableaux,
    polytabloid,
    psi,
    verify_polytabloid_eigen,
)

DEFAULT_SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    key: str
    claim: str
    passed: bool
    detail: str


def _sizes(lo: int, hi: int, max_n: int | None) -> range:
    return range(lo, hi + 1 if max_n is None else min(hi, max_n) + 1)


def check_pi_family(max_n: int | None = None, seed: int = DEFAULT_SEED, random_per_n: int = 200) -> CheckResult:
    """PI specs are eigenfunctions with eigenvalue n-m-1 on both graphs."""
    rng = random.Random(seed)
    checked = failed = 0
    first_bad = None
    for n in _sizes(3, 6, max_n):
        graphs = {Variant.STAR: star(n), Variant.JM: star_jm(n)}
        ms = [m for m in range(1, n) if n > 2 * m]
        if n <= 4:
            specs = [s for v in graphs for m in ms for s in all_specs(n, m, v)]
        else:
            variants = list(graphs)
            specs = [
                random_spec(rng, n, ms[i % len(ms)], variants[(i // len(ms)) % 2]) for i in range(random_per_n)
            ]
        for spec in specs:
            rep = verify_eigenfunction(graphs[spec.variant], spec, spec.eigenvalue)
            checked += 1
            if not rep.is_eigenfunction:
                failed += 1
                first_bad = first_bad or spec
    detail = f"{checked} specs checked, {failed} failed"
    if first_bad:
        detail += f"; first failure {first_bad}"
    return CheckResult("1", "PI family: eigenvalue n-m-1", failed == 0 and checked > 0, detail)


def inner(f, g, n: int) -> Fraction:
    """Counting inner product over Sym_n."""
    return sum((Fraction(evaluate(f, p)) * evaluate(g, p) for p in enumerate_symmetric_group(n)), Fraction(0))


def _gram(basis: list[PISpec], n: int) -> tuple[list[list[int]], list[list[int]]]:
    values = [[evaluate(f, p) for p in enumerate_symmetric_group(n)] for f in basis]
    return [[sum(a * b for a, b in zip(u, v)) for v in values] for u in values], values


def check_f2_basis(max_n: int | None = None) -> CheckResult:
    """Eigen checks, pairwise orthogonality and linear independence of the f_i^{2,k}.

    The orthogonality part does not hold: <f_i^{2,k}, f_i^{2,k'}> = (n-1)! and,
    for i != i', <f_i^{2,k}, f_i'^{2,k'}> is -2(n-2)! or -(n-2)!.  The check
    still tests it as stated and reports the first offending pair.
    """
    eigen_ok = rank_ok = orth_ok = True
    notes = []
    first_pair = ""
    for n in _sizes(3, 6, max_n):
        basis = f2_basis(n)
        g = star(n)
        bad = [f for f in basis if not verify_eigenfunction(g, f, n - 2).is_eigenfunction]
        eigen_ok &= not bad
        gram, values = _gram(basis, n)
        r = rank(values)
        rank_ok &= r == len(basis)
        off = [(a, b) for a, b in itertools.combinations(range(len(basis)), 2) if gram[a][b] != 0]
        if off and not first_pair:
            a, b = off[0]
            first_pair = f"<{m1_label(basis[a])},{m1_label(basis[b])}> = {gram[a][b]} at n={n}"
        orth_ok &= not off
        notes.append(f"n={n}: {len(basis) - len(bad)}/{len(basis)} eigen, rank {r}, {len(off)} non-orthogonal pairs")
    if first_pair:
        notes.append("first " + first_pair)
    return CheckResult(
        "2",
        "F_2 basis: eigenfunctions, pairwise orthogonal, independent",
        eigen_ok and rank_ok and orth_ok,
        "; ".join(notes),
    )


def check_polytabloid_eigen(max_n: int | None = None) -> CheckResult:
    count = bad = 0
    first = None
    for n in _sizes(3, 6, max_n):
        for t in pipeline_tableaux(n):
            rep = verify_polytabloid_eigen(t)
            count += 1
            if not (rep.holds and rep.x_part_holds and rep.y_part_holds):
                bad += 1
                first = first or t
    detail = f"{count} tableaux, {bad} failed" + (f"; first failure {first}" if first else "")
    return CheckResult("3", "J_n(e_t) = (n-m-1) e_t with J^X(e_t) = k e_t", bad == 0 and count > 0, detail)


def _phi_checks(t: Tableau) -> bool:
    n = t.n
    e = polytabloid(t)
    v = phi(e)
    if v != phi_polytabloid_alt(t):
        return False
    if phi(jm_on_tabloid_sum(e, n)) != jm_on_perm_sum(v):
        return False
    theta = n - t.shape.m - 1
    return verify_eigenfunction(star_jm(n), psi(v), theta, support_closure=True).is_eigenfunction


def _equiv_combination(tabs: list[Tableau], rng: random.Random) -> bool:
    """A random integer combination of same-shape polytabloids stays an eigenvector through phi."""
    n = tabs[0].n
    theta = n - tabs[0].shape.m - 1
    x = TabloidSum()
    while not x.terms:
        for t in tabs:
            x = x + polytabloid(t).scale(rng.randint(-3, 3))
    if jm_on_tabloid_sum(x, n) != x.scale(theta):
        return False
    v = phi(x)
    if jm_on_perm_sum(v) != v.scale(theta):
        return False
    return verify_eigenfunction(star_jm(n), psi(v), theta, support_closure=True).is_eigenfunction


def check_phi_correspondence(max_n: int | None = None, seed: int = DEFAULT_SEED, sample_n6: int = 6) -> CheckResult:
    rng = random.Random(seed)
    count = bad = combos = combos_bad = 0
    for n in _sizes(3, 6, max_n):
        tabs = list(pipeline_tableaux(n))
        if n == 6:
            tabs = rng.sample(tabs, min(sample_n6, len(tabs)))
        for t in tabs:
            count += 1
            bad += not _phi_checks(t)
        by_shape = {}
        for t in tabs:
            by_shape.setdefault(t.shape, []).append(t)
        for group in by_shape.values():
            combos += 1
            combos_bad += not _equiv_combination(group, rng)
    detail = f"{count} tableaux ({bad} failed), {combos} random combinations ({combos_bad} failed)"
    return CheckResult("4", "phi: two paths agree, commutes with J_n, gives StarJM eigenfunctions",
                       bad == 0 and combos_bad == 0 and count > 0, detail)


def example1_matches(n: int, i: int) -> bool:
    """t_i = (1..i-1, i+1..n / i) decomposes into the single function with I = (n), P = ((1, i))."""
    first = tuple(v for v in range(1, n + 1) if v != i)
    t = Tableau((first, (i,)))
    specs = decompose(t)
    if specs != [PISpec(n, Variant.JM, (n,), ((1, i),))]:
        return False
    for p in enumerate_symmetric_group(n):
        want = 1 if p[i] == n else -1 if p[1] == n else 0
        if evaluate(specs[0], p) != want:
            return False
    return True


def example2_matches(n: int, i: int, j: int) -> bool:
    """t_ij = (1, i_2, ..., n / i, j) gives the two summands with P = ((1, i), (i_2, j)) and its swap."""
    first = tuple(v for v in range(1, n + 1) if v not in (i, j))
    i2 = first[1]
    t = Tableau((first, (i, j)))
    if not t.is_standard():
        raise ValueError(f"t_ij is not standard for i={i}, j={j}")
    got = sorted(s.P for s in decompose(t))
    want = sorted([((1, i), (i2, j)), ((i2, j), (1, i))])
    return got == want and verify_decomposition(t).equal


def example2_indices(max_n: int | None = None) -> list[tuple[int, int, int]]:
    """(n, i, j) with 2 <= i < j <= n-1, n > 4 and t_ij standard (i_2 < j)."""
    out = []
    for n in _sizes(5, 6, max_n):
        for i, j in itertools.combinations(range(2, n), 2):
            i2 = min(v for v in range(2, n + 1) if v not in (i, j))
            if i2 < j:
                out.append((n, i, j))
    return out


def check_decomposition(max_n: int | None = None) -> CheckResult:
    count = bad = desc_bad = 0
    for n in _sizes(3, 6, max_n):
        for t in pipeline_tableaux(n, require_n_gt_2m=True):
            count += 1
            bad += not verify_decomposition(t, "asc").equal
            desc_bad += not verify_decomposition(t, "desc").equal
    ex1 = all(example1_matches(n, i) for n in _sizes(3, 6, max_n) for i in range(2, n))
    ex2 = all(example2_matches(n, i, j) for n, i, j in example2_indices(max_n))
    detail = (
        f"{count} tableaux, {bad} mismatched, {desc_bad} mismatched with descending y; "
        f"t_i family {'ok' if ex1 else 'FAILED'}, t_ij family {'ok' if ex2 else 'FAILED'}"
    )
    return CheckResult("5", "f_phi(e_t) is the sum of the P_pi PI-eigenfunctions",
                       count > 0 and bad == 0 and desc_bad == 0 and ex1 and ex2, detail)


def check_support(max_n: int | None = None) -> CheckResult:
    count = bad = 0
    for n in _sizes(3, 5, max_n):
        for t in pipeline_tableaux(n, require_n_gt_2m=True):
            count += 1
            bad += not verify_support_partitions(t).holds
    return CheckResult("6", "support partitions of f_phi(e_t), its summands and inner sums",
                       count > 0 and bad == 0, f"{count} tableaux, {bad} failed")


def check_determinant() -> CheckResult:
    rows = []
    ok = True
    for n in range(4, 11):
        d, c = det_exact(build_mn(n)), closed_form_det(n)
        ok &= d == c
        rows.append(f"n={n}: {d}" + ("" if d == c else f" != {c}"))
    spots = {4: -4, 5: 135, 6: -2816}
    ok &= all(closed_form_det(n) == v for n, v in spots.items())
    return CheckResult("7", "det(M_n) closed form", ok, "; ".join(rows))


def check_blocks() -> CheckResult:
    bad = [n for n in range(4, 9) if not check_block_structure(build_mn(n)).agrees]
    return CheckResult("8", "M_n block structure", not bad,
                       "n=4..8 agree" if not bad else f"disagree at n={bad}")


def check_reconstruction(max_n: int | None = None, seed: int = DEFAULT_SEED) -> CheckResult:
    plan = [(n, trials) for n, trials in ((4, 100), (5, 25)) if max_n is None or n <= max_n]
    ok = bool(plan)
    parts = []
    for n, trials in plan:
        rep = verify_reconstruction_theorem(n, trials, seed)
        ok &= rep.holds
        parts.append(f"n={n}: {rep.exact}/{trials} exact, {rep.eigen_ok}/{trials} eigen")
    return CheckResult("9", "reconstruction from the second neighbourhood", ok, "; ".join(parts))


def check_spectrum(max_n: int | None = None, tol: float = 1e-8) -> CheckResult:
    ok = True
    parts = []
    sizes = _sizes(4, 6, max_n)
    for n in sizes:
        try:
            spec = spectrum_report(star(n), ceiling=max(6, n), tol=tol)
        except IntegralityError as exc:
            ok = False
            parts.append(f"n={n}: {exc}")
            continue
        good = (
            spec.get(n - 1) == 1
            and spec.get(-(n - 1)) == 1
            and 0 in spec
            and spec.get(n - 2) == (n - 1) * (n - 2)
        )
        ok &= good
        parts.append(f"n={n}: " + " ".join(f"{k}^{v}" for k, v in sorted(spec.items(), reverse=True)))
    return CheckResult("10", "integral spectrum, simple +-(n-1), 0 present, mult(n-2)", ok and len(sizes) > 0,
                       "; ".join(parts))


def run_all(max_n: int | None = None, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    out = [check_pi_family(max_n, seed)]
    out.append(check_f2_basis(max_n))
    out.append(check_polytabloid_eigen(max_n))
    out.append(check_phi_correspondence(max_n, seed))
    out.append(check_decomposition(max_n))
    out.append(check_support(max_n))
    out.append(check_determinant())
    out.append(check_blocks())
    out.append(check_reconstruction(max_n, seed))
    out.append(check_spectrum(max_n))
    return out
