import random
from fractions import Fraction

import pytest
import sympy

from stareigen.errors import PreconditionError
from stareigen.graphs import SparseFunction, Variant, star, verify_eigenfunction
from stareigen.perm import Permutation, from_cycle
from stareigen.pi import evaluate, f2_basis, m1_spec
from stareigen.reconstruction import (
    ReconstructionMatrix,
    block_formula_matrix,
    build_mn,
    check_block_structure,
    closed_form_det,
    combination,
    det_exact,
    reconstruct,
    restrict,
    second_neighborhood,
    verify_reconstruction_theorem,
)


def test_m4_shape_and_values():
    mat = build_mn(4)
    assert mat.size == 6 and all(len(r) == 6 for r in mat.entries)
    assert {x for r in mat.entries for x in r} <= {-1, 0, 1}
    for r, f in enumerate(mat.row_labels):
        for c, p in enumerate(mat.col_labels):
            assert mat.entries[r][c] == evaluate(f, p)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_leading_blocks(n):
    mat = build_mn(n)
    d = n - 2
    for r in range(d):
        assert list(mat.entries[r][:d]) == [-1 if c == r else 0 for c in range(d)]
        for b in range(1, n - 1):
            block_row = mat.entries[r][b * d:(b + 1) * d]
            assert list(block_row) == [0] + [1] * (d - 1)


@pytest.mark.parametrize("n", range(4, 11))
def test_block_structure(n):
    assert check_block_structure(build_mn(n)).agrees


@pytest.mark.parametrize("n", range(4, 9))
def test_reversed_cycles_fail_the_block_oracle(n):
    rows = f2_basis(n)
    # (1 s r) instead of (1 r s): the inverse 3-cycle
    cols = [p.inverse() for p in second_neighborhood(n)]
    assert cols[0] == from_cycle(n, (1, 2, 3))
    entries = tuple(tuple(evaluate(f, c) for c in cols) for f in rows)
    rep = check_block_structure(ReconstructionMatrix(n, entries, tuple(rows), tuple(cols)))
    assert not rep.agrees and rep.first_difference is not None


def test_c_block_zero_column():
    n = 6
    d = n - 2
    m = block_formula_matrix(n)
    # block (i1=4, i2=3) is C^{2}: top row all -1 except column 2
    r0, c0 = 2 * d, 1 * d
    assert m[r0][c0:c0 + d] == [-1, 0, -1, -1]
    assert all(x == 0 for row in m[r0 + 1:r0 + d] for x in row[c0:c0 + d])


@pytest.mark.parametrize("n", range(3, 11))
def test_determinant(n):
    assert det_exact(build_mn(n)) == closed_form_det(n)


def test_determinant_spot_values():
    assert [closed_form_det(n) for n in (3, 4, 5, 6)] == [-1, -4, 135, -2816]
    assert det_exact(build_mn(3)) == -1


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_determinant_second_route(n):
    assert sympy.Matrix(build_mn(n).entries).det() == closed_form_det(n)


def test_mn_precondition():
    with pytest.raises(PreconditionError):
        build_mn(2)
    with pytest.raises(PreconditionError):
        check_block_structure(build_mn(3))


def test_reconstruct_zero():
    n = 4
    rec = reconstruct(n, {v: 0 for v in second_neighborhood(n)})
    assert all(c == 0 for c in rec.coefficients)
    assert rec.to_sparse().is_zero()


def test_reconstruct_first_basis_function():
    n = 4
    rec = reconstruct(n, restrict(m1_spec(n, 2, 2, 3), n))
    assert rec.coefficients == [1] + [0] * 5


def test_reconstruct_random_combination_n5():
    n = 5
    rng = random.Random(11)
    coeffs = [rng.randint(-9, 9) for _ in range(12)]
    f = combination(n, coeffs)
    rec = reconstruct(n, restrict(f, n))
    assert rec.coefficients == coeffs
    assert rec.to_sparse() == f


def test_reconstruct_rational_boundary():
    n = 4
    coeffs = [Fraction(1, 3), 0, Fraction(-5, 2), 1, 0, 2]
    f = combination(n, coeffs)
    rec = reconstruct(n, restrict(f, n))
    assert rec.coefficients == coeffs


def test_boundary_key_errors():
    n = 4
    b = {v: 1 for v in second_neighborhood(n)}
    missing = dict(list(b.items())[1:])
    with pytest.raises(PreconditionError, match="1 missing"):
        reconstruct(n, missing)
    extra = dict(b)
    extra[Permutation.identity(n)] = 0
    with pytest.raises(PreconditionError, match="1 extra"):
        reconstruct(n, extra)


def test_round_trips():
    assert verify_reconstruction_theorem(4, 100, seed=1).holds
    assert verify_reconstruction_theorem(5, 25, seed=2).holds


def test_round_trip_at_other_base():
    base = Permutation([3, 1, 4, 2])
    rep = verify_reconstruction_theorem(4, 20, seed=3, base=base)
    assert rep.holds


def test_reconstruction_is_an_eigenfunction():
    n = 5
    rng = random.Random(5)
    boundary = {v: rng.randint(-4, 4) for v in second_neighborhood(n)}
    rec = reconstruct(n, boundary)
    f = rec.to_sparse()
    assert verify_eigenfunction(star(n), f, n - 2).is_eigenfunction
    assert all(f(v) == boundary[v] for v in boundary)
    assert isinstance(f, SparseFunction) and f.variant is Variant.STAR
