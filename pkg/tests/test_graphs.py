import random
from collections import deque
from fractions import Fraction

import pytest

from stareigen.errors import PreconditionError, ResourceError
from stareigen.graphs import (
    SparseFunction,
    Variant,
    adjacency_matrix,
    jm_isomorphism,
    neighbors,
    second_neighborhood_identity,
    spectrum_report,
    star,
    star_jm,
    translate,
    verify_eigenfunction,
)
from stareigen.perm import Permutation, compose, enumerate_symmetric_group, from_cycle, transposition
from stareigen.pi import PISpec, as_sparse, m1_spec


def test_neighbor_examples():
    e = Permutation.identity(3)
    assert set(neighbors(star(3), e)) == {Permutation([2, 1, 3]), Permutation([3, 2, 1])}
    assert set(neighbors(star_jm(3), e)) == {Permutation([3, 2, 1]), Permutation([1, 3, 2])}


@pytest.mark.parametrize("make", [star, star_jm])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_regular_bipartite_symmetric(make, n):
    g = make(n)
    for p in enumerate_symmetric_group(n):
        nb = neighbors(g, p)
        assert len(nb) == len(set(nb)) == n - 1
        assert p not in nb
        for q in nb:
            assert q.sign() == -p.sign()
            assert p in neighbors(g, q)


def _bfs_distances(g, start):
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in neighbors(g, x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


@pytest.mark.parametrize("n", [3, 4, 5])
def test_second_neighborhood_is_distance_two(n):
    g = star(n)
    n2 = second_neighborhood_identity(g)
    assert len(n2) == len(set(n2)) == (n - 1) * (n - 2)
    dist = _bfs_distances(g, Permutation.identity(n))
    assert set(n2) == {p for p, d in dist.items() if d == 2}


def test_second_neighborhood_order():
    n2 = second_neighborhood_identity(star(4))
    expected = [(1, 3, 2), (1, 4, 2), (1, 2, 3), (1, 4, 3), (1, 2, 4), (1, 3, 4)]
    assert n2 == [from_cycle(4, c) for c in expected]
    assert set(second_neighborhood_identity(star(3))) == {from_cycle(3, (1, 3, 2)), from_cycle(3, (1, 2, 3))}
    with pytest.raises(PreconditionError):
        second_neighborhood_identity(star_jm(4))


def test_verify_examples():
    assert verify_eigenfunction(star(3), m1_spec(3, 2, 2, 3), 1).is_eigenfunction
    for make in (star, star_jm):
        for n in (2, 3, 4):
            one = SparseFunction.from_callable(n, lambda p: 1)
            assert verify_eigenfunction(make(n), one, n - 1).is_eigenfunction
    f = m1_spec(4, 3, 2, 4)
    assert verify_eigenfunction(star(4), f, 2).is_eigenfunction
    bad = verify_eigenfunction(star(4), f, 1)
    assert not bad.holds and bad.witnesses


def test_zero_function_is_not_an_eigenfunction():
    rep = verify_eigenfunction(star(4), SparseFunction(4), 2)
    assert rep.holds and not rep.nonzero and not rep.is_eigenfunction


def test_ceiling_and_support_closure():
    f = SparseFunction(9, {Permutation.identity(9): 1})
    with pytest.raises(ResourceError):
        verify_eigenfunction(star(9), f, 0)
    rep = verify_eigenfunction(star(9), f, 0, support_closure=True)
    assert not rep.holds


@pytest.mark.parametrize("n", [4, 5])
def test_support_closure_agrees_with_full_sweep(n):
    rng = random.Random(n)
    g = star(n)
    verts = list(enumerate_symmetric_group(n))
    for spec in (m1_spec(n, 3, 2, 4), PISpec(n, Variant.STAR, (2,), ((3, 4),))):
        f = as_sparse(spec)
        for theta in (n - 2, n - 3):
            full = verify_eigenfunction(g, f, theta)
            local = verify_eigenfunction(g, f, theta, support_closure=True)
            assert full.holds == local.holds
    noise = SparseFunction(n, {rng.choice(verts): rng.randint(1, 3) for _ in range(5)})
    assert verify_eigenfunction(g, noise, 1).holds == verify_eigenfunction(g, noise, 1, support_closure=True).holds


def test_linearity_spot_check():
    g = star(5)
    f = as_sparse(m1_spec(5, 2, 2, 3))
    h = as_sparse(m1_spec(5, 4, 2, 5)).scale(Fraction(-3, 2))
    assert verify_eigenfunction(g, f + h, 3).is_eigenfunction


def test_value_swap_adjacency_breaks_pi_family():
    # neighbours by left multiplication on values instead of position swaps
    spec = PISpec(4, Variant.STAR, (2,), ((3, 4),))
    ok = True
    for p in enumerate_symmetric_group(4):
        total = sum(spec.evaluate(compose(transposition(4, 1, s), p)) for s in range(2, 5))
        ok &= total == 2 * spec.evaluate(p)
    assert not ok
    assert verify_eigenfunction(star(4), spec, 2).is_eigenfunction


def test_spectrum_n4():
    spec = spectrum_report(star(4))
    assert set(spec) <= set(range(-3, 4))
    assert spec[3] == spec[-3] == 1
    assert spec[2] == 6
    assert 0 in spec
    assert sum(spec.values()) == 24


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spectrum_symmetry_and_variants(n):
    s = spectrum_report(star(n))
    assert all(s[k] == s.get(-k) for k in s)
    assert spectrum_report(star_jm(n)) == s


def test_spectrum_ceiling():
    with pytest.raises(ResourceError):
        adjacency_matrix(star(7))


def test_jm_isomorphism_involution_and_eigen():
    n = 4
    f = as_sparse(m1_spec(n, 3, 2, 4))
    jm = jm_isomorphism(f, "to_jm")
    assert jm.variant is Variant.JM
    assert jm_isomorphism(jm, "to_star") == f
    assert verify_eigenfunction(star_jm(n), jm, n - 2).is_eigenfunction
    with pytest.raises(PreconditionError):
        jm_isomorphism(jm, "to_jm")


@pytest.mark.parametrize("n", [4, 5])
def test_example1_function_transports_to_star(n):
    for i in range(2, n):
        f = SparseFunction.from_callable(n, lambda p: 1 if p[i] == n else -1 if p[1] == n else 0, Variant.JM)
        assert verify_eigenfunction(star_jm(n), f, n - 2).is_eigenfunction
        g = jm_isomorphism(f, "to_star")
        assert verify_eigenfunction(star(n), g, n - 2).is_eigenfunction


def test_translate_preserves_eigenfunctions():
    rng = random.Random(3)
    n = 5
    f = m1_spec(n, 4, 3, 5)
    for _ in range(5):
        h = Permutation(rng.sample(range(1, n + 1), n))
        moved = translate(f, h)
        assert verify_eigenfunction(star(n), moved, n - 2).is_eigenfunction
        assert moved(h) == f(Permutation.identity(n))


def test_sparse_function_drops_zeros():
    f = SparseFunction(3, {Permutation([1, 2, 3]): 0, Permutation([2, 1, 3]): Fraction(1, 2)})
    assert list(f.support()) == [Permutation([2, 1, 3])]
    assert (f + f.scale(-1)).is_zero()
