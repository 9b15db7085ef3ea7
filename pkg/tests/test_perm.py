import math

import pytest
from hypothesis import given, strategies as st

from stareigen.errors import ParseError, ResourceError, SizeError
from stareigen.perm import (
    Permutation,
    compose,
    enumerate_symmetric_group,
    format_perm,
    from_cycle,
    parse_cycles,
    parse_perm,
    swap_positions,
    transposition,
)


def perms(n_min=1, n_max=7):
    return st.integers(n_min, n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(Permutation)
    )


def same_size_pair(count):
    return st.integers(1, 7).flatmap(
        lambda n: st.tuples(*[st.permutations(list(range(1, n + 1))).map(Permutation)] * count)
    )


def test_compose_examples():
    assert compose(Permutation([2, 1, 3]), Permutation([1, 3, 2])) == Permutation([2, 3, 1])
    b = Permutation([3, 1, 4, 2])
    assert compose(Permutation.identity(4), b) == b
    assert compose(Permutation([2, 1]), Permutation([2, 1])) == Permutation([1, 2])


def test_compose_size_mismatch():
    with pytest.raises(SizeError):
        compose(Permutation([1, 2]), Permutation([1, 2, 3]))


def test_swap_positions_examples():
    assert swap_positions(Permutation([3, 1, 2]), 1, 2) == Permutation([1, 3, 2])
    assert swap_positions(Permutation.identity(5), 1, 5) == Permutation([5, 2, 3, 4, 1])
    with pytest.raises(SizeError):
        swap_positions(Permutation.identity(3), 1, 4)
    with pytest.raises(SizeError):
        swap_positions(Permutation.identity(3), 2, 2)


def test_from_cycle_examples():
    assert from_cycle(4, (1, 3, 2)) == Permutation([3, 1, 2, 4])
    assert from_cycle(4, (1, 2)) == Permutation([2, 1, 3, 4])
    assert from_cycle(4, ()) == Permutation.identity(4)
    with pytest.raises(ParseError):
        from_cycle(4, (1, 2, 1))
    with pytest.raises(SizeError):
        from_cycle(4, (1, 5))


def test_enumeration_counts():
    assert len(list(enumerate_symmetric_group(3))) == 6
    assert list(enumerate_symmetric_group(1)) == [Permutation([1])]
    five = list(enumerate_symmetric_group(5))
    assert len(five) == 120 and len(set(five)) == 120
    assert five == sorted(five)


def test_enumeration_ceiling(monkeypatch):
    with pytest.raises(ResourceError):
        next(enumerate_symmetric_group(5, ceiling=4))
    monkeypatch.setenv("STAREIGEN_CEILING", "3")
    with pytest.raises(ResourceError):
        next(enumerate_symmetric_group(4))


def test_parse_and_format():
    p = parse_perm("[3, 1, 2]")
    assert p.word == (3, 1, 2)
    assert format_perm(p) == "[3,1,2]"
    with pytest.raises(ParseError, match="not a permutation"):
        parse_perm("[2,1,1]")
    with pytest.raises(ParseError):
        parse_perm("3,1,2")
    assert parse_cycles("(1 3 2)", 4) == Permutation([3, 1, 2, 4])


def test_one_based_access():
    p = Permutation([3, 1, 2])
    assert p[1] == 3 and p(1) == 3 and p.inverse()(3) == 1


@given(perms())
def test_inverse(p):
    e = Permutation.identity(p.n)
    assert compose(p, p.inverse()) == e
    assert compose(p.inverse(), p) == e
    assert p.inverse().inverse() == p


@given(same_size_pair(2))
def test_sign_multiplicative(pair):
    a, b = pair
    assert compose(a, b).sign() == a.sign() * b.sign()


@given(same_size_pair(3))
def test_compose_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms(n_min=2), st.data())
def test_swap_is_right_transposition(p, data):
    q1 = data.draw(st.integers(1, p.n))
    q2 = data.draw(st.integers(1, p.n).filter(lambda x: x != q1))
    s = swap_positions(p, q1, q2)
    assert s == compose(p, transposition(p.n, q1, q2))
    diff = [i for i in range(1, p.n + 1) if s[i] != p[i]]
    assert diff == sorted((q1, q2))
    assert swap_positions(s, q1, q2) == p


@given(perms())
def test_cycles_rebuild(p):
    acc = Permutation.identity(p.n)
    for c in p.cycles():
        acc = compose(acc, from_cycle(p.n, c))
    assert acc == p
    assert p.sign() == (-1) ** sum(len(c) - 1 for c in p.cycles())


def test_factorial_sizes():
    for n in range(1, 7):
        assert sum(1 for _ in enumerate_symmetric_group(n)) == math.factorial(n)
