"""Permutations of {1..n} in one-line notation.

``Permutation(word)`` stores ``word[p-1] = pi(p)``.  Composition is the usual
function composition acting on values: ``compose(a, b)(x) = a(b(x))``.

Graph adjacency never goes through :func:`compose`; it uses
:func:`swap_positions`, which exchanges two entries of the word and equals
``compose(pi, transposition(p, q))``.
"""
from __future__ import annotations

import itertools
import os
import re
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, ResourceError, SizeError

DEFAULT_CEILING = 7
CEILING_ENV = "STAREIGEN_CEILING"


def enumeration_ceiling() -> int:
    """Largest n for which full enumeration of Sym_n is allowed.

    7 by default (5040 vertices); override with the ``STAREIGEN_CEILING``
    environment variable.  n = 8 costs roughly 8x the time and memory of n = 7.
    """
    raw = os.environ.get(CEILING_ENV)
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{CEILING_ENV} must be an integer, got {raw!r}") from None


class Permutation:
    __slots__ = ("word", "_hash")

    def __init__(self, word: Iterable[int]):
        w = tuple(int(x) for x in word)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ParseError(f"{list(w)} is not a bijection of {{1..{len(w)}}}")
        self.word = w
        self._hash = hash(w)

    @classmethod
    def _trusted(cls, word: tuple) -> "Permutation":
        p = object.__new__(cls)
        p.word = word
        p._hash = hash(word)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, x: int) -> int:
        return self.word[x - 1]

    def __getitem__(self, position: int) -> int:
        # 1-based, matching the pi_p notation
        if not 1 <= position <= len(self.word):
            raise SizeError(f"position {position} outside 1..{len(self.word)}")
        return self.word[position - 1]

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __lt__(self, other):
        return self.word < other.word

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({list(self.word)})"

    def __str__(self):
        return format_perm(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.word)
        for p, v in enumerate(self.word, 1):
            inv[v - 1] = p
        return Permutation._trusted(tuple(inv))

    def sign(self) -> int:
        seen = [False] * len(self.word)
        s = 1
        for start in range(len(self.word)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.word[x] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def is_identity(self) -> bool:
        return all(v == p for p, v in enumerate(self.word, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, len(self.word) + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return ``a o b``, i.e. ``x -> a(b(x))``."""
    if a.n != b.n:
        raise SizeError(f"cannot compose permutations of sizes {a.n} and {b.n}")
    aw = a.word
    return Permutation._trusted(tuple(aw[v - 1] for v in b.word))


def swap_positions(pi: Permutation, p: int, q: int) -> Permutation:
    n = pi.n
    if not (1 <= p <= n and 1 <= q <= n):
        raise SizeError(f"positions ({p}, {q}) outside 1..{n}")
    if p == q:
        raise SizeError("swap_positions needs two distinct positions")
    w = list(pi.word)
    w[p - 1], w[q - 1] = w[q - 1], w[p - 1]
    return Permutation._trusted(tuple(w))


def transposition(n: int, a: int, b: int) -> Permutation:
    return swap_positions(Permutation.identity(n), a, b)


def from_cycle(n: int, cycle: Sequence[int]) -> Permutation:
    """Permutation sending cycle[i] -> cycle[i+1] and the last point back to the first."""
    if len(set(cycle)) != len(cycle):
        raise ParseError(f"cycle {tuple(cycle)} repeats a point")
    for x in cycle:
        if not 1 <= x <= n:
            raise SizeError(f"cycle point {x} outside 1..{n}")
    w = list(range(1, n + 1))
    for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
        w[a - 1] = b
    return Permutation._trusted(tuple(w))


def enumerate_symmetric_group(n: int, ceiling: int | None = None) -> Iterator[Permutation]:
    """All n! permutations in lexicographic order of their words."""
    if n < 1:
        raise SizeError("n must be positive")
    limit = enumeration_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise ResourceError(f"full enumeration of Sym_{n} exceeds the ceiling n <= {limit}")
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(w)


def permutations_of_set(points: Sequence[int], n: int) -> Iterator[Permutation]:
    """Every permutation of Sym_n supported on ``points``, identity first."""
    pts = tuple(points)
    base = list(range(1, n + 1))
    for images in itertools.permutations(pts):
        w = base[:]
        for a, b in zip(pts, images):
            w[a - 1] = b
        yield Permutation._trusted(tuple(w))


_WORD_RE = re.compile(r"^\s*\[\s*([0-9\s,]*)\]\s*$")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str) -> Permutation:
    """Parse ``"[3,1,2]"``."""
    m = _WORD_RE.match(text)
    if not m:
        raise ParseError(f"expected a permutation like [3,1,2], got {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ParseError("empty permutation word")
    try:
        word = [int(x) for x in body.split(",")]
    except ValueError:
        raise ParseError(f"non-integer entry in {text!r}") from None
    try:
        return Permutation(word)
    except ValueError as exc:
        raise ParseError(f"{text.strip()} is not a permutation: {exc}") from None


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1 3 2)"`` or ``"(1 2)(3 4)"``; cycles compose right to left."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return Permutation.identity(n)
    if _CYCLE_RE.sub("", stripped).strip():
        raise ParseError(f"cannot parse cycle notation {text!r}")
    result = Permutation.identity(n)
    for body in _CYCLE_RE.findall(stripped):
        tokens = body.replace(",", " ").split()
        try:
            pts = [int(x) for x in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}") from None
        result = compose(result, from_cycle(n, pts))
    return result


def format_perm(pi: Permutation) -> str:
    return "[" + ",".join(str(v) for v in pi.word) + "]"
