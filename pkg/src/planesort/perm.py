"""Permutations on finite integer ground sets.

A permutation is stored as a tuple of canonical indices, so that composing and
decomposing into cycles never touches the element values.  Composition is
right-to-left: ``compose(f, g)(x) == f(g(x))``, and ``f * g`` means the same.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class PermutationError(ValueError):
    """Malformed permutation input or incompatible operands."""


class GroundSet:
    """An ordered set of distinct integers with a fixed canonical index map."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[int]):
        elements = tuple(int(x) for x in elements)
        index = {x: i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise PermutationError(f"ground set has repeated elements: {elements}")
        self.elements = elements
        self._index = index

    @staticmethod
    @lru_cache(maxsize=None)
    def range(n: int) -> "GroundSet":
        """[n] = {1, ..., n}."""
        return GroundSet(range(1, n + 1))

    @staticmethod
    @lru_cache(maxsize=None)
    def starred(n: int) -> "GroundSet":
        """[n]* = {0, 1, ..., n}."""
        return GroundSet(range(0, n + 1))

    @staticmethod
    @lru_cache(maxsize=None)
    def signed(n: int, neg: int | None = None) -> "GroundSet":
        """{0, ..., n} followed by -1, ..., -neg (``neg`` defaults to ``n``).

        The canonical index of ``-k`` is therefore ``n + k``.
        """
        if neg is None:
            neg = n
        return GroundSet(list(range(0, n + 1)) + [-k for k in range(1, neg + 1)])

    @staticmethod
    def infer(values: Iterable[int]) -> "GroundSet":
        """Ground set of the given values in canonical order (nonnegatives up, then negatives down)."""
        values = set(values)
        pos = sorted(x for x in values if x >= 0)
        neg = sorted((x for x in values if x < 0), reverse=True)
        return GroundSet(pos + neg)

    def index(self, x: int) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PermutationError(f"{x} is not in the ground set") from None

    def __contains__(self, x) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, GroundSet) and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"GroundSet({list(self.elements)})"


@dataclass(frozen=True)
class CycleStats:
    cycles: tuple[tuple[int, ...], ...]
    C: int
    C_odd: int
    C_ev: int
    cycle_type: tuple[int, ...]

    def __str__(self) -> str:
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in self.cycles)


class Permutation:
    """A bijection of a :class:`GroundSet` onto itself.  Immutable."""

    __slots__ = ("ground", "_map", "_hash")

    def __init__(self, ground: GroundSet, index_map: Sequence[int], check: bool = True):
        self.ground = ground
        self._map = tuple(index_map)
        self._hash = None
        if check:
            m = len(ground)
            if len(self._map) != m or sorted(self._map) != list(range(m)):
                raise PermutationError(f"not a bijection on {ground!r}: {self._map}")

    @classmethod
    def identity(cls, ground: GroundSet) -> "Permutation":
        return cls(ground, range(len(ground)), check=False)

    @classmethod
    def from_images(cls, ground: GroundSet, images: Sequence[int]) -> "Permutation":
        """``images[t]`` is the image of the ``t``-th ground element (one-line form)."""
        if len(images) != len(ground):
            raise PermutationError(f"expected {len(ground)} values, got {len(images)}")
        seen = set()
        idx = []
        for y in images:
            if y not in ground:
                raise PermutationError(f"{y} is outside the ground set")
            if y in seen:
                raise PermutationError(f"duplicate value {y}")
            seen.add(y)
            idx.append(ground.index(y))
        return cls(ground, idx, check=False)

    @classmethod
    def from_mapping(cls, ground: GroundSet, mapping: dict) -> "Permutation":
        return cls.from_images(ground, [mapping.get(x, x) for x in ground])

    @classmethod
    def from_cycles(cls, ground: GroundSet, cycles: Iterable[Sequence[int]]) -> "Permutation":
        mapping = {}
        for c in cycles:
            for t, x in enumerate(c):
                if x in mapping:
                    raise PermutationError(f"{x} appears in two cycles")
                mapping[x] = c[(t + 1) % len(c)]
        return cls.from_mapping(ground, mapping)

    @classmethod
    def cycle_of(cls, seq: Sequence[int], ground: GroundSet | None = None) -> "Permutation":
        """The cycle ``seq[0] -> seq[1] -> ... -> seq[-1] -> seq[0]``."""
        if ground is None:
            ground = GroundSet.infer(seq)
        if len(seq) != len(ground):
            raise PermutationError("cycle must cover the whole ground set")
        return cls.from_cycles(ground, [seq])

    def __call__(self, x: int) -> int:
        g = self.ground
        return g.elements[self._map[g.index(x)]]

    @property
    def image(self) -> tuple[int, ...]:
        el = self.ground.elements
        return tuple(el[i] for i in self._map)

    def as_dict(self) -> dict:
        return dict(zip(self.ground.elements, self.image))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._map)
        for a, b in enumerate(self._map):
            inv[b] = a
        return Permutation(self.ground, inv, check=False)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._map == other._map and self.ground == other.ground

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ground, self._map))
        return self._hash

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self._map))

    def cycle_count(self) -> int:
        return count_cycles(self._map)

    def __str__(self) -> str:
        return str(cycle_stats(self))

    def __repr__(self) -> str:
        return f"Permutation({self})"


def parse_one_line(text: str, ground: GroundSet | None = None) -> Permutation:
    """Parse whitespace-separated integers as a one-line permutation.

    Without ``ground`` it defaults to [n] where n is the number of tokens.
    """
    try:
        values = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise PermutationError(f"not an integer list: {text!r}") from exc
    if ground is None:
        ground = GroundSet.range(len(values))
    return Permutation.from_images(ground, values)


def parse_values(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise PermutationError(f"not an integer list: {text!r}") from exc


def format_one_line(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """The map ``x -> outer(inner(x))``."""
    if outer.ground != inner.ground:
        raise PermutationError("cannot compose permutations on different ground sets")
    o = outer._map
    return Permutation(outer.ground, [o[i] for i in inner._map], check=False)


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def conjugate(p: Permutation, tau: Permutation) -> Permutation:
    """``tau p tau^-1``."""
    return compose(compose(tau, p), tau.inverse())


def count_cycles(index_map: Sequence[int]) -> int:
    seen = bytearray(len(index_map))
    c = 0
    for start in range(len(index_map)):
        if not seen[start]:
            c += 1
            x = start
            while not seen[x]:
                seen[x] = 1
                x = index_map[x]
    return c


def cycle_lengths(index_map: Sequence[int]) -> list[int]:
    seen = bytearray(len(index_map))
    out = []
    for start in range(len(index_map)):
        if not seen[start]:
            k = 0
            x = start
            while not seen[x]:
                seen[x] = 1
                x = index_map[x]
                k += 1
            out.append(k)
    return out


def cycle_stats(p: Permutation) -> CycleStats:
    el = p.ground.elements
    m = p._map
    seen = bytearray(len(m))
    cycles = []
    # scanning starts in index order, so each cycle begins at its minimal index
    for start in range(len(m)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = 1
            cyc.append(el[x])
            x = m[x]
        cycles.append(tuple(cyc))
    lengths = [len(c) for c in cycles]
    odd = sum(1 for k in lengths if k % 2)
    return CycleStats(
        cycles=tuple(cycles),
        C=len(cycles),
        C_odd=odd,
        C_ev=len(cycles) - odd,
        cycle_type=tuple(sorted(lengths, reverse=True)),
    )


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] + (n - 1) * (prev[k] if k < n else 0)
    return tuple(row)


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of permutations of [n] with exactly ``k`` cycles."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if k > n:
        return 0
    for m in range(n):  # fill the cache bottom-up to avoid deep recursion
        _stirling_row(m)
    return _stirling_row(n)[k]
