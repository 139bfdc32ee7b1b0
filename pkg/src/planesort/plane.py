"""Plane permutations and the block-interchange action on them.

A plane permutation is a pair ``(s, pi)`` where ``s`` is a cyclic arrangement
of the ground set, stored as a sequence anchored at ``s[0]``, and ``pi`` is any
permutation of the same ground set.  Its diagonal ``s o pi^-1`` is what the
block-interchange action preserves, so ``pi`` is always recoverable from the
new arrangement and the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import CycleStats, GroundSet, Permutation, PermutationError, compose, cycle_stats


class InternalConsistencyError(AssertionError):
    """A case label and the recomputed cycle change disagree."""


@dataclass(frozen=True)
class Interchange:
    """Swap the blocks ``s[i..j]`` and ``s[k..l]`` (inclusive positions)."""

    i: int
    j: int
    k: int
    l: int

    def validate(self, size: int) -> None:
        if not (1 <= self.i <= self.j < self.k <= self.l <= size - 1):
            raise PermutationError(f"invalid interchange {self.as_tuple()} for a sequence of length {size}")

    @property
    def is_transpose(self) -> bool:
        return self.k == self.j + 1

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def apply_to(self, seq: Sequence) -> tuple:
        """The sequence with the two blocks swapped; positions index ``seq`` directly."""
        i, j, k, l = self.i, self.j, self.k, self.l
        seq = tuple(seq)
        return seq[:i] + seq[k:l + 1] + seq[j + 1:k] + seq[i:j + 1] + seq[l + 1:]

    def __str__(self) -> str:
        kind = "transpose" if self.is_transpose else "interchange"
        return f"{kind}({self.i},{self.j},{self.k},{self.l})"


def transpose(i: int, j: int, l: int) -> Interchange:
    return Interchange(i, j, j + 1, l)


class PlanePermutation:
    __slots__ = ("s", "pi", "_spos", "_diag")

    def __init__(self, s: Sequence[int], pi: Permutation):
        s = tuple(s)
        g = pi.ground
        if len(s) != len(g) or set(s) != set(g.elements):
            raise PermutationError("s must list every ground element exactly once")
        self.s = s
        self.pi = pi
        self._spos = None
        self._diag = None

    @classmethod
    def from_diagonal(cls, s: Sequence[int], diag: Permutation) -> "PlanePermutation":
        """The plane permutation on arrangement ``s`` whose diagonal is ``diag``."""
        sigma = Permutation.cycle_of(tuple(s), diag.ground)
        p = cls(s, compose(diag.inverse(), sigma))
        p._diag = diag
        return p

    @property
    def ground(self) -> GroundSet:
        return self.pi.ground

    def __len__(self) -> int:
        return len(self.s)

    def position(self, x: int) -> int:
        if self._spos is None:
            self._spos = {x: r for r, x in enumerate(self.s)}
        return self._spos[x]

    def bottom_row(self) -> tuple[int, ...]:
        return tuple(self.pi(x) for x in self.s)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanePermutation) and self.s == other.s and self.pi == other.pi

    def __hash__(self) -> int:
        return hash((self.s, self.pi))

    def __repr__(self) -> str:
        return f"PlanePermutation(s={list(self.s)}, pi={self.pi})"

    def __str__(self) -> str:
        return render_two_row(self)


def successor_cycle(p: PlanePermutation) -> Permutation:
    """The cycle ``s_r -> s_(r+1)``, closing back to ``s_0``."""
    return Permutation.cycle_of(p.s, p.ground)


def diagonal(p: PlanePermutation) -> Permutation:
    if p._diag is None:
        p._diag = compose(successor_cycle(p), p.pi.inverse())
    return p._diag


def apply_interchange(p: PlanePermutation, h: Interchange) -> PlanePermutation:
    """Swap two blocks of ``s`` and adjust ``pi`` so the diagonal is unchanged."""
    m = len(p.s)
    h.validate(m)
    g = p.ground
    sh = h.apply_to(p.s)
    dinv = diagonal(p).inverse()._map
    idx = [g.index(x) for x in sh]
    new = [0] * m
    for r in range(m):
        new[idx[r]] = dinv[idx[(r + 1) % m]]
    q = PlanePermutation.__new__(PlanePermutation)
    q.s = sh
    q.pi = Permutation(g, new, check=False)
    q._spos = None
    q._diag = p._diag
    return q


def render_two_row(p: PlanePermutation) -> str:
    top = [str(x) for x in p.s]
    bot = [str(x) for x in p.bottom_row()]
    w = max(len(t) for t in top + bot)
    return " ".join(t.rjust(w) for t in top) + "\n" + " ".join(b.rjust(w) for b in bot)


# Expected cycle-count change for each labelled pattern.
TRANSPOSE_DELTA = {"Case1": -2, "Case2": 2, "Case3": 0, "Case4": 0, "Case5": 0, "Case6": 0}
INTERCHANGE_GAIN_CASES = ("CaseA", "CaseB", "CaseC", "CaseD", "CaseE")


@dataclass(frozen=True)
class GainClassification:
    delta_C: int
    delta_C_odd: int
    delta_C_ev: int
    case_label: str
    before: CycleStats
    after: CycleStats
    result: PlanePermutation


def boundary_points(p: PlanePermutation, h: Interchange) -> tuple[int, int, int, int]:
    """``(s[i-1], s[j], s[k-1], s[l])``; the only points where ``pi`` changes."""
    s = p.s
    return s[h.i - 1], s[h.j], s[h.k - 1], s[h.l]


def _cyclic_order(pi: Permutation, start: int, targets) -> list[int]:
    """Targets that share ``start``'s cycle, in the order met when walking from ``start``."""
    want = set(targets)
    out = []
    x = pi(start)
    while x != start:
        if x in want:
            out.append(x)
        x = pi(x)
    return out


def case_pattern(p: PlanePermutation, h: Interchange) -> str:
    """Label how the boundary points sit in the cycles of ``pi``."""
    I, J, K, L = boundary_points(p, h)
    pi = p.pi
    if h.is_transpose:
        from_i = _cyclic_order(pi, I, (J, L))
        if len(from_i) == 2:
            return "Case2" if from_i == [L, J] else "Case3"
        if from_i == [J]:
            return "Case4"
        if from_i == [L]:
            return "Case6"
        return "Case5" if _cyclic_order(pi, J, (L,)) else "Case1"
    from_i = _cyclic_order(pi, I, (J, K, L))
    if len(from_i) == 3:
        return {
            (J, L, K): "CaseA",
            (K, J, L): "CaseB",
            (K, L, J): "CaseC",
            (L, J, K): "CaseD",
        }.get(tuple(from_i), "other")
    if from_i == [K] and _cyclic_order(pi, J, (L,)) == [L]:
        return "CaseE"
    return "other"


def classify_gain(p: PlanePermutation, h: Interchange) -> GainClassification:
    """Recompute the cycle change under ``h`` and label the case it falls in.

    Raises :class:`InternalConsistencyError` when the label predicts a
    different change than the one observed.
    """
    q = apply_interchange(p, h)
    before = cycle_stats(p.pi)
    after = cycle_stats(q.pi)
    label = case_pattern(p, h)
    dc = after.C - before.C
    if h.is_transpose:
        if TRANSPOSE_DELTA[label] != dc:
            raise InternalConsistencyError(f"{label} predicts {TRANSPOSE_DELTA[label]:+d}, observed {dc:+d}")
    elif (label in INTERCHANGE_GAIN_CASES) != (dc == 2):
        raise InternalConsistencyError(f"{label} inconsistent with observed change {dc:+d}")
    return GainClassification(
        delta_C=dc,
        delta_C_odd=after.C_odd - before.C_odd,
        delta_C_ev=after.C_ev - before.C_ev,
        case_label=label,
        before=before,
        after=after,
        result=q,
    )


def all_interchanges(size: int, transposes_only: bool = False):
    """Every valid interchange on a sequence of ``size`` positions (position 0 fixed)."""
    top = size - 1
    for i in range(1, top + 1):
        for j in range(i, top + 1):
            if transposes_only:
                for l in range(j + 1, top + 1):
                    yield Interchange(i, j, j + 1, l)
                continue
            for k in range(j + 1, top + 1):
                for l in range(k, top + 1):
                    yield Interchange(i, j, k, l)
