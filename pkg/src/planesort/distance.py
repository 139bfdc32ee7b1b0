"""Transposition and block-interchange distances of unsigned sequences.

A sequence ``a = a_1 ... a_n`` on [n] is lifted to the cycle
``s_bar = (0, a_1, ..., a_n)`` on [n]* and paired with ``p_t = (n, n-1, ..., 1, 0)``.
All cycle statistics below are of the product ``p_t * s_bar``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from .perm import (
    GroundSet,
    Permutation,
    PermutationError,
    compose,
    cycle_stats,
    parse_values,
    stirling_first_unsigned,
)
from .plane import Interchange, PlanePermutation, apply_interchange, classify_gain, transpose


def as_sequence(a) -> tuple[int, ...]:
    """Validate a one-line sequence on [n]; accepts a string or an iterable of ints."""
    if isinstance(a, str):
        a = parse_values(a)
    a = tuple(int(x) for x in a)
    if sorted(a) != list(range(1, len(a) + 1)):
        raise PermutationError(f"not a permutation of 1..{len(a)}: {list(a)}")
    return a


def p_t(n: int) -> Permutation:
    """The cycle ``n -> n-1 -> ... -> 1 -> 0 -> n`` on [n]*."""
    return Permutation.cycle_of(tuple(range(n, -1, -1)), GroundSet.starred(n))


@dataclass(frozen=True)
class AugmentedCycleForm:
    s_bar: tuple[int, ...]
    p_t: Permutation
    product: Permutation

    @property
    def n(self) -> int:
        return len(self.s_bar) - 1


def augment(a) -> AugmentedCycleForm:
    a = as_sequence(a)
    n = len(a)
    s_bar = (0,) + a
    pt = p_t(n)
    return AugmentedCycleForm(s_bar, pt, compose(pt, Permutation.cycle_of(s_bar, GroundSet.starred(n))))


def plane_of(a) -> PlanePermutation:
    """``(s_bar, p_t * s_bar)``, the plane permutation whose diagonal is ``p_t^-1``."""
    form = augment(a)
    return PlanePermutation.from_diagonal(form.s_bar, form.p_t.inverse())


@dataclass(frozen=True)
class Bounds:
    lower_cycles: int
    lower_odd: int
    lower_even: int
    upper: int
    parity_ok: bool = True

    @property
    def lower_best(self) -> int:
        return max(self.lower_cycles, self.lower_odd, self.lower_even)


def _half_up(d: int) -> tuple[int, bool]:
    d = abs(d)
    return (d + 1) // 2, d % 2 == 0


def td_bounds(a, gamma: Permutation | None = None) -> Bounds:
    """Lower and upper bounds on the transposition distance of ``a``.

    With ``gamma`` (a permutation of [n]*) the lower bounds are the halved
    cycle, odd-cycle and even-cycle gaps between ``p_t s_bar gamma`` and
    ``gamma``.  The default ``gamma = (p_t s_bar)^-1`` gives the classical
    cycle-graph bounds.  Odd gaps are rounded up and reported through
    ``parity_ok``.
    """
    form = augment(a)
    n = form.n
    prod = form.product
    if gamma is None:
        gamma = prod.inverse()
    elif gamma.ground != prod.ground:
        raise PermutationError(f"gamma must act on {{0..{n}}}")
    after = cycle_stats(compose(prod, gamma))
    base = cycle_stats(gamma)
    lc, ok1 = _half_up(after.C - base.C)
    lo, ok2 = _half_up(after.C_odd - base.C_odd)
    le, ok3 = _half_up(after.C_ev - base.C_ev)
    return Bounds(lc, lo, le, n + 1 - prod.cycle_count(), ok1 and ok2 and ok3)


def bid_exact(a) -> int:
    """Block-interchange distance ``(n + 1 - C(p_t s_bar)) / 2``."""
    form = augment(a)
    gap = form.n + 1 - form.product.cycle_count()
    if gap % 2:
        raise ArithmeticError("odd cycle gap for a product of two equal-length cycles")
    return gap // 2


def find_gain_interchange(p: PlanePermutation) -> Interchange:
    """A block-interchange raising the cycle count of ``p.pi`` by two.

    ``p`` must have diagonal ``p_t^-1`` and an unsorted arrangement.  ``x`` is
    the largest value whose successor ``x + 1`` sits before it; ``y`` is the
    largest value above ``x`` lying between ``x``'s predecessor-of-successor
    and ``x``.  When ``y = n`` its successor wraps to position 0.
    """
    s = p.s
    n = len(s) - 1
    if s[0] != 0:
        raise PermutationError("arrangement must be anchored at 0")
    pos = {v: r for r, v in enumerate(s)}
    x = max((v for v in range(1, n) if pos[v + 1] < pos[v]), default=None)
    if x is None:
        raise PermutationError("sequence is already sorted")
    i = pos[x + 1]
    k = pos[x] + 1
    j = max(range(i - 1, k), key=lambda r: s[r])
    y = s[j]
    assert y > x and j >= i
    l = n if y == n else pos[y + 1] - 1
    if l == k - 1:
        return transpose(i, j, l)
    return Interchange(i, j, k, l)


def expand_interchange(h: Interchange) -> list[Interchange]:
    """Rewrite a block-interchange as one or two adjacent-block swaps."""
    if h.is_transpose:
        return [h]
    i, j, k, l = h.as_tuple()
    moved = l - k + 1
    return [transpose(i, k - 1, l), transpose(i + moved, j + moved, l)]


@dataclass(frozen=True)
class TraceStep:
    move: object
    before: tuple[int, ...]
    after: tuple[int, ...]
    C_before: int
    C_after: int


@dataclass
class SortTrace:
    start: tuple[int, ...]
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def moves(self) -> list:
        return [st.move for st in self.steps]

    @property
    def final(self) -> tuple[int, ...]:
        return self.steps[-1].after if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)


def sort_by_block_interchanges(a, expand_to_transpositions: bool = False) -> SortTrace:
    """Sort ``a`` with ``bid(a)`` block-interchanges, each gaining two cycles.

    With ``expand_to_transpositions`` every non-adjacent interchange is
    replaced by its two-transposition rewrite, giving at most ``2 bid(a)``
    transpositions.
    """
    a = as_sequence(a)
    trace = SortTrace(a)
    p = plane_of(a)
    c = p.pi.cycle_count()
    while not p.pi.is_identity():
        h = find_gain_interchange(p)
        if not expand_to_transpositions:
            g = classify_gain(p, h)
            if g.delta_C != 2:
                raise AssertionError(f"{h} gained {g.delta_C:+d} cycles on {p.s}")
            q = g.result
            c_new = g.after.C
            trace.steps.append(TraceStep(h, p.s[1:], q.s[1:], c, c_new))
            p, c = q, c_new
            continue
        for t in expand_interchange(h):
            q = apply_interchange(p, t)
            c_new = q.pi.cycle_count()
            trace.steps.append(TraceStep(t, p.s[1:], q.s[1:], c, c_new))
            p, c = q, c_new
    return trace


def bid_census_formula(n: int) -> dict[int, int]:
    """Number of sequences on [n] at each block-interchange distance, in closed form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = {}
    denom = (n + 1) * (n + 2)
    for k in range(0, n // 2 + 1):
        num = 2 * stirling_first_unsigned(n + 2, n + 1 - 2 * k)
        q, r = divmod(num, denom)
        if r:
            raise ArithmeticError(f"closed form not integral at n={n}, k={k}")
        out[k] = q
    if sum(out.values()) != factorial(n):
        raise ArithmeticError(f"closed form does not sum to {n}!")
    return out


@dataclass(frozen=True)
class CycleGap:
    value: int
    witness: Permutation
    identity_witness: Permutation


def max_cycle_gap(alpha: Permutation) -> CycleGap:
    """``max over gamma of |C(alpha gamma) - C(gamma)|``, which equals ``n - C(alpha)``."""
    n = len(alpha.ground)
    return CycleGap(n - alpha.cycle_count(), alpha.inverse(), Permutation.identity(alpha.ground))


def cycle_gap(alpha: Permutation, gamma: Permutation) -> int:
    return abs(compose(alpha, gamma).cycle_count() - gamma.cycle_count())


def apply_moves(a: Sequence[int], moves: Iterable[Interchange]) -> tuple[int, ...]:
    """Apply interchanges given in 1-based sequence positions to ``a``."""
    seq = (0,) + tuple(a)
    for h in moves:
        seq = h.apply_to(seq)
    return seq[1:]
