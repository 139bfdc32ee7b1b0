"""Signed permutations, reversals, and reversal-distance lower bounds.

A signed permutation ``a`` on [n] is embedded as the skew-symmetric arrangement

    s = 0 a_1 ... a_n (-a_n) ... (-a_1)

on {0..n} u {-1..-n}.  Reversals of ``a`` are exactly the symmetric
block-interchanges ``(i, j, 2n+1-j, 2n+1-i)`` of ``s``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .distance import SortTrace, TraceStep
from .perm import GroundSet, Permutation, PermutationError, compose, cycle_stats, parse_values
from .plane import Interchange, PlanePermutation, classify_gain


def as_signed(a) -> tuple[int, ...]:
    if isinstance(a, str):
        a = parse_values(a)
    a = tuple(int(x) for x in a)
    if sorted(abs(x) for x in a) != list(range(1, len(a) + 1)) or 0 in a:
        raise PermutationError(f"absolute values must be exactly 1..{len(a)}: {list(a)}")
    return a


def p_r(n: int) -> Permutation:
    """The cycle ``-1 -> -2 -> ... -> -n -> n -> n-1 -> ... -> 1 -> 0 -> -1``."""
    seq = [-k for k in range(1, n + 1)] + list(range(n, -1, -1))
    return Permutation.cycle_of(seq, GroundSet.signed(n))


@dataclass(frozen=True)
class Reversal:
    """Reverse and negate ``a_i .. a_j`` (1-based, inclusive)."""

    i: int
    j: int

    def validate(self, n: int) -> None:
        if not 1 <= self.i <= self.j <= n:
            raise PermutationError(f"invalid reversal ({self.i},{self.j}) for n={n}")

    def interchange(self, n: int) -> Interchange:
        return Interchange(self.i, self.j, 2 * n + 1 - self.j, 2 * n + 1 - self.i)

    def apply_to(self, a) -> tuple[int, ...]:
        a = tuple(a)
        self.validate(len(a))
        i, j = self.i - 1, self.j
        return a[:i] + tuple(-x for x in reversed(a[i:j])) + a[j:]

    def __str__(self) -> str:
        return f"rho({self.i},{self.j})"


def apply_reversal(a, r: Reversal) -> tuple[int, ...]:
    return r.apply_to(as_signed(a))


def all_reversals(n: int):
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield Reversal(i, j)


@dataclass(frozen=True)
class SkewEmbedding:
    a: tuple[int, ...]
    s: tuple[int, ...]
    p_r: Permutation
    pi: Permutation
    exact: bool

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def plane(self) -> PlanePermutation:
        return PlanePermutation.from_diagonal(self.s, self.p_r.inverse())


def skew_sequence(a) -> tuple[int, ...]:
    a = tuple(a)
    return (0,) + a + tuple(-x for x in reversed(a))


def skew_embed(a) -> SkewEmbedding:
    a = as_signed(a)
    n = len(a)
    s = skew_sequence(a)
    pr = p_r(n)
    pi = compose(pr, Permutation.cycle_of(s, GroundSet.signed(n)))
    return SkewEmbedding(a, s, pr, pi, any(x < 0 for x in a))


def is_skew_symmetric(s) -> bool:
    m = len(s)
    return s[0] == 0 and all(s[k] == -s[m - k] for k in range(1, m))


def reversal_lower_bound(a) -> int:
    """``(2n + 1 - C(p_r s~)) / 2``."""
    e = skew_embed(a)
    gap = 2 * e.n + 1 - e.pi.cycle_count()
    if gap % 2:
        raise ArithmeticError("odd cycle gap in the skew embedding")
    return gap // 2


def reversal_gain(e: SkewEmbedding, r: Reversal) -> int:
    return classify_gain(e.plane, r.interchange(e.n)).delta_C


def find_two_reversal(e: SkewEmbedding) -> Reversal | None:
    """A reversal gaining two cycles, or ``None`` if there is none.

    The mirrored-pair candidate of :func:`mirror_reversal` is tried first;
    if it is missing or does not gain, every reversal is scanned in
    lexicographic ``(i, j)`` order.
    """
    plane = e.plane
    n = e.n
    r = mirror_reversal(e)
    if r is not None and classify_gain(plane, r.interchange(n)).delta_C == 2:
        return r
    return scan_two_reversal(e)


def scan_two_reversal(e: SkewEmbedding) -> Reversal | None:
    """First reversal in lexicographic ``(i, j)`` order that gains two cycles."""
    plane = e.plane
    n = e.n
    for r in all_reversals(n):
        if classify_gain(plane, r.interchange(n)).delta_C == 2:
            return r
    return None


def mirrored_pairs(e: SkewEmbedding) -> list[tuple[int, int]]:
    """Position pairs ``(p, q)``, ``p < n < q``, with ``pi(s_p) = s_q``."""
    n, s, pi = e.n, e.s, e.pi
    pos = {x: r for r, x in enumerate(s)}
    out = []
    for p in range(0, n):
        q = pos[pi(s[p])]
        if n + 1 <= q <= 2 * n:
            out.append((p, q))
    return out


def mirror_reversal(e: SkewEmbedding) -> Reversal | None:
    """Candidate 2-reversal read off a mirrored pair, without scanning.

    A pair ``(p, q)`` with ``q != 2n - p`` yields a reversal spanning
    positions ``p + 1 .. 2n - q`` (or the mirror).  Failing that, when ``-n``
    sits at position ``i <= n`` the reversal ``(i, n)`` is proposed; it gains
    only if ``n`` and ``s_n`` share a cycle, so callers must check.
    """
    n = e.n
    for p, q in mirrored_pairs(e):
        j = 2 * n - q
        if j > p:
            return Reversal(p + 1, j)
        if j < p:
            return Reversal(j + 1, p)
    if -n in e.a:
        return Reversal(e.a.index(-n) + 1, n)
    return None


def _best_reversal(e: SkewEmbedding) -> tuple[Reversal, int]:
    plane = e.plane
    best = None
    for r in all_reversals(e.n):
        d = classify_gain(plane, r.interchange(e.n)).delta_C
        if best is None or d > best[1]:
            best = (r, d)
    return best


@dataclass
class GreedyResult:
    trace: SortTrace
    success: bool
    lower_bound: int

    @property
    def tight(self) -> bool:
        return self.success and len(self.trace) == self.lower_bound


def greedy_sort_reversals(a) -> GreedyResult:
    """Sort by 2-reversals while they exist, else take the best available reversal.

    Gives up after ``2n`` fallback moves without reaching a new maximum
    cycle count.
    """
    a = as_signed(a)
    n = len(a)
    target = tuple(range(1, n + 1))
    trace = SortTrace(a)
    e = skew_embed(a)
    c = e.pi.cycle_count()
    best_c = c
    stall = 0
    while e.a != target:
        r = find_two_reversal(e)
        if r is None:
            r, _ = _best_reversal(e)
            stall += 1
        nxt = skew_embed(r.apply_to(e.a))
        c_new = nxt.pi.cycle_count()
        trace.steps.append(TraceStep(r, e.a, nxt.a, c, c_new))
        e, c = nxt, c_new
        if c > best_c:
            best_c, stall = c, 0
        if stall >= 2 * n and e.a != target:
            return GreedyResult(trace, False, reversal_lower_bound(a))
    return GreedyResult(trace, True, reversal_lower_bound(a))


@dataclass(frozen=True)
class BreakpointMetrics:
    b: tuple[int, ...]
    theta1: Permutation
    theta2: Permutation
    C_theta: int
    C_BG: int
    C_skew: int

    @property
    def n(self) -> int:
        return (len(self.b) - 2) // 2

    @property
    def bg_bound(self) -> int:
        return self.n + 1 - self.C_BG

    @property
    def theta_bound(self) -> int:
        return (2 * self.n + 2 - self.C_theta) // 2

    @property
    def relation_holds(self) -> bool:
        return self.C_skew == 2 * self.C_BG - 1


def breakpoint_sequence(a) -> tuple[int, ...]:
    n = len(a)
    b = [0]
    for x in a:
        b += [-x, x]
    b.append(-(n + 1))
    return tuple(b)


def _graph_components(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = len(parent)
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def breakpoint_metrics(a) -> BreakpointMetrics:
    """Breakpoint-graph cycle count, both as a graph and as an involution product."""
    a = as_signed(a)
    n = len(a)
    g = GroundSet.signed(n, n + 1)
    b = breakpoint_sequence(a)
    black = [(b[2 * t], b[2 * t + 1]) for t in range(n + 1)]
    grey = [(t, -(t + 1)) for t in range(n + 1)]
    theta1 = Permutation.from_cycles(g, black)
    theta2 = Permutation.from_cycles(g, grey)
    c_theta = compose(theta1, theta2).cycle_count()
    c_bg = _graph_components(g.elements, black + grey)
    if 2 * c_bg != c_theta:
        raise AssertionError(f"breakpoint graph has {c_bg} cycles but the involution product has {c_theta}")
    return BreakpointMetrics(b, theta1, theta2, c_theta, c_bg, skew_embed(a).pi.cycle_count())


def is_fixed_point_free_involution(p: Permutation) -> bool:
    return all(len(c) == 2 for c in cycle_stats(p).cycles)
