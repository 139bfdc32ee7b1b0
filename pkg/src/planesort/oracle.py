"""Brute-force ground truth: BFS distances, censuses and exhaustive checks.

Nothing here calls the sorters or bound formulas it is meant to check.  The
moves are rebuilt from scratch as position maps, and the conjecture checkers
build ``pi`` from the two-row rule instead of composing permutations.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

import numpy as np

from .perm import GroundSet, Permutation, PermutationError, compose, cycle_stats, stirling_first_unsigned

KINDS = ("transposition", "block_interchange", "reversal")
KIND_ALIASES = {"block": "block_interchange", "bid": "block_interchange", "td": "transposition"}

# Size caps, overridable per call.
CAPS = {"unsigned": 7, "signed": 5, "enumeration": 8}


class CapExceeded(PermutationError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} size {size} exceeds the cap of {cap} (raise it with --cap)")
        self.size = size
        self.cap = cap


def _check_cap(what: str, size: int, cap: int | None, default_key: str) -> None:
    limit = CAPS[default_key] if cap is None else cap
    if size > limit:
        raise CapExceeded(what, size, limit)


def normalize_kind(kind: str) -> str:
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError(f"unknown move kind {kind!r}")
    return kind


def _swap(seq, i, j, k, l):
    # 0-based inclusive blocks [i..j] and [k..l]
    return seq[:i] + seq[k:l + 1] + seq[j + 1:k] + seq[i:j + 1] + seq[l + 1:]


@dataclass(frozen=True)
class MoveSet:
    """All legal moves on a state of size ``n``.

    Each move is ``(positions, flips)``: the new state is
    ``state[positions[t]]`` at slot ``t``, negated where ``flips[t]``.
    """

    kind: str
    n: int
    moves: tuple = field(repr=False)

    @classmethod
    @lru_cache(maxsize=None)
    def build(cls, kind: str, n: int) -> "MoveSet":
        kind = normalize_kind(kind)
        base = tuple(range(n))
        none = (False,) * n
        moves = []
        if kind == "transposition":
            for i, j, k in itertools.combinations(range(n + 1), 3):
                # blocks [i..j-1] and [j..k-1]
                moves.append((_swap(base, i, j - 1, j, k - 1), none))
        elif kind == "block_interchange":
            for i, j in itertools.combinations_with_replacement(range(n), 2):
                for k in range(j + 1, n):
                    for l in range(k, n):
                        moves.append((_swap(base, i, j, k, l), none))
        else:
            for i in range(n):
                for j in range(i, n):
                    pos = base[:i] + base[i:j + 1][::-1] + base[j + 1:]
                    flips = tuple(i <= t <= j for t in range(n))
                    moves.append((pos, flips))
        return cls(kind, n, tuple(moves))

    @property
    def signed(self) -> bool:
        return self.kind == "reversal"

    def neighbours(self, state):
        for pos, flips in self.moves:
            if self.signed:
                yield tuple(-state[p] if f else state[p] for p, f in zip(pos, flips))
            else:
                yield tuple(state[p] for p in pos)

    def is_involutive(self) -> bool:
        """Every move is undone by some move of the set."""
        probe = tuple(range(1, self.n + 1))
        return all(probe in set(self.neighbours(img)) for img in self.neighbours(probe))


def lehmer_rank(perm) -> int:
    """Rank of a permutation of 1..n (or of any distinct values) in lexicographic order."""
    n = len(perm)
    r = 0
    for t in range(n):
        smaller = sum(1 for u in range(t + 1, n) if perm[u] < perm[t])
        r = r * (n - t) + smaller
    return r


def lehmer_unrank(r: int, n: int) -> tuple[int, ...]:
    digits = []
    for base in range(1, n + 1):
        digits.append(r % base)
        r //= base
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in reversed(digits))


def state_rank(state, signed: bool) -> int:
    if not signed:
        return lehmer_rank(state)
    n = len(state)
    mask = 0
    for t, x in enumerate(state):
        if x < 0:
            mask |= 1 << t
    return lehmer_rank([abs(x) for x in state]) * (1 << n) + mask


def state_unrank(r: int, n: int, signed: bool) -> tuple[int, ...]:
    if not signed:
        return lehmer_unrank(r, n)
    mask = r % (1 << n)
    base = lehmer_unrank(r >> n, n)
    return tuple(-x if mask >> t & 1 else x for t, x in enumerate(base))


def state_count(n: int, signed: bool) -> int:
    return factorial(n) * (1 << n if signed else 1)


def _caps_key(kind: str) -> str:
    return "signed" if kind == "reversal" else "unsigned"


def _bfs(start, moves: MoveSet, stop=None) -> np.ndarray:
    n = moves.n
    dist = np.full(state_count(n, moves.signed), -1, dtype=np.int16)
    signed = moves.signed
    dist[state_rank(start, signed)] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        du = dist[state_rank(u, signed)]
        if stop is not None and u == stop:
            break
        for v in moves.neighbours(u):
            rv = state_rank(v, signed)
            if dist[rv] < 0:
                dist[rv] = du + 1
                queue.append(v)
    return dist


def _validate_state(state, signed: bool) -> tuple[int, ...]:
    state = tuple(int(x) for x in state)
    vals = [abs(x) for x in state] if signed else list(state)
    if sorted(vals) != list(range(1, len(state) + 1)) or (not signed and any(x < 0 for x in state)):
        raise PermutationError(f"not a valid {'signed ' if signed else ''}permutation: {list(state)}")
    return state


def bfs_distance(start, kind: str, cap: int | None = None) -> int:
    """Shortest number of moves taking ``start`` to the sorted (all positive) state."""
    kind = normalize_kind(kind)
    start = _validate_state(start, kind == "reversal")
    n = len(start)
    _check_cap(f"{kind} BFS", n, cap, _caps_key(kind))
    target = tuple(range(1, n + 1))
    dist = _bfs(start, MoveSet.build(kind, n), stop=target)
    return int(dist[state_rank(target, kind == "reversal")])


@lru_cache(maxsize=None)
def _table(kind: str, n: int) -> np.ndarray:
    dist = _bfs(tuple(range(1, n + 1)), MoveSet.build(kind, n))
    dist.setflags(write=False)
    return dist


def distance_table(n: int, kind: str, cap: int | None = None) -> np.ndarray:
    """Distance of every state of size ``n`` to the sorted state, indexed by :func:`state_rank`.

    One BFS from the sorted state suffices because every move set is closed
    under inverses.
    """
    kind = normalize_kind(kind)
    _check_cap(f"{kind} census", n, cap, _caps_key(kind))
    return _table(kind, n)


def distance_of(state, kind: str, cap: int | None = None) -> int:
    kind = normalize_kind(kind)
    state = _validate_state(state, kind == "reversal")
    return int(distance_table(len(state), kind, cap)[state_rank(state, kind == "reversal")])


def census(n: int, kind: str, cap: int | None = None) -> dict[int, int]:
    """Histogram of exact distance over all states of size ``n``."""
    dist = distance_table(n, kind, cap)
    values, counts = np.unique(dist, return_counts=True)
    if values.size and values[0] < 0:
        raise RuntimeError("state space is not connected")
    return {int(v): int(c) for v, c in zip(values, counts)}


def iter_permutations(n: int):
    return itertools.permutations(range(1, n + 1))


def iter_signed(n: int):
    for base in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, base))


def zagier_formula(n: int, k: int) -> int:
    if (n - k) % 2:
        return 0
    q, r = divmod(2 * stirling_first_unsigned(n + 1, k), n * (n + 1))
    if r:
        raise ArithmeticError(f"closed form not integral at n={n}, k={k}")
    return q


def zagier_census(n: int, cap: int | None = None) -> dict[int, int]:
    """For each k, the number of n-cycles ``w`` with ``w (1 2 ... n)`` having k cycles."""
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_cap("n-cycle enumeration", n, cap, "enumeration")
    g = GroundSet.range(n)
    c = Permutation.cycle_of(tuple(range(1, n + 1)), g)
    out = Counter({k: 0 for k in range(1, n + 1)})
    for rest in itertools.permutations(range(2, n + 1)):
        w = Permutation.cycle_of((1,) + rest, g)
        out[compose(w, c).cycle_count()] += 1
    return dict(sorted(out.items()))


_STATS = {
    "cycles": lambda st: st.C,
    "odd": lambda st: st.C_odd,
    "even": lambda st: st.C_ev,
}


@dataclass
class LaurentPoly:
    """``sum over gamma of z^(stat(pi gamma) - stat(gamma))`` as an exponent -> coefficient map."""

    coefficients: dict[int, int]
    stat: str
    size: int
    max_exponent: int
    min_exponent: int
    argmax: Permutation
    argmin: Permutation

    def total(self) -> int:
        return sum(self.coefficients.values())

    def __str__(self) -> str:
        terms = []
        for e, c in sorted(self.coefficients.items()):
            terms.append(f"{c}*z^{e}" if e else f"{c}")
        return " + ".join(terms)


def distribution_poly(pi: Permutation, stat: str = "cycles", cap: int | None = None) -> LaurentPoly:
    """Exact distribution of the ``stat`` gap over all permutations of ``pi``'s ground set."""
    if stat not in _STATS:
        raise ValueError(f"stat must be one of {sorted(_STATS)}")
    f = _STATS[stat]
    g = pi.ground
    m = len(g)
    _check_cap("distribution", m, cap, "enumeration")
    coeff = Counter()
    best = worst = None
    for img in itertools.permutations(range(m)):
        gamma = Permutation(g, img, check=False)
        e = f(cycle_stats(compose(pi, gamma))) - f(cycle_stats(gamma))
        coeff[e] += 1
        if best is None or e > best[0]:
            best = (e, gamma)
        if worst is None or e < worst[0]:
            worst = (e, gamma)
    return LaurentPoly(dict(sorted(coeff.items())), stat, m, best[0], worst[0], best[1], worst[1])


def exhaustive_max_gap(alpha: Permutation) -> int:
    """``max over gamma of |C(alpha gamma) - C(gamma)|`` by enumeration."""
    g = alpha.ground
    best = 0
    for img in itertools.permutations(range(len(g))):
        gamma = Permutation(g, img, check=False)
        best = max(best, abs(compose(alpha, gamma).cycle_count() - gamma.cycle_count()))
    return best


def cycle_graph_counts(a) -> tuple[int, int]:
    """Alternating cycles (all, odd) of the cycle graph of ``a``, traced on the graph itself.

    Vertices 0..n+1; black edges ``v+1 -> v``; gray edges ``s_t -> s_(t+1)``
    with ``s_0 = 0`` and ``s_(n+1) = n+1``.  A cycle is odd when it has an odd
    number of black edges.
    """
    n = len(a)
    s = [0] + list(a) + [n + 1]
    gray = {s[t]: s[t + 1] for t in range(n + 1)}
    black = {v + 1: v for v in range(n + 1)}
    used = set()
    total = odd = 0
    for start in range(n + 1):
        if start in used:
            continue
        total += 1
        blacks = 0
        v = start
        while True:
            used.add(v)
            v = black[gray[v]]
            blacks += 1
            if v == start:
                break
        odd += blacks % 2
    return total, odd


def two_row_pi(a) -> dict[int, int]:
    """``pi`` of the skew embedding of ``a``, read straight off the two-row picture.

    ``pi(s_r)`` is the element one step before ``s_(r+1)`` in the order
    ``0 < 1 < ... < n`` continued by ``-n < ... < -1`` and wrapping to 0.
    """
    n = len(a)
    s = [0] + list(a) + [-x for x in reversed(a)]

    def before(x):
        if x > 0:
            return x - 1
        if x == 0:
            return -1
        return n if x == -n else x - 1

    m = len(s)
    return {s[r]: before(s[(r + 1) % m]) for r in range(m)}


def _same_cycle(mapping: dict, x: int, y: int) -> bool:
    z = mapping[x]
    while z != x:
        if z == y:
            return True
        z = mapping[z]
    return x == y


@dataclass
class ConjectureReport:
    conjecture_id: str
    n_max: int
    states_checked: int
    counterexample: tuple[int, ...] | None = None
    per_n: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def conjecture_hypothesis(a) -> bool:
    """Exact, and ``pi(s_(i-1)) = s_(2n+1-i)`` for some ``1 <= i <= n``."""
    n = len(a)
    if not any(x < 0 for x in a):
        return False
    pi = two_row_pi(a)
    s = [0] + list(a) + [-x for x in reversed(a)]
    return any(pi[s[i - 1]] == s[2 * n + 1 - i] for i in range(1, n + 1))


def conjecture_violated(a) -> bool:
    """``n`` and ``s_n`` lie in different cycles of ``pi``."""
    n = len(a)
    return not _same_cycle(two_row_pi(a), n, a[-1])


def check_conjecture(conjecture_id: str, n_max: int, cap: int = 7) -> ConjectureReport:
    """Exhaustively test one of the two same-cycle conjectures on sizes 1..n_max."""
    cid = str(conjecture_id)
    if cid not in ("7.1", "7.2"):
        raise ValueError("conjecture id must be '7.1' or '7.2'")
    if n_max > cap:
        raise CapExceeded("conjecture check", n_max, cap)
    rep = ConjectureReport(cid, n_max, 0)
    for n in range(1, n_max + 1):
        checked = 0
        for a in iter_signed(n):
            if cid == "7.1" and not conjecture_hypothesis(a):
                continue
            checked += 1
            if conjecture_violated(a) and rep.counterexample is None:
                rep.counterexample = a
        rep.per_n[n] = checked
        rep.states_checked += checked
    return rep


@dataclass
class TightnessReport:
    """Agreement rates of the reversal bounds with exact distance, over all signed a of sizes 1..n_max."""

    n_max: int
    total: int = 0
    bound_tight: int = 0
    relation_true: int = 0
    bound_gaps: list = field(default_factory=list)
    relation_failures: list = field(default_factory=list)
    per_n: dict = field(default_factory=dict)

    @property
    def bound_fraction(self) -> float:
        return self.bound_tight / self.total if self.total else 1.0

    @property
    def relation_fraction(self) -> float:
        return self.relation_true / self.total if self.total else 1.0


def tightness_report(n_max: int, samples=None) -> TightnessReport:
    """Measure how often the skew-embedding bound equals ``d_r`` and how often
    ``C(p_r s~) = 2 C_BG - 1``.  ``samples`` (an iterable of signed
    permutations) replaces exhaustive enumeration when given.
    """
    from .signed import breakpoint_metrics, reversal_lower_bound

    rep = TightnessReport(n_max)
    states = samples if samples is not None else (
        a for n in range(1, n_max + 1) for a in iter_signed(n))
    for a in states:
        n = len(a)
        d = distance_of(a, "reversal")
        lb = reversal_lower_bound(a)
        bm = breakpoint_metrics(a)
        row = rep.per_n.setdefault(n, [0, 0, 0])
        rep.total += 1
        row[0] += 1
        if lb == d:
            rep.bound_tight += 1
            row[1] += 1
        else:
            rep.bound_gaps.append((a, lb, d))
        if bm.relation_holds:
            rep.relation_true += 1
            row[2] += 1
        else:
            rep.relation_failures.append((a, bm.C_skew, bm.C_BG))
    return rep
