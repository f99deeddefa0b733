"""Continued fractions in the additive convention

    r + [a1, ..., an] = r + 1/(a1 + 1/(a2 + ... + 1/an)),

with three expansion algorithms (even, all-positive, shortest), removal of
interior zeros and the shortenability test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Optional, Sequence

from .farey import DomainError, Fraction, parents


@dataclass(frozen=True)
class CFVector:
    entries: tuple[int, ...] = ()
    offset: int = 0

    def __init__(self, entries: Iterable[int] = (), offset: int = 0):
        object.__setattr__(self, "entries", tuple(int(a) for a in entries))
        object.__setattr__(self, "offset", int(offset))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def has_boundary_zero(self) -> bool:
        return bool(self.entries) and (self.entries[0] == 0 or self.entries[-1] == 0)

    def __str__(self) -> str:
        body = "[" + ",".join(str(a) for a in self.entries) + "]"
        return body if self.offset == 0 else f"{self.offset}+{body}"


def _as_vector(v) -> CFVector:
    return v if isinstance(v, CFVector) else CFVector(v)


def evaluate(v) -> Fraction:
    """Value of a continued fraction on the projective line.

    A zero denominator mid-way is the point 1/0 and its reciprocal is 0, so
    every vector has a value. Each step is a unimodular substitution, so the
    pair never degenerates to 0/0.
    """
    v = _as_vector(v)
    num, den = 0, 1
    for a in reversed(v.entries):
        num, den = den, a * den + num
    return Fraction(v.offset * den + num, den)


def _check_knot_fraction(x: Fraction) -> None:
    if not (0 < x.p < x.q):
        raise DomainError(f"{x} is not in (0, 1)")


def even_cf(x: Fraction) -> CFVector:
    """Unique expansion of ``p/q`` (p even, q odd) with even nonzero entries.

    Euclid's algorithm with the quotient rounded to the nearest even integer.
    Parity rules out ties, so every remainder is strictly smaller than its
    divisor and a zero remainder can only occur after an even number of
    steps.
    """
    _check_knot_fraction(x)
    if x.p % 2 or x.q % 2 == 0:
        raise DomainError(f"{x} needs an even numerator and odd denominator")
    out = []
    u, w = x.p, x.q  # current value u/w, u > 0
    while u:
        a = 2 * ((w + u) // (2 * u))
        out.append(a)
        r = w - a * u
        # next value is r/u; keep the numerator positive
        u, w = (r, u) if r > 0 else (-r, -u)
    return CFVector(out)


def positive_cf(x: Fraction) -> CFVector:
    """Expansion with all entries >= 1 and last entry >= 2 (plain Euclid)."""
    _check_knot_fraction(x)
    out = []
    u, w = x.p, x.q
    while u:
        a, r = divmod(w, u)
        out.append(a)
        u, w = r, u
    return CFVector(out)


def collapse_zeros(v) -> CFVector:
    """Remove interior zeros: ``(..., a, 0, b, ...) -> (..., a + b, ...)``.

    Applied leftmost first until no interior zero remains. A zero in the
    first or last slot is left alone; check ``has_boundary_zero``.
    """
    v = _as_vector(v)
    a = list(v.entries)
    i = 1
    while i < len(a) - 1:
        if a[i] == 0:
            a[i - 1 : i + 2] = [a[i - 1] + a[i + 1]]
            i = max(i - 1, 1)
        else:
            i += 1
    return CFVector(a, v.offset)


def is_shortenable(v) -> bool:
    """True if the expansion contains 0, +-1, or a run like (2,-2),
    (2,-3,2), (-2,3,-3,2), ...: alternating signs, magnitude 2 at both ends
    and 3 in between."""
    a = _as_vector(v).entries
    if any(x in (0, 1, -1) for x in a):
        return True
    n = len(a)
    for i in range(n):
        if abs(a[i]) != 2:
            continue
        j = i + 1
        while j < n and (a[j] > 0) != (a[j - 1] > 0):
            if abs(a[j]) == 2:
                return True
            if abs(a[j]) != 3:
                break
            j += 1
    return False


def grandparent_path(x: Fraction) -> list[Fraction]:
    """Shortest Farey edge path from ``1/0`` to ``x``.

    Walks down from ``x`` taking the parent with the smaller denominator until
    the denominator is 1 or 2, then finishes through ``k/1`` for ``(2k+1)/2``.
    """
    if x.q == 0:
        return [x]
    path = [x]
    node = x
    while node.q > 2:
        node = parents(node)[0]
        path.append(node)
    if node.q == 2:
        path.append(Fraction((node.p - 1) // 2, 1))
    path.append(Fraction(1, 0))
    path.reverse()
    return path


def path_to_cf(path: Sequence[Fraction]) -> CFVector:
    """Recover turning numbers from an edge path ``1/0 -> r/1 -> ... -> x``.

    Uses the convergent recurrence ``P_i = a_i P_{i-1} + P_{i-2}`` (same for
    ``Q``). Path vertices are reduced fractions while convergents are signed,
    so each vertex is tried as ``+(p, q)`` and ``-(p, q)``; exactly one sign
    gives an integer ``a_i`` consistent in both coordinates.
    """
    if len(path) < 2 or path[0].q != 0 or path[1].q != 1:
        raise DomainError("path must start 1/0 -> r/1")
    r = path[1].p
    P2, Q2 = 1, 0
    P1, Q1 = r, 1
    out = []
    for node in path[2:]:
        found = []
        for s in (1, -1):
            num = s * node.q - Q2
            if num % Q1:
                continue
            a = num // Q1
            if a * P1 + P2 == s * node.p:
                found.append(a)
        if len(found) != 1:
            raise DomainError(f"no unique turning number into {node}: {found}")
        a = found[0]
        out.append(a)
        P2, Q2, P1, Q1 = P1, Q1, a * P1 + P2, a * Q1 + Q2
    return CFVector(out, r)


def shortest_cf(x: Fraction) -> CFVector:
    """A shortest expansion ``r + [a1, ..., an]``; ``n`` equals the depth of ``x``."""
    _check_knot_fraction(x)
    return path_to_cf(grandparent_path(x))


def _tail_reachable(y: Q, length: int, max_abs: int) -> bool:
    if length == 0:
        return y == 0
    if y == 0:
        return False
    inv = 1 / y
    # any tail of length >= 1 with |entries| >= 2 lies in [-1, 1]
    lo, hi = inv - 1, inv + 1
    start = max(-max_abs, int(lo) - 1)
    stop = min(max_abs, int(hi) + 1)
    for a in range(start, stop + 1):
        if abs(a) < 2:
            continue
        rest = inv - a
        if abs(rest) > 1:
            continue
        if _tail_reachable(rest, length - 1, max_abs):
            return True
    return False


def shortest_len_bruteforce(x: Fraction, max_abs: int, max_len: int = 12) -> Optional[int]:
    """Least ``n`` such that ``x = r + [a1..an]`` with ``2 <= |a_i| <= max_abs``.

    Exhaustive depth-first search by increasing length, independent of the
    Farey machinery (stdlib rationals). Candidates are pruned only by the
    fact that such tails lie in ``[-1, 1]``. Returns ``None`` if nothing up
    to ``max_len`` is found.
    """
    if x.q == 0:
        raise DomainError("1/0 has no finite expansion")
    target = Q(x.p, x.q)
    base = target.numerator // target.denominator
    offsets = range(base - 1, base + 3)
    for n in range(max_len + 1):
        for r in offsets:
            y = target - r
            if abs(y) <= 1 and _tail_reachable(y, n, max_abs):
                return n
    return None
