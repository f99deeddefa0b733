"""Exact fractions on the extended rationals, Farey-graph parents and depth,
and the equivalence classes of fractions that name 2-bridge knots.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


@dataclass(frozen=True, order=True)
class Fraction:
    """Reduced fraction ``p/q`` with ``q >= 0``; ``1/0`` is the point at infinity.

    The constructor reduces and normalizes signs, so ``Fraction(-2, -4)`` is
    ``1/2`` and ``Fraction(-3, 0)`` is ``1/0``.
    """

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        p, q = int(self.p), int(self.q)
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a fraction")
        if q < 0:
            p, q = -p, -q
        if q == 0:
            p = 1
        else:
            g = gcd(p, q)
            p, q = p // g, q // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> "Fraction":
        """Read ``"p/q"`` or a bare integer."""
        s = text.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return cls(int(num), int(den))
            return cls(int(s), 1)
        except (ValueError, DomainError) as exc:
            raise DomainError(f"malformed fraction {text!r}") from exc

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    @property
    def is_integral(self) -> bool:
        return self.q == 1

    def __neg__(self) -> "Fraction":
        return Fraction(-self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


INFINITY = Fraction(1, 0)


def farey_adjacent(a: Fraction, b: Fraction) -> bool:
    return abs(a.p * b.q - b.p * a.q) == 1


def mediant(a: Fraction, b: Fraction) -> Fraction:
    """The child of a Farey edge ``a -- b``."""
    if not farey_adjacent(a, b):
        raise DomainError(f"{a} and {b} are not joined by a Farey edge")
    # 1/0 appears with either sign in the graph; use the one pointing at b
    ap, aq = a.p, a.q
    bp, bq = b.p, b.q
    if aq == 0 and bp < 0:
        ap = -1
    if bq == 0 and ap < 0:
        bp = -1
    return Fraction(ap + bp, aq + bq)


def parents(x: Fraction) -> tuple[Fraction, Fraction]:
    """The two Farey parents of a non-integral fraction.

    Solves ``a*q - b*p = 1`` for ``0 < b < q`` and takes the complementary
    parent ``(p - a)/(q - b)``. The parent with the smaller denominator comes
    first; for denominator 2 the tie is broken by the smaller numerator.
    """
    if x.q <= 1:
        raise DomainError(f"{x} is integral or infinite and has no parents")
    p, q = x.p, x.q
    b = (-pow(p, -1, q)) % q
    a = (1 + b * p) // q
    first, second = Fraction(a, b), Fraction(p - a, q - b)
    if (second.q, second.p) < (first.q, first.p):
        first, second = second, first
    return first, second


_depth_memo: dict[tuple[int, int], int] = {}


def depth_oracle(x: Fraction) -> int:
    """Depth in the Farey graph: 0 on the integers and 1/0, otherwise one more
    than the smaller of the parents' depths.

    Evaluated literally from that recursion with an explicit stack, so long
    parent chains (``1/n`` has ``n`` ancestors) cannot hit the recursion
    limit. Memo writes are idempotent, so concurrent callers agree.
    """
    if x.q <= 1:
        return 0
    memo = _depth_memo
    stack = [x]
    while stack:
        node = stack[-1]
        key = (node.p, node.q)
        if key in memo:
            stack.pop()
            continue
        u, v = parents(node)
        du = 0 if u.q <= 1 else memo.get((u.p, u.q))
        if du is None:
            stack.append(u)
            continue
        if du == 0:
            # no parent can do better than 0
            memo[key] = 1
            stack.pop()
            continue
        dv = 0 if v.q <= 1 else memo.get((v.p, v.q))
        if dv is None:
            stack.append(v)
            continue
        memo[key] = 1 + min(du, dv)
        stack.pop()
    return memo[(x.p, x.q)]


@dataclass(frozen=True)
class KnotClass:
    """A 2-bridge knot up to isotopy and mirror image.

    ``canonical`` is the least even numerator among the residues of
    ``p, -p, 1/p, -1/p`` modulo ``q``. The unknot is the sentinel ``0/1``.
    """

    canonical: Fraction

    @classmethod
    def unknot(cls) -> "KnotClass":
        return cls(Fraction(0, 1))

    @property
    def is_unknot(self) -> bool:
        return self.canonical.q == 1

    def representatives(self) -> list[Fraction]:
        """The distinct fractions in ``(0, 1)`` naming this knot."""
        if self.is_unknot:
            return [self.canonical]
        p, q = self.canonical.p, self.canonical.q
        inv = pow(p, -1, q)
        residues = sorted({p % q, -p % q, inv % q, -inv % q})
        return [Fraction(r, q) for r in residues]

    def __str__(self) -> str:
        return "unknot" if self.is_unknot else str(self.canonical)


def canonicalize(p: int, q: int) -> KnotClass:
    if q < 3 or q % 2 == 0:
        raise DomainError(f"denominator {q} must be odd and at least 3")
    if gcd(p, q) != 1:
        raise DomainError(f"gcd({p}, {q}) != 1")
    inv = pow(p, -1, q)
    # q odd: of r and q - r exactly one is even
    best = min(r for r in (p % q, -p % q, inv % q, -inv % q) if r % 2 == 0)
    return KnotClass(Fraction(best, q))


def knot_class(x: Fraction) -> KnotClass:
    """Class of the knot ``K_x``; integral fractions give the unknot."""
    if x.q == 1:
        return KnotClass.unknot()
    if x.q == 0 or x.q % 2 == 0:
        raise DomainError(f"{x} names a 2-bridge link or nothing, not a knot")
    return canonicalize(x.p, x.q)
