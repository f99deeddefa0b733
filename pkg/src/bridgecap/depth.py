"""Depth of an all-even continued fraction read off its entries.

Each entry carries a pair ``(d, e)`` of bits: ``d`` is the change in depth
along the path edge into the vertex, ``e`` the change along the edge from the
vertex's other parent. The pair for the next entry depends only on the
current pair, the sign of ``a_i * a_{i+1}`` and whether ``|a_{i+1}| = 2``.
The depth is the sum of the ``d`` bits.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .farey import DomainError


class AuxDatum(NamedTuple):
    d: int
    e: int

    def __str__(self) -> str:
        return f"{self.d}{self.e}"


D01 = AuxDatum(0, 1)
D10 = AuxDatum(1, 0)
D11 = AuxDatum(1, 1)

_CODES = {"01": D01, "10": D10, "11": D11}

# current datum -> (|next|=2 same sign, |next|=2 opposite sign, |next|>=4)
_TABLE = {
    D01: (D10, D01, D10),
    D10: (D11, D11, D10),
    D11: (D11, D01, D10),
}


def _check_entry(a: int) -> None:
    if a == 0 or a % 2:
        raise DomainError(f"entry {a} is not even and nonzero")


def initial_aux(a1: int) -> AuxDatum:
    _check_entry(a1)
    return D11 if abs(a1) == 2 else D10


def step_aux(cur: AuxDatum, a_i: int, a_next: int) -> AuxDatum:
    if cur not in _TABLE:
        raise DomainError(f"invalid auxiliary datum {tuple(cur)}")
    _check_entry(a_i)
    _check_entry(a_next)
    if abs(a_next) >= 4:
        return _TABLE[cur][2]
    return _TABLE[cur][0 if a_i * a_next > 0 else 1]


def aux_trace(a: Sequence[int], init: AuxDatum | tuple[int, int]) -> list[AuxDatum]:
    if not a:
        raise DomainError("auxiliary data needs a nonempty vector")
    init = AuxDatum(*init)
    if init not in _TABLE:
        raise DomainError(f"invalid initial datum {tuple(init)}")
    _check_entry(a[0])
    data = [init]
    for prev, nxt in zip(a, a[1:]):
        data.append(step_aux(data[-1], prev, nxt))
    return data


def depth_auto(a: Sequence[int]) -> int:
    """Farey depth of ``[a]`` for a vector of even nonzero entries."""
    a = tuple(a)
    if not a:
        return 0
    return sum(x.d for x in aux_trace(a, initial_aux(a[0])))


def depth_variant(a: Sequence[int], init_code: str) -> int:
    """Depth sum when the trace is forced to start at ``01``, ``10`` or ``11``."""
    try:
        init = _CODES[init_code]
    except KeyError:
        raise DomainError(f"unknown initial code {init_code!r}") from None
    return sum(x.d for x in aux_trace(tuple(a), init))


def format_trace(data: Sequence[AuxDatum]) -> str:
    """Compact rendering, ``11 01 10 ...``."""
    return " ".join(str(AuxDatum(*x)) for x in data)
