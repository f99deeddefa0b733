"""Crosscap number, genus and crossing number of 2-bridge knots."""

from __future__ import annotations

from dataclasses import dataclass

from .contfrac import even_cf, positive_cf
from .depth import depth_auto
from .farey import KnotClass


@dataclass(frozen=True)
class InvariantRecord:
    knot: KnotClass
    crosscap: int
    genus: int
    crossing_number: int
    depth: int

    def as_dict(self) -> dict:
        return {
            "canonical": str(self.knot.canonical),
            "unknot": self.knot.is_unknot,
            "crosscap": self.crosscap,
            "genus": self.genus,
            "crossing_number": self.crossing_number,
            "depth": self.depth,
        }


def crosscap_of_even_vector(a) -> int:
    """Crosscap number from an even expansion: its depth, plus one when no
    entry is +-2."""
    a = tuple(a)
    if not a:
        return 0
    d = depth_auto(a)
    return d if any(abs(x) == 2 for x in a) else d + 1


def crosscap(k: KnotClass) -> int:
    if k.is_unknot:
        return 0
    return crosscap_of_even_vector(even_cf(k.canonical).entries)


def genus(k: KnotClass) -> int:
    if k.is_unknot:
        return 0
    return len(even_cf(k.canonical)) // 2


def crossing_number(k: KnotClass) -> int:
    if k.is_unknot:
        return 0
    return sum(positive_cf(k.canonical).entries)


def invariants(k: KnotClass) -> InvariantRecord:
    if k.is_unknot:
        return InvariantRecord(k, 0, 0, 0, 0)
    a = even_cf(k.canonical).entries
    return InvariantRecord(
        knot=k,
        crosscap=crosscap_of_even_vector(a),
        genus=len(a) // 2,
        crossing_number=sum(positive_cf(k.canonical).entries),
        depth=depth_auto(a),
    )
