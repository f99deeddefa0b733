"""Parsings of continued fractions with respect to a tile, and certificates
for the crosscap inequality between 2-bridge knots ``K > J``.

A vector ``b`` parses with respect to a tile ``a`` when

    b = (e1*a, 2*c1, e2*rev(a), 2*c2, e3*a, ..., e_t * a or rev(a))

with signs ``e_i = +-1`` and ``e_i == e_{i+1}`` whenever ``c_i == 0``. An odd
number of tiles gives an epimorphism of knot groups ``K_[b] -> K_[a]``.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Optional, Sequence

from .contfrac import collapse_zeros, even_cf, evaluate
from .crosscap import crosscap, crosscap_of_even_vector, genus
from .farey import DomainError, Fraction, KnotClass, knot_class


@dataclass(frozen=True)
class Parsing:
    tile: tuple[int, ...]
    signs: tuple[int, ...]
    connectors: tuple[int, ...]  # c_i; the vector entry is 2*c_i

    @property
    def tiles(self) -> int:
        return len(self.signs)


class CertificateError(AssertionError):
    """A generated certificate violated one of the checked inequalities."""

    def __init__(self, message: str, certificate: "OrderCertificate"):
        super().__init__(f"{message}: {certificate.to_json()}")
        self.certificate = certificate


def _tile_at(tile: Sequence[int], i: int) -> tuple[int, ...]:
    # tiles alternate a, rev(a), a, ... (i counts from 0)
    return tuple(tile) if i % 2 == 0 else tuple(reversed(tile))


def _validate(tile, signs, connectors, allow_even: bool) -> None:
    if not tile or any(a == 0 for a in tile):
        raise DomainError("tile must be nonempty with nonzero entries")
    t = len(signs)
    if t == 0:
        raise DomainError("at least one tile is required")
    if any(s not in (1, -1) for s in signs):
        raise DomainError("signs must be +1 or -1")
    if len(connectors) != t - 1:
        raise DomainError(f"{t} tiles need {t - 1} connectors, got {len(connectors)}")
    if t % 2 == 0 and not allow_even:
        raise DomainError(f"tile count {t} is even; an odd number of tiles is required")
    for i, c in enumerate(connectors):
        if c == 0 and signs[i] != signs[i + 1]:
            raise DomainError(f"connector {i + 1} is zero but signs {i + 1} and {i + 2} differ")


def build_parsed(tile, signs, connectors, allow_even: bool = False) -> tuple[int, ...]:
    """Concatenate signed tiles and connectors ``2*c_i``."""
    tile, signs, connectors = tuple(tile), tuple(signs), tuple(connectors)
    _validate(tile, signs, connectors, allow_even)
    out: list[int] = []
    for i, s in enumerate(signs):
        if i:
            out.append(2 * connectors[i - 1])
        out.extend(s * a for a in _tile_at(tile, i))
    return tuple(out)


def parse(b: Sequence[int], tile: Sequence[int]) -> Optional[Parsing]:
    """The parsing of ``b`` with respect to ``tile``, or ``None``.

    The tile count is forced by the lengths and each tile's sign by its first
    entry, so a parsing is unique when it exists.
    """
    b, tile = tuple(b), tuple(tile)
    m = len(tile)
    if m == 0 or any(a == 0 for a in tile) or (len(b) + 1) % (m + 1):
        return None
    t = (len(b) + 1) // (m + 1)
    signs, conns = [], []
    for i in range(t):
        start = i * (m + 1)
        block = b[start : start + m]
        ref = _tile_at(tile, i)
        s = 1 if block[0] * ref[0] > 0 else -1
        if block != tuple(s * a for a in ref):
            return None
        signs.append(s)
        if i < t - 1:
            entry = b[start + m]
            if entry % 2:
                return None
            conns.append(entry // 2)
    for i, c in enumerate(conns):
        if c == 0 and signs[i] != signs[i + 1]:
            return None
    return Parsing(tile, tuple(signs), tuple(conns))


def _uncollapse(b_prime, tile, t, zeros) -> Optional[Parsing]:
    """Read signs and connectors off ``b_prime`` assuming ``t`` tiles with
    zero connectors exactly at positions ``zeros``; confirm by rebuilding."""
    signs: list[int] = []
    conns: list[int] = []
    pos = 0
    m = len(tile)
    n = len(b_prime)
    for i in range(t):
        ref = _tile_at(tile, i)
        if i == 0 or (i - 1) not in zeros:
            if pos >= n:
                return None
            signs.append(1 if b_prime[pos] * ref[0] > 0 else -1)
            pos += m
        else:
            # merged boundary: the tile's first entry was absorbed
            signs.append(signs[-1])
            pos += m - 1
        if i < t - 1:
            if i in zeros:
                conns.append(0)
            else:
                if pos >= n or b_prime[pos] % 2 or b_prime[pos] == 0:
                    return None
                conns.append(b_prime[pos] // 2)
                pos += 1
    if pos != n:
        return None
    try:
        rebuilt = collapse_zeros(build_parsed(tile, signs, conns, allow_even=True)).entries
    except DomainError:
        return None
    if rebuilt != tuple(b_prime):
        return None
    return Parsing(tuple(tile), tuple(signs), tuple(conns))


def parse_collapsed(b_prime: Sequence[int], tile: Sequence[int]) -> Optional[Parsing]:
    """Find an odd-tile parsing whose zero connectors, once collapsed, give
    ``b_prime``.

    Tries tile counts in increasing order, then zero-connector positions in
    lexicographic order; the first consistent reconstruction wins.
    """
    b_prime, tile = tuple(b_prime), tuple(tile)
    m = len(tile)
    if m == 0 or any(a == 0 for a in tile):
        return None
    n = len(b_prime)
    t = 1
    while True:
        full = t * m + (t - 1)
        z, rem = divmod(full - n, 2)
        if z > t - 1:
            break
        if z >= 0 and rem == 0:
            for zeros in combinations(range(t - 1), z):
                found = _uncollapse(b_prime, tile, t, set(zeros))
                if found is not None:
                    return found
        t += 2
        if t * m + (t - 1) - 2 * (t - 1) > n:
            break
    return None


@dataclass
class OrderCertificate:
    J: KnotClass
    K: KnotClass
    parsing: Parsing
    fraction_K: Fraction
    gamma_J: int
    gamma_K: int
    genus_J: int
    genus_K: int
    case_label: str
    sharp: bool

    def as_dict(self) -> dict:
        return {
            "tile": list(self.parsing.tile),
            "signs": list(self.parsing.signs),
            "connectors": list(self.parsing.connectors),
            "fraction_J": str(self.J.canonical),
            "fraction_K": str(self.K.canonical),
            "gamma_J": self.gamma_J,
            "gamma_K": self.gamma_K,
            "genus_J": self.genus_J,
            "genus_K": self.genus_K,
            "case": self.case_label,
            "sharp": self.sharp,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _check_tile(tile: Sequence[int]) -> None:
    if not tile or len(tile) % 2:
        raise DomainError("tile must have even, nonzero length to name a knot")
    if any(a == 0 or a % 2 for a in tile):
        raise DomainError("tile entries must be even and nonzero")


def case_label(tile: Sequence[int], connectors: Sequence[int]) -> str:
    if any(abs(a) == 2 for a in tile):
        return "I"
    if any(abs(c) == 1 for c in connectors):
        return "IIa"
    return "IIb"


def make_certificate(tile, signs, connectors) -> OrderCertificate:
    """Build ``K`` from a parsing over ``J = K_[tile]`` and check the crosscap
    inequality with its case-specific strengthenings.

    Raises ``CertificateError`` (carrying the certificate) on any violation.
    """
    tile, signs, connectors = tuple(tile), tuple(signs), tuple(connectors)
    _check_tile(tile)
    if len(signs) < 3:
        raise DomainError("a certificate for K > J needs at least 3 tiles")
    b = build_parsed(tile, signs, connectors)
    b_prime = collapse_zeros(b).entries
    if any(a == 0 or a % 2 for a in b_prime):
        raise DomainError(f"collapsed vector {b_prime} is not all even and nonzero")

    fj, fk = evaluate(tile), evaluate(b_prime)
    J, K = knot_class(fj), knot_class(fk)
    label = case_label(tile, connectors)
    cert = OrderCertificate(
        J=J,
        K=K,
        parsing=Parsing(tile, signs, connectors),
        fraction_K=fk,
        gamma_J=crosscap(J),
        gamma_K=crosscap(K),
        genus_J=genus(J),
        genus_K=genus(K),
        case_label=label,
        sharp=False,
    )
    gj, gk = cert.gamma_J, cert.gamma_K
    cert.sharp = gk == 3 * gj - 4

    if crosscap_of_even_vector(b_prime) != gk:
        raise CertificateError("crosscap of the parsed vector disagrees with its class", cert)
    if gk < 3 * gj - 4:
        raise CertificateError("gamma(K) < 3 gamma(J) - 4", cert)
    if label == "I" and gk < 3 * gj - 2:
        raise CertificateError("case I bound gamma(K) >= 3 gamma(J) - 2 fails", cert)
    if label == "IIa" and gk < 3 * gj - 3:
        raise CertificateError("case IIa bound gamma(K) >= 3 gamma(J) - 3 fails", cert)
    if cert.sharp and not (
        label == "IIb"
        and len(signs) == 3
        and all(c == 0 for c in connectors)
        and all(abs(a) >= 4 for a in tile)
    ):
        raise CertificateError("equality outside the [a, 0, rev(a), 0, a] family", cert)
    if cert.genus_K < 3 * cert.genus_J - 1:
        raise CertificateError("g(K) < 3 g(J) - 1", cert)
    if label == "I" and not any(abs(a) == 2 for a in b_prime):
        raise CertificateError("a +-2 entry of the tile was lost in collapsing", cert)
    return cert


def _even_representatives(k: KnotClass) -> list[Fraction]:
    return [x for x in k.representatives() if x.p % 2 == 0]


def greater_than(K: KnotClass, J: KnotClass) -> Optional[Parsing]:
    """A witness parsing for ``K >= J``, or ``None`` if none is found.

    Every even-numerator fraction of ``K`` is parsed against the tile of
    ``J`` and its reverse and negatives; a nontrivial witness needs at least
    three tiles. Returned witnesses are rebuilt and re-evaluated before being
    trusted. ``None`` means no witness of this shape exists, which does not
    by itself rule out ``K > J``.
    """
    if J.is_unknot:
        raise DomainError("every knot dominates the unknot; no tile to parse with")
    tile = even_cf(J.canonical).entries
    if K == J:
        return Parsing(tile, (1,), ())
    if K.is_unknot:
        return None
    rev = tuple(reversed(tile))
    variants = [tile, rev, tuple(-a for a in tile), tuple(-a for a in rev)]
    for x in _even_representatives(K):
        b_prime = even_cf(x).entries
        for v in variants:
            found = parse_collapsed(b_prime, v)
            if found is None or found.tiles < 3:
                continue
            rebuilt = collapse_zeros(build_parsed(found.tile, found.signs, found.connectors))
            if knot_class(evaluate(rebuilt)) == K and knot_class(evaluate(found.tile)) == J:
                return found
    return None


def random_certificate_inputs(rng: random.Random) -> tuple[tuple, tuple, tuple]:
    """Random (tile, signs, connectors): tile of even length at most 6 with
    entries in +-{2, 4, 6, 8}, 3 or 5 tiles, connectors in [-3, 3]."""
    m = rng.choice((2, 4, 6))
    tile = tuple(rng.choice((1, -1)) * rng.choice((2, 4, 6, 8)) for _ in range(m))
    t = rng.choice((3, 5))
    connectors = tuple(rng.randint(-3, 3) for _ in range(t - 1))
    signs = [rng.choice((1, -1))]
    for c in connectors:
        signs.append(signs[-1] if c == 0 else rng.choice((1, -1)))
    return tile, tuple(signs), connectors


def run_harness(iters: int, seed: int) -> list[OrderCertificate]:
    """Generate and check ``iters`` random certificates; raises on the first
    failure."""
    rng = random.Random(seed)
    return [make_certificate(*random_certificate_inputs(rng)) for _ in range(iters)]
