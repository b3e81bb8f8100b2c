"""The four order types 1, w, w*, zeta under multiplication mod finite condensation."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

from .errors import OutOfSubset


class BandElement(enum.Enum):
    ONE = "1"
    OMEGA = "w"
    OMEGA_STAR = "omega_star"
    ZETA = "zeta"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    def __str__(self):
        return self.value


_SYMBOLS = {
    BandElement.ONE: "1",
    BandElement.OMEGA: "ω",
    BandElement.OMEGA_STAR: "ω*",
    BandElement.ZETA: "ζ",
}

ELEMENTS: Tuple[BandElement, ...] = tuple(BandElement)
ORDINAL_ELEMENTS = (BandElement.ONE, BandElement.OMEGA)

One, W, WStar, Zeta = ELEMENTS

# Row = left factor, column = right factor.  Kept as literal data; the
# condensation oracle re-derives every entry independently.
TABLE: Dict[Tuple[BandElement, BandElement], BandElement] = {
    (One, One): One, (One, W): One, (One, WStar): One, (One, Zeta): One,
    (W, One): One, (W, W): W, (W, WStar): W, (W, Zeta): W,
    (WStar, One): One, (WStar, W): WStar, (WStar, WStar): WStar, (WStar, Zeta): WStar,
    (Zeta, One): One, (Zeta, W): Zeta, (Zeta, WStar): Zeta, (Zeta, Zeta): Zeta,
}

Op = Callable[[BandElement, BandElement], BandElement]


def times_f(x: BandElement, y: BandElement) -> BandElement:
    return TABLE[(x, y)]


def times_f_on(x: BandElement, y: BandElement) -> BandElement:
    """``times_f`` restricted to the ordinal elements {1, w}."""
    for arg in (x, y):
        if arg not in ORDINAL_ELEMENTS:
            raise OutOfSubset(f"{arg} is not one of 1, w")
    return times_f(x, y)


@dataclass
class BandReport:
    idempotency_checked: int = 0
    associativity_checked: int = 0
    left_regularity_checked: int = 0
    failures: List[Tuple[str, Tuple[BandElement, ...]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_left_regular_band(op: Op = times_f) -> BandReport:
    """Exhaustively check idempotency, associativity and ``xyx = xy``."""
    report = BandReport()
    for x in ELEMENTS:
        report.idempotency_checked += 1
        if op(x, x) != x:
            report.failures.append(("idempotency", (x,)))
    for x, y, z in itertools.product(ELEMENTS, repeat=3):
        report.associativity_checked += 1
        if op(op(x, y), z) != op(x, op(y, z)):
            report.failures.append(("associativity", (x, y, z)))
    for x, y in itertools.product(ELEMENTS, repeat=2):
        report.left_regularity_checked += 1
        if op(op(x, y), x) != op(x, y):
            report.failures.append(("left_regularity", (x, y)))
    return report


def band_leq(x: BandElement, y: BandElement, op: Op = times_f) -> bool:
    """``x <= y`` iff ``x . y == y``."""
    return op(x, y) == y


def hasse_edges(op: Op = times_f) -> List[Tuple[BandElement, BandElement]]:
    """Covering pairs ``(lower, upper)`` of ``band_leq``, derived from the table."""
    strict = [(x, y) for x in ELEMENTS for y in ELEMENTS if x != y and band_leq(x, y, op)]
    strict_set = set(strict)
    edges = []
    for x, y in strict:
        if not any((x, z) in strict_set and (z, y) in strict_set for z in ELEMENTS):
            edges.append((x, y))
    return edges


def format_table(op: Op = times_f) -> str:
    width = 3
    header = "·F".ljust(width) + " | " + " ".join(e.symbol.ljust(width) for e in ELEMENTS)
    lines = [header, "-" * len(header)]
    for x in ELEMENTS:
        row = " ".join(op(x, y).symbol.ljust(width) for y in ELEMENTS)
        lines.append(x.symbol.ljust(width) + " | " + row)
    return "\n".join(line.rstrip() for line in lines)
