"""Ordinals of finite degree in Cantor normal form.

An ordinal ``a_n w^n + ... + a_1 w + a_0`` is stored as the tuple of its
nonzero ``(exponent, coefficient)`` pairs, exponents strictly decreasing.
Coefficients are written on the LEFT: ``a w^e`` is ``a`` summed copies of
``w^e``, so ``2w = w + w``.

Products use the lexicographic convention: ``L * M`` replaces every point
of ``L`` by a copy of ``M``.  This is the conventional ordinal product with
its arguments swapped, so ``2 * w == w + w`` while ``w * 2 == w``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence, Tuple

from .errors import DuplicateExponent, InvalidCNF, ZeroArgument, ZeroHasNoDegree

Term = Tuple[int, int]


class Ordering(enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


class Kind(enum.Enum):
    ZERO = "Zero"
    SUCCESSOR = "Successor"
    LIMIT = "Limit"


def _is_natural(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


@total_ordering
@dataclass(frozen=True)
class OrdinalCNF:
    """Canonical Cantor normal form; construct through :func:`make_cnf`."""

    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        prev = None
        for pair in self.terms:
            if len(pair) != 2:
                raise InvalidCNF(f"term {pair!r} is not an (exponent, coefficient) pair")
            e, c = pair
            if not (_is_natural(e) and _is_natural(c)):
                raise InvalidCNF(f"term {pair!r} must hold natural numbers")
            if c == 0:
                raise InvalidCNF(f"zero coefficient at exponent {e}")
            if prev is not None and e >= prev:
                raise InvalidCNF(f"exponents not strictly decreasing: {self.terms!r}")
            prev = e

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant(self) -> int:
        if self.terms and self.terms[-1][0] == 0:
            return self.terms[-1][1]
        return 0

    @property
    def leading(self) -> Term:
        if not self.terms:
            raise ZeroHasNoDegree("0 has no leading term")
        return self.terms[0]

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def limit_part(self) -> "OrdinalCNF":
        """The ordinal with its constant term removed."""
        if self.constant:
            return OrdinalCNF(self.terms[:-1])
        return self

    def __lt__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return self.terms < other.terms

    def __add__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return add(self, other)

    def __mul__(self, other):
        if not isinstance(other, OrdinalCNF):
            return NotImplemented
        return prod(self, other)

    def __str__(self):
        return pretty(self)

    def __repr__(self):
        return f"OrdinalCNF({pretty(self)!r})"


ZERO = OrdinalCNF()
ONE = OrdinalCNF(((0, 1),))
OMEGA = OrdinalCNF(((1, 1),))


def make_cnf(pairs: Iterable[Sequence[int]]) -> OrdinalCNF:
    """Build a canonical form from ``(exponent, coefficient)`` pairs in any order.

    Zero-coefficient pairs are dropped; a repeated exponent is an error.
    """
    seen = {}
    for e, c in pairs:
        if not (_is_natural(e) and _is_natural(c)):
            raise InvalidCNF(f"pair {(e, c)!r} must hold natural numbers")
        if e in seen:
            raise DuplicateExponent(f"exponent {e} appears twice")
        seen[e] = c
    return OrdinalCNF(tuple((e, c) for e, c in sorted(seen.items(), reverse=True) if c))


def nat(n: int) -> OrdinalCNF:
    return make_cnf([(0, n)])


def monomial(exponent: int, coefficient: int = 1) -> OrdinalCNF:
    return make_cnf([(exponent, coefficient)])


def degree(alpha: OrdinalCNF) -> int:
    if alpha.is_zero:
        raise ZeroHasNoDegree("deg(0) is undefined")
    return alpha.terms[0][0]


def classify(alpha: OrdinalCNF) -> Kind:
    if alpha.is_zero:
        return Kind.ZERO
    if alpha.terms[-1][0] == 0:
        return Kind.SUCCESSOR
    return Kind.LIMIT


def is_limit(alpha: OrdinalCNF) -> bool:
    return classify(alpha) is Kind.LIMIT


def is_successor(alpha: OrdinalCNF) -> bool:
    return classify(alpha) is Kind.SUCCESSOR


def compare(alpha: OrdinalCNF, beta: OrdinalCNF) -> Ordering:
    # Tuple order on the pair sequences is exactly the well-order: a larger
    # leading exponent wins, then a larger coefficient, and a proper prefix is smaller.
    if alpha.terms < beta.terms:
        return Ordering.LT
    if alpha.terms == beta.terms:
        return Ordering.EQ
    return Ordering.GT


def add(alpha: OrdinalCNF, beta: OrdinalCNF) -> OrdinalCNF:
    """Ordinal sum: lower powers of w sitting before a higher one are absorbed."""
    if beta.is_zero:
        return alpha
    if alpha.is_zero:
        return beta
    m, b = beta.terms[0]
    head = []
    for e, c in alpha.terms:
        if e > m:
            head.append((e, c))
        elif e == m:
            b += c
            break
        else:
            break
    return OrdinalCNF(tuple(head) + ((m, b),) + beta.terms[1:])


def scale_left(p: int, alpha: OrdinalCNF) -> OrdinalCNF:
    """``p * alpha`` with ``p`` finite: ``p a_n w^n`` followed by the tail of alpha."""
    if p == 0 or alpha.is_zero:
        return ZERO
    (e, a), tail = alpha.terms[0], alpha.terms[1:]
    return OrdinalCNF(((e, p * a),) + tail)


def prod(alpha: OrdinalCNF, beta: OrdinalCNF) -> OrdinalCNF:
    """Lexicographic product ``alpha beta``: each point of alpha becomes a copy of beta.

    The left factor distributes over its CNF terms; ``a w^e * beta`` is
    ``a w^(deg(beta) + e)`` for ``e >= 1`` and ``a * beta`` for ``e = 0``.
    """
    if alpha.is_zero or beta.is_zero:
        return ZERO
    top = degree(beta)
    result = ZERO
    for e, a in alpha.terms:
        if e >= 1:
            part = OrdinalCNF(((top + e, a),))
        else:
            part = scale_left(a, beta)
        result = add(result, part)
    return result


def scale_right(alpha: OrdinalCNF, p: int) -> OrdinalCNF:
    """``alpha * p``; every ``w^i p`` with ``i >= 1`` collapses back to ``w^i``."""
    return prod(alpha, nat(p))


def subtract_first(alpha: OrdinalCNF) -> OrdinalCNF:
    """The unique ``delta`` with ``1 + delta == alpha``."""
    if alpha.is_zero:
        raise ZeroArgument("0 has no first point to remove")
    c = alpha.constant
    if not c:
        return alpha
    if c == 1:
        return OrdinalCNF(alpha.terms[:-1])
    return OrdinalCNF(alpha.terms[:-1] + ((0, c - 1),))


def pretty(alpha: OrdinalCNF) -> str:
    """Canonical text, e.g. ``3*w^2 + w + 4``; re-parses to the same ordinal."""
    if alpha.is_zero:
        return "0"
    out = []
    for e, c in alpha.terms:
        if e == 0:
            out.append(str(c))
            continue
        power = "w" if e == 1 else f"w^{e}"
        out.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(out)
