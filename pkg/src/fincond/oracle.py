"""Finite condensation computed by structural recursion on linear-order terms.

This module is the brute-force side of every cross-check: it never looks at
the closed-form derivative in :mod:`fincond.derivative`.  It expands an
ordinal into an explicit sum of blocks ``w^e`` (one summand per unit of
coefficient), condenses each block with three rewrite rules, and glues the
pieces back together.

Rules
-----
* ``Fin n`` and each generator ``w, w*, zeta`` condense to a single point.
  A condensation class is either finite or of type w, w*, zeta, and each of
  these is one class of itself.
* ``Prod(M, g)`` with ``g`` a generator condenses to ``M``: every copy of
  ``g`` is exactly one class, and distinct copies are infinitely far apart.
* In a sum, if the prefix has a last point and the next part has a first
  point, those two points are adjacent and hence in the same class.  The
  class at the juncture is counted once: the next part's condensation loses
  its first point.  If the prefix has no last point (or the part has no first
  point), infinitely many points separate them and the condensations simply
  concatenate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Tuple, Union

from . import cnf
from .band import BandElement
from .cnf import OrdinalCNF
from .errors import NotWellOrdered, UnsupportedTerm

GENERATORS = (BandElement.OMEGA, BandElement.OMEGA_STAR, BandElement.ZETA)


@dataclass(frozen=True)
class Zero:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Fin:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"Fin needs n >= 1, got {self.n!r}")

    def __str__(self):
        return str(self.n)


@dataclass(frozen=True)
class Gen:
    g: BandElement

    def __post_init__(self):
        if self.g not in GENERATORS:
            raise ValueError(f"{self.g} is not a generator")

    def __str__(self):
        return {BandElement.OMEGA: "w", BandElement.OMEGA_STAR: "w*", BandElement.ZETA: "zeta"}[self.g]


@dataclass(frozen=True)
class Sum:
    parts: Tuple["LinTerm", ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("Sum needs at least one part")
        for p in self.parts:
            if isinstance(p, (Sum, Zero)):
                raise ValueError("Sum parts must be flattened and nonzero")

    def __str__(self):
        return "(" + " + ".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class Prod:
    left: "LinTerm"
    right: "LinTerm"

    def __str__(self):
        return f"{_factor_str(self.left)} * {_factor_str(self.right)}"


LinTerm = Union[Zero, Fin, Gen, Sum, Prod]

ZERO_TERM = Zero()
OMEGA_TERM = Gen(BandElement.OMEGA)


def _factor_str(t: LinTerm) -> str:
    return f"({t})" if isinstance(t, Prod) else str(t)


def make_sum(*parts: LinTerm) -> LinTerm:
    flat: List[LinTerm] = []
    for p in parts:
        if isinstance(p, Zero):
            continue
        if isinstance(p, Sum):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        return ZERO_TERM
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def make_prod(left: LinTerm, right: LinTerm) -> LinTerm:
    if isinstance(left, Zero) or isinstance(right, Zero):
        return ZERO_TERM
    return Prod(left, right)


# structural predicates

def is_well_ordered(t: LinTerm) -> bool:
    if isinstance(t, Gen):
        return t.g is BandElement.OMEGA
    if isinstance(t, Sum):
        return all(is_well_ordered(p) for p in t.parts)
    if isinstance(t, Prod):
        return is_well_ordered(t.left) and is_well_ordered(t.right)
    return True


def has_first(t: LinTerm) -> bool:
    if isinstance(t, Fin):
        return True
    if isinstance(t, Gen):
        return t.g is BandElement.OMEGA
    if isinstance(t, Sum):
        return has_first(t.parts[0])
    if isinstance(t, Prod):
        return has_first(t.left) and has_first(t.right)
    return False


def has_last(t: LinTerm) -> bool:
    if isinstance(t, Fin):
        return True
    if isinstance(t, Gen):
        return t.g is BandElement.OMEGA_STAR
    if isinstance(t, Sum):
        return has_last(t.parts[-1])
    if isinstance(t, Prod):
        return has_last(t.left) and has_last(t.right)
    return False


# conversion to and from Cantor normal form

def power_term(e: int) -> LinTerm:
    """``w^e`` as the left-nested product chain ``((w*w)*w)...``."""
    if e == 0:
        return Fin(1)
    t: LinTerm = OMEGA_TERM
    for _ in range(e - 1):
        t = Prod(t, OMEGA_TERM)
    return t


def term_of_cnf(alpha: OrdinalCNF) -> LinTerm:
    parts: List[LinTerm] = []
    for e, c in alpha.terms:
        if e == 0:
            parts.append(Fin(c))
        else:
            parts.extend([power_term(e)] * c)
    return make_sum(*parts)


def eval_term(t: LinTerm) -> OrdinalCNF:
    """Order type of a well-ordered term."""
    if isinstance(t, Zero):
        return cnf.ZERO
    if isinstance(t, Fin):
        return cnf.nat(t.n)
    if isinstance(t, Gen):
        if t.g is not BandElement.OMEGA:
            raise NotWellOrdered(f"{t} is not well-ordered")
        return cnf.OMEGA
    if isinstance(t, Sum):
        return reduce(cnf.add, (eval_term(p) for p in t.parts), cnf.ZERO)
    if isinstance(t, Prod):
        return cnf.prod(eval_term(t.left), eval_term(t.right))
    raise TypeError(f"not a LinTerm: {t!r}")


# condensation

def _drop_first(t: LinTerm) -> LinTerm:
    if isinstance(t, Fin):
        return Fin(t.n - 1) if t.n > 1 else ZERO_TERM
    if not is_well_ordered(t):
        raise UnsupportedTerm(f"cannot merge a juncture into {t}")
    return term_of_cnf(cnf.subtract_first(eval_term(t)))


def condense_term(t: LinTerm, trace: Optional[List[str]] = None) -> LinTerm:
    """Rewrite ``t`` into a term for ``t / ~F``; each rule used is appended to ``trace``."""

    def log(msg: str):
        if trace is not None:
            trace.append(msg)

    if isinstance(t, Zero):
        return t
    if isinstance(t, (Fin, Gen)):
        log(f"point: {t} -> 1")
        return Fin(1)
    if isinstance(t, Prod):
        if isinstance(t.right, Gen):
            log(f"absorb: {t} -> {t.left}")
            return t.left
        if t.right == Fin(1):
            log(f"unit: {t} -> {t.left}")
            return condense_term(t.left, trace)
        if t.left == Fin(1):
            log(f"unit: {t} -> {t.right}")
            return condense_term(t.right, trace)
        if is_well_ordered(t):
            expanded = term_of_cnf(eval_term(t))
            log(f"expand: {t} -> {expanded}")
            return condense_term(expanded, trace)
        raise UnsupportedTerm(f"no condensation rule for {t}")
    if isinstance(t, Sum):
        out: List[LinTerm] = []
        prev_last = False
        for part in t.parts:
            c = condense_term(part, trace)
            if prev_last and has_first(part):
                merged = _drop_first(c)
                log(f"merge juncture before {part}: {c} -> {merged}")
                c = merged
            out.append(c)
            prev_last = has_last(part)
        if len(out) > 1 and not all(is_well_ordered(c) for c in out):
            raise UnsupportedTerm(f"condensed sum {t} leaves scattered parts")
        return make_sum(*out)
    raise TypeError(f"not a LinTerm: {t!r}")


def condense_cnf_oracle(alpha: OrdinalCNF, trace: Optional[List[str]] = None) -> OrdinalCNF:
    return eval_term(condense_term(term_of_cnf(alpha), trace))


def iterate_condense(alpha: OrdinalCNF, n: int) -> OrdinalCNF:
    for _ in range(n):
        alpha = condense_cnf_oracle(alpha)
    return alpha


def band_term(x: BandElement) -> LinTerm:
    return Fin(1) if x is BandElement.ONE else Gen(x)


def band_of_term(t: LinTerm) -> BandElement:
    if t == Fin(1):
        return BandElement.ONE
    if isinstance(t, Gen):
        return t.g
    raise UnsupportedTerm(f"{t} is not an element of R")


def condense_band_product(x: BandElement, y: BandElement) -> BandElement:
    """``x ._F y`` re-derived by condensing the lexicographic product term."""
    return band_of_term(condense_term(Prod(band_term(x), band_term(y))))
