"""Bounded enumerations of Cantor normal forms used by the verification suites."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Tuple

from .cnf import OrdinalCNF, is_limit, make_cnf


@lru_cache(maxsize=None)
def ordinals(max_degree: int, max_coeff: int, include_zero: bool = False) -> Tuple[OrdinalCNF, ...]:
    """Every ordinal with degree <= max_degree and coefficients in 0..max_coeff, ascending.

    ``(c+1)^(d+1) - 1`` nonzero values; 7775 at (4, 5) and 255 at (3, 3).
    """
    exps = range(max_degree, -1, -1)
    out = []
    # Coefficient vectors in lexicographic order, leading exponent first, are
    # already in ascending ordinal order.
    for cs in itertools.product(range(max_coeff + 1), repeat=max_degree + 1):
        alpha = make_cnf(zip(exps, cs))
        if include_zero or not alpha.is_zero:
            out.append(alpha)
    return tuple(out)


@lru_cache(maxsize=None)
def limits(max_degree: int, max_coeff: int, min_degree: int = 1) -> Tuple[OrdinalCNF, ...]:
    return tuple(
        a for a in ordinals(max_degree, max_coeff)
        if is_limit(a) and a.terms[0][0] >= min_degree
    )
