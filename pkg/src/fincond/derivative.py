"""The finite-condensation derivative ``d`` and its companions on finite-degree ordinals.

``d(alpha)`` is the order type of ``alpha / ~F``.  On a Cantor normal form it
lowers every exponent by one; a nonzero constant term contributes a single
extra point::

    d(a_n w^n + ... + a_1 w + a_0) = a_n w^(n-1) + ... + a_2 w + a_1 + [a_0 > 0]

and ``d(k) = 1`` for finite ``k >= 1``.

Besides ``d`` this module provides the left action ``phi_l_omega``
(``w ._F alpha = w^deg(alpha)``), the right action by ``w`` (the identity),
the preimage ``I`` of ``d``, and the additive-defect calculus.  Functions
that restate a theorem (:func:`d_linear_combo`, :func:`d_sum_scaled`) compute
the value generically and raise :class:`IdentityViolation` if the theorem's
closed form disagrees.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

from . import cnf
from .band import BandElement
from .cnf import OrdinalCNF, add, degree, is_limit, is_successor, scale_left
from .errors import IdentityViolation, NotALimit, PreconditionViolated, ZeroArgument


def d(alpha: OrdinalCNF) -> OrdinalCNF:
    if alpha.is_zero:
        return cnf.ZERO
    if degree(alpha) == 0:
        return cnf.ONE
    shifted = [(e - 1, c) for e, c in alpha.terms if e >= 1]
    if alpha.constant:
        if shifted[-1][0] == 0:
            shifted[-1] = (0, shifted[-1][1] + 1)
        else:
            shifted.append((0, 1))
    return OrdinalCNF(tuple(shifted))


def d_iter(alpha: OrdinalCNF, n: int) -> OrdinalCNF:
    for _ in range(n):
        alpha = d(alpha)
    return alpha


def phi_l_omega(alpha: OrdinalCNF) -> OrdinalCNF:
    """``w ._F alpha``: the monic monomial ``w^deg(alpha)``."""
    if alpha.is_zero:
        return cnf.ZERO
    return cnf.monomial(degree(alpha))


def phi_r_omega(alpha: OrdinalCNF) -> OrdinalCNF:
    """``alpha ._F w``; every copy of w is one class, so this is the identity."""
    return alpha


def phi_l(x: BandElement) -> Callable[[OrdinalCNF], OrdinalCNF]:
    return {BandElement.ONE: d, BandElement.OMEGA: phi_l_omega}[x]


def phi_r(x: BandElement) -> Callable[[OrdinalCNF], OrdinalCNF]:
    # alpha ._F 1 and 1 ._F alpha have the same order type, so both are d.
    return {BandElement.ONE: d, BandElement.OMEGA: phi_r_omega}[x]


# antiderivative

def upshift(alpha: OrdinalCNF) -> OrdinalCNF:
    """Raise every non-constant exponent by one and drop the constant term."""
    return OrdinalCNF(tuple((e + 1, c) for e, c in alpha.terms if e >= 1))


@dataclass(frozen=True)
class PreimageSet:
    """``fixed`` plus, when ``family_base`` is set, every ``family_base + j`` with ``j >= 1``."""

    fixed: Tuple[OrdinalCNF, ...]
    family_base: Optional[OrdinalCNF] = None

    def members(self, max_j: int = 8) -> Iterator[OrdinalCNF]:
        yield from self.fixed
        if self.family_base is not None:
            for j in range(1, max_j + 1):
                yield add(self.family_base, cnf.nat(j))

    def __contains__(self, beta: OrdinalCNF) -> bool:
        if beta in self.fixed:
            return True
        if self.family_base is None or not beta.constant:
            return False
        return beta.limit_part() == self.family_base

    def to_json(self) -> dict:
        return {
            "fixed": [str(b) for b in self.fixed],
            "family_base": None if self.family_base is None else str(self.family_base),
        }

    def __str__(self):
        fixed = ", ".join(str(b) for b in self.fixed)
        if self.family_base is None:
            return "{" + fixed + "}"
        base = "" if self.family_base.is_zero else f"{self.family_base} + "
        return "{" + fixed + "} | {" + base + "j : j >= 1}"


def i_preimage(alpha: OrdinalCNF) -> PreimageSet:
    if alpha.is_zero:
        raise ZeroArgument("the preimage is described for nonzero ordinals only")
    base = upshift(alpha)
    a0 = alpha.constant
    if a0 == 0:
        return PreimageSet((base,))
    top = add(base, cnf.monomial(1, a0))
    if a0 == 1:
        return PreimageSet((top,), base)
    return PreimageSet((top,), add(base, cnf.monomial(1, a0 - 1)))


def i_limit(alpha: OrdinalCNF) -> OrdinalCNF:
    """Inverse of ``d`` on nonzero limits."""
    if not is_limit(alpha):
        raise NotALimit(f"{alpha} is not a nonzero limit ordinal")
    return upshift(alpha)


# additivity defect

class DefectClass(enum.Enum):
    EQUAL = "Equal"
    PLUS_ONE = "PlusOne"

    def __str__(self):
        return self.value


def distribute_defect(alpha: OrdinalCNF, beta: OrdinalCNF, permissive: bool = False) -> DefectClass:
    """Predict how ``d(alpha + beta)`` relates to ``d(alpha) + d(beta)``.

    Only the shape of the arguments is consulted.  With ``permissive`` a zero
    argument is accepted and classified ``EQUAL``.
    """
    if alpha.is_zero or beta.is_zero:
        if permissive:
            return DefectClass.EQUAL
        raise ZeroArgument("defect is classified for nonzero ordinals")
    if is_limit(alpha) or degree(beta) >= 2:
        return DefectClass.EQUAL
    return DefectClass.PLUS_ONE


def defect_holds(alpha: OrdinalCNF, beta: OrdinalCNF, cls: DefectClass) -> bool:
    lhs = d(add(alpha, beta))
    rhs = add(d(alpha), d(beta))
    if cls is DefectClass.EQUAL:
        return lhs == rhs
    return add(lhs, cnf.ONE) == rhs


def defect_case(alpha: OrdinalCNF, beta: OrdinalCNF) -> int:
    """Which branch of the case analysis applies: 0 for a limit alpha, else 1..9."""
    if is_limit(alpha):
        return 0
    m, n = degree(beta), degree(alpha)
    if m >= 2:
        return 1 if n < m else 2 if n == m else 3
    if n >= 2:
        return 4 if m == 1 else 5
    return {(0, 0): 6, (0, 1): 7, (1, 0): 8, (1, 1): 9}[(n, m)]


# linearity

def _require_limit(alpha: OrdinalCNF, min_degree: int = 1):
    if not is_limit(alpha) or degree(alpha) < min_degree:
        raise PreconditionViolated(f"{alpha} must be a limit of degree >= {min_degree}")


def _coeffs(alpha: OrdinalCNF) -> Dict[int, int]:
    return dict(alpha.terms)


def linear_combo_case_formula(p: int, alpha: OrdinalCNF, q: int, beta: OrdinalCNF) -> OrdinalCNF:
    """Explicit coefficients of ``d(p alpha + q beta)`` split on the degree comparison."""
    n, m = degree(alpha), degree(beta)
    a, b = _coeffs(alpha), _coeffs(beta)
    out: Dict[int, int] = {}
    if n < m:
        out[m - 1] = q * b[m]
        for e in range(1, m):
            out[e - 1] = b.get(e, 0)
    elif n == m:
        out[n - 1] = p * a[n] + q * b[n]
        for e in range(1, n):
            out[e - 1] = b.get(e, 0)
    else:
        out[n - 1] = p * a[n]
        for e in range(m + 1, n):
            out[e - 1] = a.get(e, 0)
        out[m - 1] = a.get(m, 0) + q * b[m]
        for e in range(1, m):
            out[e - 1] = b.get(e, 0)
    return cnf.make_cnf(out.items())


def d_linear_combo(p: int, alpha: OrdinalCNF, q: int, beta: OrdinalCNF) -> OrdinalCNF:
    if p < 1 or q < 1:
        raise PreconditionViolated("scalars must be >= 1")
    _require_limit(alpha, 2)
    _require_limit(beta, 2)
    value = d(add(scale_left(p, alpha), scale_left(q, beta)))
    linear = add(scale_left(p, d(alpha)), scale_left(q, d(beta)))
    formula = linear_combo_case_formula(p, alpha, q, beta)
    if not value == linear == formula:
        raise IdentityViolation(f"d({p}*({alpha}) + {q}*({beta})): {value} vs {linear} vs {formula}")
    return value


def scaled_derivative(p: int, alpha: OrdinalCNF) -> OrdinalCNF:
    """``(p - 1) a_n w^(n-1) + d(alpha)`` for ``alpha`` of degree ``n >= 1``."""
    n, a = alpha.leading
    return add(cnf.monomial(n - 1, (p - 1) * a), d(alpha))


def d_sum_scaled(terms: Sequence[Tuple[int, OrdinalCNF]]) -> OrdinalCNF:
    if not terms:
        raise PreconditionViolated("need at least one (scalar, ordinal) pair")
    for p, alpha in terms:
        if p < 1:
            raise PreconditionViolated("scalars must be >= 1")
        _require_limit(alpha)
    value = d(reduce(add, (scale_left(p, a) for p, a in terms), cnf.ZERO))
    rhs = reduce(add, (scaled_derivative(p, a) for p, a in terms), cnf.ZERO)
    if value != rhs:
        raise IdentityViolation(f"d(sum of p_i alpha_i) = {value}, termwise form gives {rhs}")
    if all(degree(a) >= 2 for _, a in terms):
        linear = reduce(add, (scale_left(p, d(a)) for p, a in terms), cnf.ZERO)
        if value != linear:
            raise IdentityViolation(f"d(sum of p_i alpha_i) = {value}, sum of p_i d(alpha_i) = {linear}")
    return value


def d_right_scale_invariance(alpha: OrdinalCNF, p: int) -> bool:
    if p < 1:
        raise PreconditionViolated("right scalar must be >= 1")
    return d(cnf.scale_right(alpha, p)) == d(alpha)


# the failure of phi_r to be a representation

def canonical_scan(max_degree: int = 4, max_coeff: int = 5) -> Iterator[OrdinalCNF]:
    """Nonzero ordinals ordered by total coefficient weight, then by size."""
    coords = itertools.product(range(max_coeff + 1), repeat=max_degree + 1)
    forms = [cnf.make_cnf(zip(range(max_degree, -1, -1), cs)) for cs in coords]
    forms = [f for f in forms if not f.is_zero]
    forms.sort(key=lambda f: (sum(c for _, c in f.terms), f.terms))
    return iter(forms)


def homomorphism_witness(max_degree: int = 4, max_coeff: int = 5) -> Tuple[OrdinalCNF, OrdinalCNF, OrdinalCNF]:
    """First ``alpha`` with ``d(d(alpha)) != d(alpha)``, as ``(alpha, d(alpha), d(d(alpha)))``."""
    for alpha in canonical_scan(max_degree, max_coeff):
        once = d(alpha)
        twice = d(once)
        if twice != once:
            return alpha, once, twice
    raise LookupError("no witness inside the given bounds")
