"""Exhaustive verification harness.

Each :class:`Suite` pairs a case generator over bounded enumerations with a
predicate.  :func:`run_verify` runs every registered suite, optionally
spreading each suite's cases over worker processes (case ``i`` goes to shard
``i % shards``), and reports per-suite counts, the first counterexample and
timings.  Failures are data; nothing here raises on a broken law.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import band, cnf, derivative as dv, oracle
from .band import ELEMENTS, ORDINAL_ELEMENTS, BandElement
from .cnf import ONE, OMEGA, OrdinalCNF, add, degree, is_limit, monomial, prod, scale_left
from .enumeration import limits, ordinals


@dataclass(frozen=True)
class Bounds:
    """``max_degree``/``max_coeff`` drive unary suites; pair and triple suites use the reduced views."""

    max_degree: int = 4
    max_coeff: int = 5
    max_scalar: int = 4

    def __post_init__(self):
        for name in ("max_degree", "max_coeff", "max_scalar"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    @property
    def unary(self) -> Tuple[OrdinalCNF, ...]:
        return ordinals(self.max_degree, self.max_coeff)

    @property
    def pair_bounds(self) -> Tuple[int, int]:
        return min(self.max_degree, 3), min(self.max_coeff, 3)

    @property
    def pair(self) -> Tuple[OrdinalCNF, ...]:
        return ordinals(*self.pair_bounds)

    @property
    def small(self) -> Tuple[OrdinalCNF, ...]:
        # third argument of the three-variable arithmetic laws: 0, every
        # coefficient-1 form up to w^2, and a few with larger coefficients
        base = ordinals(min(self.max_degree, 2), 1, include_zero=True)
        extra = (cnf.nat(2), cnf.make_cnf([(1, 2), (0, 1)]), cnf.make_cnf([(2, 3), (1, 2), (0, 3)]))
        return tuple(sorted(set(base) | {x for x in extra if degree(x) <= self.max_degree}))

    @property
    def triple(self) -> Tuple[OrdinalCNF, ...]:
        return ordinals(min(self.max_degree, 2), min(self.max_coeff, 2), include_zero=True)

    @property
    def triple_limits(self) -> Tuple[OrdinalCNF, ...]:
        return limits(min(self.max_degree, 2), min(self.max_coeff, 3))


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    cases: Callable[[Bounds], Iterable]
    check: Callable[..., bool]


REGISTRY: Dict[str, Suite] = {}


def suite(name: str, claim: str, cases: Callable[[Bounds], Iterable]):
    def register(check):
        REGISTRY[name] = Suite(name, claim, cases, check)
        return check
    return register


def _ordered_pairs(b: Bounds):
    xs = b.pair
    return ((x, y) for i, x in enumerate(xs) for y in xs[i + 1:])


def _with_small(pairs_fn):
    def cases(b: Bounds):
        small = b.small
        return ((a, x, y) for x, y in pairs_fn(b) for a in small)
    return cases


# ordinal arithmetic

@suite("cnf.add_right_strict", "beta < gamma implies alpha + beta < alpha + gamma", _with_small(_ordered_pairs))
def _(a, x, y):
    return add(a, x) < add(a, y)


@suite("cnf.add_left_weak", "beta < gamma implies beta + alpha <= gamma + alpha", _with_small(_ordered_pairs))
def _(a, x, y):
    return add(x, a) <= add(y, a)


@suite("cnf.prod_left_strict", "beta < gamma implies beta alpha < gamma alpha, for alpha >= 1",
       _with_small(_ordered_pairs))
def _(a, x, y):
    if a.is_zero:
        return prod(x, a) == prod(y, a)
    return prod(x, a) < prod(y, a)


@suite("cnf.prod_right_weak", "beta < gamma implies alpha beta <= alpha gamma", _with_small(_ordered_pairs))
def _(a, x, y):
    return prod(a, x) <= prod(a, y)


def _small_triples(b: Bounds):
    return itertools.product(b.triple, repeat=3)


@suite("cnf.add_associative", "(a + b) + c = a + (b + c)", _small_triples)
def _(a, x, y):
    return add(add(a, x), y) == add(a, add(x, y))


@suite("cnf.prod_associative", "(a b) c = a (b c)", _small_triples)
def _(a, x, y):
    return prod(prod(a, x), y) == prod(a, prod(x, y))


@suite("cnf.prod_vs_conventional", "lexicographic alpha beta equals the textbook product beta . alpha",
       lambda b: itertools.product(b.pair, b.small))
def _(a, x):
    return prod(a, x) == _conventional_product(x, a)


def _conventional_product(x: OrdinalCNF, y: OrdinalCNF) -> OrdinalCNF:
    # Textbook (antilexicographic) x . y, distributing over the CNF of y.
    if x.is_zero or y.is_zero:
        return cnf.ZERO
    (n, a), tail = x.terms[0], x.terms[1:]
    out = cnf.ZERO
    for e, c in y.terms:
        if e >= 1:
            out = add(out, monomial(n + e, c))
        else:
            out = add(out, cnf.OrdinalCNF(((n, a * c),) + tail))
    return out


@suite("cnf.scale_left_iterated", "p alpha equals the p-fold sum of alpha, p <= 6",
       lambda b: itertools.product(b.unary, range(7)))
def _(a, p):
    total = cnf.ZERO
    for _ in range(p):
        total = add(total, a)
    return scale_left(p, a) == total == prod(cnf.nat(p), a)


@suite("cnf.initial_segment", "k alpha <= (k+1) a_n w^n for 1 <= k <= 4",
       lambda b: itertools.product(b.unary, range(1, 5)))
def _(a, k):
    n, an = a.leading
    return scale_left(k, a) <= scale_left(k + 1, monomial(n, an))


@suite("cnf.lower_powers_absorbed", "a w^m + b w^n = b w^n when m < n",
       lambda b: ((m, n, x, y) for n in range(1, b.max_degree + 1) for m in range(n)
                  for x in range(1, b.max_coeff + 1) for y in range(1, b.max_coeff + 1)))
def _(m, n, x, y):
    return add(monomial(m, x), monomial(n, y)) == monomial(n, y)


@suite("cnf.compare_vs_difference", "alpha <= beta iff alpha + delta = beta for some delta",
       lambda b: itertools.product(b.pair, repeat=2))
def _(x, y):
    # The right difference, when it exists, is a tail of y's CNF (possibly with
    # a reduced leading coefficient).
    witnesses = [cnf.ZERO] + [OrdinalCNF(y.terms[i:]) for i in range(len(y.terms))]
    for i, (e, c) in enumerate(y.terms):
        witnesses += [OrdinalCNF(((e, k),) + y.terms[i + 1:]) for k in range(1, c)]
    found = any(add(x, w) == y for w in witnesses)
    return found == (cnf.compare(x, y) is not cnf.Ordering.GT)


# the band

@suite("band.table_oracle", "times_f table matches condensation of the product term",
       lambda b: itertools.product(ELEMENTS, repeat=2))
def _(x, y):
    return band.times_f(x, y) == oracle.condense_band_product(x, y)


def _band_law_cases(b: Bounds):
    yield from (("idempotency", (x,)) for x in ELEMENTS)
    yield from (("associativity", t) for t in itertools.product(ELEMENTS, repeat=3))
    yield from (("left_regularity", t) for t in itertools.product(ELEMENTS, repeat=2))


@suite("band.left_regular_band", "xx = x, (xy)z = x(yz), xyx = xy on R", _band_law_cases)
def _(law, args):
    f = band.times_f
    if law == "idempotency":
        (x,) = args
        return f(x, x) == x
    if law == "associativity":
        x, y, z = args
        return f(f(x, y), z) == f(x, f(y, z))
    x, y = args
    return f(f(x, y), x) == f(x, y)


@suite("band.one_absorbing", "x 1 = 1 x = 1", lambda b: ELEMENTS)
def _(x):
    return band.times_f(x, BandElement.ONE) == band.times_f(BandElement.ONE, x) == BandElement.ONE


@suite("band.order_axioms", "<= is reflexive, antisymmetric and transitive",
       lambda b: itertools.product(ELEMENTS, repeat=3))
def _(x, y, z):
    leq = band.band_leq
    ok = leq(x, x)
    ok &= not (leq(x, y) and leq(y, x)) or x == y
    ok &= not (leq(x, y) and leq(y, z)) or leq(x, z)
    return ok


@suite("band.hasse", "covering pairs are exactly (w,1), (w*,1), (zeta,1)", lambda b: [()])
def _():
    expected = {(BandElement.OMEGA, BandElement.ONE), (BandElement.OMEGA_STAR, BandElement.ONE),
                (BandElement.ZETA, BandElement.ONE)}
    lower = [BandElement.OMEGA, BandElement.OMEGA_STAR, BandElement.ZETA]
    incomparable = all(not band.band_leq(x, y) for x in lower for y in lower if x != y)
    return set(band.hasse_edges()) == expected and incomparable


@suite("band.ordinal_closure", "{1, w} is closed under times_f",
       lambda b: itertools.product(ORDINAL_ELEMENTS, repeat=2))
def _(x, y):
    return band.times_f_on(x, y) in ORDINAL_ELEMENTS


# the oracle

@suite("oracle.round_trip", "eval_term(term_of_cnf(alpha)) = alpha", lambda b: b.unary)
def _(a):
    return oracle.eval_term(oracle.term_of_cnf(a)) == a


@suite("oracle.d_agreement", "closed-form d equals the structural condensation", lambda b: b.unary)
def _(a):
    return dv.d(a) == oracle.condense_cnf_oracle(a)


@suite("oracle.right_absorption", "(alpha w)/~F = alpha", lambda b: b.unary)
def _(a):
    return oracle.condense_cnf_oracle(prod(a, OMEGA)) == a


@suite("oracle.block_distribution", "condensing a CNF equals summing its condensed blocks", lambda b: b.unary)
def _(a):
    whole = oracle.condense_cnf_oracle(a)
    total = cnf.ZERO
    for e, c in a.terms:
        total = add(total, oracle.condense_cnf_oracle(monomial(e, c)))
    return whole == total


@suite("oracle.weak_order", "alpha < beta implies alpha/~F <= beta/~F", _ordered_pairs)
def _(x, y):
    return oracle.condense_cnf_oracle(x) <= oracle.condense_cnf_oracle(y)


# the derivative

@suite("d.degree_drop", "deg d(alpha) = deg alpha - 1 for deg alpha >= 1",
       lambda b: [a for a in b.unary if degree(a) >= 1])
def _(a):
    return degree(dv.d(a)) == degree(a) - 1


@suite("d.weak_order", "alpha < beta implies d(alpha) <= d(beta)", _ordered_pairs)
def _(x, y):
    return dv.d(x) <= dv.d(y)


@suite("phi_l_omega.degree_map", "w ._F alpha = w^deg(alpha) = (w alpha)/~F", lambda b: b.unary)
def _(a):
    return dv.phi_l_omega(a) == monomial(degree(a)) == oracle.condense_cnf_oracle(prod(OMEGA, a))


@suite("phi_l_omega.weak_order", "alpha < beta implies w ._F alpha <= w ._F beta", _ordered_pairs)
def _(x, y):
    return dv.phi_l_omega(x) <= dv.phi_l_omega(y)


def _preimage_cases(b: Bounds):
    deg = min(b.max_degree, 3)
    buckets: Dict[OrdinalCNF, List[OrdinalCNF]] = {}
    for beta in b.unary:
        buckets.setdefault(dv.d(beta), []).append(beta)
    targets = set(ordinals(deg, b.max_coeff)) | {a for a in buckets if degree(a) <= deg}
    for a in sorted(targets):
        yield a, tuple(buckets.get(a, ()))


@suite("i.preimage", "every described member maps to alpha, every enumerated preimage is described",
       _preimage_cases)
def _(a, found):
    pre = dv.i_preimage(a)
    sound = all(dv.d(beta) == a for beta in pre.members(8))
    complete = all(beta in pre for beta in found)
    return sound and complete


@suite("i.inverse", "d(Ilim(alpha)) = alpha; Ilim(d(l)) = l when w^2 divides l",
       lambda b: [a for a in b.unary if is_limit(a)])
def _(a):
    ok = dv.d(dv.i_limit(a)) == a
    if a.terms[-1][0] >= 2:
        ok &= dv.i_limit(dv.d(a)) == a
    return ok


def _nonzero_pairs(b: Bounds):
    return itertools.product(b.pair, repeat=2)


@suite("defect.dichotomy", "d(a + b) = d(a) + d(b) or d(a + b) + 1 = d(a) + d(b), predicted by shape",
       _nonzero_pairs)
def _(x, y):
    equal = dv.defect_holds(x, y, dv.DefectClass.EQUAL)
    plus_one = dv.defect_holds(x, y, dv.DefectClass.PLUS_ONE)
    predicted = dv.distribute_defect(x, y)
    return equal != plus_one and dv.defect_holds(x, y, predicted)


CASE_MIN_DEGREE = {0: 1, 1: 2, 2: 2, 3: 3, 4: 2, 5: 2, 6: 0, 7: 1, 8: 1, 9: 1}


@suite("defect.case_coverage", "each branch of the case analysis is reached when the bounds allow it",
       lambda b: [(b.pair_bounds,)])
def _(pb):
    deg, coeff = pb
    xs = ordinals(deg, coeff)
    hits = {k: 0 for k in CASE_MIN_DEGREE}
    for x, y in itertools.product(xs, repeat=2):
        hits[dv.defect_case(x, y)] += 1
    return all(hits[k] > 0 for k, need in CASE_MIN_DEGREE.items() if need <= deg)


def _limit_pairs_pq(b: Bounds):
    deg, coeff = b.pair_bounds
    ls = limits(deg, coeff, min_degree=2)
    s = range(1, b.max_scalar + 1)
    return itertools.product(ls, ls, s, s)


@suite("linear.two_term", "d(p a + q b) = p d(a) + q d(b) and the per-degree formulas, limits of degree >= 2",
       _limit_pairs_pq)
def _(x, y, p, q):
    try:
        dv.d_linear_combo(p, x, q, y)
    except AssertionError:
        return False
    return True


@suite("linear.sum_of_limits", "d(a + b + c) = d(a) + d(b) + d(c) for limits",
       lambda b: itertools.product(b.triple_limits, repeat=3))
def _(x, y, z):
    return dv.d(add(add(x, y), z)) == add(add(dv.d(x), dv.d(y)), dv.d(z))


def _scaled_sequences(b: Bounds):
    ls = b.triple_limits
    s = range(1, min(b.max_scalar, 3) + 1)
    for length in (1, 2, 3):
        for alphas in itertools.product(ls, repeat=length):
            for ps in itertools.product(s, repeat=length):
                yield (tuple(zip(ps, alphas)),)


@suite("linear.scaled_sums", "d(sum p_i a_i) = sum((p_i - 1) a_n w^(n-1) + d(a_i)); = sum p_i d(a_i) at degree >= 2",
       _scaled_sequences)
def _(terms):
    try:
        dv.d_sum_scaled(terms)
    except AssertionError:
        return False
    return True


@suite("linear.right_scalar", "d(alpha p) = d(alpha)",
       lambda b: itertools.product(b.unary, range(1, b.max_scalar + 1)))
def _(a, p):
    return dv.d_right_scale_invariance(a, p)


@suite("linear.left_scalar", "d(p alpha) = (p-1) a_n w^(n-1) + d(alpha); = p d(alpha) at degree >= 2, else same limit part",
       lambda b: itertools.product([a for a in b.unary if degree(a) >= 1], range(1, b.max_scalar + 1)))
def _(a, p):
    lhs = dv.d(scale_left(p, a))
    if lhs != dv.scaled_derivative(p, a):
        return False
    naive = scale_left(p, dv.d(a))
    if degree(a) >= 2:
        return lhs == naive
    return lhs.limit_part() == naive.limit_part()


@suite("rep.preserved_products", "phi_r(x ._F y) = phi_r(x) o phi_r(y) for (w,w), (w,1), (1,w)",
       lambda b: itertools.product(b.unary, [(BandElement.OMEGA, BandElement.OMEGA),
                                             (BandElement.OMEGA, BandElement.ONE),
                                             (BandElement.ONE, BandElement.OMEGA)]))
def _(a, xy):
    x, y = xy
    return dv.phi_r(band.times_f(x, y))(a) == dv.phi_r(x)(dv.phi_r(y)(a))


@suite("rep.witness", "phi_r(1 ._F 1) != phi_r(1) o phi_r(1), first witness (w^2, w, 1)",
       lambda b: [(b.max_degree, b.max_coeff)])
def _(deg, coeff):
    if deg < 2:
        return True
    return dv.homomorphism_witness(deg, coeff) == (monomial(2), OMEGA, ONE)


@suite("iterate.agreement", "d^n(alpha) = (alpha)/~F^n for n <= 5",
       lambda b: itertools.product(b.unary, range(6)))
def _(a, n):
    return dv.d_iter(a, n) == oracle.iterate_condense(a, n)


@suite("iterate.exhaustion", "deg d^deg(alpha)(alpha) = 0 and d^(deg+1)(alpha) = 1", lambda b: b.unary)
def _(a):
    n = degree(a)
    return degree(dv.d_iter(a, n)) == 0 and dv.d_iter(a, n + 1) == ONE


@suite("cli.round_trip", "parse(pretty(alpha)) evaluates to alpha", lambda b: b.unary)
def _(a):
    from .expr import evaluate
    r = evaluate(cnf.pretty(a))
    return r.kind == "Ordinal" and r.value == a


# running

@dataclass
class SuiteResult:
    name: str
    claim: str
    checked: int = 0
    failed: int = 0
    counterexample: Optional[str] = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerificationReport:
    bounds: Bounds
    shards: int
    suites: List[SuiteResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def failures(self) -> int:
        return sum(s.failed for s in self.suites)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "bounds": asdict(self.bounds),
            "shards": self.shards,
            "ok": self.ok,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "suites": [
                {"name": s.name, "claim": s.claim, "checked": s.checked, "failed": s.failed,
                 "counterexample": s.counterexample, "seconds": round(s.seconds, 3)}
                for s in self.suites
            ],
        }

    def format(self) -> str:
        lines = []
        for s in self.suites:
            status = "PASS" if s.ok else "FAIL"
            line = f"{status}  {s.name:<28} {s.checked:>8} checked {s.failed:>6} failed  {s.seconds:7.3f}s"
            if s.counterexample:
                line += f"  first counterexample: {s.counterexample}"
            lines.append(line)
        verdict = "all suites pass" if self.ok else f"{self.failures} failure(s)"
        lines.append(f"{len(self.suites)} suites, {verdict}, {self.seconds:.2f}s")
        return "\n".join(lines)


def _fmt_case(case) -> str:
    if isinstance(case, tuple):
        return "(" + ", ".join(_fmt_case(c) for c in case) + ")"
    return str(case)


def _run_shard(name: str, bounds: Bounds, shard: int, shards: int) -> Tuple[int, int, Optional[str]]:
    s = REGISTRY[name]
    checked = failed = 0
    first = None
    for i, case in enumerate(s.cases(bounds)):
        if i % shards != shard:
            continue
        checked += 1
        # cases are argument tuples; bare values stand for one argument
        args = case if isinstance(case, tuple) else (case,)
        try:
            ok = s.check(*args)
        except Exception as exc:  # a crashing check is a failing check
            ok = False
            if first is None:
                first = f"{_fmt_case(case)} raised {type(exc).__name__}: {exc}"
        if not ok:
            failed += 1
            if first is None:
                first = _fmt_case(case)
    return checked, failed, first


def run_verify(bounds: Bounds = Bounds(), shards: int = 1, only: Optional[Iterable[str]] = None) -> VerificationReport:
    names = list(only) if only is not None else list(REGISTRY)
    report = VerificationReport(bounds, shards)
    start = time.perf_counter()
    pool = ProcessPoolExecutor(max_workers=shards) if shards > 1 else None
    try:
        for name in names:
            s = REGISTRY[name]
            t0 = time.perf_counter()
            if pool is None:
                parts = [_run_shard(name, bounds, 0, 1)]
            else:
                futures = [pool.submit(_run_shard, name, bounds, k, shards) for k in range(shards)]
                parts = [f.result() for f in futures]
            res = SuiteResult(name, s.claim)
            for checked, failed, first in parts:
                res.checked += checked
                res.failed += failed
                if res.counterexample is None:
                    res.counterexample = first
            res.seconds = time.perf_counter() - t0
            report.suites.append(res)
    finally:
        if pool is not None:
            pool.shutdown()
    report.seconds = time.perf_counter() - start
    return report


def report_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json(), indent=2)
