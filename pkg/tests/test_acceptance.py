"""Acceptance gate: one test per criterion, each at its stated tolerance.

Run alone with ``pytest tests/test_acceptance.py``; the terminal summary lists
one PASS/FAIL line per criterion.  The default-bounds verify run is shared by
criteria 6 to 12 through a module-scoped fixture.
"""

import io
import itertools
import json
import time
from collections import Counter
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from fincond import band, cli, cnf
from fincond.band import ELEMENTS, One, W, WStar, Zeta
from fincond.cnf import OMEGA, ONE, degree, is_limit, monomial
from fincond.derivative import d, d_iter, defect_case, homomorphism_witness, phi_l_omega
from fincond.enumeration import ordinals
from fincond.oracle import condense_band_product, condense_cnf_oracle
from fincond.verify import REGISTRY

GOLDEN = Path(__file__).parent / "golden"

# the table exactly as stated, row by row over (1, w, w*, zeta)
STATED_TABLE = {
    One: (One, One, One, One),
    W: (One, W, W, W),
    WStar: (One, WStar, WStar, WStar),
    Zeta: (One, Zeta, Zeta, Zeta),
}


def best_time(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@pytest.fixture(scope="module")
def verify_default():
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.main(["verify", "--json"])
    doc = json.loads(buf.getvalue())
    return code, doc, {s["name"]: s for s in doc["suites"]}


def assert_suites(by_name, names):
    for name in names:
        s = by_name[name]
        assert s["checked"] > 0, name
        assert s["failed"] == 0, (name, s["counterexample"])


def test_c01_band_table(record_property):
    record_property("criterion", "1: band table reproduced and re-derived by condensation, < 1 ms")
    mismatches = []

    def check():
        mismatches.clear()
        for x in ELEMENTS:
            for y, want in zip(ELEMENTS, STATED_TABLE[x]):
                if band.times_f(x, y) is not want or condense_band_product(x, y) is not want:
                    mismatches.append((x, y))

    elapsed = best_time(check)
    assert mismatches == []
    assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


def test_c02_band_laws(record_property):
    record_property("criterion", "2: 4 idempotency + 64 associativity + 16 left-regularity checks, < 1 ms")
    report = band.verify_left_regular_band()
    assert (report.idempotency_checked, report.associativity_checked, report.left_regularity_checked) == (4, 64, 16)
    assert report.failures == []
    elapsed = best_time(band.verify_left_regular_band)
    assert elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms"


def test_c03_hasse(record_property):
    record_property("criterion", "3: Hasse edges are exactly (w,1), (w*,1), (zeta,1)")
    edges = band.hasse_edges()
    assert len(edges) == 3 and set(edges) == {(W, One), (WStar, One), (Zeta, One)}
    for x, y in itertools.permutations([W, WStar, Zeta], 2):
        assert not band.band_leq(x, y)


def test_c04_closed_form_vs_oracle(record_property):
    record_property("criterion", "4: d = oracle on all 7775 nonzero ordinals (deg <= 4, coeff <= 5), < 10 s")
    domain = ordinals(4, 5)
    assert len(domain) == 7775
    t0 = time.perf_counter()
    bad = [a for a in domain if d(a) != condense_cnf_oracle(a)]
    elapsed = time.perf_counter() - t0
    assert bad == []
    assert elapsed < 10, f"{elapsed:.2f} s"


def test_c05_phi_l_omega(record_property):
    record_property("criterion", "5: phi_l_omega(a) = w^deg a = oracle(prod(w, a)) on the enumeration")
    for a in ordinals(4, 5):
        assert phi_l_omega(a) == monomial(degree(a)) == condense_cnf_oracle(cnf.prod(OMEGA, a))


def test_c06_monotonicity(record_property, verify_default):
    record_property("criterion", "6: monotonicity and weak order preservation at deg <= 3, coeff <= 3, < 30 s")
    _, _, by_name = verify_default
    names = ["cnf.add_right_strict", "cnf.add_left_weak", "cnf.prod_left_strict", "cnf.prod_right_weak",
             "d.weak_order", "phi_l_omega.weak_order"]
    assert_suites(by_name, names)
    domain = ordinals(3, 3)
    # every pair with x < y; the remaining ordered pairs make each law vacuous
    assert by_name["d.weak_order"]["checked"] == len(domain) * (len(domain) - 1) // 2
    assert len(domain) ** 2 == 65025
    elapsed = sum(by_name[n]["seconds"] for n in names)
    assert elapsed < 30, f"{elapsed:.2f} s"


def test_c07_preimages(record_property, verify_default):
    record_property("criterion", "7: preimage sets complete and sound at deg <= 3; d(i_limit(a)) = a")
    _, _, by_name = verify_default
    assert_suites(by_name, ["i.preimage", "i.inverse"])


def test_c08_defect(record_property, verify_default):
    record_property("criterion", "8: defect dichotomy on nonzero pairs at deg <= 3, all 9 proof cases hit")
    _, _, by_name = verify_default
    assert_suites(by_name, ["defect.dichotomy", "defect.case_coverage"])
    domain = ordinals(3, 3)
    hits = Counter(defect_case(a, b) for a in domain for b in domain)
    for case in range(1, 10):
        assert hits[case] > 0, case


def test_c09_linearity(record_property, verify_default):
    record_property("criterion", "9: linearity on limits, finite sums of limits, scaled sums, right scalars")
    _, _, by_name = verify_default
    assert_suites(by_name, ["linear.two_term", "linear.sum_of_limits", "linear.scaled_sums",
                            "linear.right_scalar", "linear.left_scalar"])


def test_c10_witness(record_property, verify_default):
    record_property("criterion", "10: homomorphism_witness() = (w^2, w, 1); remaining products preserved")
    _, _, by_name = verify_default
    assert homomorphism_witness() == (monomial(2), OMEGA, ONE)
    assert_suites(by_name, ["rep.preserved_products", "rep.witness"])


def test_c11_iteration(record_property, verify_default):
    record_property("criterion", "11: d_iter = iterated oracle for n <= 5; degree exhausted after deg a steps")
    _, _, by_name = verify_default
    assert_suites(by_name, ["iterate.agreement", "iterate.exhaustion"])
    for a in ordinals(4, 5):
        k = degree(a)
        assert degree(d_iter(a, k)) == 0 and d_iter(a, k + 1) == ONE


def test_c12_cli(record_property, verify_default, capsys):
    record_property("criterion", "12: round trip, verify exits 0 with every suite clean, golden batch")
    code, doc, by_name = verify_default
    assert code == 0 and doc["ok"] and doc["failures"] == 0
    assert list(by_name) == list(REGISTRY)
    assert all(s["failed"] == 0 for s in doc["suites"])
    assert by_name["cli.round_trip"]["checked"] == 7775
    assert cli.main(["batch", str(GOLDEN / "worked.txt")]) == 0
    lines = capsys.readouterr().out.splitlines()
    for expected in ("w*(3*w^2+2*w+5) = w^3", "d(w^2) = w", "condF(w*+w) = 1"):
        assert expected in lines
