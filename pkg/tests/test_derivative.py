import pytest
from hypothesis import assume, given, strategies as st

from fincond import cnf
from fincond.band import One, W, times_f
from fincond.cnf import OMEGA, ONE, ZERO, make_cnf, nat
from fincond.derivative import (DefectClass, PreimageSet, d, d_iter, d_linear_combo,
                                d_right_scale_invariance, d_sum_scaled, defect_case, defect_holds,
                                distribute_defect, homomorphism_witness, i_limit, i_preimage,
                                linear_combo_case_formula, phi_l, phi_l_omega, phi_r, phi_r_omega)
from fincond.enumeration import limits, ordinals as enum_ordinals
from fincond.errors import NotALimit, PreconditionViolated, ZeroArgument
from fincond.oracle import condense_cnf_oracle, iterate_condense

from strategies import limit_ordinals, ordinals, w


class TestD:
    @pytest.mark.parametrize("alpha,expected", [
        (w(2), OMEGA),
        (make_cnf([(2, 3), (1, 2), (0, 5)]), make_cnf([(1, 3), (0, 3)])),
        (nat(7), ONE),
        (ZERO, ZERO),
    ])
    def test_examples(self, alpha, expected):
        assert d(alpha) == expected == condense_cnf_oracle(alpha)

    def test_iter_examples(self):
        alpha = w(3) + w(1, 2)
        assert d_iter(alpha, 2) == OMEGA + ONE == iterate_condense(alpha, 2)
        assert d_iter(alpha, 0) == alpha
        assert d_iter(nat(4), 1) == ONE

    @given(ordinals(4, 4, nonzero=True))
    def test_iteration_exhausts(self, alpha):
        k = cnf.degree(alpha)
        assert cnf.degree(d_iter(alpha, k)) == 0
        assert d_iter(alpha, k + 1) == ONE

    def test_phi_generators(self):
        alpha = make_cnf([(2, 1), (0, 3)])
        assert phi_l(One)(alpha) == phi_r(One)(alpha) == d(alpha)
        assert phi_l(W)(alpha) == phi_l_omega(alpha)
        assert phi_r(W)(alpha) == phi_r_omega(alpha) == alpha


class TestPhiLOmega:
    @pytest.mark.parametrize("alpha,expected", [(make_cnf([(2, 5), (0, 3)]), w(2)), (nat(7), ONE), (OMEGA, OMEGA)])
    def test_examples(self, alpha, expected):
        assert phi_l_omega(alpha) == expected == condense_cnf_oracle(cnf.prod(OMEGA, alpha))

    def test_right_omega_is_identity(self):
        for alpha in (w(2) + ONE, ZERO, w(1, 3)):
            assert phi_r_omega(alpha) == alpha

    @given(ordinals(3, 3), ordinals(3, 3))
    def test_weak_order(self, a, b):
        assume(not a.is_zero and not b.is_zero)
        if a < b:
            assert phi_l_omega(a) <= phi_l_omega(b)


class TestPreimage:
    def test_examples(self):
        assert i_preimage(w(1, 2)) == PreimageSet((w(2, 2),))
        three = i_preimage(nat(3))
        assert three.fixed == (w(1, 3),) and three.family_base == w(1, 2)
        assert w(1, 2) + nat(5) in three
        succ = i_preimage(OMEGA + ONE)
        assert succ.fixed == (w(2) + OMEGA,) and succ.family_base == w(2)

    def test_str_and_json(self):
        p = i_preimage(nat(3))
        assert str(p) == "{3*w} | {2*w + j : j >= 1}"
        assert p.to_json() == {"fixed": ["3*w"], "family_base": "2*w"}

    def test_zero(self):
        with pytest.raises(ZeroArgument):
            i_preimage(ZERO)

    @pytest.mark.parametrize("alpha", list(enum_ordinals(2, 2)))
    def test_complete_by_enumeration(self, alpha):
        described = i_preimage(alpha)
        for beta in described.members():
            assert d(beta) == alpha
        for beta in enum_ordinals(3, 3):
            if condense_cnf_oracle(beta) == alpha:
                assert beta in described

    def test_limit_inverse(self):
        assert i_limit(make_cnf([(2, 2), (1, 1)])) == make_cnf([(3, 2), (2, 1)])
        assert i_limit(OMEGA) == w(2)
        with pytest.raises(NotALimit):
            i_limit(nat(5))

    @given(limit_ordinals())
    def test_limit_round_trip(self, alpha):
        assert d(i_limit(alpha)) == alpha


class TestDefect:
    @pytest.mark.parametrize("a,b,cls", [
        (OMEGA, nat(5), DefectClass.EQUAL),
        (nat(3), nat(4), DefectClass.PLUS_ONE),
        (OMEGA + ONE, w(2), DefectClass.EQUAL),
        (w(2) + ONE, OMEGA + ONE, DefectClass.PLUS_ONE),
    ])
    def test_examples(self, a, b, cls):
        assert distribute_defect(a, b) is cls
        assert defect_holds(a, b, cls)

    def test_zero_rejected(self):
        with pytest.raises(ZeroArgument):
            distribute_defect(ZERO, OMEGA)

    @given(ordinals(4, 4, nonzero=True), ordinals(4, 4, nonzero=True))
    def test_dichotomy(self, a, b):
        lhs = condense_cnf_oracle(a + b)
        rhs = condense_cnf_oracle(a) + condense_cnf_oracle(b)
        equal, plus_one = lhs == rhs, lhs + ONE == rhs
        assert equal != plus_one
        assert distribute_defect(a, b) is (DefectClass.EQUAL if equal else DefectClass.PLUS_ONE)

    def test_every_case_reached(self):
        seen = {defect_case(a, b) for a in enum_ordinals(3, 2) for b in enum_ordinals(3, 2)}
        assert seen == set(range(10))


class TestLinearity:
    @pytest.mark.parametrize("p,a,q,b,expected", [
        (2, w(2), 3, w(2) + OMEGA, w(1, 5) + ONE),
        (1, w(3), 1, w(2), w(2) + OMEGA),
        (2, w(2), 2, w(3), w(2, 2)),
    ])
    def test_examples(self, p, a, q, b, expected):
        assert d_linear_combo(p, a, q, b) == expected
        assert linear_combo_case_formula(p, a, q, b) == expected
        assert condense_cnf_oracle(cnf.scale_left(p, a) + cnf.scale_left(q, b)) == expected

    def test_degree_one_refused(self):
        with pytest.raises(PreconditionViolated):
            d_linear_combo(1, OMEGA, 1, w(2))
        with pytest.raises(PreconditionViolated):
            d_linear_combo(0, w(2), 1, w(2))

    @given(st.integers(1, 4), limit_ordinals(2, 4, 4), st.integers(1, 4), limit_ordinals(2, 4, 4))
    def test_two_term(self, p, a, q, b):
        value = condense_cnf_oracle(cnf.scale_left(p, a) + cnf.scale_left(q, b))
        assert d_linear_combo(p, a, q, b) == value

    @pytest.mark.parametrize("terms,expected", [
        ([(1, OMEGA), (1, w(2)), (1, OMEGA)], OMEGA + ONE),
        ([(2, w(2))], w(1, 2)),
        ([(3, OMEGA)], nat(3)),
    ])
    def test_sum_examples(self, terms, expected):
        assert d_sum_scaled(terms) == expected

    @given(st.lists(st.tuples(st.integers(1, 3), limit_ordinals(1, 3, 3)), min_size=1, max_size=3))
    def test_scaled_sum_against_oracle(self, terms):
        total = ZERO
        for p, a in terms:
            total = total + cnf.scale_left(p, a)
        assert d_sum_scaled(terms) == condense_cnf_oracle(total)

    @given(limit_ordinals(1, 2, 3), limit_ordinals(1, 2, 3), limit_ordinals(1, 2, 3))
    def test_sum_of_limits(self, a, b, c):
        assert d(a + b + c) == d(a) + d(b) + d(c)

    @pytest.mark.parametrize("a,p", [(make_cnf([(1, 2), (0, 3)]), 5), (w(2), 2), (OMEGA + ONE, 1)])
    def test_right_scalar_examples(self, a, p):
        assert d_right_scale_invariance(a, p)

    @given(ordinals(4, 4), st.integers(1, 6))
    def test_right_scalar(self, a, p):
        assert condense_cnf_oracle(cnf.scale_right(a, p)) == condense_cnf_oracle(a)


class TestWitness:
    def test_witness(self):
        a, b, x = homomorphism_witness()
        assert (a, b, x) == (w(2), OMEGA, ONE)
        assert condense_cnf_oracle(a) == b and condense_cnf_oracle(b) != b

    def test_degree_one_is_not_a_witness(self):
        assert d(OMEGA) == ONE and d(ONE) == ONE

    @pytest.mark.parametrize("x,y", [(W, W), (W, One), (One, W)])
    @given(a=ordinals(3, 3, nonzero=True))
    def test_preserved_products(self, x, y, a):
        assert phi_r(times_f(x, y))(a) == phi_r(x)(phi_r(y)(a))

    def test_one_one_breaks(self):
        a = w(2)
        assert phi_r(times_f(One, One))(a) != phi_r(One)(phi_r(One)(a))

def test_limits_enumeration():
    assert all(cnf.is_limit(a) for a in limits(3, 2))
