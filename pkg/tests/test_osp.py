import random
from fractions import Fraction

import pytest

from rankone import osp, sl2, weyl
from rankone.errors import NonScalarAction
from rankone.exactfield import GR, FactoredRF, PartialFraction, expand_partial_fractions, RatFun, Polynomial
from rankone.sampling import random_factored, random_gaussian, random_partial_fraction
from rankone.skewlaurent import SIGMA_OSP

ZERO = PartialFraction.zero()
ONE = PartialFraction.one()


def params(u, lam=0):
    return osp.OspParams(u, GR(lam))


def random_params(seed):
    rng = random.Random(seed)
    return params(random_factored(rng), random_gaussian(rng)), rng


class TestActions:
    def test_p(self):
        u = FactoredRF.linear(GR("1/3"))
        P = params(u)
        U = PartialFraction.from_factored(u)
        assert osp.act_p(P, osp.GradedElement(ONE, ZERO)) == osp.GradedElement(ZERO, U)
        assert osp.act_p(P, osp.GradedElement(ZERO, ONE)) == osp.GradedElement(U, ZERO)

    def test_q_on_basis(self):
        t, lam = GR("1/3"), GR(2)
        P = params(FactoredRF.linear(t), lam)
        got = osp.act_q(P, osp.GradedElement(ONE, ZERO))
        want = expand_partial_fractions(RatFun(Polynomial((lam + 1, 1)), Polynomial.linear(t - 1) * 2))
        assert got == osp.GradedElement(ZERO, want)

    @pytest.mark.parametrize("seed", range(5))
    def test_anticommutator_is_h(self, seed):
        P, rng = random_params(seed)
        b = random_partial_fraction(rng, list(P.u.support()) + [GR(0)])
        v = osp.GradedElement(b, ZERO)
        assert osp.act_p(P, osp.act_q(P, v)) + osp.act_q(P, osp.act_p(P, v)) == osp.act_h(v)

    @pytest.mark.parametrize("seed", range(6))
    def test_scasimir_anticommutes_with_odd_and_commutes_with_even(self, seed):
        P, rng = random_params(seed)
        roots = list(P.u.support()) + [GR(0)]
        v = osp.random_graded_element(rng, roots)
        S = lambda w: osp.act_scasimir(P, w)
        for odd in (lambda w: osp.act_p(P, w), lambda w: osp.act_q(P, w)):
            assert (S(odd(v)) + odd(S(v))).is_zero()
        for even in (lambda w: osp.act_e(P, w), lambda w: osp.act_f(P, w), osp.act_h):
            assert (S(even(v)) - even(S(v))).is_zero()


class TestRelations:
    def test_linear_u(self):
        assert osp.verify_superrelations(params(FactoredRF.linear(GR("2/3")), 0), 5)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_with_complex_lambda(self, seed):
        rng = random.Random(seed)
        assert osp.verify_superrelations(params(random_factored(rng), GR("i")), 3, seed=seed)

    def test_sign_flipped_q_fails(self):
        P = params(FactoredRF.linear(3), 0)
        flipped = lambda Q, v: osp.act_q(Q, v).scale(-1)
        assert not osp.verify_superrelations(P, 2, q=flipped)

    def test_samples_must_be_positive(self):
        with pytest.raises(ValueError):
            osp.verify_superrelations(params(FactoredRF(1), 0), 0)


class TestScalars:
    @pytest.mark.parametrize("lam", [0, Fraction(-1, 2), 1, GR("1/3+i"), -3])
    def test_scasimir(self, lam):
        s = osp.scasimir_action(params(FactoredRF(1), lam))
        lam = GR(lam)
        assert s == (lam + Fraction(1, 2), -(lam + Fraction(1, 2)))
        assert s[0] ** 2 == s[1] ** 2 == (lam + Fraction(1, 2)) ** 2

    def test_scasimir_fixed_values(self):
        assert osp.scasimir_action(params(FactoredRF(1), 0)) == (GR("1/2"), GR("-1/2"))
        assert osp.scasimir_action(params(FactoredRF(1), Fraction(-1, 2))) == (0, 0)

    @pytest.mark.parametrize("lam, expected", [(0, (1, 0)), (1, (4, 1)), (GR("i"), (GR("2*i"), -1))])
    def test_casimir(self, lam, expected):
        assert osp.casimir_scalars(params(FactoredRF(1), lam)) == tuple(GR(e) for e in expected)

    def test_q2p2_on_even(self):
        lam = GR(3)
        P = params(FactoredRF(1, {GR("1/4"): 2}), lam)
        b = PartialFraction.pole(GR(5), 2) + PartialFraction.monomial(2)
        v = osp.GradedElement(b, ZERO)
        got = osp.act_q(P, osp.act_q(P, osp.act_p(P, osp.act_p(P, v))))
        want = b.mul_linear(lam).mul_linear(-lam - 2).scale(Fraction(1, 4))
        assert got == osp.GradedElement(want, ZERO)

    def test_non_scalar_detected(self):
        m = osp.matrix_model(0)
        with pytest.raises(NonScalarAction):
            osp._diagonal_scalars(m["p"])
        with pytest.raises(NonScalarAction):
            osp._diagonal_scalars(m["h"])


class TestRestriction:
    def test_u2(self):
        t = GR("1/5")
        R = osp.restrict_to_sl2(params(FactoredRF.linear(t), 0))
        assert R[0].u2 == FactoredRF(1, {t: 1, t + 1: 1})
        assert (R[0].theta, R[1].theta) == (1, 0)
        assert osp.restrict_to_sl2(params(FactoredRF(GR(3)), 0))[0].u2 == FactoredRF(9)

    def test_characters_for_lambda_minus_one(self):
        even, odd = osp.restrict_to_sl2(params(FactoredRF.linear(3), -1))
        assert (even.theta, odd.theta) == (0, 1)

    @pytest.mark.parametrize("seed", range(6))
    def test_even_and_odd_match_sl2(self, seed):
        P, rng = random_params(seed)
        roots = list(P.u.support()) + [GR(0)]
        for _ in range(5):
            b = random_partial_fraction(rng, roots)
            assert osp.even_e_matches_sl2(P, b)
            # f = -q^2 on each component against the sl2 formula for (u^(2), r1)
            for part, slot in zip(osp.restrict_to_sl2(P), ("even", "odd")):
                want = sl2.f_action(sl2.make_params(part.r1), P.u2, b)
                v = osp.GradedElement(b, ZERO) if slot == "even" else osp.GradedElement(ZERO, b)
                assert getattr(osp.act_f(P, v), slot) == want

    def test_graded_descriptors(self):
        even, odd = osp.graded_socle_descriptor(params(FactoredRF.linear(3), -1))
        assert even.meta["theta"] == "0" and odd.meta["theta"] == "1"
        assert even.patterns(2) == {(GR(0), 1), (GR(-2), 1), (GR(1), 1)}
        assert odd.patterns(2) == {(GR(1), 1), (GR(-1), 1), (GR(2), 1)}

    def test_graded_descriptors_match_oracle(self):
        P = params(FactoredRF.linear(3), -1)
        for part, D in zip(osp.restrict_to_sl2(P), osp.graded_socle_descriptor(P)):
            M = part.module()
            res = sl2.oracle_closure(M, 6, 4)
            assert set(res.patterns) == sl2.descriptor_window_patterns(D, 6)

    def test_corrupted_u2_fails_oracle(self):
        P = params(FactoredRF.linear(3), -1)
        D = osp.graded_socle_descriptor(P)[0]
        bad = sl2.ModuleParamSl2.make(-1, FactoredRF(1, {3: 1}), canonicalize=True)
        res = sl2.oracle_closure(bad, 6, 4)
        assert set(res.patterns) != sl2.descriptor_window_patterns(D, 6)

    def test_trivial_u(self):
        even, odd = osp.graded_socle_descriptor(params(FactoredRF(1), 0))
        assert even.nonempty_rays() == () and odd.nonempty_rays() == ()


class TestIsoAndParity:
    def test_sign(self):
        P = params(FactoredRF(2, {GR("1/2"): 1}), 0)
        assert osp.graded_iso(P, params(-P.u, 0))

    def test_witness_orbit(self):
        u = FactoredRF(3, {GR("1/2"): 2})
        r = FactoredRF(1, {GR("7/3"): 1, GR(-2): -2})
        assert osp.graded_iso(params(u, 1), params(u * r / SIGMA_OSP(r), 1))

    def test_lambda_must_agree(self):
        u = FactoredRF.linear(GR("1/2"))
        assert not osp.graded_iso(params(u, 0), params(u, 1))

    def test_parity(self):
        P = params(FactoredRF.linear(GR("1/2")), 0)
        assert osp.parity_change(P).lam == -1
        assert osp.graded_iso(osp.parity_change(osp.parity_change(P)), P)
        assert osp.casimir_scalars(osp.parity_change(P)) == tuple(reversed(osp.casimir_scalars(P)))

    @pytest.mark.parametrize("seed", range(4))
    def test_parity_swaps_components(self, seed):
        P, rng = random_params(seed)
        v = osp.random_graded_element(rng, list(P.u.support()) + [GR(0)])
        Q = osp.parity_change(P)
        assert osp.act_q(P, v.swap()).swap() == osp.act_q(Q, v)
        assert osp.act_p(P, v.swap()).swap() == osp.act_p(Q, v)

    def test_iso_is_equivalence_and_parity_compatible(self):
        rng = random.Random(5)
        base = FactoredRF(1, {GR("1/2"): 1})
        pool = []
        for _ in range(6):
            r = FactoredRF(1, {GR(rng.randint(-3, 3)) + GR("1/2"): rng.choice([-1, 1])})
            pool.append(params(base * r / SIGMA_OSP(r) * rng.choice([1, -1]), rng.choice([0, 1])))
        for P in pool:
            assert osp.graded_iso(P, P)
            for Q in pool:
                assert osp.graded_iso(P, Q) == osp.graded_iso(Q, P)
                assert osp.graded_iso(P, Q) == osp.graded_iso(osp.parity_change(P), osp.parity_change(Q))
                for R in pool:
                    if osp.graded_iso(P, Q) and osp.graded_iso(Q, R):
                        assert osp.graded_iso(P, R)

    def test_canonical(self):
        P = params(FactoredRF(-2, {GR("5/2"): 1, GR("1/3"): -1}), 0)
        C = P.canonical()
        assert C.u == FactoredRF(2, {GR("1/2"): 1, GR("1/3"): -1})
        assert osp.graded_iso(P, C)
        assert params(FactoredRF(GR("-i")), 0).canonical().u.c == GR("i")


class TestQuotient:
    def test_theta_check(self):
        assert osp.theta_quotient_check()

    def test_theta_h(self):
        T = osp.theta_images()
        # 2 Theta(Sigma) = p'q' - q'p' + 1 = 0
        assert (T["p'"] * T["q'"] - T["q'"] * T["p'"] + 1).is_zero()
        assert T["p'"] * T["p'"] == T["e"] * 2

    def test_ungraded_handle(self):
        P = weyl.ModuleParamWeyl(GR(1), FactoredRF(1, {0: 2, GR("1/2"): -1}).factors)
        M = osp.ungraded_to_weyl(P)
        assert M.scasimir_scalar() == 0
        v = PartialFraction.pole(GR("1/2"), 2) + PartialFraction.monomial(2)
        assert M.act_h(v) == v.mul_linear(GR(1)).scale(Fraction(1, 2))
        assert M.act_e(M.act_f(v)) - M.act_f(M.act_e(v)) == M.act_h(v)

    def test_ungraded_classification(self):
        A = osp.ungraded_to_weyl(weyl.ModuleParamWeyl.from_u(FactoredRF.linear(2), canonicalize=True))
        B = osp.ungraded_to_weyl(weyl.ModuleParamWeyl.from_u(FactoredRF.linear(0)))
        C = osp.ungraded_to_weyl(weyl.ModuleParamWeyl.from_u(FactoredRF(2, {0: 1})))
        assert A.isomorphic(B) and not A.isomorphic(C)
