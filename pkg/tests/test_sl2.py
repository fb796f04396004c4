import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankone import sl2
from rankone.descriptor import SocleDescriptor, enumerate_window, membership, pole_patterns_of
from rankone.errors import StripViolation, WindowTooSmall
from rankone.exactfield import GR, H, GaussianRational, FactoredRF, PartialFraction, Polynomial, RatFun, expand_partial_fractions
from rankone.sampling import random_factored
from rankone.skewlaurent import RankOneModule, module_x_act

from conftest import partial_fraction


def module(r1, u, canonicalize=False):
    return sl2.ModuleParamSl2.make(r1, u, canonicalize)


LINEAR_AT_2 = lambda: module(-1, FactoredRF.linear(2))
LINEAR_AT_3 = lambda: module(-1, FactoredRF.linear(3))
CUBE_AT_3 = lambda: module(-1, FactoredRF(1, {3: 3}))


def pf(num, den) -> PartialFraction:
    return expand_partial_fractions(RatFun(num, den))


def pats(*items):
    return {(GR(t), k) for t, k in items}


class TestParams:
    def test_theta_zero(self):
        P = sl2.make_params(-1)
        assert (P.theta, P.r2, P.omega, P.t1, P.t2, P.n1, P.n2) == (0, -1, 2, 3, 3, 2, 2)
        assert (P.m1, P.m2) == (2, 2)

    def test_theta_four(self):
        P = sl2.make_params(1)
        assert (P.theta, P.r2, P.omega) == (4, -3, 4)
        assert (P.t1, P.n1, P.t2, P.n2) == (5, 2, 5, 4)

    def test_theta_complex(self):
        P = sl2.make_params(GR("i"))
        assert (P.theta, P.r2, P.omega) == (GR("2*i"), GR("-2-i"), 3)
        assert (P.t1, P.n1, P.t2, P.n2) == (GR("4+i"), 2, GR("4-i"), 3)

    def test_strip_enforced(self):
        with pytest.raises(StripViolation):
            module(-1, FactoredRF.linear(1))
        assert module(-1, FactoredRF.linear(1), canonicalize=True).u == FactoredRF.linear(3)


class TestActions:
    def test_e(self):
        assert sl2.act_e(LINEAR_AT_2(), PartialFraction.one()) == PartialFraction.from_polynomial(H - 2)
        assert sl2.act_e(LINEAR_AT_2(), PartialFraction.pole(0)) == PartialFraction.one()
        # e acts as x, so a non-canonical u is checked through the bare rank-one module
        u = FactoredRF(1, {3: 3, 1: -1})
        M = RankOneModule(u, sl2.SIGMA)
        assert module_x_act(M, PartialFraction.one(), 1) == PartialFraction.from_factored(u)

    def test_f(self):
        assert sl2.act_f(LINEAR_AT_2(), PartialFraction.one()) == pf(-((H + 1) ** 2), 4 * H)
        assert sl2.act_f(LINEAR_AT_3(), PartialFraction.one()) == pf(-((H + 1) ** 2), 4 * (H - 1))
        got = sl2.act_f(CUBE_AT_3(), PartialFraction.pole(1, 3))
        assert got == pf(Polynomial.constant(-1), 4 * (H + 1) * (H - 1) ** 3)

    def test_h(self):
        assert sl2.act_h(PartialFraction.one()) == PartialFraction.monomial(1)
        assert sl2.act_h(PartialFraction.pole(0)) == PartialFraction.one()
        assert sl2.act_h(PartialFraction.pole(0, 2)) == PartialFraction.pole(0)

    @pytest.mark.parametrize("r1", [-1, 1, GR("i"), Fraction(1, 2), GR("-1/3+2*i")])
    def test_ring_identities(self, r1):
        assert sl2.casimir_identity_check(sl2.make_params(r1))

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_operator_identities(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        r1 = GaussianRational(Fraction(rng.randint(-6, 6), 2), rng.choice([0, 1]))
        P = sl2.ModuleParamSl2.make(r1, random_factored(rng), canonicalize=True)
        b = data.draw(partial_fraction(roots=list(P.u.support()) + [GR(0), r1]))
        e, f, h = (lambda v: sl2.act_e(P, v)), (lambda v: sl2.act_f(P, v)), sl2.act_h
        assert h(e(b)) - e(h(b)) == e(b).scale(2)
        assert h(f(b)) - f(h(b)) == f(b).scale(-2)
        assert e(f(b)) - f(e(b)) == h(b)
        assert sl2.casimir_operator(P, b) == b.scale(P.base.theta)


class TestDescriptor:
    def test_linear_at_2(self):
        D = sl2.socle_descriptor(LINEAR_AT_2())
        assert D.patterns(3) == pats((0, 1), (-2, 1), (-4, 1))
        assert not D.all_rays_finite()
        assert membership(D, PartialFraction.pole(-4))
        assert not membership(D, PartialFraction.pole(1))

    def test_linear_at_3(self):
        D = sl2.socle_descriptor(LINEAR_AT_3())
        assert D.patterns(10) == pats((1, 1))
        window = enumerate_window(D, 10, 2)
        assert window == [PartialFraction.monomial(d) for d in range(3)] + [PartialFraction.pole(1)]

    def test_cube_at_3(self):
        D = sl2.socle_descriptor(CUBE_AT_3())
        fracs = pole_patterns_of(enumerate_window(D, 3, 0))
        assert fracs == pats((1, 1), (1, 2), (1, 3), (-1, 1), (-3, 1))

    def test_empty_descriptor(self):
        D = sl2.socle_descriptor(module(-1, FactoredRF(7)))
        assert enumerate_window(D, 5, 1) == [PartialFraction.monomial(0), PartialFraction.monomial(1)]

    def test_polynomials_always_members(self):
        D = sl2.socle_descriptor(CUBE_AT_3())
        assert membership(D, PartialFraction.from_polynomial(H**5 - 3))

    def test_json_round_trip(self):
        D = sl2.socle_descriptor(CUBE_AT_3())
        assert SocleDescriptor.from_json(D.to_json()) == D

    @pytest.mark.parametrize("make, expected", [(LINEAR_AT_2, False), (LINEAR_AT_3, True), (CUBE_AT_3, False)])
    def test_finite_generation_known_cases(self, make, expected):
        P = make()
        assert sl2.is_finitely_generated(P) is expected
        assert sl2.socle_descriptor(P).all_rays_finite() is expected

    def test_closure_under_operators(self):
        P = CUBE_AT_3()
        D = sl2.socle_descriptor(P)
        window = {t for t, _ in D.patterns(6)}
        for b in enumerate_window(D, 4, 3):
            for img in (sl2.act_e(P, b), sl2.act_f(P, b)):
                if all(t in window for t in img.pole_orders()):
                    assert membership(D, img)


class TestOracle:
    def test_linear_at_2(self):
        # window offsets are counted from the strip base 2, so maxShift=8 ends at pole -14
        res = sl2.oracle_closure(LINEAR_AT_2(), 8, 6)
        assert res.patterns == frozenset(pats(*[(-2 * i, 1) for i in range(8)]))

    def test_linear_at_3(self):
        assert sl2.oracle_closure(LINEAR_AT_3(), 8, 6).patterns == frozenset(pats((1, 1)))

    def test_cube_at_3(self):
        res = sl2.oracle_closure(CUBE_AT_3(), 6, 6)
        expected = pats((1, 1), (1, 2), (1, 3), *[(1 - 2 * i, 1) for i in range(1, 6)])
        assert res.patterns == frozenset(expected)

    def test_brute_force_list_matches_enumeration(self):
        P = CUBE_AT_3()
        assert sl2.brute_force_socle(P, 6, 2) == enumerate_window(sl2.socle_descriptor(P), 6, 2)

    def test_window_too_small(self):
        with pytest.raises(WindowTooSmall):
            sl2.oracle_closure(LINEAR_AT_2(), 8, 2, rounds=1)

    def test_corrupted_parameter_mismatch(self):
        # the descriptor of u = (h-3)^3 against the closure for u = (h-3)^2
        D = sl2.socle_descriptor(CUBE_AT_3())
        res = sl2.oracle_closure(module(-1, FactoredRF(1, {3: 2})), 6, 4)
        assert set(res.patterns) != sl2.descriptor_window_patterns(D, 6)

    @pytest.mark.parametrize("seed", range(12))
    def test_random_parameters(self, seed):
        rng = random.Random(seed)
        r1 = GaussianRational(Fraction(rng.randint(-6, 6), 2), rng.choice([0, 0, 1]))
        base = sl2.make_params(r1)
        factors = {}
        for _ in range(rng.randint(1, 2)):
            t = GaussianRational(base.omega + Fraction(rng.randint(0, 3), 2), rng.choice([0, 0, r1.im]))
            factors[t] = rng.choice([-3, -2, -1, 1, 2, 3])
        P = sl2.ModuleParamSl2.from_u(base, FactoredRF(1, factors))
        D = sl2.socle_descriptor(P)
        res = sl2.oracle_closure(P, 6, 5)
        bases = [t for t, _ in P.m]
        expected = sl2.descriptor_window_patterns(D, 6)
        assert sl2.interior(res.patterns, bases, 6) == sl2.interior(expected, bases, 6)
        stabilizes = all(abs(sl2.orbit_offset(t, bases)) < 6 for t, _ in res.patterns)
        assert sl2.is_finitely_generated(P) == D.all_rays_finite() == stabilizes
