import sys
from fractions import Fraction

from hypothesis import strategies as st

from rankone.exactfield import FactoredRF, GaussianRational, PartialFraction, Polynomial, RatFun

small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussian = st.builds(GaussianRational, small_fraction, small_fraction)
nonzero_gaussian = gaussian.filter(lambda z: not z.is_zero())
# roots on a half-integer lattice with small imaginary parts
root = st.builds(
    GaussianRational,
    st.integers(-8, 8).map(lambda n: Fraction(n, 2)),
    st.sampled_from([0, 0, 1, -1]),
)
polynomial = st.lists(gaussian, max_size=4).map(Polynomial)


@st.composite
def factored(draw, max_roots=3, max_exp=3):
    roots = draw(st.lists(root, max_size=max_roots, unique=True))
    exps = [draw(st.integers(-max_exp, max_exp).filter(bool)) for _ in roots]
    return FactoredRF(draw(nonzero_gaussian), dict(zip(roots, exps)))


@st.composite
def partial_fraction(draw, roots=None, max_order=3):
    out = PartialFraction.from_polynomial(draw(polynomial))
    pool = roots if roots is not None else draw(st.lists(root, max_size=3, unique=True))
    for t in pool:
        for k in range(1, draw(st.integers(0, max_order)) + 1):
            out = out + PartialFraction.pole(t, k, draw(gaussian))
    return out


@st.composite
def ratfun_splitting(draw):
    num = draw(polynomial.filter(lambda p: not p.is_zero()))
    roots = draw(st.lists(root, max_size=4))
    return RatFun(num, Polynomial.from_roots(roots))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
