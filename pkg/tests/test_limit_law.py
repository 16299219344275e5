import mpmath
import pytest

from godel_chain.analytic import Precision, p_bottom_closed, p_top
from godel_chain.limit_law import (
    LimitMeasure,
    ScaledLevelDistribution,
    atom_mass,
    cut_index,
    density,
    density_integral,
    fixed_level_vanishing,
    macroscopic_cut,
    mean,
    mean_by_quadrature,
    survival,
    weak_convergence_check,
)

ctx = Precision(40).ctx
EPS12 = ctx.mpf(10) ** -12
LADDER = (100, 400, 1600)


def test_survival_examples():
    assert survival(0) == 1
    assert abs(survival(0.5) - 1 / ctx.sqrt(2)) < EPS12
    near_one = survival(1 - 1e-15)
    assert abs(near_one - 1 / ctx.sqrt(3)) < 1e-14
    assert mpmath.nstr(atom_mass(), 10) == "0.5773502692"


@pytest.mark.parametrize("t", [-0.1, 1, 1.5])
def test_survival_domain(t):
    with pytest.raises(ValueError):
        survival(t)


def test_survival_derivative_is_density():
    h = ctx.mpf(10) ** -8
    for i in range(1, 20):
        t = ctx.mpf(i) / 20
        fd = -(survival(t + h) - survival(t - h)) / (2 * h)
        assert abs(fd / density(t) - 1) < 1e-6


def test_mean_and_normalization():
    assert mpmath.nstr(mean(), 10) == "0.7320508076"
    assert abs(mean_by_quadrature() - mean()) < EPS12
    assert abs(density_integral() + atom_mass() - 1) < EPS12
    body = ctx.quad(lambda t: t * density(t), [0, 1])
    assert abs(body - (2 / ctx.sqrt(3) - 1)) < EPS12


def test_measure_integrates_constant_to_one():
    assert abs(LimitMeasure().integrate(lambda t: 1) - 1) < EPS12


def test_scaled_distribution():
    d = ScaledLevelDistribution.from_limits(7)
    assert d.support[0] == 0 and d.support[-1] == 1
    assert abs(sum(d.weights) - 1) < EPS12


def test_cut_index_exact():
    # float 0.3 * 10 rounds up to 3.0000000000000004; the exact binary value of 0.3 is below 3/10
    assert cut_index(101, 0.5) == 50
    assert cut_index(11, 0.3) == 2
    assert cut_index(5, 1) == 4


def test_macroscopic_cut_endpoints():
    assert macroscopic_cut(50, 0) == 1
    assert macroscopic_cut(50, 1) == p_top(50)
    with pytest.raises(ValueError):
        macroscopic_cut(50, 1.2)


@pytest.mark.parametrize("t", [0.25, 0.5, 0.75])
def test_macroscopic_cut_gap_shrinks(t):
    target = 1 / ctx.sqrt(1 + 2 * ctx.mpf(t))
    gaps = [abs(macroscopic_cut(m, t) - target) for m in LADDER]
    assert gaps[0] > gaps[1] > gaps[2]


def test_macroscopic_cut_m1000():
    assert abs(macroscopic_cut(1000, 0.5) - 1 / ctx.sqrt(2)) < 5e-3


def test_atom_gap_shrinks():
    gaps = [abs(p_top(m) - atom_mass()) for m in LADDER]
    assert gaps[0] > gaps[1] > gaps[2]


def test_weak_convergence_constant():
    disc, cont = weak_convergence_check(20, lambda t: 1)
    assert abs(disc - 1) < EPS12 and abs(cont - 1) < EPS12


def test_weak_convergence_mean():
    disc, cont = weak_convergence_check(1000, lambda t: t)
    assert abs(disc - mean()) < 1e-2
    assert abs(cont - mean()) < EPS12


def test_weak_convergence_square_gap_shrinks():
    gaps = []
    for m in (10, 100, 1000):
        disc, cont = weak_convergence_check(m, lambda t: t * t)
        gaps.append(abs(disc - cont))
    assert gaps[0] > gaps[1] > gaps[2]


def test_fixed_level_vanishing_tables():
    one = fixed_level_vanishing(1, [5, 10])
    two = fixed_level_vanishing(2, [5, 10])
    assert [f"{float(x):.6f}" for x in one] == ["0.089600", "0.062152"]
    assert [f"{float(x):.6f}" for x in two] == ["0.067242", "0.051275"]


def test_fixed_level_bottom_decays_like_one_over_m():
    ms = [10, 100, 1000]
    vals = fixed_level_vanishing(0, ms)
    assert vals[0] > vals[1] > vals[2]
    for m, v in zip(ms, vals):
        assert abs(v - p_bottom_closed(m)) < EPS12
    assert abs(1000 * vals[2] - 1) < 3e-3


def test_fixed_level_vanishing_bad_level():
    with pytest.raises(ValueError):
        fixed_level_vanishing(5, [5, 10])
    with pytest.raises(ValueError):
        fixed_level_vanishing(0, [])
