"""Saddle geometry: solvers, classification, chains, descent paths."""

from __future__ import annotations

import cmath
import math
import random

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from wrightasym.core import Sign
from wrightasym.saddles import (
    NoRealSaddle,
    OnStokesBoundary,
    PathBranch,
    Phase,
    Regime,
    SaddleKind,
    Terminus,
    classify_minus,
    complex_saddle_chain,
    count_contributory_pairs,
    double_saddle_curve,
    double_saddle_point,
    solve_complex_pair,
    solve_real_saddle,
    stokes_boundary,
    trace_descent_path,
)

CURVE_MAX_LAM = 2.09350
CURVE_MAX_A = 1.19123


def _residual_ok(phase, u):
    return abs(phase.dh(u)) <= 1e-12 * max(1.0, abs(phase.d2h(u)))


# -- phase function -------------------------------------------------------

@given(
    lam=st.floats(-0.9, 6.0),
    a=st.floats(0.05, 3.0),
    re=st.floats(-2.0, 2.0),
    im=st.floats(-3.0, 3.0),
    sign=st.sampled_from([Sign.MINUS, Sign.PLUS]),
)
@settings(max_examples=80, deadline=None)
def test_phase_conjugate_symmetry(lam, a, re, im, sign):
    """h has real coefficients: h(conj u) = conj h(u)."""
    ph = Phase(lam, a, sign)
    u = complex(re, im)
    assert cmath.isclose(ph.h(u.conjugate()), ph.h(u).conjugate(),
                         rel_tol=1e-12, abs_tol=1e-12)
    assert cmath.isclose(ph.dh(u.conjugate()), ph.dh(u).conjugate(),
                         rel_tol=1e-12, abs_tol=1e-12)


def test_phase_derivative_consistency():
    # dnh(2) agrees with a central difference of dh
    ph = Phase(1.3, 0.7, Sign.MINUS)
    u, eps = 0.4, 1e-6
    fd = (ph.dh(u + eps) - ph.dh(u - eps)) / (2 * eps)
    assert abs(ph.dnh(u, 2) - fd) < 1e-8


# -- real saddles ---------------------------------------------------------

def test_minus_lam_zero_closed_form():
    ph = Phase(0.0, 0.7, Sign.MINUS)
    s = solve_real_saddle(ph)
    assert abs(s.location.real - math.log(2 * 0.7)) < 1e-14
    assert _residual_ok(ph, s.location)


def test_minus_negative_lam_single_root():
    ph = Phase(-0.25, 1.0, Sign.MINUS)
    s = solve_real_saddle(ph)
    assert s.kind is SaddleKind.REAL_SIMPLE
    assert abs(s.location.real - 0.83644438) < 5e-9
    assert _residual_ok(ph, s.location)


def test_minus_two_real_ordering_and_convexity():
    rng = random.Random(7)
    for _ in range(50):
        lam = rng.uniform(0.1, 6.0)
        a = double_saddle_curve(lam) * rng.uniform(1.01, 3.0)
        ph = Phase(lam, a, Sign.MINUS)
        lo, hi = solve_real_saddle(ph)
        assert lo.location.real < hi.location.real
        # the larger saddle sits past the convexity minimum: h'' > 0 there
        assert hi.second_derivative.real > 0.0
        assert _residual_ok(ph, lo.location) and _residual_ok(ph, hi.location)


def test_minus_no_real_saddle_below_curve():
    with pytest.raises(NoRealSaddle):
        solve_real_saddle(Phase(1.5, 0.5, Sign.MINUS))


def test_plus_single_real_root_always():
    rng = random.Random(11)
    for _ in range(40):
        lam = rng.uniform(-0.9, 8.0)
        a = rng.uniform(0.05, 3.0)
        ph = Phase(lam, a, Sign.PLUS)
        s = solve_real_saddle(ph)
        assert s.kind is SaddleKind.REAL_SIMPLE
        assert _residual_ok(ph, s.location)
        # plus-phase derivative is increasing: root is unique, h'' > 0
        assert s.second_derivative.real > 0.0


# -- coalescence curve ----------------------------------------------------

def test_curve_closed_form_spot_values():
    # a*(1) = 1; a*(lam) = ((1+lam)/2) lam^((1-lam)/(1+lam))
    assert abs(double_saddle_curve(1.0) - 1.0) < 1e-15
    lam = 2.0
    expect = 1.5 * 2.0 ** (-1.0 / 3.0)
    assert abs(double_saddle_curve(lam) - expect) < 1e-14


def test_curve_maximum_location():
    lams = [CURVE_MAX_LAM + d for d in (-1e-3, 0.0, 1e-3)]
    vals = [double_saddle_curve(v) for v in lams]
    assert vals[1] > vals[0] and vals[1] > vals[2]
    assert abs(vals[1] - CURVE_MAX_A) < 1e-5


def test_double_saddle_point_sits_on_curve():
    for lam in (0.5, 1.0, 2.0, 4.0):
        s = double_saddle_point(lam)
        assert s.kind is SaddleKind.REAL_DOUBLE
        ph = Phase(lam, double_saddle_curve(lam), Sign.MINUS)
        assert abs(ph.dh(s.location.real)) < 1e-10
        assert abs(ph.d2h(s.location.real)) < 1e-10
        assert abs(s.location.real - 2.0 * math.log(lam) / (1 + lam)) < 1e-12


def test_classification_flips_across_curve():
    for lam in (0.5, 1.0, 2.0, 5.0):
        astar = double_saddle_curve(lam)
        assert classify_minus(lam, astar + 1e-9).regime is Regime.TWO_REAL
        assert classify_minus(lam, astar - 1e-9).regime is Regime.CONJUGATE_PAIR
        assert classify_minus(lam, astar).regime is Regime.DOUBLE
    assert classify_minus(-0.5, 1.0).regime is Regime.SINGLE_REAL


def test_two_real_contributory_is_larger_root():
    cls = classify_minus(1.0, 1.2)
    ph = Phase(1.0, 1.2, Sign.MINUS)
    lo, hi = solve_real_saddle(ph)
    assert len(cls.contributory) == 1
    assert abs(cls.contributory[0].location.real - hi.location.real) < 1e-12


# -- complex pair ---------------------------------------------------------

def test_complex_pair_matches_independent_root_search():
    ph = Phase(2.0, 0.5, Sign.MINUS)
    s = solve_complex_pair(ph)
    # independent confirmation: mpmath's own complex root finder from a
    # coarse grid-scan seed
    best = None
    for re0 in (-0.5, 0.0, 0.5, 1.0):
        for im0 in (0.5, 1.0, 1.5, 2.5):
            v = abs(ph.dh(complex(re0, im0)))
            if best is None or v < best[0]:
                best = (v, complex(re0, im0))
    # minus-phase derivative at lam=2: (e^u + 2 e^(-2u))/2 - a
    root = mp.findroot(lambda u: (mp.e ** u + 2.0 * mp.e ** (-2.0 * u)) / 2 - 0.5,
                       mp.mpc(best[1]))
    assert abs(s.location - complex(root)) < 1e-10
    assert 0.0 < s.location.imag < math.pi


def test_complex_pair_tabulated_location():
    s = solve_complex_pair(Phase(1.5, 0.5, Sign.MINUS))
    assert abs(s.location.real - 0.24834557) < 5e-9
    assert abs(s.location.imag - 0.90919096) < 5e-9


def test_complex_pair_residuals_random():
    rng = random.Random(19)
    for _ in range(30):
        lam = rng.uniform(0.2, 5.0)
        a = double_saddle_curve(lam) * rng.uniform(0.15, 0.95)
        ph = Phase(lam, a, Sign.MINUS)
        s = solve_complex_pair(ph)
        assert _residual_ok(ph, s.location)
        assert 0.0 < s.location.imag < math.pi


# -- plus-phase chain -----------------------------------------------------

def test_chain_imaginary_windows():
    for lam in (2.0, 3.0, 6.0):
        ph = Phase(lam, 0.2, Sign.PLUS)
        chain = complex_saddle_chain(ph, 4)
        y1 = chain[0].location.imag
        assert math.pi / lam - 1e-9 <= y1 < 3 * math.pi / lam
        for k in (2, 3, 4):
            yk = chain[k - 1].location.imag
            est = (2 * k - 1) * math.pi / lam
            assert abs(yk - est) < math.pi / (2 * lam), (lam, k, yk, est)
        for s in chain:
            assert _residual_ok(ph, s.location)


def test_chain_lam_one_boundary_saddle():
    # degenerate case: u_1 = i pi - arcsinh(a), exactly on Im u = pi
    ph = Phase(1.0, 0.5, Sign.PLUS)
    chain = complex_saddle_chain(ph, 1)
    u = chain[0].location
    assert abs(u.imag - math.pi) < 1e-9
    assert abs(u.real + math.asinh(0.5)) < 1e-9


@pytest.mark.parametrize("lam,a,n", [(1.0, 0.5, 0), (3.0, 0.2, 1), (6.0, 0.2, 2)])
def test_contributory_pair_counts(lam, a, n):
    region = count_contributory_pairs(lam, a)
    assert region.n_pairs == n
    if n >= 1:
        assert region.last_pair_subdominant
        # contributory means the pair's phase has positive imaginary part
        for s in region.saddles[1:]:
            assert s.phase_value.imag > 0.0


def test_count_negative_lam_no_chain():
    region = count_contributory_pairs(-0.5, 1.0)
    assert region.n_pairs == 0


def test_stokes_boundary_first_pair_at_lam_two():
    a_flip = stokes_boundary(2.0, 1)
    assert abs(a_flip - 0.4075) < 1e-3
    # counting right on the flip is refused rather than guessed
    with pytest.raises(OnStokesBoundary):
        count_contributory_pairs(2.0, a_flip)
    assert count_contributory_pairs(2.0, a_flip - 0.01).n_pairs >= 1
    assert count_contributory_pairs(2.0, a_flip + 0.01).n_pairs == 0


# -- descent paths --------------------------------------------------------

def test_trace_minus_real_exits_right():
    ph = Phase(-0.25, 1.0, Sign.MINUS)
    s = solve_real_saddle(ph)
    out = trace_descent_path(ph, s, PathBranch.UPPER_RIGHT)
    assert out.terminus is Terminus.INFINITY_PLUS_PI
    assert len(out.samples) > 3


def test_trace_minus_complex_pair_branches():
    ph = Phase(1.5, 0.5, Sign.MINUS)
    s = solve_complex_pair(ph)
    left = trace_descent_path(ph, s, PathBranch.UPPER_LEFT)
    right = trace_descent_path(ph, s, PathBranch.UPPER_RIGHT)
    assert left.terminus is Terminus.MINUS_INFINITY_STRIP
    assert right.terminus is Terminus.INFINITY_PLUS_PI


def test_trace_plus_real_with_contributory_pair():
    ph = Phase(2.0, 0.2, Sign.PLUS)
    s = solve_real_saddle(ph)
    out = trace_descent_path(ph, s, PathBranch.UPPER_RIGHT)
    assert out.terminus is Terminus.MINUS_INFINITY_STRIP
    assert out.strip_index == 1


def test_trace_descent_is_monotone_decreasing():
    ph = Phase(1.5, 0.5, Sign.MINUS)
    s = solve_complex_pair(ph)
    out = trace_descent_path(ph, s, PathBranch.UPPER_RIGHT)
    laps = [ph.h(u).real for u in out.samples]
    assert all(b <= a + 1e-9 for a, b in zip(laps, laps[1:]))
    # the imaginary part of h is the conserved level along the path
    levels = [ph.h(u).imag for u in out.samples]
    ref = ph.h(s.location).imag
    assert max(abs(v - ref) for v in levels) < 1e-6
