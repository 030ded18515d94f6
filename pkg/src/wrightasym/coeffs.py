"""Watson-lemma coefficients at simple and double saddles.

At a simple saddle the substitution h(u) = h(u0) - w^2/2 maps the descent
integral onto a Gaussian; expanding u(w) about the saddle and integrating
termwise produces the coefficient sequence A_k.  The A_k come out of a
power-series reversion of w(u), done here with the J.C.P. Miller power
recurrence plus Lagrange inversion, which works to any order; the first
four also have closed forms in the normalized derivatives and the two
routes cross-check each other.

At a double saddle (h'' = 0, h''' != 0) the cubic substitution
h(u) = h(u0) - (H/12) v^3 ... plays the same role and yields the sequence
B_k, scaled by H = 2 h'''(u0).  On the coalescence curve the derivative
ratios collapse to rationals in lam, so B_0..B_6 reduce to polynomial
expressions; beyond that the reversion route (run in extended precision,
since the cubic branch constants are irrational) takes over.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import mpmath as mp

from .core import DomainError, Sign
from .saddles import Phase, Saddle, SaddleKind, double_saddle_curve

_TWO_CBRT = 2.0 ** (1.0 / 3.0)


class DegenerateSaddle(ValueError):
    """Vanishing second derivative: the simple-saddle reversion does not
    apply (use the double-saddle route)."""


class CoefficientKind(enum.Enum):
    SIMPLE_SADDLE_A = "simple_saddle_a"
    DOUBLE_SADDLE_B = "double_saddle_b"


@dataclass(frozen=True)
class DerivativeTable:
    """Phase derivatives at a saddle: values[n] = h^(n)(u), with values[0]
    the phase value itself and values[1] the (vanishing) gradient."""

    saddle: Saddle
    values: tuple[complex, ...]
    sign: Sign


@dataclass(frozen=True)
class CoefficientSeries:
    """Coefficients of one asymptotic series, with the saddle scale they
    are normalized against: h''(u0) for the A_k, H = 2 h'''(u0) for the
    B_k."""

    kind: CoefficientKind
    coefficients: tuple[complex, ...]
    scale: complex
    order: int


def derivative_table(saddle: Saddle, phase: Phase, n_max: int) -> DerivativeTable:
    """Tabulate h, h' and h^(n) for n = 2..n_max at the saddle.

    The location must actually be stationary for this phase; mixing a
    saddle solved under one sign with the other phase is rejected.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    u = saddle.location
    grad = phase.dh(u)
    scale = max(1.0, abs(phase.d2h(u)), abs(phase.dnh(u, 3)))
    if abs(grad) > 1e-10 * scale:
        raise DomainError(
            f"location {u} is not a stationary point of this phase "
            f"(|h'| = {abs(grad):.2e})")
    values = [complex(phase.h(u)), complex(grad)]
    values.extend(complex(phase.dnh(u, n)) for n in range(2, n_max + 1))
    return DerivativeTable(saddle=saddle, values=tuple(values), sign=phase.sign)


def _ps_pow_unit(f: list[complex], alpha: float, n: int) -> list[complex]:
    # q = f**alpha for a unit series (f[0] == 1), Miller recurrence
    q = [1.0 + 0j] * n
    for k in range(1, n):
        s = 0j
        for j in range(1, k + 1):
            fj = f[j] if j < len(f) else 0j
            s += ((alpha + 1) * j - k) * fj * q[k - j]
        q[k] = s / k
    return q


def _reverse_series(w: list[complex], n: int) -> list[complex]:
    # w(t) = sum_{j>=1} w[j-1] t^j with w[0] != 0; returns b with
    # t(w) = sum b[j-1] w^j (Lagrange inversion through unit-series powers)
    w1 = w[0]
    f = [w[j] / w1 if j < len(w) else 0j for j in range(n)]
    b = []
    for m in range(1, n + 1):
        g = _ps_pow_unit(f, -m, n)
        b.append(g[m - 1] / (m * w1 ** m))
    return b


def _ps_pow_unit_mp(f, alpha, n):
    q = [mp.mpc(1)] + [mp.mpc(0)] * (n - 1)
    for k in range(1, n):
        s = mp.mpc(0)
        for j in range(1, k + 1):
            fj = f[j] if j < len(f) else mp.mpc(0)
            s += ((alpha + 1) * j - k) * fj * q[k - j]
        q[k] = s / k
    return q


def _reverse_series_mp(w, n):
    w1 = w[0]
    f = [w[j] / w1 if j < len(w) else mp.mpc(0) for j in range(n)]
    b = []
    for m in range(1, n + 1):
        g = _ps_pow_unit_mp(f, -m, n)
        b.append(g[m - 1] / (m * w1 ** m))
    return b


def _simple_a_from_derivs(derivs, order: int) -> list[complex]:
    """A_0..A_order from {n: h^(n)(u0)}, n = 2..2*order+2 at least.

    Writes w(t) = S t (1 + ...)^(1/2) with S = sqrt(-h''), t = u - u0,
    reverts to t(w), and reads A_k = (-1)^k (2k+1) b_{2k+1} S.  The sqrt
    branch cancels between S and the odd reversion coefficient, so either
    choice gives the same A_k.
    """
    m = 2 * order + 2
    c2 = derivs[2] / 2.0
    s_root = cmath.sqrt(-derivs[2])
    f = [1.0 + 0j]
    for j in range(1, m):
        cj = derivs.get(j + 2, 0j) / math.factorial(j + 2)
        f.append(cj / c2)
    q = _ps_pow_unit(f, 0.5, m)
    w = [s_root * q[j] for j in range(m)]
    b = _reverse_series(w, m)
    return [(-1) ** k * (2 * k + 1) * b[2 * k] * s_root for k in range(order + 1)]


def reverse_series_simple(table: DerivativeTable, order: int) -> CoefficientSeries:
    """A_0..A_order at a simple saddle by series reversion.

    Needs derivatives up to 2*order + 2; the table must reach that far.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    h2 = table.values[2]
    if abs(h2) < 1e-10:
        raise DegenerateSaddle(
            f"|h''| = {abs(h2):.2e}: saddle is (numerically) double")
    need = 2 * order + 2
    if len(table.values) <= need:
        raise ValueError(
            f"order {order} needs derivatives through n = {need}; "
            f"table stops at {len(table.values) - 1}")
    derivs = {n: table.values[n] for n in range(2, len(table.values))}
    coeffs = _simple_a_from_derivs(derivs, order)
    return CoefficientSeries(
        kind=CoefficientKind.SIMPLE_SADDLE_A,
        coefficients=tuple(coeffs),
        scale=h2,
        order=order,
    )


def closed_form_A(table: DerivativeTable) -> list[complex]:
    """A_0..A_3 in closed form from the normalized derivatives
    H_n = h^(n)/h''."""
    h2 = table.values[2]
    if abs(h2) < 1e-10:
        raise DegenerateSaddle("closed forms assume a simple saddle")
    if len(table.values) <= 8:
        raise ValueError("closed A_3 needs derivatives through n = 8")
    H = {n: table.values[n] / h2 for n in range(3, 9)}
    a1 = (5 * H[3] ** 2 - 3 * H[4]) / (24 * h2)
    a2 = (385 * H[3] ** 4 - 630 * H[3] ** 2 * H[4] + 105 * H[4] ** 2
          + 168 * H[3] * H[5] - 24 * H[6]) / (3456 * h2 ** 2)
    a3 = (425425 * H[3] ** 6 - 1126125 * H[3] ** 4 * H[4]
          + 675675 * H[3] ** 2 * H[4] ** 2 - 51975 * H[4] ** 3
          + 360360 * H[3] ** 3 * H[5] - 249480 * H[3] * H[4] * H[5]
          + 13608 * H[5] ** 2 - 83160 * H[3] ** 2 * H[6]
          + 22680 * H[4] * H[6] + 12960 * H[3] * H[7]
          - 1080 * H[8]) / (6220800 * h2 ** 3)
    return [1.0 + 0j, a1, a2, a3]


def _closed_b_polynomials(lam: float) -> list[float]:
    c = _TWO_CBRT
    return [
        1.0,
        (lam - 1.0) / (c * 3.0),
        (1.0 - 6.0 * lam + lam ** 2) / (c * c * 20.0),
        (5.0 + 93.0 * lam - 93.0 * lam ** 2 - 5.0 * lam ** 3) / 1620.0,
        -(277.0 + 836.0 * lam - 6114.0 * lam ** 2 + 836.0 * lam ** 3
          + 277.0 * lam ** 4) / (c * 136080.0),
        (1.0 - 61.0 * lam - 254.0 * lam ** 2 + 254.0 * lam ** 3
         + 61.0 * lam ** 4 - lam ** 5) / (c * c * 16800.0),
        (959.0 + 7098.0 * lam - 2031.0 * lam ** 2 - 58708.0 * lam ** 3
         - 2031.0 * lam ** 4 + 7098.0 * lam ** 5 + 959.0 * lam ** 6)
        / 10497600.0,
    ]


def _double_h_big(lam: float) -> float:
    """Scale factor H = 2 h'''(u0) on the coalescence curve."""
    return (1.0 + lam) * lam ** (2.0 / (1.0 + lam))


def double_coeffs_by_reversion(lam: float, order: int,
                               dps: int = 40) -> list[float]:
    """B_0..B_order by cubic-substitution reversion in extended precision.

    At the double point e^(-lam*u0) = e^(u0)/lam^2, so the scaled cubic
    series has rational coefficients in lam; the branch constant
    (H/4)^(1/3) e^(-i pi/3) carries the contour orientation and drops back
    out of the final B_k, which are real.
    """
    if lam <= 0.0:
        raise DomainError("double-saddle coefficients require lam > 0")
    if order < 0:
        raise ValueError("order must be nonnegative")
    m = order + 2
    with mp.workdps(dps):
        lm = mp.mpf(lam)
        u0 = 2 * mp.log(lm) / (1 + lm)
        c = {n: (mp.e ** u0 - (-lm) ** n * mp.e ** (-lm * u0)) / 2 / mp.factorial(n)
             for n in range(3, m + 4)}
        big_h = (1 + lm) * lm ** (2 / (1 + lm))
        f = [mp.mpc(1)] + [c[j + 3] / c[3] for j in range(1, m + 1)]
        q = _ps_pow_unit_mp(f, mp.mpf(1) / 3, m)
        root = (3 * abs(c[3])) ** (mp.mpf(1) / 3) * mp.e ** (-1j * mp.pi / 3)
        w = [root * q[j] for j in range(m)]
        b = _reverse_series_mp(w, m)
        out = []
        for k in range(order + 1):
            bk = ((k + 1) * b[k] * big_h ** (mp.mpf(k + 1) / 3)
                  * mp.e ** (-1j * mp.pi * (k + 1) / 3) / 2 ** (mp.mpf(2) / 3))
            out.append(float(bk.real))
        return out


def double_saddle_coeffs(lam: float, order: int) -> CoefficientSeries:
    """B_0..B_order for the double-saddle series on the coalescence curve.

    The polynomial closed forms cover k <= 6; higher orders come from the
    reversion route.
    """
    if lam <= 0.0:
        raise DomainError("double-saddle coefficients require lam > 0")
    if order < 0:
        raise ValueError("order must be nonnegative")
    poly = _closed_b_polynomials(lam)
    if order <= 6:
        coeffs = poly[:order + 1]
    else:
        rev = double_coeffs_by_reversion(lam, order)
        coeffs = poly + rev[7:]
    return CoefficientSeries(
        kind=CoefficientKind.DOUBLE_SADDLE_B,
        coefficients=tuple(complex(v) for v in coeffs),
        scale=complex(_double_h_big(lam)),
        order=order,
    )


def _mp_dnh(u, lam, n, s):
    return (mp.e ** u + s * (-lam) ** n * mp.e ** (-lam * u)) / 2


def simple_coeffs_mp(phase: Phase, u0, order: int) -> list:
    """A_0..A_order at working mpmath precision; u0 is an mp location
    (polish it first).  Used where the expansion value itself must carry
    far more than double precision."""
    s = -1 if phase.sign is Sign.MINUS else 1
    lm = mp.mpf(phase.lam)
    m = 2 * order + 2
    c2 = _mp_dnh(u0, lm, 2, s) / 2
    s_root = mp.sqrt(-2 * c2)
    f = [mp.mpc(1)]
    for j in range(1, m):
        cj = _mp_dnh(u0, lm, j + 2, s) / mp.factorial(j + 2)
        f.append(cj / c2)
    q = _ps_pow_unit_mp(f, mp.mpf(1) / 2, m)
    w = [s_root * q[j] for j in range(m)]
    b = _reverse_series_mp(w, m)
    return [(-1) ** k * (2 * k + 1) * b[2 * k] * s_root for k in range(order + 1)]


def is_near_curve(lam: float, a: float, rel_tol: float = 1e-6) -> bool:
    """Whether (lam, a) sits within rel_tol of the coalescence curve,
    where the simple-saddle series degenerate."""
    if lam <= 0.0:
        return False
    curve = double_saddle_curve(lam)
    return abs(a - curve) <= rel_tol * max(1.0, curve)
