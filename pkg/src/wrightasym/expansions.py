"""Steepest-descent asymptotic expansions of the scaled Wright functions
for large x at fixed lam and a.

Four routes, one per saddle configuration:

  minus sign, two real saddles      -> expand_minus_real   (larger saddle)
  minus sign, conjugate pair        -> expand_minus_complex
  minus sign, on the coalescence curve -> expand_minus_double
  plus sign (always)                -> expand_plus (real saddle plus the
                                       contributory complex-pair chain)

Each returns the truncated series value together with the raw terms, so
callers can study the error behaviour rather than just consume a number.
Exponential prefactors are evaluated in extended precision: the series
terms are O(1) and well conditioned in doubles, but e^(x h0) reaches 1e12
and beyond where double rounding alone would swamp the small differences
(oracle minus expansion) these expansions are judged by.  The plus-phase
route runs its coefficients in extended precision too; its value feeds
difference measurements (W - I_0) in which twelve leading digits cancel.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import mpmath as mp

from .core import DomainError, ScaledArgs, Sign
from .coeffs import is_near_curve, simple_coeffs_mp, double_saddle_coeffs
from .saddles import Phase, Regime, RegionCount, classify_minus, \
    complex_saddle_chain, count_contributory_pairs, double_saddle_curve, \
    solve_real_saddle

_PREC_DPS = 50
_PLUS_DPS = 60
_DEFAULT_MAX_ORDER = 40


class WrongRegime(ValueError):
    """The requested expansion route does not match the saddle
    configuration at these parameters."""


class TruncationMode(enum.Enum):
    FIXED = "fixed"
    OPTIMAL = "optimal"


@dataclass(frozen=True)
class TruncationPolicy:
    mode: TruncationMode
    k: int | None = None

    @classmethod
    def fixed(cls, k: int) -> "TruncationPolicy":
        if k < 0:
            raise ValueError("truncation order must be nonnegative")
        return cls(TruncationMode.FIXED, k)

    @classmethod
    def optimal(cls) -> "TruncationPolicy":
        return cls(TruncationMode.OPTIMAL)


def optimal_truncation(magnitudes) -> int:
    """Index of the globally smallest nonzero term magnitude; ties go to
    the smaller index.  Truncation is inclusive of that term.

    Exact zeros are structural (every third double-saddle term vanishes)
    and never meant as the stopping signal, so they are skipped.
    """
    best = None
    for j, m in enumerate(magnitudes):
        if m == 0:
            continue
        if best is None or m < magnitudes[best]:
            best = j
    if best is None:
        raise ValueError("no nonzero terms to truncate on")
    return best


@dataclass(frozen=True)
class ExpansionResult:
    """One evaluated expansion.

    terms holds the successive series terms of the primary saddle after
    the prefactor is pulled out; truncation_index is where that series was
    actually cut (inclusive).  components carries the per-saddle
    contributions I_j in saddle order (for the single-saddle routes just
    the value itself), component_truncations their individual cut points,
    and exponent = x * Re h(u0) locates the overall scale.  value is the
    double rounding of mp_value, which keeps the extended-precision result
    for difference measurements.
    """

    value: float
    terms: tuple[complex, ...]
    truncation_index: int
    truncation_mode: TruncationMode
    exponent: float
    components: tuple[float, ...]
    component_truncations: tuple[int, ...]
    mp_value: object
    mp_components: tuple
    route: str


def _mp_h(u, lam, a, s):
    return (mp.e ** u + s * mp.e ** (-lam * u)) / 2 - a * u


def _mp_dh(u, lam, a, s):
    return (mp.e ** u - s * lam * mp.e ** (-lam * u)) / 2 - a


def _mp_d2h(u, lam, s):
    return (mp.e ** u + s * lam ** 2 * mp.e ** (-lam * u)) / 2


def _mp_polish(u, lam, a, s, steps: int = 6):
    """Newton-polish a double-precision saddle location at working
    precision."""
    for _ in range(steps):
        u = u - _mp_dh(u, lam, a, s) / _mp_d2h(u, lam, s)
    return u


def _signed(sign: Sign) -> int:
    return -1 if sign is Sign.MINUS else 1


def _pick_k(policy: TruncationPolicy, mags) -> int:
    if policy.mode is TruncationMode.FIXED:
        return policy.k
    return optimal_truncation(mags)


def _series_span(policy: TruncationPolicy, max_order: int) -> int:
    if policy.mode is TruncationMode.FIXED:
        return policy.k
    return max_order


def expand_minus_real(args: ScaledArgs, trunc: TruncationPolicy,
                      max_order: int = _DEFAULT_MAX_ORDER) -> ExpansionResult:
    """Expansion over the larger of the two real minus-phase saddles:

        e^(x h0) / sqrt(2 pi x h0'') * sum_k (-1)^k (1/2)_k A_k / (x/2)^k

    Valid above the coalescence curve (and for -1 < lam <= 0, where the
    single real saddle plays the same role).  Within 1e-6 of the curve the
    reversion is ill conditioned; use the double-saddle route there.
    """
    if args.sign is not Sign.MINUS:
        raise WrongRegime("minus-phase route called with plus-sign arguments")
    lam, a, x = args.lam, args.a, args.x
    if is_near_curve(lam, a):
        raise WrongRegime(
            "parameters lie on the saddle-coalescence curve; "
            "use the double-saddle expansion")
    cls = classify_minus(lam, a)
    if cls.regime not in (Regime.TWO_REAL, Regime.SINGLE_REAL):
        raise WrongRegime(
            f"real-saddle route needs a real saddle; regime is "
            f"{cls.regime.value} at lam={lam}, a={a}")
    saddle = cls.contributory[0]
    phase = Phase(lam, a, Sign.MINUS)
    kmax = _series_span(trunc, max_order)
    # Coefficients in extended precision: the deep tail of this series
    # reaches relative errors near 1e-13, where double-precision
    # reversion noise in A_4, A_5 already distorts the measurement.
    with mp.workdps(_PREC_DPS):
        lm, am, xm = mp.mpf(lam), mp.mpf(a), mp.mpf(x)
        um = _mp_polish(mp.mpf(saddle.location.real), lm, am, -1)
        coeff = simple_coeffs_mp(phase, um, kmax)
        terms_mp = [(-1) ** k * mp.rf(mp.mpf(1) / 2, k) * mp.re(coeff[k])
                    / (xm / 2) ** k for k in range(kmax + 1)]
        k_cut = _pick_k(trunc, [abs(t) for t in terms_mp])
        h0 = _mp_h(um, lm, am, -1)
        pref = mp.e ** (xm * h0) / mp.sqrt(2 * mp.pi * xm * _mp_d2h(um, lm, -1))
        val = pref * mp.fsum(terms_mp[:k_cut + 1])
        exponent = float(xm * h0)
        value = float(val)
        terms = tuple(complex(float(t)) for t in terms_mp)
    return ExpansionResult(
        value=value,
        terms=terms,
        truncation_index=k_cut,
        truncation_mode=trunc.mode,
        exponent=exponent,
        components=(value,),
        component_truncations=(k_cut,),
        mp_value=val,
        mp_components=(val,),
        route="real-saddle",
    )


def expand_minus_complex(args: ScaledArgs, trunc: TruncationPolicy,
                         max_order: int = _DEFAULT_MAX_ORDER) -> ExpansionResult:
    """Expansion over the conjugate saddle pair (minus phase below the
    coalescence curve):

        sqrt(2/(pi x)) * Re{ e^(x h0) / sqrt(h0'')
                             * sum_k (-1)^k (1/2)_k A_k / (x/2)^k }

    evaluated at the upper saddle with the principal square root; the
    conjugate saddle contributes the mirror term, hence the real part.
    """
    if args.sign is not Sign.MINUS:
        raise WrongRegime("minus-phase route called with plus-sign arguments")
    lam, a, x = args.lam, args.a, args.x
    if is_near_curve(lam, a):
        raise WrongRegime(
            "parameters lie on the saddle-coalescence curve; "
            "use the double-saddle expansion")
    cls = classify_minus(lam, a)
    if cls.regime is not Regime.CONJUGATE_PAIR:
        raise WrongRegime(
            f"conjugate-pair route needs complex saddles; regime is "
            f"{cls.regime.value} at lam={lam}, a={a}")
    saddle = cls.contributory[0]
    phase = Phase(lam, a, Sign.MINUS)
    kmax = _series_span(trunc, max_order)
    with mp.workdps(_PREC_DPS):
        lm, am, xm = mp.mpf(lam), mp.mpf(a), mp.mpf(x)
        um = _mp_polish(mp.mpc(saddle.location), lm, am, -1)
        coeff = simple_coeffs_mp(phase, um, kmax)
        terms_mp = [(-1) ** k * mp.rf(mp.mpf(1) / 2, k) * coeff[k]
                    / (xm / 2) ** k for k in range(kmax + 1)]
        k_cut = _pick_k(trunc, [abs(t) for t in terms_mp])
        h0 = _mp_h(um, lm, am, -1)
        core = mp.e ** (xm * h0) / mp.sqrt(_mp_d2h(um, lm, -1))
        val = mp.sqrt(2 / (mp.pi * xm)) * mp.re(
            core * mp.fsum(terms_mp[:k_cut + 1]))
        exponent = float(xm * mp.re(h0))
        value = float(val)
        terms = tuple(complex(t) for t in terms_mp)
    return ExpansionResult(
        value=value,
        terms=terms,
        truncation_index=k_cut,
        truncation_mode=trunc.mode,
        exponent=exponent,
        components=(value,),
        component_truncations=(k_cut,),
        mp_value=val,
        mp_components=(val,),
        route="conjugate-pair",
    )


def expand_minus_double(lam: float, x: float, trunc: TruncationPolicy,
                        max_order: int = _DEFAULT_MAX_ORDER) -> ExpansionResult:
    """Expansion at the double saddle, on the coalescence curve a = a*(lam):

        2^(2/3) e^(x h0) / (3 pi) * sum_k B_k Gamma((k+1)/3)
                                    * sin(pi (k+1)/3) / (H x/3)^((k+1)/3)

    with H = 2 h'''(u0).  The sine kills every k = 2 (mod 3) term, so those
    appear as exact zeros in the term list.
    """
    if lam <= 0.0:
        raise WrongRegime("the double-saddle route requires lam > 0")
    if not (x > 0.0) or not math.isfinite(x):
        raise DomainError(f"x must be positive and finite, got {x}")
    kmax = _series_span(trunc, max_order)
    series = double_saddle_coeffs(lam, kmax)
    with mp.workdps(_PREC_DPS):
        lm, xm = mp.mpf(lam), mp.mpf(x)
        gam = (1 - lm) / (1 + lm)
        am = (1 + lm) / 2 * lm ** gam
        u0 = 2 * mp.log(lm) / (1 + lm)
        h0 = _mp_h(u0, lm, am, -1)
        big_h = (1 + lm) * lm ** (2 / (1 + lm))
        hx3 = big_h * xm / 3
        terms = []
        for k in range(kmax + 1):
            if k % 3 == 2:
                terms.append(mp.mpf(0))
                continue
            t = (mp.mpf(series.coefficients[k].real) / hx3 ** (mp.mpf(k) / 3)
                 * mp.gamma(mp.mpf(k + 1) / 3) * mp.sin(mp.pi * (k + 1) / 3))
            terms.append(t)
        k_cut = _pick_k(trunc, [abs(t) for t in terms])
        pref = (mp.mpf(2) ** (mp.mpf(2) / 3) * mp.e ** (xm * h0)
                / (3 * mp.pi * hx3 ** (mp.mpf(1) / 3)))
        val = pref * mp.fsum(terms[:k_cut + 1])
        exponent = float(xm * h0)
        value = float(val)
        terms_f = tuple(complex(float(t)) for t in terms)
    return ExpansionResult(
        value=value,
        terms=terms_f,
        truncation_index=k_cut,
        truncation_mode=trunc.mode,
        exponent=exponent,
        components=(value,),
        component_truncations=(k_cut,),
        mp_value=val,
        mp_components=(val,),
        route="double-saddle",
    )


def _plus_pair_contribution(phase: Phase, u_mp, x, kmax: int):
    """I_j for one chain pair at working precision: value terms and the
    real-part assembly sqrt(2/(pi x)) Re{e^(x h)/sqrt(h'') sum ...}."""
    lm, am, xm = mp.mpf(phase.lam), mp.mpf(phase.a), mp.mpf(x)
    coeff = simple_coeffs_mp(phase, u_mp, kmax)
    terms = [(-1) ** k * mp.rf(mp.mpf(1) / 2, k) * coeff[k] / (xm / 2) ** k
             for k in range(kmax + 1)]
    k_cut = optimal_truncation([abs(t) for t in terms])
    h0 = _mp_h(u_mp, lm, am, 1)
    core = mp.e ** (xm * h0) / mp.sqrt(_mp_d2h(u_mp, lm, 1))
    val = mp.sqrt(2 / (mp.pi * xm)) * mp.re(core * mp.fsum(terms[:k_cut + 1]))
    return val, k_cut


# The chain geometry and the pair corrections do not depend on where I_0
# is cut, so fixed-k error sweeps would otherwise redo the costly parts
# (extended-precision reversion per saddle) once per column.
@functools.lru_cache(maxsize=64)
def _cached_region(lam: float, a: float) -> RegionCount:
    return count_contributory_pairs(lam, a)


@functools.lru_cache(maxsize=64)
def _cached_pair_contributions(lam: float, a: float, x: float,
                               n_pairs: int, max_order: int):
    phase = Phase(lam, a, Sign.PLUS)
    with mp.workdps(_PLUS_DPS):
        lm, am = mp.mpf(lam), mp.mpf(a)
        chain = complex_saddle_chain(phase, n_pairs)
        out = []
        for sadl in chain:
            um = _mp_polish(mp.mpc(sadl.location), lm, am, 1)
            out.append(_plus_pair_contribution(phase, um, x, max_order))
        return tuple(out)


def expand_plus(args: ScaledArgs, trunc: TruncationPolicy,
                include_subdominant: bool = False,
                max_order: int = _DEFAULT_MAX_ORDER) -> ExpansionResult:
    """Plus-phase expansion: the real-saddle series I_0 plus the
    contributory complex-pair contributions I_1..I_N.

    The truncation policy applies to I_0; each pair series is cut at its
    own optimal point (their terms diverge much earlier, and the fixed-k
    error study only makes sense against fully converged corrections).
    When the last pair is subdominant (Re h(u_N) < 0, exponentially small
    against I_0) it is reported in components but left out of the value
    unless include_subdominant is set.
    """
    if args.sign is not Sign.PLUS:
        raise WrongRegime("plus-phase route called with minus-sign arguments")
    lam, a, x = args.lam, args.a, args.x
    region: RegionCount = _cached_region(lam, a)
    n_pairs = region.n_pairs
    phase = Phase(lam, a, Sign.PLUS)
    real_saddle = solve_real_saddle(phase)
    kmax0 = _series_span(trunc, max_order)
    with mp.workdps(_PLUS_DPS):
        lm, am, xm = mp.mpf(lam), mp.mpf(a), mp.mpf(x)
        um0 = _mp_polish(mp.mpf(real_saddle.location.real), lm, am, 1)
        coeff0 = simple_coeffs_mp(phase, um0, kmax0)
        terms0 = [(-1) ** k * mp.rf(mp.mpf(1) / 2, k) * mp.re(coeff0[k])
                  / (xm / 2) ** k for k in range(kmax0 + 1)]
        k_cut = _pick_k(trunc, [abs(t) for t in terms0])
        h00 = _mp_h(um0, lm, am, 1)
        pref0 = mp.e ** (xm * h00) / mp.sqrt(2 * mp.pi * xm * _mp_d2h(um0, lm, 1))
        i0 = pref0 * mp.fsum(terms0[:k_cut + 1])
        components = [i0]
        cuts = [k_cut]
        if n_pairs >= 1:
            for val_j, cut_j in _cached_pair_contributions(
                    lam, a, x, n_pairs, max_order):
                components.append(val_j)
                cuts.append(cut_j)
        total = mp.mpf(0)
        for j, cj in enumerate(components):
            if (j == n_pairs and n_pairs >= 1
                    and region.last_pair_subdominant
                    and not include_subdominant):
                continue
            total += cj
        exponent = float(xm * h00)
        value = float(total)
        comp_f = tuple(float(c) for c in components)
        terms_f = tuple(complex(float(t)) for t in terms0)
    return ExpansionResult(
        value=value,
        terms=terms_f,
        truncation_index=k_cut,
        truncation_mode=trunc.mode,
        exponent=exponent,
        components=comp_f,
        component_truncations=tuple(cuts),
        mp_value=total,
        mp_components=tuple(components),
        route="chain",
    )


def expand_minus_auto(args: ScaledArgs, trunc: TruncationPolicy,
                      max_order: int = _DEFAULT_MAX_ORDER) -> ExpansionResult:
    """Dispatch the minus-phase expansion on the saddle configuration:
    real route above the curve (or lam <= 0), double route on it,
    conjugate-pair route below."""
    lam, a = args.lam, args.a
    if lam > 0.0 and is_near_curve(lam, a):
        return expand_minus_double(lam, args.x, trunc, max_order)
    cls = classify_minus(lam, a)
    if cls.regime is Regime.CONJUGATE_PAIR:
        return expand_minus_complex(args, trunc, max_order)
    if cls.regime is Regime.DOUBLE:
        return expand_minus_double(lam, args.x, trunc, max_order)
    return expand_minus_real(args, trunc, max_order)
