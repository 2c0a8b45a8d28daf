"""Three-dimensional angular-momentum kernel.

Clebsch-Gordan coefficients, 6j and 9j symbols in Racah log-factorial
arithmetic, axis-angle rotation matrix elements, generalised characters of
the rotation group and modified spherical harmonics.

All angular momenta and projections are passed as doubled integers (2j,
2m), so half-integer values stay exact.  Phases follow Condon-Shortley.
"""

import cmath
import math

import numpy as np

from .special import gegenbauer, log_factorial

__all__ = [
    "validate_jm",
    "cgc3",
    "wigner6j",
    "wigner9j",
    "gen_character",
    "mod_sph_harm",
    "rotation_u",
]


def validate_jm(tj, tm):
    """Check a doubled (2j, 2m) pair: |m| <= j and matching parity."""
    if tj < 0:
        raise ValueError(f"negative angular momentum 2j = {tj}")
    if abs(tm) > tj or (tj - tm) % 2 != 0:
        raise ValueError(f"invalid projection 2m = {tm} for 2j = {tj}")


def _triangle_ok(ta, tb, tc):
    return abs(ta - tb) <= tc <= ta + tb and (ta + tb + tc) % 2 == 0


def _log_triangle(ta, tb, tc):
    """ln Delta(a b c) of the Racah triangle coefficient."""
    return 0.5 * (log_factorial((ta + tb - tc) // 2)
                  + log_factorial((ta - tb + tc) // 2)
                  + log_factorial((-ta + tb + tc) // 2)
                  - log_factorial((ta + tb + tc) // 2 + 1))


def cgc3(tj1, tm1, tj2, tm2, tj, tm):
    """3D Clebsch-Gordan coefficient C^{j m}_{j1 m1, j2 m2}.

    Racah's single-sum formula evaluated with log factorials.  Returns 0
    when m != m1 + m2 or the triangle rule fails.
    """
    for pair in ((tj1, tm1), (tj2, tm2), (tj, tm)):
        validate_jm(*pair)
    if tm1 + tm2 != tm or not _triangle_ok(tj1, tj2, tj):
        return 0.0

    log_pre = (_log_triangle(tj1, tj2, tj)
               + 0.5 * (math.log(tj + 1.0)
                        + log_factorial((tj1 + tm1) // 2)
                        + log_factorial((tj1 - tm1) // 2)
                        + log_factorial((tj2 + tm2) // 2)
                        + log_factorial((tj2 - tm2) // 2)
                        + log_factorial((tj + tm) // 2)
                        + log_factorial((tj - tm) // 2)))

    # Summation bounds keep every factorial argument nonnegative.
    k_min = max(0, (tj2 - tj - tm1) // 2, (tj1 - tj + tm2) // 2)
    k_max = min((tj1 + tj2 - tj) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = 0.0
    for k in range(k_min, k_max + 1):
        log_den = (log_factorial(k)
                   + log_factorial((tj1 + tj2 - tj) // 2 - k)
                   + log_factorial((tj1 - tm1) // 2 - k)
                   + log_factorial((tj2 + tm2) // 2 - k)
                   + log_factorial((tj - tj2 + tm1) // 2 + k)
                   + log_factorial((tj - tj1 - tm2) // 2 + k))
        total += (-1.0) ** k * math.exp(log_pre - log_den)
    return total


def wigner6j(ta, tb, tc, td, te, tf):
    """6j symbol {a b c; d e f}, doubled-integer arguments.

    Invalid triads give 0.
    """
    triads = ((ta, tb, tc), (ta, te, tf), (td, tb, tf), (td, te, tc))
    if not all(_triangle_ok(*t) for t in triads):
        return 0.0
    log_delta = sum(_log_triangle(*t) for t in triads)

    t_min = max((ta + tb + tc) // 2, (ta + te + tf) // 2,
                (td + tb + tf) // 2, (td + te + tc) // 2)
    t_max = min((ta + tb + td + te) // 2, (ta + tc + td + tf) // 2,
                (tb + tc + te + tf) // 2)
    total = 0.0
    for t in range(t_min, t_max + 1):
        log_term = (log_factorial(t + 1)
                    - log_factorial(t - (ta + tb + tc) // 2)
                    - log_factorial(t - (ta + te + tf) // 2)
                    - log_factorial(t - (td + tb + tf) // 2)
                    - log_factorial(t - (td + te + tc) // 2)
                    - log_factorial((ta + tb + td + te) // 2 - t)
                    - log_factorial((ta + tc + td + tf) // 2 - t)
                    - log_factorial((tb + tc + te + tf) // 2 - t))
        total += (-1.0) ** t * math.exp(log_delta + log_term)
    return total


def wigner9j(ta, tb, tc, td, te, tf, tg, th, tk):
    """9j symbol, computed as a single sum over products of three 6j symbols."""
    rows = ((ta, tb, tc), (td, te, tf), (tg, th, tk))
    cols = ((ta, td, tg), (tb, te, th), (tc, tf, tk))
    if not all(_triangle_ok(*t) for t in rows + cols):
        return 0.0
    tx_min = max(abs(ta - tk), abs(tb - tf), abs(td - th))
    tx_max = min(ta + tk, tb + tf, td + th)
    total = 0.0
    for tx in range(tx_min, tx_max + 1, 2):
        total += ((-1.0) ** tx * (tx + 1)
                  * wigner6j(ta, td, tg, th, tk, tx)
                  * wigner6j(tb, te, th, td, tx, tf)
                  * wigner6j(tc, tf, tk, tx, ta, tb))
    return total


def gen_character(tl, lam, omega):
    """Generalised character chi^l_lambda(omega) of the rotation group.

    chi^l_lam(w) = (2 lam)!! sqrt(2l+1) sqrt((2l-lam)!/(2l+lam+1)!)
                   sin(w/2)^lam C^{lam+1}_{2l-lam}(cos(w/2)),
    with tl = 2l doubled.  Accepts numpy arrays for omega.
    """
    if not 0 <= lam <= tl:
        raise ValueError(f"gen_character: need 0 <= lambda <= 2l, got "
                         f"lambda = {lam}, 2l = {tl}")
    half = 0.5 * np.asarray(omega, dtype=float)
    pre = math.exp(0.5 * (log_factorial(tl - lam)
                          - log_factorial(tl + lam + 1)))
    dfac = 1.0
    for m in range(2 * lam, 1, -2):
        dfac *= m
    value = (dfac * math.sqrt(tl + 1.0) * pre
             * np.sin(half) ** lam * gegenbauer(lam + 1, tl - lam, np.cos(half)))
    if np.isscalar(omega) or np.asarray(omega).ndim == 0:
        return float(value)
    return value


def _assoc_legendre(lam, alpha, x):
    """P_lambda^alpha(x) with Condon-Shortley phase, alpha >= 0, vectorised."""
    # P_a^a = (-1)^a (2a-1)!! (1 - x^2)^(a/2), then upward recurrence in degree.
    paa = (-1.0) ** alpha * np.ones_like(x)
    if alpha > 0:
        dfac = 1.0
        for m in range(2 * alpha - 1, 1, -2):
            dfac *= m
        paa = (-1.0) ** alpha * dfac * (1.0 - x * x) ** (alpha / 2.0)
    if lam == alpha:
        return paa
    prev = paa
    cur = (2.0 * alpha + 1.0) * x * paa
    for deg in range(alpha + 2, lam + 1):
        prev, cur = cur, ((2.0 * deg - 1.0) * x * cur
                          - (deg + alpha - 1.0) * prev) / (deg - alpha)
    return cur


def mod_sph_harm(lam, alpha, theta, phi):
    """Modified spherical harmonic C_{lam alpha} = sqrt(4 pi/(2 lam+1)) Y_{lam alpha}.

    Condon-Shortley convention; C_00 = 1, C_10 = cos(theta).  Accepts numpy
    arrays for theta and phi.
    """
    if abs(alpha) > lam:
        raise ValueError(f"mod_sph_harm: |alpha| <= lambda required, got "
                         f"alpha = {alpha}, lambda = {lam}")
    a = abs(alpha)
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    norm = math.exp(0.5 * (log_factorial(lam - a) - log_factorial(lam + a)))
    value = norm * _assoc_legendre(lam, a, np.cos(theta)) * np.exp(1j * a * phi)
    if alpha < 0:
        value = (-1.0) ** a * np.conj(value)
    if value.ndim == 0:
        return complex(value)
    return value


def rotation_u(tl, tmu, tnu, omega, theta, phi):
    """Axis-angle rotation matrix element U^l_{mu nu}(omega, theta, phi).

    Expanded over generalised characters,

      U^l_{mu nu} = sum_lam (-i)^lam (2 lam+1)/(2l+1) C^{l nu}_{l mu, lam alf}
                    chi^l_lam(omega) C_{lam alf}(theta, phi),

    with alf = nu - mu.  For l = 1/2 this is the familiar
    cos(w/2) I - i sin(w/2) (n . sigma) with axis n(theta, phi), and the
    rank-1 elements reproduce the hyperspherical components of a 4-vector.
    """
    validate_jm(tl, tmu)
    validate_jm(tl, tnu)
    talpha = tnu - tmu
    alpha = talpha // 2
    total = 0.0 + 0.0j
    for lam in range(abs(alpha), tl + 1):
        coef = cgc3(tl, tmu, 2 * lam, talpha, tl, tnu)
        if coef == 0.0:
            continue
        total += ((-1j) ** lam * (2.0 * lam + 1.0) / (tl + 1.0) * coef
                  * gen_character(tl, lam, omega)
                  * mod_sph_harm(lam, alpha, theta, phi))
    return total
