"""O(4) coupling coefficients and bipolar harmonics.

H-type Clebsch-Gordan coefficients factor into products of two 3D CGC;
C-type ones contract a 3D CGC with a 9j symbol.  The appendix closed forms
are provided as independent cross-checks, together with the 4D 9j
recoupling coefficient and CGC-contracted bipolar harmonics.

Coefficients are memoised; the caches only ever hold pure-function results
so concurrent lookup cannot change observable values.
"""

import math
from functools import lru_cache

import numpy as np

from .angular import cgc3, wigner6j, wigner9j
from .harmonics import (c_components, c_flat_index, h_components,
                        h_flat_index)
from .special import log_factorial

__all__ = [
    "cgc4_h",
    "cgc4_c",
    "cgc4_c_closed",
    "ninej4",
    "ninej4_closed",
    "bipolar",
    "bipolar_values",
    "bipolar_plan",
    "linearize_product",
]


def rank_triangle_ok(j1, j2, j):
    """O(4) triangle rule: |j1-j2| <= j <= j1+j2 with j1+j2+j even."""
    return abs(j1 - j2) <= j <= j1 + j2 and (j1 + j2 + j) % 2 == 0


@lru_cache(maxsize=None)
def cgc4_h(j1, tmu1, tnu1, j2, tmu2, tnu2, j, tmu, tnu):
    """H-type O(4) CGC: product of two 3D CGC coupling the mu and nu projections."""
    if not rank_triangle_ok(j1, j2, j):
        return 0.0
    return (cgc3(j1, tmu1, j2, tmu2, j, tmu)
            * cgc3(j1, tnu1, j2, tnu2, j, tnu))


@lru_cache(maxsize=None)
def _cgc4_c_reduced(j1, j2, j, lam1, lam2, lam):
    """Projection-independent part of the C-type CGC."""
    return ((j + 1.0) * math.sqrt((2.0 * lam1 + 1.0) * (2.0 * lam2 + 1.0))
            * wigner9j(j1, j2, j, j1, j2, j, 2 * lam1, 2 * lam2, 2 * lam))


@lru_cache(maxsize=None)
def cgc4_c(j1, lam1, alf1, j2, lam2, alf2, j, lam, alf):
    """C-type O(4) CGC C^{j lam alf}_{j1 lam1 alf1; j2 lam2 alf2}.

    (j+1) sqrt((2 lam1+1)(2 lam2+1)) C^{lam alf}_{lam1 alf1, lam2 alf2}
    x 9j{j1/2 j2/2 j/2; j1/2 j2/2 j/2; lam1 lam2 lam}.  Zero outside the
    triangle/parity selection rules.
    """
    if not rank_triangle_ok(j1, j2, j):
        return 0.0
    if not (0 <= lam1 <= j1 and 0 <= lam2 <= j2 and 0 <= lam <= j):
        return 0.0
    cg = cgc3(2 * lam1, 2 * alf1, 2 * lam2, 2 * alf2, 2 * lam, 2 * alf)
    if cg == 0.0:
        return 0.0
    return _cgc4_c_reduced(j1, j2, j, lam1, lam2, lam) * cg


def ninej4(a, b, c, d, e, f, g, h, k):
    """4D 9j recoupling coefficient: the squared halved-argument 3D 9j symbol."""
    return wigner9j(a, b, c, d, e, f, g, h, k) ** 2


def _inv_gamma(x):
    """1/Gamma(x), with the zero at nonpositive integer x kept exact."""
    if x <= 0 and x == int(x):
        return 0.0
    return 1.0 / math.gamma(x)


def ninej4_closed(k, l, lp, j):
    """Closed form of the 4D 9j pattern [k k 0; l-k j-l+k j; l l' j]."""
    if k < 0 or not 0 <= k <= l or j - l + k < 0:
        raise ValueError("invalid pattern arguments")
    if (j + l + lp) % 2 != 0 or lp < 0:
        return 0.0
    pre = math.exp(log_factorial(k) + log_factorial(j - l + k)
                   - log_factorial(l + 1) - log_factorial(j + 1)) \
        / ((k + 1.0) * (j + 1.0))
    num = (math.gamma((j + l + lp) / 2 + 2)
           * math.gamma((j + l - lp) / 2 + 1)) if (j + l - lp) / 2 + 1 > 0 else None
    if num is None:
        return 0.0
    return (pre * num
            * _inv_gamma((j - l - lp) / 2 + k + 1)
            * _inv_gamma((j - l + lp) / 2 + k + 2))


def _require(cond, msg):
    if not cond:
        raise ValueError(msg)


def cgc4_c_closed(case, j1, lam1, alf1, j2, lam2, alf2, j, lam, alf):
    """Appendix closed forms for the C-type CGC.

    case selects the pattern:
      'stretched'                j = j1 + j2, general projections
      'stretched_j1_zero_lambda' j = j1 + j2 with lam1 = alf1 = 0
      'diff'                     j = j2 - j1
      'six_j_reduction'          lam1 = alf1 = 0, arbitrary j
      'spin1'                    j1 = 1, lam1 = alf1 = 0, j = j2 -+ 1
    A query that does not match the requested pattern is rejected.
    """
    if case == "stretched":
        _require(j == j1 + j2, "'stretched' needs j = j1 + j2")
        cg_par = cgc3(2 * lam1, 0, 2 * lam2, 0, 2 * lam, 0)
        cg = cgc3(2 * lam1, 2 * alf1, 2 * lam2, 2 * alf2, 2 * lam, 2 * alf)
        if cg_par == 0.0 or cg == 0.0:
            return 0.0
        log_ratio = (log_factorial(j1) + log_factorial(j2)
                     - log_factorial(j1 + j2))
        log_root = 0.5 * (log_factorial(j1 + j2 + lam + 1)
                          + log_factorial(j1 + j2 - lam)
                          + math.log(2.0 * lam1 + 1.0)
                          + math.log(2.0 * lam2 + 1.0)
                          - log_factorial(j1 + lam1 + 1)
                          - log_factorial(j1 - lam1)
                          - log_factorial(j2 + lam2 + 1)
                          - log_factorial(j2 - lam2)
                          - math.log(2.0 * lam + 1.0))
        return cg_par * cg * math.exp(log_ratio + log_root)

    if case == "stretched_j1_zero_lambda":
        _require(j == j1 + j2 and lam1 == 0 and alf1 == 0,
                 "'stretched_j1_zero_lambda' needs j = j1 + j2, lam1 = alf1 = 0")
        if lam != lam2 or alf != alf2:
            return 0.0
        log_val = (log_factorial(j2) - log_factorial(j1 + j2)
                   + 0.5 * (log_factorial(j1 + j2 + lam + 1)
                            + log_factorial(j1 + j2 - lam)
                            - math.log(j1 + 1.0)
                            - log_factorial(j2 + lam + 1)
                            - log_factorial(j2 - lam)))
        return math.exp(log_val)

    if case == "diff":
        _require(j == j2 - j1, "'diff' needs j = j2 - j1")
        cg_par = cgc3(2 * lam, 0, 2 * lam1, 0, 2 * lam2, 0)
        cg = cgc3(2 * lam1, 2 * alf1, 2 * lam2, 2 * alf2, 2 * lam, 2 * alf)
        if cg_par == 0.0 or cg == 0.0:
            return 0.0
        log_ratio = (log_factorial(j1) + log_factorial(j2 - j1 + 1)
                     - log_factorial(j2 + 1))
        log_root = 0.5 * (log_factorial(j2 + lam2 + 1)
                          + log_factorial(j2 - lam2)
                          + math.log(2.0 * lam1 + 1.0)
                          - log_factorial(j1 + lam1 + 1)
                          - log_factorial(j1 - lam1)
                          - log_factorial(j2 - j1 + lam + 1)
                          - log_factorial(j2 - j1 - lam))
        return cg_par * cg * math.exp(log_ratio + log_root)

    if case == "six_j_reduction":
        _require(lam1 == 0 and alf1 == 0,
                 "'six_j_reduction' needs lam1 = alf1 = 0")
        if lam != lam2 or alf != alf2 or not rank_triangle_ok(j1, j2, j):
            return 0.0
        phase = (-1.0) ** (lam + (j1 + j2 + j) // 2)
        return (phase * (j + 1.0) / math.sqrt(j1 + 1.0)
                * wigner6j(2 * lam, j, j, j1, j2, j2))

    if case == "spin1":
        _require(j1 == 1 and lam1 == 0 and alf1 == 0 and abs(j - j2) == 1,
                 "'spin1' needs j1 = 1, lam1 = alf1 = 0, j = j2 -+ 1")
        if lam != lam2 or alf != alf2:
            return 0.0
        if j == j2 - 1:
            return (math.sqrt((j2 - lam) * (j2 + lam + 1.0))
                    / ((j2 + 1.0) * math.sqrt(2.0)))
        return (math.sqrt((j2 - lam + 1.0) * (j2 + lam + 2.0))
                / ((j2 + 1.0) * math.sqrt(2.0)))

    raise ValueError(f"unknown closed-form case {case!r}")


@lru_cache(maxsize=None)
def bipolar_plan(family, j1, j2, j):
    """Sparse contraction plan for {X_{j1}(a) (x) X_{j2}(b)}_j.

    Returns (i1, i2, iout, coeff) integer/float arrays over all nonzero
    CGC, with i1, i2, iout flat component indices of the two inner and the
    outer harmonic arrays.
    """
    i1s, i2s, iouts, coeffs = [], [], [], []
    if family == "h":
        for tmu1 in range(-j1, j1 + 1, 2):
            for tnu1 in range(-j1, j1 + 1, 2):
                for tmu2 in range(-j2, j2 + 1, 2):
                    for tnu2 in range(-j2, j2 + 1, 2):
                        tmu, tnu = tmu1 + tmu2, tnu1 + tnu2
                        if abs(tmu) > j or abs(tnu) > j:
                            continue
                        c = cgc4_h(j1, tmu1, tnu1, j2, tmu2, tnu2,
                                   j, tmu, tnu)
                        if c == 0.0:
                            continue
                        i1s.append(h_flat_index(j1, tmu1, tnu1))
                        i2s.append(h_flat_index(j2, tmu2, tnu2))
                        iouts.append(h_flat_index(j, tmu, tnu))
                        coeffs.append(c)
    elif family == "c":
        for lam1 in range(j1 + 1):
            for lam2 in range(j2 + 1):
                for lam in range(abs(lam1 - lam2),
                                 min(lam1 + lam2, j) + 1, 2):
                    for alf in range(-lam, lam + 1):
                        for alf1 in range(max(-lam1, alf - lam2),
                                          min(lam1, alf + lam2) + 1):
                            alf2 = alf - alf1
                            c = cgc4_c(j1, lam1, alf1, j2, lam2, alf2,
                                       j, lam, alf)
                            if c == 0.0:
                                continue
                            i1s.append(c_flat_index(lam1, alf1))
                            i2s.append(c_flat_index(lam2, alf2))
                            iouts.append(c_flat_index(lam, alf))
                            coeffs.append(c)
    else:
        raise ValueError(f"family must be 'h' or 'c', got {family!r}")
    return (np.array(i1s, dtype=np.intp), np.array(i2s, dtype=np.intp),
            np.array(iouts, dtype=np.intp), np.array(coeffs))


def bipolar_values(family, j1, j2, j, comps1, comps2):
    """All outer components of {X_{j1} (x) X_{j2}}_j from component arrays.

    comps1/comps2 may carry trailing axes (e.g. one column per evaluation
    point); the output has shape ((j+1)**2, *trailing).
    """
    comps1 = np.asarray(comps1)
    comps2 = np.asarray(comps2)
    trailing = comps1.shape[1:]
    if not rank_triangle_ok(j1, j2, j):
        return np.zeros(((j + 1) ** 2,) + trailing, dtype=complex)
    i1, i2, iout, coeff = bipolar_plan(family, j1, j2, j)
    out = np.zeros(((j + 1) ** 2,) + trailing, dtype=complex)
    if len(coeff):
        c = coeff.reshape((-1,) + (1,) * len(trailing))
        np.add.at(out, iout, c * comps1[i1] * comps2[i2])
    return out


def bipolar(family, j1, j2, j, a, b):
    """Bipolar harmonic component array {X_{j1}(a-hat) (x) X_{j2}(b-hat)}_j."""
    if family == "h":
        comps1, comps2 = h_components(j1, a), h_components(j2, b)
    elif family == "c":
        comps1, comps2 = c_components(j1, a), c_components(j2, b)
    else:
        raise ValueError(f"family must be 'h' or 'c', got {family!r}")
    return bipolar_values(family, j1, j2, j, comps1, comps2)


def linearize_product(family, j1, idx1, j2, idx2, v):
    """Terms of the product expansion X_{j1,idx1} X_{j2,idx2} at v-hat.

    idx pairs are (2mu, 2nu) for the H family and (lam, alpha) for the C
    family.  Returns a list of (j, idx, coefficient, harmonic_value); the
    sum of coefficient * harmonic_value reproduces the pointwise product.
    """
    terms = []
    for j in range(abs(j1 - j2), j1 + j2 + 1, 2):
        if family == "h":
            tmu = idx1[0] + idx2[0]
            tnu = idx1[1] + idx2[1]
            if abs(tmu) > j or abs(tnu) > j:
                continue
            c = cgc4_h(j1, idx1[0], idx1[1], j2, idx2[0], idx2[1],
                       j, tmu, tnu)
            if c != 0.0:
                from .harmonics import hsh_h
                terms.append((j, (tmu, tnu), c, hsh_h(j, tmu, tnu, v)))
        elif family == "c":
            alf = idx1[1] + idx2[1]
            for lam in range(abs(alf), j + 1):
                c = cgc4_c(j1, idx1[0], idx1[1], j2, idx2[0], idx2[1],
                           j, lam, alf)
                if c != 0.0:
                    from .harmonics import hsh_c
                    terms.append((j, (lam, alf), c, hsh_c(j, lam, alf, v)))
        else:
            raise ValueError(f"family must be 'h' or 'c', got {family!r}")
    return terms
