"""Four-dimensional geometry and hyperspherical harmonics.

Coordinates on R^4, hyperspherical components of a 4-vector, the
parabolic-type (H) and spherical-type (C) harmonic families, the unitary
basis change between them, scalar products and unit-normalised harmonics.

A 4-vector is any length-4 sequence (x, y, z, z0).  Harmonic component
arrays are indexed row-major: H_j over ((2 mu + j)/2, (2 nu + j)/2) and
C_j over the flat index lam^2 + lam + alpha.
"""

import math
from dataclasses import dataclass

import numpy as np

from .angular import cgc3, gen_character, mod_sph_harm, rotation_u, validate_jm
from .special import gegenbauer

__all__ = [
    "HyperAngles",
    "to_hyperangles",
    "from_hyperangles",
    "hyp_components",
    "hsh_h",
    "hsh_c",
    "hsh_y",
    "h_components",
    "c_components",
    "c_from_h",
    "h_from_c",
    "scalar_product_h",
    "scalar_product_c",
    "c_flat_index",
    "h_flat_index",
]


@dataclass(frozen=True)
class HyperAngles:
    """Hyperspherical coordinates (r, theta0, theta, phi) of a 4-vector."""

    r: float
    theta0: float
    theta: float
    phi: float


def to_hyperangles(v):
    """Hyperspherical coordinates of the 4-vector v = (x, y, z, z0).

    theta0 = arccos(z0/r), theta = atan2(hypot(x, y), z), phi = atan2(y, x)
    mapped to [0, 2 pi).  The zero vector maps to all-zero angles.
    """
    x, y, z, z0 = (float(c) for c in v)
    r = math.sqrt(x * x + y * y + z * z + z0 * z0)
    if r == 0.0:
        return HyperAngles(0.0, 0.0, 0.0, 0.0)
    theta0 = math.acos(max(-1.0, min(1.0, z0 / r)))
    theta = math.atan2(math.hypot(x, y), z)
    phi = math.atan2(y, x) % (2.0 * math.pi)
    return HyperAngles(r, theta0, theta, phi)


def from_hyperangles(h):
    """Cartesian components (x, y, z, z0) from hyperspherical coordinates."""
    s0 = math.sin(h.theta0)
    return np.array([
        h.r * s0 * math.sin(h.theta) * math.cos(h.phi),
        h.r * s0 * math.sin(h.theta) * math.sin(h.phi),
        h.r * s0 * math.cos(h.theta),
        h.r * math.cos(h.theta0),
    ])


def hyp_components(v):
    """Hyperspherical components r_{mu nu} of v as a 2x2 complex array.

    Rows/columns are ordered mu, nu = -1/2, +1/2.  The components satisfy
    r*_{mu nu} = (-1)^(mu-nu) r_{-mu,-nu} and reproduce r^2 under the
    invariant bilinear form.
    """
    x, y, z, z0 = (float(c) for c in v)
    s = 1.0 / math.sqrt(2.0)
    return np.array([
        [s * (z0 + 1j * z), -1j * s * (x + 1j * y)],
        [-1j * s * (x - 1j * y), s * (z0 - 1j * z)],
    ])


def _direction(v):
    h = to_hyperangles(v)
    if h.r == 0.0:
        raise ValueError("zero vector has no direction")
    return h


def hsh_h(j, tmu, tnu, v):
    """Parabolic-type harmonic H_{j, mu, nu}(v-hat) = U^{j/2}_{mu nu}(2 theta0, theta, phi)."""
    validate_jm(j, tmu)
    validate_jm(j, tnu)
    h = _direction(v)
    return rotation_u(j, tmu, tnu, 2.0 * h.theta0, h.theta, h.phi)


def hsh_c(j, lam, alpha, v):
    """Spherical-type harmonic C_{j, lam, alpha}(v-hat).

    C_{j,lam,alf} = (-i)^lam sqrt((2 lam+1)/(j+1)) chi^{j/2}_lam(2 theta0)
    C_{lam alf}(theta, phi).
    """
    if not 0 <= lam <= j or abs(alpha) > lam:
        raise ValueError(f"invalid C-harmonic index (j, lam, alpha) = "
                         f"({j}, {lam}, {alpha})")
    h = _direction(v)
    return ((-1j) ** lam * math.sqrt((2.0 * lam + 1.0) / (j + 1.0))
            * gen_character(j, lam, 2.0 * h.theta0)
            * mod_sph_harm(lam, alpha, h.theta, h.phi))


def hsh_y(j, lam, alpha, v):
    """Unit-normalised harmonic Y = ((-1)^(j+lam)/pi) sqrt((j+1)/2) C_{j,lam,alpha}."""
    return ((-1.0) ** (j + lam) / math.pi * math.sqrt((j + 1.0) / 2.0)
            * hsh_c(j, lam, alpha, v))


def h_flat_index(j, tmu, tnu):
    """Row-major position of (mu, nu) in a rank-j H-component array."""
    return ((tmu + j) // 2) * (j + 1) + (tnu + j) // 2


def c_flat_index(lam, alpha):
    """Position of (lam, alpha) in a flat C-component array: lam^2 + lam + alpha."""
    return lam * lam + lam + alpha


def h_components(j, v):
    """All (j+1)^2 H-harmonic values at v-hat, flat row-major over (mu, nu)."""
    out = np.empty((j + 1) ** 2, dtype=complex)
    for tmu in range(-j, j + 1, 2):
        for tnu in range(-j, j + 1, 2):
            out[h_flat_index(j, tmu, tnu)] = hsh_h(j, tmu, tnu, v)
    return out


def c_components(j, v):
    """All (j+1)^2 C-harmonic values at v-hat, flat over lam^2 + lam + alpha."""
    out = np.empty((j + 1) ** 2, dtype=complex)
    for lam in range(j + 1):
        for alpha in range(-lam, lam + 1):
            out[c_flat_index(lam, alpha)] = hsh_c(j, lam, alpha, v)
    return out


def _h_to_c_matrix(j):
    """Unitary map T with C = T H over the flat component orderings.

    C_{j,lam,alf} = sqrt((2 lam+1)/(j+1))
                    sum_{mu nu} C^{(j/2) nu}_{(j/2) mu, lam alf} H_{j, mu, nu},
    with alf = nu - mu fixed by the CGC selection rule.  This index reading
    is the one under which the map agrees with the direct evaluation of
    C-harmonics.
    """
    n = (j + 1) ** 2
    t = np.zeros((n, n))
    for lam in range(j + 1):
        pre = math.sqrt((2.0 * lam + 1.0) / (j + 1.0))
        for alpha in range(-lam, lam + 1):
            row = c_flat_index(lam, alpha)
            for tmu in range(-j, j + 1, 2):
                tnu = tmu + 2 * alpha
                if abs(tnu) > j:
                    continue
                t[row, h_flat_index(j, tmu, tnu)] = pre * cgc3(
                    j, tmu, 2 * lam, 2 * alpha, j, tnu)
    return t


_H_TO_C_CACHE = {}


def h_to_c_matrix(j):
    if j not in _H_TO_C_CACHE:
        _H_TO_C_CACHE[j] = _h_to_c_matrix(j)
    return _H_TO_C_CACHE[j]


def c_from_h(j, h_values):
    """C-component array from the H-component array of the same direction."""
    return h_to_c_matrix(j) @ np.asarray(h_values)


def h_from_c(j, c_values):
    """H-component array from the C-component array (inverse of c_from_h)."""
    return h_to_c_matrix(j).T @ np.asarray(c_values)


def scalar_product_h(j, a, b):
    """(H_j(a-hat) . H_j(b-hat)) = sum (-1)^(mu-nu) H_{j mu nu}(a) H_{j,-mu,-nu}(b)."""
    ha = h_components(j, a)
    hb = h_components(j, b)
    total = 0.0 + 0.0j
    for tmu in range(-j, j + 1, 2):
        for tnu in range(-j, j + 1, 2):
            total += ((-1.0) ** ((tmu - tnu) // 2)
                      * ha[h_flat_index(j, tmu, tnu)]
                      * hb[h_flat_index(j, -tmu, -tnu)])
    return float(total.real)


def scalar_product_c(j, a, b):
    """(C_j(a-hat) . C_j(b-hat)) = sum (-1)^(lam+alf) C_{j lam alf}(a) C_{j lam -alf}(b).

    Equals the Gegenbauer polynomial C^1_j(cos gamma) of the 4D angle
    between a and b.
    """
    ca = c_components(j, a)
    cb = c_components(j, b)
    total = 0.0 + 0.0j
    for lam in range(j + 1):
        for alpha in range(-lam, lam + 1):
            total += ((-1.0) ** (lam + alpha)
                      * ca[c_flat_index(lam, alpha)]
                      * cb[c_flat_index(lam, -alpha)])
    return float(total.real)


def cos4(a, b):
    """Cosine of the 4D angle between two nonzero 4-vectors."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise ValueError("zero vector has no direction")
    return float(np.dot(a, b) / (na * nb))
