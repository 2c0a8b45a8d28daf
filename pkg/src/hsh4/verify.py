"""Independent numerical oracles: quadrature on the 4-sphere.

Everything here deliberately avoids the analytic evaluation paths of the
sibling modules: harmonics are rebuilt from scipy's Gegenbauer and
spherical-harmonic routines, and expansion coefficients are recovered by
projection integrals rather than hypergeometric series.  Agreement between
the two routes is the package's primary self-check.
"""

import math

import numpy as np
from scipy.special import eval_gegenbauer, sph_harm_y

from .coupling import bipolar_plan
from .harmonics import c_flat_index, h_to_c_matrix

__all__ = [
    "QuadratureGrid", "build_grid", "family_matrix", "gram_matrix",
    "orthogonality_report", "project_multipole", "check_entry",
]

_S3_VOLUME = 2.0 * math.pi ** 2


class QuadratureGrid:
    """Product quadrature grid over S^3 in hyperangles (theta0, theta, phi).

    The three factors integrate the measure sin^2(theta0) dtheta0
    sin(theta) dtheta dphi: Gauss-Chebyshev (second kind) in cos(theta0),
    Gauss-Legendre in cos(theta), uniform trapezoid in phi.
    """

    def __init__(self, theta0, w0, theta, w1, phi, w2, exact_degree):
        self.theta0 = theta0
        self.w0 = w0
        self.theta = theta
        self.w1 = w1
        self.phi = phi
        self.w2 = w2
        self.exact_degree = exact_degree
        self.shape = (len(theta0), len(theta), len(phi))

    @property
    def size(self):
        return len(self.theta0) * len(self.theta) * len(self.phi)

    @property
    def weights(self):
        """Flat array of node weights (outer product order)."""
        return np.einsum("i,j,k->ijk", self.w0, self.w1, self.w2).ravel()

    @property
    def nodes(self):
        """Flat (N, 3) array of (theta0, theta, phi) triples."""
        t0, t, p = np.meshgrid(self.theta0, self.theta, self.phi,
                               indexing="ij")
        return np.column_stack([t0.ravel(), t.ravel(), p.ravel()])

    def vectors(self):
        """Flat (N, 4) array of unit vectors (x, y, z, z0)."""
        t0, t, p = np.meshgrid(self.theta0, self.theta, self.phi,
                               indexing="ij")
        s0 = np.sin(t0)
        return np.column_stack([
            (s0 * np.sin(t) * np.cos(p)).ravel(),
            (s0 * np.sin(t) * np.sin(p)).ravel(),
            (s0 * np.cos(t)).ravel(),
            np.cos(t0).ravel(),
        ])

    def integrate(self, values):
        """Integrate flat node values against the grid weights."""
        return np.sum(self.weights * np.asarray(values))


def build_grid(n0, n1, n2):
    """Product grid with n0 x n1 x n2 nodes; total weight is exactly 2 pi^2."""
    if min(n0, n1, n2) < 1:
        raise ValueError("node counts must be positive")
    k = np.arange(1, n0 + 1)
    x0 = np.cos(k * np.pi / (n0 + 1))
    w0 = np.pi / (n0 + 1) * np.sin(k * np.pi / (n0 + 1)) ** 2
    theta0 = np.arccos(x0)
    x1, w1 = np.polynomial.legendre.leggauss(n1)
    theta = np.arccos(x1)
    phi = 2.0 * np.pi * np.arange(n2) / n2
    w2 = np.full(n2, 2.0 * np.pi / n2)
    exact_degree = min(2 * n0 - 1, 2 * n1 - 1, n2 - 1)
    return QuadratureGrid(theta0, w0, theta, w1, phi, w2, exact_degree)


def _chi(j, lam, theta0):
    """Generalised character chi^{j/2}_lam(2 theta0) via scipy Gegenbauer."""
    dfac = float(math.prod(range(2 * lam, 0, -2))) or 1.0
    norm = dfac * math.sqrt(j + 1.0) * math.exp(
        0.5 * (math.lgamma(j - lam + 1) - math.lgamma(j + lam + 2)))
    return (norm * np.sin(theta0) ** lam
            * eval_gegenbauer(j - lam, lam + 1, np.cos(theta0)))


def c_harmonics_at(j, theta0, theta, phi):
    """All C_{j,lam,alpha} values at given angle arrays: shape ((j+1)^2, N)."""
    theta0 = np.asarray(theta0, dtype=float)
    out = np.empty(((j + 1) ** 2,) + theta0.shape, dtype=complex)
    for lam in range(j + 1):
        radial = ((-1j) ** lam * math.sqrt((2 * lam + 1.0) / (j + 1.0))
                  * _chi(j, lam, theta0))
        for alpha in range(-lam, lam + 1):
            ang = (math.sqrt(4.0 * np.pi / (2 * lam + 1))
                   * sph_harm_y(lam, alpha, theta, phi))
            out[c_flat_index(lam, alpha)] = radial * ang
    return out


def c_harmonics_at_vectors(j, vecs):
    """C-family values at an (N, 4) array of 4-vectors (any nonzero length)."""
    vecs = np.asarray(vecs, dtype=float)
    r = np.linalg.norm(vecs, axis=-1)
    z0 = np.clip(vecs[..., 3] / r, -1.0, 1.0)
    theta0 = np.arccos(z0)
    rho = np.linalg.norm(vecs[..., :3], axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        ct = np.where(rho > 0, vecs[..., 2] / np.where(rho > 0, rho, 1.0), 1.0)
    theta = np.arccos(np.clip(ct, -1.0, 1.0))
    phi = np.arctan2(vecs[..., 1], vecs[..., 0])
    return c_harmonics_at(j, theta0, theta, phi)


def family_matrix(family, j_max, grid):
    """Stacked harmonic values on the grid: rows over all (j, index), j <= j_max.

    Evaluation factorises over the product grid; the phi x theta part uses
    scipy spherical harmonics, the theta0 part scipy Gegenbauer polynomials.
    """
    n0, n1, n2 = grid.shape
    blocks = []
    t, p = np.meshgrid(grid.theta, grid.phi, indexing="ij")
    for j in range(j_max + 1):
        block = np.empty(((j + 1) ** 2, n0, n1 * n2), dtype=complex)
        for lam in range(j + 1):
            radial = ((-1j) ** lam * math.sqrt((2 * lam + 1.0) / (j + 1.0))
                      * _chi(j, lam, grid.theta0))
            for alpha in range(-lam, lam + 1):
                ang = (math.sqrt(4.0 * np.pi / (2 * lam + 1))
                       * sph_harm_y(lam, alpha, t, p)).ravel()
                block[c_flat_index(lam, alpha)] = radial[:, None] * ang[None, :]
        blocks.append(block.reshape((j + 1) ** 2, n0 * n1 * n2))
    full = np.vstack(blocks)
    if family == "c":
        return full
    if family == "h":
        out = np.empty_like(full)
        row = 0
        for j in range(j_max + 1):
            d = (j + 1) ** 2
            T = h_to_c_matrix(j)
            out[row:row + d] = T.T @ full[row:row + d]
            row += d
        return out
    raise ValueError(f"family must be 'h' or 'c', got {family!r}")


def _h_blockdiag_transform(G, j_max):
    """Conjugate a C-family Gram blockwise into the H family."""
    out = np.empty_like(G)
    offs = [0]
    for j in range(j_max + 1):
        offs.append(offs[-1] + (j + 1) ** 2)
    for j in range(j_max + 1):
        Tj = h_to_c_matrix(j)
        for jp in range(j_max + 1):
            Tp = h_to_c_matrix(jp)
            out[offs[j]:offs[j + 1], offs[jp]:offs[jp + 1]] = (
                Tj.T @ G[offs[j]:offs[j + 1], offs[jp]:offs[jp + 1]] @ Tp)
    return out


def gram_matrix(family, j_max, grid):
    """Pairwise overlap integrals of all harmonics with j <= j_max.

    The Gram accumulates one theta0 slice at a time so the full value
    matrix is never materialised; the H-family result is the blockwise
    orthogonal transform of the C-family one.
    """
    n0, n1, n2 = grid.shape
    dim = sum((j + 1) ** 2 for j in range(j_max + 1))
    t, p = np.meshgrid(grid.theta, grid.phi, indexing="ij")
    ang = np.empty(((j_max + 1) ** 2, n1 * n2), dtype=complex)
    for lam in range(j_max + 1):
        for alpha in range(-lam, lam + 1):
            ang[c_flat_index(lam, alpha)] = (
                math.sqrt(4.0 * np.pi / (2 * lam + 1))
                * sph_harm_y(lam, alpha, t, p)).ravel()
    wang = np.einsum("j,k->jk", grid.w1, grid.w2).ravel()
    radial = np.empty((j_max + 1, j_max + 1, n0))
    for j in range(j_max + 1):
        for lam in range(j + 1):
            radial[j, lam] = (math.sqrt((2 * lam + 1.0) / (j + 1.0))
                              * _chi(j, lam, grid.theta0))
    G = np.zeros((dim, dim), dtype=complex)
    V = np.empty((dim, n1 * n2), dtype=complex)
    for i in range(n0):
        row = 0
        for j in range(j_max + 1):
            for lam in range(j + 1):
                pre = (-1j) ** lam * radial[j, lam, i]
                lo, hi = c_flat_index(lam, -lam), c_flat_index(lam, lam)
                V[row + lo:row + hi + 1] = pre * ang[lo:hi + 1]
            row += (j + 1) ** 2
        G += grid.w0[i] * ((V * wang) @ V.conj().T)
    if family == "c":
        return G
    if family == "h":
        return _h_blockdiag_transform(G, j_max)
    raise ValueError(f"family must be 'h' or 'c', got {family!r}")


def check_entry(check, params, expected, observed, tol):
    """One serializable verification record."""
    abs_err = abs(expected - observed)
    rel_err = abs_err / abs(expected) if expected else abs_err
    return {
        "check": check,
        "params": params,
        "expected": expected,
        "observed": observed,
        "abs_err": abs_err,
        "rel_err": rel_err,
        "pass": abs_err <= tol,
    }


def orthogonality_report(j_max, grid, tol=1e-10):
    """Overlap matrices of both families against 2 pi^2/(j+1) deltas.

    Returns (checks, grams): a list of JSON-ready check records and the raw
    Gram matrices per family.
    """
    sizes = [(j + 1) ** 2 for j in range(j_max + 1)]
    diag_expected = np.concatenate(
        [np.full(d, _S3_VOLUME / (j + 1)) for j, d in enumerate(sizes)])
    checks, grams = [], {}
    for family in ("c", "h"):
        G = gram_matrix(family, j_max, grid)
        grams[family] = G
        diag = np.real(np.diag(G))
        off = G - np.diag(np.diag(G))
        checks.append(check_entry(
            f"orthogonality-diagonal-{family}",
            {"j_max": j_max, "grid": list(grid.shape)},
            0.0, float(np.max(np.abs(diag - diag_expected))), tol))
        checks.append(check_entry(
            f"orthogonality-offdiagonal-{family}",
            {"j_max": j_max, "grid": list(grid.shape)},
            0.0, float(np.max(np.abs(off))), tol))
    return checks, grams


def _random_so4(seed):
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(4, 4)))
    q *= np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def _kernel_component(n, j, r2sq, z0):
    """r^n C_{j,0,0}(r-hat) from squared lengths and fourth components.

    For lam = 0 the harmonic is the Chebyshev polynomial of the second
    kind: C_{j,0,0} = U_j(cos theta0)/(j+1)^(1/2), evaluated by recurrence
    to keep the inner double-quadrature loop free of transcendentals.
    """
    r = np.sqrt(r2sq)
    c = z0 / r
    u_prev, u = np.ones_like(c), 2.0 * c
    if j == 0:
        char = u_prev
    else:
        for _ in range(j - 1):
            u_prev, u = u, 2.0 * c * u - u_prev
        char = u
    return r2sq ** (0.5 * n) * char / math.sqrt(j + 1.0)


_PROJ_CACHE = {}


def _projection_moments(n, j, r1, r2, grid, l_cap, seed, chunk=256):
    """Moment matrix M[(l,lam1,a1),(lp,lam2,a2)] of the kernel r^n C_{j,0,0}.

    M holds double-sphere integrals of conj(C C) against the kernel at
    r = r1 x1 + r2 x2, with the second grid randomly rotated (seeded), plus
    the two single-sphere Gram matrices used for normalization.
    """
    key = (n, j, r1, r2, grid.shape, l_cap, seed)
    if key in _PROJ_CACHE:
        return _PROJ_CACHE[key]
    x1 = grid.vectors()
    x2 = grid.vectors() @ _random_so4(seed).T
    w = grid.weights
    V1 = np.vstack([c_harmonics_at_vectors(l, x1) for l in range(l_cap + 1)])
    V2 = np.vstack([c_harmonics_at_vectors(l, x2) for l in range(l_cap + 1)])
    V1w = V1.conj() * w
    V2w_re = np.ascontiguousarray(np.real(V2.conj() * w).T)
    V2w_im = np.ascontiguousarray(np.imag(V2.conj() * w).T)
    M = np.zeros((V1.shape[0], V2.shape[0]), dtype=complex)
    # r = r1 x1 + r2 x2; only |r|^2 and the fourth component are needed,
    # so the pairwise geometry reduces to x1 . x2 dot products.
    for s in range(0, len(x1), chunk):
        dots = x1[s:s + chunk] @ x2.T
        r2sq = r1 * r1 + r2 * r2 + 2.0 * r1 * r2 * dots
        z0 = r1 * x1[s:s + chunk, 3:4] + r2 * x2[:, 3][None, :]
        F = _kernel_component(n, j, r2sq, z0)
        M += V1w[:, s:s + chunk] @ (F @ V2w_re + 1j * (F @ V2w_im))
    G1 = (V1 * w) @ V1.conj().T
    G2 = (V2 * w) @ V2.conj().T
    result = (M, G1, G2)
    _PROJ_CACHE[key] = result
    return result


def _block(l):
    return l * (l + 1) * (2 * l + 1) // 6  # sum of (k+1)^2, k < l


def _project_one(n, j, r1, r2, l, lp, grid, l_cap, seed):
    i1, i2, iout, coeff = bipolar_plan("c", l, lp, j)
    sel = iout == c_flat_index(0, 0)
    i1, i2, coeff = i1[sel], i2[sel], coeff[sel]
    if len(coeff) == 0:
        return 0.0
    M, G1, G2 = _projection_moments(n, j, r1, r2, grid, l_cap, seed)
    o1, o2 = _block(l), _block(lp)
    num = np.einsum("t,t->", coeff, M[o1 + i1, o2 + i2])
    den = np.einsum("s,t,st,st->", coeff, coeff,
                    G1[np.ix_(o1 + i1, o1 + i1)],
                    G2[np.ix_(o2 + i2, o2 + i2)])
    return float(np.real(num / den))


def project_multipole(n, j, r1, r2, l, lp, grid=None, seeds=(7, 19),
                      agree_tol=1e-8, l_cap=5):
    """Recover B^{(n j)}_{l lp} by double quadrature, independent of b_coeff.

    The kernel r^n C_j(r-hat), r = r1 x1 + r2 x2, is projected onto the
    conjugated bipolar harmonic and normalized by the numerically computed
    bipolar norm.  The second sphere's grid is randomly rotated; the two
    seeds must agree to agree_tol or a RuntimeError flags the grid as too
    coarse.
    """
    if r1 >= r2:
        raise ValueError("projection requires r1 < r2")
    if grid is None:
        grid = build_grid(18, 18, 37)
    l_cap = max(l, lp, l_cap)
    vals = [_project_one(n, j, r1, r2, l, lp, grid, l_cap, s) for s in seeds]
    spread = max(vals) - min(vals)
    scale = max(1.0, max(abs(v) for v in vals))
    if spread > agree_tol * scale:
        raise RuntimeError(
            f"projection seeds disagree by {spread:.3e}; grid too coarse")
    return float(np.mean(vals))
