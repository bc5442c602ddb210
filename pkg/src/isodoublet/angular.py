"""Wigner rotation functions, their recursion identities, and exact sphere quadrature.

Convention
----------
The full rotation function with the third Euler angle fixed to zero is

    D^j_{m,sigma}(phi, theta, 0) = exp(-i m phi) d^j_{m,sigma}(theta)

where d^j_{m,sigma} is evaluated from the explicit factorial sum

    d^j_{m,s}(b) = sqrt[(j+m)!(j-m)!(j+s)!(j-s)!]
                   * sum_k (-1)^(m-s+k)
                     cos(b/2)^(2j-2k+s-m) sin(b/2)^(m-s+2k)
                     / [(j+s-k)! k! (m-s+k)! (j-m-k)!].

This is the unique phase convention under which the two ladder identities
implemented in :func:`recursion_residuals` hold with the signs used here;
every discrete-operator phase elsewhere in the package is pinned to it.

Half-integer indices are supported throughout; an index triple is valid when
|m| <= j, |sigma| <= j and both j-m and j-sigma are integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "AngularIndex",
    "SphereGrid",
    "wigner_d",
    "wigner_d_dbeta",
    "wigner_D",
    "recursion_residuals",
    "parity_point",
    "antipodal_phase",
    "make_sphere_grid",
]


class AngularDomainError(ValueError):
    """Raised for an index triple outside the representation."""


def _doubled(x: float, name: str) -> int:
    v = 2.0 * x
    n = round(v)
    if abs(v - n) > 1e-9:
        raise AngularDomainError(f"{name}={x} is not a half-integer")
    return int(n)


@dataclass(frozen=True)
class AngularIndex:
    """Index triple (j, m, sigma) of a rotation-function factor.

    j is a non-negative half-integer; m and sigma are half-integers congruent
    to j mod 1 with |m| <= j and |sigma| <= j.
    """

    j: float
    m: float
    sigma: float

    def __post_init__(self):
        jj = _doubled(self.j, "j")
        mm = _doubled(self.m, "m")
        ss = _doubled(self.sigma, "sigma")
        if jj < 0:
            raise AngularDomainError(f"j={self.j} must be non-negative")
        if abs(mm) > jj or abs(ss) > jj:
            raise AngularDomainError(
                f"|m|,|sigma| must not exceed j (got j={self.j}, m={self.m}, sigma={self.sigma})"
            )
        if (jj - mm) % 2 or (jj - ss) % 2:
            raise AngularDomainError(
                f"m and sigma must be congruent to j mod 1 (got j={self.j}, m={self.m}, sigma={self.sigma})"
            )

    @property
    def doubled(self) -> tuple[int, int, int]:
        return _doubled(self.j, "j"), _doubled(self.m, "m"), _doubled(self.sigma, "sigma")


@lru_cache(maxsize=None)
def _d_terms(jj: int, mm: int, ss: int) -> tuple[tuple[float, int, int], ...]:
    """Factorial-sum terms for doubled indices: (coefficient, cos-power, sin-power).

    Powers are in the half angle; exact integer factorials keep j <= 10 at
    full double precision.
    """
    jpm = (jj + mm) // 2
    jmm = (jj - mm) // 2
    jps = (jj + ss) // 2
    jms = (jj - ss) // 2
    pref = math.sqrt(
        math.factorial(jpm) * math.factorial(jmm) * math.factorial(jps) * math.factorial(jms)
    )
    mms = (mm - ss) // 2  # m - sigma, an integer
    out = []
    for k in range(max(0, -mms), min(jps, jmm) + 1):
        denom = (
            math.factorial(jps - k)
            * math.factorial(k)
            * math.factorial(mms + k)
            * math.factorial(jmm - k)
        )
        coef = (-1.0) ** (mms + k) * pref / denom
        # powers of cos(b/2) and sin(b/2): 2j - 2k + (sigma - m) and (m - sigma) + 2k
        out.append((coef, jj - 2 * k - mms, mms + 2 * k))
    return tuple(out)


def wigner_d(idx: AngularIndex, beta):
    """Reduced rotation function d^j_{m,sigma}(beta); beta may be an array."""
    jj, mm, ss = idx.doubled
    beta = np.asarray(beta, dtype=float)
    c = np.cos(beta / 2.0)
    s = np.sin(beta / 2.0)
    val = np.zeros_like(beta)
    for coef, p_cos, p_sin in _d_terms(jj, mm, ss):
        val = val + coef * c**p_cos * s**p_sin
    return val if val.ndim else float(val)


def wigner_d_dbeta(idx: AngularIndex, beta):
    """Analytic d/dbeta of the factorial sum (no finite differencing)."""
    jj, mm, ss = idx.doubled
    beta = np.asarray(beta, dtype=float)
    c = np.cos(beta / 2.0)
    s = np.sin(beta / 2.0)
    val = np.zeros_like(beta)
    for coef, p_cos, p_sin in _d_terms(jj, mm, ss):
        term = np.zeros_like(beta)
        if p_sin > 0:
            term = term + 0.5 * p_sin * c**(p_cos + 1) * s**(p_sin - 1)
        if p_cos > 0:
            term = term - 0.5 * p_cos * c**(p_cos - 1) * s**(p_sin + 1)
        val = val + coef * term
    return val if val.ndim else float(val)


def wigner_D(idx: AngularIndex, phi, theta):
    """D^j_{m,sigma}(phi, theta, 0) = exp(-i m phi) d^j_{m,sigma}(theta)."""
    phi = np.asarray(phi, dtype=float)
    out = np.exp(-1j * idx.m * phi) * wigner_d(idx, theta)
    return out if out.ndim else complex(out)


def _ladder(j: float, sigma: float) -> tuple[float, float]:
    """sqrt coefficients (lowering, raising) for the sigma index."""
    a_lo = math.sqrt(max((j + sigma) * (j - sigma + 1.0), 0.0))
    a_hi = math.sqrt(max((j - sigma) * (j + sigma + 1.0), 0.0))
    return a_lo, a_hi


def _d_or_zero(j: float, m: float, sigma: float, theta) -> np.ndarray:
    if abs(sigma) > j:
        return np.zeros_like(np.asarray(theta, dtype=float))
    return np.asarray(wigner_d(AngularIndex(j, m, sigma), theta))


def recursion_residuals(idx: AngularIndex, theta) -> tuple[float, float]:
    """Absolute residuals of the two sigma-ladder identities at gamma = 0.

    First: the derivative relation
        d/dtheta d_{m,sigma} = + a_lo/2 d_{m,sigma-1} - a_hi/2 d_{m,sigma+1}.
    Second: the ratio relation (theta strictly interior)
        (m - sigma cos theta)/sin theta d_{m,sigma}
            = - a_lo/2 d_{m,sigma-1} - a_hi/2 d_{m,sigma+1}.
    """
    theta = np.asarray(theta, dtype=float)
    if np.any(theta <= 0.0) or np.any(theta >= math.pi):
        raise AngularDomainError("theta must lie strictly inside (0, pi)")
    j, m, sigma = idx.j, idx.m, idx.sigma
    a_lo, a_hi = _ladder(j, sigma)
    d_lo = _d_or_zero(j, m, sigma - 1, theta)
    d_hi = _d_or_zero(j, m, sigma + 1, theta)
    lhs1 = np.asarray(wigner_d_dbeta(idx, theta))
    rhs1 = 0.5 * a_lo * d_lo - 0.5 * a_hi * d_hi
    d_mid = np.asarray(wigner_d(idx, theta))
    lhs2 = (m - sigma * np.cos(theta)) / np.sin(theta) * d_mid
    rhs2 = -0.5 * a_lo * d_lo - 0.5 * a_hi * d_hi
    return float(np.max(np.abs(lhs1 - rhs1))), float(np.max(np.abs(lhs2 - rhs2)))


def parity_point(theta: float, phi: float) -> tuple[float, float]:
    """Antipodal map (theta, phi) -> (pi - theta, phi + pi mod 2 pi)."""
    return math.pi - theta, math.fmod(phi + math.pi, 2.0 * math.pi)


def antipodal_phase(j: float, m: float) -> complex:
    """Phase chi in D^j_{m,sigma}(antipode) = chi * D^j_{m,-sigma}(point).

    chi = exp(-i m pi) * (-1)^(j+m); j+m is an integer so the second factor
    is well defined. For integer j the phase reduces to (-1)^j; for
    half-integer indices it is +-i (the branch taken is exp(-i m pi), which
    makes the free-field inversion relations hold with eigenvalue
    delta * exp(i pi (j+1))).
    """
    jm = j + m
    n = round(jm)
    if abs(jm - n) > 1e-9:
        raise AngularDomainError("j + m must be an integer")
    sign = -1.0 if n % 2 else 1.0
    phase = sign * np.exp(-1j * math.pi * m)
    # snap to the exact unit-circle lattice point
    re = round(phase.real)
    im = round(phase.imag)
    if abs(phase.real - re) < 1e-12 and abs(phase.imag - im) < 1e-12:
        return complex(re, im)
    return complex(phase)


@dataclass(frozen=True)
class SphereGrid:
    """Product quadrature on the sphere: Gauss-Legendre in cos(theta), uniform in phi.

    Exact (to roundoff) for every integrand whose spherical-harmonic content
    has degree <= 2*n_theta - 1 and azimuthal order |M| < n_phi. The phi node
    count is kept even so the antipodal map permutes nodes exactly.
    """

    theta: np.ndarray
    w_theta: np.ndarray
    phi: np.ndarray
    w_phi: float
    j_max: int

    @property
    def n_theta(self) -> int:
        return self.theta.size

    @property
    def n_phi(self) -> int:
        return self.phi.size

    def weights_2d(self) -> np.ndarray:
        """Outer-product weight array of shape (n_theta, n_phi)."""
        return np.outer(self.w_theta, np.full(self.n_phi, self.w_phi))

    def antipodal_indices(self) -> tuple[np.ndarray, np.ndarray]:
        """Node index maps (theta, phi) realizing x -> -x on the grid."""
        i_theta = np.arange(self.n_theta)[::-1]
        i_phi = (np.arange(self.n_phi) + self.n_phi // 2) % self.n_phi
        return i_theta, i_phi

    def integrate(self, values: np.ndarray) -> complex:
        """Integrate node values of shape (n_theta, n_phi) over the sphere."""
        return complex((values * self.weights_2d()).sum())


def make_sphere_grid(j_max: int) -> SphereGrid:
    """Grid integrating conj(D^j) * D^j' exactly for all j, j' <= j_max.

    Uses 2*j_max + 2 Gauss-Legendre colatitude nodes and 4*j_max + 2 uniform
    azimuthal nodes, comfortably above the orthogonality requirement and
    leaving headroom for degree-one observable factors.
    """
    if j_max < 0:
        raise ValueError("j_max must be non-negative")
    n_t = 2 * j_max + 2
    n_p = 4 * j_max + 2
    x, w = np.polynomial.legendre.leggauss(n_t)
    # enforce exact node/weight symmetry so the antipodal map is a permutation
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    order = np.argsort(-x)  # theta increasing
    theta = np.arccos(x[order])
    w_theta = w[order]
    phi = 2.0 * math.pi * np.arange(n_p) / n_p
    return SphereGrid(theta=theta, w_theta=w_theta, phi=phi, w_phi=2.0 * math.pi / n_p, j_max=j_max)
