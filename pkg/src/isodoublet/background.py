"""Monopole backgrounds: Abelian potential, unitary-gauge non-Abelian form, residual checks.

The embedded configuration places the Abelian monopole potential
A_phi = g cos(theta) in the third isotopic component. Its Yang-Mills field
strength then collapses to the single Abelian component
F^(3)_{theta phi} = -g sin(theta), and the field equations reduce to one
scalar identity whose residual is checked numerically here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from .angular import SphereGrid
from .radial import RadialGrid

__all__ = [
    "BackgroundConfig",
    "abelian_field_strength",
    "maxwell_residual",
    "schwinger_potential",
    "ym_field_strength",
    "mixing_coefficient",
]

ANGULAR_COMPONENT_PAIRS = (("t", "r"), ("t", "theta"), ("t", "phi"), ("r", "theta"), ("r", "phi"), ("theta", "phi"))


def _as_radial_fn(profile, e_coup: float, grid: RadialGrid | None):
    """Normalize a profile spec (callable, array, preset name) to a callable."""
    if callable(profile):
        return profile
    if isinstance(profile, str):
        if profile == "zero":
            return lambda r: np.zeros_like(np.asarray(r, dtype=float))
        if profile == "special":
            return lambda r: -1.0 / (e_coup * np.asarray(r, dtype=float) ** 2)
        raise ValueError(f"unknown profile preset {profile!r}")
    arr = np.asarray(profile, dtype=float)
    if grid is None or arr.shape != grid.r.shape:
        raise ValueError("tabulated profiles need a matching radial grid")
    spline = CubicSpline(grid.r, arr)
    return lambda r: spline(np.asarray(r, dtype=float))


@dataclass
class BackgroundConfig:
    """Couplings and radial profiles of the monopole background.

    g_mag is the magnetic charge in A_phi = g cos(theta); e_coup the gauge
    coupling; kappa the scalar coupling; mass the fermion mass. K, F and Phi
    are the radial profile functions of the hedgehog parametrization, housed
    as configuration only. The special preset K = -1/(e r^2), F = Phi = 0 is
    the simplest monopole field; it makes the doublet-mixing coefficient
    (e r^2 K + 1)/r vanish identically.
    """

    g_mag: float = 1.0
    e_coup: float = 1.0
    kappa: float = 0.0
    mass: float = 1.0
    profile_K: Callable | str | np.ndarray = "zero"
    profile_F: Callable | str | np.ndarray = "zero"
    profile_Phi: Callable | str | np.ndarray = "zero"
    radial_grid: RadialGrid | None = None

    def __post_init__(self):
        self._K = _as_radial_fn(self.profile_K, self.e_coup, self.radial_grid)
        self._F = _as_radial_fn(self.profile_F, self.e_coup, self.radial_grid)
        self._Phi = _as_radial_fn(self.profile_Phi, self.e_coup, self.radial_grid)

    @classmethod
    def special(cls, g_mag: float = 1.0, e_coup: float = 1.0, mass: float = 1.0) -> "BackgroundConfig":
        return cls(g_mag=g_mag, e_coup=e_coup, kappa=0.0, mass=mass,
                   profile_K="special", profile_F="zero", profile_Phi="zero")

    def K(self, r):
        return self._K(r)

    def F(self, r):
        return self._F(r)

    def Phi(self, r):
        return self._Phi(r)


def abelian_field_strength(cfg: BackgroundConfig, theta) -> np.ndarray | float:
    """F_{theta phi} = -g sin(theta)."""
    out = -cfg.g_mag * np.sin(np.asarray(theta, dtype=float))
    return out if out.ndim else float(out)


def maxwell_residual(cfg: BackgroundConfig, grid: SphereGrid, field_strength=None) -> float:
    """Max over interior nodes of |d/dtheta [sin(theta) F_{theta phi} / sin^2(theta)]|.

    For the monopole field the bracket is the constant -g and the residual
    vanishes to roundoff. A different field strength callable (theta -> F)
    may be supplied to demonstrate a violated field equation.
    """
    fs = field_strength or (lambda th: abelian_field_strength(cfg, th))
    h = 1e-4

    def bracket(th):
        return fs(th) / np.sin(th)

    th = grid.theta
    # 5-point central differences stay inside (0, pi) for Gauss nodes
    d = (bracket(th - 2 * h) - 8 * bracket(th - h) + 8 * bracket(th + h) - bracket(th + 2 * h)) / (12 * h)
    return float(np.max(np.abs(d)))


def schwinger_potential(cfg: BackgroundConfig, r: float, theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Unitary-gauge angular potential components (W_theta^(a), W_phi^(a)).

    W_theta = (0, r^2 K + 1/e, 0);
    W_phi = (-(r^2 K + 1/e) sin(theta), 0, cos(theta)/e).
    """
    if r <= 0:
        raise ValueError("r must be positive")
    e = cfg.e_coup
    c = r**2 * cfg.K(r) + 1.0 / e
    w_theta = np.array([0.0, c, 0.0])
    w_phi = np.array([-c * np.sin(theta), 0.0, np.cos(theta) / e])
    return w_theta, w_phi


def ym_field_strength(cfg: BackgroundConfig, grid: SphereGrid, potential=None) -> dict:
    """All F^(a)_{mu nu} components on the sphere grid.

    For the embedded-Abelian configuration (only A^(3)_phi = g cos theta
    nonzero) the analytic derivative is used and the result has the single
    component F^(3)_{theta phi} = -g sin(theta); the quadratic commutator
    term vanishes identically because only one isotopic component is
    populated. A caller-supplied potential, given as callables
    (a, component) -> value fields A_theta^(a)(theta, phi), A_phi^(a)(theta, phi),
    is differenced numerically and returned without the vanishing contract.
    """
    TH, PH = np.meshgrid(grid.theta, grid.phi, indexing="ij")
    comps = {}
    for a in (1, 2, 3):
        for mu, nu in ANGULAR_COMPONENT_PAIRS:
            comps[(a, mu, nu)] = np.zeros_like(TH)

    if potential is None:
        comps[(3, "theta", "phi")] = -cfg.g_mag * np.sin(TH)
        return comps

    h = 1e-5
    e = cfg.e_coup
    A_theta, A_phi = potential

    def at(a, fn, th, ph):
        return fn(a, th, ph)

    eps = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1}
    for a in (1, 2, 3):
        d_th_Aphi = (at(a, A_phi, TH + h, PH) - at(a, A_phi, TH - h, PH)) / (2 * h)
        d_ph_Ath = (at(a, A_theta, TH, PH + h) - at(a, A_theta, TH, PH - h)) / (2 * h)
        quad = np.zeros_like(TH)
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                s = eps.get((a, b, c), 0)
                if s:
                    quad = quad + s * at(b, A_theta, TH, PH) * at(c, A_phi, TH, PH)
        comps[(a, "theta", "phi")] = d_th_Aphi - d_ph_Ath + e * quad
    return comps


def mixing_coefficient(cfg: BackgroundConfig, r) -> np.ndarray:
    """Doublet-mixing radial coefficient (e r^2 K(r) + 1)/r of the wave equation."""
    r = np.asarray(r, dtype=float)
    return (cfg.e_coup * r**2 * cfg.K(r) + 1.0) / r
