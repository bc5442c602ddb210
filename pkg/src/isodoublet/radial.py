"""Radial quadrature grids and test radial profiles.

States in this package are stored in reduced form (the overall 1/r of the
physical field is dropped), so the r^2 measure cancels and every norm and
matrix element reduces to a plain dr integral of the profile arrays held
here. Profiles are user-supplied test inputs; the bundled defaults are
square-integrable shapes that exercise the angular and discrete structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

__all__ = ["RadialGrid", "RadialProfiles", "default_profiles"]

_FD_STEP = 1e-4  # relative step for 5-point radial derivatives of callables


@dataclass(frozen=True)
class RadialGrid:
    """Composite Gauss-Legendre quadrature on [0, rmax]."""

    r: np.ndarray
    w: np.ndarray
    rmax: float

    @classmethod
    def gauss_legendre(cls, rmax: float = 40.0, n_nodes: int = 64, panels: int = 1) -> "RadialGrid":
        if rmax <= 0 or n_nodes < 2 or panels < 1 or n_nodes % panels:
            raise ValueError("need rmax > 0 and n_nodes a positive multiple of panels")
        per = n_nodes // panels
        x, w = np.polynomial.legendre.leggauss(per)
        rs, ws = [], []
        edges = np.linspace(0.0, rmax, panels + 1)
        for a, b in zip(edges[:-1], edges[1:]):
            rs.append(0.5 * (b - a) * x + 0.5 * (a + b))
            ws.append(0.5 * (b - a) * w)
        return cls(r=np.concatenate(rs), w=np.concatenate(ws), rmax=rmax)

    @property
    def n(self) -> int:
        return self.r.size

    def integrate(self, values: np.ndarray) -> complex:
        return complex(np.sum(values * self.w))


def _sample(fn: Callable[[np.ndarray], np.ndarray] | np.ndarray, grid: RadialGrid) -> np.ndarray:
    if callable(fn):
        return np.asarray(fn(grid.r), dtype=complex)
    arr = np.asarray(fn, dtype=complex)
    if arr.shape != grid.r.shape:
        raise ValueError("tabulated profile length does not match the radial grid")
    return arr


@dataclass
class RadialProfiles:
    """Reduced radial profiles f_k(r) sampled on a shared quadrature grid.

    f1 and f2 are always present; f3 and f4 are None for the two-profile
    family (they are then generated from f1, f2 by the builders). Callables
    are kept alongside the samples so derivatives can be taken by 5-point
    central differences at step 1e-4 * r-scale; tabulated data falls back to
    a cubic spline derivative.
    """

    grid: RadialGrid
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray | None = None
    f4: np.ndarray | None = None
    _fns: dict | None = None

    @classmethod
    def from_callables(cls, grid: RadialGrid, f1, f2, f3=None, f4=None) -> "RadialProfiles":
        fns = {"f1": f1, "f2": f2, "f3": f3, "f4": f4}
        return cls(
            grid=grid,
            f1=_sample(f1, grid),
            f2=_sample(f2, grid),
            f3=None if f3 is None else _sample(f3, grid),
            f4=None if f4 is None else _sample(f4, grid),
            _fns={k: v for k, v in fns.items() if callable(v)},
        )

    @property
    def is_two_profile(self) -> bool:
        return self.f3 is None and self.f4 is None

    def norm_squared(self) -> float:
        """Plain-measure norm: integral of sum |f_k|^2 dr."""
        total = np.abs(self.f1) ** 2 + np.abs(self.f2) ** 2
        if self.f3 is not None:
            total = total + np.abs(self.f3) ** 2
        if self.f4 is not None:
            total = total + np.abs(self.f4) ** 2
        return float(np.real(self.grid.integrate(total)))

    def derivative(self, name: str) -> np.ndarray:
        """d f_k / dr on the grid nodes."""
        values = getattr(self, name)
        if values is None:
            raise ValueError(f"profile {name} is absent")
        fn = (self._fns or {}).get(name)
        r = self.grid.r
        if fn is not None:
            h = _FD_STEP * max(self.grid.rmax / 40.0, 1e-6)
            fm2 = np.asarray(fn(r - 2 * h), dtype=complex)
            fm1 = np.asarray(fn(r - h), dtype=complex)
            fp1 = np.asarray(fn(r + h), dtype=complex)
            fp2 = np.asarray(fn(r + 2 * h), dtype=complex)
            return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)
        if r.size < 5:
            raise ValueError("radial grid too coarse for a derivative stencil")
        re = CubicSpline(r, values.real).derivative()(r)
        im = CubicSpline(r, values.imag).derivative()(r)
        return re + 1j * im


def default_profiles(grid: RadialGrid | None = None, four: bool = False) -> RadialProfiles:
    """Bundled test profiles: f1 = r exp(-r), f2 = r^2 exp(-r) / 2.

    The four-profile variant adds f3 = r exp(-1.3 r) and f4 = r^2 exp(-1.1 r) / 3.
    The tail beyond rmax = 40 is below 1e-14 of the norm.
    """
    grid = grid or RadialGrid.gauss_legendre()
    f1 = lambda r: r * np.exp(-r)
    f2 = lambda r: 0.5 * r**2 * np.exp(-r)
    if not four:
        return RadialProfiles.from_callables(grid, f1, f2)
    f3 = lambda r: r * np.exp(-1.3 * r)
    f4 = lambda r: (r**2 / 3.0) * np.exp(-1.1 * r)
    return RadialProfiles.from_callables(grid, f1, f2, f3, f4)
