"""Geometry of commutants.

For a fixed ``T`` with ``T^2 = I`` the parities commuting with it are in
one-to-one correspondence with the points ``m = f + b`` of a hyperboloid,
written in a frame whose X' axis is along ``c~``:

    (y'^2 + z'^2) / (1 + 2 c0^2) - x'^2 = 1.

For a fixed nontrivial ``P`` the vectors ``c~`` of the real time reversals
commuting with it trace an ellipse with semi-axes ``|f|`` and 1 in the plane
perpendicular to ``f``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .algebra import as_vec3
from .config import TOL, VALIDATION_TOL
from .errors import NegativeSquare, NotCommuting, OffSurface, TrivialParity
from .frames import Frame, frame_from_axes, frame_from_axis
from .symmetry import (
    Parity,
    TimeReversal,
    commutation_residual,
    parity_from_fb,
    time_reversal_from_c,
)

__all__ = [
    "Frame",
    "frame_from_axis",
    "HyperboloidPoint",
    "EllipseSpec",
    "X_MAX",
    "hyperboloid_frame",
    "hyperboloid_residual",
    "parity_to_point",
    "point_to_parity",
    "sample_hyperboloid",
    "sample_hyperboloid_points",
    "ellipse_for_parity",
    "time_reversal_on_ellipse",
]

X_MAX = 3.0


class HyperboloidPoint(NamedTuple):
    """``m = f + b`` in the frame adapted to ``T`` (coordinates ``x', y', z'``)."""

    m: np.ndarray

    @property
    def x(self) -> float:
        return float(self.m[0])

    @property
    def y(self) -> float:
        return float(self.m[1])

    @property
    def z(self) -> float:
        return float(self.m[2])


class EllipseSpec(NamedTuple):
    frame: Frame
    semi_major: float
    semi_minor: float = 1.0

    def residual(self, ctilde) -> tuple[float, float]:
        """Ellipse-equation residual and out-of-plane component of ``ctilde``."""
        c1, c2, c3 = self.frame.to_frame(ctilde)
        return c1**2 + (c2 / self.semi_major) ** 2 - 1.0, float(c3)


def _require_positive(t: TimeReversal) -> None:
    if t.square != 1:
        raise NegativeSquare("the hyperboloid exists only for T^2 = I")


def hyperboloid_frame(t: TimeReversal) -> Frame:
    """Frame with X' along ``c~``."""
    return frame_from_axis(t.ctilde, slot="x")


def hyperboloid_residual(m, c0: float) -> float:
    """``(y'^2 + z'^2) / (1 + 2 c0^2) - x'^2 - 1``; reduces to ``y'^2 + z'^2 - x'^2 - 1`` at ``c0 = 0``."""
    x, y, z = as_vec3(m)
    return (y * y + z * z) / (1.0 + 2.0 * c0 * c0) - x * x - 1.0


def parity_to_point(p: Parity, t: TimeReversal, tol: float = VALIDATION_TOL) -> HyperboloidPoint:
    _require_positive(t)
    if p.is_trivial:
        raise TrivialParity("only nontrivial parities lie on the hyperboloid")
    res = commutation_residual(p, t)
    if res > tol:
        raise NotCommuting(f"P and T do not commute (residual {res:.3g})", residual=res)
    frame = hyperboloid_frame(t)
    return HyperboloidPoint(frame.to_frame(p.f + p.b))


def point_to_parity(m, t: TimeReversal, tol: float = VALIDATION_TOL) -> Parity:
    """Inverse of :func:`parity_to_point`."""
    _require_positive(t)
    if isinstance(m, HyperboloidPoint):
        m = m.m
    xp, yp, zp = as_vec3(m)
    c0 = t.c0
    scale = max(1.0, xp * xp + yp * yp + zp * zp)
    res = hyperboloid_residual((xp, yp, zp), c0)
    if abs(res) > tol * scale:
        raise OffSurface(f"point is off the hyperboloid (residual {res:.3g})", residual=res)
    frame = hyperboloid_frame(t)
    if abs(c0) <= TOL:
        b_loc = np.array([xp, 0.0, 0.0])
        f_loc = np.array([0.0, yp, zp])
    else:
        # c~ = (L, 0, 0) in the frame, f = (c~ x b) / c0 = lam (0, -z0, y0).
        lam = np.sqrt(1.0 + c0 * c0) / c0
        d = 1.0 + lam * lam
        y0 = (lam * zp + yp) / d
        z0 = (zp - lam * yp) / d
        b_loc = np.array([xp, y0, z0])
        f_loc = lam * np.array([0.0, -z0, y0])
    return parity_from_fb(frame.to_global(f_loc), frame.to_global(b_loc), tol=tol * scale)


def sample_hyperboloid(
    t: TimeReversal, n: int, seed: int = 0, x_max: float = X_MAX
) -> list[Parity]:
    """``n`` parities commuting with ``t`` from seeded points on its hyperboloid.

    ``x'`` is uniform on ``[-x_max, x_max]`` and the angle around the X'
    axis is uniform; ``(y', z')`` then follow from the surface equation.
    """
    return [p for _, p in sample_hyperboloid_points(t, n, seed=seed, x_max=x_max)]


def sample_hyperboloid_points(
    t: TimeReversal, n: int, seed: int = 0, x_max: float = X_MAX
) -> list[tuple[HyperboloidPoint, Parity]]:
    _require_positive(t)
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = np.random.Generator(np.random.Philox(seed))
    xs = rng.uniform(-x_max, x_max, size=n)
    thetas = rng.uniform(0.0, 2.0 * np.pi, size=n)
    stretch = 1.0 + 2.0 * t.c0**2
    out = []
    for x, th in zip(xs, thetas):
        rho = np.sqrt((1.0 + x * x) * stretch)
        m = np.array([x, rho * np.cos(th), rho * np.sin(th)])
        out.append((HyperboloidPoint(m), point_to_parity(m, t)))
    return out


def _ellipse_frame(p: Parity) -> Frame:
    f, b = p.f, p.b
    if np.linalg.norm(b) <= 1e-12:
        # b = 0: any direction perpendicular to f serves as X'.
        return frame_from_axis(f, slot="z")
    return frame_from_axes(b, f)


def ellipse_for_parity(p: Parity) -> EllipseSpec:
    if p.is_trivial:
        raise TrivialParity("the ellipse is defined for nontrivial parities")
    return EllipseSpec(_ellipse_frame(p), float(np.linalg.norm(p.f)), 1.0)


def time_reversal_on_ellipse(p: Parity, phi: float, tol: float = VALIDATION_TOL) -> TimeReversal:
    """Real time reversal commuting with ``p`` at angle ``phi`` on its ellipse.

    In the ellipse frame ``c~' = (cos phi, |f| sin phi, 0)`` and
    ``c0 = -(|b| / |f|) c2'``.
    """
    spec = ellipse_for_parity(p)
    x = float(np.linalg.norm(p.b))
    z = spec.semi_major
    c1p = np.cos(phi)
    c2p = z * np.sin(phi)
    c0 = -(x / z) * c2p if x > 0.0 else 0.0
    ct = spec.frame.to_global([c1p, c2p, 0.0])
    return time_reversal_from_c(1.0, (c0, *ct), tol=tol)
