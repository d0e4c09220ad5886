"""Deterministic right-handed orthonormal frames in R^3."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .algebra import as_vec3
from .errors import ZeroAxis

__all__ = ["Frame", "frame_from_axis", "frame_from_axes", "perpendicular"]


class Frame(NamedTuple):
    """Orthonormal right-handed triple with ``u1 x u2 = u3``."""

    u1: np.ndarray
    u2: np.ndarray
    u3: np.ndarray

    @property
    def rotation(self) -> np.ndarray:
        """Rows are the frame axes: ``rotation @ v`` gives frame coordinates."""
        return np.stack([self.u1, self.u2, self.u3])

    def to_frame(self, v) -> np.ndarray:
        return self.rotation @ np.asarray(v, dtype=np.float64)

    def to_global(self, v) -> np.ndarray:
        return self.rotation.T @ np.asarray(v, dtype=np.float64)


def _unit(u, eps: float = 1e-12) -> np.ndarray:
    u = as_vec3(u)
    n = float(np.linalg.norm(u))
    if n <= eps:
        raise ZeroAxis(f"axis has norm {n!r}")
    return u / n


def perpendicular(u) -> np.ndarray:
    """First unit vector perpendicular to ``u``.

    Gram-Schmidt on the canonical basis vector with the smallest overlap
    with ``u`` (ties go to the lowest index).
    """
    uhat = _unit(u)
    k = int(np.argmin(np.abs(uhat)))
    e = np.zeros(3)
    e[k] = 1.0
    p = e - uhat[k] * uhat
    return p / np.linalg.norm(p)


def frame_from_axis(u, slot: str = "z") -> Frame:
    """Frame with ``u`` along the X' axis (``slot="x"``) or Z' axis (``slot="z"``).

    With ``p = perpendicular(u)`` the frames are ``(u, p, u x p)`` and
    ``(p, u x p, u)``, cyclic permutations of one another.
    """
    uhat = _unit(u)
    p = perpendicular(uhat)
    q = np.cross(uhat, p)
    if slot == "x":
        return Frame(uhat, p, q)
    if slot == "z":
        return Frame(p, q, uhat)
    raise ValueError(f"slot must be 'x' or 'z', got {slot!r}")


def frame_from_axes(x_axis, z_axis) -> Frame:
    """Frame with X' along ``x_axis`` and Z' along ``z_axis`` (must be orthogonal)."""
    x = _unit(x_axis)
    z = _unit(z_axis)
    if abs(float(x @ z)) > 1e-9:
        raise ValueError("X' and Z' axes are not orthogonal")
    z = z - (x @ z) * x
    z = z / np.linalg.norm(z)
    return Frame(x, np.cross(z, x), z)
