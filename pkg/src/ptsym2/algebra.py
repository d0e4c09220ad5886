"""Linear and anti-linear operators on C^2, the Pauli basis and the tau basis.

Linear operators are plain ``(2, 2)`` complex numpy arrays (returned
read-only). An anti-linear operator is stored as the matrix ``M`` of the
map ``v -> M @ conj(v)``, so anti-linearity is carried by the data rather
than by a flag. Composition is always read right-to-left: ``(A B)(v) = A(B(v))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .config import TOL
from .errors import NonFinite, NotPhaseReal, NotUnimodular, ZeroOperator

__all__ = [
    "AntiOp2",
    "PauliCoeffs",
    "TauCoeffs",
    "as_linop",
    "as_vec2",
    "as_vec3",
    "pauli",
    "tau",
    "conjugation",
    "compose_ll",
    "compose_aa",
    "compose_la",
    "compose_al",
    "apply_lin",
    "apply_anti",
    "pauli_decompose",
    "pauli_compose",
    "pauli_dot",
    "tau_decompose",
    "tau_compose",
    "levi_civita",
]


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _check_finite(arr: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(arr)):
        raise NonFinite(f"{what} contains NaN or Inf")


def as_linop(m) -> np.ndarray:
    """Coerce ``m`` to a finite, read-only ``(2, 2)`` complex array."""
    arr = np.array(m, dtype=np.complex128)
    if arr.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {arr.shape}")
    _check_finite(arr, "matrix")
    return _frozen(arr)


def as_vec2(v) -> np.ndarray:
    arr = np.array(v, dtype=np.complex128)
    if arr.shape != (2,):
        raise ValueError(f"expected a vector in C^2, got shape {arr.shape}")
    _check_finite(arr, "vector")
    return arr


def as_vec3(v, dtype=np.float64) -> np.ndarray:
    arr = np.array(v, dtype=dtype)
    if arr.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {arr.shape}")
    _check_finite(arr, "vector")
    return arr


@dataclass(frozen=True, eq=False)
class AntiOp2:
    """Anti-linear operator ``v -> mat @ conj(v)``."""

    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", as_linop(self.mat))

    def __call__(self, v) -> np.ndarray:
        return apply_anti(self, v)

    def __neg__(self) -> "AntiOp2":
        return AntiOp2(-self.mat)

    def __eq__(self, other):
        if not isinstance(other, AntiOp2):
            return NotImplemented
        return bool(np.array_equal(self.mat, other.mat))

    def __hash__(self):
        return hash(self.mat.tobytes())

    def __repr__(self):
        return f"AntiOp2(mat={self.mat.tolist()!r})"


_SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
for _s in _SIGMA:
    _frozen(_s)

# tau_0 acts as (x1, x2) -> (-conj(x2), conj(x1)); tau_i = tau_0 sigma_i.
_TAU0_MAT = _frozen(np.array([[0, -1], [1, 0]], dtype=np.complex128))
_TAU_MATS = tuple(_frozen(_TAU0_MAT @ s.conj()) for s in _SIGMA)
# Real 8x8 map from the real/imag parts of (d0..d3) to those of sum d_i N_i.
_TAU_BASIS = np.stack([m.reshape(4) for m in _TAU_MATS], axis=1)


def _check_index(i: int) -> int:
    if not isinstance(i, (int, np.integer)) or isinstance(i, bool) or not 0 <= i <= 3:
        raise IndexError(f"basis index must be 0, 1, 2 or 3, got {i!r}")
    return int(i)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix ``sigma_i``; ``sigma_0`` is the identity."""
    return _SIGMA[_check_index(i)]


def tau(i: int) -> AntiOp2:
    """Anti-linear basis operator ``tau_i``."""
    return AntiOp2(_TAU_MATS[_check_index(i)])


def conjugation() -> AntiOp2:
    """Complex conjugation ``K`` in the standard basis."""
    return AntiOp2(np.eye(2))


def levi_civita(i: int, j: int, k: int) -> int:
    """Levi-Civita symbol on indices 1..3."""
    return int((i - j) * (j - k) * (k - i) / 2)


def compose_ll(a, b) -> np.ndarray:
    return _frozen(as_linop(a) @ as_linop(b))


def compose_aa(s: AntiOp2, r: AntiOp2) -> np.ndarray:
    """Product of two anti-linear operators, which is linear."""
    return _frozen(s.mat @ r.mat.conj())


def compose_la(lin, s: AntiOp2) -> AntiOp2:
    """``L`` after ``S``."""
    return AntiOp2(as_linop(lin) @ s.mat)


def compose_al(s: AntiOp2, lin) -> AntiOp2:
    """``S`` after ``L``."""
    return AntiOp2(s.mat @ as_linop(lin).conj())


def apply_lin(lin, v) -> np.ndarray:
    return as_linop(lin) @ as_vec2(v)


def apply_anti(s: AntiOp2, v) -> np.ndarray:
    return s.mat @ as_vec2(v).conj()


class PauliCoeffs(NamedTuple):
    """Coefficients of ``h0 I + h1 sigma_1 + h2 sigma_2 + h3 sigma_3``."""

    h0: complex
    h1: complex
    h2: complex
    h3: complex

    @property
    def vector(self) -> np.ndarray:
        """The 3-vector ``(h1, h2, h3)``."""
        return np.array([self.h1, self.h2, self.h3], dtype=np.complex128)


def pauli_decompose(m) -> PauliCoeffs:
    """Pauli coefficients ``h_i = tr(sigma_i M) / 2``."""
    m = as_linop(m)
    return PauliCoeffs(*(complex(np.trace(s @ m) / 2) for s in _SIGMA))


def pauli_compose(coeffs: Sequence[complex]) -> np.ndarray:
    h = np.asarray(coeffs, dtype=np.complex128)
    if h.shape != (4,):
        raise ValueError("expected four Pauli coefficients")
    _check_finite(h, "coefficients")
    return _frozen(np.einsum("i,ijk->jk", h, np.stack(_SIGMA)))


def pauli_dot(v) -> np.ndarray:
    """``sigma . v`` for a (possibly complex) 3-vector ``v``."""
    v = as_vec3(v, dtype=np.complex128)
    return pauli_compose((0.0, *v))


@dataclass(frozen=True)
class TauCoeffs:
    """``eps * (c0 tau_0 + c1 tau_1 + c2 tau_2 + c3 tau_3)`` with real ``c``.

    The representation is made unique by requiring ``|eps| = 1`` and the
    first nonzero ``c_i`` to be positive; construction flips the signs of
    ``c`` and ``eps`` together when needed.
    """

    eps: complex
    c: tuple[float, float, float, float]

    def __post_init__(self):
        eps = complex(self.eps)
        c = np.array(self.c, dtype=np.float64)
        if c.shape != (4,):
            raise ValueError("expected four real tau coefficients")
        _check_finite(np.array([eps]), "eps")
        _check_finite(c, "tau coefficients")
        if abs(abs(eps) - 1.0) > TOL * 1e3:
            raise NotUnimodular(f"|eps| = {abs(eps)!r}, expected 1", residual=abs(abs(eps) - 1.0))
        # Entries at rounding level do not decide the sign.
        floor = TOL * float(np.max(np.abs(c)))
        for ci in c:
            if abs(ci) > floor:
                if ci < 0.0:
                    c, eps = -c, -eps
                break
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "c", tuple(float(x) + 0.0 for x in c))

    @property
    def c0(self) -> float:
        return self.c[0]

    @property
    def ctilde(self) -> np.ndarray:
        return np.array(self.c[1:])


def tau_compose(coeffs: TauCoeffs) -> AntiOp2:
    d = coeffs.eps * np.asarray(coeffs.c)
    return AntiOp2(np.einsum("i,ijk->jk", d, np.stack(_TAU_MATS)))


def tau_decompose(s: AntiOp2, tol: float = TOL) -> TauCoeffs:
    """Write an anti-linear operator as ``eps * sum c_i tau_i``.

    Raises
    ------
    ZeroOperator
        If ``s.mat`` vanishes.
    NotPhaseReal
        If the complex tau coordinates do not share a common phase.
    """
    flat = s.mat.reshape(4)
    scale = float(np.max(np.abs(flat)))
    if scale == 0.0:
        raise ZeroOperator("anti-linear operator is zero")
    d = np.linalg.solve(_TAU_BASIS, flat)
    k = int(np.argmax(np.abs(d)))
    phase = d[k] / abs(d[k])
    c = d / phase
    imag = float(np.max(np.abs(c.imag)))
    if imag > tol * max(1.0, scale):
        raise NotPhaseReal("tau coordinates do not share a common phase", residual=imag)
    c = c.real.copy()
    # clear rounding noise only; genuine small coefficients survive
    c[np.abs(c) <= 4 * np.finfo(float).eps * float(np.max(np.abs(c)))] = 0.0
    return TauCoeffs(complex(phase), tuple(c))
