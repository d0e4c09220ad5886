"""PT-symmetric Hamiltonians on C^2 and their spectral classification.

With ``H = h0 I + h . sigma`` a necessary condition for ``H`` to commute
with some time reversal is ``Im h0 = 0`` and ``Re h . Im h = 0``. Under
these conditions the characteristic polynomial has real coefficients, so
the spectrum is real exactly when

    disc = (Re tr H)^2 - 4 Re det H >= 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .algebra import AntiOp2, PauliCoeffs, apply_anti, as_linop, pauli_compose, pauli_decompose
from .config import TOL, VALIDATION_TOL
from .errors import BrokenSymmetry, ConditionsViolated, DefectiveCase, NotCommuting, NotHermitian
from .frames import frame_from_axis, perpendicular
from .symmetry import TimeReversal, time_reversal_from_c

__all__ = [
    "PTHamiltonian",
    "SpectralTag",
    "SpectralClass",
    "EigenSystem",
    "pt_conditions_residuals",
    "pt_conditions_check",
    "symmetry_residual",
    "find_symmetry",
    "family_from_symmetry",
    "discriminant",
    "discriminant_tolerance",
    "classify",
    "eigen",
    "pt_invariant_eigenvectors",
    "bender_hamiltonian",
    "hermitian_is_unbroken",
]


class SpectralTag(str, enum.Enum):
    UNBROKEN_DIAGONALIZABLE = "UnbrokenDiagonalizable"
    UNBROKEN_DEFECTIVE = "UnbrokenDefective"
    BROKEN = "Broken"

    def __str__(self):
        return self.value

    @property
    def unbroken(self) -> bool:
        return self is not SpectralTag.BROKEN


@dataclass(frozen=True)
class SpectralClass:
    tag: SpectralTag
    lambda1: complex
    lambda2: complex
    discriminant: float


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Eigenvalues and (generalised) eigenvectors of a 2x2 matrix.

    When ``defective`` is set both values equal ``lambda0`` and
    ``vectors[1]`` is a generalised eigenvector with
    ``(H - lambda0) vectors[1] = vectors[0]``.
    """

    values: tuple[complex, complex]
    vectors: tuple[np.ndarray, np.ndarray]
    defective: bool = False


@dataclass(frozen=True, eq=False)
class PTHamiltonian:
    """A 2x2 matrix satisfying the PT-symmetry conditions."""

    mat: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mat", as_linop(self.mat))

    @property
    def coeffs(self) -> PauliCoeffs:
        return pauli_decompose(self.mat)

    @property
    def re_h(self) -> np.ndarray:
        return self.coeffs.vector.real

    @property
    def im_h(self) -> np.ndarray:
        return self.coeffs.vector.imag

    @classmethod
    def from_matrix(cls, m, tol: float = VALIDATION_TOL) -> "PTHamiltonian":
        h = cls(m)
        _require_conditions(h.mat, tol)
        return h


def _as_matrix(h) -> np.ndarray:
    if isinstance(h, PTHamiltonian):
        return h.mat
    return as_linop(h)


def _scale(m: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(m))))


def pt_conditions_residuals(h) -> tuple[float, float]:
    """``|Im h0|`` and ``|Re h . Im h|``."""
    c = pauli_decompose(_as_matrix(h))
    v = c.vector
    return abs(c.h0.imag), abs(float(v.real @ v.imag))


def pt_conditions_check(h, tol: float = VALIDATION_TOL) -> bool:
    m = _as_matrix(h)
    r0, r1 = pt_conditions_residuals(m)
    return r0 <= tol * _scale(m) and r1 <= tol * _scale(m) ** 2


def _require_conditions(m: np.ndarray, tol: float) -> None:
    if not pt_conditions_check(m, tol=tol):
        r0, r1 = pt_conditions_residuals(m)
        raise ConditionsViolated(
            f"Im h0 = {r0:.3g}, Re h . Im h = {r1:.3g}; H admits no PT symmetry", residual=max(r0, r1)
        )


def symmetry_residual(h, t: TimeReversal | AntiOp2) -> float:
    """``max |H T - T H|`` over entries."""
    m = _as_matrix(h)
    a = t.mat
    return float(np.max(np.abs(m @ a - a @ m.conj())))


def find_symmetry(h, tol: float = VALIDATION_TOL) -> TimeReversal:
    """A time reversal ``T`` with ``T^2 = I`` and ``H T = T H``.

    Always returns a ``c0 = 0`` witness: ``c~`` along ``Im h`` when that is
    nonzero, otherwise perpendicular to ``Re h`` (or ``(0, 0, 1)`` for a
    scalar ``H``).
    """
    m = _as_matrix(h)
    _require_conditions(m, tol)
    v = pauli_decompose(m).vector
    re, im = v.real, v.imag
    s = _scale(m)
    if np.linalg.norm(im) > tol * s:
        ct = im / np.linalg.norm(im)
    elif np.linalg.norm(re) > tol * s:
        ct = perpendicular(re)
    else:
        ct = np.array([0.0, 0.0, 1.0])
    return time_reversal_from_c(1.0, (0.0, *ct))


def family_from_symmetry(t: TimeReversal, params) -> PTHamiltonian:
    """The four-parameter family of Hamiltonians commuting with ``t``.

    For ``c0 != 0`` the parameters are ``(Im h1, Im h2, Im h3, Re h0)`` and
    ``Re h = (c~ x Im h) / c0``. For ``c0 = 0`` they are ``(t, p, q, Re h0)``
    with ``Im h = t c~`` and ``Re h = p u + q v`` for the frame ``(c~, u, v)``.
    """
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (4,):
        raise ValueError("expected four real parameters")
    ct, c0 = t.ctilde, t.c0
    if abs(c0) > TOL:
        im = params[:3]
        re = np.cross(ct, im) / c0
    else:
        frame = frame_from_axis(ct, slot="x")
        im = params[0] * ct / np.linalg.norm(ct)
        re = params[1] * frame.u2 + params[2] * frame.u3
    coeffs = (params[3], *(re + 1j * im))
    return PTHamiltonian(pauli_compose(coeffs))


def discriminant(h, tol: float = VALIDATION_TOL) -> float:
    """``(Re tr H)^2 - 4 Re det H``."""
    m = _as_matrix(h)
    _require_conditions(m, tol)
    return _disc(m)


def _disc(m: np.ndarray) -> float:
    tr = np.trace(m)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return float(tr.real**2 - 4.0 * det.real)


def discriminant_tolerance(h, tol: float = VALIDATION_TOL) -> float:
    """``tol * max(1, scale^2)`` where ``scale`` is the largest entry magnitude."""
    return tol * _scale(_as_matrix(h)) ** 2


def classify(h, tol: float = VALIDATION_TOL) -> SpectralClass:
    m = _as_matrix(h)
    _require_conditions(m, tol)
    disc = _disc(m)
    tol_d = discriminant_tolerance(m, tol)
    half = np.trace(m).real / 2.0
    if disc > tol_d:
        r = np.sqrt(disc) / 2.0
        return SpectralClass(SpectralTag.UNBROKEN_DIAGONALIZABLE, complex(half + r), complex(half - r), disc)
    if disc < -tol_d:
        r = np.sqrt(-disc) / 2.0
        return SpectralClass(SpectralTag.BROKEN, complex(half, r), complex(half, -r), disc)
    if float(np.max(np.abs(m - half * np.eye(2)))) <= tol * _scale(m):
        tag = SpectralTag.UNBROKEN_DIAGONALIZABLE
    else:
        tag = SpectralTag.UNBROKEN_DEFECTIVE
    return SpectralClass(tag, complex(half), complex(half), disc)


def _null_vector(a: np.ndarray) -> np.ndarray:
    """Unit vector annihilated by a rank-one 2x2 matrix ``a``."""
    c1 = np.array([a[0, 1], -a[0, 0]])
    c2 = np.array([a[1, 1], -a[1, 0]])
    v = c1 if np.linalg.norm(c1) >= np.linalg.norm(c2) else c2
    k = int(np.argmax(np.abs(v)))
    return v * (abs(v[k]) / v[k]) / np.linalg.norm(v)


def eigen(h, tol: float = VALIDATION_TOL) -> EigenSystem:
    """Closed-form eigen-decomposition of any 2x2 matrix.

    Within the discriminant tolerance a non-scalar matrix is treated as
    defective and gets a Jordan chain instead of two nearly parallel vectors.
    """
    m = _as_matrix(h)
    tr = complex(np.trace(m))
    det = complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    dc = tr * tr - 4.0 * det
    eye = np.eye(2)
    if abs(dc) <= discriminant_tolerance(m, tol):
        lam = tr / 2.0
        a = m - lam * eye
        if float(np.max(np.abs(a))) <= tol * _scale(m):
            return EigenSystem((lam, lam), (eye[0].astype(complex), eye[1].astype(complex)))
        k = int(np.argmax(np.linalg.norm(a, axis=0)))
        psi2 = eye[k].astype(complex)
        psi1 = a @ psi2
        return EigenSystem((lam, lam), (psi1, psi2), defective=True)
    root = np.sqrt(dc)
    # Larger-magnitude root first, the other from det, to avoid cancellation.
    q = (tr + root) / 2.0 if abs(tr + root) >= abs(tr - root) else (tr - root) / 2.0
    l1, l2 = sorted((q, det / q), key=lambda z: (z.real, z.imag), reverse=True)
    vecs = tuple(_null_vector(m - lam * eye) for lam in (l1, l2))
    return EigenSystem((complex(l1), complex(l2)), vecs)


def pt_invariant_eigenvectors(h, t: TimeReversal, tol: float = VALIDATION_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors of ``h`` rephased so that ``T psi = psi``.

    Each eigenvector ``psi`` becomes ``psi + T psi``, or ``i (psi - T psi)``
    when the former vanishes. ``t`` is the combined anti-linear symmetry
    (the product ``PT``) and must satisfy ``T^2 = I``.
    """
    m = _as_matrix(h)
    cls = classify(m, tol=tol)
    if cls.tag is SpectralTag.BROKEN:
        raise BrokenSymmetry("complex eigenvalues: no PT-invariant eigenbasis")
    if cls.tag is SpectralTag.UNBROKEN_DEFECTIVE:
        raise DefectiveCase("H is not diagonalisable")
    if t.square != 1:
        raise ValueError("the symmetry must satisfy T^2 = I")
    res = symmetry_residual(m, t)
    if res > tol * _scale(m):
        raise NotCommuting(f"H and T do not commute (residual {res:.3g})", residual=res)
    anti = t.anti

    def candidates(psi):
        tpsi = apply_anti(anti, psi)
        out = []
        for v in (psi + tpsi, 1j * (psi - tpsi)):
            n = np.linalg.norm(v)
            if n > 1e-6:
                out.append(v / n)
        return out

    es = eigen(m, tol=tol)
    first = candidates(es.vectors[0])
    second = candidates(es.vectors[1])
    if cls.lambda1 != cls.lambda2:
        return first[0], second[0]
    # Scalar H: every vector is an eigenvector; pick the best-conditioned pair.
    pool = first + second
    best = max(
        ((u, v) for i, u in enumerate(pool) for v in pool[i + 1 :]),
        key=lambda uv: abs(uv[0][0] * uv[1][1] - uv[0][1] * uv[1][0]),
    )
    return best


def bender_hamiltonian(r: float, theta: float, s: float) -> PTHamiltonian:
    """``[[r e^{i theta}, s], [s, r e^{-i theta}]]``."""
    return PTHamiltonian(
        np.array([[r * np.exp(1j * theta), s], [s, r * np.exp(-1j * theta)]], dtype=np.complex128)
    )


def hermitian_is_unbroken(h, tol: float = VALIDATION_TOL) -> tuple[TimeReversal, SpectralClass]:
    m = _as_matrix(h)
    herm = float(np.max(np.abs(m - m.conj().T)))
    if herm > tol * _scale(m):
        raise NotHermitian(f"H - H^dagger = {herm:.3g}", residual=herm)
    return find_symmetry(m, tol=tol), classify(m, tol=tol)
