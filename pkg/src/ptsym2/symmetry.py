"""Parity and time-reversal operators and their commutation.

A nontrivial parity is ``P = a . sigma`` with ``a`` in C^3, ``sum a_i^2 = 1``;
we split ``a = f + i b`` with real ``f``, ``b``. A time reversal is
``T = eps * sum_i c_i tau_i`` with real ``c`` and ``|c~|^2 - c0^2 = +-1``
where ``c~ = (c1, c2, c3)``. For ``T^2 = +I``, ``PT = TP`` is equivalent to
the vector equations

    c0 f + b x c~ = 0,        f . c~ = 0.

Both equations are homogeneous in ``c``, so commutation never depends on
the phase ``eps``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import oracle
from .algebra import (
    AntiOp2,
    TauCoeffs,
    as_vec3,
    compose_aa,
    pauli_decompose,
    tau_compose,
    tau_decompose,
)
from .config import TOL, VALIDATION_TOL
from .errors import (
    ConstraintViolated,
    NegativeSquare,
    NotDistinct,
    NotInvolutionLike,
    NotUnimodular,
    TrivialParity,
)
from .frames import perpendicular

__all__ = [
    "Parity",
    "TimeReversal",
    "TrivialParityWarning",
    "trivial_parity",
    "parity_from_a",
    "parity_from_fb",
    "parity_from_matrix",
    "time_reversal_from_c",
    "time_reversal_from_anti",
    "commutation_residual",
    "commutes_matrix",
    "vector_residuals",
    "commutes_vec",
    "construct_parity",
    "commutant_basis",
    "shared_parities",
    "same_commutant",
]


class TrivialParityWarning(UserWarning):
    """``commutes_vec`` was handed ``P = +-I``, which commutes with everything."""


@dataclass(frozen=True, eq=False)
class Parity:
    """Linear involution on C^2: either ``sign * I`` or ``a . sigma``."""

    kind: Literal["trivial", "nontrivial"]
    sign: int = 1
    a: np.ndarray | None = None

    def __post_init__(self):
        if self.kind == "trivial":
            if self.sign not in (1, -1):
                raise ValueError("trivial parity sign must be +1 or -1")
            object.__setattr__(self, "a", None)
        elif self.kind == "nontrivial":
            a = as_vec3(self.a, dtype=np.complex128)
            a.setflags(write=False)
            object.__setattr__(self, "a", a)
        else:
            raise ValueError(f"unknown parity kind {self.kind!r}")

    @property
    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    @property
    def f(self) -> np.ndarray:
        self._require_nontrivial()
        return self.a.real.copy()

    @property
    def b(self) -> np.ndarray:
        self._require_nontrivial()
        return self.a.imag.copy()

    @property
    def matrix(self) -> np.ndarray:
        if self.is_trivial:
            return self.sign * np.eye(2, dtype=np.complex128)
        a1, a2, a3 = self.a
        return np.array([[a3, a1 - 1j * a2], [a1 + 1j * a2, -a3]])

    def __neg__(self) -> "Parity":
        if self.is_trivial:
            return Parity("trivial", sign=-self.sign)
        return Parity("nontrivial", a=-self.a)

    def _require_nontrivial(self):
        if self.is_trivial:
            raise TrivialParity("operation needs a nontrivial parity")

    def __repr__(self):
        if self.is_trivial:
            return f"Parity(trivial, sign={self.sign:+d})"
        return f"Parity(a={self.a.tolist()!r})"


def trivial_parity(sign: int = 1) -> Parity:
    return Parity("trivial", sign=sign)


def parity_from_a(a, tol: float = VALIDATION_TOL) -> Parity:
    """Nontrivial parity ``a . sigma``; requires ``sum a_i^2 = 1``."""
    a = as_vec3(a, dtype=np.complex128)
    residual = abs(complex(np.sum(a * a)) - 1.0)
    if residual > tol:
        raise ConstraintViolated(f"sum a_i^2 = 1 violated by {residual:.3g}", residual=residual)
    return Parity("nontrivial", a=a)


def parity_from_fb(f, b, tol: float = VALIDATION_TOL) -> Parity:
    """Nontrivial parity with ``a = f + i b``; needs ``f.b = 0`` and ``|f|^2 - |b|^2 = 1``."""
    f = as_vec3(f)
    b = as_vec3(b)
    residual = max(abs(float(f @ b)), abs(float(f @ f - b @ b) - 1.0))
    if residual > tol:
        raise ConstraintViolated(f"f.b = 0, |f|^2-|b|^2 = 1 violated by {residual:.3g}", residual=residual)
    return Parity("nontrivial", a=f + 1j * b)


def parity_from_matrix(m, tol: float = VALIDATION_TOL) -> Parity:
    """Recognise a 2x2 involution as a :class:`Parity`."""
    m = np.asarray(m, dtype=np.complex128)
    sq = float(np.max(np.abs(m @ m - np.eye(2))))
    if sq > tol:
        raise ConstraintViolated(f"P^2 = I violated by {sq:.3g}", residual=sq)
    h = pauli_decompose(m)
    for sign in (1, -1):
        if float(np.max(np.abs(m - sign * np.eye(2)))) <= tol:
            return trivial_parity(sign)
    if abs(h.h0) > tol:
        raise ConstraintViolated("nontrivial parity must be traceless", residual=abs(h.h0))
    return parity_from_a(h.vector, tol=tol)


@dataclass(frozen=True, eq=False)
class TimeReversal:
    """Anti-linear ``T`` with ``T^2 = square * I``."""

    coeffs: TauCoeffs
    square: int

    @property
    def eps(self) -> complex:
        return self.coeffs.eps

    @property
    def c(self) -> np.ndarray:
        return np.array(self.coeffs.c)

    @property
    def c0(self) -> float:
        return self.coeffs.c0

    @property
    def ctilde(self) -> np.ndarray:
        return self.coeffs.ctilde

    @property
    def has_real_eps(self) -> bool:
        return abs(self.eps.imag) <= TOL

    @property
    def anti(self) -> AntiOp2:
        return tau_compose(self.coeffs)

    @property
    def mat(self) -> np.ndarray:
        return self.anti.mat

    def __neg__(self) -> "TimeReversal":
        return TimeReversal(TauCoeffs(-self.eps, self.coeffs.c), self.square)

    def __repr__(self):
        return f"TimeReversal(eps={self.eps!r}, c={self.coeffs.c!r}, square={self.square:+d})"


def _square_sign(c: np.ndarray, tol: float) -> int:
    q = float(c[1:] @ c[1:] - c[0] ** 2)
    if abs(q - 1.0) <= tol:
        return 1
    if abs(q + 1.0) <= tol:
        return -1
    raise NotInvolutionLike(
        f"|c~|^2 - c0^2 = {q!r}, expected +1 or -1", residual=min(abs(q - 1.0), abs(q + 1.0))
    )


def time_reversal_from_c(eps, c, tol: float = VALIDATION_TOL) -> TimeReversal:
    """Time reversal ``eps * sum c_i tau_i`` with ``c = (c0, c1, c2, c3)``."""
    eps = complex(eps)
    if abs(abs(eps) - 1.0) > tol:
        raise NotUnimodular(f"|eps| = {abs(eps)!r}", residual=abs(abs(eps) - 1.0))
    eps = eps / abs(eps)
    c = np.asarray(c, dtype=np.float64)
    if c.shape != (4,):
        raise ValueError("expected c = (c0, c1, c2, c3)")
    square = _square_sign(c, tol)
    return TimeReversal(TauCoeffs(eps, tuple(c)), square)


def time_reversal_from_anti(s: AntiOp2, tol: float = VALIDATION_TOL) -> TimeReversal:
    """Recognise an anti-linear operator as a time reversal."""
    coeffs = tau_decompose(s, tol=max(tol * 1e-3, TOL))
    square = _square_sign(np.array(coeffs.c), tol)
    sq = compose_aa(s, s)
    residual = float(np.max(np.abs(sq - square * np.eye(2))))
    if residual > tol:
        raise NotInvolutionLike(f"T^2 = {square:+d} I violated by {residual:.3g}", residual=residual)
    return TimeReversal(coeffs, square)


def commutation_residual(p: Parity, t: TimeReversal) -> float:
    """``max |P T - T P|`` over matrix entries (``P T`` has matrix ``P M``, ``T P`` has ``M conj(P)``)."""
    pm = p.matrix
    m = t.mat
    return float(np.max(np.abs(pm @ m - m @ pm.conj())))


def commutes_matrix(p: Parity, t: TimeReversal, tol: float = VALIDATION_TOL) -> bool:
    return commutation_residual(p, t) <= tol


def vector_residuals(p: Parity, t: TimeReversal) -> tuple[float, float]:
    """Norms of ``c0 f + b x c~`` and ``f . c~``."""
    f, b = p.f, p.b
    ct = t.ctilde
    return float(np.linalg.norm(t.c0 * f + np.cross(b, ct))), abs(float(f @ ct))


def commutes_vec(p: Parity, t: TimeReversal, tol: float = VALIDATION_TOL) -> bool:
    """Commutation decided through the vector equations.

    A trivial ``P`` commutes with everything; that case returns ``True`` and
    emits :class:`TrivialParityWarning`.
    """
    if p.is_trivial:
        warnings.warn("trivial parity commutes vacuously", TrivialParityWarning, stacklevel=2)
        return True
    r1, r2 = vector_residuals(p, t)
    return r1 <= tol and r2 <= tol


def construct_parity(t: TimeReversal, tol: float = VALIDATION_TOL) -> Parity:
    """A nontrivial parity commuting with ``t`` (requires ``T^2 = I``).

    For ``c0 = 0`` take ``b = 0`` and ``f`` a unit vector perpendicular to
    ``c~``; otherwise take ``b`` perpendicular to ``c~`` with ``|b| = |c0|``
    and ``f = (c~ x b) / c0``.
    """
    if t.square != 1:
        raise NegativeSquare("T^2 = -I: only P = +-I commutes with T")
    ct, c0 = t.ctilde, t.c0
    p = perpendicular(ct)
    if abs(c0) <= tol:
        return parity_from_fb(p, np.zeros(3), tol=tol)
    b = abs(c0) * p
    f = np.cross(ct, b) / c0
    return parity_from_fb(f, b, tol=tol)


def commutant_basis(t: TimeReversal, tol: float = TOL) -> list[np.ndarray]:
    """Brute-force basis of ``{X : X T = T X}`` (see :mod:`ptsym2.oracle`)."""
    return oracle.commutant_basis(t.anti, tol=tol)


def same_commutant(t1: TimeReversal, t2: TimeReversal, tol: float = VALIDATION_TOL) -> bool:
    """True iff the normalised coefficient vectors agree, i.e. ``c1 = eps c2``."""
    return float(np.max(np.abs(t1.c - t2.c))) <= tol


def _parity_pair(f, b, ts, tol) -> list[Parity]:
    try:
        p = parity_from_fb(f, b, tol=tol)
    except ConstraintViolated:
        return []
    if not all(commutes_matrix(p, t, tol=tol) for t in ts):
        return []
    return [p, -p]


def shared_parities(t1: TimeReversal, t2: TimeReversal, tol: float = VALIDATION_TOL) -> list[Parity]:
    """Nontrivial parities commuting with both ``t1`` and ``t2``.

    Returns ``[P, -P]`` or an empty list. Follows the case split on which of
    the two ``c0`` vanish; both time reversals must satisfy ``T^2 = I`` and
    must not coincide up to a phase.
    """
    for t in (t1, t2):
        if t.square != 1:
            raise NegativeSquare("shared_parities needs T^2 = I for both operators")
    if same_commutant(t1, t2, tol=tol):
        raise NotDistinct("T1 = eps T2: the commutants coincide")
    if abs(t1.c0) <= tol and abs(t2.c0) > tol:
        t1, t2 = t2, t1
    c01, c02 = t1.c0, t2.c0
    ct1, ct2 = t1.ctilde, t2.ctilde

    if abs(c01) > tol and abs(c02) <= tol:
        # b = m c~2 and f = m (c~1 x c~2) / c01; |f|^2 - |b|^2 = 1 fixes m^2.
        cross = np.cross(ct1, ct2) / c01
        coef = float(cross @ cross - ct2 @ ct2)
        if coef <= tol:
            return []
        m = 1.0 / np.sqrt(coef)
        return _parity_pair(m * cross, m * ct2, (t1, t2), tol)

    if abs(c01) <= tol and abs(c02) <= tol:
        n = np.cross(ct1, ct2)
        norm = float(np.linalg.norm(n))
        if norm <= tol:
            raise NotDistinct("c~1 and c~2 are parallel with c0 = 0, so T1 = +-T2")
        return _parity_pair(n / norm, np.zeros(3), (t1, t2), tol)

    # Both c0 nonzero: b is parallel to c~1/c01 - c~2/c02.
    d = ct1 / c01 - ct2 / c02
    dn = float(np.linalg.norm(d))
    if dn <= tol:
        raise NotDistinct("c1 is proportional to c2, so T1 = +-T2")
    dhat = d / dn
    g = np.cross(ct1, dhat) / c01
    coef = float(g @ g) - 1.0
    if coef <= tol:
        return []
    k = 1.0 / np.sqrt(coef)
    return _parity_pair(k * g, k * dhat, (t1, t2), tol)
