"""Brute-force commutant oracle.

Nothing here uses the vector equations or the closed-form constructions of
:mod:`ptsym2.symmetry` and :mod:`ptsym2.geometry`. Commutation with an
anti-linear ``T = M K`` is the real-linear condition ``X M = M conj(X)`` on
the eight real parameters of ``X``; its solution space is read off an SVD.
Involutions inside a solution space are then found by Gauss-Newton on
``X^2 = I`` from fixed starting points.
"""

from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

from .algebra import AntiOp2, tau
from .config import ORACLE_TOL, TOL

__all__ = [
    "real_basis",
    "nullspace",
    "commutant_basis",
    "joint_commutant_basis",
    "involutions",
    "nontrivial_involutions",
    "subspace_distance",
    "time_reversal_space",
    "commuting_time_reversal_coeffs",
    "starting_points",
]

N_STARTS = 16
DEDUP_DIST = 1e-6


def real_basis() -> list[np.ndarray]:
    """The eight matrices ``E_jk`` and ``i E_jk`` spanning M_2(C) over R."""
    out = []
    for scale in (1.0, 1j):
        for idx in range(4):
            e = np.zeros(4, dtype=np.complex128)
            e[idx] = scale
            out.append(e.reshape(2, 2))
    return out


def _realify(m: np.ndarray) -> np.ndarray:
    flat = np.asarray(m).reshape(-1)
    return np.concatenate([flat.real, flat.imag])


def _system(op: Callable[[np.ndarray], np.ndarray], basis: list[np.ndarray]) -> np.ndarray:
    return np.stack([_realify(op(e)) for e in basis], axis=1)


def nullspace(a: np.ndarray, tol: float = TOL) -> np.ndarray:
    """Orthonormal columns spanning ``ker a`` (relative singular value cutoff)."""
    _, s, vh = np.linalg.svd(a)
    cutoff = tol * max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return vh[rank:].T.copy()


def _commutation_rows(t: AntiOp2) -> np.ndarray:
    m = t.mat
    return _system(lambda x: x @ m - m @ x.conj(), real_basis())


def commutant_basis(t: AntiOp2, tol: float = TOL) -> list[np.ndarray]:
    """Basis (orthonormal in the real Frobenius product) of ``{X : X T = T X}``."""
    return joint_commutant_basis([t], tol=tol)


def joint_commutant_basis(ts: Iterable[AntiOp2], tol: float = TOL) -> list[np.ndarray]:
    rows = np.vstack([_commutation_rows(t) for t in ts])
    ns = nullspace(rows, tol=tol)
    basis = real_basis()
    return [sum(coef * e for coef, e in zip(col, basis)) for col in ns.T]


def starting_points(dim: int, n: int = N_STARTS) -> np.ndarray:
    """``n`` fixed points on the unit sphere in R^dim."""
    rng = np.random.Generator(np.random.Philox(20240531 + dim))
    pts = rng.standard_normal((n, dim))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def _newton(basis: np.ndarray, y: np.ndarray, max_iter: int = 60) -> tuple[np.ndarray, float]:
    eye = np.eye(2)
    res = np.inf
    history: list[float] = []
    for _ in range(max_iter):
        x = np.tensordot(y, basis, axes=1)
        sq = x @ x
        s = sq[0, 0]
        if s.real > 0 and float(np.max(np.abs(sq - s * eye))) <= 1e-12 * abs(s) and abs(s.imag) <= 1e-12 * s.real:
            # X^2 = s I with s > 0: rescaling lands exactly on X^2 = I
            y = y / np.sqrt(s.real)
            x = np.tensordot(y, basis, axes=1)
            sq = x @ x
        f = _realify(sq - eye)
        res = float(np.max(np.abs(f)))
        if res <= 1e-15:
            break
        history.append(res)
        if len(history) > 8 and res > 0.5 * history[-9]:
            break  # stalled: no root near this start
        jac = np.stack([_realify(b @ x + x @ b) for b in basis], axis=1)
        step, *_ = np.linalg.lstsq(jac, f, rcond=None)
        y = y - step
        if not np.all(np.isfinite(y)):
            return y, np.inf
    x = np.tensordot(y, basis, axes=1)
    return y, float(np.max(np.abs(x @ x - eye)))


def traceless_part(basis: list[np.ndarray], tol: float = TOL) -> list[np.ndarray]:
    """Basis of the trace-zero elements of ``span(basis)``, whitened for ``X^2``.

    A traceless 2x2 matrix squares to ``(tr(X^2) / 2) I``. The returned
    ``B_k`` diagonalise the form ``g(X, Y) = tr(XY) / 2`` with entries +-1
    (positive first), so ``X = sum z_k B_k`` squares to a signed sum of
    squares of ``z`` and the unit-sphere starts meet the solvable region
    in the same place for every input.
    """
    if not basis:
        return []
    b = np.stack(basis)
    tr = np.array([[np.trace(m).real for m in basis], [np.trace(m).imag for m in basis]])
    coords = nullspace(tr, tol=tol)
    if coords.shape[1] == 0:
        return []
    mats = [np.tensordot(coords[:, k], b, axes=1) for k in range(coords.shape[1])]
    q, _ = np.linalg.qr(np.stack([_realify(m) for m in mats], axis=1))
    ortho = [q[:4, k].reshape(2, 2) + 1j * q[4:, k].reshape(2, 2) for k in range(q.shape[1])]
    g = np.array([[np.trace(x @ y).real / 2.0 for y in ortho] for x in ortho])
    vals, vecs = np.linalg.eigh(g)
    order = np.argsort(-vals, kind="stable")
    out = []
    for k in order:
        scale = np.sqrt(abs(vals[k])) if abs(vals[k]) > tol else 1.0
        out.append(sum(vecs[j, k] * ortho[j] for j in range(len(ortho))) / scale)
    return out


def involutions(basis: list[np.ndarray], tol: float = ORACLE_TOL, n_starts: int = N_STARTS) -> list[np.ndarray]:
    """Solutions of ``X^2 = I`` inside ``span(basis)``.

    Gauss-Newton from ``n_starts`` deterministic starting points; solutions
    closer than 1e-6 are merged.
    """
    if not basis:
        return []
    found: list[np.ndarray] = []
    # Every involution other than +-I has eigenvalues +1 and -1, hence zero
    # trace. The plain pass is drawn to +-I, which lie closest to the
    # unit-sphere starts, so a second pass runs inside the traceless part.
    for sub in (basis, traceless_part(basis)):
        if not sub:
            continue
        b = np.stack(sub)
        for y0 in starting_points(len(sub), n_starts):
            y, res = _newton(b, y0.copy())
            if res > tol:
                continue
            x = np.tensordot(y, b, axes=1)
            if all(np.max(np.abs(x - other)) > DEDUP_DIST for other in found):
                found.append(x)
    return found


def nontrivial_involutions(basis: list[np.ndarray], tol: float = ORACLE_TOL) -> list[np.ndarray]:
    """Involutions other than ``+-I``."""
    eye = np.eye(2)
    return [
        x
        for x in involutions(basis, tol=tol)
        if np.max(np.abs(x - eye)) > DEDUP_DIST and np.max(np.abs(x + eye)) > DEDUP_DIST
    ]


def subspace_distance(a: list[np.ndarray], b: list[np.ndarray]) -> float:
    """Spectral norm of the difference of orthogonal projectors (real coordinates)."""

    def projector(basis):
        if not basis:
            return np.zeros((8, 8))
        q, _ = np.linalg.qr(np.stack([_realify(m) for m in basis], axis=1))
        return q @ q.T

    return float(np.linalg.norm(projector(a) - projector(b), 2))


def time_reversal_space(p_matrix: np.ndarray, tol: float = TOL) -> np.ndarray:
    """Real coefficient vectors ``c`` with ``sum c_i tau_i`` commuting with ``P``.

    Returns orthonormal columns in R^4.
    """
    p = np.asarray(p_matrix, dtype=np.complex128)

    cols = []
    for i in range(4):
        m = tau(i).mat
        cols.append(_realify(p @ m - m @ p.conj()))
    return nullspace(np.stack(cols, axis=1), tol=tol)


def commuting_time_reversal_coeffs(p_matrix: np.ndarray, n: int = 32) -> list[np.ndarray]:
    """Sample ``c`` with ``|c~|^2 - c0^2 = 1`` in :func:`time_reversal_space`."""
    q = time_reversal_space(p_matrix)
    if q.shape[1] == 0:
        return []
    out = []
    for y in starting_points(q.shape[1], n):
        c = q @ y
        form = float(c[1:] @ c[1:] - c[0] ** 2)
        if form > 1e-6:
            out.append(c / np.sqrt(form))
    return out
