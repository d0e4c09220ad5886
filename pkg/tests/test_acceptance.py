"""Acceptance criteria 1-7, each at its stated tolerance and time budget.

Every test records a PASS/FAIL line that ``conftest.py`` prints in the
terminal summary. Run ``pytest tests/test_acceptance.py`` to see only these.
"""

import itertools
import json
import time

import numpy as np
import pytest

from ptsym2 import oracle
from ptsym2.algebra import compose_aa, compose_al, compose_la, levi_civita, pauli, pauli_dot, tau
from ptsym2.geometry import (
    ellipse_for_parity,
    hyperboloid_residual,
    parity_to_point,
    point_to_parity,
    sample_hyperboloid_points,
    time_reversal_on_ellipse,
)
from ptsym2.hamiltonian import (
    SpectralTag,
    bender_hamiltonian,
    classify,
    discriminant,
    eigen,
    family_from_symmetry,
)
from ptsym2.symmetry import (
    commutation_residual,
    construct_parity,
    parity_from_matrix,
    same_commutant,
    shared_parities,
    time_reversal_from_c,
)

from helpers import maxabs, random_c, random_complex, random_parity, random_time_reversal
from test_cli import CASES, golden_path, invoke

RESULTS = {}


def record(n, title, ok, elapsed, detail=""):
    RESULTS[n] = f"criterion {n} {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f} s){'  ' + detail if detail else ''}"


def check(n, title, budget=None):
    """Decorator: time the body, record the verdict, then re-raise any failure."""

    def wrap(fn):
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                detail = fn(*args, **kwargs) or ""
            except BaseException as exc:
                record(n, title, False, time.perf_counter() - start, f"{type(exc).__name__}: {exc}"[:200])
                raise
            elapsed = time.perf_counter() - start
            ok = budget is None or elapsed < budget
            record(n, title, ok, elapsed, detail if ok else f"over the {budget} s budget")
            assert ok, f"criterion {n} took {elapsed:.2f} s (budget {budget} s)"

        run.__name__ = fn.__name__
        return run

    return wrap


def gen(seed):
    return np.random.default_rng(seed)


# -- 1 ----------------------------------------------------------------------


def algebra_identities():
    s = {i: pauli(i) for i in range(4)}
    t = {i: tau(i) for i in range(4)}
    eye = s[0]
    out = []
    for i, j in itertools.permutations(range(1, 4), 2):
        k = 6 - i - j
        e = levi_civita(i, j, k)
        out.append((np.concatenate([s[i] @ s[j], -s[j] @ s[i]]), np.concatenate([1j * e * s[k]] * 2)))
    for i in range(1, 4):
        out.append((s[i] @ s[i], eye))
    for i, j in itertools.permutations(range(1, 4), 2):
        k = 6 - i - j
        e = levi_civita(i, j, k)
        lhs = np.concatenate([compose_la(s[j], t[i]).mat, compose_al(t[i], s[j]).mat])
        out.append((lhs, np.concatenate([-1j * e * t[k].mat] * 2)))
    for i in range(1, 4):
        lhs = np.concatenate([compose_al(t[i], s[i]).mat, -compose_la(s[i], t[i]).mat])
        out.append((lhs, np.concatenate([t[0].mat] * 2)))
    out.append((compose_aa(t[0], t[0]), -eye))
    for i in range(1, 4):
        lhs = np.concatenate([compose_al(t[0], s[i]).mat, -compose_la(s[i], t[0]).mat])
        out.append((lhs, np.concatenate([t[i].mat] * 2)))
    for i in range(1, 4):
        lhs = np.concatenate([compose_aa(t[i], t[0]), -compose_aa(t[0], t[i])])
        out.append((lhs, np.concatenate([s[i]] * 2)))
    return out


@check(1, "algebra identities and product formula", budget=1.0)
def test_criterion_1_algebra():
    ids = algebra_identities()
    assert len(ids) == 25
    worst = max(maxabs(a - b) for a, b in ids)
    assert worst <= 1e-12
    rng = gen(1)
    a = random_complex(rng, (1000, 3))
    b = random_complex(rng, (1000, 3))
    pc = 0.0
    for x, y in zip(a, b):
        lhs = pauli_dot(x) @ pauli_dot(y)
        rhs = (x @ y) * np.eye(2) + 1j * pauli_dot(np.cross(x, y))
        pc = max(pc, maxabs(lhs - rhs))
    assert pc <= 1e-12
    return f"25 identities max err {worst:.1e}; product formula max err {pc:.1e}"


# -- 2 ----------------------------------------------------------------------


@check(2, "parity construction and negative-square commutants", budget=10.0)
def test_criterion_2_parity_construction():
    rng = gen(2)
    worst_sq = worst_comm = 0.0
    for i in range(1000):
        t = random_time_reversal(rng, c0_zero=i % 10 == 0, phase="complex" if i % 2 else "real")
        p = construct_parity(t)
        worst_sq = max(worst_sq, maxabs(p.matrix @ p.matrix - np.eye(2)))
        worst_comm = max(worst_comm, commutation_residual(p, t))
    assert worst_sq <= 1e-10 and worst_comm <= 1e-10
    extra = 0
    for _ in range(200):
        t = random_time_reversal(rng, square=-1, phase="complex")
        extra += len(oracle.nontrivial_involutions(oracle.commutant_basis(t.anti), tol=1e-8))
    assert extra == 0
    return f"|P^2-I| {worst_sq:.1e}, residual {worst_comm:.1e}, nontrivial involutions for T^2=-I: {extra}"


# -- 3 ----------------------------------------------------------------------


@check(3, "hyperboloid bijection and surface membership")
def test_criterion_3_hyperboloid():
    rng = gen(3)
    worst = 0.0
    for c0_zero in (True, False):
        count = 0
        while count < 500:
            t = random_time_reversal(rng, c0_zero=c0_zero)
            for pt, p in sample_hyperboloid_points(t, 5, seed=int(rng.integers(1 << 31))):
                m = parity_to_point(p, t).m
                back = point_to_parity(m, t)
                worst = max(worst, maxabs(m - pt.m), maxabs(back.matrix - p.matrix))
                count += 1
    assert worst <= 1e-10
    surf = 0.0
    for i in range(40):
        t = random_time_reversal(rng, c0_zero=i % 2 == 0)
        found = oracle.nontrivial_involutions(oracle.commutant_basis(t.anti))
        assert found
        for x in found:
            m = parity_to_point(parity_from_matrix(x, tol=1e-8), t, tol=1e-8).m
            surf = max(surf, abs(hyperboloid_residual(m, t.c0)))
    assert surf <= 1e-9
    t = time_reversal_from_c(1, (1, np.sqrt(2), 0, 0))
    m = parity_to_point(construct_parity(t), t).m
    hand = max(maxabs(m - [0, 1, np.sqrt(2)]), abs(hyperboloid_residual(m, 1.0)))
    assert hand <= 1e-12
    return f"round trip {worst:.1e}, oracle surface residual {surf:.1e}, hand value {hand:.1e}"


# -- 4 ----------------------------------------------------------------------


@check(4, "ellipse sweep and completeness")
def test_criterion_4_ellipse():
    rng = gen(4)
    phis = 2 * np.pi * np.arange(64) / 64
    comm = axes = 0.0
    for i in range(200):
        p = random_parity(rng, b_scale=0.0 if i % 20 == 0 else 1.0)
        spec = ellipse_for_parity(p)
        proj = []
        for phi in phis:
            t = time_reversal_on_ellipse(p, phi)
            comm = max(comm, commutation_residual(p, t))
            c1, c2, _ = spec.frame.to_frame(t.ctilde)
            proj.append(np.hypot(c1, c2))
        axes = max(axes, abs(max(proj) - np.linalg.norm(p.f)), abs(min(proj) - 1.0))
    assert comm <= 1e-10 and axes <= 1e-9
    on = 0.0
    for _ in range(100):
        p = random_parity(rng)
        spec = ellipse_for_parity(p)
        cs = oracle.commuting_time_reversal_coeffs(p.matrix, n=16)
        assert cs
        for c in cs:
            res, c3 = spec.residual(c[1:])
            on = max(on, abs(res), abs(c3))
    assert on <= 1e-9
    return f"sweep residual {comm:.1e}, semi-axes error {axes:.1e}, oracle ellipse residual {on:.1e}"


# -- 5 ----------------------------------------------------------------------


@check(5, "shared parities and equal commutants")
def test_criterion_5_shared_parities():
    rng = gen(5)
    sizes = {0: 0, 2: 0}
    worst = 0.0
    for i in range(500):
        if i % 2:
            # planted: both commute with a common parity
            p = random_parity(rng)
            cs = oracle.commuting_time_reversal_coeffs(p.matrix, n=8)
            t1 = time_reversal_from_c(1, cs[int(rng.integers(4))])
            t2 = time_reversal_from_c(1, cs[4 + int(rng.integers(4))])
        else:
            t1 = random_time_reversal(rng, c0_zero=i % 6 == 0)
            t2 = random_time_reversal(rng, c0_zero=i % 10 == 0)
        got = shared_parities(t1, t2)
        assert len(got) in (0, 2)
        if i < 60:
            ref = oracle.nontrivial_involutions(oracle.joint_commutant_basis([t1.anti, t2.anti]))
            assert len(ref) == len(got)
            for x in ref:
                assert min(maxabs(x - q.matrix) for q in got) <= 1e-8
        sizes[len(got)] += 1
        if got:
            worst = max(worst, maxabs(got[0].matrix + got[1].matrix))
            for q in got:
                worst = max(worst, commutation_residual(q, t1), commutation_residual(q, t2))
    assert worst <= 1e-10 and sizes[0] and sizes[2]
    agree = 0
    for i in range(200):
        t1 = random_time_reversal(rng)
        if i % 2:
            t2 = time_reversal_from_c(np.exp(1j * rng.uniform(0, 2 * np.pi)), t1.c)
        elif i % 4 == 0:
            t2 = random_time_reversal(rng)
        else:
            c = t1.c + rng.normal(size=4) * 1e-3
            c[0] = t1.c0 if abs(t1.c0) > 0 else c[0]
            c[1:] *= np.sqrt((1 + c[0] ** 2) / (c[1:] @ c[1:]))
            t2 = time_reversal_from_c(1, c)
        ref = oracle.subspace_distance(oracle.commutant_basis(t1.anti), oracle.commutant_basis(t2.anti)) <= 1e-10
        agree += same_commutant(t1, t2) == ref
    assert agree == 200
    return f"0 shared: {sizes[0]}, 2 shared: {sizes[2]}, sign/commutation error {worst:.1e}, equal-commutant agreement {agree}/200"


# -- 6 ----------------------------------------------------------------------


@check(6, "Hamiltonian classification", budget=10.0)
def test_criterion_6_hamiltonians():
    rng = gen(6)
    for i in range(2000):
        t = time_reversal_from_c(1, random_c(rng, 1 if i % 2 else -1, c0_zero=i % 7 == 0 and i % 2 == 1))
        h = family_from_symmetry(t, rng.normal(size=4) * 2)
        real = all(abs(z.imag) <= 1e-9 for z in eigen(h).values)
        assert real == (discriminant(h) >= -1e-9)
    checked = 0
    for theta in np.linspace(0, np.pi, 50):
        for s in np.linspace(0, 2, 50):
            gap = s * s - np.sin(theta) ** 2
            if abs(gap) <= 1e-6:
                continue
            assert classify(bender_hamiltonian(1.0, theta, s)).tag.unbroken == (gap > 0)
            checked += 1
    cls = classify(bender_hamiltonian(1.0, np.pi / 6, 1.0))
    assert abs(cls.lambda1 - np.sqrt(3)) <= 1e-12 and abs(cls.lambda2) <= 1e-12
    d = np.array([[1j, 1], [1, -1j]])
    cls = classify(d)
    a = d - cls.lambda1 * np.eye(2)
    assert cls.tag is SpectralTag.UNBROKEN_DEFECTIVE and maxabs(a @ a) <= 1e-12
    for _ in range(500):
        x = random_complex(rng, (2, 2)) * 3
        assert classify(x + x.conj().T).tag is not SpectralTag.BROKEN
    return f"2000 family samples, {checked} Bender cells, 500 Hermitian"


# -- 7 ----------------------------------------------------------------------


@check(7, "CLI golden files and determinism")
def test_criterion_7_cli():
    for name, argv in CASES.items():
        code, first, _ = invoke(argv)
        second = invoke(argv)[1]
        assert code == 0 and first == second
        assert first == golden_path(name, argv).read_text(encoding="utf-8")
        if "csv" not in argv:
            json.loads(first)
    return f"{len(CASES)} golden cases"


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
