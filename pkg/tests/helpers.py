"""Random generators shared by the test modules."""

import numpy as np

from ptsym2.symmetry import parity_from_fb, time_reversal_from_c


def unit(rng, n=3):
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def random_phase(rng, kind="real"):
    if kind == "real":
        return float(rng.choice([-1.0, 1.0]))
    if kind == "complex":
        return complex(np.exp(1j * rng.uniform(0, 2 * np.pi)))
    return 1.0


def random_c(rng, square=1, c0_zero=False):
    if square == 1:
        c0 = 0.0 if c0_zero else float(rng.normal() * 1.5)
        ct = unit(rng) * np.sqrt(1.0 + c0 * c0)
    else:
        r = abs(float(rng.normal())) * 1.5
        c0 = float(rng.choice([-1.0, 1.0])) * np.sqrt(1.0 + r * r)
        ct = unit(rng) * r
    return np.array([c0, *ct])


def random_time_reversal(rng, square=1, c0_zero=False, phase="real"):
    return time_reversal_from_c(random_phase(rng, phase), random_c(rng, square, c0_zero))


def random_fb(rng, b_scale=1.0):
    b = rng.standard_normal(3) * b_scale
    if np.linalg.norm(b) < 1e-3:
        f = unit(rng)
    else:
        f = np.cross(b, unit(rng))
        f /= np.linalg.norm(f)
    f *= np.sqrt(1.0 + b @ b)
    return f, b


def random_parity(rng, b_scale=1.0):
    f, b = random_fb(rng, b_scale)
    return parity_from_fb(f, b)


def random_complex(rng, shape=()):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def maxabs(a):
    return float(np.max(np.abs(np.asarray(a))))
