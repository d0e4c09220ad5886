"""JSON and CSV encodings used by the command line.

A complex number is ``[re, im]``, a 2x2 matrix is a row-major nested list of
those, an anti-linear operator is ``{"mat": <matrix>}``. Floats are written
with 17 significant digits so that every value round-trips exactly.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

import numpy as np

from .algebra import AntiOp2, PauliCoeffs, TauCoeffs, as_linop
from .config import VALIDATION_TOL
from .errors import NotInvolutionLike
from .hamiltonian import SpectralClass
from .symmetry import Parity, TimeReversal, parity_from_a, time_reversal_from_c, trivial_parity


class ParseError(ValueError):
    """Malformed payload (bad JSON or wrong structure)."""


def fmt_float(x: float) -> str:
    return "%.17g" % (float(x) + 0.0)


def dumps(obj: Any) -> str:
    """Compact deterministic JSON with 17-significant-digit floats."""
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not np.isfinite(obj):
            raise ValueError("cannot serialise non-finite float")
        return fmt_float(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else fmt_float(v) for v in row))
    return "\n".join(lines) + "\n"


# -- encoders ---------------------------------------------------------------


def complex_to_json(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def linop_to_json(m) -> list:
    m = np.asarray(m)
    return [[complex_to_json(m[i, j]) for j in range(2)] for i in range(2)]


def anti_to_json(s: AntiOp2) -> dict:
    return {"mat": linop_to_json(s.mat)}


def parity_to_json(p: Parity) -> dict:
    if p.is_trivial:
        return {"kind": "trivial", "sign": p.sign}
    return {"kind": "nontrivial", "a": [complex_to_json(z) for z in p.a]}


def time_reversal_to_json(t: TimeReversal) -> dict:
    return {"eps": complex_to_json(t.eps), "c": list(t.coeffs.c), "square": t.square}


def pauli_coeffs_to_json(h: PauliCoeffs) -> dict:
    return {"h": [complex_to_json(z) for z in h]}


def tau_coeffs_to_json(c: TauCoeffs) -> dict:
    return {"eps": complex_to_json(c.eps), "c": list(c.c)}


def spectral_to_json(cls: SpectralClass) -> dict:
    return {
        "tag": cls.tag.value,
        "lambda": [complex_to_json(cls.lambda1), complex_to_json(cls.lambda2)],
        "disc": cls.discriminant,
    }


# -- decoders ---------------------------------------------------------------


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at position {exc.pos}") from None


def parse_complex(v) -> complex:
    if isinstance(v, bool):
        raise ParseError("expected a number or [re, im]")
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in v
    ):
        return complex(v[0], v[1])
    raise ParseError(f"expected a complex number [re, im], got {v!r}")


def parse_linop(v) -> np.ndarray:
    if isinstance(v, dict) and "matrix" in v:
        v = v["matrix"]
    if not (isinstance(v, list) and len(v) == 2 and all(isinstance(r, list) and len(r) == 2 for r in v)):
        raise ParseError("expected a 2x2 matrix [[z11, z12], [z21, z22]]")
    return as_linop([[parse_complex(z) for z in row] for row in v])


def parse_anti(v) -> AntiOp2:
    if isinstance(v, dict):
        if "mat" not in v:
            raise ParseError('expected {"mat": <matrix>}')
        v = v["mat"]
    return AntiOp2(parse_linop(v))


def _require_keys(v, keys, what):
    if not isinstance(v, dict):
        raise ParseError(f"expected a JSON object for {what}")
    missing = [k for k in keys if k not in v]
    if missing:
        raise ParseError(f"{what} is missing keys {missing}")


def parse_parity(v, tol: float = VALIDATION_TOL) -> Parity:
    _require_keys(v, ["kind"], "parity")
    if v["kind"] == "trivial":
        _require_keys(v, ["sign"], "parity")
        if v["sign"] not in (1, -1):
            raise ParseError("trivial parity sign must be 1 or -1")
        return trivial_parity(int(v["sign"]))
    if v["kind"] == "nontrivial":
        _require_keys(v, ["a"], "parity")
        a = v["a"]
        if not (isinstance(a, list) and len(a) == 3):
            raise ParseError("parity 'a' must hold three complex numbers")
        return parity_from_a([parse_complex(z) for z in a], tol=tol)
    raise ParseError(f"unknown parity kind {v['kind']!r}")


def parse_time_reversal(v, tol: float = VALIDATION_TOL) -> TimeReversal:
    _require_keys(v, ["eps", "c"], "time reversal")
    c = v["c"]
    if not (isinstance(c, list) and len(c) == 4 and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in c)):
        raise ParseError("time reversal 'c' must hold four real numbers")
    t = time_reversal_from_c(parse_complex(v["eps"]), c, tol=tol)
    if "square" in v and v["square"] != t.square:
        raise NotInvolutionLike(f"declared square {v['square']!r} but coefficients give {t.square:+d}")
    return t
