"""Command line front end: ``ptsym2 <group> <action> [flags]``.

Payload flags take inline JSON or a path to a JSON file. Results go to
stdout; errors go to stderr as one line of JSON. Exit codes: 0 success,
2 validation error, 3 parse error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import oracle
from .algebra import pauli_decompose, tau_decompose
from .config import TOL, env_tolerance
from .errors import PTSymError
from .geometry import ellipse_for_parity, sample_hyperboloid_points, time_reversal_on_ellipse
from .hamiltonian import bender_hamiltonian, classify, discriminant, family_from_symmetry
from .serialization import (
    ParseError,
    dumps,
    linop_to_json,
    loads,
    pauli_coeffs_to_json,
    parity_to_json,
    parse_anti,
    parse_linop,
    parse_parity,
    parse_time_reversal,
    spectral_to_json,
    tau_coeffs_to_json,
    write_csv,
)
from .symmetry import commutant_basis, commutation_residual, construct_parity

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _payload(value: str):
    path = Path(value)
    if not value.lstrip().startswith(("{", "[")) and path.is_file():
        value = path.read_text(encoding="utf-8")
    return loads(value)


def _range(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ParseError(f"range must be start:stop:count, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"range must be start:stop:count, got {text!r}") from None
    if count < 1:
        raise ParseError("range count must be at least 1")
    return np.linspace(start, stop, count)


def _params(text: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"--params must be four comma-separated reals, got {text!r}") from None
    if len(vals) != 4:
        raise ParseError("--params needs exactly four values")
    return vals


def _emit(args, payload=None, header=None, rows=None) -> str:
    if args.format == "csv":
        if header is None:
            raise ParseError("this command has no CSV output")
        return write_csv(header, rows)
    return dumps(payload) + "\n"


# -- commands ---------------------------------------------------------------


def cmd_algebra_decompose(args):
    data = _payload(args.matrix)
    if args.anti:
        return _emit(args, tau_coeffs_to_json(tau_decompose(parse_anti(data))))
    return _emit(args, pauli_coeffs_to_json(pauli_decompose(parse_linop(data))))


def cmd_parity_construct(args):
    t = parse_time_reversal(_payload(args.time_reversal), tol=args.tol)
    return _emit(args, parity_to_json(construct_parity(t, tol=args.tol)))


def cmd_commute_check(args):
    p = parse_parity(_payload(args.parity), tol=args.tol)
    t = parse_time_reversal(_payload(args.time_reversal), tol=args.tol)
    res = commutation_residual(p, t)
    return _emit(args, {"commutes": res <= args.tol, "residual": res})


def _snap(m: np.ndarray, floor: float = 1e-12) -> np.ndarray:
    re, im = m.real.copy(), m.imag.copy()
    re[np.abs(re) <= floor] = 0.0
    im[np.abs(im) <= floor] = 0.0
    return re + 1j * im


def _canonical_basis(basis: list[np.ndarray]) -> list[np.ndarray]:
    """Reduced row echelon form of the span, so the output does not depend on the SVD."""
    if not basis:
        return []
    rows = np.stack([oracle._realify(b) for b in basis])
    n_rows, n_cols = rows.shape
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        piv = r + int(np.argmax(np.abs(rows[r:, col])))
        if abs(rows[piv, col]) <= 1e-9:
            continue
        rows[[r, piv]] = rows[[piv, r]]
        rows[r] /= rows[r, col]
        for k in range(n_rows):
            if k != r:
                rows[k] -= rows[k, col] * rows[r]
        r += 1
    return [np.round(_snap(row[:4].reshape(2, 2) + 1j * row[4:].reshape(2, 2)), 12) + 0.0 for row in rows[:r]]


def cmd_commutant_basis(args):
    t = parse_time_reversal(_payload(args.time_reversal), tol=args.tol)
    basis = _canonical_basis(commutant_basis(t, tol=TOL))
    invs = sorted(
        # Newton lands within ~1e-15 of each root; round away the last digits
        (np.round(_snap(x, 1e-9), 12) + 0.0 for x in oracle.involutions(basis)),
        key=lambda x: tuple(np.round(oracle._realify(x), 9)),
    )
    return _emit(
        args,
        {
            "dimension": len(basis),
            "basis": [linop_to_json(b) for b in basis],
            "involutions": [linop_to_json(x) for x in invs],
        },
    )


_HYP_HEADER = ["x", "y", "z", "f1", "f2", "f3", "b1", "b2", "b3"]


def cmd_geometry_hyperboloid(args):
    t = parse_time_reversal(_payload(args.time_reversal), tol=args.tol)
    samples = sample_hyperboloid_points(t, args.n, seed=args.seed, x_max=args.x_max)
    rows = [(*pt.m, *p.f, *p.b) for pt, p in samples]
    payload = {"points": [dict(zip(_HYP_HEADER, row)) for row in rows]}
    return _emit(args, payload, _HYP_HEADER, rows)


_ELL_HEADER = ["phi", "c0", "c1", "c2", "c3", "c1p", "c2p"]


def cmd_geometry_ellipse(args):
    p = parse_parity(_payload(args.parity), tol=args.tol)
    spec = ellipse_for_parity(p)
    rows = []
    for k in range(args.n):
        phi = 2.0 * np.pi * k / args.n
        t = time_reversal_on_ellipse(p, phi, tol=args.tol)
        # undo the sign normalisation so that (c1p, c2p) = (cos phi, |f| sin phi)
        c = np.real(t.eps) * t.c
        c1p, c2p, _ = spec.frame.to_frame(c[1:])
        rows.append((phi, *c, c1p, c2p))
    payload = {
        "semi_major": spec.semi_major,
        "semi_minor": spec.semi_minor,
        "frame": [list(spec.frame.u1), list(spec.frame.u2), list(spec.frame.u3)],
        "points": [dict(zip(_ELL_HEADER, row)) for row in rows],
    }
    return _emit(args, payload, _ELL_HEADER, rows)


def cmd_hamiltonian_classify(args):
    h = parse_linop(_payload(args.matrix))
    return _emit(args, spectral_to_json(classify(h, tol=args.tol)))


def cmd_hamiltonian_family(args):
    t = parse_time_reversal(_payload(args.time_reversal), tol=args.tol)
    h = family_from_symmetry(t, _params(args.params))
    return _emit(args, {"matrix": linop_to_json(h.mat)})


def _bender_row(r, theta, svals, tol):
    rows = []
    for s in svals:
        h = bender_hamiltonian(r, theta, s)
        rows.append((theta, s, discriminant(h, tol=tol), classify(h, tol=tol).tag.value))
    return rows


def cmd_hamiltonian_scan_bender(args):
    thetas = _range(args.theta)
    svals = _range(args.s)
    work = lambda th: _bender_row(args.r, th, svals, args.tol)  # noqa: E731
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            blocks = list(pool.map(work, thetas))
    else:
        blocks = [work(th) for th in thetas]
    rows = [row for block in blocks for row in block]
    header = ["theta", "s", "disc", "tag"]
    payload = {"r": args.r, "rows": [dict(zip(header, row)) for row in rows]}
    return _emit(args, payload, header, rows)


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--tol", type=float, default=None, help="validation tolerance (default $PTSYM2_TOL or 1e-9)")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="ptsym2", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def action(group, name, func, help_):
        p = group.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    alg = groups.add_parser("algebra").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(alg, "decompose", cmd_algebra_decompose, "Pauli or tau coefficients of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--anti", action="store_true", help="treat the matrix as an anti-linear operator M K")

    par = groups.add_parser("parity").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(par, "construct", cmd_parity_construct, "nontrivial parity commuting with T")
    p.add_argument("--time-reversal", required=True)

    com = groups.add_parser("commute").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(com, "check", cmd_commute_check, "check PT = TP")
    p.add_argument("--parity", required=True)
    p.add_argument("--time-reversal", required=True)

    cmt = groups.add_parser("commutant").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(cmt, "basis", cmd_commutant_basis, "brute-force commutant of T")
    p.add_argument("--time-reversal", required=True)

    geo = groups.add_parser("geometry").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(geo, "hyperboloid", cmd_geometry_hyperboloid, "sample parities on the hyperboloid of T")
    p.add_argument("--time-reversal", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-max", type=float, default=3.0)
    p = action(geo, "ellipse", cmd_geometry_ellipse, "time reversals on the ellipse of P")
    p.add_argument("--parity", required=True)
    p.add_argument("--n", type=int, required=True)

    ham = groups.add_parser("hamiltonian").add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = action(ham, "classify", cmd_hamiltonian_classify, "spectral class of a PT-symmetric H")
    p.add_argument("--matrix", required=True)
    p = action(ham, "family", cmd_hamiltonian_family, "H from the four-parameter family of T")
    p.add_argument("--time-reversal", required=True)
    p.add_argument("--params", required=True)
    p = action(ham, "scan-bender", cmd_hamiltonian_scan_bender, "phase scan of the Bender matrix")
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--theta", required=True, help="start:stop:count, both ends included")
    p.add_argument("--s", required=True, help="start:stop:count, both ends included")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _error(kind: str, message: str, residual=None) -> str:
    return dumps({"error": kind, "message": message, "residual": residual})


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        if args.tol is None:
            args.tol = env_tolerance()
        if getattr(args, "n", 0) < 0:
            raise ParseError("--n must be non-negative")
        out = args.func(args)
    except ParseError as exc:
        print(_error("ParseError", str(exc)), file=stderr)
        return EXIT_PARSE
    except PTSymError as exc:
        print(_error(exc.kind, str(exc), exc.residual), file=stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(_error("ParseError", str(exc)), file=stderr)
        return EXIT_PARSE
    stdout.write(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
