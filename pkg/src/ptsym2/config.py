"""Default numerical tolerances.

Every public function that compares floats takes a ``tol`` keyword whose
default is one of these constants.
"""

import os

#: Algebraic identities on unit-scale inputs.
TOL = 1e-12
#: Validation of the defining constraints of P, T and H.
VALIDATION_TOL = 1e-9
#: Residual floor of the iterative commutant oracle.
ORACLE_TOL = 1e-8

TOL_ENV_VAR = "PTSYM2_TOL"


def env_tolerance(default: float = VALIDATION_TOL) -> float:
    """Validation tolerance, overridable through ``$PTSYM2_TOL``."""
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    value = float(raw)
    if not (value > 0 and value < float("inf")):
        raise ValueError(f"{TOL_ENV_VAR} must be a positive finite number, got {raw!r}")
    return value
