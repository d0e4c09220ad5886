"""Parity and time-reversal operators on C^2.

Operator algebra in the Pauli and tau bases, commutation of parity with
time reversal, the hyperboloid and ellipse geometry of the commutants, and
the spectral classification of PT-symmetric 2x2 Hamiltonians.
"""

from .algebra import (
    AntiOp2,
    PauliCoeffs,
    TauCoeffs,
    apply_anti,
    apply_lin,
    compose_aa,
    compose_al,
    compose_la,
    compose_ll,
    conjugation,
    pauli,
    pauli_compose,
    pauli_decompose,
    tau,
    tau_compose,
    tau_decompose,
)
from .errors import PTSymError
from .geometry import (
    EllipseSpec,
    HyperboloidPoint,
    ellipse_for_parity,
    hyperboloid_residual,
    parity_to_point,
    point_to_parity,
    sample_hyperboloid,
    time_reversal_on_ellipse,
)
from .frames import Frame, frame_from_axis
from .hamiltonian import (
    EigenSystem,
    PTHamiltonian,
    SpectralClass,
    SpectralTag,
    bender_hamiltonian,
    classify,
    discriminant,
    eigen,
    family_from_symmetry,
    find_symmetry,
    hermitian_is_unbroken,
    pt_conditions_check,
    pt_invariant_eigenvectors,
)
from .symmetry import (
    Parity,
    TimeReversal,
    commutant_basis,
    commutes_matrix,
    commutes_vec,
    construct_parity,
    parity_from_a,
    parity_from_fb,
    same_commutant,
    shared_parities,
    time_reversal_from_anti,
    time_reversal_from_c,
)

__version__ = "0.1.0"
