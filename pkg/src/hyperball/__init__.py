"""Spectral kernels of the magnetic Laplacian on the complex unit ball.

Evaluates the spectral density, heat, resolvent and wave kernels of the
weighted invariant Laplacian on B_n (complex dimension n, weight nu > n
non-integer) and ships a verification harness that numerically audits the
closed-form identities the kernels are built from.
"""

from hyperball.params import (
    Parameters,
    SpectrumAtom,
    new_parameters,
    discrete_spectrum,
    resolvent_abscissa,
    bergman_projector_constant,
)

__version__ = "0.1.0"

__all__ = [
    "Parameters",
    "SpectrumAtom",
    "new_parameters",
    "discrete_spectrum",
    "resolvent_abscissa",
    "bergman_projector_constant",
    "__version__",
]
