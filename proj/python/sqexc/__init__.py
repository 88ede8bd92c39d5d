"""Closed-form numerics for excited squeezed states."""

from ._core import (
    ConsistencyError,
    CutoffError,
    DomainError,
    Error,
    fock_coefficients,
    grid,
    husimi,
    mean_photon,
    moments,
    normalization,
    overlap,
    photon_distribution,
    psi_q,
    wigner,
)

__all__ = [
    "ConsistencyError",
    "CutoffError",
    "DomainError",
    "Error",
    "fock_coefficients",
    "grid",
    "husimi",
    "mean_photon",
    "moments",
    "normalization",
    "overlap",
    "photon_distribution",
    "psi_q",
    "wigner",
]
