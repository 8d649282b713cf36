"""Optimal rank-1 Hankel approximation in the Frobenius and spectral norms."""

from ._hankel1 import (
    HankelError,
    __version__,
    build_rank1,
    cadzow,
    eig_symmetric,
    extract_params,
    hankel_project,
    is_hankel,
    objective,
    solve_complex,
    solve_real,
    solve_spectral,
    structured_vector,
)

__all__ = [
    "HankelError",
    "build_rank1",
    "cadzow",
    "eig_symmetric",
    "extract_params",
    "hankel_project",
    "is_hankel",
    "objective",
    "solve_complex",
    "solve_real",
    "solve_spectral",
    "structured_vector",
]
