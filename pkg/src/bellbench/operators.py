"""Dense complex linear algebra for multi-qubit operators and density matrices.

Everything here operates on plain ``numpy`` arrays of ``complex128``. Matrices
are dense; the workbench never exceeds dimension 2**12, where dense storage
and exact spectral routines are both cheap and simple.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict
from functools import reduce
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class Tolerances:
    """Central tolerance record shared by validators and verdicts.

    hermiticity: max-entry deviation allowed between M and its adjoint.
    psd_floor:   smallest admissible eigenvalue of a positive operator.
    comparison:  general-purpose agreement tolerance for derived quantities.
    """

    hermiticity: float = 1e-12
    psd_floor: float = -1e-10
    comparison: float = 1e-10

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()

# Slack used by inequality verdicts: a bound |v| <= c is "satisfied" up to
# |v| <= c + BOUND_SLACK so that exact boundary cases classify as satisfied.
BOUND_SLACK = 1e-12


def as_square_matrix(m) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting anything else."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    return np.asarray(m).conj().T


def hermiticity_error(m) -> float:
    a = as_square_matrix(m)
    return float(np.abs(a - dagger(a)).max())


def is_hermitian(m, tol: float = DEFAULT_TOLERANCES.hermiticity) -> bool:
    return hermiticity_error(m) <= tol


def validate_hermitian(m, tol: float = DEFAULT_TOLERANCES.hermiticity) -> np.ndarray:
    a = as_square_matrix(m)
    err = float(np.abs(a - dagger(a)).max())
    if err > tol:
        raise ValueError(f"matrix is not Hermitian: max deviation {err:.3e} > {tol:.1e}")
    return a


def validate_density_matrix(m, tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Check the density-matrix invariants: Hermitian, unit trace, PSD."""
    a = validate_hermitian(m, tolerances.hermiticity)
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > tolerances.hermiticity:
        raise ValueError(f"trace {tr} deviates from 1 by more than {tolerances.hermiticity:.1e}")
    eigs = np.linalg.eigvalsh(a)
    if eigs.min() < tolerances.psd_floor:
        raise ValueError(f"minimum eigenvalue {eigs.min():.3e} below {tolerances.psd_floor:.1e}")
    return a


def tensor(a, b) -> np.ndarray:
    """Tensor (Kronecker) product; entry ((i*db+k),(j*db+l)) = a[i,j]*b[k,l]."""
    return np.kron(as_square_matrix(a), as_square_matrix(b))


def tensor_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    ms = [as_square_matrix(m) for m in mats]
    if not ms:
        raise ValueError("tensor_all needs at least one factor")
    return reduce(np.kron, ms)


def hermitian_split(f) -> tuple[np.ndarray, np.ndarray]:
    """Split F into Hermitian parts (re, im) with F = re + 1j*im.

    re = (F + F^dag)/2 and im = (F - F^dag)/(2i); both outputs are Hermitian
    to the last bit, and the reconstruction is exact up to rounding.
    """
    a = as_square_matrix(f)
    ad = dagger(a)
    return (a + ad) / 2, (a - ad) / 2j


def expectation(rho, o, tolerances: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Real expectation value tr[rho @ o].

    Raises on dimension mismatch, and if the imaginary residue of the trace
    exceeds the comparison tolerance (diagnostic for non-Hermitian input).
    """
    r = as_square_matrix(rho)
    a = as_square_matrix(o)
    if r.shape != a.shape:
        raise ValueError(f"dimension mismatch: state {r.shape} vs observable {a.shape}")
    # tr[R O] without forming the product matrix
    val = complex(np.sum(r * a.T))
    if abs(val.imag) >= tolerances.comparison:
        raise ValueError(f"expectation has imaginary residue {val.imag:.3e}")
    return float(val.real)


def spectral_check(m, tolerances: Tolerances = DEFAULT_TOLERANCES) -> tuple[np.ndarray, bool]:
    """Eigenvalues (ascending) and a PSD flag for a Hermitian matrix."""
    a = validate_hermitian(m, tolerances.comparison)
    eigs = np.linalg.eigvalsh(a)
    return eigs, bool(eigs.min() >= tolerances.psd_floor)


def projector(ket: Sequence[complex]) -> np.ndarray:
    v = np.asarray(ket, dtype=complex).reshape(-1)
    return np.outer(v, v.conj())
