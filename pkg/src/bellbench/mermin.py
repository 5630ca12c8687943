"""Recursive construction of Bell-Mermin operator pairs and their bound.

The pair (B, B') on a set of sites is defined through the complex combination
f(x, y) = e^{-i pi/4} (x + i y) / sqrt(2): the f-transform of the pair equals
the tensor product of the per-site f-transforms of the local observables
(X and Y at every site). Disjoint pairs combine through a bilinear recursion,
and the full operator is a rank-2 corner matrix whose local-realistic bound
is |<B>| <= 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .operators import (
    BOUND_SLACK,
    DEFAULT_TOLERANCES,
    as_square_matrix,
    expectation,
    projector,
    tensor_all,
)
from .states import MAX_QUBITS, SIGMA_X, SIGMA_Y, copies, ghz_basis

F_PHASE = cmath.exp(-1j * math.pi / 4) / math.sqrt(2)


def local_f(a, a_prime) -> np.ndarray:
    """Complex combination e^{-i pi/4}(a + i a')/sqrt(2) of two observables."""
    x = as_square_matrix(a)
    y = as_square_matrix(a_prime)
    if x.shape != y.shape:
        raise ValueError("observables must share a dimension")
    return F_PHASE * (x + 1j * y)


@dataclass(frozen=True, eq=False)
class MerminPair:
    """Bell-Mermin operator pair acting on the listed sites (in slot order)."""

    b: np.ndarray
    b_prime: np.ndarray
    parties: tuple[int, ...]

    def f_transform(self) -> np.ndarray:
        return local_f(self.b, self.b_prime)

    def f_consistency_error(self) -> float:
        """Max-entry gap between f(B, B') and the product of site f-transforms."""
        target = tensor_all([local_f(SIGMA_X, SIGMA_Y)] * len(self.parties))
        return float(np.abs(self.f_transform() - target).max())


def site_pair(site: int) -> MerminPair:
    """Single-site pair: B = X, B' = Y."""
    return MerminPair(SIGMA_X.copy(), SIGMA_Y.copy(), (site,))


def compose(alpha: MerminPair, beta: MerminPair) -> MerminPair:
    """Combine pairs on disjoint site sets.

    B_{ab} = (B_a (x) (B_b + B'_b) + B'_a (x) (B_b - B'_b)) / 2 and the
    primed analogue; equivalent to multiplying the f-transforms.
    """
    if set(alpha.parties) & set(beta.parties):
        raise ValueError(f"site sets overlap: {alpha.parties} and {beta.parties}")
    s = beta.b + beta.b_prime
    d = beta.b - beta.b_prime
    b = 0.5 * (np.kron(alpha.b, s) + np.kron(alpha.b_prime, d))
    b_prime = 0.5 * (np.kron(alpha.b_prime, s) - np.kron(alpha.b, d))
    return MerminPair(b, b_prime, alpha.parties + beta.parties)


def mermin_operators(n_parties: int) -> MerminPair:
    """Full pair on sites 1..n, built by folding compose over singletons."""
    _check_party_count(n_parties)
    pair = site_pair(1)
    for site in range(2, n_parties + 1):
        pair = compose(pair, site_pair(site))
    return pair


def mermin_closed_form(n_parties: int) -> np.ndarray:
    """Rank-2 corner form 2^{(n-1)/2} (P+ - P-) on the extreme GHZ doublet.

    Built in the computational basis without extra phases; it matches the
    recursive construction only after the corner-phase alignment below.
    """
    _check_party_count(n_parties)
    plus, minus = ghz_basis(n_parties)[:2]
    return 2 ** ((n_parties - 1) / 2) * (projector(plus) - projector(minus))


def corner_phase(op) -> complex:
    """Unimodular phase of the |0..0><1..1| corner of a corner-form operator."""
    a = as_square_matrix(op)
    c = complex(a[0, -1])
    if abs(c) == 0.0:
        raise ValueError("operator has no upper corner entry")
    return c / abs(c)


def align_corner_phase(op, phase: complex) -> np.ndarray:
    """Multiply the |0..0><1..1| corner by phase (adjoint corner by its conjugate)."""
    a = as_square_matrix(op).copy()
    a[0, -1] *= phase
    a[-1, 0] *= phase.conjugate()
    return a


def expected_alignment_phase(n_parties: int) -> complex:
    """Phase e^{-i (n-1) pi / 4} relating closed form and recursion corners."""
    return cmath.exp(-1j * (n_parties - 1) * math.pi / 4)


class MerminExpectation(NamedTuple):
    analytic: float
    traced: float


def mermin_expectation(v: float, n_copies: int) -> MerminExpectation:
    """<B> on n_copies noisy pairs: analytic V^N next to the matrix trace.

    The two values are required to agree within the comparison tolerance;
    a mismatch means a construction bug, not a physical effect.
    """
    analytic = v**n_copies
    rho = copies(v, n_copies)
    traced = expectation(rho, mermin_operators(2 * n_copies).b)
    if abs(analytic - traced) > DEFAULT_TOLERANCES.comparison:
        raise ArithmeticError(
            f"analytic {analytic} and traced {traced} Mermin values disagree")
    return MerminExpectation(analytic, traced)


def mermin_bound_check(value: float) -> bool:
    """Local-realistic bound |<B>| <= 1."""
    return abs(value) <= 1.0 + BOUND_SLACK


def _check_party_count(n_parties: int) -> None:
    if n_parties % 2 != 0:
        raise ValueError(f"party count must be even, got {n_parties}")
    if not 2 <= n_parties <= MAX_QUBITS:
        raise ValueError(f"party count must lie in [2, {MAX_QUBITS}], got {n_parties}")
