"""Bell-Zukowski operator, its relation to the Bell-Mermin operator, and the
step-function bounds behind its local-realistic derivation.

The operator averages the all-angle correlation kernel cos(phi_1 + ... + phi_n)
over the in-plane observables sigma_phi at every site,

    Z_n = 2^{-n} * integral over [0, pi]^n of cos(sum phi) sigma_phi_1 x ... x sigma_phi_n,

and collapses to the rank-2 corner form (pi/2)^n (P+ - P-)/2 on the extreme
GHZ doublet. Every matrix-element integrand factorizes per axis into
e^{i m phi} with m in {-2, 0, 2}, so an equispaced midpoint rule with at
least two nodes per axis reproduces the integral exactly; the quadrature
here is evaluated separably (per-axis 1-D sums, tensored), never as a dense
n-dimensional grid walk.
"""

from __future__ import annotations

import math

import numpy as np

from .operators import BOUND_SLACK, projector, tensor_all
from .states import MAX_QUBITS, ghz_basis, phase_observable
from .mermin import align_corner_phase, expected_alignment_phase, mermin_closed_form

S_BOUND_SLACK = 1e-9


def zukowski_closed(n: int) -> np.ndarray:
    """Closed corner form (1/2)(pi/2)^n (P+ - P-), eigenvalues +-(1/2)(pi/2)^n."""
    _check_sites(n)
    plus, minus = ghz_basis(n)[:2]
    return 0.5 * (math.pi / 2) ** n * (projector(plus) - projector(minus))


def zukowski_quadrature(n: int, nodes_per_axis: int = 8) -> np.ndarray:
    """Midpoint-rule evaluation of the defining integral, exact for M >= 2.

    The kernel splits as cos(sum phi) = (prod e^{i phi_k} + prod e^{-i phi_k})/2,
    so the full tensor-grid sum equals a tensor product of per-axis 2x2 moment
    matrices; cost is O(n * M) plus one 2^n-dimensional tensor assembly.
    """
    _check_sites(n)
    if nodes_per_axis < 2:
        raise ValueError("midpoint rule needs at least 2 nodes per axis")
    nodes = (np.arange(nodes_per_axis) + 0.5) * math.pi / nodes_per_axis
    weight = math.pi / nodes_per_axis
    plus_moment = np.zeros((2, 2), dtype=complex)
    minus_moment = np.zeros((2, 2), dtype=complex)
    for phi in nodes:
        obs = phase_observable(phi)
        plus_moment += weight * np.exp(1j * phi) * obs
        minus_moment += weight * np.exp(-1j * phi) * obs
    stacked = tensor_all([plus_moment] * n) + tensor_all([minus_moment] * n)
    return stacked / 2 ** (n + 1)


def zukowski_aligned(n_copies: int) -> np.ndarray:
    """Bell-Zukowski operator in the phase convention of the recursion.

    Equal to the closed form with its GHZ corner rotated by
    e^{-i(2N-1)pi/4}, and identically equal to the Bell-relation rescaling
    of the recursive Bell-Mermin operator; this is the operator whose trace
    against shared noisy pairs reproduces the experiment's computed average.
    """
    n = 2 * n_copies
    return align_corner_phase(zukowski_closed(n), expected_alignment_phase(n))


def bell_relation_scale(n_copies: int) -> float:
    """Factor (1/2)(pi/2)^{2N} 2^{-(2N-1)/2} linking <Z_{2N}> to <B>."""
    if n_copies < 1:
        raise ValueError("need at least one copy")
    n = 2 * n_copies
    return 0.5 * (math.pi / 2) ** n / 2 ** ((n - 1) / 2)


def zukowski_from_mermin(mermin_value: float, n_copies: int) -> float:
    """Computed Bell-Zukowski average for a measured Bell-Mermin average."""
    return bell_relation_scale(n_copies) * mermin_value


def modified_mermin_bound(n_copies: int) -> float:
    """Bound on |<B>| implied by |<Z_{2N}>| <= 1: 2 (2/pi)^{2N} 2^{(2N-1)/2}."""
    if n_copies < 1:
        raise ValueError("need at least one copy")
    n = 2 * n_copies
    return 2 * (2 / math.pi) ** n * 2 ** ((n - 1) / 2)


def threshold_visibility(n_copies: int) -> float:
    """Smallest visibility whose computed |<Z_{2N}>| reaches 1.

    Defined for N >= 2 only; at N = 1 the bound exceeds 1 and no visibility
    produces a violation.
    """
    if n_copies < 2:
        raise ValueError("threshold visibility is defined for n_copies >= 2")
    return modified_mermin_bound(n_copies) ** (1.0 / n_copies)


def zukowski_bound_check(value: float) -> bool:
    """Local-realistic bound |<Z_n>| <= 1; False is the conflict signal."""
    return abs(value) <= 1.0 + BOUND_SLACK


# --- step-function functionals -------------------------------------------
#
# Local response functions are +-1-valued step functions on a uniform
# partition of [0, pi); z'(f) = integral f(phi) e^{i phi} d phi is evaluated
# cell-exactly, so bound checks are statements about the functions themselves
# rather than about a discretization.


def cell_weights(cells: int) -> np.ndarray:
    """Exact per-cell integrals of e^{i phi} on a uniform partition of [0, pi]."""
    if cells < 1:
        raise ValueError("need at least one cell")
    edges = np.arange(cells + 1) * math.pi / cells
    return (np.exp(1j * edges[1:]) - np.exp(1j * edges[:-1])) / 1j


def validate_step_values(values) -> np.ndarray:
    vals = np.asarray(values, dtype=float)
    if vals.ndim == 0 or vals.shape[-1] < 1:
        raise ValueError("step function needs at least one cell")
    if not np.all(np.abs(vals) == 1.0):
        raise ValueError("step-function values must be exactly +-1")
    return vals


def z_prime_functional(values) -> complex:
    """z' = integral of f e^{i phi} over [0, pi] for a +-1 step function f."""
    vals = validate_step_values(values)
    if vals.ndim != 1:
        raise ValueError("expected a single step function")
    return complex(vals @ cell_weights(len(vals)))


def s_functional(step_functions) -> float:
    """Re prod_k z'(f_k); local-realistic reasoning bounds |S| by 2^n."""
    zs = [z_prime_functional(f) for f in step_functions]
    if not zs:
        raise ValueError("need at least one step function")
    return float(np.prod(zs).real)


def sign_cos_step(cells: int) -> np.ndarray:
    """Extremal step function sign(cos phi); needs an even cell count so the
    sign change at pi/2 falls on a cell boundary and |z'| = 2 is hit exactly."""
    if cells < 2 or cells % 2 != 0:
        raise ValueError("sign(cos) step function needs an even cell count")
    return np.where(np.arange(cells) < cells // 2, 1.0, -1.0)


def _check_sites(n: int) -> None:
    if not 2 <= n <= MAX_QUBITS:
        raise ValueError(f"site count must lie in [2, {MAX_QUBITS}], got {n}")


def closed_vs_quadrature_error(n: int, nodes_per_axis: int = 8) -> float:
    """Max-entry gap between the closed form and the midpoint quadrature."""
    return float(np.abs(zukowski_quadrature(n, nodes_per_axis) - zukowski_closed(n)).max())


def ghz_offdiagonal_max(n: int, op: np.ndarray | None = None) -> float:
    """Largest off-diagonal magnitude of Z_n in the GHZ basis.

    Pass the quadrature-built matrix as op to check the integral route
    directly; the default checks the closed form.
    """
    basis = np.column_stack(ghz_basis(n))
    in_basis = basis.conj().T @ (zukowski_closed(n) if op is None else op) @ basis
    off = in_basis - np.diag(np.diag(in_basis))
    return float(np.abs(off).max())


def ghz_diagonal(n: int, op: np.ndarray | None = None) -> np.ndarray:
    """Diagonal of Z_n in the GHZ basis (real part)."""
    basis = np.column_stack(ghz_basis(n))
    in_basis = basis.conj().T @ (zukowski_closed(n) if op is None else op) @ basis
    return np.real(np.diag(in_basis))


def bell_relation_operator_gap(n_copies: int) -> float:
    """Max-entry gap between zukowski_aligned and the rescaled recursive B.

    Zero (to rounding) by the operator identity behind the Bell relation;
    exposed as a checkable diagnostic rather than assumed.
    """
    from .mermin import mermin_operators

    scaled = bell_relation_scale(n_copies) * mermin_operators(2 * n_copies).b
    return float(np.abs(zukowski_aligned(n_copies) - scaled).max())


def closed_form_scale_check(n_copies: int) -> float:
    """Max-entry gap between zukowski_closed(2N) and the rescaled closed-form B."""
    n = 2 * n_copies
    scaled = bell_relation_scale(n_copies) * mermin_closed_form(n)
    return float(np.abs(zukowski_closed(n) - scaled).max())
