"""Dense phase-1 simplex for small equality-constrained feasibility problems.

Solves: does A x = b admit x >= 0? The tableau starts from an artificial
basis and minimizes the sum of artificials; the optimum is the feasibility
residual (zero, up to tolerance, iff the system is feasible). Sizes here are
tiny (at most 65 rows by ~4100 columns), so a dense tableau with vectorized
row operations is the simplest reliable choice.

Pivoting uses Dantzig's rule with first-index tie-breaking, falling back to
Bland's rule if an iteration cap is hit, which rules out cycling. Both rules
are deterministic, so identical inputs give identical witnesses.
"""

from __future__ import annotations

import numpy as np

PIVOT_EPS = 1e-11


class SimplexError(RuntimeError):
    """Numerical failure inside the solver (not infeasibility)."""


def phase1_feasibility(a, b, max_iterations: int | None = None):
    """Minimize sum of artificials for A x = b, x >= 0.

    Returns (x, residual): the candidate solution over the original columns
    and the optimal artificial mass. residual <= tol means "feasible" for the
    caller's choice of tol.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float).reshape(-1)
    if a.ndim != 2 or a.shape[0] != b.shape[0]:
        raise ValueError(f"incompatible shapes {a.shape} and {b.shape}")
    m, n = a.shape
    if max_iterations is None:
        max_iterations = 200 * (m + n)

    # Standard-form tableau [A | I | b] with b >= 0; artificial basis.
    flip = b < 0
    tableau = np.hstack([np.where(flip[:, None], -a, a),
                         np.eye(m),
                         np.where(flip, -b, b)[:, None]])
    basis = np.arange(n, n + m)

    # Phase-1 reduced costs over original columns: c_j = -sum_i T[i, j].
    cost = -tableau.sum(axis=0)
    cost[n:] = 0.0  # artificials never re-enter

    iterations = 0
    use_bland = False
    while True:
        candidates = cost[:n]
        if use_bland:
            negative = np.nonzero(candidates < -PIVOT_EPS)[0]
            if negative.size == 0:
                break
            col = int(negative[0])
        else:
            col = int(np.argmin(candidates))
            if candidates[col] >= -PIVOT_EPS:
                break

        column = tableau[:, col]
        rows = np.nonzero(column > PIVOT_EPS)[0]
        if rows.size == 0:
            # Phase-1 objective is bounded below by zero; this is numerics.
            raise SimplexError("no admissible pivot row")
        ratios = tableau[rows, -1] / column[rows]
        row = int(rows[np.argmin(ratios)])

        pivot = tableau[row, col]
        tableau[row] /= pivot
        reduction = tableau[:, col].copy()
        reduction[row] = 0.0
        tableau -= np.outer(reduction, tableau[row])
        cost -= cost[col] * tableau[row]
        basis[row] = col

        iterations += 1
        if iterations > max_iterations:
            if use_bland:
                raise SimplexError("iteration cap exceeded")
            use_bland = True
            iterations = 0

    x = np.zeros(n)
    in_original = basis < n
    x[basis[in_original]] = tableau[in_original, -1]
    residual = float(tableau[~in_original, -1].sum())
    return x, residual
