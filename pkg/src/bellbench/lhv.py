"""Local-hidden-variable oracle for full-correlation data.

Two independent routes decide whether a table of two-setting correlators is
reproducible by a local realistic model:

* linear-programming membership in the convex hull of the 4^n deterministic
  strategies (each party fixes an outcome for X and for Y), and
* the complete set of two-setting correlation Bell inequalities, expressed
  as the sign-transform condition sum_s |E_hat(s)| <= 2^n.

The two verdicts agree on every instance; that agreement is a test target,
not an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .simplex import SimplexError, phase1_feasibility
from .states import CorrelationTable

LP_RESIDUAL_TOL = 1e-9
COMPLETE_SET_SLACK = 1e-9
MAX_LP_PARTIES = 6
MAX_ENUM_PARTIES = 8
MAX_TRANSFORM_PARTIES = 12

# The four two-party combination checks, as sign patterns over
# (E_xx, E_yy, E_xy, E_yx); each absolute combination is bounded by 2.
QUADRUPLE_SIGNS = (
    (1, -1, 1, 1),
    (1, 1, -1, 1),
    (1, 1, 1, -1),
    (1, -1, -1, -1),
)


def fine_quadruple(e_xx: float, e_yy: float, e_xy: float, e_yx: float):
    """The four CHSH-type combination values and their joint verdict.

    Values come back in the fixed order of QUADRUPLE_SIGNS; the verdict is
    True iff every |combination| <= 2 (up to slack).
    """
    for name, e in (("xx", e_xx), ("yy", e_yy), ("xy", e_xy), ("yx", e_yx)):
        if abs(e) > 1 + 1e-10:
            raise ValueError(f"correlator {name} = {e} outside [-1, 1]")
    values = tuple(
        abs(sxx * e_xx + syy * e_yy + sxy * e_xy + syx * e_yx)
        for sxx, syy, sxy, syx in QUADRUPLE_SIGNS
    )
    return values, all(v <= 2 + 1e-12 for v in values)


def enumerate_strategies(n: int) -> list[tuple[tuple[int, int], ...]]:
    """All 4^n deterministic strategies, lexicographic.

    A strategy lists, per party, the predetermined outcomes (at X, at Y);
    outcome order is +1 before -1, leftmost party most significant.
    """
    if n > MAX_ENUM_PARTIES:
        raise ValueError(f"strategy enumeration capped at {MAX_ENUM_PARTIES} parties")
    pairs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    return [combo for combo in itertools.product(pairs, repeat=n)]


def strategy_correlations(strategy) -> CorrelationTable:
    """Correlation table of one deterministic strategy: E = product of outcomes."""
    n = len(strategy)
    values = {}
    for combo in itertools.product("XY", repeat=n):
        e = 1
        for (x_out, y_out), setting in zip(strategy, combo):
            e *= x_out if setting == "X" else y_out
        values["".join(combo)] = float(e)
    return CorrelationTable(n, values)


def strategy_label(strategy) -> str:
    """Deterministic witness key, e.g. '+-,++' for ((+1,-1), (+1,+1))."""
    return ",".join(
        ("+" if x > 0 else "-") + ("+" if y > 0 else "-") for x, y in strategy
    )


def strategy_matrix(n: int) -> np.ndarray:
    """Matrix of strategy correlators, settings (sorted keys) by strategies."""
    idx = np.arange(4**n)
    # Per party: two bits of the base-4 digit select the X and Y outcomes.
    outcomes = np.empty((2, n, 4**n))
    for k in range(n):
        digit = (idx // 4 ** (n - 1 - k)) % 4
        outcomes[0, k] = np.where(digit < 2, 1.0, -1.0)       # X outcome
        outcomes[1, k] = np.where(digit % 2 == 0, 1.0, -1.0)  # Y outcome
    rows = np.empty((2**n, 4**n))
    for r in range(2**n):
        picks = [(r >> (n - 1 - k)) & 1 for k in range(n)]
        rows[r] = np.prod([outcomes[picks[k], k] for k in range(n)], axis=0)
    return rows


def sign_transform(vector: np.ndarray) -> np.ndarray:
    """Fast transform E_hat(s) = sum_r prod_k s_k^{r_k} E(r) over the hypercube."""
    out = np.asarray(vector, dtype=float).copy()
    size = out.shape[0]
    h = 1
    while h < size:
        blocks = out.reshape(-1, 2, h)
        top = blocks[:, 0, :] + blocks[:, 1, :]
        bottom = blocks[:, 0, :] - blocks[:, 1, :]
        out = np.stack([top, bottom], axis=1).reshape(size)
        h *= 2
    return out


def wwzb_sign_sum(table: CorrelationTable) -> float:
    """sum over sign vectors of |E_hat|; local models keep it at or below 2^n."""
    if table.n_parties > MAX_TRANSFORM_PARTIES:
        raise ValueError(f"sign transform capped at {MAX_TRANSFORM_PARTIES} parties")
    return float(np.abs(sign_transform(table.vector())).sum())


def complete_set_check(table: CorrelationTable) -> bool:
    """Verdict of the complete two-setting inequality set."""
    return wwzb_sign_sum(table) <= 2**table.n_parties + COMPLETE_SET_SLACK


@dataclass(frozen=True)
class InequalityWitness:
    """A violated member of the complete set, in correlator coefficients.

    The inequality reads sum_key coefficients[key] * E[key] <= bound; value is
    the left-hand side at the rejected table. For two parties the coefficient
    pattern reduces to one of the four quadruple checks (quadruple_index).
    """

    coefficients: dict[str, float]
    value: float
    bound: float
    quadruple_index: int | None = None


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    witness: dict[str, float] | InequalityWitness
    residual: float


def _violated_inequality(table: CorrelationTable) -> InequalityWitness:
    hat = sign_transform(table.vector())
    signs = np.where(hat >= 0, 1.0, -1.0)
    coeffs = sign_transform(signs)
    settings = table.settings()
    value = float(coeffs @ table.vector())
    bound = float(2**table.n_parties)
    quadruple_index = None
    if table.n_parties == 2:
        # settings order XX, XY, YX, YY; quadruple patterns are over
        # (xx, yy, xy, yx) up to overall sign and a factor 2^{n-1}.
        reduced = coeffs / 2 ** (table.n_parties - 1)
        pattern = (reduced[0], reduced[3], reduced[1], reduced[2])
        for i, q in enumerate(QUADRUPLE_SIGNS):
            if all(pattern[j] == q[j] for j in range(4)) or all(
                pattern[j] == -q[j] for j in range(4)
            ):
                quadruple_index = i
                break
    return InequalityWitness(
        coefficients={k: float(c) for k, c in zip(settings, coeffs)},
        value=value,
        bound=bound,
        quadruple_index=quadruple_index,
    )


def lhv_feasible(table: CorrelationTable) -> FeasibilityVerdict:
    """Membership of the correlator vector in the local polytope.

    Feasible: the witness is a probability distribution over deterministic
    strategies reproducing every entry. Infeasible: the witness is a violated
    complete-set inequality. Raises SimplexError on solver failure, which is
    distinct from a clean infeasible verdict.
    """
    n = table.n_parties
    if n > MAX_LP_PARTIES:
        raise ValueError(f"LP feasibility capped at {MAX_LP_PARTIES} parties")
    a = np.vstack([strategy_matrix(n), np.ones(4**n)])
    b = np.concatenate([table.vector(), [1.0]])
    x, residual = phase1_feasibility(a, b)
    if residual <= LP_RESIDUAL_TOL:
        strategies = enumerate_strategies(n)
        witness = {
            strategy_label(strategies[i]): float(x[i])
            for i in np.nonzero(x > 1e-12)[0]
        }
        return FeasibilityVerdict(True, witness, residual)
    return FeasibilityVerdict(False, _violated_inequality(table), residual)


def witness_reconstruction_error(table: CorrelationTable, witness: dict[str, float]) -> float:
    """Max deviation between the table and the witness distribution's correlators."""
    n = table.n_parties
    strategies = {strategy_label(s): s for s in enumerate_strategies(n)}
    acc = {key: 0.0 for key in table.settings()}
    for label, weight in witness.items():
        st_table = strategy_correlations(strategies[label])
        for key in acc:
            acc[key] += weight * st_table.values[key]
    return max(abs(acc[key] - table.values[key]) for key in acc)


__all__ = [
    "FeasibilityVerdict",
    "InequalityWitness",
    "SimplexError",
    "complete_set_check",
    "enumerate_strategies",
    "fine_quadruple",
    "lhv_feasible",
    "sign_transform",
    "strategy_correlations",
    "strategy_label",
    "strategy_matrix",
    "witness_reconstruction_error",
    "wwzb_sign_sum",
]
