"""Dense two-phase simplex with Bland's anti-cycling rule.

Meant for the small flow programs built in :mod:`qnetcap.flows` (at most a
few hundred variables).  Optimality is certified after the fact by
recomputing a dual solution from the final basis and checking dual
feasibility and a zero duality gap.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .errors import SolverError

PIVOT_TOL = 1e-10
CERT_TOL = 1e-7


class LPStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: LPStatus
    x: np.ndarray = None
    value: float = None
    duals_ub: np.ndarray = None
    duals_eq: np.ndarray = None
    iterations: int = 0


def _pivot(T, i, j):
    T[i] /= T[i, j]
    col = T[:, j].copy()
    col[i] = 0.0
    T -= np.outer(col, T[i])


def _run(T, basis, cost, allowed, tol, max_iter):
    m = T.shape[0]
    its = 0
    while True:
        if its >= max_iter:
            raise SolverError(f"simplex did not terminate in {max_iter} pivots")
        r = cost - cost[basis] @ T[:, :-1]
        cand = np.nonzero((r > tol) & allowed)[0]
        if not len(cand):
            return LPStatus.OPTIMAL, its
        j = cand[0]  # Bland: lowest-index improving column
        col = T[:, j]
        pos = col > tol
        if not pos.any():
            return LPStatus.UNBOUNDED, its
        ratios = np.full(m, np.inf)
        ratios[pos] = T[pos, -1] / col[pos]
        rmin = ratios.min()
        ties = np.nonzero(ratios <= rmin + tol * (1.0 + abs(rmin)))[0]
        i = min(ties, key=lambda row: basis[row])  # Bland: lowest-index leaving variable
        _pivot(T, i, j)
        basis[i] = j
        its += 1


def maximize(c, A_ub=None, b_ub=None, A_eq=None, b_eq=None, tol=PIVOT_TOL,
             cert_tol=CERT_TOL, max_iter=100_000):
    """Maximise ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    c = np.asarray(c, dtype=float)
    n = len(c)
    A_ub = np.zeros((0, n)) if A_ub is None else np.asarray(A_ub, dtype=float).reshape(-1, n)
    A_eq = np.zeros((0, n)) if A_eq is None else np.asarray(A_eq, dtype=float).reshape(-1, n)
    b_ub = np.zeros(0) if b_ub is None else np.asarray(b_ub, dtype=float)
    b_eq = np.zeros(0) if b_eq is None else np.asarray(b_eq, dtype=float)
    m_ub, m_eq = len(A_ub), len(A_eq)
    m = m_ub + m_eq

    # standard form [A | slacks] x = b with b >= 0
    A = np.zeros((m, n + m_ub))
    A[:m_ub, :n] = A_ub
    A[:m_ub, n:] = np.eye(m_ub)
    A[m_ub:, :n] = A_eq
    b = np.concatenate([b_ub, b_eq])
    sign = np.where(b < 0, -1.0, 1.0)
    A *= sign[:, None]
    b = b * sign
    N = n + m_ub

    # rows whose slack kept a +1 coefficient start with that slack basic
    basis = [-1] * m
    for i in range(m_ub):
        if sign[i] > 0:
            basis[i] = n + i
    art_rows = [i for i in range(m) if basis[i] < 0]
    n_art = len(art_rows)
    T = np.zeros((m, N + n_art + 1))
    T[:, :N] = A
    T[:, -1] = b
    for k, i in enumerate(art_rows):
        T[i, N + k] = 1.0
        basis[i] = N + k
    total = N + n_art
    its = 0

    if n_art:
        cost1 = np.zeros(total)
        cost1[N:] = -1.0
        status, k = _run(T, basis, cost1, np.ones(total, dtype=bool), tol, max_iter)
        its += k
        infeas = -float(cost1[basis] @ T[:, -1])
        if infeas > cert_tol * (1.0 + np.abs(b).max(initial=0.0)):
            return LPResult(LPStatus.INFEASIBLE, iterations=its)
        # push artificials out of the basis; rows where that fails are redundant
        keep = np.ones(m, dtype=bool)
        for i in range(m):
            if basis[i] >= N:
                nz = np.nonzero(np.abs(T[i, :N]) > tol)[0]
                if len(nz):
                    _pivot(T, i, nz[0])
                    basis[i] = nz[0]
                else:
                    keep[i] = False
        rows = np.nonzero(keep)[0]
        T = np.hstack([T[rows, :N], T[rows, -1:]])
        basis = [basis[i] for i in rows]
    else:
        rows = np.arange(m)

    cost = np.zeros(N)
    cost[:n] = c
    status, k = _run(T, basis, cost, np.ones(N, dtype=bool), tol, max_iter)
    its += k
    if status is not LPStatus.OPTIMAL:
        return LPResult(status, iterations=its)

    xs = np.zeros(N)
    xs[basis] = T[:, -1]
    xs = np.maximum(xs, 0.0)
    x = xs[:n]
    value = float(c @ x)

    # certificate: y from B^T y = c_B on the original rows
    B = A[rows][:, basis]
    try:
        y_rows = np.linalg.solve(B.T, cost[basis])
    except np.linalg.LinAlgError:
        y_rows = np.linalg.lstsq(B.T, cost[basis], rcond=None)[0]
    y = np.zeros(m)
    y[rows] = y_rows
    reduced = cost - A.T @ y
    scale = 1.0 + abs(value)
    if reduced.max(initial=0.0) > cert_tol * scale:
        raise SolverError(f"dual infeasibility {reduced.max():.3g} exceeds {cert_tol}")
    gap = abs(float(b @ y) - value)
    if gap > cert_tol * scale:
        raise SolverError(f"duality gap {gap:.3g} exceeds {cert_tol}")
    resid = np.concatenate([A_ub @ x - b_ub, np.abs(A_eq @ x - b_eq)]) if m else np.zeros(0)
    if resid.max(initial=0.0) > cert_tol * (1.0 + np.abs(b).max(initial=0.0)):
        raise SolverError(f"primal infeasibility {resid.max():.3g} exceeds {cert_tol}")
    y = y * sign  # back to the caller's row orientation
    return LPResult(LPStatus.OPTIMAL, x, value, y[:m_ub], y[m_ub:], its)
