"""Lovász theta with certified two-sided bounds.

The SDP  max <J,B> s.t. tr B = 1, B_ij = 0 on edges, B psd  is solved via its
dual  min t s.t. t I + sum_e lambda_e E_e - J psd  with cvxopt's interior
point method. Neither bound trusts the solver: the lower bound comes from the
returned primal matrix after symmetrizing, zeroing edge entries, and shifting
by its own checked minimum eigenvalue; the upper bound from the dual matrix
shifted the same way. Both shifts are eigenvalue-verified in floats with a
safety margin, so the reported bracket is a certificate, not a status flag.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeExceeded, SolverTimeout
from .graphs import Graph

# eigenvalues above this are accepted as nonnegative; shifts add it back as margin
PSD_SLACK = 1e-10


@dataclass(frozen=True)
class ThetaResult:
    lower: float
    upper: float
    gap: float
    iterations: int


def _certified_bounds(n: int, edges: list[tuple[int, int]], b_mat: np.ndarray, t: float, lam: np.ndarray):
    # primal: repair B into an exactly feasible matrix, then shift psd
    b = 0.5 * (b_mat + b_mat.T)
    for i, j in edges:
        b[i, j] = 0.0
        b[j, i] = 0.0
    tr = float(np.trace(b))
    if tr <= 0:
        lower = 1.0  # any single vertex gives <J,B> = 1 with B = e_i e_i^T
    else:
        b /= tr
        eig_min = float(np.linalg.eigvalsh(b)[0])
        shift = max(0.0, -eig_min) + PSD_SLACK
        b = (b + shift * np.eye(n)) / (1.0 + n * shift)
        lower = float(b.sum())
    lower = max(lower, 1.0)

    # dual: M = t I + sum lambda E - J must be psd; shift t by the deficit
    m_mat = t * np.eye(n) - np.ones((n, n))
    for k, (i, j) in enumerate(edges):
        m_mat[i, j] += lam[k]
        m_mat[j, i] += lam[k]
    eig_min = float(np.linalg.eigvalsh(m_mat)[0])
    upper = t + max(0.0, -eig_min) + PSD_SLACK
    upper = max(upper, lower)
    return lower, upper


def lovasz_theta(g: Graph, tol: float = 1e-6) -> ThetaResult:
    """Certified bracket around theta(g); raises SolverTimeout when the
    certified gap stays above ``tol``."""
    if g.n > 64:
        raise SizeExceeded("theta solver accepts at most 64 vertices")
    n = g.n
    if n == 1:
        return ThetaResult(1.0, 1.0, 0.0, 0)

    from cvxopt import matrix, solvers, spmatrix

    edges = list(g.edges())
    nvar = 1 + len(edges)
    # column 0: -I (variable t); column 1+k: -E_e for edge k
    vals, rows_idx, cols_idx = [], [], []
    for i in range(n):
        vals.append(-1.0)
        rows_idx.append(i * n + i)
        cols_idx.append(0)
    for k, (i, j) in enumerate(edges):
        vals.extend([-1.0, -1.0])
        rows_idx.extend([i * n + j, j * n + i])
        cols_idx.extend([k + 1, k + 1])
    gs = spmatrix(vals, rows_idx, cols_idx, (n * n, nvar))
    hs = matrix(-np.ones((n, n)))
    c = matrix([1.0] + [0.0] * len(edges))

    options = {
        "show_progress": False,
        "abstol": 1e-9,
        "reltol": 1e-9,
        "feastol": 1e-9,
        "maxiters": 200,
    }
    sol = solvers.sdp(c, Gs=[gs], hs=[hs], options=options)
    x = np.array(sol["x"]).ravel()
    z = np.array(sol["zs"][0]).reshape(n, n)
    t = float(x[0])
    lam = x[1:]
    lower, upper = _certified_bounds(n, edges, z, t, lam)
    gap = upper - lower
    iterations = int(sol.get("iterations", 0))
    if gap > tol:
        raise SolverTimeout(
            f"theta bracket gap {gap:.3g} exceeds tolerance {tol:.3g}", (lower, upper)
        )
    return ThetaResult(lower, upper, gap, iterations)
