"""Perron iteration for the largest signless Laplacian H-eigenvalue."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..errors import BadParamsError, NoConvergenceError, NotConnectedError
from ..hypergraph import Hypergraph, is_connected
from ..tensor import EigenPair, OperatorTag, apply_operator, make_eigenpair


@dataclass
class PowerMethodOptions:
    tol: float = 1e-10
    max_iters: int = 100_000
    start: Optional[np.ndarray] = None  # all-ones when None

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if self.start is not None:
            self.start = np.asarray(self.start, dtype=float)
            if np.any(self.start <= 0):
                raise ValueError("start vector must be strictly positive")


def lambda_q_power_method(G: Hypergraph, opts: Optional[PowerMethodOptions] = None) -> EigenPair:
    """Iterate ``x <- (Q x^{k-1})^{1/(k-1)}`` from a positive start.

    At every step the ratios ``(Q x^{k-1})_i / x_i^{k-1}`` bracket the largest
    eigenvalue for connected ``G``; the loop ends when the bracket is narrower
    than ``opts.tol`` and returns its midpoint.
    """
    opts = opts or PowerMethodOptions()
    if G.k < 3:
        raise BadParamsError(f"power method needs k >= 3, got k={G.k}")
    if not is_connected(G):
        raise NotConnectedError("power method requires a connected hypergraph")

    x = np.ones(G.n) if opts.start is None else opts.start.copy()
    if x.shape != (G.n,):
        raise ValueError("start vector length must equal n")
    x /= x.max()
    root = 1.0 / (G.k - 1)
    lo = hi = float("nan")
    for it in range(opts.max_iters):
        y = apply_operator(G, OperatorTag.SIGNLESS_LAPLACIAN, x)
        ratios = y / x ** (G.k - 1)
        lo, hi = float(ratios.min()), float(ratios.max())
        if hi - lo < opts.tol:
            return make_eigenpair(G, OperatorTag.SIGNLESS_LAPLACIAN, 0.5 * (lo + hi), x)
        x = y**root
        x /= x.max()
    raise NoConvergenceError(
        f"power method stopped after {opts.max_iters} iterations with bounds [{lo}, {hi}]",
        lower=lo, upper=hi,
    )
