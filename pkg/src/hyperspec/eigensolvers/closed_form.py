"""Largest signless Laplacian H-eigenvalue of non-regular s-cycles in closed form.

Both cases reduce to the unique root in ``(0, 1)`` of a polynomial that is
strictly increasing on that interval, found here by bisection.
"""

from __future__ import annotations

from typing import Callable, Optional

import numpy as np

from ..errors import BadParamsError
from ..families import build_s_cycle
from ..tensor import EigenPair, OperatorTag, make_eigenpair

BISECT_TOL = 1e-14


def bisect_increasing(f: Callable[[float], float], lo: float = 0.0, hi: float = 1.0,
                      tol: float = BISECT_TOL) -> float:
    """Root of an increasing ``f`` with ``f(lo) < 0 < f(hi)``.

    Stops once the bracket is narrower than ``tol`` (or cannot shrink any
    further in floating point) and returns its midpoint.
    """
    if not f(lo) < 0 < f(hi):
        raise ValueError("root is not bracketed")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm < 0:
            lo = mid
        elif fm > 0:
            hi = mid
        else:
            return mid
    return 0.5 * (lo + hi)


def cored_polynomial(k: int, s: int) -> Callable[[float], float]:
    return lambda a: 2.0 * a**k + a ** (2 * s) - 1.0


def gen_tight_polynomial(k: int, s: int) -> Callable[[float], float]:
    q, r = divmod(k, k - s)
    return lambda a: (q + 1) * a**k + a ** ((q + 1) * r) - q


def lambda_q_cored_cycle(k: int, s: int) -> tuple[float, float]:
    """``(alpha, lambda)`` for an s-cycle with ``1 <= s < k/2``.

    Core vertices carry ``alpha`` and intersection vertices 1 in the positive
    eigenvector, giving ``lambda = 2 + 2 alpha**(k-2s)``.
    """
    if k < 3 or not 1 <= s or 2 * s >= k:
        raise BadParamsError(f"cored cycle needs k >= 3 and 1 <= s < k/2, got k={k}, s={s}")
    alpha = bisect_increasing(cored_polynomial(k, s))
    return alpha, 2.0 + 2.0 * alpha ** (k - 2 * s)


def lambda_q_gen_tight_cycle(k: int, s: int) -> tuple[float, float]:
    """``(alpha, lambda)`` for a non-regular s-cycle with ``k/2 < s < k-1``.

    With ``k = q(k-s) + r``, degree-q vertices carry ``alpha`` and degree-(q+1)
    vertices 1, giving ``lambda = (q+1)(1 + alpha**(k-(q+1)r))``.
    """
    if k < 3 or not (2 * s > k and s < k - 1):
        raise BadParamsError(f"generalized tight cycle needs k/2 < s < k-1, got k={k}, s={s}")
    q, r = divmod(k, k - s)
    if r == 0:
        raise BadParamsError(f"s-cycle with k={k}, s={s} is regular (k = {q}(k-s))", code="REGULAR")
    alpha = bisect_increasing(gen_tight_polynomial(k, s))
    return alpha, (q + 1) * (1.0 + alpha ** (k - (q + 1) * r))


def lambda_q_s_cycle(k: int, s: int) -> float:
    """Largest Q-eigenvalue of any s-cycle; regular cycles give ``2q``."""
    q, r = divmod(k, k - s)
    if r == 0:
        return float(2 * q)
    if 2 * s < k:
        return lambda_q_cored_cycle(k, s)[1]
    return lambda_q_gen_tight_cycle(k, s)[1]


def closed_form_eigenpair(p) -> tuple[EigenPair, Optional[float]]:
    """Positive Q-eigenpair of the built s-cycle ``p`` and the ``alpha`` used.

    Vertices of the larger degree get 1, the others ``alpha``; regular cycles
    use the all-ones vector and return ``alpha=None``.
    """
    G = build_s_cycle(p)
    q, r = divmod(p.k, p.k - p.s)
    if r == 0:
        return make_eigenpair(G, OperatorTag.SIGNLESS_LAPLACIAN, 2.0 * q, np.ones(G.n)), None
    if 2 * p.s < p.k:
        alpha, lam = lambda_q_cored_cycle(p.k, p.s)
    else:
        alpha, lam = lambda_q_gen_tight_cycle(p.k, p.s)
    deg = G.degree_array
    x = np.where(deg == deg.max(), 1.0, alpha)
    return make_eigenpair(G, OperatorTag.SIGNLESS_LAPLACIAN, lam, x), alpha
