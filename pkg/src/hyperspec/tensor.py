"""Edge-sparse application of hypergraph tensors to vectors.

The order-k adjacency, Laplacian and signless Laplacian tensors are never
materialised. ``(A x^{k-1})_i`` is the sum, over edges containing ``i``, of the
product of the other ``k-1`` entries of ``x``; that product is taken as
``prefix * suffix`` so that zero entries need no special casing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError, ZeroVectorError
from .hypergraph import Hypergraph


class OperatorTag(str, enum.Enum):
    ADJACENCY = "A"
    LAPLACIAN = "L"
    SIGNLESS_LAPLACIAN = "Q"

    @classmethod
    def parse(cls, value) -> "OperatorTag":
        if isinstance(value, cls):
            return value
        aliases = {
            "a": cls.ADJACENCY, "adjacency": cls.ADJACENCY,
            "l": cls.LAPLACIAN, "laplacian": cls.LAPLACIAN,
            "q": cls.SIGNLESS_LAPLACIAN, "signless": cls.SIGNLESS_LAPLACIAN,
            "signlesslaplacian": cls.SIGNLESS_LAPLACIAN,
        }
        key = str(value).lower().replace("_", "").replace("-", "")
        if key not in aliases:
            raise ValueError(f"unknown operator {value!r}")
        return aliases[key]


@dataclass(frozen=True)
class EigenPair:
    """Candidate H-eigenpair; ``x`` is scaled to max-norm 1."""

    lam: float
    x: np.ndarray
    residual: float
    op: OperatorTag

    def to_dict(self) -> dict:
        return {
            "lambda": float(self.lam),
            "x": [float(v) for v in self.x],
            "residual": float(self.residual),
            "op": self.op.value,
        }


def _as_vector(G: Hypergraph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise LengthMismatchError(f"vector of shape {x.shape} does not match n={G.n}")
    return x


def excluded_products(G: Hypergraph, x: np.ndarray) -> np.ndarray:
    """``(m, k)`` array: entry ``(e, p)`` is the product of edge ``e`` without position ``p``."""
    vals = x[G.edge_index]
    m, k = vals.shape
    prefix = np.ones((m, k))
    suffix = np.ones((m, k))
    for p in range(1, k):
        prefix[:, p] = prefix[:, p - 1] * vals[:, p - 1]
    for p in range(k - 2, -1, -1):
        suffix[:, p] = suffix[:, p + 1] * vals[:, p + 1]
    return prefix * suffix


def ipow(x: np.ndarray, e: int) -> np.ndarray:
    """``x**e`` by repeated multiplication, so the rounding sequence is fixed."""
    out = np.ones_like(x, dtype=float)
    for _ in range(e):
        out = out * x
    return out


def adjacency_apply(G: Hypergraph, x: np.ndarray) -> np.ndarray:
    out = np.zeros(G.n)
    # np.add.at is unbuffered and visits entries in order: edge-major per vertex
    np.add.at(out, G.edge_index.ravel(), excluded_products(G, x).ravel())
    return out


def apply_operator(G: Hypergraph, op, x) -> np.ndarray:
    """Return ``T x^{k-1}`` for the tagged operator ``T``."""
    op = OperatorTag.parse(op)
    x = _as_vector(G, x)
    adj = adjacency_apply(G, x)
    if op is OperatorTag.ADJACENCY:
        return adj
    diag = G.degree_array * ipow(x, G.k - 1)
    if op is OperatorTag.LAPLACIAN:
        return diag - adj
    return diag + adj


def eigen_residual(G: Hypergraph, op, lam: float, x) -> float:
    """Max-norm of ``lam * x^[k-1] - T x^{k-1}``; zero exactly for an H-eigenpair."""
    x = _as_vector(G, x)
    if not np.any(x):
        raise ZeroVectorError("eigenvector candidate is identically zero")
    defect = lam * ipow(x, G.k - 1) - apply_operator(G, op, x)
    return float(np.max(np.abs(defect)))


def normalize_eigvec(x) -> np.ndarray:
    """Scale to max-norm 1 with the first largest-magnitude entry positive."""
    x = np.asarray(x, dtype=float)
    i = int(np.argmax(np.abs(x)))
    if x[i] == 0:
        raise ZeroVectorError("cannot normalize the zero vector")
    return x / x[i] + 0.0


def make_eigenpair(G: Hypergraph, op, lam: float, x) -> EigenPair:
    op = OperatorTag.parse(op)
    y = normalize_eigvec(_as_vector(G, x))
    lam = float(lam) + 0.0  # no negative zero in reports
    return EigenPair(lam, y, eigen_residual(G, op, lam, y), op)
