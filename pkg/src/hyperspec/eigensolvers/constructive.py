"""Explicit eigenpairs and eigenvector structure checks."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..bipartite import OddBipartition, verify_odd_bipartition
from ..errors import (
    BadParamsError, BadShapeError, InvalidPartitionError, OddUniformityError,
    UncertifiedInputError, VertexRangeError,
)
from ..families import CycleParams, build_s_cycle
from ..hypergraph import Hypergraph, supervertices
from ..tensor import EigenPair, OperatorTag, make_eigenpair

TRANSFER_CERT_TOL = 1e-8


def signflip_transfer(G: Hypergraph, p: OddBipartition, q_pair: EigenPair) -> EigenPair:
    """Turn a signless Laplacian eigenpair into a Laplacian one.

    Negating ``x`` on ``v1`` flips the sign of every edge product through an
    odd number of ``v1`` vertices, which for an odd-bipartition is every edge.
    """
    if G.k % 2:
        raise OddUniformityError(f"sign-flip transfer needs even k, got k={G.k}")
    if not verify_odd_bipartition(G, p):
        raise InvalidPartitionError("vertex set is not an odd-bipartition of G")
    if q_pair.op is not OperatorTag.SIGNLESS_LAPLACIAN:
        raise UncertifiedInputError(f"expected a Q eigenpair, got op={q_pair.op.value}")
    if not q_pair.residual <= TRANSFER_CERT_TOL:
        raise UncertifiedInputError(f"input residual {q_pair.residual:.3e} exceeds {TRANSFER_CERT_TOL}")
    return _flip(G, p, q_pair, OperatorTag.LAPLACIAN)


def _flip(G: Hypergraph, p: OddBipartition, pair: EigenPair, target: OperatorTag) -> EigenPair:
    sign = np.ones(G.n)
    sign[[v - 1 for v in p.v1]] = -1.0
    return make_eigenpair(G, target, pair.lam, sign * pair.x)


def signflip_back(G: Hypergraph, p: OddBipartition, l_pair: EigenPair) -> EigenPair:
    """Inverse of :func:`signflip_transfer`, Laplacian back to signless."""
    if not verify_odd_bipartition(G, p):
        raise InvalidPartitionError("vertex set is not an odd-bipartition of G")
    return _flip(G, p, l_pair, OperatorTag.SIGNLESS_LAPLACIAN)


def vertex_indicator_eigenpair(G: Hypergraph, i: int) -> EigenPair:
    """Laplacian pair ``(d_i, e_i)``: every edge product through another vertex hits a zero."""
    if G.k < 3:
        raise BadParamsError(f"indicator eigenpairs need k >= 3, got k={G.k}")
    if not 1 <= i <= G.n:
        raise VertexRangeError(f"vertex {i} outside 1..{G.n}")
    x = np.zeros(G.n)
    x[i - 1] = 1.0
    return make_eigenpair(G, OperatorTag.LAPLACIAN, float(G.degree(i)), x)


def alternating_eigenpair(G: Hypergraph, k: int, n: int) -> EigenPair:
    """``(k+1, (1,-1,1,-1,...))`` on a tight cycle with ``n`` even and ``k = 3 mod 4``."""
    if n % 2:
        raise BadShapeError(f"alternating eigenvector needs even n, got n={n}")
    if k % 4 != 3:
        raise BadShapeError(f"alternating eigenvector needs k = 3 mod 4, got k={k}")
    if (G.k, G.n) != (k, n):
        raise BadShapeError(f"hypergraph has k={G.k}, n={G.n}; expected k={k}, n={n}")
    try:
        tight = build_s_cycle(CycleParams(k, k - 1, n))
    except BadParamsError as exc:
        raise BadShapeError(f"no tight cycle with k={k}, n={n}: {exc}") from exc
    if tight.edge_sets() != G.edge_sets():
        raise BadShapeError("hypergraph is not the tight cycle on 1..n")
    x = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return make_eigenpair(G, OperatorTag.LAPLACIAN, float(k + 1), x)


@dataclass
class BlockCheck:
    vertices: tuple[int, ...]
    degree: int
    exempt: bool
    abs_spread: float
    signed_spread: float | None
    passed: bool


@dataclass
class SupervertexReport:
    certified: bool
    blocks: list[BlockCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.certified and all(b.passed for b in self.blocks)

    @property
    def checked(self) -> int:
        return sum(not b.exempt for b in self.blocks)

    def to_dict(self) -> dict:
        return {
            "certified": self.certified,
            "passed": self.passed,
            "blocks": [
                {
                    "vertices": list(b.vertices), "degree": b.degree, "exempt": b.exempt,
                    "abs_spread": b.abs_spread, "signed_spread": b.signed_spread, "passed": b.passed,
                }
                for b in self.blocks
            ],
        }


def check_supervertex_property(G: Hypergraph, pair: EigenPair, tol: float = 1e-8,
                               separation: float = 1e-6, tol_cert: float = 1e-8) -> SupervertexReport:
    """Check equal magnitudes (equal values for odd k) inside supervertices.

    Only blocks with at least two vertices and degree farther than
    ``separation`` from ``pair.lam`` are constrained; the others are reported
    as exempt. A pair that is not a certified Laplacian eigenpair yields a
    report with ``certified=False`` and no block verdicts.
    """
    certified = pair.op is OperatorTag.LAPLACIAN and pair.residual <= tol_cert
    report = SupervertexReport(certified)
    if not certified:
        return report
    x = pair.x
    for block in supervertices(G).blocks:
        if len(block.vertices) < 2:
            continue
        vals = x[[v - 1 for v in block.vertices]]
        abs_spread = float(np.ptp(np.abs(vals)))
        signed = float(np.ptp(vals)) if G.k % 2 else None
        exempt = abs(block.degree - pair.lam) <= separation
        ok = exempt or (abs_spread <= tol and (signed is None or signed <= tol))
        report.blocks.append(BlockCheck(block.vertices, block.degree, exempt, abs_spread, signed, ok))
    return report
