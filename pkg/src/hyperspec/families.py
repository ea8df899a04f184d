"""s-paths and s-cycles: constructors, classification and odd-bipartitions.

Edge ``j`` (0-based) of either family covers the ``k`` consecutive vertices
starting at ``1 + j(k-s)``; for cycles ids wrap modulo ``n`` into ``1..n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .bipartite import OddBipartition
from .errors import BadParamsError, NotOddBipartiteError, OddUniformityError, TooShortError
from .hypergraph import Hypergraph, make_hypergraph

LOOSE = "loose"
GENERALIZED_LOOSE = "generalized-loose"
HALF = "half"
GENERALIZED_TIGHT = "generalized-tight"
TIGHT = "tight"


def _check_ksm(k: int, s: int, m: int) -> None:
    if k < 2:
        raise BadParamsError(f"k must be >= 2, got {k}", code="K_OUT_OF_RANGE")
    if not 1 <= s <= k - 1:
        raise BadParamsError(f"s must satisfy 1 <= s <= k-1, got s={s}, k={k}", code="S_OUT_OF_RANGE")
    if m < 1:
        raise BadParamsError(f"m must be >= 1, got {m}", code="M_OUT_OF_RANGE")


@dataclass(frozen=True)
class PathParams:
    k: int
    s: int
    m: int

    def __post_init__(self):
        _check_ksm(self.k, self.s, self.m)

    @property
    def n(self) -> int:
        return self.s + self.m * (self.k - self.s)


@dataclass(frozen=True)
class CycleParams:
    k: int
    s: int
    m: int

    def __post_init__(self):
        _check_ksm(self.k, self.s, self.m)
        if self.n < 2 * self.k - self.s:
            raise TooShortError(
                f"s-cycle needs n >= 2k-s for consecutive edges to share exactly s vertices; "
                f"got n={self.n} < {2 * self.k - self.s}"
            )

    @property
    def n(self) -> int:
        return self.m * (self.k - self.s)


@dataclass(frozen=True)
class CycleClass:
    family: str
    regular: bool
    q: int
    r: int
    delta: int
    t0: Optional[int] = None
    l0: Optional[int] = None


def build_s_path(p: PathParams) -> Hypergraph:
    step = p.k - p.s
    edges = [range(1 + j * step, 1 + j * step + p.k) for j in range(p.m)]
    return make_hypergraph(p.k, p.n, edges)


def build_s_cycle(p: CycleParams) -> Hypergraph:
    n, step = p.n, p.k - p.s
    edges = [[(j * step + t) % n + 1 for t in range(p.k)] for j in range(p.m)]
    return make_hypergraph(p.k, n, edges)


def family_name(k: int, s: int) -> str:
    if s == 1:
        return LOOSE
    if s == k - 1:
        return TIGHT
    if 2 * s == k:
        return HALF
    return GENERALIZED_LOOSE if 2 * s < k else GENERALIZED_TIGHT


def two_adic(q: int) -> tuple[int, int]:
    """Return ``(t0, l0)`` with ``q = 2**t0 * (2*l0 + 1)``."""
    t0 = (q & -q).bit_length() - 1
    return t0, ((q >> t0) - 1) // 2


def classify_s_cycle(p: CycleParams) -> CycleClass:
    q, r = divmod(p.k, p.k - p.s)
    family = family_name(p.k, p.s)
    if r == 0:
        t0, l0 = two_adic(q)
        return CycleClass(family, True, q, 0, q, t0, l0)
    return CycleClass(family, False, q, r, q + 1)


def cycle_odd_bipartite_predicate(p: CycleParams) -> bool:
    if p.k % 2:
        raise OddUniformityError(f"odd-bipartiteness needs even k, got k={p.k}")
    cls = classify_s_cycle(p)
    if not cls.regular:
        return True
    return p.m % (1 << cls.t0) == 0


def construct_odd_bipartition(params: Union[PathParams, CycleParams]) -> OddBipartition:
    """Explicit odd-bipartition witness for an even-uniform path or cycle.

    Paths use the multiples of ``k``. Non-regular cycles use one vertex per
    block of ``k-s`` (block ends when ``q`` is odd, block starts when ``q`` is
    even). Regular cycles use the multiples of ``2**t0 * (k-s)``, which only
    works when ``m`` is a multiple of ``2**t0``.
    """
    k, s, n = params.k, params.s, params.n
    if k % 2:
        raise OddUniformityError(f"odd-bipartiteness needs even k, got k={k}")
    step = k - s
    if isinstance(params, PathParams):
        v1 = range(k, n + 1, k)
    else:
        cls = classify_s_cycle(params)
        if cls.regular:
            if not cycle_odd_bipartite_predicate(params):
                raise NotOddBipartiteError(
                    f"regular s-cycle with q={cls.q} (t0={cls.t0}) needs m divisible by "
                    f"{1 << cls.t0}, got m={params.m}"
                )
            q0 = (1 << cls.t0) * step
            v1 = range(q0, n + 1, q0)
        elif cls.q % 2:
            v1 = (i * step for i in range(1, params.m + 1))
        else:
            v1 = (1 + (i - 1) * step for i in range(1, params.m + 1))
    return OddBipartition(frozenset(v1))


def recognize(G: Hypergraph) -> Optional[tuple[str, Union[PathParams, CycleParams]]]:
    """Identify ``G`` as a built s-cycle or s-path, up to edge order.

    Returns ``("cycle", params)`` or ``("path", params)``, or ``None``. The
    comparison is on labelled edge sets, so relabelled copies are not matched.
    """
    k, n, m = G.k, G.n, G.m
    if m == 0:
        return None
    target = G.edge_sets()
    if n % m == 0:
        s = k - n // m
        if 1 <= s <= k - 1 and n >= 2 * k - s:
            p = CycleParams(k, s, m)
            if build_s_cycle(p).edge_sets() == target:
                return "cycle", p
    # path: n = s + m(k-s)  =>  s(1-m) = n - mk
    for s in range(1, k):
        if s + m * (k - s) == n:
            p = PathParams(k, s, m)
            if build_s_path(p).edge_sets() == target:
                return "path", p
    return None
