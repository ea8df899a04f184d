"""Multistart Newton enumeration of Laplacian H-eigenvalues.

The square system in the unknowns ``(x, lambda)``::

    F_i = lambda * x_i^{k-1} - (L x^{k-1})_i      i = 1..n
    F_{n+1} = sum_i x_i^2 - 1

is solved by Newton's method from many seeded random starts. Converged roots
are certified by residual and clustered by eigenvalue. The result only ever
under-approximates the H-spectrum: a missing value is not evidence of absence.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..errors import TooLargeError
from ..hypergraph import Hypergraph
from ..tensor import EigenPair, OperatorTag, apply_operator, eigen_residual, normalize_eigvec

log = logging.getLogger(__name__)

# reported pairs may exceed newton_tol by this factor after renormalization
CERT_FACTOR = 10.0


@dataclass
class MultistartOptions:
    starts: int = 500
    seed: int = 0
    newton_tol: float = 1e-12
    max_newton_iters: int = 200
    lambda_cluster_tol: float = 1e-6
    lambda_range: Optional[tuple[float, float]] = None  # defaults to [0, 2*Delta]
    max_n: int = 12
    zero_snap: float = 1e-7
    jobs: int = 1

    def __post_init__(self):
        for name in ("starts", "max_newton_iters", "max_n", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        for name in ("newton_tol", "lambda_cluster_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SpectralReport:
    op: OperatorTag
    distinct_lambdas: list[float]
    representatives: list[EigenPair]
    hits: list[int]
    failures: int
    out_of_range: int = 0
    seed: int = 0
    starts: int = 0
    converged: list[EigenPair] = field(default_factory=list, repr=False)

    def to_dict(self, with_vectors: bool = True) -> dict:
        return {
            "op": self.op.value,
            "distinct_lambdas": [float(v) for v in self.distinct_lambdas],
            "hits": list(self.hits),
            "failures": self.failures,
            "out_of_range": self.out_of_range,
            "seed": self.seed,
            "starts": self.starts,
            "representatives": [
                p.to_dict() if with_vectors else {"lambda": p.lam, "residual": p.residual}
                for p in self.representatives
            ],
        }


class LaplacianSystem:
    """Residual and analytic Jacobian of the normalized H-eigen system."""

    def __init__(self, G: Hypergraph):
        self.G = G
        self.n, self.k = G.n, G.k
        self.E = G.edge_index
        self.deg = np.asarray(G.degree_array)
        pairs = list(itertools.combinations(range(self.k), 2))
        # column indices of each edge that remain once positions p, q are dropped
        self.rest = np.array([[c for c in range(self.k) if c not in pq] for pq in pairs],
                             dtype=np.intp).reshape(len(pairs), self.k - 2)
        pp = np.array([p for p, _ in pairs], dtype=np.intp)
        qq = np.array([q for _, q in pairs], dtype=np.intp)
        self.rows = self.E[:, pp]
        self.cols = self.E[:, qq]

    def residual(self, x: np.ndarray, lam: float) -> np.ndarray:
        F = np.empty(self.n + 1)
        F[: self.n] = lam * x ** (self.k - 1) - apply_operator(self.G, OperatorTag.LAPLACIAN, x)
        F[self.n] = x @ x - 1.0
        return F

    def jacobian(self, x: np.ndarray, lam: float) -> np.ndarray:
        n, k = self.n, self.k
        J = np.zeros((n + 1, n + 1))
        if self.rest.size:
            vals = x[self.E]  # (m, k)
            two_out = vals[:, self.rest].prod(axis=2)  # (m, pairs)
        else:  # k == 2: the other vertex is the only factor
            two_out = np.ones(self.rows.shape)
        off = np.zeros((n, n))
        np.add.at(off, (self.rows, self.cols), two_out)
        off += off.T
        J[:n, :n] = off
        J[np.arange(n), np.arange(n)] = (k - 1) * (lam - self.deg) * x ** (k - 2)
        J[:n, n] = x ** (k - 1)
        J[n, :n] = 2.0 * x
        return J


def _certified(system: LaplacianSystem, x: np.ndarray, lam: float) -> float:
    """Residual after rescaling ``x`` to max-norm 1."""
    return eigen_residual(system.G, OperatorTag.LAPLACIAN, lam, normalize_eigvec(x))


def _newton(system: LaplacianSystem, x: np.ndarray, lam: float, opts: MultistartOptions,
            support: Optional[np.ndarray] = None):
    """Newton iteration from one start; return ``(lam, x)`` or ``None``.

    With ``support`` given, entries outside it are held at zero and only the
    equations on the support (plus the sphere constraint) are solved.
    """
    n, k = system.n, system.k
    idx = np.arange(n) if support is None else np.flatnonzero(support)
    sel = np.append(idx, n)
    for _ in range(opts.max_newton_iters):
        F = system.residual(x, lam)
        if not np.all(np.isfinite(F)):
            return None
        xmax = np.max(np.abs(x))
        if xmax == 0:
            return None
        if float(np.max(np.abs(F[:n]))) / xmax ** (k - 1) <= opts.newton_tol:
            return lam, x
        J = system.jacobian(x, lam)[np.ix_(sel, sel)]
        rhs = -F[sel]
        try:
            step = np.linalg.solve(J, rhs)
        except np.linalg.LinAlgError:
            step = np.linalg.lstsq(J, rhs, rcond=None)[0]
        if not np.all(np.isfinite(step)):
            return None
        x = x.copy()
        x[idx] += step[:-1]
        lam = lam + step[-1]
        nrm = np.linalg.norm(x)
        if nrm == 0 or not np.isfinite(nrm):
            return None
        x = x / nrm
    return None


def lambda_well_determined(system: LaplacianSystem, x: np.ndarray, lam: float,
                           support: Optional[np.ndarray] = None, rel: float = 1e-6,
                           max_lambda_share: float = 1e-2) -> bool:
    """Whether the converged ``lambda`` is pinned down by the equations.

    Near-null right singular vectors of the Jacobian that move ``lambda``
    signal a multiple root: the residual is then flat along a curve of
    approximate eigenpairs and ``lambda`` is only known to roughly
    ``eps**(1/multiplicity)``. Null directions that leave ``lambda`` fixed
    (families of eigenvectors for one eigenvalue) are harmless.
    """
    n = system.n
    sel = np.append(np.arange(n) if support is None else np.flatnonzero(support), n)
    J = system.jacobian(x, lam)[np.ix_(sel, sel)]
    _, sv, vt = np.linalg.svd(J)
    weak = sv < rel * sv[0]
    return not weak.any() or float(np.max(np.abs(vt[weak, -1]))) <= max_lambda_share


def _candidate_supports(y: np.ndarray, small: float = 1e-2, gap: float = 1e2):
    """Supports obtained by dropping entries below a large magnitude gap, biggest drop first."""
    a = np.abs(y)
    order = np.sort(a)
    cuts = []
    for lo, hi in zip(order[:-1], order[1:]):
        if lo < small and (lo == 0 or hi > gap * lo):
            cuts.append(lo)
    for c in reversed(cuts):
        yield a > c


def _resolve(system: LaplacianSystem, lam: float, x: np.ndarray, opts: MultistartOptions):
    """Return a root with a well-determined eigenvalue, or ``None``."""
    if lambda_well_determined(system, x, lam):
        return lam, x
    y = normalize_eigvec(x)
    for support in _candidate_supports(y):
        z = np.where(support, y, 0.0)
        z /= np.linalg.norm(z)
        root = _newton(system, z, _refit_lambda(system, z), opts, support)
        if root is None:
            continue
        if _certified(system, root[1], root[0]) <= opts.newton_tol and \
                lambda_well_determined(system, root[1], root[0], support):
            return root
    return None


def _refit_lambda(system: LaplacianSystem, x: np.ndarray) -> float:
    """Least-squares eigenvalue for a fixed vector."""
    from ..tensor import apply_operator

    p = x ** (system.k - 1)
    return float(p @ apply_operator(system.G, OperatorTag.LAPLACIAN, x) / (p @ p))


def _clean_support(system: LaplacianSystem, lam: float, x: np.ndarray, opts: MultistartOptions):
    """Flush numerically-zero entries and re-solve on the remaining support.

    An entry of size ``t`` enters the equations through ``t**(k-1)``, so at
    the certification slack ``10 * newton_tol`` anything below
    ``(10 * newton_tol)**(1/(k-1))`` is indistinguishable from zero. Such
    entries are zeroed and Newton is rerun on the rest; the cleaned pair replaces the original only when it is
    certified on the full system with an unchanged eigenvalue.
    """
    y = normalize_eigvec(x)
    thresh = max(opts.zero_snap, (CERT_FACTOR * opts.newton_tol) ** (1.0 / (system.k - 1)))
    for _ in range(3):
        small = np.abs(y) < thresh
        if not small.any() or small.all():
            break
        z = np.where(small, 0.0, y)
        root = _newton(system, z / np.linalg.norm(z), lam, opts, ~small)
        if root is None:
            break
        lam2, y2 = root[0], normalize_eigvec(np.where(small, 0.0, root[1]))
        if _certified(system, y2, lam2) > opts.newton_tol or abs(lam2 - lam) > opts.lambda_cluster_tol:
            break
        if np.array_equal(y2, y) and lam2 == lam:
            break
        lam, y = lam2, y2
    return lam, y, _certified(system, y, lam)


def _run_starts(G: Hypergraph, opts: MultistartOptions, seeds: list[np.random.SeedSequence]):
    system = LaplacianSystem(G)
    lo, hi = _lambda_range(G, opts)
    out = []
    for ss in seeds:
        rng = np.random.default_rng(ss)
        x0 = rng.standard_normal(G.n)
        x0 /= np.linalg.norm(x0)
        lam0 = rng.uniform(lo, hi)
        root = _newton(system, x0, lam0, opts)
        if root is not None:
            root = _resolve(system, *root, opts)
        if root is None:
            out.append(None)
            continue
        out.append(_clean_support(system, *root, opts))
    return out


def _lambda_range(G: Hypergraph, opts: MultistartOptions) -> tuple[float, float]:
    if opts.lambda_range is not None:
        return tuple(map(float, opts.lambda_range))
    return 0.0, 2.0 * float(G.degree_array.max())


def _chunks(seq, parts):
    size = -(-len(seq) // parts)
    return [seq[i:i + size] for i in range(0, len(seq), size)]


def enumerate_laplacian_spectrum(G: Hypergraph, opts: Optional[MultistartOptions] = None) -> SpectralReport:
    """Find Laplacian H-eigenvalues of a small hypergraph by multistart Newton.

    Each start draws ``x`` uniformly on the unit sphere and ``lambda`` uniformly
    in ``opts.lambda_range`` from its own child of ``SeedSequence(opts.seed)``,
    so the report depends on the seed only, never on ``opts.jobs``.
    """
    opts = opts or MultistartOptions()
    if G.n > opts.max_n:
        raise TooLargeError(f"dense Newton enumeration limited to n <= {opts.max_n}, got n={G.n}")
    seeds = np.random.SeedSequence(opts.seed).spawn(opts.starts)

    if opts.jobs > 1 and opts.starts > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            parts = pool.map(_run_starts, itertools.repeat(G), itertools.repeat(opts),
                             _chunks(seeds, opts.jobs))
            roots = [r for part in parts for r in part]
    else:
        roots = _run_starts(G, opts, seeds)

    lo, hi = _lambda_range(G, opts)
    slack = opts.lambda_cluster_tol
    failures = out_of_range = 0
    found = []
    for root in roots:
        if root is None or root[2] > opts.newton_tol * CERT_FACTOR:
            failures += 1
            continue
        lam, x, res = root
        if lam < lo - slack or lam > hi + slack:
            out_of_range += 1
            log.debug("discarding root with lambda=%r outside [%r, %r]", lam, lo, hi)
            continue
        found.append(EigenPair(float(lam) + 0.0, x, float(res), OperatorTag.LAPLACIAN))
    if failures:
        log.debug("%d of %d starts failed to converge", failures, opts.starts)

    found.sort(key=lambda p: (p.lam, tuple(p.x)))
    clusters: list[list[EigenPair]] = []
    for pair in found:
        if clusters and pair.lam - clusters[-1][-1].lam <= opts.lambda_cluster_tol:
            clusters[-1].append(pair)
        else:
            clusters.append([pair])

    reps = [min(c, key=lambda p: (p.residual, tuple(p.x))) for c in clusters]
    return SpectralReport(
        op=OperatorTag.LAPLACIAN,
        distinct_lambdas=[p.lam for p in reps],
        representatives=reps,
        hits=[len(c) for c in clusters],
        failures=failures,
        out_of_range=out_of_range,
        seed=opts.seed,
        starts=opts.starts,
        converged=found,
    )
