"""Shared graph builders and hypothesis strategies for the test suite."""

import itertools

import numpy as np
from hypothesis import strategies as st

from hyperspec import CycleParams, PathParams, build_s_cycle, build_s_path, make_hypergraph

# the (6,3,4) cycle written out by hand: regular of degree 2, four supervertices
HALF_CYCLE_EDGES = [[1, 2, 3, 4, 5, 6], [4, 5, 6, 7, 8, 9], [7, 8, 9, 10, 11, 12], [10, 11, 12, 1, 2, 3]]


def half_cycle():
    return make_hypergraph(6, 12, HALF_CYCLE_EDGES)


def cycle(k, s, m):
    return build_s_cycle(CycleParams(k, s, m))


def path(k, s, m):
    return build_s_path(PathParams(k, s, m))


def cycle_grid(ks=range(3, 9), max_n=24):
    """Every valid ``CycleParams`` with ``k`` in ``ks`` and ``n <= max_n``."""
    for k in ks:
        for s in range(1, k):
            for m in itertools.count(1):
                n = m * (k - s)
                if n > max_n:
                    break
                if n >= 2 * k - s:
                    yield CycleParams(k, s, m)


@st.composite
def hypergraphs(draw, min_k=2, max_k=5, max_n=10, max_m=8):
    k = draw(st.integers(min_k, max_k))
    n = draw(st.integers(k, max(k, max_n)))
    subsets = st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True).map(lambda e: tuple(sorted(e)))
    edges = draw(st.lists(subsets, min_size=1, max_size=max_m, unique=True))
    return make_hypergraph(k, n, edges)


def naive_apply(G, op, x):
    """Per-vertex recomputation straight from the definition, one edge at a time.

    Entries before ``i`` in the sorted edge are multiplied left to right and
    entries after it right to left, then the two partial products are joined.
    """
    out = []
    for i in range(1, G.n + 1):
        adj = 0.0
        for e in G.edges:
            if i not in e:
                continue
            p = e.index(i)
            left = 1.0
            for v in e[:p]:
                left = left * float(x[v - 1])
            right = 1.0
            for v in reversed(e[p + 1:]):
                right = right * float(x[v - 1])
            adj = adj + left * right
        power = 1.0
        for _ in range(G.k - 1):
            power = power * float(x[i - 1])
        diag = float(G.degree(i)) * power
        out.append({"A": adj, "L": diag - adj, "Q": diag + adj}[op])
    return np.array(out)


def random_graph(rng, max_k=5, max_n=10):
    k = int(rng.integers(2, max_k + 1))
    n = int(rng.integers(k, max_n + 1))
    m = int(rng.integers(1, 9))
    edges = {tuple(sorted(rng.choice(n, size=k, replace=False) + 1)) for _ in range(m)}
    return make_hypergraph(k, n, sorted(edges))


def random_vector(rng, n):
    x = rng.standard_normal(n)
    x[rng.random(n) < 0.3] = 0.0
    return x


def jacobian_fd_error(G, z, h=1e-6):
    """Largest gap between the analytic Jacobian and central differences, relative to ``max|J|``."""
    from hyperspec.eigensolvers import LaplacianSystem

    system = LaplacianSystem(G)
    n = G.n
    J = system.jacobian(z[:n], z[n])
    fd = np.empty_like(J)
    for j in range(n + 1):
        dz = np.zeros(n + 1)
        dz[j] = h
        fp = system.residual((z + dz)[:n], (z + dz)[n])
        fm = system.residual((z - dz)[:n], (z - dz)[n])
        fd[:, j] = (fp - fm) / (2 * h)
    return float(np.max(np.abs(J - fd)) / max(1.0, np.max(np.abs(J))))
