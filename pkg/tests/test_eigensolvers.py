import numpy as np
import pytest

from hyperspec import (
    CycleParams, OddBipartition, build_s_cycle, construct_odd_bipartition, degrees,
    is_regular, make_hypergraph,
)
from hyperspec.eigensolvers import (
    LaplacianSystem, MultistartOptions, PowerMethodOptions, alternating_eigenpair,
    bisect_increasing, check_supervertex_property, closed_form_eigenpair, cored_polynomial,
    enumerate_laplacian_spectrum, gen_tight_polynomial, lambda_q_cored_cycle,
    lambda_q_gen_tight_cycle, lambda_q_power_method, lambda_q_s_cycle, signflip_back,
    signflip_transfer, vertex_indicator_eigenpair,
)
from hyperspec.errors import (
    BadParamsError, BadShapeError, InvalidPartitionError, NoConvergenceError,
    NotConnectedError, OddUniformityError, TooLargeError, UncertifiedInputError,
)
from hyperspec.tensor import OperatorTag, eigen_residual, make_eigenpair

from helpers import cycle, half_cycle, jacobian_fd_error, random_graph

CORED = [(k, s) for k in range(3, 9) for s in range(1, k) if 2 * s < k]
GEN_TIGHT = [(k, s) for k in range(3, 9) for s in range(1, k - 1) if 2 * s > k and k % (k - s)]

# frozen from an independent numpy.roots evaluation
FROZEN = {
    "cored": {(3, 1): (0.6572981061383736, 3.314596212276747), (4, 1): (0.7071067811865476, 3.0)},
    "tight": {(5, 3): (0.8554153406769451, 5.195206215196363), (7, 5): (None, 7.141018776651647)},
}


def roots_oracle(coeffs_by_degree):
    """Unique root in (0, 1) of a polynomial given as ``{degree: coefficient}``."""
    top = max(coeffs_by_degree)
    coeffs = [coeffs_by_degree.get(d, 0.0) for d in range(top, -1, -1)]
    real = [r.real for r in np.roots(coeffs) if abs(r.imag) < 1e-9 and 0 < r.real < 1]
    assert len(real) == 1
    return real[0]


class TestClosedForms:
    @pytest.mark.parametrize("k,s", CORED)
    def test_cored_matches_roots(self, k, s):
        coeffs = {k: 2.0, 0: -1.0}
        coeffs[2 * s] = coeffs.get(2 * s, 0.0) + 1.0
        alpha, lam = lambda_q_cored_cycle(k, s)
        assert abs(alpha - roots_oracle(coeffs)) <= 1e-12
        assert lam == pytest.approx(2 + 2 * alpha ** (k - 2 * s), abs=1e-14)

    @pytest.mark.parametrize("k,s", GEN_TIGHT)
    def test_gen_tight_matches_roots(self, k, s):
        q, r = divmod(k, k - s)
        coeffs = {k: float(q + 1), 0: float(-q)}
        coeffs[(q + 1) * r] = coeffs.get((q + 1) * r, 0.0) + 1.0
        alpha, lam = lambda_q_gen_tight_cycle(k, s)
        assert abs(alpha - roots_oracle(coeffs)) <= 1e-12

    @pytest.mark.parametrize("k,s", list(FROZEN["cored"]))
    def test_frozen_cored(self, k, s):
        alpha, lam = lambda_q_cored_cycle(k, s)
        a0, l0 = FROZEN["cored"][k, s]
        assert abs(alpha - a0) <= 1e-12 and abs(lam - l0) <= 1e-12

    @pytest.mark.parametrize("k,s", list(FROZEN["tight"]))
    def test_frozen_gen_tight(self, k, s):
        alpha, lam = lambda_q_gen_tight_cycle(k, s)
        a0, l0 = FROZEN["tight"][k, s]
        assert a0 is None or abs(alpha - a0) <= 1e-12
        assert abs(lam - l0) <= 1e-12

    def test_analytic_case(self):
        alpha, lam = lambda_q_cored_cycle(4, 1)
        assert abs(alpha - np.sqrt(0.5)) <= 1e-14
        assert abs(lam - 3.0) <= 1e-12

    @pytest.mark.parametrize("k,s", CORED + GEN_TIGHT)
    def test_bisection_certificate(self, k, s):
        if 2 * s < k:
            f, (alpha, _) = cored_polynomial(k, s), lambda_q_cored_cycle(k, s)
        else:
            f, (alpha, _) = gen_tight_polynomial(k, s), lambda_q_gen_tight_cycle(k, s)
        assert f(alpha - 1e-14) < 0 < f(alpha + 1e-14)

    def test_bisect_requires_bracket(self):
        with pytest.raises(ValueError):
            bisect_increasing(lambda a: a + 1.0)
        assert bisect_increasing(lambda a: a - 0.25) == pytest.approx(0.25, abs=1e-14)

    @pytest.mark.parametrize("k,s", [(2, 1), (4, 2), (4, 3), (3, 0)])
    def test_cored_bad_params(self, k, s):
        with pytest.raises(BadParamsError):
            lambda_q_cored_cycle(k, s)

    def test_gen_tight_regular_rejected(self):
        with pytest.raises(BadParamsError) as info:
            lambda_q_gen_tight_cycle(6, 4)
        assert info.value.code == "REGULAR"
        with pytest.raises(BadParamsError):
            lambda_q_gen_tight_cycle(5, 4)

    def test_dispatch(self):
        assert lambda_q_s_cycle(6, 3) == 4.0
        assert lambda_q_s_cycle(4, 1) == lambda_q_cored_cycle(4, 1)[1]
        assert lambda_q_s_cycle(5, 3) == lambda_q_gen_tight_cycle(5, 3)[1]

    @pytest.mark.parametrize("k,s,m", [(3, 1, 3), (4, 1, 3), (5, 3, 4), (7, 5, 5), (6, 3, 4), (5, 2, 4)])
    def test_closed_form_pair_is_eigenpair(self, k, s, m):
        pair, alpha = closed_form_eigenpair(CycleParams(k, s, m))
        assert pair.op is OperatorTag.SIGNLESS_LAPLACIAN
        assert pair.residual <= 1e-12
        assert (alpha is None) == is_regular(build_s_cycle(CycleParams(k, s, m)))[0]


class TestPowerMethod:
    @pytest.mark.parametrize("G,expected", [
        (cycle(6, 3, 4), 4.0), (cycle(4, 1, 3), 3.0), (make_hypergraph(3, 3, [[1, 2, 3]]), 2.0),
    ])
    def test_examples(self, G, expected):
        pair = lambda_q_power_method(G)
        assert abs(pair.lam - expected) <= 1e-8
        assert pair.residual <= 1e-8
        assert np.all(pair.x > 0)

    def test_disconnected(self):
        with pytest.raises(NotConnectedError):
            lambda_q_power_method(make_hypergraph(3, 6, [[1, 2, 3], [4, 5, 6]]))

    def test_needs_k3(self):
        with pytest.raises(BadParamsError):
            lambda_q_power_method(cycle(2, 1, 4))

    def test_no_convergence(self):
        with pytest.raises(NoConvergenceError) as info:
            lambda_q_power_method(cycle(5, 3, 4), PowerMethodOptions(max_iters=1))
        assert info.value.details["lower"] < info.value.details["upper"]

    def test_options_validation(self):
        with pytest.raises(ValueError):
            PowerMethodOptions(tol=0)
        with pytest.raises(ValueError):
            PowerMethodOptions(start=[1.0, 0.0])

    def test_custom_start(self):
        G = cycle(3, 1, 3)
        a = lambda_q_power_method(G)
        b = lambda_q_power_method(G, PowerMethodOptions(start=np.linspace(1, 2, G.n)))
        assert abs(a.lam - b.lam) <= 1e-8


class TestJacobian:
    @pytest.mark.parametrize("seed", range(12))
    def test_matches_central_differences(self, seed):
        rng = np.random.default_rng(seed)
        G = random_graph(rng, max_k=5, max_n=8)
        assert jacobian_fd_error(G, rng.standard_normal(G.n + 1)) <= 1e-5

    def test_residual_zero_at_known_root(self):
        G = cycle(3, 2, 4)
        system = LaplacianSystem(G)
        x = np.array([1.0, -1.0, 1.0, -1.0]) / 2.0
        assert np.max(np.abs(system.residual(x, 4.0))) <= 1e-15


class TestEnumerator:
    def test_tight_4(self):
        rep = enumerate_laplacian_spectrum(cycle(3, 2, 4), MultistartOptions(starts=200))
        assert np.allclose(rep.distinct_lambdas, [0, 3, 4], atol=1e-9)
        assert sum(rep.hits) + rep.failures + rep.out_of_range == 200

    def test_report_invariants(self):
        opts = MultistartOptions(starts=150, seed=3)
        rep = enumerate_laplacian_spectrum(cycle(4, 2, 3), opts)
        assert all(p.residual <= 10 * opts.newton_tol for p in rep.representatives)
        assert all(b - a > opts.lambda_cluster_tol for a, b in zip(rep.distinct_lambdas, rep.distinct_lambdas[1:]))
        for p in rep.converged:
            assert eigen_residual(cycle(4, 2, 3), "L", p.lam, p.x) == p.residual
        assert rep.seed == 3 and rep.starts == 150

    def test_parallel_matches_serial(self):
        G = cycle(3, 2, 5)
        serial = enumerate_laplacian_spectrum(G, MultistartOptions(starts=60, seed=7))
        parallel = enumerate_laplacian_spectrum(G, MultistartOptions(starts=60, seed=7, jobs=2))
        assert serial.to_dict() == parallel.to_dict()

    def test_seed_changes_nothing_structural(self):
        G = cycle(3, 2, 4)
        a = enumerate_laplacian_spectrum(G, MultistartOptions(starts=40, seed=1))
        b = enumerate_laplacian_spectrum(G, MultistartOptions(starts=40, seed=1))
        assert a.to_dict() == b.to_dict()

    def test_too_large(self):
        with pytest.raises(TooLargeError):
            enumerate_laplacian_spectrum(cycle(3, 2, 13))

    def test_options_validation(self):
        with pytest.raises(ValueError):
            MultistartOptions(starts=0)
        with pytest.raises(ValueError):
            MultistartOptions(newton_tol=0.0)

    @pytest.mark.parametrize("k,s,m", [(4, 2, 3), (4, 1, 3), (6, 3, 3)])
    def test_ordering_chain(self, k, s, m):
        G = cycle(k, s, m)
        rep = enumerate_laplacian_spectrum(G, MultistartOptions(starts=150))
        lam_q = lambda_q_power_method(G).lam
        assert 0 <= max(rep.distinct_lambdas) <= lam_q + 1e-8
        assert lam_q <= 2 * degrees(G).max + 1e-8


class TestConstructive:
    def test_indicator_tight(self):
        pair = vertex_indicator_eigenpair(cycle(3, 2, 5), 1)
        assert pair.lam == 3.0 and pair.residual == 0.0

    def test_indicator_cored(self):
        G = cycle(5, 1, 3)
        assert vertex_indicator_eigenpair(G, 2).lam == 1.0
        assert vertex_indicator_eigenpair(G, 1).lam == 2.0

    def test_indicator_errors(self):
        with pytest.raises(BadParamsError):
            vertex_indicator_eigenpair(cycle(2, 1, 4), 1)
        with pytest.raises(Exception):
            vertex_indicator_eigenpair(cycle(3, 2, 5), 6)

    def test_alternating(self):
        pair = alternating_eigenpair(cycle(3, 2, 4), 3, 4)
        assert pair.lam == 4.0 and pair.residual <= 1e-12
        np.testing.assert_array_equal(pair.x, [1, -1, 1, -1])
        assert alternating_eigenpair(cycle(7, 6, 8), 7, 8).lam == 8.0

    @pytest.mark.parametrize("G,k,n", [
        (cycle(3, 2, 5), 3, 5), (cycle(5, 4, 6), 5, 6), (cycle(3, 2, 6), 3, 4), (cycle(3, 1, 4), 3, 8),
    ])
    def test_alternating_bad_shape(self, G, k, n):
        with pytest.raises(BadShapeError):
            alternating_eigenpair(G, k, n)

    def test_transfer_half_cycle(self):
        G = half_cycle()
        part = OddBipartition({6, 12})
        q_pair = make_eigenpair(G, "Q", 4.0, np.ones(12))
        l_pair = signflip_transfer(G, part, q_pair)
        assert l_pair.op is OperatorTag.LAPLACIAN
        assert l_pair.lam == 4.0 and l_pair.residual == 0.0
        back = signflip_back(G, part, l_pair)
        np.testing.assert_array_equal(back.x, q_pair.x)
        assert back.op is OperatorTag.SIGNLESS_LAPLACIAN

    def test_transfer_cored(self):
        p = CycleParams(4, 1, 3)
        G = build_s_cycle(p)
        l_pair = signflip_transfer(G, construct_odd_bipartition(p), lambda_q_power_method(G))
        assert abs(l_pair.lam - 3.0) <= 1e-8 and l_pair.residual <= 1e-8

    def test_transfer_errors(self):
        G = half_cycle()
        good = make_eigenpair(G, "Q", 4.0, np.ones(12))
        with pytest.raises(InvalidPartitionError):
            signflip_transfer(G, OddBipartition({6}), good)
        with pytest.raises(UncertifiedInputError):
            signflip_transfer(G, OddBipartition({6, 12}), make_eigenpair(G, "L", 0.0, np.ones(12)))
        with pytest.raises(UncertifiedInputError):
            signflip_transfer(G, OddBipartition({6, 12}), make_eigenpair(G, "Q", 3.0, np.ones(12)))
        with pytest.raises(OddUniformityError):
            G3 = cycle(3, 1, 3)
            signflip_transfer(G3, OddBipartition({1}), make_eigenpair(G3, "Q", 2.0, np.ones(6)))


class TestSupervertexCheck:
    def test_half_cycle_transferred(self):
        G = half_cycle()
        pair = signflip_transfer(G, OddBipartition({6, 12}), make_eigenpair(G, "Q", 4.0, np.ones(12)))
        rep = check_supervertex_property(G, pair)
        assert rep.passed and rep.checked == 4

    def test_exempt_block(self):
        G = cycle(5, 1, 3)
        rep = check_supervertex_property(G, vertex_indicator_eigenpair(G, 2))
        assert rep.passed
        exempt = [b for b in rep.blocks if b.exempt]
        assert [b.vertices for b in exempt] == [(2, 3, 4), (6, 7, 8), (10, 11, 12)]

    def test_violation_detected(self):
        G = half_cycle()
        x = np.ones(12)
        x[0] = 0.5
        rep = check_supervertex_property(G, make_eigenpair(G, "L", 0.0, x), tol_cert=np.inf)
        assert rep.certified and not rep.passed

    def test_uncertified(self):
        G = half_cycle()
        rep = check_supervertex_property(G, make_eigenpair(G, "Q", 4.0, np.ones(12)))
        assert not rep.certified and not rep.passed
        assert rep.to_dict()["blocks"] == []

    def test_generalized_loose_enumeration(self):
        # with m=4 only the block degrees 1 and 2 turn up, so m=3 gives a real check
        G = cycle(5, 2, 3)
        rep = enumerate_laplacian_spectrum(G, MultistartOptions(starts=500))
        pairs = [p for p in rep.converged if min(abs(p.lam - 1), abs(p.lam - 2)) > 1e-6]
        assert pairs
        assert all(check_supervertex_property(G, p).passed for p in pairs)


@pytest.mark.parametrize("k,s,m", [(k, s, m) for k in range(3, 9) for s in range(1, k) for m in range(1, 5)])
def test_paths_reach_two_delta_only_when_regular(k, s, m):
    from hyperspec import PathParams, build_s_path
    G = build_s_path(PathParams(k, s, m))
    lam = lambda_q_power_method(G).lam
    two_delta = 2 * degrees(G).max
    if is_regular(G)[0]:
        assert abs(lam - two_delta) <= 1e-8
    else:
        assert two_delta - lam > 1e-3
