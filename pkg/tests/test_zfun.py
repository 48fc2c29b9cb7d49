import json
import math
from fractions import Fraction

import pytest

from altpoly.errors import FeasibilityError
from altpoly.exppoly import ExpPolySystem, e_eval
from altpoly.zfun import (
    etilde_eval,
    gram_matrix,
    lambda_max,
    rational_candidates,
    weight_peak,
    whole_candidates,
    z_build,
    z_build_real,
    z_collocation_fit,
    z_search,
    z_search_real,
)

F = Fraction


def test_lambda_max_closed_form():
    for a in (F(0), F(1, 2), F(1), F(2), F(5)):
        got = lambda_max(a, 0, 1)
        want = math.log(float((a + 2) / (a + 1)))
        assert got == pytest.approx(want, abs=1e-12)


def test_etilde_examples():
    assert etilde_eval(0, 0, 1, 0, 1.0) == pytest.approx(0, abs=1e-14)
    assert etilde_eval(3, 1, 4, 4, 0.0) == 1.0
    assert etilde_eval(1, 0, 1, 1, 1.0) == pytest.approx(2 / 3, rel=1e-14)


def test_weight_peak():
    assert weight_peak(1) == pytest.approx(math.log(2), rel=1e-15)
    assert weight_peak(0) == 0.0
    assert weight_peak(-0.3) == 0.0
    assert weight_peak(math.e - 1) == pytest.approx(1.0, rel=1e-15)


def test_z_search_whole_numbers():
    alpha, gamma = z_search(1, 0, whole_candidates(10))
    assert alpha == 0
    assert gamma == pytest.approx(math.log(2), abs=1e-14)


def test_z_search_single_candidate():
    alpha, gamma = z_search(1, 0, (F(10),))
    assert alpha == 10
    assert gamma == pytest.approx(math.log(12 / 11), abs=1e-14)


def test_z_search_permutation_invariance():
    base = list(whole_candidates(12))
    scrambled = base[5:] + base[:5]
    assert z_search(2, F(1, 2), base) == z_search(2, F(1, 2), scrambled)
    assert z_search(2, F(1, 2), base) == z_search(2, F(1, 2), list(reversed(base)))


def test_z_search_infeasible():
    # at omega = 1 and n = 4 no whole candidate below 8 keeps the zero <= 1
    with pytest.raises(FeasibilityError):
        z_search(4, 1, whole_candidates(8))


def test_z_search_real_boundary():
    alpha, gamma = z_search_real(1, 0)
    assert alpha == pytest.approx((2 - math.e) / (math.e - 1), abs=1e-10)
    assert gamma == pytest.approx(1.0, abs=1e-9)


def test_candidate_sets():
    wholes = whole_candidates(5)
    assert wholes == tuple(F(i) for i in range(6))
    rats = rational_candidates(2, 2)
    assert F(1, 2) in rats and F(3, 2) in rats
    assert rats == tuple(sorted(rats))


def test_z_build_scaled_system():
    spec = z_build(1, 0, whole_candidates(10))
    assert spec.scaled
    assert spec.alpha_n == 0
    assert spec.gamma_n == pytest.approx(math.log(2), abs=1e-14)
    assert spec.associated_eval(1.0) == pytest.approx(0, abs=1e-14)


def test_z_build_real_unscaled():
    spec = z_build_real(1, 0)
    assert not spec.scaled
    assert spec.gamma_n == pytest.approx(1.0, abs=1e-9)
    assert abs(spec.associated_eval(1.0)) < 1e-9


def test_z_build_reference_configuration():
    # equal exponents, n = 2, whole-number candidates
    spec = z_build(2, 1, whole_candidates())
    assert spec.gamma_n <= 1
    assert abs(spec.associated_eval(1.0)) < 1e-9
    assert spec.beta_n == spec.alpha_n


def test_z_build_endpoint_grid():
    for omega in (F(0), F(1, 2), F(1)):
        for n in range(1, 6):
            spec = z_build(n, omega, whole_candidates())
            assert abs(spec.associated_eval(1.0)) < 1e-9
            nodes = spec.collocation_nodes()
            assert len(nodes) == n + 1
            assert all(0 < t <= 1 + 1e-12 for t in nodes[1:])


def test_scaling_consistency_identity():
    spec = z_build(3, F(1, 2), whole_candidates())
    sys = ExpPolySystem(spec.alpha_n, spec.beta_n, 3)
    for k in range(1, 4):
        assert spec.member_eval(k, 1.0) == pytest.approx(
            e_eval(sys, k, spec.gamma_n), rel=1e-14)


def test_spec_json_round_trip():
    spec = z_build(2, 1, whole_candidates())
    payload = json.loads(spec.to_json())
    assert payload["n"] == 2
    assert payload["scaled"] is True
    assert len(payload["lambdas"]) == 2
    assert payload["gamma_n"] == pytest.approx(payload["lambdas"][-1])


def test_collocation_constant_and_member():
    spec = z_build(2, 0, whole_candidates())
    r = z_collocation_fit(lambda t: 1.0, spec)
    assert r.coeffs[0] == pytest.approx(1, rel=1e-12)
    assert all(abs(c) < 1e-12 for c in r.coeffs[1:])
    assert r.node_residual < 1e-12
    r2 = z_collocation_fit(lambda t: spec.member_eval(1, t), spec)
    assert r2.coeffs[1] == pytest.approx(1, rel=1e-10)
    assert abs(r2.coeffs[0]) < 1e-10 and abs(r2.coeffs[2]) < 1e-10


def test_collocation_error_decreases():
    e2 = z_collocation_fit(lambda t: math.exp(-t), z_build(2, 0, whole_candidates())).max_grid_error
    e3 = z_collocation_fit(lambda t: math.exp(-t), z_build(3, 0, whole_candidates())).max_grid_error
    assert e3 < e2


def test_gram_matrix_diagnostic_shape():
    spec = z_build(2, 0, whole_candidates())
    g = gram_matrix(spec)
    assert g.shape == (3, 3)
    assert g[0, 0] == pytest.approx(1.0, rel=1e-12)   # constant against itself
