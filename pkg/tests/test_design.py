import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from taudesign import sections
from taudesign.design import (
    LocalDesignPair,
    act_on_pair,
    check_tau_design,
    conjugate_operator,
    coset_reduced_operator,
    equivariance_check,
    local_operator,
    max_commutator,
    merge_pairs,
    normalize_trace,
    orbit_average,
    orbit_sum,
    verify_tau_design,
)
from taudesign.group import (
    IDENTITY,
    X0,
    ProjectivePoint,
    act_on_point,
    binary_icosahedral_group,
    random_su2,
    trivial_group,
)
from taudesign.linalg import PreconditionError, frobenius_distance, frobenius_norm

PAIR0 = LocalDesignPair.single(X0, 1.0)


@pytest.fixture(scope="module")
def tau(icosa):
    return orbit_average(icosa, PAIR0)


def random_point(rng):
    return ProjectivePoint(rng.normal(size=2) + 1j * rng.normal(size=2))


def test_local_operator_trace():
    assert np.trace(local_operator(PAIR0)) == pytest.approx(2)
    assert np.all(local_operator(LocalDesignPair()) == 0)


def test_local_operator_is_lambda_after_e(rng):
    s = rng.normal(size=30) + 1j * rng.normal(size=30)
    x = random_point(rng)
    op = local_operator(LocalDesignPair.single(x, 0.5j))
    expect = 0.5j * sections.lambda_section(x, sections.evaluate_weight_function(s, x))
    assert_allclose(op @ s, expect, atol=1e-12)


def test_merge_rules(rng):
    a = LocalDesignPair.single(X0, 1.0)
    assert merge_pairs(a, LocalDesignPair()).weights == a.weights
    doubled = a + a
    assert len(doubled) == 1 and doubled.weights[0] == 2
    assert np.trace(local_operator(doubled)) == pytest.approx(4)
    # same line, different representative
    dup = LocalDesignPair.single(ProjectivePoint(np.array([1j, 0])), 1.0)
    assert len(a + dup) == 1


def test_merge_linearity(rng):
    for _ in range(10):
        a = LocalDesignPair(
            tuple(random_point(rng) for _ in range(3)), tuple(rng.normal(size=3))
        )
        b = LocalDesignPair(
            (a.points[0], random_point(rng)), tuple(rng.normal(size=2) + 1j)
        )
        lhs = local_operator(a + b)
        rhs = local_operator(a) + local_operator(b)
        assert frobenius_distance(lhs, rhs) < 1e-8


def test_conjugate_operator_basic(icosa):
    L = local_operator(PAIR0)
    assert_allclose(conjugate_operator(IDENTITY, L), L)
    for g in icosa:
        assert np.trace(conjugate_operator(g, L)) == pytest.approx(2)


def test_conjugation_equals_transport(icosa, rng):
    L = local_operator(PAIR0)
    for g in list(icosa)[::7] + [random_su2(rng)]:
        moved = local_operator(act_on_pair(g, PAIR0))
        assert frobenius_distance(conjugate_operator(g, L), moved) < 1e-8


def test_orbit_average_trivial_group():
    assert_allclose(orbit_average(trivial_group(), PAIR0), local_operator(PAIR0))


def test_orbit_average_preserves_trace(icosa, rng):
    pair = LocalDesignPair((random_point(rng), random_point(rng)), (0.3, 1 - 2j))
    assert np.trace(orbit_average(icosa, pair)) == pytest.approx(np.trace(local_operator(pair)))


def test_theorem(icosa_any):
    tau = orbit_average(icosa_any, PAIR0)
    report = verify_tau_design(tau)
    assert report.verdict
    assert abs(report.trace - 2) < 1e-10
    assert report.idempotence < 1e-8


def test_theorem_random_base_point(icosa, rng):
    # the hypothesis only needs trace 2; any base point works
    pair = normalize_trace(LocalDesignPair.single(random_point(rng), 0.7 + 0.2j), 2.0)
    assert verify_tau_design(orbit_average(icosa, pair)).verdict


def test_unnormalized_trace_scales_identity(icosa):
    tau3 = orbit_average(icosa, LocalDesignPair.single(X0, 3.0))
    dev = verify_tau_design(tau3).deviations
    assert dev["k1_vs_id"] == pytest.approx(2 * np.sqrt(2))
    assert dev["leakage"] < 1e-8


def test_verify_zero_and_unaveraged():
    zero = verify_tau_design(np.zeros((30, 30)))
    assert not zero.verdict and zero.deviations["k1_vs_id"] == pytest.approx(np.sqrt(2))
    assert not verify_tau_design(local_operator(PAIR0)).verdict


def test_equivariance(icosa, tau):
    assert equivariance_check(tau, icosa)
    assert equivariance_check(np.eye(30), icosa)
    assert not equivariance_check(local_operator(PAIR0), icosa)
    assert max_commutator(local_operator(PAIR0), icosa) > 0.1


def test_tau_commutes_with_all_of_su2(tau, rng):
    # the summands are pairwise non-isomorphic, so the equivariant projection is unique
    for _ in range(10):
        r = sections.rep_matrix(random_su2(rng))
        assert frobenius_norm(r @ tau - tau @ r) < 1e-8


def test_stabilizer_lemma(stab_x0):
    L = local_operator(PAIR0)
    for k in stab_x0:
        assert frobenius_distance(conjugate_operator(k, L), L) < 1e-8
        assert act_on_point(k, X0).same_line(X0)


def test_coset_reduction(icosa, stab_x0, reps_x0, tau):
    reduced = coset_reduced_operator(icosa, stab_x0, reps_x0, PAIR0)
    assert frobenius_distance(reduced, tau) < 1e-8
    pts = [act_on_point(g, X0) for g in reps_x0]
    assert all(not p.same_line(q) for i, p in enumerate(pts) for q in pts[i + 1 :])
    assert stab_x0.order * len(reps_x0) == icosa.order


def test_coset_reduction_trivial():
    G = trivial_group()
    out = coset_reduced_operator(G, G, [IDENTITY], PAIR0)
    assert_allclose(out, local_operator(PAIR0))


def test_coset_reduction_precondition(icosa, stab_x0, reps_x0, rng):
    moved = LocalDesignPair.single(random_point(rng), 1.0)
    with pytest.raises(PreconditionError):
        coset_reduced_operator(icosa, stab_x0, reps_x0, moved)
    with pytest.raises(PreconditionError):
        coset_reduced_operator(icosa, stab_x0, reps_x0[:5], PAIR0)


def test_orbit_sum_pair_level(icosa, tau):
    total = orbit_sum(icosa, PAIR0)
    assert len(total) == 12
    assert_allclose(total.weights, [10] * 12)
    assert frobenius_distance(local_operator(total.scaled(1 / 120)), tau) < 1e-8


def test_normalize_trace():
    same = normalize_trace(PAIR0, 2.0)
    assert same.weights[0] == pytest.approx(1)
    three = normalize_trace(LocalDesignPair.single(X0, 3.0), 2.0)
    assert np.trace(local_operator(three)) == pytest.approx(2)
    with pytest.raises(PreconditionError):
        normalize_trace(LocalDesignPair.single(X0, 0.0), 2.0)


def test_check_tau_design_on_section_model(icosa, tau):
    # generic framework, fed with the 12-point design and a basis of H
    orbit_pts = [act_on_point(g, X0) for g in icosa]
    pts = LocalDesignPair(tuple(orbit_pts), tuple([1 / 120] * 120))
    assert len(pts) == 12
    B = sections.adapted_basis(sections.summand_bases())
    k1 = B[:, :2]
    proj = k1 @ np.linalg.solve(B, np.eye(30))[:2]
    weight = dict(zip(range(len(pts)), pts.weights))
    ok, res = check_tau_design(
        tau=lambda s: proj @ s,
        points=range(len(pts)),
        e=lambda i, s: sections.evaluate_weight_function(s, pts.points[i]),
        lam=lambda i, z: weight[i] * sections.lambda_section(pts.points[i], z),
        test_inputs=list(np.eye(30)),
    )
    assert ok, res
    assert frobenius_distance(proj, tau) < 1e-8


def test_design_report_json(tau):
    rep = verify_tau_design(tau)
    out = rep.to_json(group_order=120)
    assert set(out["deviations"]) == {"k1_vs_id", "k2", "k3", "k4", "k5", "leakage"}
    assert out["trace"][0] == pytest.approx(2) and out["verdict"] is True


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_evaluation_transport_identity(seed):
    G = _icosa()
    rng = np.random.default_rng(seed)
    s = rng.normal(size=30) + 1j * rng.normal(size=30)
    g, h = (G[i] for i in rng.integers(0, 120, size=2))
    u = g.matrix @ X0.unit_rep
    lhs = sections.evaluate_at(sections.rep_matrix(h) @ s, h.matrix @ u)
    rhs = sections.evaluate_at(s, u)
    assert abs(lhs - rhs) < 1e-8 * max(1.0, abs(rhs))


_CACHE = {}


def _icosa():
    if "g" not in _CACHE:
        _CACHE["g"] = binary_icosahedral_group(1)
    return _CACHE["g"]
