import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from taudesign.group import (
    IDENTITY,
    X0,
    FiniteMatrixGroup,
    GroupElement,
    GroupNotFiniteError,
    ProjectivePoint,
    act_on_point,
    coset_representatives,
    dump_group,
    generate_closure,
    icosahedral_generators,
    load_group,
    orbit,
    random_su2,
    stabilizer,
    trivial_group,
)
from taudesign.linalg import PreconditionError

U = icosahedral_generators()[2]
MINUS_I = GroupElement(-np.eye(2))


@pytest.mark.parametrize("eps_index", [1, 2, 3, 4])
def test_generators(eps_index):
    S, T, U_ = icosahedral_generators(eps_index)
    for g in (S, T, U_):
        assert g.is_special_unitary()
    assert_allclose((U_ @ U_).matrix, -np.eye(2))
    assert_allclose(np.linalg.det(S.matrix), 1)


def test_generators_match_printed_formula():
    eps = np.exp(2j * np.pi / 5)
    S, T, _ = icosahedral_generators(1)
    assert_allclose(S.matrix, np.diag([eps**3, eps**2]))
    assert_allclose(T.matrix[0, 1], 1 / (eps**2 - eps**3))
    assert_allclose(T.matrix[1, 1], -(eps + eps**4) / (eps**2 - eps**3))


def test_bad_eps_index():
    for e in (0, 5, -1):
        with pytest.raises(ValueError):
            icosahedral_generators(e)


def test_icosahedral_order(icosa_any):
    assert icosa_any.order == 120
    assert all(g.is_special_unitary() for g in icosa_any)
    assert MINUS_I in icosa_any
    assert IDENTITY in icosa_any


def test_icosahedral_closed(icosa):
    assert icosa.is_closed()


def test_no_near_duplicates(icosa):
    M = icosa.matrices().reshape(120, -1)
    d = np.max(np.abs(M[:, None] - M[None]), axis=2) + np.eye(120) * 10
    assert d.min() > 0.1


def test_small_closures():
    assert generate_closure([U]).order == 4
    assert generate_closure([IDENTITY]).order == 1
    assert generate_closure([MINUS_I]).order == 2


def test_canonical_order_is_deterministic(icosa):
    again = [g.matrix for g in generate_closure(list(reversed(icosahedral_generators(1))))]
    assert all(np.array_equal(np.round(a, 12), np.round(g.matrix, 12)) for a, g in zip(again, icosa))


def test_closure_rejects_non_unitary():
    with pytest.raises(ValueError):
        generate_closure([GroupElement(2 * np.eye(2))])


def test_closure_cap():
    # rotation by an irrational angle generates an infinite group
    a = np.exp(1j * np.sqrt(2))
    with pytest.raises(GroupNotFiniteError):
        generate_closure([GroupElement(np.diag([a, a.conjugate()]))], cap=500)


def test_projective_point_canonical_phase(rng):
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    p = ProjectivePoint(v)
    assert np.linalg.norm(p.unit_rep) == pytest.approx(1)
    assert p.unit_rep[0].imag == pytest.approx(0) and p.unit_rep[0].real > 0
    q = ProjectivePoint(np.array([0, 1j]))
    assert_allclose(q.unit_rep, [0, 1])
    assert ProjectivePoint(np.exp(0.7j) * v).same_line(p)


def test_act_on_point(rng):
    p = ProjectivePoint(rng.normal(size=2) + 1j * rng.normal(size=2))
    assert act_on_point(IDENTITY, p).same_line(p)
    assert_allclose(act_on_point(U, X0).unit_rep, [0, 1])
    g = random_su2(rng)
    assert act_on_point(g.inverse(), act_on_point(g, p)).same_line(p)


def test_stabilizers(icosa):
    assert stabilizer(icosa, X0).order == 10
    assert stabilizer(trivial_group(), X0).order == 1
    stab_u = stabilizer(generate_closure([U]), X0)
    assert stab_u.order == 2
    assert MINUS_I in stab_u


def test_stabilizer_of_x0_is_diagonal(stab_x0):
    for k in stab_x0:
        assert abs(k.matrix[0, 1]) < 1e-12 and abs(k.matrix[1, 0]) < 1e-12


def test_coset_representatives(icosa, stab_x0, reps_x0):
    assert len(reps_x0) == 12
    assert reps_x0[0].close_to(IDENTITY, 1e-12)
    assert len(coset_representatives(icosa, icosa)) == 1
    gu = generate_closure([U])
    assert len(coset_representatives(gu, stabilizer(gu, X0))) == 2


def test_cosets_partition_group(icosa, stab_x0, reps_x0):
    hit = [icosa.index_of(g @ h) for g in reps_x0 for h in stab_x0]
    assert sorted(hit) == list(range(120))


def test_coset_rejects_non_subgroup(icosa):
    sub = FiniteMatrixGroup([IDENTITY, icosahedral_generators()[0]])
    with pytest.raises(PreconditionError):
        coset_representatives(icosa, sub)
    outside = FiniteMatrixGroup([IDENTITY, GroupElement(np.diag([1j, -1j]))])
    with pytest.raises(PreconditionError):
        coset_representatives(generate_closure([icosahedral_generators()[0]]), outside)


def test_orbit_of_x0(icosa, reps_x0):
    pts = orbit(icosa, X0)
    assert len(pts) == 12
    images = [act_on_point(g, X0) for g in reps_x0]
    for i, p in enumerate(images):
        for q in images[i + 1 :]:
            assert not p.same_line(q)


def test_dump_roundtrip(icosa):
    rows = json.loads(json.dumps(dump_group(icosa)))
    assert len(rows) == 120 and all(len(r) == 8 for r in rows)
    back = load_group(rows)
    assert all(g in icosa for g in back)
