import pytest

from weilrep.cyclotomic import CycNum, psi
from weilrep.heisenberg import (HeisElement, ModelSpace, ModelVector,
                                central_character_ok, commutant_dimension,
                                delta_vector, heis_elements, heis_generators,
                                pi_act, pi_matrix, sp_act_heis)
from weilrep.linalg import (cyc_mat_eq, cyc_mat_mul, cyc_nullspace)
from weilrep.symplectic import (OrientedSubspace, SymplecticSpace,
                                oriented_lagrangians, sp_enumerate)


@pytest.fixture(scope="module")
def v31():
    return SymplecticSpace(3, 1)


@pytest.fixture(scope="module")
def elements31(v31):
    return heis_elements(v31)


def test_group_law_example(v31):
    a = HeisElement(v31, (1, 0), 0)
    b = HeisElement(v31, (0, 1), 0)
    assert (a * b).v == (1, 1) and (a * b).z == 2
    assert a * a.inverse() == HeisElement.identity(v31)


def test_commutator_is_central_pairing(v31):
    for u in ((1, 0), (0, 1), (1, 2), (2, 2)):
        for w in ((1, 0), (0, 1), (2, 1)):
            a, b = HeisElement(v31, u, 0), HeisElement(v31, w, 0)
            comm = a * b * a.inverse() * b.inverse()
            assert comm.v == (0, 0)
            assert comm.z == v31.omega(u, w)


def test_associativity_exhaustive(v31, elements31):
    for a in elements31:
        for b in elements31:
            ab = a * b
            for c in elements31:
                assert (ab * c) == (a * (b * c))


def test_center_is_exactly_the_commuting_part(v31, elements31):
    for a in elements31:
        commutes = all(a * b == b * a for b in elements31)
        assert commutes == a.is_central()


def test_sp_action_is_automorphism(v31, elements31):
    for g in sp_enumerate(v31)[:6]:
        for a in elements31:
            for b in elements31[::4]:
                assert sp_act_heis(g, a * b) == sp_act_heis(g, a) * sp_act_heis(g, b)
        # central elements are fixed
        assert sp_act_heis(g, HeisElement(v31, (0, 0), 2)) == \
            HeisElement(v31, (0, 0), 2)


def test_model_dimension(v31):
    for label in oriented_lagrangians(v31):
        assert ModelSpace(label).dim == 3
    v32 = SymplecticSpace(3, 2)
    for label in oriented_lagrangians(v32)[:10]:
        assert ModelSpace(label).dim == 9


def test_delta_vector_support(v31):
    label = OrientedSubspace.from_rows(v31, [(1, 0)])
    model = ModelSpace(label)
    d = delta_vector(model)
    assert d.evaluate(HeisElement.identity(v31)) == CycNum.from_rational(3, 1)
    assert d.evaluate(HeisElement(v31, (2, 0), 0)) == CycNum.from_rational(3, 1)
    assert d.evaluate(HeisElement(v31, (1, 1), 0)).is_zero()


def test_evaluate_equivariance(v31, elements31):
    label = OrientedSubspace.from_rows(v31, [(1, 1)])
    model = ModelSpace(label)
    f = ModelVector(model, [CycNum.from_rational(3, k + 1) for k in range(3)])
    for h in elements31:
        for z in range(3):
            for lcoef in range(3):
                zl = HeisElement(v31, (lcoef % 3, lcoef % 3), z)
                assert f.evaluate(zl * h) == psi(z, 3) * f.evaluate(
                    HeisElement(v31, zl.v, 0) * h)


def test_pi_action_examples(v31):
    label = OrientedSubspace.from_rows(v31, [(1, 0)])
    model = ModelSpace(label)
    f = ModelVector(model, [CycNum.from_rational(3, k) for k in (2, 5, 7)])
    assert pi_act(model, HeisElement.identity(v31), f) == f
    twisted = pi_act(model, HeisElement(v31, (0, 0), 1), f)
    assert twisted.values == tuple(psi(1, 3) * x for x in f.values)


def test_pi_is_representation_exhaustive(v31, elements31):
    label = OrientedSubspace.from_rows(v31, [(0, 1)])
    model = ModelSpace(label)
    mats = {h.key(): pi_matrix(model, h) for h in elements31}
    for h1 in elements31:
        for h2 in elements31:
            assert cyc_mat_eq(cyc_mat_mul(mats[h1.key()], mats[h2.key()]),
                              mats[(h1 * h2).key()])


def commutant_dimension_dense(model, elements):
    """Independent oracle: assemble the commutant equations as one linear
    system over the cyclotomic field and count the nullspace dimension."""
    d = model.dim
    rows = []
    for h in elements:
        mat = pi_matrix(model, h)
        # entries of A @ pi(h) - pi(h) @ A, flattened over the d*d unknowns
        for i in range(d):
            for j in range(d):
                row = [CycNum.zero(model.space.p)] * (d * d)
                for k in range(d):
                    row[i * d + k] = row[i * d + k] + mat[k][j]
                    row[k * d + j] = row[k * d + j] - mat[i][k]
                rows.append(row)
    return len(cyc_nullspace(rows))


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
def test_commutant_dimension_is_one(p, n):
    space = SymplecticSpace(p, n)
    label = oriented_lagrangians(space)[0]
    model = ModelSpace(label)
    assert commutant_dimension(model) == 1
    assert commutant_dimension(model, heis_elements(space)) == 1


def test_commutant_dense_oracle(v31):
    label = oriented_lagrangians(v31)[2]
    model = ModelSpace(label)
    assert commutant_dimension_dense(model, heis_elements(v31)) == 1
    v51 = SymplecticSpace(5, 1)
    model5 = ModelSpace(oriented_lagrangians(v51)[0])
    assert commutant_dimension_dense(model5, heis_generators(v51)) == 1
    # a reducible comparison point: the double of a model is isotypic with
    # multiplicity two, so its commutant is the full 2x2 matrix algebra
    def embed(mat):
        out = [[CycNum.zero(3)] * 6 for _ in range(6)]
        for i in range(3):
            for j in range(3):
                out[i][j] = mat[i][j]
                out[3 + i][3 + j] = mat[i][j]
        return out

    d = 6
    rows = []
    for h in heis_elements(v31):
        mat = embed(pi_matrix(ModelSpace(label), h))
        for i in range(d):
            for j in range(d):
                row = [CycNum.zero(3)] * (d * d)
                for k in range(d):
                    row[i * d + k] = row[i * d + k] + mat[k][j]
                    row[k * d + j] = row[k * d + j] - mat[i][k]
                rows.append(row)
    assert len(cyc_nullspace(rows)) == 4


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
def test_central_character(p, n):
    space = SymplecticSpace(p, n)
    for label in oriented_lagrangians(space)[:6]:
        assert central_character_ok(ModelSpace(label))


def test_model_rejects_non_lagrangian():
    v32 = SymplecticSpace(3, 2)
    with pytest.raises(ValueError):
        ModelSpace(OrientedSubspace.from_rows(v32, [(1, 0, 0, 0)]))


def test_heis_literals(v31):
    from weilrep.heisenberg import format_heis, parse_heis
    h = parse_heis(v31, "v=1,0|z=2")
    assert h == HeisElement(v31, (1, 0), 2)
    assert format_heis(h) == "v=1,0|z=2"
    with pytest.raises(ValueError):
        parse_heis(v31, "v=1,0,0|z=2")
    with pytest.raises(ValueError):
        parse_heis(v31, "1,0")


def test_model_vector_json(v31):
    label = OrientedSubspace.from_rows(v31, [(1, 0)])
    model = ModelSpace(label)
    data = delta_vector(model).to_json()
    assert data["reps"] == [[0, 0], [0, 1], [0, 2]]
    assert data["values"][0]["coeffs"][0] == ["1", "1"]


def test_pi_act_model_mismatch(v31):
    a = ModelSpace(OrientedSubspace.from_rows(v31, [(1, 0)]))
    b = ModelSpace(OrientedSubspace.from_rows(v31, [(0, 1)]))
    with pytest.raises(ValueError):
        pi_act(a, HeisElement.identity(v31), delta_vector(b))
