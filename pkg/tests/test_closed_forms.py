import numpy as np
import pytest

from hookblock import closed_forms as cf


def test_ext_examples():
    assert cf.ext_table(("F", 1), ("S", 3), 5).as_dict() == {2: 1}
    assert cf.ext_table(("F", 0), ("F", 0), 3).as_dict() == {0: 1, 2: 1, 4: 1}
    assert cf.ext_table(("S", 0), ("W", 0), 3).as_dict() == {0: 1, 3: 1, 4: 1}
    for p in (2, 3, 5, 7):
        assert cf.ext_table(("S", p - 1), ("W", p - 1), p).as_dict() == {0: 1}


def test_ext_vanishes_above_top_degree():
    for p in (2, 3, 5, 7, 11):
        for kx in cf.KINDS:
            for ky in cf.KINDS:
                for m in range(p):
                    for n in range(p):
                        assert max(cf.ext_table((kx, m), (ky, n), p), default=0) <= 2 * p - 2


def test_ext_rejects_bad_labels():
    with pytest.raises(ValueError):
        cf.ext_table(("S", 3), ("S", 0), 3)
    with pytest.raises(ValueError):
        cf.ext_table(("X", 0), ("S", 0), 3)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_decomposition_is_bidiagonal(p):
    D = cf.decomposition_matrix(p)
    assert np.array_equal(D, np.eye(p, dtype=int) + np.eye(p, k=1, dtype=int))


def test_decomposition_small_cases():
    assert cf.decomposition_matrix(3).tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert cf.decomposition_matrix(2).tolist() == [[1, 1], [0, 1]]


@pytest.mark.parametrize("p", [2, 3])
def test_decomposition_from_characters(p):
    assert np.array_equal(cf.decomposition_by_characters(p), cf.decomposition_matrix(p))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_kl(p):
    assert cf.kl_check(p)["status"] == "pass"


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_models(p):
    A, B = cf.model_schur_yoneda(p), cf.model_simple_yoneda(p)
    assert A.is_associative() and B.is_associative()
    assert A.is_graded() and B.is_graded()
    assert A.unit_ok() and B.unit_ok()
    for i in range(p):
        assert cf.truncated_poly_iso(i, p)["status"] == "pass"


def test_associativity_check_catches_a_bad_table():
    A = cf.model_schur_yoneda(3)
    x, y = ("a", 1, 0), ("a", 2, 1)
    A.table[(y, x)] = {("a", 1, 1): 1}
    assert not A.is_associative()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_square_zero_extension(p):
    hom, anti, bij = cf.square_zero_iso(p, reflect=True)
    assert hom and bij
    lit = cf.square_zero_iso(p, reflect=False)
    # the literal assignment reverses products
    assert lit[1] and not lit[0]


def test_abar_ideal_squares_to_zero():
    A = cf.model_schur_yoneda(5)
    bars = [x for x in A.labels if x[0] == "abar"]
    assert all(not A.mul(x, y) for x in bars for y in bars)


def test_model_dims():
    A = cf.model_schur_yoneda(3)
    assert A.dim == 9 and A.graded_dims() == {0: 5, 1: 3, 2: 1}
    B = cf.model_simple_yoneda(3)
    assert B.dim == 14


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("family", ["schur", "simple"])
def test_models_match_chain_maps(p, family):
    assert cf.compare_model_oracle(family, p)["status"] == "pass"
