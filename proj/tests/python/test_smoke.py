import math

import numpy as np
import pytest

import algflow


def test_flow_tensor_layout():
    t = 0.7
    c = algflow.flow_tensor(t)
    assert c.shape == (2, 2, 2)
    np.testing.assert_allclose(c[:, 0, :], [[math.cos(t), math.sin(t)], [-math.sin(t), math.cos(t)]])
    np.testing.assert_allclose(c[:, 1, :], c[:, 0, :].T)
    np.testing.assert_allclose(
        algflow.to_2x4(c),
        [[math.cos(t), math.cos(t), -math.sin(t), math.sin(t)], [math.sin(t), -math.sin(t), math.cos(t), math.cos(t)]],
    )


def test_type_c_product_adds_times():
    np.testing.assert_allclose(
        algflow.mul_type_c(algflow.flow_tensor(0.3), algflow.flow_tensor(0.5)), algflow.flow_tensor(0.8), atol=1e-15
    )


def test_predicates():
    assert algflow.is_commutative(algflow.flow_tensor(3 * math.pi / 4))
    assert not algflow.is_commutative(algflow.flow_tensor(0.0))
    assert algflow.is_associative(algflow.flow_tensor(0.0))
    assert algflow.associativity_residual(algflow.flow_tensor(math.pi / 3)) > 0.1
    assert algflow.invariant_signature(np.zeros((2, 2, 2))) == {"commutative": True, "associative": True, "rank_2x4": 0}


def test_change_of_basis_example():
    r = math.sqrt(2) / 4
    p = np.array([[r, r], [0.5, -0.5]])
    got = algflow.to_2x4(algflow.change_of_basis(algflow.flow_tensor(math.pi / 4), p))
    np.testing.assert_allclose(got, [[0.5, 0, 0, 1], [0, -0.5, 0.5, 0]], atol=1e-14)
    with pytest.raises(ValueError):
        algflow.change_of_basis(algflow.flow_tensor(0.1), np.ones((2, 2)))


def test_rotation_iso_and_search():
    v = algflow.rotation_iso(math.pi / 6, 7 * math.pi / 6)
    assert v.is_isomorphic
    np.testing.assert_allclose(v.certificate, -np.eye(2), atol=1e-12)
    assert algflow.rotation_iso(math.pi / 6, math.pi / 3).kind == algflow.VerdictKind.NotIsomorphicExact

    a1 = algflow.flow_tensor(0.0)
    found = algflow.iso_search(a1, -a1)
    assert found.is_isomorphic
    assert algflow.iso_residual(a1, -a1, found.certificate) < 1e-9

    cfg = algflow.SearchConfig()
    cfg.restarts = 8
    miss = algflow.iso_search(algflow.flow_tensor(math.pi / 2), a1, cfg)
    assert miss.kind == algflow.VerdictKind.NotFoundWithinBudget
    assert miss.certificate is None


def test_classification():
    assert algflow.classify_time(math.pi).name == "A1"
    label = algflow.classify_time(math.pi / 3)
    assert label.name == "ACosPlus"
    assert label.parameter == pytest.approx(0.5)
    family, params, p, residual = algflow.to_bekbaev(label)
    assert family == 2
    assert params[2] == pytest.approx(-math.sin(math.pi / 3) / (2 * math.cos(math.pi / 3)))
    assert residual <= 1e-10
    assert p.shape == (2, 2)
    with pytest.raises(ValueError):
        algflow.classify_time(-1.0)


def test_kce():
    assert algflow.verify_kce(0.0, 0.4, 1.0) < 1e-12
    with pytest.raises(ValueError):
        algflow.verify_kce(0.0, 0.0, 1.0)


def test_bad_shapes():
    with pytest.raises(ValueError):
        algflow.mul_type_c(np.zeros((2, 2)), np.zeros((2, 2)))
