import numpy as np
import pytest

import torhom


def test_parity():
    assert torhom.realizable_triple(0, 2, 0)
    assert not torhom.realizable_triple(0, 1, 0)
    assert torhom.realizable_pair(1, 3)
    assert not torhom.realizable_pair(1, 2)


def test_realize_and_measure():
    assert torhom.degree_triple(torhom.realize_triple(1, 3, 0), 128) == (1, 3, 0)
    assert torhom.degree_pair(torhom.realize_pair(1, -1), 128) == (1, -1)


def test_unrealizable_raises():
    with pytest.raises(torhom.TorhomError, match="mod 2"):
        torhom.realize_triple(0, 1, 0)


def test_weierstrass():
    assert torhom.degree_triple(torhom.weierstrass("p")) == (0, 2, 0)
    assert torhom.degree_pair(torhom.weierstrass("rotated_p_prime")) == (1, 3)


def test_physics():
    assert torhom.degree_triple(torhom.physics_map(1.0, 1), 128) == (-1, 1, 0)
    assert torhom.degree_triple(torhom.physics_map(1.0, 2), 128) == (-1, 2, -1)


def test_samples_round_trip():
    f = torhom.realize_triple(-1, 1, 2)
    s = f.samples(64)
    assert s.shape == (64, 64, 3)
    assert np.allclose(np.linalg.norm(s, axis=2), 1.0)
    assert torhom.degree_triple_from_samples(s) == (-1, 1, 2)
    assert f.kind == "type-i"


def test_jump():
    report = torhom.jump([1, 1, 0], [1, 3, 0], grid=256)
    assert report["predicted_count"] == 2
    assert len(report["detected"]) == 2
    assert report["verdict"] == "match"
    assert torhom.jump_count([0, 2, 0], [1, 1, 0]) == -1
