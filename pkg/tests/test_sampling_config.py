from __future__ import annotations

import numpy as np
import pytest

from bispinor.config import Config
from bispinor.sampling import Sampler
from bispinor.serialize import dumps, parse_complex, parse_reals
from bispinor.spinor_core import SIGMA_3, det2


def test_stream_is_reproducible():
    a, b = Sampler(42), Sampler(42)
    np.testing.assert_array_equal(a.normal(7), b.normal(7))
    np.testing.assert_array_equal(a.uniform(5), b.uniform(5))


def test_stream_frozen_values():
    # raw PCG64 words >> 11, scaled by 2^-53
    raw = np.random.PCG64(42).random_raw(2)
    u = Sampler(42).uniform(2)
    np.testing.assert_array_equal(u, (raw >> np.uint64(11)).astype(float) * 2.0**-53)


def test_normals_are_roughly_standard():
    z = Sampler(1).normal(20000)
    assert abs(z.mean()) < 0.03
    assert abs(z.std() - 1) < 0.03


def test_group_samples():
    rng = Sampler(3)
    u = rng.su2()
    np.testing.assert_allclose(u @ u.conj().T, np.eye(2), atol=1e-14)
    assert det2(u) == pytest.approx(1)
    v = rng.su11()
    np.testing.assert_allclose(v.conj().T @ SIGMA_3 @ v, SIGMA_3, atol=1e-13)
    assert det2(v) == pytest.approx(1)


@pytest.mark.parametrize("kind", ["timelike+", "timelike-", "spacelike", "null"])
def test_momentum_kinds(kind):
    p = Sampler(5).momentum(kind)
    sq = p[0] ** 2 - p[1:] @ p[1:]
    if kind.startswith("timelike"):
        assert sq > 0 and np.sign(p[0]) == (1 if kind.endswith("+") else -1)
    elif kind == "spacelike":
        assert sq < 0
    else:
        assert abs(sq) < 1e-12


def test_config_validation():
    with pytest.raises(ValueError):
        Config(fd_step=0)
    with pytest.raises(ValueError):
        Config(samples=0)
    assert Config().updated(seed=None, samples=3).samples == 3


def test_serialization():
    assert dumps({"z": 1 - 0j, "x": -0.0}) == '{\n  "x": 0.0,\n  "z": {\n    "im": 0.0,\n    "re": 1.0\n  }\n}'
    assert parse_complex({"re": 1, "im": -2}) == 1 - 2j
    assert parse_complex([3, 4]) == 3 + 4j
    np.testing.assert_array_equal(parse_reals("1, 2,3,4", 4), [1, 2, 3, 4])
    with pytest.raises(ValueError):
        parse_reals("1,2", 4)
