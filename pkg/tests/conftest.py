from __future__ import annotations

import numpy as np
from hypothesis import assume, settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def complex_vectors(draw, n=2, lo=-10.0, hi=10.0):
    re = draw(st.lists(st.floats(lo, hi), min_size=n, max_size=n))
    im = draw(st.lists(st.floats(lo, hi), min_size=n, max_size=n))
    return np.array(re) + 1j * np.array(im)


@st.composite
def matrices(draw, min_abs_det=1e-2):
    a = draw(complex_vectors(4)).reshape(2, 2)
    det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    scale = max(1.0, float(np.max(np.abs(a)))) ** 2
    assume(abs(det) >= min_abs_det * scale)
    return a


@st.composite
def four_vectors(draw):
    return np.array(draw(st.lists(finite, min_size=4, max_size=4)))


seeds = st.integers(min_value=0, max_value=2**32 - 1)
