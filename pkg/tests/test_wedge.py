import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wedgent import ArgumentError, DimensionError
from wedgent.wedge import MinorTable, alt2, lagrange_check, row_pair_sum, wedge, wedge_norm_sq

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


@st.composite
def vector_pair(draw, min_len=1, max_len=16):
    d = draw(st.integers(min_len, max_len))
    v = draw(st.lists(cplx, min_size=d, max_size=d))
    w = draw(st.lists(cplx, min_size=d, max_size=d))
    return np.array(v, dtype=complex), np.array(w, dtype=complex)


def test_two_component_minor_matches_full_tensor():
    a11, a12, a21, a22 = 0.3 + 0.1j, -0.2j, 0.7, 0.5 - 0.4j
    t = wedge([a11, a12], [a21, a22])
    assert len(t) == 1
    assert t[1, 2] == a11 * a22 - a21 * a12
    full = alt2([a11, a12], [a21, a22])
    np.testing.assert_allclose(full, [0, a11 * a22 - a21 * a12, a12 * a21 - a22 * a11, 0])
    assert wedge_norm_sq(t) == pytest.approx(np.sum(np.abs(full) ** 2), rel=1e-14)


def test_unit_vectors():
    t = wedge([1, 0], [0, 1])
    assert t.as_dict() == {(1, 2): 1}
    assert wedge_norm_sq(t) == 2
    assert lagrange_check([1, 0], [0, 1]) == (2.0, 2.0)


def test_bell_rows():
    s = 2**-0.5
    assert wedge_norm_sq(wedge([s, 0], [0, s])) == pytest.approx(0.5, abs=1e-15)


def test_parallel_vectors():
    v = np.array([1 + 2j, -0.5, 3j])
    lhs, rhs = lagrange_check(v, 3 * v)
    assert lhs == pytest.approx(0, abs=1e-12)
    assert rhs == pytest.approx(0, abs=1e-12)


def test_table_indexing():
    v = np.arange(1, 6) + 0.5j
    w = np.arange(5, 0, -1) - 1j
    t = wedge(v, w)
    assert len(t) == 10
    assert t.pairs()[:4] == [(1, 2), (1, 3), (1, 4), (1, 5)]
    for a in range(1, 6):
        assert t[a, a] == 0
        for b in range(1, 6):
            assert t[a, b] == pytest.approx(v[a - 1] * w[b - 1] - w[a - 1] * v[b - 1])
    with pytest.raises(ArgumentError):
        t[0, 1]


def test_errors():
    with pytest.raises(DimensionError):
        wedge([1, 2], [1, 2, 3])
    with pytest.raises(DimensionError):
        lagrange_check([1], [1, 2])
    with pytest.raises(ArgumentError):
        wedge([], [])


def test_length_one_has_no_minors():
    t = wedge([2.0], [3.0])
    assert len(t) == 0
    assert wedge_norm_sq(t) == 0


def test_row_pair_sum_sums_all_pairs(rng):
    mat = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
    expected = sum(wedge_norm_sq(wedge(mat[a], mat[b])) for a, b in [(0, 1), (0, 2), (1, 2)])
    assert row_pair_sum(mat) == expected
    assert row_pair_sum(mat[:1]) == 0


@settings(max_examples=200, deadline=None)
@given(vector_pair())
def test_antisymmetry_exact(pair):
    v, w = pair
    np.testing.assert_array_equal(wedge(v, w).minors, -wedge(w, v).minors)


@settings(max_examples=200, deadline=None)
@given(vector_pair())
def test_alternating_exact_zero(pair):
    v, _ = pair
    t = wedge(v, v)
    assert np.all(t.minors == 0)
    assert wedge_norm_sq(t) == 0.0


@settings(max_examples=200, deadline=None)
@given(vector_pair(), cplx)
def test_bilinearity(pair, a):
    v, w = pair
    u = w[::-1].copy()
    lhs = wedge(a * v + u, w).minors
    rhs = a * wedge(v, w).minors + wedge(u, w).minors
    # rounding scale: magnitude of the individual products entering each minor
    scale = (abs(a) * np.abs(v).max() + np.abs(u).max()) * np.abs(w).max()
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-12 * scale + 1e-300)


@settings(max_examples=200, deadline=None)
@given(vector_pair(min_len=2))
def test_lagrange_identity(pair):
    v, w = pair
    lhs, rhs = lagrange_check(v, w)
    scale = 2 * np.vdot(v, v).real * np.vdot(w, w).real
    assert abs(lhs - rhs) <= 1e-12 * scale + 1e-300


@settings(max_examples=100, deadline=None)
@given(vector_pair(), cplx)
def test_linear_dependence(pair, c):
    v, _ = pair
    t = wedge(v, c * v)
    nv = np.vdot(v, v).real
    assert wedge_norm_sq(t) <= 1e-12 * nv * nv * abs(c) ** 2 + 1e-300


def test_minor_table_is_frozen():
    t = wedge([1, 2], [3, 4])
    assert isinstance(t, MinorTable)
    with pytest.raises(ValueError):
        t.minors[0] = 0
