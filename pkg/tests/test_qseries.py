"""Windowed series algebra: truncated convolution, geometric expansions,
truncation coherence."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperquot.epoly import LEFSCHETZ, ONE, ZERO, EPoly
from hyperquot.qseries import (
    InvalidMonomial,
    MSeries,
    OutOfWindow,
    Window,
    WindowMismatch,
    geometric_divide,
    geometric_inverse,
    multiply_sparse,
    one_series,
    series_arith,
    series_from_json,
    series_monomial,
    series_to_json,
    shift_rewindow,
    zero_series,
)

L = LEFSCHETZ


def test_window_validation():
    with pytest.raises(WindowMismatch):
        Window((0, 0), (1,))
    with pytest.raises(WindowMismatch):
        Window((2,), (1,))
    w = Window((-1, 0), (1, 2))
    assert w.contains((0, 1)) and not w.contains((2, 0))
    assert list(w.cells())[0] == (-1, 0)


def test_series_monomial():
    w = Window((0,), (4,))
    assert series_monomial(w, (0,), ONE).coefficient((0,)) == ONE
    lw = Window((-2,), (2,))
    s = series_monomial(lw, (-1,), L)
    assert s.coefficient((-1,)) == L
    assert series_monomial(Window((0,), (2,)), (5,), ONE) == zero_series(Window((0,), (2,)))


def test_mul_examples():
    w = Window((0,), (4,))
    one_plus = series_monomial(w, (0,), ONE) + series_monomial(w, (1,), ONE)
    one_minus = series_monomial(w, (0,), ONE) + series_monomial(w, (1,), EPoly.from_int(-1))
    prod = series_arith(one_plus, one_minus, "mul")
    assert prod.coefficient((0,)) == ONE
    assert prod.coefficient((1,)) == ZERO
    assert prod.coefficient((2,)) == EPoly.from_int(-1)
    a = geometric_inverse(w, ONE, (1,))
    assert a * one_series(w) == a


def test_telescoping():
    w = Window((0,), (6,))
    geo = geometric_inverse(w, ONE, (1,))
    one_minus = series_monomial(w, (0,), ONE) + series_monomial(w, (1,), EPoly.from_int(-1))
    assert geo * one_minus == one_series(w)


def test_geometric_inverse_examples():
    w = Window((0,), (2,))
    s = geometric_inverse(w, L, (1,))
    assert s.coefficient((0,)) == ONE
    assert s.coefficient((1,)) == L
    assert s.coefficient((2,)) == L * L
    w2 = Window((0, 0), (2, 2))
    s2 = geometric_inverse(w2, ONE, (1, 1))
    assert s2.coefficient((1, 1)) == ONE
    assert s2.coefficient((1, 0)) == ZERO
    with pytest.raises(InvalidMonomial):
        geometric_inverse(w, ONE, (0,))
    with pytest.raises(InvalidMonomial):
        geometric_inverse(w2, ONE, (1, -1))


def test_coefficient_out_of_window():
    w = Window((0,), (3,))
    s = geometric_inverse(w, ONE, (1,))
    assert s.coefficient((3,)) == ONE
    with pytest.raises(OutOfWindow):
        s.coefficient((4,))


def test_window_mismatch():
    a = one_series(Window((0,), (3,)))
    b = one_series(Window((0,), (4,)))
    with pytest.raises(WindowMismatch):
        _ = a + b
    with pytest.raises(WindowMismatch):
        _ = a * b


def test_series_arith_unknown_op():
    a = one_series(Window((0,), (2,)))
    with pytest.raises(ValueError):
        series_arith(a, a, "pow")


def test_restrict_coherence_direct_constructors():
    big = Window((0, 0), (3, 3))
    small = Window((0, 0), (2, 1))
    for c, m in [(ONE, (1, 0)), (L, (1, 1)), (ONE + L, (0, 1))]:
        assert geometric_inverse(big, c, m).restrict(small) == geometric_inverse(small, c, m)
    with pytest.raises(WindowMismatch):
        one_series(small).restrict(big)


def test_shift_rewindow():
    w = Window((0,), (3,))
    s = geometric_inverse(w, ONE, (1,))
    target = Window((-2,), (1,))
    shifted = shift_rewindow(s, (-2,), L, target)
    assert shifted.coefficient((-2,)) == L
    assert shifted.coefficient((1,)) == L


def test_json_roundtrip():
    w = Window((-1, 0), (2, 2))
    s = series_monomial(w, (-1, 2), ONE + L) + series_monomial(w, (0, 0), EPoly.from_int(-3))
    data = series_to_json(s)
    assert [t["d"] for t in data["terms"]] == [[-1, 2], [0, 0]]
    assert series_from_json(data) == s


# -- property tests ------------------------------------------------------------

small_epolys = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    st.integers(-4, 4),
    max_size=3,
).map(EPoly)


def series_in(window):
    cells = list(window.cells())
    return st.dictionaries(
        st.sampled_from(cells), small_epolys, max_size=4
    ).map(lambda d: MSeries(window, d))


W1 = Window((0,), (5,))
W2 = Window((0, 0), (3, 2))


@settings(max_examples=40, deadline=None)
@given(series_in(W1), series_in(W1), series_in(W1))
def test_mul_commutative_associative_1d(a, b, c):
    # supports bounded below by the window's lower bound 0
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@settings(max_examples=30, deadline=None)
@given(series_in(W2), series_in(W2))
def test_mul_commutative_2d(a, b):
    assert a * b == b * a


@settings(max_examples=30, deadline=None)
@given(small_epolys, st.sampled_from([(1,), (2,)]))
def test_geometric_inverse_inverts(c, m):
    w = Window((0,), (6,))
    geo = geometric_inverse(w, c, m)
    one_minus = series_monomial(w, (0,) , ONE) + series_monomial(w, m, EPoly.from_int(-1) * c)
    assert geo * one_minus == one_series(w)


@settings(max_examples=30, deadline=None)
@given(series_in(W2), small_epolys, st.sampled_from([(1, 0), (0, 1), (1, 1)]))
def test_geometric_divide_matches_inverse_multiplication(a, c, m):
    assert geometric_divide(a, c, m) == a * geometric_inverse(W2, c, m)


@settings(max_examples=30, deadline=None)
@given(series_in(W2), small_epolys, small_epolys)
def test_multiply_sparse_matches_mul(a, c0, c1):
    sparse = [((0, 0), c0), ((1, 1), c1)]
    explicit = series_monomial(W2, (0, 0), c0) + series_monomial(W2, (1, 1), c1)
    assert multiply_sparse(a, sparse) == a * explicit
