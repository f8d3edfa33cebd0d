import pytest
from hypothesis import given, settings, strategies as st

from oxtoby.core import (FastGrowth, NonToeplitz, OdometerElement, Toeplitz, Window,
                         aperiodic_element, eval_point, factor_digits, point_digits,
                         point_level, point_per_set)
from oxtoby.errors import Ambiguous, DepthExceeded, NoMatch

FG3 = FastGrowth.uniform(3, 4)


def test_toeplitz_per_set_matches_z():
    assert point_per_set(Toeplitz(0), FG3, 1, Window(0, 9)) == {0, 2, 3, 5, 6, 8}


def test_shifted_per_set():
    assert point_per_set(Toeplitz(5), FG3, 1, Window(0, 6)) == {0, 1, 3, 4}


def test_non_toeplitz_per_set_excludes_certified():
    pt = NonToeplitz(OdometerElement((1, 4, 13), {0}), "a")
    assert 0 not in point_per_set(pt, FG3.truncated(3), 2, Window(-3, 3))


def test_point_per_set_depth():
    pt = NonToeplitz(OdometerElement((1, 4), {0}), "a")
    with pytest.raises(DepthExceeded):
        point_per_set(pt, FG3, 3, Window(0, 3))


def test_non_toeplitz_requires_certificate():
    with pytest.raises(ValueError):
        NonToeplitz(OdometerElement((1, 4)), "a")


def test_eval_toeplitz():
    assert eval_point(Toeplitz(5), FG3, -1) == 3


def test_eval_non_toeplitz():
    pt = NonToeplitz(OdometerElement((1, 4, 13, 40), {0}), "a")
    assert eval_point(pt, FG3, 0) == "a"
    assert eval_point(pt, FG3, -1) == 1


def test_eval_non_toeplitz_unknown_and_budget():
    el = OdometerElement((1, 4, 13, 40), {0})
    pt = NonToeplitz(el, "a")
    # 9 + 1 = 10 has level 2 > 1, 9 + 4 = 13 level 4 > 2, 9 + 13 = 22 level 3 <= 3
    assert eval_point(pt, FG3, 9) == 3
    assert eval_point(pt, FG3, 9, depth_budget=2) is None


def test_aperiodic_element_powers_of_three():
    el = aperiodic_element(FG3, 0)
    assert el.digits == (1, 4, 13, 40)
    assert el.is_coherent(FG3) and el.certificate_holds(FG3)
    assert el.certificate == {0}


def test_zero_digits_are_not_aperiodic():
    el = OdometerElement((0, 0, 0, 0), {0})
    assert not el.certificate_holds(FG3)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(3, 6), min_size=1, max_size=5), st.integers(-500, 500))
def test_aperiodic_element_valid(rs, t):
    fg = FastGrowth(tuple(rs))
    el = aperiodic_element(fg, t)
    assert el.is_coherent(fg)
    for i, d in enumerate(el.digits, 1):
        assert fg.level(t + d) is None or fg.level(t + d) > i
    # smallest choice: no smaller digit in the same class keeps t aperiodic
    prev = 0
    for i, d in enumerate(el.digits, 1):
        for e in range(prev, d, fg.p[i - 1]):
            assert fg.in_per(t + e, i)
        prev = d


def test_point_level_of_shift():
    el = OdometerElement.from_shift(FG3, 5)
    assert el.digits == (2, 5, 5, 5)
    for n in range(-40, 40):
        assert point_level(FG3, el, n) == FG3.level(n + 5)


def test_point_digits():
    assert point_digits(Toeplitz(-1), FG3).digits == (2, 8, 26, 80)


def test_incoherent_digits():
    assert not OdometerElement((1, 5)).is_coherent(FG3)
    assert not OdometerElement((3,)).is_coherent(FG3)


def _shift_window(fg, m, window):
    return [fg.level(n + m) for n in window]


def test_factor_digits_shift_five():
    w = Window(-27, 27)
    assert factor_digits(_shift_window(FG3, 5, w), w, FG3, 2) == (2, 5)


def test_factor_digits_identity():
    fg = FastGrowth((3, 4, 3))
    w = Window(-72, 72)
    assert factor_digits(_shift_window(fg, 0, w), w, fg, 3) == (0, 0, 0)


def test_factor_digits_minus_one():
    w = Window(-27, 27)
    assert factor_digits(_shift_window(FG3, -1, w), w, FG3, 3) == (2, 8, 26)


def test_factor_digits_with_labels():
    w = Window(-27, 27)
    labels = "abcd"
    values = [None if lv is None else labels[lv - 1] for lv in _shift_window(FG3, 7, w)]
    assert factor_digits(values, w, FG3, 3, labels) == (1, 7, 7)


def test_factor_digits_no_match():
    w = Window(-27, 27)
    with pytest.raises(NoMatch) as info:
        factor_digits([2] * len(w), w, FG3, 2)
    assert info.value.level == 1


def test_factor_digits_ambiguous():
    w = Window(0, 2)
    with pytest.raises(Ambiguous) as info:
        factor_digits(_shift_window(FG3, 0, w), w, FG3, 2)
    assert info.value.level in (1, 2)
