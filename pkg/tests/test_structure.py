import pytest

from oxtoby.core import (FastGrowth, OdometerElement, Window, aligned_intervals, aperiodic_element,
                         classify_piece, content_class, maximal_blocks, piece_level, reverse_window)
from oxtoby.errors import DepthExceeded, Misaligned

FG3 = FastGrowth.uniform(3, 4)
Z = OdometerElement.from_shift(FG3, 0)


def test_block_around_zero_shape():
    blocks = maximal_blocks(FG3, 2, Window(-27, 27))
    b = next(b for b in blocks if b.n0 <= 0 <= b.n1)
    # [0 * 9 - q_1 - 1, 0 * 9 + q_1] with q_1 = 3
    assert (b.n0, b.n1) == (-4, 3)
    assert b.anchored(FG3)
    assert len(b) == 8


def test_level_one_blocks():
    blocks = maximal_blocks(FG3, 1, Window(0, 9))
    assert [(b.n0, b.n1) for b in blocks] == [(2, 3), (5, 6)]


def test_edge_block_dropped():
    # 8 starts [8, 9] and runs past the window, so it is not reported
    blocks = maximal_blocks(FG3, 1, Window(0, 9))
    assert all(b.n1 < 9 for b in blocks)


def test_short_block_content_class_zero():
    b = next(b for b in maximal_blocks(FG3, 1, Window(0, 9)) if b.n0 == 5)
    assert b.content_class == 0
    assert content_class(FG3, 5, 6, 1) == 0


def test_level_two_block_through_five():
    b = next(b for b in maximal_blocks(FG3, 2, Window(-27, 27)) if b.n0 <= 5 <= b.n1)
    # contains 9 = p_2, so it has the anchored shape [9 - 4, 9 + 3]
    assert (b.n0, b.n1) == (5, 12)
    assert b.anchored(FG3)
    assert b.content_class == 1


def test_blocks_bad_level():
    with pytest.raises(DepthExceeded):
        maximal_blocks(FG3, 5, Window(0, 9))


def test_classify_right_half():
    assert classify_piece(FG3, Z, 1, Window(0, 3)).j == 2


def test_classify_three_six():
    assert classify_piece(FG3, Z, 1, Window(3, 6)).j == 3


def test_classify_misaligned():
    with pytest.raises(Misaligned):
        classify_piece(FG3, Z, 1, Window(1, 4))
    with pytest.raises(Misaligned):
        classify_piece(FG3, Z, 1, Window(0, 6))


def test_classify_shifted_point_grid():
    el = OdometerElement.from_shift(FG3, 1)
    # grid is k * 3 - 1
    assert classify_piece(FG3, el, 1, Window(-1, 2)).j == 2
    with pytest.raises(Misaligned):
        classify_piece(FG3, el, 1, Window(0, 3))


def test_classify_non_toeplitz_depth_exceeded():
    el = aperiodic_element(FG3, 0)
    lo = next(a for a in aligned_intervals(FG3, el, 1, Window(-3, 3)) if a <= 0 < a + 3)
    assert piece_level(FG3, el, 1, lo) == "unknown"
    with pytest.raises(DepthExceeded):
        classify_piece(FG3, el, 1, Window(lo, lo + 3))


def test_classify_level_bounds():
    with pytest.raises(DepthExceeded):
        classify_piece(FG3, Z, 5, Window(0, 243))


def test_aligned_intervals_inside_window():
    el = OdometerElement.from_shift(FG3, 4)
    los = list(aligned_intervals(FG3, el, 2, Window(-20, 20)))
    assert los == [-13, -4, 5]
    assert all((lo + 4) % 9 == 0 for lo in los)


def test_reverse_window_definition():
    w = Window(-6, 7)
    vals = [FG3.level(n) for n in w]
    rw, rv = reverse_window(w, vals)
    assert (rw.lo, rw.hi) == (-6, 7)
    assert rv[1 - rw.lo] == FG3.level(-1) == 1


def test_reverse_is_shift_by_minus_one():
    w = Window(-5, 6)
    rw, rv = reverse_window(w, [FG3.level(n) for n in w])
    assert list(rv) == [FG3.level(n - 1) for n in rw]


def test_reverse_of_shift():
    w = Window(-4, 4)
    rw, rv = reverse_window(w, [FG3.level(n + 2) for n in w])
    assert list(rv) == [FG3.level(n - 3) for n in rw]


def test_reverse_window_length_check():
    with pytest.raises(ValueError):
        reverse_window(Window(0, 3), [1, 2])
