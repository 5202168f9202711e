import pytest

from polygram import oracles as orc
from polygram import triangles as tri


def test_descent_distribution_examples():
    assert orc.descent_distribution(4) == (1, 11, 11, 1)
    assert orc.descent_distribution(1) == (1,)
    assert orc.descent_distribution(3) == (1, 4, 1)


def test_descent_distribution_guard():
    with pytest.raises(ValueError, match="1 <= n <= 9"):
        orc.descent_distribution(10)
    with pytest.raises(ValueError):
        orc.descent_distribution(0)


def test_descent_b_distribution_examples():
    assert orc.descent_b_distribution(2) == (1, 6, 1)
    assert orc.descent_b_distribution(1) == (1, 1)
    assert sum(orc.descent_b_distribution(3)) == 48
    with pytest.raises(ValueError, match="1 <= n <= 7"):
        orc.descent_b_distribution(8)


def test_count_alternating_examples():
    assert orc.count_alternating(4, "A") == 5
    assert orc.count_alternating(1, "A") == 1
    assert orc.count_alternating(2, "B") == 4
    assert orc.count_alternating(2, "B") == 2 ** 2 * orc.count_alternating(2, "A")
    with pytest.raises(ValueError):
        orc.count_alternating(10, "A")
    with pytest.raises(ValueError):
        orc.count_alternating(8, "B")
    with pytest.raises(ValueError):
        orc.count_alternating(3, "C")


def test_path_count_examples():
    assert orc.motzkin_with_up_steps(2, 1) == 1
    assert orc.motzkin_with_up_steps(0, 0) == 1
    assert orc.left_factors_with_h(1, 0) == 1
    assert orc.left_factors_with_h(1, 1) == 1
    with pytest.raises(ValueError, match="0 <= n <= 18"):
        orc.motzkin_up_histogram(19)
    with pytest.raises(ValueError):
        orc.left_factor_h_histogram(-1)


def test_descents_certify_eulerian_triangles():
    for n in range(1, 9):
        assert list(orc.descent_distribution(n)) == tri.EULERIAN_A.row(n)
    for n in range(1, 7):
        assert list(orc.descent_b_distribution(n)) == tri.EULERIAN_B.row(n)


def test_motzkin_paths_certify_assoc_gamma_a():
    for n in range(1, 13):
        hist = orc.motzkin_up_histogram(n - 1)
        for k in range(len(hist)):
            assert hist[k] == tri.assoc_gamma_a(n, k)


def test_left_factors_certify_motzkin_triangle():
    for n in range(15):
        hist = orc.left_factor_h_histogram(n)
        assert list(hist) == tri.MOTZKIN_T.row(n)


def test_alternating_doubling():
    for n in range(1, 8):
        assert orc.count_alternating(n, "B") == 2 ** n * orc.count_alternating(n, "A")
