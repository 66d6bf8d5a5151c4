import random

from sympdec.intmatrix import IntMatrix, smith_normal_form, xgcd


def minor_det(grid):
    # cofactor expansion; independent of the Bareiss implementation
    n = len(grid)
    if n == 0:
        return 1
    if n == 1:
        return grid[0][0]
    total = 0
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in grid[1:]]
        total += (-1) ** j * grid[0][j] * minor_det(sub)
    return total


def check_snf(m: IntMatrix):
    d, u, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert d.is_diagonal()
    diag = d.diagonal()
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    return d


def test_frozen_example_2x2():
    # d1 = gcd of the entries = 2 and d1*d2 = |det| = 8, so the diagonal is (2, 4)
    d = check_snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert d.diagonal() == [2, 4]


def test_identity_and_zero():
    assert check_snf(IntMatrix.identity(4)).diagonal() == [1, 1, 1, 1]
    assert check_snf(IntMatrix.from_rows([[0]])).diagonal() == [0]
    assert check_snf(IntMatrix.zeros(3, 2)).diagonal() == [0, 0]


def test_rectangular_shapes():
    check_snf(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))
    check_snf(IntMatrix.from_rows([[3], [6], [9]]))
    check_snf(IntMatrix.zeros(0, 3))
    check_snf(IntMatrix.zeros(3, 0))


def test_randomized_snf():
    rng = random.Random(2718)
    for _ in range(120):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = IntMatrix(r, c, [rng.randint(-9, 9) for _ in range(r * c)])
        check_snf(m)


def test_determinism():
    m = IntMatrix.from_rows([[6, 4, 2], [2, 8, 4], [10, 2, 0]])
    first = smith_normal_form(m)
    second = smith_normal_form(m)
    assert first[0] == second[0] and first[1] == second[1] and first[2] == second[2]


def test_bareiss_det_against_cofactors():
    rng = random.Random(31337)
    for _ in range(60):
        n = rng.randint(0, 4)
        grid = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert IntMatrix.from_rows(grid).det() == minor_det(grid)


def test_xgcd():
    for a, b in [(9, 16), (16, 9), (-5, 3), (0, 7), (7, 0), (12, 18)]:
        g, x, y = xgcd(a, b)
        assert a * x + b * y == g
        assert g >= 0
        if a or b:
            assert a % g == 0 and b % g == 0
