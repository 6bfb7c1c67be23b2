import random
from fractions import Fraction

import pytest

from mapmatroid.linalg import GF2, ExactMatrix

TORUS_REP = ExactMatrix([[0, 1, 1, 0], [-1, 0, 0, 1]])


def test_rank_examples():
    assert ExactMatrix.identity(3).rank() == 3
    assert ExactMatrix.zeros(2, 4).rank() == 0
    assert TORUS_REP.rank() == 2


def test_rref_examples():
    m = ExactMatrix([[2, 4], [1, 2]])
    assert m.rref() == ExactMatrix([[1, 2], [0, 0]])
    ident = ExactMatrix.identity(4)
    assert ident.rref() == ident
    assert TORUS_REP.rref() == ExactMatrix([[1, 0, 0, -1], [0, 1, 1, 0]])


def test_rref_idempotent_and_row_space():
    rng = random.Random(7)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = ExactMatrix([[rng.randrange(-9, 10) for _ in range(cols)]
                         for _ in range(rows)])
        r = m.rref()
        assert r.rref() == r
        assert m.row_space_equal(r)
        assert m.rank() == r.rank() == m.transpose().rank()


def test_rank_fraction_entries():
    m = ExactMatrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 5), 1]])
    assert m.rank() == 2
    assert ExactMatrix([[Fraction(1, 2), 1], [Fraction(1, 4), Fraction(1, 2)]]).rank() == 1


def test_gf2_rank_never_exceeds_rational_rank():
    rng = random.Random(11)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        ints = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        q = ExactMatrix(ints).rank()
        f2 = ExactMatrix([[v % 2 for v in row] for row in ints], GF2).rank()
        assert f2 <= q


def test_columns_independent():
    assert TORUS_REP.columns_independent([])
    assert TORUS_REP.columns_independent([0, 1])
    assert not TORUS_REP.columns_independent([0, 3])
    assert ExactMatrix.identity(3).columns_independent([1])
    with pytest.raises(ValueError, match="out of range"):
        TORUS_REP.columns_independent([5])
    with pytest.raises(ValueError, match="repeated"):
        TORUS_REP.columns_independent([1, 1])


def test_skew_symmetric():
    assert ExactMatrix([[0, 1], [-1, 0]]).is_skew_symmetric()
    assert not ExactMatrix([[1, 0], [0, 0]]).is_skew_symmetric()
    assert not ExactMatrix([[0, 1], [1, 0]]).is_skew_symmetric()
    a = TORUS_REP.column_submatrix([0, 1])
    b = TORUS_REP.column_submatrix([2, 3])
    assert a.matmul(b.transpose()).is_skew_symmetric()
    # over GF(2) the zero diagonal is the whole content of the test
    assert ExactMatrix([[0, 1], [1, 0]], GF2).is_skew_symmetric()
    assert not ExactMatrix([[1, 1], [1, 0]], GF2).is_skew_symmetric()
    with pytest.raises(ValueError, match="square"):
        ExactMatrix.zeros(2, 3).is_skew_symmetric()


def test_row_space_equal():
    m = ExactMatrix([[1, 2, 3], [0, 1, 1]])
    swapped = ExactMatrix([[0, 1, 1], [1, 2, 3]])
    scaled = ExactMatrix([[2, 4, 6], [0, 3, 3]])
    assert m.row_space_equal(swapped)
    assert m.row_space_equal(scaled)
    assert not m.row_space_equal(ExactMatrix([[1, 0, 0], [0, 1, 0]]))
    assert TORUS_REP.row_space_equal(TORUS_REP.rref())
    with pytest.raises(ValueError, match="field mismatch"):
        ExactMatrix([[1]], GF2).row_space_equal(ExactMatrix([[1]]))
    with pytest.raises(ValueError, match="column count"):
        ExactMatrix([[1]]).row_space_equal(ExactMatrix([[1, 0]]))


def test_field_validation():
    with pytest.raises(ValueError, match="floating point"):
        ExactMatrix([[0.5]])
    with pytest.raises(ValueError, match="GF\\(2\\)"):
        ExactMatrix([[Fraction(1, 2)]], GF2)
    with pytest.raises(ValueError, match="unknown field"):
        ExactMatrix([[1]], "gf3")
    with pytest.raises(ValueError, match="ragged"):
        ExactMatrix([[1, 2], [3]])
    assert ExactMatrix([[3]], GF2) == ExactMatrix([[1]], GF2)


def test_matmul_and_transpose():
    a = ExactMatrix([[1, 2], [3, 4]])
    assert a.matmul(ExactMatrix.identity(2)) == a
    assert a.transpose().transpose() == a
    g = ExactMatrix([[1, 1], [0, 1]], GF2)
    assert g.matmul(g) == ExactMatrix([[1, 0], [0, 1]], GF2)
    with pytest.raises(ValueError, match="field mismatch"):
        a.matmul(g)
    with pytest.raises(ValueError, match="shape mismatch"):
        a.matmul(ExactMatrix.zeros(3, 2))


def test_text_round_trip():
    text = TORUS_REP.to_text()
    assert text == "2 4 rationals\n0 1 1 0\n-1 0 0 1\n"
    assert ExactMatrix.from_text(text) == TORUS_REP
    half = ExactMatrix([[Fraction(1, 2), 3]])
    assert half.to_text() == "1 2 rationals\n1/2 3\n"
    assert ExactMatrix.from_text(half.to_text()) == half
    g = ExactMatrix([[1, 0], [1, 1]], GF2)
    assert ExactMatrix.from_text(g.to_text()) == g
