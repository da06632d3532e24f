from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duocat.linalg import (QQ, DimensionMismatch, FieldMismatch, Mat, NotIdempotent,
                           NotInvertible, PrimeField, kernel, mat_mul, rank_factorization,
                           solve, split_idempotent, try_invert)
from oracles import matmul, rank

GF5 = PrimeField(5)


def M(rows, field=QQ):
    return Mat.from_rows(rows, field)


# fields

def test_rationals_reduce_and_format():
    assert QQ.coerce(Fraction(6, 4)) == Fraction(3, 2)
    assert QQ.coerce(Fraction(4, 2)) == 2 and type(QQ.coerce(Fraction(4, 2))) is int
    assert QQ.format(Fraction(-3, 6)) == "-1/2"
    assert QQ.parse(" 10/4 ") == Fraction(5, 2)
    assert QQ.format(QQ.parse("7")) == "7"


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5", ""])
def test_rational_parse_rejects(bad):
    with pytest.raises(ValueError):
        QQ.parse(bad)


def test_prime_field_residues():
    assert GF5.coerce(-1) == 4
    assert GF5.coerce(Fraction(1, 2)) == 3
    assert GF5.inv(2) == 3
    assert GF5.format(3) == "3 mod 5"
    assert GF5.parse("8 mod 5") == 3
    with pytest.raises(FieldMismatch):
        GF5.parse("1 mod 7")
    with pytest.raises(ValueError):
        PrimeField(6)


# multiplication

def test_mat_mul_examples():
    i2 = Mat.identity(2)
    assert mat_mul(i2, i2) == i2
    a = M([[1, 2], [3, 4]])
    assert mat_mul(Mat.zero(2, 2), a) == Mat.zero(2, 2)
    assert mat_mul(a, M([[0, 1], [1, 0]])) == M([[2, 1], [4, 3]])


def test_mat_mul_errors():
    with pytest.raises(DimensionMismatch):
        Mat.identity(2) @ Mat.identity(3)
    with pytest.raises(FieldMismatch):
        Mat.identity(2) @ Mat.identity(2, GF5)


def test_gf_arithmetic_wraps():
    a = M([[2, 3]], GF5)
    b = M([[4], [1]], GF5)
    assert (a @ b).to_lists() == [[1]]


def test_row_major_round_trip():
    rows = [[1, 0, Fraction(1, 3)], [0, 0, -2]]
    m = M(rows)
    assert m.to_lists() == rows
    assert m.shape == (2, 3)
    assert m.T.to_lists() == [[1, 0], [0, 0], [Fraction(1, 3), -2]]


def test_kron_index_convention():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    k = a.kron(b).to_lists()
    for i in range(2):
        for j in range(2):
            for p in range(2):
                for q in range(2):
                    assert k[2 * i + p][2 * j + q] == a.to_lists()[i][j] * b.to_lists()[p][q]


# factorization, splitting, inversion

def test_rank_factorization_examples():
    c, r = rank_factorization(Mat.identity(2))
    assert c == Mat.identity(2) and r == Mat.identity(2)
    c, r = rank_factorization(Mat.zero(2, 2))
    assert c.shape == (2, 0) and r.shape == (0, 2)
    c, r = rank_factorization(M([[1, 1], [1, 1]]))
    assert c.to_lists() == [[1], [1]] and r.to_lists() == [[1, 1]]


def test_split_examples():
    s = split_idempotent(Mat.identity(3))
    assert s.retract_dim == 3 and s.pi == Mat.identity(3) and s.iota == Mat.identity(3)
    assert split_idempotent(Mat.zero(3, 3)).retract_dim == 0
    s = split_idempotent(M([[1, 1], [0, 0]]))
    assert s.retract_dim == 1
    assert s.iota.to_lists() == [[1], [0]]
    assert s.pi.to_lists() == [[1, 1]]


def test_split_rejects_non_idempotent():
    with pytest.raises(NotIdempotent) as exc:
        split_idempotent(M([[1, 0], [0, 2]]))
    assert exc.value.index == 1
    with pytest.raises(DimensionMismatch):
        split_idempotent(Mat.zero(2, 3))


def test_try_invert_examples():
    assert try_invert(Mat.identity(3)) == Mat.identity(3)
    swap = M([[0, 1], [1, 0]])
    assert try_invert(swap) == swap
    assert try_invert(M([[1, 1], [1, 1]])) == NotInvertible(1, 1)
    assert try_invert(M([[1, 0, 0], [0, 1, 0]])) == NotInvertible(1, 0)


def test_kernel_and_solve():
    m = M([[1, 2, 3], [2, 4, 6]])
    k = kernel(m)
    assert k.cols == 2 and (m @ k).is_zero()
    x = solve(m, M([[1], [2]]))
    assert m @ x == M([[1], [2]])
    assert solve(m, M([[1], [0]])) is None


# properties

small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    return [[draw(small) for _ in range(c)] for _ in range(r)], c


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_factorization_round_trip(data):
    rows, c = data
    m = Mat.from_rows(rows, QQ, ncols=c)
    left, right = rank_factorization(m)
    assert left @ right == m
    assert left.cols == rank(rows) if rows and c else left.cols == 0
    assert left.rank() == left.cols and right.rank() == right.rows


@settings(max_examples=60, deadline=None)
@given(matrices(4), matrices(4))
def test_mat_mul_matches_dense_oracle(x, y):
    (a, ca), (b, cb) = x, y
    if ca != len(b) or not a or not b or not cb:
        return
    assert (M(a) @ M(b)).to_lists() == matmul(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.data())
def test_inverse_is_two_sided(n, data):
    rows = [[data.draw(small) for _ in range(n)] for _ in range(n)]
    m = M(rows)
    inv = try_invert(m)
    if rank(rows) == n:
        assert m @ inv == Mat.identity(n) and inv @ m == Mat.identity(n)
    else:
        assert inv == NotInvertible(n - rank(rows), n - rank(rows))


def random_idempotent(rng, n, k):
    """P·diag(1..1, 0..0)·P⁻¹ with P a random invertible rational matrix."""
    while True:
        p = M([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])
        inv = try_invert(p)
        if not isinstance(inv, NotInvertible):
            break
    d = Mat.from_entries(n, n, {(i, i): 1 for i in range(k)})
    return p @ d @ inv


def test_hundred_random_idempotents_split():
    import random
    rng = random.Random(20240611)
    for _ in range(100):
        n = rng.randint(1, 8)
        k = rng.randint(0, n)
        e = random_idempotent(rng, n, k)
        s = split_idempotent(e)
        assert s.iota @ s.pi == e
        assert s.pi @ s.iota == Mat.identity(s.retract_dim)
        assert s.retract_dim == k
        assert s.retract_dim + split_idempotent(Mat.identity(n) - e).retract_dim == n
