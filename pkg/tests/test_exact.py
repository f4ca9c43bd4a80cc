"""Exact matrix arithmetic: inversion, span solving, positive definiteness."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from unival import (
    ExactMatrix,
    NotInSpan,
    NotSymmetric,
    SingularMatrix,
    is_positive_definite,
    solve_in_span,
)
from unival.exact import rational_from_str, rational_to_str

F = Fraction

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def square_matrices(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    return ExactMatrix([[draw(small_fractions) for _ in range(n)] for _ in range(n)])


@st.composite
def symmetric_matrices(draw, max_size=8):
    n = draw(st.integers(1, max_size))
    upper = {}
    for i in range(n):
        for j in range(i, n):
            upper[(i, j)] = draw(small_fractions)
    return ExactMatrix(
        [[upper[(min(i, j), max(i, j))] for j in range(n)] for i in range(n)]
    )


def _ldlt_positive_definite(m: ExactMatrix) -> bool:
    # Independent oracle: LDL^T without pivoting exists with all-positive D
    # exactly for positive definite matrices.
    n = m.rows
    a = m.to_rows()
    lower = [[F(0)] * n for _ in range(n)]
    diag: list[Fraction] = []
    for j in range(n):
        dj = a[j][j] - sum(lower[j][r] ** 2 * diag[r] for r in range(j))
        if dj <= 0:
            return False
        diag.append(dj)
        lower[j][j] = F(1)
        for i in range(j + 1, n):
            lower[i][j] = (a[i][j] - sum(lower[i][r] * lower[j][r] * diag[r] for r in range(j))) / dj
    return True


def test_rational_serialization_round_trip():
    for text in ("3", "-7/4", "0", "22/7"):
        assert rational_to_str(rational_from_str(text)) == text


def test_identity_inverse():
    m = ExactMatrix.identity(3)
    assert m.inverse() == m


def test_hand_checked_inverse():
    m = ExactMatrix([[1, F(1, 3)], [F(1, 3), F(1, 6)]])
    assert m.det() == F(1, 18)
    assert m.inverse() == ExactMatrix([[3, -6], [-6, 18]])
    assert m @ m.inverse() == ExactMatrix.identity(2)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        ExactMatrix([[1, 2], [2, 4]]).inverse()


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        ExactMatrix([[0.5]])


def test_json_round_trip():
    m = ExactMatrix([[F(1, 3), -2], [0, F(22, 7)]])
    assert ExactMatrix.from_json(m.to_json()) == m


@given(square_matrices())
@settings(max_examples=60)
def test_inverse_round_trips(m):
    assume(m.det() != 0)
    inv = m.inverse()
    assert m @ inv == ExactMatrix.identity(m.rows)
    assert inv.inverse() == m


def test_solve_in_span_trivial():
    assert solve_in_span([(1, 0)], (3, 0)) == (F(3),)
    with pytest.raises(NotInSpan):
        solve_in_span([(1, 0)], (0, 1))


def test_solve_in_span_reproduces_combination():
    generators = [(1, 2, 0), (0, 1, 1)]
    target = (2, 5, 1)
    lam = solve_in_span(generators, target)
    assert lam == (F(2), F(1))


def test_solve_in_span_degree_slice():
    # Degree-4 slice of the n=2 quotient over the monomials [t^4, s*t^2, s^2]:
    # the generators t*f_3 and f_4 plus the spare direction t^4 express s^2,
    # pinning the normal form s^2 = t^4/6.
    t_f3 = (F(1, 3), -1, 0)
    f4 = (F(-1, 4), 1, F(-1, 2))
    t4 = (1, 0, 0)
    lam = solve_in_span([t_f3, f4, t4], (0, 0, 1))
    assert lam == (F(-2), F(-2), F(1, 6))


def test_positive_definite_examples():
    assert is_positive_definite(ExactMatrix.identity(2))
    assert is_positive_definite(ExactMatrix([[3, -6], [-6, 18]]))
    assert not is_positive_definite(ExactMatrix([[0, 1], [1, 0]]))
    with pytest.raises(NotSymmetric):
        is_positive_definite(ExactMatrix([[1, 2], [3, 4]]))
    with pytest.raises(NotSymmetric):
        is_positive_definite(ExactMatrix([[1, 2, 3], [2, 1, 0]]))


@given(symmetric_matrices())
@settings(max_examples=40)
def test_positive_definite_matches_ldlt_oracle(m):
    assert is_positive_definite(m) == _ldlt_positive_definite(m)
