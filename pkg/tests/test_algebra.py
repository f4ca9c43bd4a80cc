"""Quotient construction: bases, reduction tables, products, restriction."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unival import (
    AlgebraMismatch,
    DegreeOutOfRange,
    SOAlgebra,
    annihilator_basis,
    basis_monomials,
    build_algebra,
    log_component,
    poly_parse,
    series_dimension,
)
from unival.poly import GradedPoly

F = Fraction

monomials = st.tuples(st.integers(0, 3), st.integers(0, 4))
coefficients = st.fractions(min_value=-4, max_value=4, max_denominator=4)
polys = st.dictionaries(monomials, coefficients, max_size=5).map(GradedPoly)


def test_build_rejects_nonpositive_dimension():
    with pytest.raises(DegreeOutOfRange):
        build_algebra(0)


def test_dimension_one_reduction_table():
    alg = build_algebra(1)
    assert [alg.dim(d) for d in range(0, 3)] == [1, 1, 1]
    assert alg.normal_form("s").poly == poly_parse("1/2*t^2")
    assert not alg.normal_form("t^3")
    assert not alg.normal_form("0")


def test_dimension_two_reduction_table():
    alg = build_algebra(2)
    assert alg.basis(4) == ((0, 4),)
    assert alg.normal_form("s*t^2").poly == poly_parse("1/3*t^4")
    assert alg.normal_form("s^2").poly == poly_parse("1/6*t^4")
    assert not alg.normal_form(log_component(3))


def test_dimension_three_reduction_table():
    alg = build_algebra(3)
    assert alg.normal_form("s*t^3").poly == poly_parse("3/10*t^5")
    assert alg.normal_form("s^2*t").poly == poly_parse("1/10*t^5")


def test_basis_rule_examples():
    assert basis_monomials(3, 4) == ((0, 4), (1, 2))
    assert basis_monomials(2, 5) == ()
    assert basis_monomials(4, 2) == ((0, 2), (1, 0))


def test_dimensions_match_generating_series():
    for n in range(1, 13):
        alg = build_algebra(n)
        for d in range(0, 2 * n + 1):
            assert alg.dim(d) == series_dimension(n, d), (n, d)
        assert series_dimension(n, 2 * n + 1) == 0


def test_normal_form_fixes_basis_monomials():
    alg = build_algebra(4)
    element = alg.normal_form("s*t^3")
    assert element.poly == poly_parse("s*t^3")


def test_generators_reduce_to_zero():
    for n in range(1, 7):
        alg = build_algebra(n)
        assert not alg.normal_form(log_component(n + 1))
        assert not alg.normal_form(log_component(n + 2))


def test_multiplication_examples():
    a2 = build_algebra(2)
    assert (a2.normal_form("t^2") * a2.normal_form("t^2")).poly == poly_parse("t^4")
    assert (a2.normal_form("s") * a2.normal_form("s")).poly == poly_parse("1/6*t^4")
    a3 = build_algebra(3)
    assert (a3.normal_form("s*t") * a3.normal_form("t^2")).poly == poly_parse("3/10*t^5")


def test_multiplication_rejects_mixed_algebras():
    with pytest.raises(AlgebraMismatch):
        build_algebra(2).normal_form("t") * build_algebra(3).normal_form("t")


def test_scalar_multiplication_and_addition():
    alg = build_algebra(2)
    t = alg.normal_form("t")
    assert (3 * t).poly == poly_parse("3*t")
    assert (t + t).poly == poly_parse("2*t")
    assert not (t - t)


def test_restriction_examples():
    a3 = build_algebra(3)
    f4 = a3.normal_form(log_component(4))
    f5 = a3.normal_form(log_component(5))
    assert not f4.restrict(2)
    assert not f5.restrict(2)
    a2 = build_algebra(2)
    element = a2.normal_form("s + t^2")
    assert element.restrict(2) == element
    with pytest.raises(DegreeOutOfRange):
        element.restrict(3)


@given(polys, polys, st.integers(2, 5))
@settings(max_examples=40)
def test_restriction_is_multiplicative(p, q, n):
    alg = build_algebra(n)
    a = alg.normal_form(p)
    b = alg.normal_form(q)
    assert (a * b).restrict(n - 1) == a.restrict(n - 1) * b.restrict(n - 1)


@given(polys, polys, polys, st.integers(1, 5))
@settings(max_examples=40)
def test_ring_axioms(p, q, r, n):
    alg = build_algebra(n)
    a, b, c = alg.normal_form(p), alg.normal_form(q), alg.normal_form(r)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert alg.one() * a == a


def test_step_up_examples():
    a1 = build_algebra(1)
    # s*t is not a basis monomial in dimension 2; it re-reduces to t^3/3
    assert a1.normal_form("t").step_up().poly == poly_parse("1/3*t^3")
    a2 = build_algebra(2)
    assert a2.normal_form("t^4").step_up().poly == poly_parse("3/10*t^6")
    assert not a1.normal_form("0").step_up()


def test_annihilator_basis_examples():
    a2 = build_algebra(2)
    basis2 = annihilator_basis(a2, 2)
    assert [str(x) for x in basis2] == ["2*t^2 - 6*s"]
    assert not (a2.normal_form("t^2") * basis2[0])
    a3 = build_algebra(3)
    assert [str(x) for x in annihilator_basis(a3, 3)] == ["3*t^3 - 10*s*t"]


def test_annihilator_basis_counts_and_range():
    for n in range(1, 7):
        alg = build_algebra(n)
        for j in range(0, 2 * n + 1):
            elements = annihilator_basis(alg, j)
            assert len(elements) == alg.dim(j) - 1
        with pytest.raises(DegreeOutOfRange):
            annihilator_basis(alg, 2 * n + 1)
        with pytest.raises(DegreeOutOfRange):
            annihilator_basis(alg, -1)
    assert annihilator_basis(build_algebra(1), 1) == []


def test_so_algebra_multiplication():
    so4 = SOAlgebra(4)
    t2 = so4.normal_form("t^2")
    t3 = so4.normal_form("t^3")
    assert not t2 * t3
    assert (t2 * t2).poly == poly_parse("t^4")
    with pytest.raises(ValueError):
        so4.normal_form("s")


def test_dimension_one_collapses_onto_orthogonal_model():
    a1 = build_algebra(1)
    so2 = SOAlgebra(2)
    for i in range(3):
        for j in range(3):
            mono = GradedPoly.monomial(0, i) * GradedPoly.monomial(0, j)
            assert a1.normal_form(mono).poly == so2.normal_form(mono).poly
