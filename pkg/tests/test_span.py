"""Incremental spans and algebra closure by span saturation."""

from fractions import Fraction
from itertools import product

from racahlab.gaussian import GaussianRational, gr
from racahlab.matrix import ExactMatrix
from racahlab.sl2 import build_Ln
from racahlab.span import VectorSpan, algebra_closure


def test_vector_span_rational():
    span = VectorSpan(3)
    assert span.add([gr(1), gr(2), gr(0)])
    assert not span.add([gr(2), gr(4), gr(0)])
    assert span.add([gr(0), gr(0), gr(Fraction(1, 7))])
    assert span.rank == 2
    assert span.contains([gr(3), gr(6), gr(5)])
    assert not span.contains([gr(0), gr(1), gr(0)])


def test_vector_span_gaussian():
    i = GaussianRational(0, 1)
    span = VectorSpan(2)
    assert span.add([gr(1), i])
    # i * (1, i) = (i, -1) is already in the span over the field
    assert not span.add([i, gr(-1)])
    assert span.contains([i, gr(-1)])
    assert span.rank == 1
    assert span.add([gr(1), gr(0)])
    assert span.rank == 2


def test_closure_unit_only():
    result = algebra_closure([ExactMatrix.identity(2)])
    assert result.dim == 1


def test_closure_diagonal():
    result = algebra_closure([ExactMatrix.diagonal([1, 2])])
    assert result.dim == 2


def test_closure_full_matrix_algebra():
    rep = build_Ln(2)
    result = algebra_closure([rep.E, rep.F, rep.H])
    assert result.dim == 9
    assert len(result.basis) == 9


def test_closure_is_multiplicatively_closed():
    rep = build_Ln(2)
    result = algebra_closure([rep.E, rep.F, rep.H])
    for x, y in product(result.basis, repeat=2):
        assert result.contains(x * y)


def test_closure_scaling_invariance():
    rep = build_Ln(1)
    scaled = [rep.E * Fraction(1, 3), rep.F * 5, rep.H]
    assert algebra_closure(scaled).dim == algebra_closure([rep.E, rep.F, rep.H]).dim


def test_closure_with_gaussian_entries():
    i = GaussianRational(0, 1)
    m = ExactMatrix.from_rows([[0, i], [0, 0]])
    result = algebra_closure([m])
    # span of I and the nilpotent part
    assert result.dim == 2
    assert result.contains(ExactMatrix.from_rows([[0, 1], [0, 0]]))
