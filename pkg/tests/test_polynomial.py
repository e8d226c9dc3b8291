"""Polynomial arithmetic used by the eigenvalue machinery."""

from fractions import Fraction

import pytest

from racahlab.gaussian import GaussianRational, gr
from racahlab.matrix import ExactMatrix
from racahlab.polynomial import Poly


def test_construction_trims_leading_zeros():
    assert Poly((1, 2, 0, 0)) == Poly((1, 2))
    assert Poly(()).is_zero
    assert Poly((0,)).is_zero
    assert Poly((1, 2)).degree == 1


def test_from_roots_expands():
    p = Poly.from_roots([Fraction(5, 16), Fraction(-3, 16)])
    # (x - 5/16)(x + 3/16) = x^2 - x/8 - 15/256
    assert p == Poly((Fraction(-15, 256), Fraction(-1, 8), 1))


def test_divmod_exact():
    p = Poly.from_roots([1, 2, 3])
    q, r = divmod(p, Poly((-2, 1)))
    assert r.is_zero
    assert q == Poly.from_roots([1, 3])
    with pytest.raises(ZeroDivisionError):
        divmod(p, Poly())


def test_gcd_and_squarefree():
    double_root = Poly.from_roots([1, 1, 2])
    assert double_root.gcd(double_root.derivative()) == Poly((-1, 1))
    assert not double_root.is_squarefree
    assert Poly.from_roots([1, 2]).is_squarefree


def test_evaluation_scalar_and_matrix():
    p = Poly((Fraction(-15, 256), Fraction(-1, 8), 1))
    assert p(Fraction(5, 16)) == gr(0)
    assert p(0) == gr(Fraction(-15, 256))
    m = ExactMatrix.diagonal([Fraction(5, 16), Fraction(-3, 16)])
    assert p.eval_matrix(m).is_zero()


def test_root_multiplicity():
    p = Poly.from_roots([2, 2, 2, 5])
    assert p.root_multiplicity(2) == 3
    assert p.root_multiplicity(5) == 1
    assert p.root_multiplicity(7) == 0


def test_complex_coefficients():
    i = GaussianRational(0, 1)
    p = Poly.from_roots([i, -i])
    assert p == Poly((1, 0, 1))
