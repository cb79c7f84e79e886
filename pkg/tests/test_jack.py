from __future__ import annotations

from fractions import Fraction

import pytest

from bcinterp.exactalg import MultiPoly, monomial_symmetric, rat
from bcinterp.jack import (
    apply_eigenoperator,
    divide_by_difference,
    eigenvalue_of,
    jack,
    monomial_expand,
    stanley_check,
    stanley_coefficient,
    yvars,
)
from bcinterp.okounkov import interpolation_combinatorial, xvars
from bcinterp.partitions import enumerate_partitions, partitions_of, weight


def test_divide_by_difference_exact():
    vs = ("y1", "y2")
    y1, y2 = (MultiPoly.variable(v, vs) for v in vs)
    p = y1 ** 3 - y2 ** 3
    assert divide_by_difference(p, "y1", "y2") == y1 ** 2 + y1 * y2 + y2 ** 2
    with pytest.raises(ValueError):
        divide_by_difference(y1 ** 2 + y2, "y1", "y2")


def test_eigenoperator_on_degree_two():
    """Hand-checked matrix of the operator on m_(2), m_(1,1) at r = 2."""
    vs = yvars(2)
    param = rat("3/5")
    m2 = monomial_symmetric((2,), vs)
    m11 = monomial_symmetric((1, 1), vs)
    out2 = apply_eigenoperator(m2, 2, param)
    assert monomial_expand(out2, 2) == {(2,): param + 2, (1, 1): Fraction(2)}
    out11 = apply_eigenoperator(m11, 2, param)
    assert monomial_expand(out11, 2) == {(1, 1): Fraction(1)}
    assert eigenvalue_of((2,), 2, param) == param + 2
    assert eigenvalue_of((1, 1), 2, param) == 1


def test_jack_forced_cases():
    j1 = jack((1,), 3, rat("1/2"))
    assert j1.coeffs == {(1,): 1}
    j11 = jack((1, 1), 2, rat("7/3"))
    assert j11.coeffs == {(1, 1): 1}


def test_jack_row_two():
    # the (1,1)-coefficient is 2*tau/(1+tau); at tau = 1 both parameter
    # conventions coincide and the value is 1 (the Schur case)
    for tau in (rat("1/2"), rat(1), rat(2), rat("3/7")):
        j = jack((2,), 2, tau)
        assert j.coeffs == {(2,): 1, (1, 1): 2 * tau / (1 + tau)}, tau


def test_jack_is_eigenfunction():
    for lam, r in [((2, 1), 2), ((3,), 2), ((2, 1), 3), ((2, 2), 3)]:
        for tau in (rat("1/2"), rat(2)):
            j = jack(lam, r, tau)
            p = j.to_multipoly()
            out = apply_eigenoperator(p, r, 1 / tau)
            assert out == eigenvalue_of(lam, r, 1 / tau) * p, (lam, r, tau)


def test_jack_triangular_and_monic():
    from bcinterp.partitions import dominates

    for lam in [(2,), (2, 1), (3, 1), (2, 2)]:
        j = jack(lam, 3, rat("5/4"))
        assert j.coeffs[lam] == 1
        for mu, c in j.coeffs.items():
            assert c != 0
            assert weight(mu) == weight(lam)
            assert dominates(lam, mu)


def test_jack_domain_errors():
    with pytest.raises(ValueError):
        jack((1, 1), 1, 1)
    with pytest.raises(ValueError):
        jack((1,), 1, 0)


def test_stanley_coefficient_examples():
    for d in (1, 2, 4):
        assert stanley_coefficient((1,), d) == 1
        assert stanley_coefficient((2,), d) == 1
    assert stanley_coefficient((1, 1), 2) == 1
    # hand value: two boxes with (a, l) = (0, 1), (0, 0) give
    # 2 / ((1 + d/2) * 1)
    assert stanley_coefficient((1, 1), 1) == Fraction(4, 3)
    assert stanley_coefficient((1, 1), 4) == Fraction(2, 3)
    assert stanley_coefficient((), 2) == 1


def test_stanley_check_examples():
    assert stanley_check(1, 2, 1) is True
    assert stanley_check(2, 2, 2) is True
    assert stanley_check(0, 3, 4) is True


def test_stanley_check_sweep():
    for d in (1, 2, 4):
        for r in (1, 2, 3):
            for m in (0, 1, 2, 3):
                assert stanley_check(m, r, d) is True, (m, r, d)


def test_okounkov_top_term_is_jack():
    """Top x-degree part of the interpolation polynomial equals the Jack
    polynomial in the squared variables, with matching parameter."""
    for r in (1, 2):
        for lam in enumerate_partitions(3, r):
            for tau in (rat("1/2"), rat(1), rat(2)):
                P = interpolation_combinatorial(lam, r, tau)
                top = P.poly.evaluate({"alpha": 0}).top_homogeneous(xvars(r))
                if weight(lam) == 0:
                    assert top == MultiPoly.const(1, xvars(r))
                    continue
                jk = jack(lam, r, tau).to_multipoly(xvars(r))
                squared = jk.subs({
                    "x%d" % i:
                    MultiPoly.variable("x%d" % i, xvars(r)) ** 2
                    for i in range(1, r + 1)
                })
                assert top == squared, (lam, r, tau)
