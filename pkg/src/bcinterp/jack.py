"""Monic Jack polynomials over the monomial basis, plus the power-of-sum
expansion identity.

Construction: triangular solve against the classical degree-two eigenoperator

    (p/2) * sum_i y_i^2 d_i^2  +  sum_{i<j} (y_i^2 d_i - y_j^2 d_j)/(y_i - y_j)

whose eigenfunctions are dominance-triangular and monic over m_mu.  The
family parameter tau corresponds to the operator parameter p = 1/tau, which
makes the top-degree link with the interpolation polynomials scalar-free:
both sides are monic at the same leading monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import MultiPoly, monomial_symmetric, rat
from .partitions import (
    arm_leg,
    boxes,
    clean,
    dominates,
    padded,
    partitions_of,
    weight,
)


def yvars(r: int) -> tuple:
    return tuple("y%d" % i for i in range(1, r + 1))


@dataclass(frozen=True)
class JackPoly:
    """Expansion of a monic Jack polynomial over monomial symmetric
    polynomials: coeffs maps partitions to nonzero rationals, with
    coeffs[lam] = 1 and support inside the dominance down-set of lam."""

    lam: tuple
    r: int
    tau: Fraction
    coeffs: dict

    def to_multipoly(self, variables=None) -> MultiPoly:
        variables = yvars(self.r) if variables is None else tuple(variables)
        total = MultiPoly.zero(variables)
        for mu, c in self.coeffs.items():
            total = total + c * monomial_symmetric(mu, variables)
        return total


def divide_by_difference(p: MultiPoly, vi: str, vj: str) -> MultiPoly:
    """Exact division of p by (vi - vj), via synthetic division in vi.

    Writing p = sum_k c_k * vi^k with c_k free of vi, the quotient satisfies
    b_{k-1} = c_k + vj * b_k downward from the top degree; the remainder
    c_0 + vj * b_0 must vanish, which is asserted.
    """
    i = p.vars.index(vi)
    by_power = {}
    for exp, coef in p.terms.items():
        k = exp[i]
        rest = list(exp)
        rest[i] = 0
        bucket = by_power.setdefault(k, {})
        bucket[tuple(rest)] = coef
    if not by_power:
        return p
    top = max(by_power)
    coeffs = {k: MultiPoly(p.vars, t) for k, t in by_power.items()}
    zero = MultiPoly.zero(p.vars)
    vj_poly = MultiPoly.variable(vj, p.vars)
    vi_poly = MultiPoly.variable(vi, p.vars)
    quotient = zero
    carry = zero  # b_k while sweeping k downward
    for k in range(top, 0, -1):
        carry = coeffs.get(k, zero) + vj_poly * carry if k != top \
            else coeffs[top]
        quotient = quotient + carry * vi_poly ** (k - 1)
    remainder = coeffs.get(0, zero) + vj_poly * carry
    if not remainder.is_zero():
        raise ValueError("%r is not divisible by (%s - %s)" % (p, vi, vj))
    return quotient


def apply_eigenoperator(p: MultiPoly, r: int, param) -> MultiPoly:
    """Apply the degree-two eigenoperator with parameter param to a symmetric
    polynomial in y_1..y_r."""
    param = rat(param)
    vs = yvars(r)
    p = p.extend(vs) if p.vars != vs else p
    total = MultiPoly.zero(vs)
    ys = [MultiPoly.variable(v, vs) for v in vs]
    for i in range(r):
        total = total + (param / 2) * ys[i] ** 2 * \
            p.derivative(vs[i]).derivative(vs[i])
    for i in range(r):
        for j in range(i + 1, r):
            g = ys[i] ** 2 * p.derivative(vs[i]) - \
                ys[j] ** 2 * p.derivative(vs[j])
            total = total + divide_by_difference(g, vs[i], vs[j])
    return total


def monomial_expand(p: MultiPoly, r: int) -> dict:
    """Expansion of a symmetric polynomial over m_mu: read the coefficient of
    the weakly decreasing representative of each exponent orbit."""
    out = {}
    for exp, coef in p.terms.items():
        if all(a >= b for a, b in zip(exp, exp[1:])):
            out[clean(exp)] = coef
    return out


def eigenvalue_of(mu, r: int, param) -> Fraction:
    param = rat(param)
    mu = padded(clean(mu), r)
    return sum((param / 2) * m * (m - 1) + (r - i) * m
               for i, m in enumerate(mu, start=1))


def jack(lam, r: int, tau) -> JackPoly:
    """The monic, dominance-triangular Jack polynomial indexed by lam in r
    variables with parameter tau > 0."""
    lam = clean(lam)
    tau = rat(tau)
    if tau <= 0:
        raise ValueError("tau must be positive, got %s" % (tau,))
    if len(lam) > r:
        raise ValueError("partition %r has more than r=%d rows" % (lam, r))
    param = 1 / tau
    m = weight(lam)
    downset = [mu for mu in partitions_of(m, r) if dominates(lam, mu)]
    # lex-descending refines dominance-descending on equal weights
    downset.sort(reverse=True)
    assert downset[0] == lam

    column = {}  # nu -> m-expansion of operator applied to m_nu
    for nu in downset:
        applied = apply_eigenoperator(
            monomial_symmetric(nu, yvars(r)), r, param)
        column[nu] = monomial_expand(applied, r)

    e_lam = eigenvalue_of(lam, r, param)
    coeffs = {lam: Fraction(1)}
    for mu in downset[1:]:
        acc = Fraction(0)
        for nu, c in coeffs.items():
            acc += column[nu].get(mu, Fraction(0)) * c
        gap = e_lam - eigenvalue_of(mu, r, param)
        if gap == 0:
            raise ValueError(
                "eigenvalue collision between %r and %r" % (lam, mu))
        c_mu = acc / gap
        if c_mu != 0:
            coeffs[mu] = c_mu
    return JackPoly(lam, r, tau, coeffs)


def stanley_coefficient(lam, d: int) -> Fraction:
    """Coefficient of the lam-indexed Jack polynomial (at tau = d/2) in the
    expansion of (y_1 + ... + y_r)^|lam|: |lam|! over the product of
    (a(box) + 1) + (d/2)*l(box)."""
    lam = clean(lam)
    if d < 1:
        raise ValueError("d must be a positive integer")
    tau = Fraction(d, 2)
    denom = Fraction(1)
    for b in boxes(lam):
        arm, leg, _, _ = arm_leg(lam, b)
        denom *= (arm + 1) + tau * leg
    return Fraction(factorial(weight(lam))) / denom


def stanley_check(m: int, r: int, d: int) -> bool:
    """Exact verification of the power-of-sum expansion over Jack polynomials
    at tau = d/2 in r variables."""
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    vs = yvars(r)
    lhs = monomial_symmetric((1,), vs) ** m if m else MultiPoly.const(1, vs)
    rhs = MultiPoly.zero(vs)
    tau = Fraction(d, 2)
    for lam in partitions_of(m, r):
        rhs = rhs + stanley_coefficient(lam, d) * \
            jack(lam, r, tau).to_multipoly(vs)
    return lhs == rhs
