"""Even-symmetric interpolation polynomials of type BC.

Two independent constructions of the same polynomial family:

* a tableau sum (`interpolation_combinatorial`) whose terms are weighted
  products of squared-variable linear factors, and
* a linear-system solve (`interpolation_vanishing`) that imposes the defining
  vanishing conditions on the even-symmetric basis directly.

The family is indexed by a partition, a variable count r, and a positive
rational deformation parameter tau; a formal shift variable alpha enters the
evaluation points mu_i + tau*(r-i) + alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import (
    LinearSystem,
    MultiPoly,
    SingularSystem,
    even_symmetrize_basis,
    rat,
    solve_exact,
)
from .partitions import (
    arm_leg,
    boxes,
    clean,
    enumerate_partitions,
    padded,
    rc_set,
    reverse_tableaux,
    weight,
)

ALPHA = "alpha"


class NonGenericParameter(Exception):
    """A denominator vanished; the parameter lies outside the generic range."""


class EmptyTableauSet(Exception):
    """The partition has more rows than there are variables."""


def xvars(r: int) -> tuple:
    return tuple("x%d" % i for i in range(1, r + 1))


@dataclass(frozen=True)
class RhoTauAlpha:
    """The shift vector with entries tau*(r-i) + alpha, alpha formal."""

    r: int
    tau: Fraction
    entries: tuple  # of MultiPoly in alpha

    def entry(self, i: int) -> MultiPoly:
        return self.entries[i - 1]


def rho_tau_alpha(r: int, tau) -> RhoTauAlpha:
    tau = rat(tau)
    alpha = MultiPoly.variable(ALPHA)
    entries = tuple(alpha + tau * (r - i) for i in range(1, r + 1))
    return RhoTauAlpha(r, tau, entries)


def b_factor(mu, b, tau) -> Fraction:
    """The quotient (a + tau*(l+1)) / (a + tau*l + 1) for box b of mu."""
    tau = rat(tau)
    arm, leg, _, _ = arm_leg(mu, b)
    denom = arm + tau * leg + 1
    if denom == 0:
        raise NonGenericParameter(
            "b-factor denominator vanished at box %r of %r with tau=%s"
            % (b, tuple(mu), tau))
    return (arm + tau * (leg + 1)) / denom


def psi_weight(tableau, tau) -> Fraction:
    """Weight of a reverse tableau: the product over entry levels i of
    b-factor ratios over the row-not-column box set of the strip between
    consecutive sub-shapes."""
    tau = rat(tau)
    psi = Fraction(1)
    for i in range(1, tableau.bound + 1):
        outer = tableau.strip_partition(i - 1)
        inner = tableau.strip_partition(i)
        for b in rc_set(outer, inner):
            psi *= b_factor(inner, b, tau) / b_factor(outer, b, tau)
    return psi


def interpolation_combinatorial(lam, r: int, tau) -> "InterpolationPoly":
    """The tableau-sum construction.

    Each reverse tableau T contributes psi_T(tau) times the product over
    boxes (i, j) of  x_{T(i,j)}^2 - ((j-1) + tau*(r - T(i,j) - (i-1)) + alpha)^2.
    """
    lam = clean(lam)
    tau = rat(tau)
    if tau <= 0:
        raise NonGenericParameter("tau must be positive, got %s" % (tau,))
    if len(lam) > r:
        raise EmptyTableauSet(
            "partition %r has more than r=%d rows" % (lam, r))
    variables = xvars(r) + (ALPHA,)
    alpha = MultiPoly.variable(ALPHA, variables)
    xs = [MultiPoly.variable(v, variables) for v in xvars(r)]
    total = MultiPoly.zero(variables)
    for tableau in reverse_tableaux(lam, r):
        term = MultiPoly.const(psi_weight(tableau, tau), variables)
        for (i, j) in boxes(lam):
            t = tableau.entry((i, j))
            shift = alpha + ((j - 1) + tau * (r - t - (i - 1)))
            term = term * (xs[t - 1] ** 2 - shift ** 2)
        total = total + term
    return InterpolationPoly(lam, r, tau, total)


@dataclass(frozen=True)
class InterpolationPoly:
    """A member of the interpolation family: even-symmetric in x, monic at
    x^(2*lam), of x-degree and alpha-degree exactly 2*|lam|."""

    lam: tuple
    r: int
    tau: Fraction
    poly: MultiPoly


def interpolation_vanishing(lam, r: int, tau, alpha) -> MultiPoly:
    """Independent construction by interpolation conditions at one numeric
    alpha: solve for the even-symmetric polynomial that is monic at x^(2*lam)
    and vanishes at every shifted partition point mu + rho(tau, alpha) with
    |mu| <= |lam|, mu != lam."""
    lam = clean(lam)
    tau, alpha = rat(tau), rat(alpha)
    if tau <= 0 or alpha <= 0:
        raise NonGenericParameter(
            "need tau > 0 and alpha > 0, got tau=%s alpha=%s" % (tau, alpha))
    if len(lam) > r:
        raise EmptyTableauSet(
            "partition %r has more than r=%d rows" % (lam, r))
    index = enumerate_partitions(weight(lam), r)
    basis = even_symmetrize_basis(r, weight(lam))
    lam_pos = index.index(lam)

    rows, rhs = [], []
    for pos, mu in enumerate(index):
        if mu == lam:
            row = [Fraction(0)] * len(index)
            row[lam_pos] = Fraction(1)
            rows.append(row)
            rhs.append(Fraction(1))
            continue
        point = {
            "x%d" % i: padded(mu, r)[i - 1] + tau * (r - i) + alpha
            for i in range(1, r + 1)
        }
        rows.append([p.evaluate(point).constant() for p in basis])
        rhs.append(Fraction(0))

    try:
        coeffs = solve_exact(LinearSystem.build(rows, rhs))
    except SingularSystem as exc:
        raise NonGenericParameter(
            "interpolation system singular at tau=%s alpha=%s" % (tau, alpha)
        ) from exc
    total = MultiPoly.zero(xvars(r))
    for c, p in zip(coeffs, basis):
        total = total + c * p
    return total


def check_vanishing(P: InterpolationPoly, mu) -> bool:
    """Whether P vanishes identically (as a polynomial in formal alpha) at
    the shifted point mu + rho(tau, alpha)."""
    mu = clean(mu)
    if len(mu) > P.r:
        raise ValueError("partition %r has more than r=%d rows" % (mu, P.r))
    alpha = MultiPoly.variable(ALPHA)
    images = {
        "x%d" % i: alpha + (padded(mu, P.r)[i - 1] + P.tau * (P.r - i))
        for i in range(1, P.r + 1)
    }
    return P.poly.subs(images).is_zero()
