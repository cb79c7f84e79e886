"""Eigenvalue engine for the quadratic operator family on the three matrix
spaces: the rho vector from the root data, the gamma normalization, the
eigenvalue polynomial d_lambda(x, s), and the checks it must satisfy
(vanishing off the containment cone, the rho pairing, the first-order top
term).

The half-integer parameter is always tau = d/2; the interpolation variable
alpha is replaced by the formal combination s - rho_1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import MultiPoly, rat
from .okounkov import ALPHA, interpolation_combinatorial, xvars
from .partitions import arm_leg, boxes, clean, contains, padded, weight
from .symfunc import FieldCase

SVAR = "s"


@dataclass(frozen=True)
class RhoVector:
    case: FieldCase
    entries: tuple  # Fractions, one per row index 1..r

    def entry(self, i: int) -> Fraction:
        if not 1 <= i <= len(self.entries):
            raise ValueError("index %d out of range" % (i,))
        return self.entries[i - 1]


def rho_vector(case: FieldCase) -> RhoVector:
    """Direct formula: entry_i = dn/4 - 1/2 - d(i-1)/2."""
    d, n = case.d, case.n
    entries = tuple(
        Fraction(d * n, 4) - Fraction(1, 2) - Fraction(d * (i - 1), 2)
        for i in range(1, case.r + 1))
    return RhoVector(case, entries)


def rho_from_root_data(case: FieldCase) -> RhoVector:
    """Independent route: half the half-sum of the positive restricted roots,
    each taken with its multiplicity (e_i with d(n-2r), e_i +- e_j with d,
    2e_i with d-1); the second halving undoes the doubled identification of
    the weight lattice."""
    d, n, r = case.d, case.n, case.r
    roots = []  # (coefficient vector over e_1..e_r, multiplicity)
    for i in range(r):
        single = [0] * r
        single[i] = 1
        roots.append((tuple(single), d * (n - 2 * r)))
        double_root = [0] * r
        double_root[i] = 2
        roots.append((tuple(double_root), d - 1))
        for j in range(i + 1, r):
            plus = [0] * r
            plus[i], plus[j] = 1, 1
            minus = [0] * r
            minus[i], minus[j] = 1, -1
            roots.append((tuple(plus), d))
            roots.append((tuple(minus), d))
    entries = []
    for k in range(r):
        total = sum(mult * vec[k] for vec, mult in roots)
        entries.append(Fraction(total, 4))
    return RhoVector(case, tuple(entries))


def gamma(lam, d: int) -> Fraction:
    """Normalizing constant (-2d)^|lam| / prod((d/2)(arm+1) + leg)."""
    lam = clean(lam)
    if d < 1:
        raise ValueError("d must be a positive integer")
    denom = Fraction(1)
    for b in boxes(lam):
        arm, leg, _, _ = arm_leg(lam, b)
        denom *= Fraction(d, 2) * (arm + 1) + leg
    return Fraction(-2 * d) ** weight(lam) / denom


@dataclass(frozen=True)
class EigenvaluePoly:
    lam: tuple
    case: FieldCase
    poly: MultiPoly  # in x1..xr and s


def eigenvalue_poly(lam, case: FieldCase) -> EigenvaluePoly:
    """d_lambda(x, s): the interpolation polynomial at tau = d/2 with the
    parameter sent to s - rho_1, scaled by gamma."""
    lam = clean(lam)
    if len(lam) > case.r:
        raise ValueError("label %r longer than r=%d" % (lam, case.r))
    tau = Fraction(case.d, 2)
    base = interpolation_combinatorial(lam, case.r, tau).poly
    shift = MultiPoly.variable(SVAR) - rho_vector(case).entry(1)
    shifted = base.subs({ALPHA: shift})
    return EigenvaluePoly(lam, case, gamma(lam, case.d) * shifted)


def eigenvalue(lam, mu, case: FieldCase, s=None):
    """Scalar action on the type labeled mu: substitute x = mu + rho.  With
    s omitted the result is a polynomial in s; otherwise a Fraction."""
    mu = clean(mu)
    if len(mu) > case.r:
        raise ValueError("label %r longer than r=%d" % (mu, case.r))
    ep = eigenvalue_poly(lam, case)
    rho = rho_vector(case)
    mu_pad = padded(mu, case.r)
    point = {name: mu_pad[i] + rho.entry(i + 1)
             for i, name in enumerate(xvars(case.r))}
    result = ep.poly.evaluate(point)
    if s is None:
        return result
    return result.evaluate({SVAR: rat(s)}).constant()


def rho_relation_check(case: FieldCase) -> bool:
    """Formal identity rho_{r-i+1} + (d/2)(r-i) + (s - rho_1) = s for every
    row index i."""
    rho = rho_vector(case)
    tau = Fraction(case.d, 2)
    svar = MultiPoly.variable(SVAR)
    for i in range(1, case.r + 1):
        dual_entry = svar + (tau * (case.r - i) - rho.entry(1))
        if dual_entry + rho.entry(case.r - i + 1) != svar:
            return False
    return True


def vanishing_theorem_check(lam, nu, case: FieldCase) -> bool:
    """For lam not contained in nu: d_lambda at the shifted point of nu must
    vanish identically in s."""
    lam, nu = clean(lam), clean(nu)
    if len(lam) > case.r or len(nu) > case.r:
        raise ValueError("labels must fit in r=%d rows" % (case.r,))
    if contains(lam, nu):
        raise ValueError("not applicable: %r is contained in %r" % (lam, nu))
    ep = eigenvalue_poly(lam, case)
    tau = Fraction(case.d, 2)
    rho1 = rho_vector(case).entry(1)
    svar = MultiPoly.variable(SVAR)
    nu_pad = padded(nu, case.r)
    images = {}
    for i, name in enumerate(xvars(case.r)):
        images[name] = svar + (nu_pad[i] + tau * (case.r - 1 - i) - rho1)
    return ep.poly.subs(images).is_zero()


def first_order_top_check(case: FieldCase) -> bool:
    """The one-box eigenvalue, as a polynomial in mu (after x = mu + rho,
    s = 0), must have top homogeneous part -4(mu_1^2 + ... + mu_r^2)."""
    ep = eigenvalue_poly((1,), case)
    at_zero = ep.poly.evaluate({SVAR: 0})
    rho = rho_vector(case)
    mu_names = tuple("m%d" % i for i in range(1, case.r + 1))
    images = {}
    for i, name in enumerate(xvars(case.r)):
        images[name] = MultiPoly.variable(mu_names[i]) + rho.entry(i + 1)
    in_mu = at_zero.subs(images)
    expected = MultiPoly.zero(mu_names)
    for name in mu_names:
        expected = expected + MultiPoly.variable(name) ** 2
    return in_mu.top_homogeneous(mu_names) == -4 * expected
