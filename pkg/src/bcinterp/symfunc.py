"""Schur-basis symmetric functions: Littlewood-Richardson coefficients, skew
Schur expansions, the 180-degree rotation identity, restriction
multiplicities for the three base fields, and the rectangular decomposition.

Representations never materialize here: every module label is a partition
and every multiplicity is a count of lattice-word tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactalg import rat
from .partitions import (
    clean,
    contains,
    double,
    padded,
    part,
    partitions_of,
    weight,
)


class PropertyViolation(Exception):
    """A decomposition failed a structural guarantee it must satisfy."""


@dataclass(frozen=True)
class FieldCase:
    """Base-field triple: d in {1, 2, 4} with ambient size n and rank r,
    constrained by 1 <= r <= n/2."""

    d: int
    n: int
    r: int

    def __post_init__(self):
        if self.d not in (1, 2, 4):
            raise ValueError("d must be 1, 2, or 4, got %r" % (self.d,))
        if not 1 <= self.r <= self.n / 2:
            raise ValueError(
                "need 1 <= r <= n/2, got r=%r n=%r" % (self.r, self.n))


@dataclass(frozen=True)
class SkewShape:
    outer: tuple
    inner: tuple

    def __post_init__(self):
        object.__setattr__(self, "outer", clean(self.outer))
        object.__setattr__(self, "inner", clean(self.inner))
        if not contains(self.inner, self.outer):
            raise ValueError("inner %r not inside outer %r"
                             % (self.inner, self.outer))

    def size(self) -> int:
        return weight(self.outer) - weight(self.inner)


def lr_coefficient(nu, lam, mu) -> int:
    """Count semistandard fillings of the skew shape nu\\mu with content lam
    whose reading word (right to left along rows, top row first) is a lattice
    permutation."""
    nu, lam, mu = clean(nu), clean(lam), clean(mu)
    if not contains(mu, nu) or weight(lam) + weight(mu) != weight(nu):
        return 0
    if not lam:
        return 1  # empty filling of the empty skew shape
    k = len(lam)
    # cells in reading order: row by row, right to left
    cells = []
    for i in range(1, len(nu) + 1):
        lo, hi = part(mu, i), nu[i - 1]
        for j in range(hi, lo, -1):
            cells.append((i, j))
    fill = {}
    counts = [0] * (k + 1)
    total = 0

    def backtrack(pos: int):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        right = fill.get((i, j + 1))
        above = fill.get((i - 1, j)) if i > 1 and part(mu, i - 1) < j <= part(nu, i - 1) else None
        hi = k if right is None else right
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] >= lam[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # word would stop being a lattice permutation
            counts[v] += 1
            fill[(i, j)] = v
            backtrack(pos + 1)
            del fill[(i, j)]
            counts[v] -= 1

    backtrack(0)
    return total


@dataclass(frozen=True)
class SymFunc:
    """Finite rational combination of Schur-basis labels."""

    coeffs: tuple  # sorted tuple of (partition, Fraction) with no zeros

    @classmethod
    def build(cls, mapping) -> "SymFunc":
        items = tuple(sorted((clean(p), rat(c)) for p, c in mapping.items()
                             if rat(c) != 0))
        return cls(items)

    @classmethod
    def schur(cls, lam) -> "SymFunc":
        return cls.build({clean(lam): 1})

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __add__(self, other):
        out = self.as_dict()
        for p, c in other.coeffs:
            out[p] = out.get(p, Fraction(0)) + c
        return SymFunc.build(out)

    def scale(self, c) -> "SymFunc":
        c = rat(c)
        return SymFunc.build({p: c * x for p, x in self.coeffs})


def schur_product(a: SymFunc, b: SymFunc) -> SymFunc:
    """Bilinear extension of the Littlewood-Richardson rule."""
    out = {}
    for lam, ca in a.coeffs:
        for mu, cb in b.coeffs:
            total_weight = weight(lam) + weight(mu)
            max_len = len(lam) + len(mu)
            max_part = (lam[0] if lam else 0) + (mu[0] if mu else 0)
            for nu in partitions_of(total_weight, max(max_len, 1),
                                    max(max_part, 0) or None):
                c = lr_coefficient(nu, lam, mu)
                if c:
                    out[nu] = out.get(nu, Fraction(0)) + ca * cb * c
    return SymFunc.build(out)


def skew_schur(shape: SkewShape) -> SymFunc:
    """Schur expansion of the skew shape: coefficients c^outer_{inner, nu}."""
    out = {}
    size = shape.size()
    max_len = max(len(shape.outer), 1)
    max_part = shape.outer[0] if shape.outer else None
    for nu in partitions_of(size, max_len, max_part):
        c = lr_coefficient(shape.outer, nu, shape.inner)
        if c:
            out[nu] = c
    return SymFunc.build(out)


def rotate180(shape: SkewShape) -> SkewShape:
    """Rotate the skew diagram by 180 degrees inside its bounding rectangle
    and re-anchor at the origin."""
    rows = len(shape.outer)
    if rows == 0:
        return SkewShape((), ())
    cols = shape.outer[0]
    outer_pad = padded(shape.outer, rows)
    inner_pad = padded(shape.inner, rows)
    new_outer = tuple(cols - inner_pad[rows - i] for i in range(1, rows + 1))
    new_inner = tuple(cols - outer_pad[rows - i] for i in range(1, rows + 1))
    return SkewShape(clean(new_outer), clean(new_inner))


def restriction_multiplicity(case: FieldCase, mu, lam) -> int:
    """Multiplicity of the compact-group type labeled mu inside the module
    labeled lam, in the stable range of the case.

    d = 1 or 4: a doubled-partition sum of LR coefficients (doubling mode
    'stretch' for d = 1, 'duplicate' for d = 4).  d = 2: a single LR
    coefficient after shifting the mixed weight pattern by t copies of the
    determinant character, t large enough to make every label a partition;
    the result is independent of t.
    """
    mu, lam = clean(mu), clean(lam)
    if len(mu) > case.r or len(lam) > case.r:
        raise ValueError("labels must have length <= r=%d" % (case.r,))
    if case.d in (1, 4):
        mode = "stretch" if case.d == 1 else "duplicate"
        diff = weight(lam) - weight(mu)
        if diff < 0:
            return 0
        lam2, mu2 = double(lam, mode), double(mu, mode)
        return sum(lr_coefficient(lam2, double(xi, mode), mu2)
                   for xi in partitions_of(diff, case.r))
    # d = 2
    n, r = case.n, case.r
    t = max(part(mu, 1), part(lam, 1), 1)
    lam_pad = padded(lam, n)
    outer = tuple(x + t for x in lam_pad)
    mu_pad = padded(mu, r)
    pattern = tuple(t + x for x in mu_pad) + (t,) * (n - 2 * r) + \
        tuple(t - x for x in reversed(mu_pad))
    return lr_coefficient(outer, clean(pattern), lam_pad)


def _undouble(lam, mode: str):
    """Inverse of partitions.double; None when the label is not in range."""
    lam = clean(lam)
    if mode == "stretch":
        if any(p % 2 for p in lam):
            return None
        return tuple(p // 2 for p in lam)
    if len(lam) % 2:
        return None
    pairs = [(lam[i], lam[i + 1]) for i in range(0, len(lam), 2)]
    if any(a != b for a, b in pairs):
        return None
    return tuple(a for a, _ in pairs)


def rectangular_decomposition(case: FieldCase, m: int) -> list:
    """Labels in the decomposition of polynomials of the r-by-m rectangle
    degree block; verified multiplicity-free and equal to {mu inside the
    rectangle}, else PropertyViolation."""
    if m < 0:
        raise ValueError("m must be >= 0")
    r = case.r
    rect = (m,) * r if m else ()
    inside = [xi for xi in _subdiagrams(rect)]
    found = []
    if case.d in (1, 4):
        mode = "stretch" if case.d == 1 else "duplicate"
        rect2 = double(rect, mode)
        for xi in inside:
            expansion = skew_schur(SkewShape(rect2, double(xi, mode)))
            if len(expansion.coeffs) != 1 or expansion.coeffs[0][1] != 1:
                raise PropertyViolation(
                    "skew of doubled rectangle by %r is not a single Schur: %r"
                    % (xi, expansion.coeffs))
            label = _undouble(expansion.coeffs[0][0], mode)
            if label is None:
                raise PropertyViolation(
                    "complement label %r is not doubled"
                    % (expansion.coeffs[0][0],))
            found.append(label)
    else:
        n = case.n
        rect_pad = padded(rect, n)
        outer = tuple(x + m for x in rect_pad)
        for eta in partitions_of(m * n, n, 2 * m if m else None):
            c = lr_coefficient(outer, eta, rect_pad)
            if c == 0:
                continue
            if c != 1:
                raise PropertyViolation(
                    "multiplicity %d > 1 at pattern %r" % (c, eta))
            xi = _parse_middle_pattern(eta, m, n, r)
            if xi is None:
                raise PropertyViolation("pattern %r is not of shifted form"
                                        % (eta,))
            found.append(xi)
    expected = sorted(inside)
    if sorted(found) != expected:
        raise PropertyViolation(
            "decomposition %r differs from {mu inside %r}" % (found, rect))
    return sorted(found, key=lambda p: (weight(p), tuple(-x for x in p)))


def _subdiagrams(rect):
    """All partitions contained in the rectangle."""
    if not rect:
        return [()]
    out = []
    for w in range(weight(rect) + 1):
        out.extend(partitions_of(w, len(rect), rect[0]))
    return out


def _parse_middle_pattern(eta, m, n, r):
    """Recognize eta = (m+xi_1..m+xi_r, m^(n-2r), m-xi_r..m-xi_1); return xi
    or None."""
    eta_pad = padded(clean(eta), n)
    head = eta_pad[:r]
    middle = eta_pad[r:n - r]
    tail = eta_pad[n - r:]
    if any(x != m for x in middle):
        return None
    try:
        xi = clean(tuple(x - m for x in head))
    except ValueError:
        return None  # head - m is not weakly decreasing nonnegative
    if any(x > m for x in xi):
        return None
    expected_tail = tuple(m - x for x in reversed(padded(xi, r)))
    if tail != expected_tail:
        return None
    return xi


def containment_necessity(case: FieldCase, lam, nu, m: int) -> bool:
    """The containment-necessity implication: if the reflected labels carry a
    nonzero multiplicity, then lam must be contained in nu."""
    lam, nu = clean(lam), clean(nu)
    if len(lam) > case.r or len(nu) > case.r:
        raise ValueError("labels must have length <= r=%d" % (case.r,))
    if m < max(part(lam, 1), part(nu, 1)):
        raise ValueError("need m >= max(lam_1, nu_1)")
    eta = clean(tuple(m - x for x in reversed(padded(nu, case.r))))
    chi = clean(tuple(m - x for x in reversed(padded(lam, case.r))))
    multiplicity = restriction_multiplicity(case, eta, chi)
    return multiplicity == 0 or contains(lam, nu)
