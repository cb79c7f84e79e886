"""Exact arithmetic substrate: rationals, sparse multivariate polynomials,
and fraction-free linear solving.

Polynomials are sparse maps from exponent vectors to Fractions over an
ordered tuple of variable names.  Binary operations merge variable sets by
name (left operand's order first, unseen right variables appended).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .partitions import enumerate_partitions, padded


class SingularSystem(Exception):
    """The linear system has no unique solution."""


def rat(value) -> Fraction:
    """Coerce an int, Fraction, or 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError("not an exact rational: %r" % (value,))


def rat_str(value) -> str:
    """Serialize a Fraction as 'p/q', or 'p' when the denominator is 1."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


class MultiPoly:
    """Sparse exact-rational polynomial over an ordered variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms):
        self.vars = tuple(variables)
        clean = {}
        nvars = len(self.vars)
        for exp, coef in terms.items():
            coef = rat(coef)
            if coef == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError("exponent %r does not match %d variables"
                                 % (exp, nvars))
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent in %r" % (exp,))
            clean[exp] = clean.get(exp, Fraction(0)) + coef
        self.terms = {e: c for e, c in clean.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables=()):
        return cls(variables, {})

    @classmethod
    def const(cls, value, variables=()):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): rat(value)})

    @classmethod
    def variable(cls, name, variables=None):
        variables = (name,) if variables is None else tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): Fraction(1)})

    # -- alignment over merged variable sets --------------------------------

    def extend(self, variables) -> "MultiPoly":
        """Reindex over a variable tuple containing all current variables."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        terms = {}
        for exp, coef in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = coef
        return MultiPoly(variables, terms)

    def _aligned(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(other, ())
        if self.vars == other.vars:
            return self, other
        merged = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.extend(merged), other.extend(merged)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for exp, coef in b.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + coef
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly(self.vars,
                             {e: c * other for e, c in self.terms.items()})
        a, b = self._aligned(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other, ())
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Fraction:
        """The value of a constant polynomial (zero exponents everywhere)."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1:
            exp, coef = next(iter(self.terms.items()))
            if all(e == 0 for e in exp):
                return coef
        raise ValueError("polynomial is not constant: %r" % (self,))

    def degree(self, variables=None) -> int:
        """Max total degree over the given variables (all by default); the
        zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if variables is None:
            idx = range(len(self.vars))
        else:
            idx = [self.vars.index(v) for v in variables]
        return max(sum(exp[i] for i in idx) for exp in self.terms)

    def coefficient(self, exp_map: dict) -> Fraction:
        """Coefficient of the monomial with the given full exponent map."""
        exp = tuple(exp_map.get(v, 0) for v in self.vars)
        return self.terms.get(exp, Fraction(0))

    # -- substitution --------------------------------------------------------

    def evaluate(self, assignment: dict) -> "MultiPoly":
        """Substitute rational values for some variables; the rest stay formal."""
        assignment = {v: rat(x) for v, x in assignment.items()}
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        subst = [(i, assignment[v]) for i, v in enumerate(self.vars)
                 if v in assignment]
        terms = {}
        for exp, coef in self.terms.items():
            for i, val in subst:
                coef = coef * val ** exp[i]
                if coef == 0:
                    break
            if coef == 0:
                continue
            key = tuple(exp[i] for i in keep)
            terms[key] = terms.get(key, Fraction(0)) + coef
        return MultiPoly(tuple(self.vars[i] for i in keep), terms)

    def subs(self, images: dict) -> "MultiPoly":
        """Substitute polynomials for variables (full composition).  Variables
        absent from the map are kept as themselves."""
        base_vars = tuple(v for v in self.vars if v not in images)
        result = MultiPoly.zero(base_vars)
        cache = {}
        for exp, coef in self.terms.items():
            factor = MultiPoly.const(coef, ())
            for v, e in zip(self.vars, exp):
                if e == 0:
                    continue
                if v in images:
                    key = (v, e)
                    if key not in cache:
                        img = images[v]
                        if not isinstance(img, MultiPoly):
                            img = MultiPoly.const(img, ())
                        cache[key] = img ** e
                    factor = factor * cache[key]
                else:
                    factor = factor * MultiPoly(
                        (v,), {(e,): Fraction(1)})
            result = result + factor
        return result

    def rename(self, mapping: dict) -> "MultiPoly":
        """Rename variables (bijectively on the affected names)."""
        new_vars = tuple(mapping.get(v, v) for v in self.vars)
        if len(set(new_vars)) != len(new_vars):
            raise ValueError("rename collides variable names")
        return MultiPoly(new_vars, dict(self.terms))

    def top_homogeneous(self, grading_vars=None) -> "MultiPoly":
        """Sum of terms of maximal total degree in the grading variables."""
        if not self.terms:
            return self
        if grading_vars is None:
            idx = list(range(len(self.vars)))
        else:
            idx = [self.vars.index(v) for v in grading_vars]
        deg = {exp: sum(exp[i] for i in idx) for exp in self.terms}
        top = max(deg.values())
        return MultiPoly(self.vars, {e: c for e, c in self.terms.items()
                                     if deg[e] == top})

    def derivative(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        terms = {}
        for exp, coef in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            terms[tuple(new)] = coef * exp[i]
        return MultiPoly(self.vars, terms)

    # -- serialization --------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(),
                      key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(exp), "coef": rat_str(coef)}
                      for exp, coef in self.sorted_terms()],
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "MultiPoly":
        return cls(tuple(doc["vars"]),
                   {tuple(t["exp"]): rat(t["coef"]) for t in doc["terms"]})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp, coef in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else "%s^%d" % (v, e)
                for v, e in zip(self.vars, exp) if e)
            if mono:
                bits.append("%s*%s" % (rat_str(coef), mono))
            else:
                bits.append(rat_str(coef))
        return " + ".join(bits)


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Named-dispatch arithmetic: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("op must be add, sub, or mul; got %r" % (op,))


@dataclass(frozen=True)
class LinearSystem:
    """Square-or-not exact linear system: matrix rows and right-hand side."""

    matrix: tuple  # tuple of row tuples of Fractions
    rhs: tuple  # tuple of Fractions

    @classmethod
    def build(cls, rows, rhs):
        rows = tuple(tuple(rat(x) for x in row) for row in rows)
        rhs = tuple(rat(x) for x in rhs)
        if len(rows) != len(rhs):
            raise ValueError("matrix and rhs sizes disagree")
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        return cls(rows, rhs)


def solve_exact(system: LinearSystem):
    """Solve a square nonsingular system exactly.

    Elimination runs fraction-free (Bareiss) on a denominator-cleared integer
    copy, so intermediate entries stay integral; back-substitution returns
    Fractions.  Raises SingularSystem when no unique solution exists.
    """
    n = len(system.matrix)
    if n == 0:
        return []
    if len(system.matrix[0]) != n:
        raise SingularSystem("system is not square")
    # clear denominators row by row: scaling a row and its rhs entry by a
    # positive integer does not change the solution
    aug = []
    for row, b in zip(system.matrix, system.rhs):
        entries = [rat(x) for x in row] + [rat(b)]
        scale = math.lcm(*(x.denominator for x in entries))
        aug.append([int(x * scale) for x in entries])

    prev = 1
    for k in range(n):
        pivot = next((p for p in range(k, n) if aug[p][k] != 0), None)
        if pivot is None:
            raise SingularSystem("zero pivot column %d" % k)
        if pivot != k:
            aug[k], aug[pivot] = aug[pivot], aug[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                aug[i][j] = (aug[i][j] * aug[k][k] - aug[i][k] * aug[k][j]) // prev
            aug[i][k] = 0
        prev = aug[k][k]

    solution = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(aug[i][n])
        for j in range(i + 1, n):
            acc -= aug[i][j] * solution[j]
        solution[i] = acc / aug[i][i]
    return solution


def monomial_symmetric(mu, variables, square=False) -> MultiPoly:
    """The monomial symmetric polynomial m_mu over the given variables; with
    square=True, in the squared variables m_mu(x_1^2, ..., x_r^2)."""
    variables = tuple(variables)
    mu = tuple(mu)
    if len(mu) > len(variables):
        return MultiPoly.zero(variables)
    base = padded(mu, len(variables))
    step = 2 if square else 1
    terms = {}
    for perm in set(permutations(base)):
        terms[tuple(step * e for e in perm)] = Fraction(1)
    return MultiPoly(variables, terms)


def even_symmetrize_basis(r: int, max_weight: int):
    """Basis {m_mu(x_1^2..x_r^2)} of even-symmetric polynomials of degree at
    most 2*max_weight, indexed by partitions of weight <= max_weight and
    length <= r in graded lexicographic order."""
    if r < 1 or max_weight < 0:
        raise ValueError("need r >= 1 and max_weight >= 0")
    variables = tuple("x%d" % i for i in range(1, r + 1))
    return [monomial_symmetric(mu, variables, square=True)
            for mu in enumerate_partitions(max_weight, r)]
