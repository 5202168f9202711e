"""Derivative polynomials of tangent and secant, their classical relatives
(Legendre-type, Narayana-type, Chebyshev), and exact series cross-checks.

The series route never consults the polynomial recurrences: tangent and
secant are rebuilt from factorial sine/cosine series with exact rational
inversion, so the generating-function comparison is a genuinely independent
second path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .grammar import DerivOp, operator_iterates
from .oracles import count_alternating
from .parser import parse_grammar
from .poly import MultiPoly
from .report import Check, Report
from .triangles import binomial, factorial
from .unipoly import Scalar, UniPoly

__all__ = [
    "DOUBLE_ANGLE_RULES",
    "TruncSeries",
    "check_alternating_counts",
    "check_generating_functions",
    "check_scaled_tan_sec",
    "chebyshev_t",
    "chebyshev_u",
    "cosine_series",
    "legendre_like",
    "narayana_like",
    "secant_derivative_poly",
    "secant_series",
    "sine_series",
    "tangent_derivative_poly",
    "tangent_series",
]

# f ~ sec(2x), g ~ 2 tan(2x): D f = f g and D g = 4 f^2.
DOUBLE_ANGLE_RULES = "f -> f*g; g -> 4*f^2"


@lru_cache(maxsize=None)
def tangent_derivative_poly(n: int, var: str = "u") -> UniPoly:
    """P_n with (d/dx)^n tan = P_n(tan): P_0 = u, P_(n+1) = (1+u^2) P_n'."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return UniPoly.variable(var)
    prev = tangent_derivative_poly(n - 1, var)
    return UniPoly(var, (1, 0, 1)) * prev.derivative()


@lru_cache(maxsize=None)
def secant_derivative_poly(n: int, var: str = "u") -> UniPoly:
    """Q_n with (d/dx)^n sec = sec * Q_n(tan): Q_0 = 1, Q_(n+1) = (1+u^2) Q_n' + u Q_n."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return UniPoly.constant(var, 1)
    prev = secant_derivative_poly(n - 1, var)
    return UniPoly(var, (1, 0, 1)) * prev.derivative() + UniPoly.variable(var) * prev


def legendre_like(n: int, var: str = "x") -> UniPoly:
    """Sum of squared binomials against (x+1)^k (x-1)^(n-k).

    Dividing by 2^n gives the degree-n Legendre polynomial.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x = UniPoly.variable(var)
    total = UniPoly(var)
    for k in range(n + 1):
        total = total + binomial(n, k) ** 2 * (x + 1) ** k * (x - 1) ** (n - k)
    return total


def narayana_like(n: int, var: str = "x") -> UniPoly:
    """Narayana-weighted analog of legendre_like; the 1/n factor must divide exactly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x = UniPoly.variable(var)
    total = UniPoly(var)
    for k in range(n):
        total = total + binomial(n, k) * binomial(n, k + 1) * (x + 1) ** k * (x - 1) ** (n - 1 - k)
    out = []
    for c in total.coeffs:
        if c % n:
            raise ArithmeticError(f"coefficient {c} of the weighted sum is not divisible by {n}")
        out.append(c // n)
    return UniPoly(var, out)


@lru_cache(maxsize=None)
def chebyshev_t(n: int, var: str = "x") -> UniPoly:
    """First-kind Chebyshev polynomial via the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return UniPoly.constant(var, 1)
    if n == 1:
        return UniPoly.variable(var)
    x2 = UniPoly(var, (0, 2))
    return x2 * chebyshev_t(n - 1, var) - chebyshev_t(n - 2, var)


@lru_cache(maxsize=None)
def chebyshev_u(n: int, var: str = "x") -> UniPoly:
    """Second-kind Chebyshev polynomial via the three-term recurrence."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return UniPoly.constant(var, 1)
    if n == 1:
        return UniPoly(var, (0, 2))
    x2 = UniPoly(var, (0, 2))
    return x2 * chebyshev_u(n - 1, var) - chebyshev_u(n - 2, var)


class TruncSeries:
    """Power series in t, truncated at a fixed order, with UniPoly coefficients.

    All arithmetic truncates consistently at the carried order; coefficients
    are exact (int or Fraction entries inside each UniPoly).
    """

    __slots__ = ("order", "var", "coeffs")

    def __init__(self, order: int, var: str, coeffs: Sequence = ()):
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        self.order = order
        self.var = var
        given = list(coeffs)
        padded: list[UniPoly] = []
        for i in range(order + 1):
            c = given[i] if i < len(given) else UniPoly(var)
            if isinstance(c, (int, Fraction)):
                c = UniPoly.constant(var, c)
            if not isinstance(c, UniPoly) or c.var != var:
                raise ValueError(f"coefficient {c!r} does not live in the {var!r} ring")
            padded.append(c)
        self.coeffs = tuple(padded)

    @classmethod
    def constant(cls, order: int, var: str, value: Scalar) -> "TruncSeries":
        return cls(order, var, (value,))

    @classmethod
    def coefficient_variable(cls, order: int, var: str) -> "TruncSeries":
        """The series whose t^0 coefficient is the polynomial variable itself."""
        return cls(order, var, (UniPoly.variable(var),))

    def coefficient(self, i: int) -> UniPoly:
        if not 0 <= i <= self.order:
            raise IndexError(f"order {i} outside truncation {self.order}")
        return self.coeffs[i]

    def _coerced(self, other):
        if isinstance(other, (int, Fraction, UniPoly)):
            return TruncSeries(self.order, self.var, (other,))
        if isinstance(other, TruncSeries):
            if other.order != self.order or other.var != self.var:
                raise ValueError("series orders or coefficient rings differ")
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return TruncSeries(self.order, self.var,
                           [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, self.var, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = [UniPoly(self.var) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(self.order - i + 1):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.order, self.var, out)

    __rmul__ = __mul__

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; the t^0 coefficient must be a nonzero constant."""
        c0 = self.coeffs[0]
        if c0.is_zero or c0.degree > 0:
            raise ValueError("series inversion needs a nonzero constant leading coefficient")
        inv0 = Fraction(1) / Fraction(c0.coefficient(0))
        out = [UniPoly.constant(self.var, inv0)]
        for m in range(1, self.order + 1):
            acc = UniPoly(self.var)
            for j in range(1, m + 1):
                acc = acc + self.coeffs[j] * out[m - j]
            out.append(acc * (-inv0))
        return TruncSeries(self.order, self.var, out)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order == other.order and self.var == other.var
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.order, self.var, self.coeffs))

    def __repr__(self):
        body = " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero)
        return f"TruncSeries[{body or '0'}]"


def sine_series(order: int, var: str = "u") -> TruncSeries:
    coeffs: list[Scalar] = []
    for m in range(order + 1):
        if m % 2:
            coeffs.append(Fraction((-1) ** (m // 2), factorial(m)))
        else:
            coeffs.append(0)
    return TruncSeries(order, var, coeffs)


def cosine_series(order: int, var: str = "u") -> TruncSeries:
    coeffs: list[Scalar] = []
    for m in range(order + 1):
        if m % 2 == 0:
            coeffs.append(Fraction((-1) ** (m // 2), factorial(m)))
        else:
            coeffs.append(0)
    return TruncSeries(order, var, coeffs)


def tangent_series(order: int, var: str = "u") -> TruncSeries:
    return sine_series(order, var) * cosine_series(order, var).invert()


def secant_series(order: int, var: str = "u") -> TruncSeries:
    return cosine_series(order, var).invert()


def check_scaled_tan_sec(n_max: int) -> Report:
    """Derivative iterates of the double-angle system against scaled P_n / Q_n.

    D^n(f) reduces to 2^n f Q_n(h) and D^n(g) to 2^(n+1) P_n(h) once g = 2h
    and f^2 = 1 + h^2 are substituted; the square substitution records the
    leftover parity of f, which must be 1 on the f side and 0 on the g side.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    grammar = parse_grammar(DOUBLE_ANGLE_RULES)
    f, g = MultiPoly.variables(grammar.letters)
    d = DerivOp.plain()
    iter_f = operator_iterates(grammar, d, f, n_max)
    iter_g = operator_iterates(grammar, d, g, n_max)
    h = MultiPoly.variable(("h",), "h")
    two_h = 2 * h
    one_plus_h2 = h * h + 1
    report = Report("prop12")
    for n in range(1, n_max + 1):
        cases = (
            ("D^n(f)", iter_f[n], 1, 2 ** n * secant_derivative_poly(n, "h")),
            ("D^n(g)", iter_g[n], 0, 2 ** (n + 1) * tangent_derivative_poly(n, "h")),
        )
        for name, value, parity_want, rhs in cases:
            substituted = value.substitute("g", two_h)
            parity, reduced = substituted.substitute_square_with_parity("f", one_plus_h2)
            if parity != parity_want:
                report.add(Check(name, n, False, f"parity {parity}, expected {parity_want}"))
                continue
            got = UniPoly.from_multipoly(reduced, "h")
            ok = got == rhs
            report.add(Check(name, n, ok, "" if ok else f"got {got}, want {rhs}"))
    return report


def check_generating_functions(n_max: int) -> Report:
    """Coefficients of the closed tangent/secant generating functions, order
    by order, against the recurrence-built polynomials.

    The closed forms are (u + tan t) / (1 - u tan t) and sec t / (1 - u tan t);
    both are assembled by series arithmetic only.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    var = "u"
    tan = tangent_series(n_max, var)
    sec = secant_series(n_max, var)
    u = TruncSeries.coefficient_variable(n_max, var)
    one = TruncSeries.constant(n_max, var, 1)
    denom = (one - u * tan).invert()
    tan_side = (u + tan) * denom
    sec_side = sec * denom
    report = Report("egf")
    for n in range(n_max + 1):
        fact = factorial(n)
        cases = (
            ("tan-side", tan_side, tangent_derivative_poly(n, var)),
            ("sec-side", sec_side, secant_derivative_poly(n, var)),
        )
        for name, series, want in cases:
            got = fact * series.coefficient(n)
            ok = got == want
            report.add(Check(name, n, ok, "" if ok else f"got {got}, want {want}"))
    return report


def check_alternating_counts(n_max_plain: int, n_max_signed: int) -> Report:
    """Alternating-element counts by brute force versus P_n(0) + Q_n(0).

    The signed family must come out as exactly 2^n times the plain one.
    """
    report = Report("alternating")
    for n in range(1, n_max_plain + 1):
        want = tangent_derivative_poly(n)(0) + secant_derivative_poly(n)(0)
        got = count_alternating(n, "A")
        report.add(Check("plain", n, got == want,
                         "" if got == want else f"got {got}, want {want}"))
    for n in range(1, n_max_signed + 1):
        want = 2 ** n * (tangent_derivative_poly(n)(0) + secant_derivative_poly(n)(0))
        got = count_alternating(n, "B")
        report.add(Check("signed", n, got == want,
                         "" if got == want else f"got {got}, want {want}"))
    return report
