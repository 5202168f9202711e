"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficients are ints wherever possible; Fractions appear only in series
work.  A Fraction that reduces to an integer is normalized back to int, so
equality never depends on how a value was produced.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .poly import AlphabetMismatch, MultiPoly, check_letters

__all__ = ["Scalar", "UniPoly"]

Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class UniPoly:
    """Polynomial in a single named letter, stored as an ascending coefficient tuple."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Iterable[Scalar] = ()):
        letters = check_letters([var] if isinstance(var, str) else var)
        if len(letters) != 1:
            raise ValueError(f"UniPoly takes exactly one letter, got {letters}")
        self.var = letters[0]
        out: list[Scalar] = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise TypeError(f"coefficient {c!r} must be int or Fraction")
            out.append(_norm(c))
        while out and out[-1] == 0:
            out.pop()
        self.coeffs = tuple(out)

    @classmethod
    def _raw(cls, var: str, coeffs: tuple[Scalar, ...]) -> "UniPoly":
        p = object.__new__(cls)
        p.var = var
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, var: str, value: Scalar) -> "UniPoly":
        return cls(var, (value,))

    @classmethod
    def variable(cls, var: str) -> "UniPoly":
        return cls(var, (0, 1))

    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def rename(self, var: str) -> "UniPoly":
        return UniPoly(var, self.coeffs)

    # ------------------------------------------------------------------

    def _coerced(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return UniPoly(self.var, (other,))
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise AlphabetMismatch(f"variables differ: {self.var!r} vs {other.var!r}")
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(self.var, tuple(-c for c in self.coeffs))

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
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                return UniPoly._raw(self.var, ())
            return UniPoly(self.var, [c * other for c in self.coeffs])
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly._raw(self.var, ())
        out: list[Scalar] = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return UniPoly(self.var, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative int, got {exponent!r}")
        result = UniPoly.constant(self.var, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = UniPoly(self.var, (other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.var == other.var and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    # ------------------------------------------------------------------

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _norm(acc)

    def reflect(self) -> "UniPoly":
        """The polynomial evaluated at the negated variable."""
        return UniPoly._raw(self.var, tuple(c if i % 2 == 0 else -c
                                            for i, c in enumerate(self.coeffs)))

    # ------------------------------------------------------------------

    def multipoly(self, letters=None) -> MultiPoly:
        """Integer-coefficient view as a MultiPoly (default alphabet: just the letter)."""
        letters = check_letters(letters) if letters is not None else (self.var,)
        if self.var not in letters:
            raise ValueError(f"alphabet {letters} does not contain {self.var!r}")
        i = letters.index(self.var)
        terms: dict[tuple[int, ...], int] = {}
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if not isinstance(c, int):
                raise ValueError(f"coefficient {c} is not an integer")
            exps = [0] * len(letters)
            exps[i] = e
            terms[tuple(exps)] = c
        return MultiPoly(letters, terms)

    @classmethod
    def from_multipoly(cls, p: MultiPoly, var: str) -> "UniPoly":
        """Extract a univariate view; every other letter must be unused."""
        if var not in p.letters:
            raise ValueError(f"alphabet {p.letters} does not contain {var!r}")
        i = p.letters.index(var)
        coeffs: dict[int, int] = {}
        for exps, c in p.terms.items():
            for j, e in enumerate(exps):
                if e and j != i:
                    raise ValueError(
                        f"polynomial is not univariate in {var!r}: uses {p.letters[j]!r}")
            coeffs[exps[i]] = c
        if not coeffs:
            return cls(var)
        out = [0] * (max(coeffs) + 1)
        for e, c in coeffs.items():
            out[e] = c
        return cls(var, out)

    # ------------------------------------------------------------------

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                mono = f"{self.var}^{e}"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"UniPoly[{self.var}: {self}]"
