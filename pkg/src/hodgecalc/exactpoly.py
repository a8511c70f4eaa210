"""Exact arithmetic kernel.

Everything in this module is integer-exact: Laurent polynomials in ``t`` over
Python's arbitrary-precision integers, rational functions whose denominator is
a power of ``(1-t)``, truncated power series in ``y`` with such rational
functions as coefficients, and factored bivariate closed forms.  No floats and
no rounding appear anywhere; equality always means equality of mathematical
objects.

The restriction of denominators to powers of ``(1-t)`` is deliberate: every
``t``-rational value produced by the rest of the package (Hilbert series of
graded ideals and their generating functions) lives in this class, and the
restriction lets us keep arithmetic exact without general polynomial gcds.
An operation that would leave the class raises instead of generalizing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Mapping


class TruncationError(ValueError):
    """Series with different truncation orders were combined."""


class NonUnitError(ArithmeticError):
    """Inversion was requested for a value that is not invertible here."""


class NotAPowerSeriesError(ArithmeticError):
    """A value that should be a power series has a genuine Laurent tail."""


class LaurentTailError(ArithmeticError):
    """A t-expansion has nonzero coefficients in negative degrees."""


# ---------------------------------------------------------------------------
# Laurent polynomials in t
# ---------------------------------------------------------------------------


class LaurentPoly:
    """Sparse Laurent polynomial in ``t`` with integer coefficients.

    Stored as a map from exponent to coefficient; zero coefficients are never
    stored, so equality of the maps is equality of polynomials.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, v in items:
            if v:
                w = c.get(e, 0) + v
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        self._c = c

    # -- constructors

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def t_power(cls, exp: int) -> "LaurentPoly":
        return cls({exp: 1})

    # -- inspection

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs, sorted by exponent."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def valuation(self) -> int:
        """Smallest exponent with nonzero coefficient; raises on zero."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    # -- arithmetic

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            elif e in c:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: v * other for e, v in self._c.items()}
            return out
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                elif e in c:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    # -- division by (1-t)

    def is_divisible_by_one_minus_t(self) -> bool:
        return self.eval_at_one() == 0

    def div_one_minus_t(self) -> "LaurentPoly":
        """Exact quotient by (1-t); raises if (1-t) does not divide."""
        if not self._c:
            return LaurentPoly.zero()
        if self.eval_at_one() != 0:
            raise ArithmeticError("(1-t) does not divide this polynomial")
        # (1-t)*q has coefficient q_e - q_{e-1} at t^e, so q_e is the prefix
        # sum of the coefficients up to e.
        lo, hi = self.valuation(), self.degree()
        c: dict[int, int] = {}
        acc = 0
        for e in range(lo, hi):
            acc += self._c.get(e, 0)
            if acc:
                c[e] = acc
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    # -- comparisons, hashing, display

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self) -> str:
        return _format_terms(((e, None, v) for e, v in self.items()))


def _format_power(var: str, exp: int) -> str:
    if exp == 1:
        return var
    return f"{var}^{exp}"


def _format_terms(terms: Iterator[tuple[int, int | None, int]]) -> str:
    """Render (t-exp, y-exp-or-None, coeff) triples as ``c*t^a*y^b`` lists."""
    parts: list[str] = []
    for te, ye, v in terms:
        factors = []
        if te != 0:
            factors.append(_format_power("t", te))
        if ye is not None and ye != 0:
            factors.append(_format_power("y", ye))
        mag = "*".join([str(abs(v))] + factors) if factors else str(abs(v))
        if not parts:
            parts.append(mag if v > 0 else "-" + mag)
        else:
            parts.append(("+ " if v > 0 else "- ") + mag)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Rational functions num/(1-t)^e
# ---------------------------------------------------------------------------


class RatFunc:
    """Rational function in ``t`` of the form ``num / (1-t)^e``.

    The representation is canonical: the constructor strips common ``(1-t)``
    factors, so two values are equal exactly when their fields coincide.
    """

    __slots__ = ("num", "e")

    def __init__(self, num: LaurentPoly | int, e: int = 0):
        if isinstance(num, int):
            num = LaurentPoly.term(num, 0)
        if e < 0:
            raise ValueError("denominator exponent must be nonnegative")
        if num.is_zero():
            e = 0
        else:
            while e > 0 and num.eval_at_one() == 0:
                num = num.div_one_minus_t()
                e -= 1
        self.num = num
        self.e = e

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        e = max(self.e, other.e)
        a = self.num * (ONE_MINUS_T ** (e - self.e))
        b = other.num * (ONE_MINUS_T ** (e - other.e))
        return RatFunc(a + b, e)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        out = RatFunc.__new__(RatFunc)
        out.num = -self.num
        out.e = self.e
        return out

    def __mul__(self, other: "RatFunc | LaurentPoly | int") -> "RatFunc":
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.e + other.e)
        return RatFunc(self.num * other, self.e)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            raise ValueError("use reciprocal() for negative powers")
        return RatFunc(self.num**n, self.e * n)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.reciprocal()

    def reciprocal(self) -> "RatFunc":
        """Multiplicative inverse, when it stays in this class.

        The inverse exists here exactly when the numerator is, up to sign, a
        monomial times a power of ``(1-t)``.  Anything else raises
        :class:`NonUnitError` rather than leaving the representation.
        """
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        unit = self.num
        strips = 0
        while unit.eval_at_one() == 0:
            unit = unit.div_one_minus_t()
            strips += 1
        terms = unit.items()
        if len(terms) != 1 or terms[0][1] not in (1, -1):
            raise NonUnitError(f"not invertible in Z[t,t^-1,(1-t)^-1]: {self}")
        exp, sign = terms[0]
        num = LaurentPoly.term(sign, -exp) * (ONE_MINUS_T ** max(self.e - strips, 0))
        return RatFunc(num, max(strips - self.e, 0))

    def div_one_minus_t_pow(self, k: int) -> "RatFunc":
        """Divide by (1-t)^k."""
        if k < 0:
            raise ValueError("k must be nonnegative")
        return RatFunc(self.num, self.e + k)

    def expand(self, j_max: int) -> list[int]:
        """Coefficients of t^0 .. t^j_max of the power-series expansion at t=0.

        Raises :class:`LaurentTailError` if the expansion has nonzero
        coefficients in negative degrees (the leading coefficient of the
        numerator survives division by ``(1-t)^e``, so a negative valuation
        always means a genuine tail).
        """
        if j_max < 0:
            raise ValueError("j_max must be nonnegative")
        if self.num.is_zero():
            return [0] * (j_max + 1)
        if self.num.valuation() < 0:
            raise LaurentTailError(f"expansion of {self} has t^{self.num.valuation()} tail")
        out = []
        e = self.e
        for j in range(j_max + 1):
            if e == 0:
                out.append(self.num.coeff(j))
            else:
                out.append(
                    sum(v * comb(j - a + e - 1, e - 1) for a, v in self.num.items() if a <= j)
                )
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.e == 0 and self.num == other
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.e == other.e and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.num, self.e))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.e})"

    def __str__(self) -> str:
        if self.e == 0:
            return str(self.num)
        return f"({self.num}) / (1-t)^{self.e}"


ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


# ---------------------------------------------------------------------------
# Truncated power series in y over RatFunc
# ---------------------------------------------------------------------------


class YSeries:
    """Power series in ``y`` truncated at order ``trunc``, coefficients RatFunc.

    All arithmetic discards powers of ``y`` above the truncation order; two
    series may only be combined when their truncations agree.
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Iterable[RatFunc | int], trunc: int | None = None):
        cs = [c if isinstance(c, RatFunc) else RatFunc(c) for c in coeffs]
        if trunc is None:
            if not cs:
                raise ValueError("empty coefficient list and no truncation")
            trunc = len(cs) - 1
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        if len(cs) < trunc + 1:
            cs += [RatFunc.zero()] * (trunc + 1 - len(cs))
        self.trunc = trunc
        self.coeffs = tuple(cs[: trunc + 1])

    @classmethod
    def zero(cls, trunc: int) -> "YSeries":
        return cls([], trunc)

    @classmethod
    def one(cls, trunc: int) -> "YSeries":
        return cls([RatFunc.one()], trunc)

    @classmethod
    def constant(cls, value: RatFunc | int, trunc: int) -> "YSeries":
        return cls([value if isinstance(value, RatFunc) else RatFunc(value)], trunc)

    @classmethod
    def from_bivariate(cls, p: "BivariatePoly", trunc: int, denom_e: int = 0) -> "YSeries":
        """Read a bivariate polynomial as a series in y.

        Coefficients become ``c_b(t)/(1-t)^denom_e``.  Negative powers of y are
        rejected: such a value is not a power series.
        """
        by_y = p.y_coefficients()
        if by_y and min(by_y) < 0:
            raise NotAPowerSeriesError(f"negative y-exponent {min(by_y)} in {p}")
        cs = [RatFunc(by_y.get(b, LaurentPoly.zero()), denom_e) for b in range(trunc + 1)]
        return cls(cs, trunc)

    def coeff(self, p: int) -> RatFunc:
        if not 0 <= p <= self.trunc:
            raise IndexError(f"coefficient y^{p} beyond truncation {self.trunc}")
        return self.coeffs[p]

    def _check(self, other: "YSeries") -> None:
        if self.trunc != other.trunc:
            raise TruncationError(f"truncation mismatch: {self.trunc} vs {other.trunc}")

    def __add__(self, other: "YSeries") -> "YSeries":
        self._check(other)
        return YSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __sub__(self, other: "YSeries") -> "YSeries":
        self._check(other)
        return YSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __neg__(self) -> "YSeries":
        return YSeries([-a for a in self.coeffs], self.trunc)

    def __mul__(self, other: "YSeries | RatFunc | LaurentPoly | int") -> "YSeries":
        if not isinstance(other, YSeries):
            return YSeries([c * other for c in self.coeffs], self.trunc)
        self._check(other)
        out = [RatFunc.zero() for _ in range(self.trunc + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.trunc + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return YSeries(out, self.trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "YSeries":
        if n < 0:
            return self.invert() ** (-n)
        result = YSeries.one(self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert(self) -> "YSeries":
        """Multiplicative inverse up to the truncation order.

        Requires the constant coefficient to be invertible (see
        :meth:`RatFunc.reciprocal`); raises :class:`NonUnitError` otherwise.
        """
        a0 = self.coeffs[0]
        if a0.is_zero():
            raise NonUnitError("series with zero constant coefficient has no inverse")
        inv0 = a0.reciprocal()
        out = [inv0]
        for k in range(1, self.trunc + 1):
            s = RatFunc.zero()
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    s = s + self.coeffs[j] * out[k - j]
            out.append(-(inv0 * s))
        return YSeries(out, self.trunc)

    def div_one_minus_t_pow(self, k: int) -> "YSeries":
        return YSeries([c.div_one_minus_t_pow(k) for c in self.coeffs], self.trunc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.trunc, self.coeffs))

    def __repr__(self) -> str:
        return f"YSeries({list(self.coeffs)!r}, trunc={self.trunc})"

    def __str__(self) -> str:
        parts = [f"({c}) y^{p}" for p, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) + f" + O(y^{self.trunc + 1})" if parts else f"O(y^{self.trunc + 1})"


def one_minus_t_pow_y(k: int, trunc: int) -> YSeries:
    """The polynomial ``1 - t^k y`` as a truncated series."""
    return YSeries([RatFunc.one(), RatFunc(LaurentPoly.term(-1, k))], trunc)


# ---------------------------------------------------------------------------
# Bivariate (Laurent) polynomials in t and y
# ---------------------------------------------------------------------------


class BivariatePoly:
    """Sparse polynomial in ``t`` and ``y``, both exponents allowed in Z.

    Most values in the package are honest polynomials (nonnegative powers of
    ``y``); negative exponents appear transiently, e.g. when substituting
    ``y -> -t^{-d} y^{-1}`` before applying the duality involution.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        c: dict[tuple[int, int], int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for k, v in items:
            if v:
                w = c.get(k, 0) + v
                if w:
                    c[k] = w
                elif k in c:
                    del c[k]
        self._c = c

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def one(cls) -> "BivariatePoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, t_exp: int, y_exp: int) -> "BivariatePoly":
        return cls({(t_exp, y_exp): coeff})

    @classmethod
    def from_laurent(cls, p: LaurentPoly, y_exp: int = 0) -> "BivariatePoly":
        return cls({(e, y_exp): v for e, v in p.items()})

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms sorted by (t-exponent, y-exponent)."""
        return sorted(self._c.items())

    def coeff(self, t_exp: int, y_exp: int) -> int:
        return self._c.get((t_exp, y_exp), 0)

    def is_zero(self) -> bool:
        return not self._c

    def y_coefficients(self) -> dict[int, LaurentPoly]:
        out: dict[int, dict[int, int]] = {}
        for (a, b), v in self._c.items():
            out.setdefault(b, {})[a] = v
        return {b: LaurentPoly(c) for b, c in out.items()}

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        c = dict(self._c)
        for k, v in other._c.items():
            w = c.get(k, 0) + v
            if w:
                c[k] = w
            elif k in c:
                del c[k]
        out = BivariatePoly.__new__(BivariatePoly)
        out._c = c
        return out

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + (-other)

    def __neg__(self) -> "BivariatePoly":
        out = BivariatePoly.__new__(BivariatePoly)
        out._c = {k: -v for k, v in self._c.items()}
        return out

    def __mul__(self, other: "BivariatePoly | int") -> "BivariatePoly":
        if isinstance(other, int):
            if other == 0:
                return BivariatePoly.zero()
            out = BivariatePoly.__new__(BivariatePoly)
            out._c = {k: v * other for k, v in self._c.items()}
            return out
        c: dict[tuple[int, int], int] = {}
        for (a1, b1), v1 in self._c.items():
            for (a2, b2), v2 in other._c.items():
                k = (a1 + a2, b1 + b2)
                w = c.get(k, 0) + v1 * v2
                if w:
                    c[k] = w
                elif k in c:
                    del c[k]
        out = BivariatePoly.__new__(BivariatePoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BivariatePoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BivariatePoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, t_shift: int, y_shift: int) -> "BivariatePoly":
        """Multiply by t^t_shift * y^y_shift."""
        out = BivariatePoly.__new__(BivariatePoly)
        out._c = {(a + t_shift, b + y_shift): v for (a, b), v in self._c.items()}
        return out

    def substitute_y_monomial(self, coeff: int, t_exp: int, y_exp: int) -> "BivariatePoly":
        """Substitute ``y -> coeff * t^t_exp * y^y_exp`` (coeff must be +-1)."""
        if coeff not in (1, -1):
            raise ValueError("only unit coefficients keep the substitution exact")
        c = {}
        for (a, b), v in self._c.items():
            key = (a + t_exp * b, y_exp * b)
            sign = -1 if (coeff == -1 and b % 2) else 1
            c[key] = c.get(key, 0) + v * sign
        return BivariatePoly(c)

    def substitute_t_value(self, value: int) -> LaurentPoly:
        """Evaluate t at an integer; returns a Laurent polynomial in y."""
        c: dict[int, int] = {}
        for (a, b), v in self._c.items():
            if a < 0 and value in (1, -1):
                term = v * (value ** (-a))
            elif a < 0:
                raise ValueError("cannot evaluate negative t-power at a non-unit")
            else:
                term = v * (value**a)
            c[b] = c.get(b, 0) + term
        return LaurentPoly(c)

    def substitute_y_value(self, value: int) -> LaurentPoly:
        """Evaluate y at an integer; returns a Laurent polynomial in t."""
        c: dict[int, int] = {}
        for (a, b), v in self._c.items():
            if b < 0 and value in (1, -1):
                term = v * (value ** (-b))
            elif b < 0:
                raise ValueError("cannot evaluate negative y-power at a non-unit")
            else:
                term = v * (value**b)
            c[a] = c.get(a, 0) + term
        return LaurentPoly(c)

    def min_t_exponent(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial")
        return min(a for a, _ in self._c)

    def min_y_exponent(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial")
        return min(b for _, b in self._c)

    # -- exact division by the closed-form factor kinds

    def div_one_minus_t(self) -> "BivariatePoly | None":
        """Exact quotient by (1-t), or None if it does not divide."""
        out = BivariatePoly.zero()
        for b, c in self.y_coefficients().items():
            if c.eval_at_one() != 0:
                return None
            out = out + BivariatePoly.from_laurent(c.div_one_minus_t(), b)
        return out

    def div_one_minus_tky(self, k: int) -> "BivariatePoly | None":
        """Exact quotient by (1 - t^k y), or None if it does not divide."""
        if self.is_zero():
            return BivariatePoly.zero()
        by_y = self.y_coefficients()
        if min(by_y) < 0:
            raise ValueError("division by (1 - t^k y) expects nonnegative y-exponents")
        top = max(by_y)
        tk = LaurentPoly.t_power(k)
        q: dict[int, LaurentPoly] = {}
        carry = LaurentPoly.zero()
        for b in range(top + 1):
            carry = by_y.get(b, LaurentPoly.zero()) + tk * carry
            q[b] = carry
        if not carry.is_zero():
            return None
        return BivariatePoly([((a, b), v) for b in range(top) for a, v in q[b].items()])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({(0, 0): other} if other else {})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(tuple(self.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"BivariatePoly({dict(self.items())!r})"

    def __str__(self) -> str:
        return _format_terms(((a, b, v) for (a, b), v in self.items()))


ONE_MINUS_T_BIV = BivariatePoly({(0, 0): 1, (1, 0): -1})
ONE_PLUS_TY = BivariatePoly({(0, 0): 1, (1, 1): 1})


def one_minus_tky_biv(k: int) -> BivariatePoly:
    """The polynomial 1 - t^k y."""
    return BivariatePoly({(0, 0): 1, (k, 1): -1})


def rational_eq(num_a: BivariatePoly, den_a: BivariatePoly, num_b: BivariatePoly, den_b: BivariatePoly) -> bool:
    """Equality of num_a/den_a and num_b/den_b by exact cross-multiplication."""
    return num_a * den_b == num_b * den_a


# ---------------------------------------------------------------------------
# Factored bivariate closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedForm:
    """A rational function ``numerator / denominator`` with a factored denominator.

    The denominator is restricted to the factor kinds that actually occur in
    the generating functions computed here:

        (1-t)^one_minus_t * (1-t^d y)^one_minus_td_y
        * (1-t^(d-1) y)^one_minus_td1_y * t^t_pow * y^y_pow

    ``d`` is recorded once on the value.  Equality of two closed forms *as
    rational functions* is decided exactly by cross-multiplication; the
    dataclass ``==`` is structural.
    """

    numerator: BivariatePoly
    d: int
    one_minus_t: int = 0
    one_minus_td_y: int = 0
    one_minus_td1_y: int = 0
    t_pow: int = 0
    y_pow: int = 0

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("closed forms carry the hyperplane count d >= 1")
        for name in ("one_minus_t", "one_minus_td_y", "one_minus_td1_y", "t_pow", "y_pow"):
            if getattr(self, name) < 0:
                raise ValueError(f"factor multiplicity {name} must be nonnegative")

    def factor_list(self) -> list[tuple[str, int]]:
        """Nonzero denominator factors as (label, multiplicity) pairs."""

        def tky(k: int) -> str:
            if k == 0:
                return "1-y"
            if k == 1:
                return "1-t*y"
            return f"1-t^{k}*y"

        labels = [
            ("1-t", self.one_minus_t),
            (tky(self.d), self.one_minus_td_y),
            (tky(self.d - 1), self.one_minus_td1_y),
            ("t", self.t_pow),
            ("y", self.y_pow),
        ]
        return [(lab, m) for lab, m in labels if m]

    def denominator(self) -> BivariatePoly:
        """The denominator expanded to a single polynomial."""
        den = ONE_MINUS_T_BIV**self.one_minus_t
        den = den * one_minus_tky_biv(self.d) ** self.one_minus_td_y
        den = den * one_minus_tky_biv(self.d - 1) ** self.one_minus_td1_y
        return den.shifted(self.t_pow, self.y_pow)

    def equals_as_function(self, other: "ClosedForm") -> bool:
        """True iff the two closed forms are equal as rational functions."""
        return rational_eq(self.numerator, self.denominator(), other.numerator, other.denominator())

    def __mul__(self, other: "ClosedForm") -> "ClosedForm":
        if self.d != other.d:
            raise ValueError("cannot multiply closed forms with different d")
        return ClosedForm(
            self.numerator * other.numerator,
            self.d,
            self.one_minus_t + other.one_minus_t,
            self.one_minus_td_y + other.one_minus_td_y,
            self.one_minus_td1_y + other.one_minus_td1_y,
            self.t_pow + other.t_pow,
            self.y_pow + other.y_pow,
        )

    def reduced(self) -> "ClosedForm":
        """Cancel denominator factors that divide the numerator exactly."""
        num = self.numerator
        a, b, c, tp, yp = (
            self.one_minus_t,
            self.one_minus_td_y,
            self.one_minus_td1_y,
            self.t_pow,
            self.y_pow,
        )
        changed = True
        while changed and not num.is_zero():
            changed = False
            if b > 0 and (q := num.div_one_minus_tky(self.d)) is not None:
                num, b, changed = q, b - 1, True
            if c > 0 and (q := num.div_one_minus_tky(self.d - 1)) is not None:
                num, c, changed = q, c - 1, True
            if a > 0 and (q := num.div_one_minus_t()) is not None:
                num, a, changed = q, a - 1, True
        if not num.is_zero():
            strip_t = min(tp, max(num.min_t_exponent(), 0))
            strip_y = min(yp, max(num.min_y_exponent(), 0))
            if strip_t or strip_y:
                num = num.shifted(-strip_t, -strip_y)
                tp -= strip_t
                yp -= strip_y
        return ClosedForm(num, self.d, a, b, c, tp, yp)

    def expand(self, trunc: int) -> YSeries:
        """Exact expansion as a truncated power series in y.

        Powers of ``y`` in the denominator must divide the numerator (the
        remaining factors are units in the power-series ring, so divisibility
        of the whole value by ``y^k`` is divisibility of the numerator); a
        failure means the value is not a power series and raises.
        """
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        num = self.numerator
        if num.is_zero():
            return YSeries.zero(trunc)
        if self.y_pow:
            if num.min_y_exponent() < self.y_pow:
                raise NotAPowerSeriesError(
                    f"numerator not divisible by y^{self.y_pow}; value has a Laurent tail in y"
                )
        num = num.shifted(-self.t_pow, -self.y_pow)
        series = YSeries.from_bivariate(num, trunc, denom_e=self.one_minus_t)
        if self.one_minus_td_y:
            inv = one_minus_t_pow_y(self.d, trunc).invert()
            series = series * inv**self.one_minus_td_y
        if self.one_minus_td1_y:
            inv = one_minus_t_pow_y(self.d - 1, trunc).invert()
            series = series * inv**self.one_minus_td1_y
        return series

    def __str__(self) -> str:
        den = " ".join(
            f"({lab})" if m == 1 else f"({lab})^{m}" for lab, m in self.factor_list()
        )
        if not den:
            return str(self.numerator)
        return f"({self.numerator}) / [{den}]"
