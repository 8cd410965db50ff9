"""Sparse Laurent polynomials in ``n`` commuting variables over Q.

A polynomial is stored as integer numerators over one positive common
denominator, ``f = (sum num[a] x^a) / den`` with ``gcd(den, nums) == 1``, so
that products reduce to an integer convolution (see :mod:`laurentmed.kernels`).
Terms are kept in descending lexicographic exponent order.  Variable indices
in this API are 0-based; the text syntax uses ``x1..xn``.
"""
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from laurentmed import kernels

__all__ = ["LaurentPoly", "as_fraction", "DimensionError"]


class DimensionError(ValueError):
    """Operands live in Laurent algebras with different numbers of variables."""


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _normalize(num, den):
    """Strip zeros and cancel the content against the denominator."""
    num = {k: c for k, c in num.items() if c}
    if not num:
        return {}, 1
    if den < 0:
        num = {k: -c for k, c in num.items()}
        den = -den
    g = gcd(den, *num.values())
    if g != 1:
        num = {k: c // g for k, c in num.items()}
        den //= g
    return num, den


class LaurentPoly:
    """Immutable sparse Laurent polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "_num", "_den", "_hash")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        fracs = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            fracs[exp] = fracs.get(exp, 0) + as_fraction(c)
        den = lcm(*(c.denominator for c in fracs.values())) if fracs else 1
        num = {k: c.numerator * (den // c.denominator) for k, c in fracs.items()}
        num, den = _normalize(num, den)
        self._set(nvars, dict(sorted(num.items(), reverse=True)), den)

    def _set(self, nvars, num, den):
        self.nvars = nvars
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, nvars, num, den, ordered=False):
        num, den = _normalize(num, den)
        obj = cls.__new__(cls)
        obj._set(nvars, num if ordered else dict(sorted(num.items(), reverse=True)), den)
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {}, 1, ordered=True)

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exp, c=1):
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def variable(cls, nvars, i, power=1):
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    # inspection

    @property
    def terms(self):
        """Mapping exponent -> Fraction, in canonical order."""
        den = self._den
        return {k: Fraction(c, den) for k, c in self._num.items()}

    def items(self):
        return self.terms.items()

    def coeff(self, exp):
        return Fraction(self._num.get(tuple(exp), 0), self._den)

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def support(self):
        return frozenset(self._num)

    def is_zero(self):
        return not self._num

    def __bool__(self):
        return bool(self._num)

    def __len__(self):
        return len(self._num)

    def is_constant(self):
        return not self._num or (len(self._num) == 1 and not any(next(iter(self._num))))

    def is_polynomial(self):
        return all(e >= 0 for k in self._num for e in k)

    def integer_form(self):
        """``(numerators, denominator)`` with ``f = numerators / denominator``."""
        return dict(self._num), self._den

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._den == other._den and self._num == other._num
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._num.items()), self._den))
        return self._hash

    def __repr__(self):
        from laurentmed.parser import format_poly

        return f"LaurentPoly({self.nvars}, {format_poly(self)!r})"

    def __str__(self):
        from laurentmed.parser import format_poly

        return format_poly(self)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Rational)):
            return LaurentPoly.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._num:
            return self
        if not self._num:
            return other
        den = lcm(self._den, other._den)
        sa, sb = den // self._den, den // other._den
        num = {k: c * sa for k, c in self._num.items()}
        for k, c in other._num.items():
            num[k] = num.get(k, 0) + c * sb
        return LaurentPoly._raw(self.nvars, num, den)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {k: -c for k, c in self._num.items()}, self._den, ordered=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_fraction(c)
        if not c:
            return LaurentPoly.zero(self.nvars)
        num = {k: v * c.numerator for k, v in self._num.items()}
        return LaurentPoly._raw(self.nvars, num, self._den * c.denominator, ordered=True)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = self.nvars
        if not self._num or not other._num:
            return LaurentPoly.zero(n)
        ea = [e for k in self._num for e in k]
        eb = [e for k in other._num for e in k]
        out_e, out_c = kernels.convolve(n, ea, list(self._num.values()), eb, list(other._num.values()))
        keys = list(zip(*[iter(out_e)] * n)) if n else [()] * len(out_c)
        return LaurentPoly._raw(n, dict(zip(keys, out_c)), self._den * other._den, ordered=True)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_fraction(c)
        if not c:
            raise ZeroDivisionError("division of a Laurent polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, m):
        if not isinstance(m, int) or m < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one(self.nvars)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    # structure

    def homogeneous_components(self):
        """Split by total degree ``sum(a)``; returns ``{degree: component}``."""
        parts = {}
        for k, c in self._num.items():
            parts.setdefault(sum(k), {})[k] = c
        return {deg: LaurentPoly._raw(self.nvars, num, self._den, ordered=True) for deg, num in sorted(parts.items())}

    def evaluate_partial(self, assignment):
        """Substitute nonzero rationals for some variables.

        ``assignment`` maps 0-based variable indices to values.  The result
        keeps ``nvars`` variables; assigned ones no longer occur.
        """
        values = {}
        for i, v in assignment.items():
            if not 0 <= i < self.nvars:
                raise IndexError(f"variable index {i} out of range")
            v = as_fraction(v)
            if not v:
                raise ZeroDivisionError(f"cannot evaluate x{i + 1} at 0 in a Laurent polynomial")
            values[i] = v
        out = {}
        for k, c in self.terms.items():
            scale = Fraction(1)
            exp = list(k)
            for i, v in values.items():
                if exp[i]:
                    scale *= v ** exp[i]
                    exp[i] = 0
            key = tuple(exp)
            out[key] = out.get(key, 0) + c * scale
        return LaurentPoly(self.nvars, out)

    def __call__(self, *point):
        """Full evaluation at a point of nonzero rationals."""
        if len(point) != self.nvars:
            raise DimensionError("point has the wrong length")
        return self.evaluate_partial(dict(enumerate(point))).constant_term()

    def map_exponents(self, fn, coeff=None, nvars=None):
        """``sum c * coeff(a) * x^fn(a)``; like terms are merged.

        ``nvars`` is the number of variables of the target algebra (defaults
        to this polynomial's).
        """
        out = {}
        for k, c in self.terms.items():
            key = tuple(fn(k))
            if coeff is not None:
                c = c * coeff(k)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.nvars if nvars is None else nvars, out)

    def filter_terms(self, keep):
        num = {k: c for k, c in self._num.items() if keep(k)}
        return LaurentPoly._raw(self.nvars, num, self._den, ordered=True)
