"""Derivations and monomial endomorphisms of the Laurent algebra.

Every endomorphism of ``Q[x^-1, x]`` other than zero sends units to units,
hence ``x_i`` to ``q_i x^(A e_i)``: it is monomial, ``phi(x^a) = q^a x^(A a)``.
Classification follows the locally finite / locally nilpotent criteria for
derivations ``sum a_i d_i`` and for E-derivations ``I - phi``.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from laurentmed.intlat import (
    LfNormalForm,
    as_matrix,
    geometric_sum,
    identity,
    is_unimodular,
    lf_normal_form,
    mat_pow,
    matmul,
    matvec,
    unimodular_inverse,
)
from laurentmed.laurent import DimensionError, LaurentPoly, as_fraction
from laurentmed.relations import power_product

__all__ = [
    "Kind",
    "Derivation",
    "MonomialEndo",
    "ClassificationResult",
    "NotLocallyFinite",
    "derive",
    "endo_apply",
    "endo_compose",
    "endo_power_monomial",
    "endo_conjugate",
    "classify_derivation",
    "classify_endo",
    "orbit",
]


class NotLocallyFinite(ValueError):
    """The map is not locally finite, so the image deciders do not apply."""


class Kind(str, Enum):
    LF = "LF"
    LN = "LN"
    NEITHER = "neither"

    @property
    def locally_finite(self):
        return self is not Kind.NEITHER


@dataclass(frozen=True)
class Derivation:
    """``D = sum_i coeffs[i] * d/dx_i``."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if any(c.nvars != len(coeffs) for c in coeffs):
            raise DimensionError("derivation coefficients must live in the same algebra")

    @property
    def nvars(self):
        return len(self.coeffs)

    @classmethod
    def diagonal(cls, q):
        n = len(q)
        return cls(tuple(LaurentPoly.variable(n, i).scale(qi) for i, qi in enumerate(q)))

    def __call__(self, f):
        return derive(self, f)


@dataclass(frozen=True)
class MonomialEndo:
    """``phi(x^a) = q^a x^(A a)``; ``q is None`` encodes the zero map."""

    nvars: int
    q: tuple = None
    A: tuple = None

    def __post_init__(self):
        if self.q is None:
            object.__setattr__(self, "A", None)
            return
        q = tuple(as_fraction(v) for v in self.q)
        A = as_matrix(self.A)
        if len(q) != self.nvars or len(A) != self.nvars or any(len(row) != self.nvars for row in A):
            raise DimensionError(f"q and A must have size {self.nvars}")
        if any(v == 0 for v in q):
            raise ValueError("q entries of a nonzero endomorphism must be units")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "A", A)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def identity(cls, n):
        return cls(n, (1,) * n, identity(n))

    @property
    def is_zero(self):
        return self.q is None

    def is_identity(self):
        return not self.is_zero and self.A == identity(self.nvars) and all(v == 1 for v in self.q)

    def on_monomial(self, exp):
        """``(q^a, A a)``."""
        if self.is_zero:
            raise ValueError("the zero endomorphism has no monomial form")
        return power_product(self.q, exp), matvec(self.A, exp)

    def __call__(self, f):
        return endo_apply(self, f)


def derive(D, f):
    n = D.nvars
    if f.nvars != n:
        raise DimensionError("derivation and polynomial live in different algebras")
    out = LaurentPoly.zero(n)
    for i, a in enumerate(D.coeffs):
        if not a:
            continue
        # d_i(sum c x^e) = sum c e_i x^(e - e_i)
        partial = {}
        for exp, c in f.terms.items():
            if exp[i]:
                new = list(exp)
                new[i] -= 1
                partial[tuple(new)] = c * exp[i]
        if partial:
            out = out + a * LaurentPoly(n, partial)
    return out


def endo_apply(phi, f):
    if f.nvars != phi.nvars:
        raise DimensionError("endomorphism and polynomial live in different algebras")
    if phi.is_zero:
        return LaurentPoly.zero(f.nvars)
    return f.map_exponents(lambda e: matvec(phi.A, e), coeff=lambda e: power_product(phi.q, e))


def endo_compose(phi, psi):
    """``phi o psi``."""
    if phi.nvars != psi.nvars:
        raise DimensionError("cannot compose endomorphisms of different algebras")
    if phi.is_zero or psi.is_zero:
        return MonomialEndo.zero(phi.nvars)
    n = phi.nvars
    cols = [tuple(row[i] for row in psi.A) for i in range(n)]
    q = tuple(psi.q[i] * power_product(phi.q, cols[i]) for i in range(n))
    return MonomialEndo(n, q, matmul(phi.A, psi.A))


def endo_power_monomial(phi, m, exp):
    """``phi^m(x^a) = q^(Atilde_m a) x^(A^m a)`` as ``(coefficient, exponent)``."""
    if phi.is_zero:
        raise ValueError("zero endomorphism")
    if m < 1:
        raise ValueError("m must be positive")
    exp = tuple(exp)
    coef = power_product(phi.q, matvec(geometric_sum(phi.A, m), exp))
    return coef, matvec(mat_pow(phi.A, m), exp)


def endo_conjugate(phi, S):
    """``psi_S^-1 o phi o psi_S`` where ``psi_S(x^a) = x^(S a)``."""
    S = as_matrix(S)
    if not is_unimodular(S) or len(S) != phi.nvars:
        raise ValueError("conjugating matrix must be unimodular of matching size")
    if phi.is_zero:
        return phi
    n = phi.nvars
    cols = [tuple(row[i] for row in S) for i in range(n)]
    q = tuple(power_product(phi.q, c) for c in cols)
    A = matmul(matmul(unimodular_inverse(S), phi.A), S)
    return MonomialEndo(n, q, A)


def substitute_exponents(f, S):
    """``psi_S(f)``: every ``x^a`` becomes ``x^(S a)``."""
    S = as_matrix(S)
    return f.map_exponents(lambda e: matvec(S, e))


@dataclass(frozen=True)
class ClassificationResult:
    kind: Kind
    q: tuple = None  # derivations: D = sum q_i x_i d_i
    normal_form: LfNormalForm = None  # endomorphisms


def classify_derivation(D):
    n = D.nvars
    q = []
    for i, a in enumerate(D.coeffs):
        if not a:
            q.append(Fraction(0))
            continue
        xi = [0] * n
        xi[i] = 1
        if len(a) != 1 or next(iter(a.support())) != tuple(xi):
            return ClassificationResult(Kind.NEITHER)
        q.append(a.coeff(xi))
    q = tuple(q)
    return ClassificationResult(Kind.LN if not any(q) else Kind.LF, q=q)


def classify_endo(phi):
    """Classify ``I - phi`` (equivalently ``phi``: both are LF or neither)."""
    if phi.is_zero:
        n = phi.nvars
        return ClassificationResult(Kind.LF, normal_form=LfNormalForm(identity(n), n, (), 1))
    nf = lf_normal_form(phi.A)
    if nf is None:
        return ClassificationResult(Kind.NEITHER)
    return ClassificationResult(Kind.LN if phi.is_identity() else Kind.LF, normal_form=nf)


def orbit(phi, exp, cap):
    """Exponent orbit ``a, A a, A^2 a, ...`` up to the first repeat.

    Returns None when more than ``cap`` distinct exponents appear.
    """
    if phi.is_zero:
        raise ValueError("zero endomorphism")
    seen = []
    seen_set = set()
    cur = tuple(exp)
    while cur not in seen_set:
        if len(seen) == cap:
            return None
        seen.append(cur)
        seen_set.add(cur)
        cur = matvec(phi.A, cur)
    return seen
