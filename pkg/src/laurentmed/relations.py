"""Multiplicative relations among nonzero rationals.

``relation_lattice(q)`` is the lattice of integer vectors ``b`` with
``prod q_i^b_i == 1``; ``compute_W`` pulls it back along the geometric sum
``I + A + ... + A^(r-1)`` of a finite-order exponent matrix.
"""
from dataclasses import dataclass, field
from fractions import Fraction

from laurentmed.intlat import (
    LatticeBasis,
    as_matrix,
    finite_order,
    geometric_sum,
    kernel_basis,
    lattice_from_generators,
    matvec,
)

__all__ = [
    "SignedFactorization",
    "WLattice",
    "factor_signed",
    "power_product",
    "relation_lattice",
    "compute_W",
    "is_root_of_unity",
]


@dataclass(frozen=True)
class SignedFactorization:
    sign: int
    exponents: dict = field(default_factory=dict)

    def value(self):
        out = Fraction(self.sign)
        for p, e in self.exponents.items():
            out *= Fraction(p) ** e
        return out


def _factor_int(m, into, sign):
    d = 2
    while d * d <= m:
        while m % d == 0:
            into[d] = into.get(d, 0) + sign
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        into[m] = into.get(m, 0) + sign


def factor_signed(q):
    q = Fraction(q)
    if not q:
        raise ValueError("cannot factor zero")
    exps = {}
    _factor_int(abs(q.numerator), exps, 1)
    _factor_int(q.denominator, exps, -1)
    return SignedFactorization(1 if q > 0 else -1, dict(sorted(exps.items())))


def power_product(q, beta):
    if len(q) != len(beta):
        raise ValueError("length mismatch between q and exponent")
    out = Fraction(1)
    for qi, b in zip(q, beta):
        if b:
            out *= Fraction(qi) ** b
    return out


def is_root_of_unity(q):
    q = Fraction(q)
    if not q:
        raise ValueError("zero is not a unit")
    return q in (1, -1)


def relation_lattice(q):
    """Basis (HNF) of ``{b in Z^n : prod q_i^b_i == 1}``.

    One kernel row per prime occurring in any ``q_i``, plus a sign-parity
    row ``sum_{q_i < 0} b_i + 2 t == 0`` with an auxiliary column ``t``
    that is projected away afterwards.
    """
    n = len(q)
    facts = [factor_signed(x) for x in q]
    primes = sorted({p for f in facts for p in f.exponents})
    rows = [[f.exponents.get(p, 0) for f in facts] + [0] for p in primes]
    rows.append([int(f.sign < 0) for f in facts] + [2])
    kernel = kernel_basis(as_matrix(rows)).generators
    return lattice_from_generators(n, [v[:n] for v in kernel])


@dataclass(frozen=True)
class WLattice:
    basis: LatticeBasis
    rank: int
    order: int
    Atilde: tuple


def compute_W(q, A):
    """``W = {a in Z^n : q^(Atilde a) == 1}`` for a finite-order ``A``."""
    A = as_matrix(A)
    n = len(A)
    if len(q) != n:
        raise ValueError("q and A have different sizes")
    r = finite_order(A)
    if r is None:
        raise ValueError("exponent matrix is not of finite order")
    atilde = geometric_sum(A, r)
    rel = relation_lattice(q).generators
    # (a, l) with Atilde a - sum l_j rel_j == 0; project to a
    rows = [list(atilde[i]) + [-g[i] for g in rel] for i in range(n)]
    kernel = kernel_basis(as_matrix(rows)).generators if n else ()
    basis = lattice_from_generators(n, [v[:n] for v in kernel])
    assert all(power_product(q, matvec(atilde, b)) == 1 for b in basis.generators)
    return WLattice(basis, basis.rank, r, atilde)
