"""Mathieu-subspace harness: Newton polytope origin tests and power probes.

Everything here gathers evidence up to a finite bound ``M``; none of it
proves a statement about all ``m >= 1``.  Membership oracles are plain
callables ``LaurentPoly -> bool``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from laurentmed.image import image_member_ederivation, kernel_ideal_member
from laurentmed.laurent import LaurentPoly

__all__ = [
    "PolytopeResult",
    "MsProbeResult",
    "DvkVerdict",
    "origin_in_polytope",
    "poly_z_origin",
    "radical_scan",
    "ms_probe",
    "dvk_check",
    "constant_free_oracle",
    "kernel_ideal_oracle",
    "image_oracle",
]


@dataclass(frozen=True)
class PolytopeResult:
    """``contains`` is True iff the origin lies in the convex hull.

    Exactly one certificate is set: ``weights`` (convex coefficients, one per
    input point, combining the points to zero) or ``functional`` (an integer
    vector strictly positive on every point).
    """

    contains: bool
    weights: tuple = None
    functional: tuple = None

    def __bool__(self):
        return self.contains


def _pivot(tab, row, col):
    pr = tab[row]
    inv = 1 / pr[col]
    tab[row] = pr = [v * inv for v in pr]
    for i, r in enumerate(tab):
        if i != row and r[col]:
            factor = r[col]
            tab[i] = [a - factor * b for a, b in zip(r, pr)]


def _phase_one(M, b):
    """Minimise the artificial sum for ``M lam = b, lam >= 0`` (``b >= 0``).

    Returns ``(optimum, lam, y)`` where ``y`` are the final simplex
    multipliers.  Bland's rule guarantees termination.
    """
    m, N = len(M), len(M[0])
    tab = [list(map(Fraction, M[i])) + [Fraction(int(i == j)) for j in range(m)] + [Fraction(b[i])] for i in range(m)]
    basis = [N + i for i in range(m)]
    width = N + m + 1
    # reduced costs: c_j - c_B . column_j, with cost 1 on artificials
    z = [Fraction(0)] * N + [Fraction(1)] * m + [Fraction(0)]
    for r in tab:
        z = [a - c for a, c in zip(z, r)]
    while True:
        col = next((j for j in range(width - 1) if z[j] < 0), None)
        if col is None:
            break
        best = None
        for i, r in enumerate(tab):
            if r[col] > 0:
                key = (r[-1] / r[col], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        # phase one is bounded below by zero, so some ratio exists
        row = best[1]
        _pivot(tab, row, col)
        basis[row] = col
        factor = z[col]
        z = [a - factor * c for a, c in zip(z, tab[row])]
    lam = [Fraction(0)] * N
    for i, j in enumerate(basis):
        if j < N:
            lam[j] = tab[i][-1]
    y = [1 - z[N + i] for i in range(m)]
    return -z[-1], lam, y


def _integral(vec):
    scale = lcm(*(v.denominator for v in vec))
    ints = [int(v * scale) for v in vec]
    g = gcd(*ints) or 1
    return tuple(v // g for v in ints)


def origin_in_polytope(points):
    """Decide ``0 in conv(points)`` exactly, with a certificate either way."""
    points = [tuple(p) for p in points]
    if not points:
        raise ValueError("empty point set")
    n = len(points[0])
    if any(len(p) != n for p in points):
        raise ValueError("points of different dimensions")
    M = [[p[i] for p in points] for i in range(n)] + [[1] * len(points)]
    b = [0] * n + [1]
    opt, lam, y = _phase_one(M, b)
    if opt == 0:
        return PolytopeResult(True, weights=tuple(lam))
    # dual feasibility gives <y[:n], p> + y[n] <= 0 with y[n] = opt > 0
    c = _integral([-v for v in y[:n]])
    assert all(sum(ci * pi for ci, pi in zip(c, p)) > 0 for p in points)
    return PolytopeResult(False, functional=c)


def poly_z_origin(f, k):
    """True iff the origin is absent from the Newton polytope of ``f`` in ``z``.

    ``z`` is the block of the last ``n - k`` variables; the first ``k`` are
    treated as coefficients.  The zero polynomial has an empty polytope,
    so the origin is absent.
    """
    if not 0 <= k < f.nvars:
        raise ValueError("split index must satisfy 0 <= k < n")
    if not f:
        return True
    projected = sorted({e[k:] for e in f.support()}, reverse=True)
    return not origin_in_polytope(projected).contains


def _powers(f, upto):
    out = [LaurentPoly.one(f.nvars)]
    for _ in range(upto):
        out.append(out[-1] * f)
    return out


def radical_scan(V, f, M):
    """Smallest ``m <= M`` with ``f^m`` outside ``V``, or None if all pass."""
    if M < 1:
        raise ValueError("M must be positive")
    power = LaurentPoly.one(f.nvars)
    for m in range(1, M + 1):
        power = power * f
        if not V(power):
            return m
    return None


@dataclass(frozen=True)
class MsProbeResult:
    radical_ok: bool
    first_failure: int = None
    absorbed: dict = field(default_factory=dict)  # probe -> least N, or None on failure


def ms_probe(V, f, probes, M, Mprime):
    """Radical scan up to ``M``; then for each probe ``g`` the least ``N``
    such that ``f^m g`` lies in ``V`` for every ``N <= m <= Mprime``.

    A probe maps to None when ``f^Mprime g`` itself escapes ``V``.
    """
    if Mprime < 1:
        raise ValueError("Mprime must be positive")
    failure = radical_scan(V, f, M)
    if failure is not None:
        return MsProbeResult(False, failure)
    powers = _powers(f, Mprime)
    absorbed = {}
    for g in probes:
        N = 1
        for m in range(Mprime, 0, -1):
            if not V(powers[m] * g):
                N = m + 1
                break
        absorbed[g] = N if N <= Mprime else None
    return MsProbeResult(True, None, absorbed)


@dataclass(frozen=True)
class DvkVerdict:
    consistent: bool
    scan_failure: int = None
    origin_in_poly: bool = False
    polytope: PolytopeResult = None

    @property
    def label(self):
        return "CONSISTENT" if self.consistent else "INCONSISTENT"


def constant_free_oracle(h):
    return h.constant_term() == 0


def dvk_check(f, M):
    """Compare a truncated constant-term scan of ``f`` with ``0 in poly f``.

    INCONSISTENT means every ``f^m`` with ``m <= M`` is constant free while
    the origin lies in the polytope.  ``f = 0`` is consistent by convention.
    """
    if not f:
        return DvkVerdict(True)
    failure = radical_scan(constant_free_oracle, f, M)
    poly = origin_in_polytope(sorted(f.support(), reverse=True))
    return DvkVerdict(not (failure is None and poly.contains), failure, poly.contains, poly)


def kernel_ideal_oracle(q):
    q = tuple(q)
    return lambda h: kernel_ideal_member(q, h).member


def image_oracle(phi):
    return lambda h: image_member_ederivation(phi, h, witness=False).member
