"""Exact integer linear algebra on small dense matrices.

Matrices are tuples of row tuples of Python ints; vectors are tuples.  All
routines are exact.  Row-style Hermite form, Smith form with both
transforms, saturated kernel lattices, finite-order detection and the
``A = S diag(0, B) S^-1`` normal form of eventually periodic matrices.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "LatticeBasis",
    "LfNormalForm",
    "as_matrix",
    "identity",
    "zeros",
    "matmul",
    "matvec",
    "transpose",
    "mat_pow",
    "det",
    "is_unimodular",
    "unimodular_inverse",
    "hnf",
    "snf",
    "kernel_basis",
    "lattice_from_generators",
    "finite_order",
    "order_bound",
    "lf_normal_form",
    "geometric_sum",
    "adapted_basis",
    "block_diag",
    "solve_rational",
]


def as_matrix(rows):
    m = tuple(tuple(int(v) for v in row) for row in rows)
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def shape(a):
    return len(a), (len(a[0]) if a else 0)


def _require_square(a):
    r, c = shape(a)
    if r != c:
        raise ValueError(f"expected a square matrix, got {r}x{c}")
    return r


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(a):
    return tuple(zip(*a))


def matmul(a, b):
    bt = transpose(b)
    if not bt:
        return tuple(() for _ in a)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_pow(a, m):
    n = _require_square(a)
    result = identity(n)
    base = a
    while m:
        if m & 1:
            result = matmul(result, base)
        m >>= 1
        if m:
            base = matmul(base, base)
    return result


def block_diag(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    rows = [tuple(row) + (0,) * cb for row in a]
    rows += [(0,) * ca + tuple(row) for row in b]
    return tuple(rows)


def det(a):
    """Bareiss fraction-free determinant."""
    n = _require_square(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_unimodular(a):
    r, c = shape(a)
    return r == c and abs(det(a)) == 1


def solve_rational(a, b):
    """One solution of ``a x = b`` over Q (free variables set to 0), or None.

    ``a`` may hold ints or Fractions.
    """
    rows, cols = len(a), (len(a[0]) if a else 0)
    m = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(m[i][cols] for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return x


def unimodular_inverse(s):
    n = _require_square(s)
    if not is_unimodular(s):
        raise ValueError("matrix is not unimodular")
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = solve_rational(s, e)
        cols.append(tuple(int(v) for v in x))
    return transpose(tuple(cols)) if n else ()


# Hermite and Smith forms


def hnf(a):
    """Row Hermite normal form: returns ``(H, U)`` with ``U @ A == H``.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)`` and
    zero rows come last.  ``U`` is unimodular.
    """
    a = as_matrix(a)
    rows, cols = shape(a)
    h = [list(row) for row in a]
    u = [list(row) for row in identity(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nonzero = [i for i in range(r, rows) if h[i][c]]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(h[i][c]))
            if p != r:
                h[r], h[p] = h[p], h[r]
                u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if not h[r][c]:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return as_matrix(h), as_matrix(u)


def snf(a):
    """Smith normal form: ``(D, U, V)`` with ``U @ A @ V == D``.

    ``D`` is diagonal with nonnegative entries ``d1 | d2 | ...``; ``U`` and
    ``V`` are unimodular.
    """
    a = as_matrix(a)
    rows, cols = shape(a)
    d = [list(row) for row in a]
    u = [list(row) for row in identity(rows)]
    v = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        d[dst] = [x - q * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in d:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    for t in range(min(rows, cols)):
        entries = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            clean = True
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(i, t, d[i][t] // d[t][t])
                    if d[i][t]:
                        clean = False
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(j, t, d[t][j] // d[t][t])
                    if d[t][j]:
                        clean = False
            if not clean:
                entries = [(abs(d[i][t]), i, t) for i in range(t, rows) if d[i][t]]
                entries += [(abs(d[t][j]), t, j) for j in range(t, cols) if d[t][j]]
                _, i, j = min(entries)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % d[t][t]),
                None,
            )
            if bad is None:
                break
            # fold the offending row in and eliminate again
            add_row(t, bad, -1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return as_matrix(d), as_matrix(u), as_matrix(v)


# Lattices


@dataclass(frozen=True)
class LatticeBasis:
    """Ordered basis of a sublattice of ``Z^n``; ``generators`` may be empty."""

    n: int
    generators: tuple

    @property
    def rank(self):
        return len(self.generators)

    def matrix(self):
        """Generators as columns (``n x rank``)."""
        return transpose(self.generators) if self.generators else tuple(() for _ in range(self.n))

    def __contains__(self, vec):
        vec = list(vec)
        if len(vec) != self.n:
            raise ValueError("vector has the wrong length")
        h, _ = hnf(self.generators) if self.generators else ((), ())
        for row in h:
            c = next((j for j, x in enumerate(row) if x), None)
            if c is None:
                break
            if vec[c] % row[c]:
                return False
            q = vec[c] // row[c]
            vec = [x - q * y for x, y in zip(vec, row)]
        return not any(vec)

    def same_lattice(self, other):
        return self.n == other.n and self.rank == other.rank and all(g in other for g in self.generators)


def lattice_from_generators(n, vectors):
    """Canonical (HNF) basis of the lattice spanned by ``vectors``."""
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if not vectors:
        return LatticeBasis(n, ())
    h, _ = hnf(vectors)
    return LatticeBasis(n, tuple(row for row in h if any(row)))


def kernel_basis(a):
    """Basis of ``{x in Z^n : A x = 0}``; always a saturated sublattice."""
    a = as_matrix(a)
    rows, n = shape(a)
    if rows == 0:
        return LatticeBasis(n, identity(n))
    h, u = hnf(transpose(a))
    kernel = [u[i] for i in range(n) if not any(h[i])]
    return lattice_from_generators(n, kernel)


# Finite order and the locally finite normal form


def _euler_phi(k):
    result = k
    p = 2
    m = k
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def order_bound(n):
    """``lcm{k : phi(k) <= n}``; every finite order in GL_n(Z) divides it."""
    # phi(k) >= sqrt(k / 2), so k <= 2 n^2 covers every candidate
    return lcm(*(k for k in range(1, 2 * n * n + 3) if _euler_phi(k) <= n)) if n else 1


def _divisors(m):
    return sorted(d for d in range(1, m + 1) if m % d == 0)


def finite_order(a):
    """Smallest ``r >= 1`` with ``A^r == I``, or None."""
    a = as_matrix(a)
    n = _require_square(a)
    if n == 0:
        return 1
    if abs(det(a)) != 1:
        return None
    eye = identity(n)
    for d in _divisors(order_bound(n)):
        if mat_pow(a, d) == eye:
            return d
    return None


@dataclass(frozen=True)
class LfNormalForm:
    """``A == S @ diag(0_k, B) @ S^-1`` with ``S`` unimodular and ``B^r == I``."""

    S: tuple
    k: int
    B: tuple
    r: int

    def block(self):
        return block_diag(zeros(self.k, self.k), self.B)


def lf_normal_form(a):
    """Normal form of an eventually periodic matrix, or None.

    Present iff ``A^(r+1) == A`` for some ``r >= 1``.  With the minimal such
    ``r``, ``P = A^r`` is idempotent, ``Z^n = ker P (+) im P`` and ``A`` is
    zero on the first summand and of order ``r`` on the second.
    """
    a = as_matrix(a)
    n = _require_square(a)
    if n == 0:
        return LfNormalForm((), 0, (), 1)
    bound = order_bound(n)
    if mat_pow(a, bound + 1) != a:
        return None
    r = next(d for d in _divisors(bound) if mat_pow(a, d + 1) == a)
    p = mat_pow(a, r)
    ker = kernel_basis(p).generators
    img = kernel_basis(mat_sub(identity(n), p)).generators
    k = len(ker)
    s = transpose(ker + img)
    conj = matmul(matmul(unimodular_inverse(s), a), s)
    assert all(conj[i][j] == 0 for i in range(n) for j in range(n) if i < k or j < k)
    b = tuple(row[k:] for row in conj[k:])
    return LfNormalForm(s, k, b, r)


def geometric_sum(a, m):
    """``I + A + ... + A^(m-1)``."""
    n = _require_square(a)
    if m < 1:
        raise ValueError("m must be positive")
    total = identity(n)
    power = identity(n)
    for _ in range(m - 1):
        power = matmul(power, a)
        total = mat_add(total, power)
    return total


def adapted_basis(lattice):
    """Basis ``beta`` of ``Z^n`` and ``d1 | d2 | ...`` with the lattice spanned by ``d_i beta_i``.

    Returns ``(beta, d)``; ``beta`` is a tuple of ``n`` vectors.
    """
    n = lattice.n
    if not lattice.generators:
        return identity(n), ()
    d, u, _ = snf(lattice.matrix())
    k = lattice.rank
    diag = tuple(d[i][i] for i in range(k))
    if any(x == 0 for x in diag):
        raise ValueError("lattice generators are linearly dependent")
    beta = transpose(unimodular_inverse(u))
    return beta, diag
