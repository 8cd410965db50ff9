"""Random generators shared by the test modules."""
import random
from fractions import Fraction

from laurentmed.intlat import block_diag, identity, matmul, unimodular_inverse, zeros
from laurentmed.laurent import LaurentPoly
from laurentmed.maps import MonomialEndo

SCALARS = [Fraction(v) for v in (1, -1, 2, -2, 3, -3)] + [Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3)]

# finite-order blocks by size
FINITE_ORDER = {
    1: [((1,),), ((-1,),)],
    2: [
        ((1, 0), (0, 1)),
        ((-1, 0), (0, -1)),
        ((0, 1), (1, 0)),
        ((0, -1), (1, 0)),
        ((0, -1), (1, -1)),
        ((1, -1), (1, 0)),
        ((1, 0), (0, -1)),
        ((-1, 0), (1, 1)),
    ],
    3: [
        identity(3),
        ((0, 1, 0), (0, 0, 1), (1, 0, 0)),
        ((-1, 0, 0), (0, 0, -1), (0, 1, 0)),
        ((0, -1, 0), (1, -1, 0), (0, 0, -1)),
        ((1, 0, 0), (0, -1, 0), (0, 0, -1)),
    ],
}


def random_unimodular(rng, n, steps=4):
    S = [list(r) for r in identity(n)]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-1, 1])
        for row in S:
            row[i] += c * row[j]
    if rng.random() < 0.3:
        k = rng.randrange(n)
        for row in S:
            row[k] = -row[k]
    return tuple(tuple(r) for r in S)


def random_finite_order_block(rng, m):
    if m == 0:
        return ()
    if m == 3 and rng.random() < 0.5:
        return block_diag(rng.choice(FINITE_ORDER[1]), rng.choice(FINITE_ORDER[2]))
    if m == 2 and rng.random() < 0.3:
        return block_diag(rng.choice(FINITE_ORDER[1]), rng.choice(FINITE_ORDER[1]))
    return rng.choice(FINITE_ORDER[m])


def random_lf_matrix(rng, n, allow_kernel=True, conjugate=True):
    """``S diag(0_k, B) S^-1`` with ``B`` of finite order."""
    k = rng.randint(0, n) if allow_kernel else 0
    inner = block_diag(zeros(k, k), random_finite_order_block(rng, n - k)) if k else random_finite_order_block(rng, n)
    if not conjugate:
        return inner
    S = random_unimodular(rng, n)
    return matmul(matmul(S, inner), unimodular_inverse(S))


def random_q(rng, n):
    return tuple(rng.choice(SCALARS) for _ in range(n))


def random_lf_endo(rng, n, **kw):
    return MonomialEndo(n, random_q(rng, n), random_lf_matrix(rng, n, **kw))


def random_poly(rng, n, terms=6, lo=-3, hi=3, coeffs=(-3, -2, -1, 1, 2, 3)):
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[tuple(rng.randint(lo, hi) for _ in range(n))] = Fraction(rng.choice(coeffs))
    return LaurentPoly(n, out)


def rng_for(seed):
    return random.Random(seed)


# hypothesis strategies

from hypothesis import strategies as st  # noqa: E402

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
nonzero_rationals = rationals.filter(bool)


@st.composite
def polys(draw, nvars=None, max_terms=6, lo=-4, hi=4):
    n = draw(st.integers(1, 3)) if nvars is None else nvars
    exps = st.tuples(*[st.integers(lo, hi)] * n)
    terms = draw(st.dictionaries(exps, nonzero_rationals, max_size=max_terms))
    return LaurentPoly(n, terms)


@st.composite
def poly_tuples(draw, count, max_terms=6, lo=-4, hi=4):
    n = draw(st.integers(1, 3))
    return tuple(draw(polys(n, max_terms, lo, hi)) for _ in range(count))


@st.composite
def int_matrices(draw, rows=None, cols=None, lo=-3, hi=3, max_dim=4):
    r = draw(st.integers(1, max_dim)) if rows is None else rows
    c = draw(st.integers(1, max_dim)) if cols is None else cols
    return tuple(tuple(draw(st.integers(lo, hi)) for _ in range(c)) for _ in range(r))


@st.composite
def lf_endos(draw, n=None):
    size = draw(st.integers(1, 3)) if n is None else n
    seed = draw(st.integers(0, 2**32 - 1))
    return random_lf_endo(random.Random(seed), size)


# catalog of one- and two-variable locally finite maps

CATALOG = [
    ("q=3, A=I", MonomialEndo(1, (3,), ((1,),))),
    ("q=1/2, A=I", MonomialEndo(1, (Fraction(1, 2),), ((1,),))),
    ("q=-1, A=I", MonomialEndo(1, (-1,), ((1,),))),
    ("q=2, A=-I", MonomialEndo(1, (2,), ((-1,),))),
    ("q=5, A=0", MonomialEndo(1, (5,), ((0,),))),
    ("q=(2,3), A=I", MonomialEndo(2, (2, 3), ((1, 0), (0, 1)))),
    ("q=(-1,2), A=I", MonomialEndo(2, (-1, 2), ((1, 0), (0, 1)))),
    ("q=(3,-1), A=-I", MonomialEndo(2, (3, -1), ((-1, 0), (0, -1)))),
    ("q=(1,1), swap", MonomialEndo(2, (1, 1), ((0, 1), (1, 0)))),
    ("q=(2,3), swap", MonomialEndo(2, (2, 3), ((0, 1), (1, 0)))),
    ("q=(1,-1), rotation", MonomialEndo(2, (1, -1), ((0, -1), (1, 0)))),
    ("q=(2,-1), rank one", MonomialEndo(2, (2, -1), ((0, 0), (1, 1)))),
]


def radical_candidates(rng, phi, count, lo=-2, hi=2, terms=4):
    """Candidate radical elements: random polynomials, one-signed supports,
    elements of the image and multiples of the kernel ideal generators."""
    from laurentmed.image import image_description
    from laurentmed.maps import endo_apply, substitute_exponents

    n = phi.nvars
    desc = image_description(phi)
    out = []
    for i in range(count):
        kind = i % 4
        if kind == 0:
            f = random_poly(rng, n, terms, lo, hi)
        elif kind == 1:
            # support in an open half space
            c = tuple(rng.choice((-1, 1)) if j == n - 1 or rng.random() < 0.5 else 0 for j in range(n))
            f = random_poly(rng, n, terms, lo, hi).filter_terms(lambda e: sum(a * b for a, b in zip(c, e)) > 0)
        elif kind == 2:
            g = random_poly(rng, n, terms, lo, hi)
            f = g - endo_apply(phi, g)
        else:
            h = random_poly(rng, n, 2, lo, hi)
            if desc.k0:
                i0 = rng.randrange(desc.k0)
                gen = LaurentPoly.variable(n, i0) - desc.q_conj[i0]
                f = substitute_exponents(gen, desc.S) * h
            else:
                f = h * LaurentPoly.variable(n, n - 1, rng.choice((1, 2)))
        out.append(f)
    return out
