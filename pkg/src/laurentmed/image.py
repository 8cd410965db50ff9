"""Membership in the image of a locally finite derivation or E-derivation.

For ``D = sum q_i x_i d_i`` the image is spanned by the monomials with
``<q, a> != 0``.  For ``I - phi`` with ``phi`` locally finite the decision
runs through a cascade:

1. conjugate so that the exponent matrix is ``diag(0_k0, B)``, ``B`` of
   finite order ``r``;
2. split off the ideal ``J = (x_i - q_i : i < k0)``, which lies in the image,
   by evaluating the first ``k0`` variables;
3. on the reduced algebra compute ``W = {a : q^(Atilde a) = 1}``:
   ``W = 0`` -> member iff no constant term; ``W`` of full rank -> member iff
   the average over ``phi^0 .. phi^(s-1)`` vanishes; otherwise pass to an
   adapted basis of ``W`` and average only the part of ``f`` that is
   constant in the complementary variables.

Witnesses come from exact linear solves on the finite forward closure of
the support, independently of the decision itself.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from laurentmed.intlat import (
    LfNormalForm,
    adapted_basis,
    identity,
    matvec,
    solve_rational,
    transpose,
    unimodular_inverse,
)
from laurentmed.laurent import DimensionError, LaurentPoly
from laurentmed.maps import (
    MonomialEndo,
    NotLocallyFinite,
    classify_derivation,
    classify_endo,
    endo_apply,
    endo_conjugate,
    endo_power_monomial,
    substitute_exponents,
)
from laurentmed.relations import WLattice, compute_W, power_product

__all__ = [
    "ImageDescription",
    "MembershipReport",
    "OrbitOverflow",
    "image_member_derivation",
    "kernel_ideal_member",
    "averaging_projector",
    "image_member_ederivation",
    "image_description",
    "brute_force_member",
    "poly_variant_member",
]

DEFAULT_CAP = 4096


class OrbitOverflow(RuntimeError):
    """A forward orbit grew beyond the configured cap."""


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    route: str
    witness: LaurentPoly = None
    obstruction: LaurentPoly = None


@dataclass(frozen=True)
class ImageDescription:
    """Structural data deciding ``im(I - phi)``.

    ``S`` conjugates the exponent matrix to ``diag(0_k0, B)``.  ``W``, ``T``
    (adapted basis of ``W`` as columns), ``E1`` and ``E2`` live in the
    coordinates of the reduced algebra (the last ``n - k0`` variables after
    conjugation).  ``k`` is the rank of ``W`` and of ``E1``.
    """

    route: str
    n: int
    k0: int
    S: tuple
    B: tuple
    r: int
    q_conj: tuple
    W: WLattice = None
    T: tuple = None
    d: tuple = ()
    k: int = 0
    s: int = 1
    E1: tuple = ()
    E2: tuple = ()
    A1: tuple = None
    q1: tuple = None


@dataclass(frozen=True)
class _Setup:
    desc: ImageDescription
    reduced: MonomialEndo = None  # phi on the last n - k0 conjugated variables
    adapted: MonomialEndo = None  # ``reduced`` conjugated by T
    S_inv: tuple = None
    T_inv: tuple = None


# derivations


def image_member_derivation(D, f):
    cls = classify_derivation(D)
    if not cls.kind.locally_finite:
        raise NotLocallyFinite("derivation is not of the form sum q_i x_i d_i")
    if f.nvars != D.nvars:
        raise DimensionError("derivation and polynomial live in different algebras")
    witness, obstruction = {}, {}
    for exp, c in f.terms.items():
        weight = sum(qi * a for qi, a in zip(cls.q, exp))
        if weight:
            witness[exp] = c / weight
        else:
            obstruction[exp] = c
    n = f.nvars
    if obstruction:
        return MembershipReport(False, "diagonal", obstruction=LaurentPoly(n, obstruction))
    return MembershipReport(True, "diagonal", witness=LaurentPoly(n, witness))


# E-derivations: building blocks


def kernel_ideal_member(q, f):
    """Membership in ``(x_i - q_i)``, the image of ``I - phi`` when ``A = 0``."""
    value = f(*q)
    if value:
        return MembershipReport(False, "A_zero", obstruction=LaurentPoly.constant(f.nvars, value))
    # phi kills f, so (I - phi)(f) = f
    return MembershipReport(True, "A_zero", witness=f)


def averaging_projector(phi, s, f):
    """``(1/s) sum_{i<s} phi^i(f)``, requiring ``phi^s`` to fix every monomial of ``f``."""
    if s < 1:
        raise ValueError("s must be positive")
    for exp in f.support():
        c, e = endo_power_monomial(phi, s, exp)
        if c != 1 or e != exp:
            raise ValueError(f"phi^{s} does not fix x^{exp}")
    total = f
    cur = f
    for _ in range(s - 1):
        cur = endo_apply(phi, cur)
        total = total + cur
    return total / s


def _forward_closure(A, support, cap):
    nodes = {}
    stack = list(support)
    for e in stack:
        nodes.setdefault(e, None)
    while stack:
        e = stack.pop()
        img = matvec(A, e)
        nodes[e] = img
        if img not in nodes:
            if len(nodes) >= cap:
                raise OrbitOverflow(f"forward orbit exceeds cap={cap}")
            nodes[img] = None
            stack.append(img)
    return nodes


def _components(edges):
    parent = {v: v for v in edges}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for v, w in edges.items():
        rv, rw = find(v), find(w)
        if rv != rw:
            parent[rv] = rw
    groups = {}
    for v in edges:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g, reverse=True) for g in groups.values()), reverse=True)


def _closure_solve(phi, f, cap):
    """Solve ``(I - phi) g = f`` on the span of the forward closure of ``supp f``.

    Returns ``(witness, obstruction)``; exactly one is None.  The restriction
    of ``phi`` to such a span is semisimple at eigenvalue 1 (weighted cycles
    plus nilpotent tails), so solvability there is equivalent to
    solvability anywhere.
    """
    n = f.nvars
    if not f:
        return LaurentPoly.zero(n), None
    edges = _forward_closure(phi.A, f.support(), cap)
    coeffs = {e: power_product(phi.q, e) for e in edges}
    fterms = f.terms
    witness, obstruction = {}, {}
    for comp in _components(edges):
        rhs = [fterms.get(e, Fraction(0)) for e in comp]
        if not any(rhs):
            continue
        index = {e: i for i, e in enumerate(comp)}
        size = len(comp)
        mat = [[Fraction(0)] * size for _ in range(size)]
        for e in comp:
            j = index[e]
            mat[j][j] += 1
            mat[index[edges[e]]][j] -= coeffs[e]
        sol = solve_rational(mat, rhs)
        if sol is None:
            obstruction.update((e, c) for e, c in zip(comp, rhs) if c)
        else:
            witness.update((e, c) for e, c in zip(comp, sol) if c)
    if obstruction:
        return None, LaurentPoly(n, obstruction)
    return LaurentPoly(n, witness), None


def brute_force_member(phi, f, cap=DEFAULT_CAP):
    """Independent oracle: exact linear algebra on monomial orbits."""
    if f.nvars != phi.nvars:
        raise DimensionError("endomorphism and polynomial live in different algebras")
    if phi.is_zero:
        return MembershipReport(True, "brute_force", witness=f)
    witness, obstruction = _closure_solve(phi, f, cap)
    return MembershipReport(witness is not None, "brute_force", witness=witness, obstruction=obstruction)


# E-derivations: the cascade


def _embed(g, n, k0):
    """Reduced polynomial in ``n - k0`` variables -> ``n`` variables (zeros first)."""
    pad = (0,) * k0
    return g.map_exponents(lambda e: pad + e, nvars=n)


def _restrict(g, k0):
    return g.map_exponents(lambda e: e[k0:], nvars=g.nvars - k0)


@lru_cache(maxsize=256)
def _setup(phi):
    n = phi.nvars
    if phi.is_zero:
        desc = ImageDescription("A_zero", n, n, identity(n), (), 1, (), s=1)
        return _Setup(desc)
    cls = classify_endo(phi)
    if not cls.kind.locally_finite:
        raise NotLocallyFinite("I - phi is not locally finite")
    nf: LfNormalForm = cls.normal_form
    conj = endo_conjugate(phi, nf.S)
    k0, m = nf.k, n - nf.k
    base = dict(n=n, k0=k0, S=nf.S, B=nf.B, r=nf.r, q_conj=conj.q)
    if m == 0:
        return _Setup(ImageDescription("A_zero", **base, s=nf.r))
    reduced = MonomialEndo(m, conj.q[k0:], nf.B)
    W = compute_W(reduced.q, reduced.A)
    T_cols, d = adapted_basis(W.basis)
    T = transpose(T_cols)
    k = W.rank
    s = nf.r * (d[-1] if d else 1)
    common = dict(base, W=W, T=T, d=d, k=k, s=s, E1=T_cols[:k], E2=T_cols[k:])
    S_inv = unimodular_inverse(nf.S)
    T_inv = unimodular_inverse(T)
    if k == 0:
        return _Setup(ImageDescription("W_zero", **common), reduced, None, S_inv, T_inv)
    if k == m:
        return _Setup(ImageDescription("rankn_W", **common), reduced, None, S_inv, T_inv)
    adapted = endo_conjugate(reduced, T)
    At = adapted.A
    assert all(At[i][j] == 0 for i in range(k, m) for j in range(k))
    A1 = tuple(row[:k] for row in At[:k])
    desc = ImageDescription("general", **common, A1=A1, q1=adapted.q[:k])
    return _Setup(desc, reduced, adapted, S_inv, T_inv)


def image_description(phi):
    return _setup(phi).desc


def _decide_reduced(setup, fbar):
    """Obstruction (zero iff member) of the reduced problem, in reduced coordinates."""
    desc = setup.desc
    if desc.route == "W_zero":
        return LaurentPoly.constant(fbar.nvars, fbar.constant_term())
    if desc.route == "rankn_W":
        return averaging_projector(setup.reduced, desc.s, fbar)
    k = desc.k
    ftil = substitute_exponents(fbar, setup.T_inv)
    a0 = ftil.filter_terms(lambda e: not any(e[k:]))
    e0 = averaging_projector(setup.adapted, desc.s, a0)
    return substitute_exponents(e0, desc.T)


def image_member_ederivation(phi, f, *, witness=True, cap=DEFAULT_CAP):
    """Decide ``f in im(I - phi)`` for a locally finite ``phi``."""
    if f.nvars != phi.nvars:
        raise DimensionError("endomorphism and polynomial live in different algebras")
    setup = _setup(phi)
    desc = setup.desc
    n = f.nvars
    if phi.is_zero:
        return MembershipReport(True, "A_zero", witness=f if witness else None)
    if desc.k0 == n:
        report = kernel_ideal_member(phi.q, f)
        return report if witness else MembershipReport(report.member, report.route, obstruction=report.obstruction)

    k0 = desc.k0
    f1 = substitute_exponents(f, setup.S_inv)
    if k0:
        fbar_n = f1.evaluate_partial({i: desc.q_conj[i] for i in range(k0)})
        f_ideal = f1 - fbar_n
    else:
        fbar_n, f_ideal = f1, None
    fbar = _restrict(fbar_n, k0)

    route = desc.route
    if k0 and not fbar:
        route = "reduced"
        obstruction = fbar
    else:
        obstruction = _decide_reduced(setup, fbar)
    if obstruction:
        back = substitute_exponents(_embed(obstruction, n, k0), desc.S)
        return MembershipReport(False, route, obstruction=back)
    if not witness:
        return MembershipReport(True, route)

    gbar, _ = _closure_solve(setup.reduced, fbar, cap)
    if gbar is None:
        raise AssertionError("cascade and orbit solve disagree")
    g1 = _embed(gbar, n, k0)
    if f_ideal is not None:
        # phi kills J after conjugation, so elements of J are their own preimages
        g1 = g1 + f_ideal
    g = substitute_exponents(g1, desc.S)
    if g - endo_apply(phi, g) != f:
        raise AssertionError("witness failed verification")
    return MembershipReport(True, route, witness=g)


def poly_variant_member(phi, f, cap=DEFAULT_CAP):
    """Membership in ``(I - psi)(Q[x])`` for ``psi = phi`` restricted to polynomials.

    Requires a nonnegative exponent matrix and a polynomial ``f``.  The image
    is ``im(I - phi)`` intersected with ``Q[x]``; the witness is a polynomial.
    """
    if phi.is_zero:
        return MembershipReport(True, "A_zero", witness=f)
    if any(v < 0 for row in phi.A for v in row):
        raise ValueError("exponent matrix has a negative entry")
    if not f.is_polynomial():
        raise ValueError("f has a negative exponent")
    decided = image_member_ederivation(phi, f, witness=False)
    witness, _ = _closure_solve(phi, f, cap)
    if (witness is not None) != decided.member:
        raise AssertionError("cascade and polynomial orbit solve disagree")
    if witness is not None:
        assert witness.is_polynomial()
    return MembershipReport(decided.member, decided.route, witness=witness, obstruction=decided.obstruction)
