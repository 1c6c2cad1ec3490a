"""Invariant section rings on the symmetric square of an elliptic curve.

The ambient object is Q[z1,x1,y1,z2,x2,y2] modulo the two Weierstrass
relations y_i^2 = x_i^3 + a*x_i*z_i^4 + b*z_i^6.  That quotient is a
free module with basis {1,y1} x {1,y2} over the z,x-subring, so every
element has a unique y-reduced normal form and all the ring-theoretic
questions in this module become exact linear algebra on normal-form
coordinates; no Groebner machinery is needed or used here.

Conventions.  Per factor the variables z,x,y carry degrees 1,2,3; an
element of the m-th graded piece of the invariant ring has bidegree
(m,m).  The factor swap sigma exchanges the two variable groups.  The
gluing parameters alpha, beta can be rational numbers or, in symbolic
mode, two extra ring variables (degree 0 for the bidegree bookkeeping).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg
from .poly import Polynomial, WeightedRing

GEOM_VARS = ("z1", "x1", "y1", "z2", "x2", "y2")
FACTOR1_WEIGHTS = (1, 2, 3, 0, 0, 0)
FACTOR2_WEIGHTS = (0, 0, 0, 1, 2, 3)

NUMERIC_RING = WeightedRing(GEOM_VARS, (1, 2, 3, 1, 2, 3))
SYMBOLIC_RING = WeightedRing(GEOM_VARS + ("al", "be"), (1, 2, 3, 1, 2, 3, 1, 1))


class S2EError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassParams:
    """Coefficients of y^2 = x^3 + a*x*z^4 + b*z^6 with nonzero discriminant."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if 4 * self.a ** 3 + 27 * self.b ** 2 == 0:
            raise S2EError("singular Weierstrass equation: 4a^3 + 27b^2 = 0")


@dataclass(frozen=True)
class GluingParams:
    """The (alpha, beta) of the conductor section; generic means both nonzero."""

    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.alpha == 0 and self.beta == 0:
            raise S2EError("(alpha, beta) must not both vanish")

    @property
    def generic(self) -> bool:
        return self.alpha != 0 and self.beta != 0


class Context:
    """Weierstrass data plus the choice of numeric or symbolic gluing."""

    def __init__(self, params: WeierstrassParams,
                 glue: Optional[GluingParams] = None, symbolic: bool = False):
        self.params = params
        self.glue = glue
        self.symbolic = symbolic
        self.ring = SYMBOLIC_RING if symbolic else NUMERIC_RING
        R = self.ring
        if symbolic:
            self.alpha = R.var("al")
            self.beta = R.var("be")
        elif glue is not None:
            self.alpha = R.const(glue.alpha)
            self.beta = R.const(glue.beta)
        else:
            self.alpha = self.beta = None
        z1, x1, y1 = R.var("z1"), R.var("x1"), R.var("y1")
        z2, x2, y2 = R.var("z2"), R.var("x2"), R.var("y2")
        a, b = params.a, params.b
        # y_i^2 rewrites to these
        self.rhs1 = x1 ** 3 + x1 * z1 ** 4 * a + z1 ** 6 * b
        self.rhs2 = x2 ** 3 + x2 * z2 ** 4 * a + z2 ** 6 * b
        self._pow1: Dict[int, Polynomial] = {0: R.one(), 1: self.rhs1}
        self._pow2: Dict[int, Polynomial] = {0: R.one(), 1: self.rhs2}
        self.iy1 = R.index("y1")
        self.iy2 = R.index("y2")

    # -- normal form -----------------------------------------------------

    def _rhs_power(self, cache, base, k):
        if k not in cache:
            cache[k] = cache[k - 1] * base
        return cache[k]

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Unique representative with y-exponents at most 1."""
        if p.ring != self.ring:
            raise S2EError("polynomial from a different context")
        R = self.ring
        out = R.zero()
        for e, c in p.terms.items():
            k1, r1 = divmod(e[self.iy1], 2)
            k2, r2 = divmod(e[self.iy2], 2)
            base = list(e)
            base[self.iy1] = r1
            base[self.iy2] = r2
            term = R.monomial(tuple(base), c)
            if k1:
                term = term * self._rhs_power(self._pow1, self.rhs1, k1)
            if k2:
                term = term * self._rhs_power(self._pow2, self.rhs2, k2)
            out = out + term
        if any(e[self.iy1] > 1 or e[self.iy2] > 1 for e in out.terms):
            # rhs powers are y-free, so one pass suffices; guard anyway
            return self.normal_form(out)
        return out

    def nf_mul(self, p: Polynomial, q: Polynomial) -> Polynomial:
        return self.normal_form(p * q)

    def swap_factors(self, p: Polynomial) -> Polynomial:
        """The involution sigma exchanging the two elliptic-curve factors."""
        terms = {}
        for e, c in p.terms.items():
            e2 = (e[3], e[4], e[5], e[0], e[1], e[2]) + tuple(e[6:])
            terms[e2] = c
        return Polynomial(self.ring, terms)

    def bidegree(self, p: Polynomial):
        """Per-factor weighted degrees (d1, d2); parameters count zero."""
        if p.is_zero():
            raise S2EError("bidegree of zero undefined")
        w1 = FACTOR1_WEIGHTS + (0,) * (self.ring.nvars - 6)
        w2 = FACTOR2_WEIGHTS + (0,) * (self.ring.nvars - 6)
        ds = {(sum(a * w for a, w in zip(e, w1)),
               sum(a * w for a, w in zip(e, w2))) for e in p.terms}
        if len(ds) > 1:
            return "inhomogeneous"
        return ds.pop()

    # -- generators --------------------------------------------------------

    def t_generators(self) -> Tuple[Polynomial, ...]:
        """The seven invariant generators t0..t6 of the section ring."""
        R = self.ring
        z1, x1, y1 = R.var("z1"), R.var("x1"), R.var("y1")
        z2, x2, y2 = R.var("z2"), R.var("x2"), R.var("y2")
        t0 = z1 * z2
        t1 = x1 * x2
        t2 = z1 ** 2 * x2 + x1 * z2 ** 2
        t3 = y1 * y2
        t4 = z1 * x1 * y2 + y1 * z2 * x2
        t5 = z1 ** 3 * y2 + y1 * z2 ** 3
        t6 = z1 * y1 * x2 ** 2 + x1 ** 2 * z2 * y2
        return (t0, t1, t2, t3, t4, t5, t6)

    def s_elements(self) -> dict:
        """s0..s4 and the two degree-4 conductor elements l1, l2.

        The coefficient formulas are pinned by the requirements that
        l1, l2 vanish on the conductor curve, that s1, s2, s3 restrict
        there to A*B, B^2, B^3 for suitable generators A, B of the
        quotient ring of the conductor, and by the two exact identities
        checked in s_generators.  (Swapping the roles of t1 and t2 in
        every formula below produces a second family that satisfies the
        same two identities but fails the vanishing requirement; the
        convention here is the geometrically consistent one.)
        """
        if self.alpha is None:
            raise S2EError("gluing parameters required")
        t0, t1, t2, t3, t4, t5, _ = self.t_generators()
        a, b = self.params.a, self.params.b
        al, be = self.alpha, self.beta
        s0 = t0
        s1 = al * t1 + be * t2
        s2 = (al * be * (2 * b) - be * be * a) * t0 ** 2 + al * al * b * t2 \
            + (al * al * a + be * be) * t1
        s3 = (al ** 3 * b * b + be ** 3 * b) * t0 ** 3 \
            + (al ** 3 * a * b + al * be * be * (3 * b) - be ** 3 * a) * t0 * t2 \
            + (al ** 3 * a * a + al * al * be * (3 * b)) * t0 * t1 \
            + (-al ** 3 * b + al * al * be * a + be ** 3) * t3
        s4 = al * t4 + be * t5
        l1 = (al * b - be * a) * t0 ** 4 + be * t0 ** 2 * t1 - be * t2 ** 2 \
            - al * t1 * t2 - al * t0 * t3
        l2 = be * b * t0 ** 4 + al * a * t0 ** 2 * t1 + al * b * t0 ** 2 * t2 \
            - al * t1 ** 2 - be * t1 * t2 + be * t0 * t3
        return {"s0": s0, "s1": s1, "s2": s2, "s3": s3, "s4": s4,
                "l1": l1, "l2": l2}


# -- single-factor monomial basis --------------------------------------------


def factor_basis(m: int) -> List[Tuple[int, int, int]]:
    """Exponents (i,j,k) with i+2j+3k = m and k <= 1: a basis of the
    degree-m piece of one Weierstrass section ring.  Has m elements."""
    out = []
    for k in (0, 1):
        top = m - 3 * k
        if top < 0:
            continue
        for j in range(top // 2 + 1):
            out.append((top - 2 * j, j, k))
    return sorted(out)


def invariant_basis(ctx: Context, m: int) -> List[Polynomial]:
    """Basis of the sigma-invariants of bidegree (m,m): the elements
    v_i (x) v_i and v_i (x) v_j + v_j (x) v_i.  Size m(m+1)/2."""
    if not 1 <= m <= 8:
        raise S2EError("m out of range (1..8)")
    mons = factor_basis(m)
    R = ctx.ring
    pad = (0,) * (R.nvars - 6)
    out = []
    for p in range(len(mons)):
        i, j, k = mons[p]
        for q in range(p, len(mons)):
            i2, j2, k2 = mons[q]
            e1 = (i, j, k, i2, j2, k2) + pad
            if p == q:
                out.append(R.monomial(e1))
            else:
                e2 = (i2, j2, k2, i, j, k) + pad
                out.append(R.monomial(e1) + R.monomial(e2))
    return out


# -- coordinates --------------------------------------------------------------


def _coordinates(polys: Sequence[Polynomial]):
    """Coefficient matrix of polynomials w.r.t. their joint monomial support.

    Returns (matrix, monomials); rows are indexed by monomials, columns
    by the input polynomials.
    """
    support = sorted(set().union(*[set(p.terms) for p in polys])) if polys else []
    M = [[p.terms.get(mono, Fraction(0)) for p in polys] for mono in support]
    return M, support


# -- the operations ------------------------------------------------------------


def antidiagonal_kernel(ctx: Context, m: int) -> List[Polynomial]:
    """Invariants of bidegree (m,m) vanishing on the antidiagonal.

    The antidiagonal is the image of p -> (p, -p); in Weierstrass
    coordinates the substitution is (z2,x2,y2) -> (z1,x1,-y1) followed
    by reduction modulo the single remaining relation.
    """
    if not 1 <= m <= 6:
        raise S2EError("m out of range (1..6)")
    basis = invariant_basis(ctx, m)
    restricted = [_restrict_antidiagonal(ctx, p) for p in basis]
    M, _ = _coordinates(restricted)
    ker = linalg.nullspace(M) if M else [
        [Fraction(1 if i == j else 0) for j in range(len(basis))]
        for i in range(len(basis))]
    out = []
    for v in ker:
        el = ctx.ring.zero()
        for c, p in zip(v, basis):
            if c:
                el = el + p.scale(c)
        out.append(el)
    return out


def _restrict_antidiagonal(ctx: Context, p: Polynomial) -> Polynomial:
    R = ctx.ring
    terms: Dict[tuple, Fraction] = {}
    for e, c in p.terms.items():
        sign = -1 if e[5] % 2 else 1
        e2 = (e[0] + e[3], e[1] + e[4], e[2] + e[5], 0, 0, 0) + tuple(e[6:])
        terms[e2] = terms.get(e2, Fraction(0)) + sign * c
    folded = Polynomial(R, terms)
    return ctx.normal_form(folded)


def conductor_vanishing_basis(ctx: Context, m: int) -> List[Polynomial]:
    """Invariants p of bidegree (m,m) vanishing on the conductor curve.

    Criterion: p vanishes on the conductor iff p*t4 = s4*h for some
    invariant h of bidegree (m,m), an identity of divisors valid for
    generic gluing parameters.  Solved as exact linear algebra in
    normal-form coordinates; refuses non-generic glue.
    """
    if not 2 <= m <= 5:
        raise S2EError("m out of range (2..5)")
    if ctx.symbolic:
        raise S2EError("conductor basis needs numeric gluing parameters")
    if ctx.glue is None or not ctx.glue.generic:
        raise S2EError("non-generic conductor")
    t4 = ctx.t_generators()[4]
    s4 = ctx.s_elements()["s4"]
    basis = invariant_basis(ctx, m)
    lhs = [ctx.nf_mul(p, t4) for p in basis]
    rhs = [ctx.nf_mul(p, -s4) for p in basis]
    M, _ = _coordinates(lhs + rhs)
    ker = linalg.nullspace(M)
    out = []
    seen_rows: List[List[Fraction]] = []
    for v in ker:
        coeffs = v[:len(basis)]
        if not any(coeffs):
            # would mean s4*h = 0 with h != 0; impossible in a domain
            raise S2EError("degenerate conductor system")
        seen_rows.append(list(coeffs))
    # canonicalise the p-projection
    reduced, pivots = linalg.rref(seen_rows) if seen_rows else ([], [])
    for r in range(len(pivots)):
        el = ctx.ring.zero()
        for c, p in zip(reduced[r], basis):
            if c:
                el = el + p.scale(c)
        out.append(el)
    return out


class IdentityError(RuntimeError):
    """A closed-form coefficient identity failed; carries the residual."""

    def __init__(self, message: str, residual: Polynomial):
        super().__init__(f"{message}: residual {residual!r}")
        self.residual = residual


def s_generators(ctx: Context) -> dict:
    """The elements s0..s4 plus the two exact identities tying them to
    l1, l2 and the degree-4 kernel.

    Identity I:  s0^2*s2 - s1^2 - (beta*l1 + alpha*l2) is a scalar
    multiple of t0*s4 (the scalar is solved for; it comes out 0).
    Identity II: s1*s2 + b*alpha^2*l1 + (a*alpha^2+beta^2)*l2 = t0*s3.
    Both are verified in normal form; failure raises IdentityError.
    """
    els = ctx.s_elements()
    t0 = ctx.t_generators()[0]
    a, b = ctx.params.a, ctx.params.b
    al, be = ctx.alpha, ctx.beta
    s0, s1, s2, s3, s4 = (els[k] for k in ("s0", "s1", "s2", "s3", "s4"))
    l1, l2 = els["l1"], els["l2"]

    lhs1 = ctx.normal_form(s0 ** 2 * s2 - s1 ** 2 - (be * l1 + al * l2))
    t0s4 = ctx.normal_form(t0 * s4)
    scalar = _proportionality_scalar(lhs1, t0s4)
    if scalar is None:
        raise IdentityError("identity I (degree-4 kernel) failed", lhs1)

    lhs2 = ctx.normal_form(
        s1 * s2 + al * al * b * l1 + (al * al * a + be * be) * l2 - t0 * s3)
    if not lhs2.is_zero():
        raise IdentityError("identity II (s3 pinning) failed", lhs2)

    els["identity1_scalar"] = scalar
    els["identity1_ok"] = True
    els["identity2_ok"] = True
    return els


def _proportionality_scalar(p: Polynomial, q: Polynomial):
    """c with p = c*q, if one exists (Fraction; 0 when p = 0)."""
    if p.is_zero():
        return Fraction(0)
    if q.is_zero():
        return None
    e, c = next(iter(sorted(q.terms.items())))
    if e not in p.terms:
        return None
    ratio = p.terms[e] / c
    return ratio if p == q.scale(ratio) else None


# -- theorem relations ---------------------------------------------------------

# coefficient patterns of the two defining relations of the canonical model,
# as maps (exponents of x,y1,y2) -> polynomial in a, b, alpha, beta


def _b1_poly(R: WeightedRing, X, Y1, Y2, a: Fraction, b: Fraction) -> Polynomial:
    return -(X ** 6 * b * b + X ** 4 * Y1 * a * b + Y1 ** 3 * b + X ** 4 * Y2 * a * a
             - X ** 2 * Y1 * Y2 * (3 * b) + Y1 ** 2 * Y2 * a - X ** 2 * Y2 ** 2 * (2 * a)
             + Y2 ** 3)


def _a2_poly(R, X, Y1, Y2, al, be) -> Polynomial:
    return -(X ** 2 * be * be * 2 + Y1 * al * be * 2 + Y2 * al * al * 2)


def _b2_poly(R, X, Y1, Y2, a, b, al, be) -> Polynomial:
    return -(X ** 6 * be * be * (2 * b)
             + X ** 4 * Y1 * (al * be * (2 * b) + be * be * a)
             + X ** 2 * Y1 ** 2 * (al * al * b)
             + Y1 ** 3 * be * be
             + X ** 4 * Y2 * (al * al * (-2 * b) + al * be * (4 * a))
             + X ** 2 * Y1 * Y2 * (al * al * a - be * be * 3)
             + Y1 ** 2 * Y2 * (al * be * 2)
             - X ** 2 * Y2 ** 2 * (al * be * 4)
             + Y1 * Y2 ** 2 * al * al)


def verify_theorem_relations(ctx: Context) -> dict:
    """Search the generator assignments realising the model relations.

    The target presentation is r1 = z1^2 + b1(x,y1,y2) and
    r2 = z2^2 + x*z1*a2(x,y1,y2) + b2(x,y1,y2).  Candidate images: the
    constructed generator system (s0,s1,s2) with z-pair (s3,s4) or
    (s4,s3), and the equivalent raw system (t0,t2,t1) with z-pair
    (t3,s4) or (s4,t3).  Each candidate gets a z-rescaling z1->l*z1,
    z2->u*z2 solved linearly from normal-form coordinates; success
    means both relations reduce exactly to zero.  Exactly one
    assignment is expected to succeed.
    """
    if ctx.alpha is None:
        raise S2EError("gluing parameters required")
    if not ctx.symbolic and not ctx.glue.generic:
        raise S2EError("non-generic conductor")
    els = s_generators(ctx)
    t = ctx.t_generators()
    a, b = ctx.params.a, ctx.params.b
    al, be = ctx.alpha, ctx.beta

    candidates = [
        ("s-system z=(s3,s4)", els["s0"], els["s1"], els["s2"], els["s3"], els["s4"]),
        ("s-system z=(s4,s3)", els["s0"], els["s1"], els["s2"], els["s4"], els["s3"]),
        ("t-system z=(t3,s4)", t[0], t[2], t[1], t[3], els["s4"]),
        ("t-system z=(s4,t3)", t[0], t[2], t[1], els["s4"], t[3]),
    ]
    if ctx.symbolic:
        return _verify_relations_symbolic(ctx, candidates, a, b, al, be)

    results = []
    successes = []
    for name, X, Y1, Y2, Z1, Z2 in candidates:
        res = _try_assignment(ctx, X, Y1, Y2, Z1, Z2, a, b, al, be)
        res["assignment"] = name
        results.append(res)
        if res["success"]:
            successes.append(name)
    if len(successes) != 1:
        raise S2EError(
            f"expected exactly one succeeding assignment, got {successes}; "
            f"residual report: {[(r['assignment'], r['reason']) for r in results]}")
    return {"assignments": results, "succeeding": successes[0]}


def _try_assignment(ctx, X, Y1, Y2, Z1, Z2, a, b, al, be) -> dict:
    nf = ctx.normal_form
    b1 = nf(_b1_poly(ctx.ring, X, Y1, Y2, a, b))
    a2 = nf(_a2_poly(ctx.ring, X, Y1, Y2, al, be))
    b2 = nf(_b2_poly(ctx.ring, X, Y1, Y2, a, b, al, be))
    z1sq = nf(Z1 * Z1)
    # r1: lam2 * z1^2 + b1 = 0
    lam2 = _proportionality_scalar(-b1, z1sq)
    if lam2 is None or lam2 == 0:
        return {"success": False, "reason": "no z1-rescaling solves r1",
                "lambda2": None, "mu2": None, "lambda": None}
    # r2: mu2 * z2^2 + lam * (x*z1*a2) + b2 = 0, linear in (mu2, lam)
    z2sq = nf(Z2 * Z2)
    cross = nf(X * Z1 * a2)
    support = sorted(set(z2sq.terms) | set(cross.terms) | set(b2.terms))
    M = [[z2sq.terms.get(mono, Fraction(0)), cross.terms.get(mono, Fraction(0))]
         for mono in support]
    rhs_vec = [-b2.terms.get(mono, Fraction(0)) for mono in support]
    sol = linalg.solve(M, rhs_vec)
    if sol is None:
        return {"success": False, "reason": "r2 has no (mu^2, lambda) solution",
                "lambda2": str(lam2), "mu2": None, "lambda": None}
    mu2, lam = sol
    if mu2 == 0 or lam * lam != lam2:
        return {"success": False,
                "reason": "r2 solution inconsistent with r1 rescaling",
                "lambda2": str(lam2), "mu2": str(mu2), "lambda": str(lam)}
    # final exact check
    r1 = nf(z1sq.scale(lam2) + b1)
    r2 = nf(z2sq.scale(mu2) + cross.scale(lam) + b2)
    ok = r1.is_zero() and r2.is_zero()
    return {"success": ok, "reason": "ok" if ok else "nonzero residual",
            "lambda2": str(lam2), "mu2": str(mu2), "lambda": str(lam)}


def _verify_relations_symbolic(ctx, candidates, a, b, al, be) -> dict:
    """Discover the assignment at a fixed generic specialisation, then
    confirm the relations as exact identities in Q[alpha, beta]."""
    probe_params = ctx.params
    probe = Context(probe_params, GluingParams(Fraction(5, 7), Fraction(3, 11)))
    probe_result = verify_theorem_relations(probe)
    winner = probe_result["succeeding"]
    idx = [c[0] for c in candidates].index(winner)
    name, X, Y1, Y2, Z1, Z2 = candidates[idx]
    lam2 = Fraction(probe_result["assignments"][idx]["lambda2"])
    lam = Fraction(probe_result["assignments"][idx]["lambda"])
    mu2 = Fraction(probe_result["assignments"][idx]["mu2"])
    nf = ctx.normal_form
    b1 = nf(_b1_poly(ctx.ring, X, Y1, Y2, a, b))
    a2 = nf(_a2_poly(ctx.ring, X, Y1, Y2, al, be))
    b2 = nf(_b2_poly(ctx.ring, X, Y1, Y2, a, b, al, be))
    r1 = nf((Z1 * Z1).scale(lam2) + b1)
    r2 = nf((Z2 * Z2).scale(mu2) + (X * Z1 * a2).scale(lam) + b2)
    if not (r1.is_zero() and r2.is_zero()):
        raise S2EError(f"symbolic relations fail for assignment {name}")
    report = {"assignments": [{"assignment": name, "success": True,
                               "reason": "symbolic identity",
                               "lambda2": str(lam2), "mu2": str(mu2),
                               "lambda": str(lam)}],
              "succeeding": name, "symbolic": True}
    return report


def generation_check(ctx: Context, upto: int,
                     generators: Optional[Sequence[Polynomial]] = None) -> bool:
    """Do monomials in t0..t6 span every graded piece up to degree `upto`?"""
    if upto > 6:
        raise S2EError("upto must be at most 6")
    gens = list(generators) if generators is not None else list(ctx.t_generators())
    degs = []
    for g in gens:
        d = ctx.bidegree(ctx.normal_form(g))
        if d == "inhomogeneous" or d[0] != d[1]:
            raise S2EError("generators must have diagonal bidegree")
        degs.append(d[0])
    for m in range(1, upto + 1):
        prods = []
        for exps in _weighted_tuples(degs, m):
            p = ctx.ring.one()
            for g, e in zip(gens, exps):
                for _ in range(e):
                    p = ctx.nf_mul(p, g)
            prods.append(p)
        M, _ = _coordinates(prods) if prods else ([], [])
        if linalg.rank(M) != m * (m + 1) // 2:
            return False
    return True


def _weighted_tuples(weights: Sequence[int], total: int) -> List[Tuple[int, ...]]:
    if not weights:
        return [()] if total == 0 else []
    out = []
    for k in range(total // weights[0] + 1):
        for rest in _weighted_tuples(weights[1:], total - k * weights[0]):
            out.append((k,) + rest)
    return out


# -- convenience: full pipeline report ----------------------------------------


def pipeline_report(params: WeierstrassParams, glue: GluingParams) -> dict:
    """Everything the verification needs for one parameter tuple."""
    from . import poly as polymod

    ctx = Context(params, glue)
    dims = {m: len(invariant_basis(ctx, m)) for m in range(1, 7)}
    anti3 = antidiagonal_kernel(ctx, 3)
    cond = {m: conductor_vanishing_basis(ctx, m) for m in range(2, 6)}
    gens = s_generators(ctx)
    thm = verify_theorem_relations(ctx)
    return {
        "params": {"a": str(params.a), "b": str(params.b),
                   "alpha": str(glue.alpha), "beta": str(glue.beta)},
        "invariant_dims": {str(m): d for m, d in dims.items()},
        "antidiagonal_kernel_dim_3": len(anti3),
        "antidiagonal_kernel_3": [polymod.to_json(p) for p in anti3],
        "conductor_dims": {str(m): len(v) for m, v in cond.items()},
        "conductor_bases": {str(m): [polymod.to_json(p) for p in v]
                            for m, v in cond.items()},
        "identity1_ok": gens["identity1_ok"],
        "identity1_scalar": str(gens["identity1_scalar"]),
        "identity2_ok": gens["identity2_ok"],
        "generation_upto_6": generation_check(ctx, 6),
        "theorem": thm,
    }
