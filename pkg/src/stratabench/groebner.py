"""Groebner bases, normal forms, elimination, resultants and gcd over Q.

Buchberger's algorithm with the Gebauer-Moeller refinements of the two
classical pair-pruning criteria (coprime leading monomials, chain
criterion) and normal selection (minimal lcm in the term order).  The
workloads in this package stay below eight variables and total degree
about twelve, for which this implementation is entirely adequate.

Every computation is budgeted: a step counter aborts with
BudgetExceeded instead of hanging on an unexpectedly hard input.  The
default budget can be overridden per call or through the
STRATABENCH_STEP_BUDGET environment variable.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .poly import Exponent, Polynomial, PolynomialError, WeightedRing, revlex_key

DEFAULT_STEP_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """A Groebner computation exceeded its step budget."""


def step_budget(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("STRATABENCH_STEP_BUDGET")
    if env:
        return int(env)
    return DEFAULT_STEP_BUDGET


@dataclass(frozen=True)
class MonomialOrder:
    """Weight-graded revlex, or a block elimination order.

    For a block order the first `split` ring variables form the
    eliminated block: any monomial containing one of them is larger
    than every monomial in the remaining variables alone.
    """

    kind: str = "weighted-graded-revlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("weighted-graded-revlex", "block-elimination"):
            raise PolynomialError(f"unknown order kind {self.kind!r}")
        if self.kind == "block-elimination" and self.split < 1:
            raise PolynomialError("block order needs a positive split")

    def key(self, exp: Exponent, weights: Sequence[int]):
        if self.kind == "weighted-graded-revlex":
            d = sum(e * w for e, w in zip(exp, weights))
            return (d,) + revlex_key(exp)
        s = self.split
        e1, e2 = exp[:s], exp[s:]
        d1 = sum(e * w for e, w in zip(e1, weights[:s]))
        d2 = sum(e * w for e, w in zip(e2, weights[s:]))
        return (d1,) + revlex_key(e1) + (d2,) + revlex_key(e2)


GREVLEX = MonomialOrder()


def _leading(p: Polynomial, order: MonomialOrder) -> Tuple[Exponent, Fraction]:
    w = p.ring.weights
    e = max(p.terms, key=lambda m: order.key(m, w))
    return e, p.terms[e]


def leading_monomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> Exponent:
    if p.is_zero():
        raise PolynomialError("zero polynomial has no leading monomial")
    return _leading(p, order)[0]


def monic(p: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    if p.is_zero():
        return p
    _, c = _leading(p, order)
    return p.scale(1 / c)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def _mul_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self, n: int = 1):
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded(
                "step budget exhausted; raise STRATABENCH_STEP_BUDGET if intended")


def _reduce_terms(
    terms: Dict[Exponent, Fraction],
    divisors: Sequence[Tuple[Exponent, Dict[Exponent, Fraction]]],
    order: MonomialOrder,
    weights: Sequence[int],
    budget: _Budget,
) -> Dict[Exponent, Fraction]:
    """Full remainder of a term dict modulo monic divisors (lm, terms)."""
    work = dict(terms)
    remainder: Dict[Exponent, Fraction] = {}
    heap = [(tuple(-x for x in order.key(e, weights)), e) for e in work]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        for lm, gterms in divisors:
            if _divides(lm, e):
                budget.spend()
                shift = _sub(e, lm)
                for ge, gc in gterms.items():
                    if ge == lm:
                        continue
                    m = _mul_exp(ge, shift)
                    prev = work.get(m)
                    s = (prev or 0) - c * gc
                    if s:
                        work[m] = s
                        if prev is None:
                            heapq.heappush(
                                heap,
                                (tuple(-x for x in order.key(m, weights)), m))
                    else:
                        work.pop(m, None)
                break
        else:
            remainder[e] = c
    return remainder


def normal_form(
    p: Polynomial,
    basis,
    order: Optional[MonomialOrder] = None,
    budget: Optional[int] = None,
) -> Polynomial:
    """Remainder of multivariate division of p by a basis.

    When `basis` is a GroebnerBasis the remainder is the unique normal
    form, so `normal_form(p, gb) == 0` decides ideal membership.
    """
    if isinstance(basis, GroebnerBasis):
        gens = basis.generators
        order = basis.order if order is None else order
    else:
        gens = list(basis)
        order = order or GREVLEX
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return p
    ring = p.ring
    if any(g.ring != ring for g in gens):
        raise PolynomialError("mixed rings")
    b = _Budget(step_budget(budget))
    divisors = []
    for g in gens:
        lm, lc = _leading(g, order)
        divisors.append((lm, {e: c / lc for e, c in g.terms.items()}))
    return Polynomial(ring, _reduce_terms(p.terms, divisors, order, ring.weights, b))


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[Polynomial, ...]
    order: MonomialOrder
    reduced_flag: bool = True

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def contains(self, p: Polynomial, budget: Optional[int] = None) -> bool:
        return normal_form(p, self, budget=budget).is_zero()


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = GREVLEX,
    budget: Optional[int] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of (gens), deterministic for fixed input."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise PolynomialError("no nonzero generators")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise PolynomialError("mixed rings")
    w = ring.weights
    b = _Budget(step_budget(budget))

    G: List[Polynomial] = []
    lmG: List[Exponent] = []
    pairs: set = set()

    def update(f: Polynomial):
        """Gebauer-Moeller update of the pair set with the new basis element."""
        lmf = _leading(f, order)[0]
        n = len(G)
        kept = set()
        for (i, j) in pairs:
            lij = _lcm(lmG[i], lmG[j])
            if (not _divides(lmf, lij)
                    or lij == _lcm(lmG[i], lmf)
                    or lij == _lcm(lmG[j], lmf)):
                kept.add((i, j))
        new_lcms: Dict[Exponent, List[int]] = {}
        for i in range(n):
            new_lcms.setdefault(_lcm(lmG[i], lmf), []).append(i)
        minimal: List[Exponent] = []
        for L in sorted(new_lcms, key=lambda m: order.key(m, w)):
            if all(not _divides(M, L) for M in minimal):
                minimal.append(L)
        for L in minimal:
            # coprime criterion: drop the pair if some representative is coprime
            if any(_lcm(lmG[i], lmf) == _mul_exp(lmG[i], lmf) for i in new_lcms[L]):
                continue
            kept.add((min(new_lcms[L]), n))
        G.append(monic(f, order))
        lmG.append(lmf)
        pairs.clear()
        pairs.update(kept)

    for g in sorted(gens, key=lambda p: order.key(_leading(p, order)[0], w)):
        update(g)

    while pairs:
        b.spend()
        i, j = min(pairs, key=lambda ij: (order.key(_lcm(lmG[ij[0]], lmG[ij[1]]), w), ij))
        pairs.discard((i, j))
        L = _lcm(lmG[i], lmG[j])
        s_terms: Dict[Exponent, Fraction] = {}
        for (k, sign) in ((i, 1), (j, -1)):
            shift = _sub(L, lmG[k])
            for e, c in G[k].terms.items():
                m = _mul_exp(e, shift)
                v = s_terms.get(m, 0) + sign * c
                if v:
                    s_terms[m] = v
                else:
                    s_terms.pop(m, None)
        divisors = [(lmG[k], G[k].terms) for k in range(len(G))]
        r = _reduce_terms(s_terms, divisors, order, w, b)
        if r:
            update(Polynomial(ring, r))

    # minimalise
    order_key = lambda m: order.key(m, w)
    idx = sorted(range(len(G)), key=lambda k: order_key(lmG[k]))
    minimal_idx: List[int] = []
    for k in idx:
        if all(not _divides(lmG[m], lmG[k]) for m in minimal_idx):
            minimal_idx.append(k)
    Gmin = [G[k] for k in minimal_idx]
    # interreduce
    reduced: List[Polynomial] = []
    for i, g in enumerate(Gmin):
        others = Gmin[:i] + Gmin[i + 1:]
        divisors = [(_leading(h, order)[0], h.terms) for h in others]
        r = _reduce_terms(g.terms, divisors, order, w, b)
        reduced.append(monic(Polynomial(ring, r), order))
    reduced.sort(key=lambda p: order_key(_leading(p, order)[0]), reverse=True)
    return GroebnerBasis(tuple(reduced), order, True)


def spolynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    """S-polynomial of f and g; used by the self-checking tests."""
    if f.ring != g.ring:
        raise PolynomialError("mixed rings")
    lmf, lcf = _leading(f, order)
    lmg, lcg = _leading(g, order)
    L = _lcm(lmf, lmg)
    mf = f.ring.monomial(_sub(L, lmf), 1 / lcf)
    mg = f.ring.monomial(_sub(L, lmg), 1 / lcg)
    return mf * f - mg * g


# -- elimination -------------------------------------------------------------


def _restrict_ring(ring: WeightedRing, names: Sequence[str]) -> WeightedRing:
    return WeightedRing(tuple(names), tuple(ring.weights[ring.index(n)] for n in names))


def _rename_into(p: Polynomial, target: WeightedRing) -> Polynomial:
    """Map p into target (whose variables are a superset of those used)."""
    pos = [target.index(n) if n in target.names else None for n in p.ring.names]
    terms: Dict[Exponent, Fraction] = {}
    for e, c in p.terms.items():
        out = [0] * target.nvars
        for i, k in enumerate(e):
            if k == 0:
                continue
            if pos[i] is None:
                raise PolynomialError(
                    f"variable {p.ring.names[i]!r} does not exist in target ring")
            out[pos[i]] = k
        terms[tuple(out)] = c
    return Polynomial(target, terms)


def eliminate(
    gens: Sequence[Polynomial],
    drop_vars,
    budget: Optional[int] = None,
) -> List[Polynomial]:
    """Generators of (gens) intersected with the subring without drop_vars.

    Computed via a block elimination order with the dropped variables in
    front; the result lives in the kept-variable subring.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    drop = set(drop_vars)
    unknown = drop - set(ring.names)
    if unknown:
        raise PolynomialError(f"unknown variables {sorted(unknown)}")
    keep = [n for n in ring.names if n not in drop]
    if not keep:
        raise PolynomialError("cannot drop every variable")
    ordered = [n for n in ring.names if n in drop] + keep
    work_ring = _restrict_ring(ring, ordered)
    order = MonomialOrder("block-elimination", split=len(drop))
    gb = buchberger([_rename_into(g, work_ring) for g in gens], order, budget=budget)
    keep_ring = _restrict_ring(ring, keep)
    out = []
    for g in gb:
        if all(n not in drop for n in g.variables_used()):
            out.append(_rename_into(g, keep_ring))
    return out


# -- gcd via ideal intersection ----------------------------------------------


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g, raising if g does not divide f exactly."""
    if g.is_zero():
        raise PolynomialError("division by zero polynomial")
    ring = f.ring
    order = GREVLEX
    w = ring.weights
    lm, lc = _leading(g, order)
    work = dict(f.terms)
    quot: Dict[Exponent, Fraction] = {}
    while work:
        e = max(work, key=lambda m: order.key(m, w))
        c = work[e]
        if not _divides(lm, e):
            raise PolynomialError("not an exact division")
        shift = _sub(e, lm)
        q = c / lc
        quot[shift] = quot.get(shift, 0) + q
        for ge, gc in g.terms.items():
            m = _mul_exp(ge, shift)
            s = work.get(m, 0) - q * gc
            if s:
                work[m] = s
            else:
                work.pop(m, None)
    return Polynomial(ring, quot)


def poly_gcd(f: Polynomial, g: Polynomial, budget: Optional[int] = None) -> Polynomial:
    """Monic gcd, via lcm computed from the intersection (f) ∩ (g).

    The intersection uses the classical tag construction: eliminate T
    from (T*f, (1-T)*g).  For principal ideals the reduced basis of the
    intersection is the single monic lcm, and gcd = f*g / lcm.
    """
    if f.is_zero() or g.is_zero():
        raise PolynomialError("gcd of zero polynomial undefined")
    ring = f.ring
    if g.ring != ring:
        raise PolynomialError("mixed rings")
    tag = "T#"
    while tag in ring.names:
        tag += "#"
    big = WeightedRing((tag,) + ring.names, (1,) + ring.weights)
    fb = _rename_into(f, big)
    gb_ = _rename_into(g, big)
    T = big.var(tag)
    inter = eliminate([T * fb, (big.one() - T) * gb_], {tag}, budget=budget)
    inter = [q for q in inter if not q.is_zero()]
    if len(inter) != 1:
        raise PolynomialError(
            f"intersection of principal ideals not principal ({len(inter)} generators)")
    lcm = _rename_into(inter[0], ring)
    return monic(exact_divide(f * g, lcm))


# -- projective emptiness ----------------------------------------------------


def projective_empty(gens: Sequence[Polynomial], budget: Optional[int] = None) -> bool:
    """Is the projective zero set over C of homogeneous gens empty?

    True iff the quotient by the ideal is a finite-dimensional vector
    space, i.e. every variable has a pure power among the leading
    monomials of the reduced basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    ring = gens[0].ring
    if any(w != 1 for w in ring.weights):
        raise PolynomialError("projective test expects an all-weights-1 ring")
    for g in gens:
        if g.weighted_degree() == "inhomogeneous":
            raise PolynomialError("projective test expects homogeneous generators")
    gb = buchberger(gens, GREVLEX, budget=budget)
    lms = [_leading(g, gb.order)[0] for g in gb]
    for i in range(ring.nvars):
        if not any(all(e[j] == 0 for j in range(ring.nvars) if j != i) and e[i] > 0
                   for e in lms):
            return False
    return True


# -- resultants --------------------------------------------------------------


def coefficients_in(p: Polynomial, name: str) -> List[Polynomial]:
    """Coefficients [c_0, ..., c_d] of p viewed as a polynomial in `name`."""
    i = p.ring.index(name)
    d = p.degree_in(name)
    if d < 0:
        return []
    buckets: List[Dict[Exponent, Fraction]] = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        k = e[i]
        e2 = list(e)
        e2[i] = 0
        buckets[k][tuple(e2)] = c
    return [Polynomial(p.ring, b) for b in buckets]


def _det_bareiss(M: List[List[Polynomial]], ring: WeightedRing) -> Polynomial:
    """Fraction-free determinant over the polynomial ring."""
    n = len(M)
    if n == 0:
        return ring.one()
    A = [row[:] for row in M]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[k][k] * A[i][j] - A[i][k] * A[k][j]
                A[i][j] = exact_divide(num, prev) if not num.is_zero() else ring.zero()
            A[i][k] = ring.zero()
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(f: Polynomial, g: Polynomial, name: str) -> Polynomial:
    """Sylvester resultant of f and g with respect to one variable."""
    if f.ring != g.ring:
        raise PolynomialError("mixed rings")
    cf = coefficients_in(f, name)
    cg = coefficients_in(g, name)
    m, n = len(cf) - 1, len(cg) - 1
    if m < 1 or n < 1:
        raise PolynomialError(f"both inputs need positive degree in {name!r}")
    ring = f.ring
    size = m + n
    zero = ring.zero()
    M = [[zero] * size for _ in range(size)]
    for r in range(n):
        for k, c in enumerate(cf):
            M[r][r + (m - k)] = c
    for r in range(m):
        for k, c in enumerate(cg):
            M[n + r][r + (n - k)] = c
    return _det_bareiss(M, ring)
