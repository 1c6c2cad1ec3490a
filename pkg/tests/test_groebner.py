import random
from fractions import Fraction

import pytest

from stratabench import linalg
from stratabench.groebner import (BudgetExceeded, MonomialOrder,
                                  buchberger, eliminate, exact_divide,
                                  leading_monomial, normal_form, poly_gcd,
                                  projective_empty, resultant, spolynomial)
from stratabench.poly import Polynomial, PolynomialError, WeightedRing

R3 = WeightedRing(("x", "y", "z"), (1, 1, 1))
R1 = WeightedRing(("x",), (1,))


def test_principal_ideal():
    x = R1.var("x")
    gb = buchberger([x])
    assert list(gb) == [x]


def test_two_linear_generators_reduced_form():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    gb = buchberger([x - y, y - z])
    assert set(gb.generators) == {x - z, y - z}
    assert gb.reduced_flag


def test_monomial_ideal_unchanged():
    x, y = R3.var("x"), R3.var("y")
    gens = [x * x, x * y, y * y]
    gb = buchberger(gens)
    assert set(gb.generators) == set(gens)


def test_spolynomials_reduce_to_zero():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    for gens in ([x * y - z * z, x * x - y * z],
                 [x ** 3 - 2 * x * y, x * x * y - 2 * y * y + x],
                 [x + y + z, x * y + y * z + z * x, x * y * z - 1]):
        gb = buchberger(gens)
        for i, f in enumerate(gb):
            for g in gb.generators[i + 1:]:
                assert normal_form(spolynomial(f, g, gb.order), gb).is_zero()


def test_normal_form_examples():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    gb = buchberger([x ** 3 - 2 * x * y, x * x * y - 2 * y * y + x])
    for g in gb:
        assert normal_form(g, gb).is_zero()
    gb2 = buchberger([x - y])
    assert normal_form(x * x, gb2) == y * y
    gb3 = buchberger([x, y, z])
    assert normal_form(R3.one(), gb3) == R3.one()


def test_normal_form_idempotent():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    gb = buchberger([x * y - z * z, x * x - y * z])
    rng = random.Random(3)
    for _ in range(10):
        p = Polynomial(R3, {
            (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3)):
                Fraction(rng.randint(-5, 5)) for _ in range(4)})
        r = normal_form(p, gb)
        assert normal_form(r, gb) == r


def test_linear_membership_agrees_with_gaussian_elimination():
    rng = random.Random(11)
    names = ("x", "y", "z", "w")
    R = WeightedRing(names, (1, 1, 1, 1))
    for _ in range(10):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in names] for _ in range(2)]
        gens = [sum((R.var(n).scale(c) for n, c in zip(names, row)), R.zero())
                for row in rows]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(gens)
        probe_vec = [Fraction(rng.randint(-3, 3)) for _ in names]
        probe = sum((R.var(n).scale(c) for n, c in zip(names, probe_vec)), R.zero())
        base_rank = linalg.rank([r for r in rows if any(r)])
        in_span = linalg.rank([r for r in rows if any(r)] + [probe_vec]) == base_rank
        assert normal_form(probe, gb).is_zero() == in_span


def test_eliminate_parabola():
    R = WeightedRing(("u", "X", "Y"), (1, 1, 1))
    u, X, Y = R.var("u"), R.var("X"), R.var("Y")
    out = eliminate([X - u, Y - u * u], {"u"})
    keep = WeightedRing(("X", "Y"), (1, 1))
    assert out == [keep.var("Y") - keep.var("X") ** 2] or \
        out == [keep.var("X") ** 2 - keep.var("Y")]


def test_eliminate_unit_denominator():
    R = WeightedRing(("u", "v"), (1, 1))
    out = eliminate([R.var("u") * R.var("v") - 1], {"v"})
    assert out == []


def test_eliminate_commutes_with_evaluation():
    # points on the twisted parametrization satisfy the eliminated relations
    R = WeightedRing(("t", "X", "Y", "Z"), (1, 1, 1, 1))
    t, X, Y, Z = (R.var(n) for n in R.names)
    gens = [X - t, Y - t ** 2, Z - t ** 3]
    out = eliminate(gens, {"t"})
    assert out
    for tv in (Fraction(2), Fraction(-1, 3), Fraction(5, 7)):
        point = {"X": tv, "Y": tv ** 2, "Z": tv ** 3}
        for g in out:
            assert g.evaluate(point) == 0


def test_eliminate_all_variables_rejected():
    with pytest.raises(PolynomialError):
        eliminate([R3.var("x")], {"x", "y", "z"})


def test_gcd_examples():
    x, y = R3.var("x"), R3.var("y")
    g = poly_gcd((x - y) * (x + y), (x + y) ** 2)
    assert g == x + y
    assert poly_gcd(x, y) == R3.one()


def test_gcd_divides_and_is_divided():
    rng = random.Random(5)
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    atoms = [x + y, x - z, y + 2 * z, x + y + z]
    for _ in range(6):
        common = atoms[rng.randrange(len(atoms))]
        f = common * atoms[rng.randrange(len(atoms))]
        g = common * atoms[rng.randrange(len(atoms))]
        d = poly_gcd(f, g)
        # d divides both inputs exactly
        exact_divide(f, d)
        exact_divide(g, d)
        # the known common divisor divides d
        exact_divide(d, common)


def test_projective_empty_examples():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    assert projective_empty([x, y, z]) is True
    assert projective_empty([x, y]) is False
    assert projective_empty([x, y ** 3, y * z * z]) is False


def test_projective_empty_requires_unweighted_homogeneous():
    R = WeightedRing(("x", "y"), (1, 2))
    with pytest.raises(PolynomialError):
        projective_empty([R.var("x")])
    x, y = R3.var("x"), R3.var("y")
    with pytest.raises(PolynomialError):
        projective_empty([x + x * y])


def test_resultant_examples():
    R = WeightedRing(("v",), (1,))
    v = R.var("v")
    assert resultant(v * v - 2, v - 1, "v") == R.const(-1)

    S = WeightedRing(("a", "b", "c", "d", "v"), (1, 1, 1, 1, 1))
    a, b, c, d, v = (S.var(n) for n in S.names)
    assert resultant(a * v + b, c * v + d, "v") == a * d - b * c

    with pytest.raises(PolynomialError):
        resultant(a, c * v + d, "v")


def test_resultant_vs_evaluation():
    # res(f, v - r) = (-1)^deg(f) * f(r)
    R = WeightedRing(("v",), (1,))
    v = R.var("v")
    f = v ** 3 - 2 * v + 5
    for r in (Fraction(2), Fraction(-1, 2)):
        g = v - R.const(r)
        assert resultant(f, g, "v") == R.const(-f.evaluate({"v": r}))


def test_budget_exhaustion_raises():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    with pytest.raises(BudgetExceeded):
        buchberger([x ** 3 - 2 * x * y + z, x * x * y - 2 * y * y + x,
                    x * z - y ** 2], budget=3)


def test_determinism():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    gens = [x * y - z * z, x * x - y * z, y ** 3 - x * z * z]
    g1 = buchberger(gens)
    g2 = buchberger(list(reversed(gens)))
    assert list(g1) == list(g2)


def test_block_order_elimination_property():
    # any monomial containing an eliminated (block-1) variable exceeds
    # any monomial in kept variables only
    order = MonomialOrder("block-elimination", split=1)
    w = (1, 1, 1)
    eliminated = (1, 0, 0)
    for kept in ((0, 5, 0), (0, 0, 7), (0, 3, 3)):
        assert order.key(eliminated, w) > order.key(kept, w)


def test_reduced_basis_shape():
    x, y, z = R3.var("x"), R3.var("y"), R3.var("z")
    gb = buchberger([x + y + z, x * y + y * z + z * x, x * y * z - 1])
    assert gb.reduced_flag
    keys = []
    for g in gb:
        lm = leading_monomial(g, gb.order)
        assert g.terms[lm] == 1  # monic
        keys.append(gb.order.key(lm, R3.weights))
        # fully reduced: no other generator's leading monomial divides
        # any monomial of g except its own leading term
        for h in gb:
            if h is g:
                continue
            lmh = leading_monomial(h, gb.order)
            for e in g.terms:
                if e != lm:
                    assert not all(a <= b for a, b in zip(lmh, e))
    assert keys == sorted(keys, reverse=True)
