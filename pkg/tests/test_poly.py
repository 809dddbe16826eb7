"""One-variable polynomials: canonical forms, roots, ghost sums."""

from fractions import Fraction

import pytest

from supertrop import (CommonRoot, HalfTangible, NotGhostSum, Poly, Side,
                       add_shift, analyze_ghost_sum, canonical_full,
                       classify_half_tangible, e_equiv, essential_part,
                       frobenius, function_samples, ggraph, ghost,
                       is_ghost_poly, mul_shift, parse_poly, tangible,
                       tangible_domain, tangible_roots, NEG_INF, POS_INF,
                       ZERO)
from supertrop.checks import Gen

P = parse_poly


def sample_points(f: Poly) -> list:
    return function_samples([f])


def test_evaluate_is_a_homomorphism():
    gen = Gen(101)
    for _ in range(150):
        f = gen.poly(5)
        g = gen.poly(5)
        for a in function_samples([f, g]):
            assert (f + g).evaluate(a) == f.evaluate(a) + g.evaluate(a)
            assert (f * g).evaluate(a) == f.evaluate(a) * g.evaluate(a)


def test_zero_and_constant_evaluation():
    assert Poly.zero().evaluate(tangible(3)) == ZERO
    assert P("5").evaluate(ZERO) == tangible(5)
    # Zero to the zeroth power is the unit: the constant term survives.
    assert P("x + 3").evaluate(ZERO) == tangible(3)
    assert P("x^2").evaluate(ZERO) == ZERO


def test_canonical_is_idempotent_and_function_equal():
    gen = Gen(102)
    for _ in range(200):
        f = gen.poly(6)
        full = canonical_full(f)
        c = full.to_poly()
        assert canonical_full(c).to_poly() == c
        for a in sample_points(f):
            assert f.evaluate(a) == c.evaluate(a), (f, c, a)
        # Corner roots are nondecreasing along the hull.
        corners = full.corner_roots()
        assert all(x <= y for x, y in zip(corners, corners[1:]))


def test_canonical_rejects_zero():
    with pytest.raises(ValueError):
        canonical_full(Poly.zero())


def test_e_equiv_matches_sampled_function_equality():
    gen = Gen(103)
    for _ in range(200):
        f = gen.poly(4)
        g = gen.poly(4) if gen.rng.random() < 0.5 else canonical_full(
            f).to_poly()
        same = all(f.evaluate(a) == g.evaluate(a)
                   for a in function_samples([f, g]))
        assert e_equiv(f, g) == same, (f, g)


def test_essential_part_examples_and_equivalence():
    assert essential_part(P("x^2 + -5*x + 0")) == P("x^2 + 0")
    gen = Gen(104)
    for _ in range(100):
        f = gen.poly(5)
        assert e_equiv(essential_part(f), f)


def test_roots_against_evaluation():
    gen = Gen(105)
    for _ in range(200):
        f = gen.poly(5, 0)
        roots = tangible_roots(f)
        for a in sample_points(f):
            if a.is_zero:
                assert roots.at_bottom == f.evaluate(a).in_ghost_ideal
            elif a.is_tangible:
                member = a.mag in roots
                assert member == f.evaluate(a).in_ghost_ideal, (f, a)


def test_tangible_domain_complements_roots():
    f = P("x^2 + 6v*x + 7")
    assert tangible_domain(f) == ((NEG_INF, Fraction(1)),
                                  (Fraction(6), POS_INF))
    gen = Gen(106)
    for _ in range(50):
        g = gen.poly(4)
        pieces = tangible_domain(g)
        for lo, hi in pieces:
            mid = (Fraction(0) if lo == NEG_INF else lo + 1) \
                if hi == POS_INF else \
                (hi - 1 if lo == NEG_INF else (lo + hi) / 2)
            if lo < mid < hi:
                assert g.evaluate(tangible(mid)).is_tangible


def test_roots_of_products_union():
    gen = Gen(107)
    for _ in range(100):
        f = gen.poly(3)
        g = gen.poly(3)
        lhs = tangible_roots(f * g)
        rhs = tangible_roots(f).union(tangible_roots(g))
        assert lhs == rhs, (f, g)


def test_ggraph_matches_evaluation():
    gen = Gen(108)
    for _ in range(100):
        f = gen.poly(5)
        pl = ggraph(f)
        probes = sorted(set(list(pl.breakpoints)
                            + [b + Fraction(1, 7) for b in pl.breakpoints]
                            + [b - Fraction(1, 7) for b in pl.breakpoints]
                            + [Fraction(0)]))
        for x in probes:
            # Piece index; a breakpoint takes its value from the left piece.
            k = sum(1 for b in pl.breakpoints if b < x)
            mag = pl.intercepts[k] + pl.slopes[k] * x
            at_break = x in pl.breakpoints
            layer = True if at_break else pl.piece_ghost[k]
            if at_break:
                assert pl.breakpoint_ghost[pl.breakpoints.index(x)]
            got = f.evaluate(tangible(x))
            assert got.mag == mag and got.is_ghost == layer, (f, x, got)


def test_ggraph_examples():
    pl = ggraph(P("x^2 + 6v*x + 7"))
    assert pl.slopes == (0, 1, 2)
    assert pl.breakpoints == (Fraction(1), Fraction(6))
    assert pl.piece_ghost == (False, True, False)
    line = ggraph(P("x + 3"))
    assert line.slopes == (0, 1) and line.breakpoints == (Fraction(3),)
    assert ggraph(P("5")).slopes == (0,)


def test_classify_half_tangible_examples():
    assert classify_half_tangible(P("0v*x^2 + 1*x")) == (Side.LEFT,
                                                         Fraction(1))
    assert classify_half_tangible(P("1*x + 0v")) == (Side.RIGHT,
                                                     Fraction(-1))
    assert classify_half_tangible(P("(x+1)*(x+2)")) is None
    assert classify_half_tangible(P("x^2 + 6v*x + 7")) is None


def test_classify_consistent_with_values():
    gen = Gen(109)
    for _ in range(100):
        f = gen.poly(4)
        got = classify_half_tangible(f)
        if got is None:
            continue
        side, c = got
        near = [c - 2, c - Fraction(1, 2), c, c + Fraction(1, 2), c + 2]
        for x in near:
            value = f.evaluate(tangible(x))
            if side is Side.LEFT and x < c:
                assert value.is_tangible
            if side is Side.RIGHT and x > c:
                assert value.is_tangible
            if side is Side.LEFT and x >= c:
                assert value.in_ghost_ideal
            if side is Side.RIGHT and x <= c:
                assert value.in_ghost_ideal


def test_is_ghost_poly_is_functional():
    # A tangible coefficient strictly below the hull does not matter.
    f = Poly({2: ghost(0), 1: tangible(-5), 0: ghost(0)})
    assert is_ghost_poly(f)
    assert not is_ghost_poly(P("x + 1"))
    assert is_ghost_poly(Poly.zero())


def test_analyze_ghost_sum_examples():
    got = analyze_ghost_sum(P("0v*x^2 + 1*x"), P("1*x + 0v"))
    assert got == HalfTangible(Fraction(-1), Fraction(1))
    f = P("(x+2)*(x+5v)*(x+8v)*(x+9)")
    g = P("(x+3)*(x+4)*(0v*x+7)*(x+10)")
    assert analyze_ghost_sum(f, g) == CommonRoot(Fraction(3))
    assert isinstance(analyze_ghost_sum(P("x+1"), P("x+5")), NotGhostSum)
    with pytest.raises(ValueError):
        analyze_ghost_sum(P("x"), P("x"))


def test_layer_perturbation_keeps_ghost_sums_ghost():
    gen = Gen(110)
    for _ in range(100):
        f = gen.poly(4)
        g = Poly({i: tangible(c.mag) if gen.rng.random() < 0.5
                  else ghost(c.mag) for i, c in f.items()})
        assert is_ghost_poly(f + g)
        p = gen.poly(3, 0)
        q = Poly({i: tangible(c.mag) if gen.rng.random() < 0.5
                  else ghost(c.mag) for i, c in p.items()})
        assert is_ghost_poly(p * f + q * g), (f, g, p, q)


def test_frobenius_is_substitution_and_morphism():
    gen = Gen(111)
    assert frobenius(P("x + 3"), 2) == P("x^2 + 3")
    for _ in range(60):
        f = gen.poly(3)
        g = gen.poly(3)
        m = gen.rng.randint(1, 3)
        assert frobenius(f * g, m) == frobenius(f, m) * frobenius(g, m)
        for a in sample_points(f):
            if a.is_zero:
                continue
            assert frobenius(f, m).evaluate(a) == f.evaluate(a ** m)


def test_root_transport():
    gen = Gen(112)
    for _ in range(60):
        f = gen.poly(3)
        m = gen.rng.randint(1, 3)
        b = gen.fraction()
        r = tangible_roots(f).intervals
        fr = tangible_roots(frobenius(f, m)).intervals
        assert fr.intervals == tuple(
            (lo / m if lo != NEG_INF else lo, hi / m if hi != POS_INF else hi)
            for lo, hi in r.intervals)
        ms = tangible_roots(mul_shift(f, b)).intervals
        assert ms.intervals == tuple(
            (lo - b if lo != NEG_INF else lo, hi - b if hi != POS_INF else hi)
            for lo, hi in r.intervals)


def test_shift_examples():
    assert mul_shift(P("x + 3"), 2) == P("2*x + 3")
    assert mul_shift(P("x^2 + 5"), 0) == P("x^2 + 5")
    assert add_shift(P("x^2"), tangible(5)) == P("x^2 + 5v*x + 10")
    gen = Gen(113)
    for _ in range(40):
        f = gen.poly(3)
        beta = gen.element()
        shifted = add_shift(f, beta)
        for a in sample_points(shifted):
            assert shifted.evaluate(a) == f.evaluate(a + beta)
