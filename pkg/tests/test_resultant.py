"""Sylvester permanents, resultant routes, relative primeness."""

from fractions import Fraction

import pytest

from supertrop import (ONE, ZERO, Element, decide, ghost, parse_poly,
                       permanent, permanent_oracle, resultant, resultant_nu,
                       resultant_nu_assignment, resultant_quadratic,
                       resultant_recursive, resultant_tangible_product,
                       sylvester, tangible, tangible_roots)
from supertrop.poly import canonical_full, full_from_corners
from supertrop.resultant import semitangible_blocks
from supertrop.checks import Gen

P = parse_poly


def grid(f, g):
    return [[str(e) for e in row] for row in sylvester(f, g)]


def test_sylvester_examples():
    assert grid(P("x + 1"), P("x + 1")) == [["1", "0"], ["1", "0"]]
    assert grid(P("x^2 + 3v*x + 2"), P("x + 5")) == [
        ["2", "3v", "0"],
        ["5", "0", "-inf"],
        ["-inf", "5", "0"],
    ]


def test_sylvester_rejects_constants():
    with pytest.raises(ValueError):
        sylvester(P("x + 1"), P("4"))
    with pytest.raises(ValueError):
        # x^2 canonicalizes to a constant once the power is stripped.
        sylvester(P("x^2"), P("x + 1"))


def test_permanent_examples():
    rows = [[tangible(1), tangible(0)], [tangible(1), tangible(0)]]
    assert permanent(rows) == ghost(1)
    rows = [[tangible(1), tangible(0)], [tangible(2), tangible(0)]]
    assert permanent(rows) == tangible(2)
    with pytest.raises(ValueError):
        permanent([[ONE, ONE]])


def test_permanent_matches_oracle():
    gen = Gen(301)
    for side in range(2, 7):
        for _ in range(60):
            rows = [[ZERO if gen.rng.random() < 0.25 else gen.element()
                     for _ in range(side)] for _ in range(side)]
            assert permanent(rows) == permanent_oracle(rows), rows


def test_resultant_examples():
    assert resultant(P("x + 1"), P("x + 1")) == ghost(1)
    assert resultant(P("x^2 + 3v*x + 2"), P("x + 5")) == tangible(10)
    assert resultant(P("2v*x^2 + 4*x"), P("x + 1v")) == tangible(4)
    assert resultant(P("(x+3)*(x+4)"), P("x + 2")) == tangible(7)


def test_resultant_symmetry():
    # The Sylvester blocks swap rows only, and permanents ignore row order.
    gen = Gen(302)
    done = 0
    while done < 150:
        f, g = gen.canonical_poly(5), gen.canonical_poly(5)
        if f.degree == f.ldeg or g.degree == g.ldeg:
            continue
        assert resultant(f, g) == resultant(g, f), (f, g)
        done += 1


def test_resultant_scaling():
    gen = Gen(303)
    done = 0
    while done < 100:
        f, g = gen.canonical_poly(4), gen.canonical_poly(4)
        if f.degree == f.ldeg or g.degree == g.ldeg:
            continue
        c = tangible(gen.fraction())
        base = resultant(f, g)
        m = f.degree - f.ldeg
        n = g.degree - g.ldeg
        assert resultant(f, g.scale(c)) == c ** m * base, (f, g, c)
        assert resultant(f.scale(c), g) == c ** n * base, (f, g, c)
        done += 1


def test_nu_routes_agree():
    gen = Gen(304)
    for _ in range(150):
        f, g = gen.full_poly(3), gen.full_poly(3)
        direct = resultant(f, g)
        assert resultant_nu(f, g) == direct.nu(), (f, g)
        assert resultant_nu_assignment(f, g) == direct.nu(), (f, g)
        assert resultant_nu(f, g).in_ghost_ideal


def test_recursive_matches_permanent():
    gen = Gen(305)
    for _ in range(150):
        f, g = gen.full_poly(4), gen.full_poly(3)
        assert resultant_recursive(f, g) == resultant(f, g), (f, g)
    with pytest.raises(ValueError):
        resultant_recursive(P("x^2 + 1"), P("x + 1"))


def test_product_rule():
    gen = Gen(306)
    for _ in range(100):
        f, a_roots = gen.tangible_split(4)
        g, b_roots = gen.tangible_split(4)
        value = resultant_tangible_product(f, g)
        assert value == resultant(f, g), (f, g)
        expected = ONE
        for a in a_roots:
            for b in b_roots:
                expected = expected * (tangible(a) + tangible(b))
        assert value == expected, (f, g)
        # Ghost exactly when the root sets meet.
        assert value.in_ghost_ideal == bool(set(a_roots) & set(b_roots))
    with pytest.raises(ValueError):
        resultant_tangible_product(P("x^2 + 6v*x + 7"), P("x + 1"))


def test_quadratic_rule():
    gen = Gen(307)
    for _ in range(100):
        f = gen.full_poly(4)
        r1, r2 = gen.corners(2)
        flags = [gen.rng.random() < 0.5, gen.rng.random() < 0.5, False]
        g = canonical_full(full_from_corners([r1, r2], flags)).to_poly()
        assert resultant_quadratic(f, g) == resultant(f, g), (f, g)
    with pytest.raises(ValueError):
        resultant_quadratic(P("x + 1"), P("x + 2"))
    with pytest.raises(ValueError):
        # Corner roots out of order: 2 mag(b1) < mag(b0).
        resultant_quadratic(P("x + 1"), P("x^2 + 0v*x + 5"))


def test_block_decomposition():
    # For disjoint root sets the resultant magnitude splits over the
    # semitangible blocks of both sides.
    gen = Gen(308)
    done = tried = 0
    while done < 120 and tried < 20000:
        tried += 1
        f, g = gen.monic_full(5), gen.monic_full(5)
        if not tangible_roots(f).intersect(tangible_roots(g)).intervals.is_empty:
            continue
        prod = ONE
        for fb in semitangible_blocks(f):
            for gb in semitangible_blocks(g):
                prod = prod * resultant(fb, gb)
        assert resultant(f, g).nu() == prod.nu(), (f, g)
        done += 1
    assert done == 120


def test_semitangible_blocks_recover_input():
    gen = Gen(309)
    for _ in range(100):
        f = gen.monic_full(6)
        blocks = semitangible_blocks(f)
        prod = parse_poly("0")
        for b in blocks:
            assert b.degree >= 1
            assert b.coeff(b.degree).mag == 0
            prod = prod * b
        lead = canonical_full(f).coeffs[-1]
        scaled = prod.scale(Element(lead.mag, lead.is_ghost))
        assert canonical_full(scaled).to_poly() == canonical_full(f).to_poly()


def test_decide_examples():
    rep = decide(P("(x+1)*(x+2)"), P("x + 1"))
    assert not rep.relatively_prime
    assert rep.witness == Fraction(1)
    assert rep.resultant.in_ghost_ideal

    rep = decide(P("2v*x^2 + 4*x"), P("x + 1v"))
    assert rep.relatively_prime
    assert rep.resultant == tangible(4)
    assert rep.witness is None

    with pytest.raises(ValueError):
        decide(P("x + 1"), P("3"))


def test_decide_against_endpoint_oracle():
    # A nonempty intersection of closed interval unions always contains a
    # finite endpoint of one side, or both sides cover the whole line.
    gen = Gen(310)
    done = 0
    while done < 200:
        f, g = gen.canonical_poly(5), gen.canonical_poly(5)
        if f.degree == f.ldeg or g.degree == g.ldeg:
            continue
        rep = decide(f, g)
        rf, rg = tangible_roots(f), tangible_roots(g)
        candidates = [Fraction(0)]
        for lo, hi in list(rf.intervals) + list(rg.intervals):
            candidates.extend(x for x in (lo, hi) if isinstance(x, Fraction))
        shared = any(c in rf and c in rg for c in candidates)
        assert rep.relatively_prime == (not shared), (f, g)
        if not rep.relatively_prime:
            assert rep.witness in rf and rep.witness in rg
        done += 1
