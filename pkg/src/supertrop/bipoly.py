"""Polynomials in two variables and a desk-scale common-root probe.

The resultant that eliminates the second variable is computed exactly as
in the one-variable case: a permanent of the Sylvester matrix, except the
entries are now polynomials in the first variable.  Because evaluation at
a point is a semiring map, specialising the first variable commutes with
taking that permanent, which is the main exactness test for this module.

`common_roots_sample` scans a rational grid for points where both inputs
take ghost values, entirely in integer arithmetic.  `bezout_report`
clusters the hits and compares the count of isolated ones against the
product of the total degrees.  The clustering is heuristic by nature; the
degree bound on isolated hits is the part that is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

from .element import Element, ONE, ZERO, Rational, as_fraction
from .poly import Poly
from .resultant import permanent, sylvester_vectors


class BiPoly:
    """Polynomial in x and y with supertropical coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Element] | None = None):
        data: dict[tuple[int, int], Element] = {}
        for (i, j), c in (coeffs or {}).items():
            if not isinstance(i, int) or not isinstance(j, int) or i < 0 or j < 0:
                raise ValueError(f"bad exponent pair ({i}, {j})")
            if not c.is_zero:
                data[(i, j)] = c
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def constant(c: Element) -> "BiPoly":
        return BiPoly({(0, 0): c})

    @staticmethod
    def monomial(i: int, j: int, coeff: Element = ONE) -> "BiPoly":
        return BiPoly({(i, j): coeff})

    @staticmethod
    def from_poly(f: Poly, var: str = "x") -> "BiPoly":
        if var not in ("x", "y"):
            raise ValueError("var must be 'x' or 'y'")
        if var == "x":
            return BiPoly({(i, 0): c for i, c in f.items()})
        return BiPoly({(0, j): c for j, c in f.items()})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def deg_x(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(i for i, _ in self._coeffs)

    @property
    def deg_y(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(j for _, j in self._coeffs)

    @property
    def total_degree(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return max(i + j for i, j in self._coeffs)

    def coeff(self, i: int, j: int) -> Element:
        return self._coeffs.get((i, j), ZERO)

    def items(self):
        return sorted(self._coeffs.items())

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            out[key] = out[key] + c if key in out else c
        return BiPoly(out)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], Element] = {}
        for (i, j), c in self._coeffs.items():
            for (k, l), d in other._coeffs.items():
                key = (i + k, j + l)
                term = c * d
                out[key] = out[key] + term if key in out else term
        return BiPoly(out)

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = BiPoly.constant(ONE)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def evaluate(self, x: Element, y: Element) -> Element:
        total = ZERO
        for (i, j), c in self._coeffs.items():
            total = total + c * x ** i * y ** j
        return total

    def specialize_y(self, b: Element) -> Poly:
        """Substitute y = b, leaving a polynomial in x."""
        out: dict[int, Element] = {}
        for (i, j), c in self._coeffs.items():
            term = c * b ** j
            out[i] = out[i] + term if i in out else term
        return Poly(out)

    def specialize_x(self, a: Element) -> Poly:
        """Substitute x = a, leaving a polynomial in y."""
        out: dict[int, Element] = {}
        for (i, j), c in self._coeffs.items():
            term = c * a ** i
            out[j] = out[j] + term if j in out else term
        return Poly(out)

    def y_vector(self) -> list[Poly]:
        """Coefficients as a polynomial in y: entry j is a Poly in x."""
        out = [dict() for _ in range(self.deg_y + 1)]
        for (i, j), c in self._coeffs.items():
            out[j][i] = c
        return [Poly(d) for d in out]

    def __repr__(self) -> str:
        return f"BiPoly({self._coeffs!r})"

    def __str__(self) -> str:
        if self.is_zero:
            return "-inf"
        parts = []
        for (i, j), c in sorted(self._coeffs.items(),
                                key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])):
            factors = []
            if c != ONE or (i == 0 and j == 0):
                factors.append(str(c))
            if i == 1:
                factors.append("x")
            elif i > 1:
                factors.append(f"x^{i}")
            if j == 1:
                factors.append("y")
            elif j > 1:
                factors.append(f"y^{j}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def partial_frobenius(f: BiPoly, m: int, var: str = "x") -> BiPoly:
    """Substitute the m-th power of one variable: f(x^m, y) or f(x, y^m).

    Sends a common root (a, b) of a pair to (a/m, b) (or (a, b/m)) in
    logarithmic notation.
    """
    if m < 1:
        raise ValueError("power must be >= 1")
    if var == "x":
        return BiPoly({(m * i, j): c for (i, j), c in f.items()})
    if var == "y":
        return BiPoly({(i, m * j): c for (i, j), c in f.items()})
    raise ValueError("var must be 'x' or 'y'")


def resultant_in_second(f: BiPoly, g: BiPoly) -> Poly:
    """Resultant eliminating y, as a polynomial in x.

    The inputs are viewed as polynomials in y whose coefficients live in
    the polynomial semiring in x; the value is the permanent of their
    Sylvester matrix over that semiring.  The raw y-coefficient vectors
    are used without canonicalisation, so specialising x at any tangible
    point commutes with the whole computation.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    if f.deg_y == 0 or g.deg_y == 0:
        raise ValueError("inputs must be nonconstant in y")
    fv, gv = f.y_vector(), g.y_vector()
    grid = sylvester_vectors(fv, gv, zero=Poly.zero())
    return permanent(grid, zero=Poly.zero(), one=Poly.constant(ONE))


def _scaled_terms(f: BiPoly, scale: int) -> list[tuple[int, int, int, bool]]:
    return [(int(c.mag * scale), i, j, c.is_ghost) for (i, j), c in f.items()]


def _ghost_at(terms, a: int, b: int) -> bool:
    # Ghost value at the point: the maximum is attained twice, or once by
    # a ghost term.  Terms are pre-scaled integers, a and b likewise.
    best = None
    ghost = False
    for m, i, j, g in terms:
        v = m + i * a + j * b
        if best is None or v > best:
            best, ghost = v, g
        elif v == best:
            ghost = True
    return bool(ghost)


Window = tuple[Rational, Rational, Rational, Rational]

DEFAULT_WINDOW: Window = (-10, 10, -10, 10)
DEFAULT_STEP = Fraction(1, 4)


def _scan(f: BiPoly, g: BiPoly, window: Window, step: Fraction) -> tuple[set, int]:
    # Scaled so that grid coordinates, including half steps, are integers.
    xlo, xhi, ylo, yhi = (as_fraction(w) for w in window)
    if step <= 0 or xhi < xlo or yhi < ylo:
        raise ValueError("bad window or step")
    mags = [c.mag for p in (f, g) for _, c in p.items()]
    scale = 2 * lcm(xlo.denominator, xhi.denominator, ylo.denominator,
                    yhi.denominator, step.denominator,
                    *(m.denominator for m in mags))
    ft, gt = _scaled_terms(f, scale), _scaled_terms(g, scale)
    step_s = int(step * scale)
    half = step_s // 2

    def is_hit(a: int, b: int) -> bool:
        return _ghost_at(ft, a, b) and _ghost_at(gt, a, b)

    xs = range(int(xlo * scale), int(xhi * scale) + 1, step_s)
    ys = range(int(ylo * scale), int(yhi * scale) + 1, step_s)
    hits = {(a, b) for a in xs for b in ys if is_hit(a, b)}
    # One refinement level: probe the half-step ring around every hit so
    # that hits lying on a shared curve piece link up into one component.
    refined = set(hits)
    for a, b in hits:
        for da in (-half, 0, half):
            for db in (-half, 0, half):
                p = (a + da, b + db)
                if p not in refined and is_hit(*p):
                    refined.add(p)
    return refined, scale


def common_roots_sample(f: BiPoly, g: BiPoly, window: Window = DEFAULT_WINDOW,
                        step: Rational = DEFAULT_STEP) -> list[tuple[Fraction, Fraction]]:
    """Points of the window grid where both values are ghost.

    Exact integer arithmetic throughout; the base grid is refined once at
    half step around every hit.  Inputs must be nonzero (the zero
    polynomial is ghost everywhere).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    refined, scale = _scan(f, g, window, as_fraction(step))
    return sorted((Fraction(a, scale), Fraction(b, scale)) for a, b in refined)


@dataclass(frozen=True)
class BezoutReport:
    """Grid evidence for the intersection-count bound.

    `ordinary_count` counts components that are a single sampled point;
    those approximate the isolated (2-ordinary) common roots, and the
    bound `m*n` applies to them.  `component_count` includes the extended
    components as well and is experimental: no bound is asserted for it.
    """

    m: int
    n: int
    bound: int
    hits: tuple[tuple[Fraction, Fraction], ...]
    component_count: int
    ordinary_count: int
    bound_holds: bool
    window: tuple[Fraction, Fraction, Fraction, Fraction]
    step: Fraction


def bezout_report(f: BiPoly, g: BiPoly, window: Window = DEFAULT_WINDOW,
                  step: Rational = DEFAULT_STEP) -> BezoutReport:
    """Scan for common ghost points and count the isolated ones.

    Sampled hits are clustered with neighbors up to one and a half steps
    away (curve pieces of bounded slope then stay connected through the
    refinement points).  A singleton cluster is a transversal crossing;
    their number is checked against the product of the total degrees.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    step = as_fraction(step)
    refined, scale = _scan(f, g, window, step)
    points = sorted(refined)
    index = {p: k for k, p in enumerate(points)}
    parent = list(range(len(points)))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    half = int(step * scale) // 2
    reach = [d * half for d in range(-3, 4)]
    for (a, b), k in index.items():
        for da in reach:
            for db in reach:
                other = index.get((a + da, b + db))
                if other is not None and other != k:
                    parent[find(other)] = find(k)

    sizes: dict[int, int] = {}
    for k in range(len(points)):
        root = find(k)
        sizes[root] = sizes.get(root, 0) + 1

    # A singleton component only counts as ordinary when no other hit lies
    # within three steps: hits strung along a shared curve piece of slope
    # p/q with |p|, |q| bounded by the degree land at most that far apart,
    # and such pieces are not isolated crossings.
    far = [d * half for d in range(-12, 13)]
    ordinary = 0
    for k, (a, b) in enumerate(points):
        if sizes[find(k)] != 1:
            continue
        alone = not any(index.get((a + da, b + db)) not in (None, k)
                        for da in far for db in far)
        if alone:
            ordinary += 1

    m, n = f.total_degree, g.total_degree
    bound = m * n
    return BezoutReport(
        m=m, n=n, bound=bound,
        hits=tuple((Fraction(a, scale), Fraction(b, scale)) for a, b in points),
        component_count=len(sizes), ordinary_count=ordinary,
        bound_holds=ordinary <= bound,
        window=tuple(as_fraction(w) for w in window), step=step)
