"""Exact-arithmetic bounds for burning strong products of paths.

The burned region around a source is a cube of odd side length, so m
rounds can burn at most 1^d + 3^d + ... + (2m-1)^d cells of the grid
[1, n]^d.  The partial sums of odd d-th powers extend to a rational
polynomial

    g_bar(d)(x) = ((2x-1)^(d+1) - 1) / (2(d+1))
                  + sum_{k=0}^{d} B_{k+1}/(k+1)! * 2^k d!/(d-k)!
                        * ((2x-1)^(d-k) + (-1)^k),

built from the Bernoulli numbers with the B_1 = +1/2 sign convention
(the coefficients of the Todd series z / (1 - e^{-z})).  g_bar(d) is
strictly increasing on [1, oo), so the largest real root x* of
q(x) = n^d - g_bar(d)(x) pins down the largest m whose tiles still fit
by volume, giving the lower bound b(P_n^{boxtimes d}) >= floor(x*),
attained exactly when x* is an integer.

Everything here is exact rational arithmetic (fractions.Fraction);
floating point appears only in reporting and in the closed-form
cross-checks, because the integrality of x* drives an
equality-iff-integral clause and must never be decided numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

#: Exact Bernoulli table B_0..B_m, B_1 = +1/2.
BernoulliTable = tuple[Fraction, ...]


def bernoulli(m: int) -> BernoulliTable:
    """Bernoulli numbers B_0..B_m via the Akiyama-Tanigawa triangle.

    Uses the convention with B_1 = +1/2, i.e. the coefficients of
    td(z) = z / (1 - e^{-z}) = sum B_k / k! z^k.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m > 200:
        raise ValueError("m capped at 200")
    row = [Fraction(0)] * (m + 1)
    out = []
    for i in range(m + 1):
        row[i] = Fraction(1, i + 1)
        for j in range(i, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return tuple(out)


class Polynomial:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __rsub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"


@lru_cache(maxsize=None)
def g_bar(d: int) -> Polynomial:
    """Polynomial extension of m |-> 1^d + 3^d + ... + (2m-1)^d.

    Exact closed form from an Euler-Maclaurin expansion over the segment
    [1, m]; for small d it reduces to the familiar identities
    g_bar(1) = x^2, g_bar(2) = x(2x-1)(2x+1)/3, g_bar(3) = 2x^4 - x^2.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if d > 50:
        raise ValueError("d capped at 50")
    bern = bernoulli(d + 1)
    u = Polynomial([-1, 2])  # 2x - 1
    total = (u ** (d + 1) - 1) * Fraction(1, 2 * (d + 1))
    for k in range(d + 1):
        b = bern[k + 1]
        if b == 0:
            continue
        coeff = b / math.factorial(k + 1) * (2**k * math.factorial(d) // math.factorial(d - k))
        total = total + (u ** (d - k) + (-1) ** k) * coeff
    return total


def q_poly(n: int, d: int) -> Polynomial:
    """n^d - g_bar(d), the polynomial whose largest root drives the bound."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Polynomial([Fraction(n**d)]) - g_bar(d)


@dataclass(frozen=True)
class BoundResult:
    """Bracketed largest real root of a volume polynomial.

    The bracket satisfies q(lo) >= 0 >= q(hi) exactly; when the root is
    rational and the bisection lands on it, lo == hi.  is_integral is
    decided by exact evaluation at the integers adjacent to the bracket,
    never by a floating comparison.
    """

    lo: Fraction
    hi: Fraction
    floor_x_star: int
    is_integral: bool

    @property
    def bound(self) -> int:
        return self.floor_x_star

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)


def largest_root(p: Polynomial, tolerance: Fraction | float = Fraction(1, 10**12)) -> BoundResult:
    """Largest real root of a q_poly-style polynomial by exact bisection.

    Requires p(1) >= 0 and p eventually negative (true for every
    q_poly(n, d), whose non-constant part is strictly decreasing on
    [1, oo)).  The root is unique there, so plain bisection brackets it;
    exact rational evaluation keeps every sign decision sound.
    """
    tol = Fraction(tolerance)
    if not 0 < tol < 1:
        raise ValueError("tolerance must be in (0, 1)")
    lo = Fraction(1)
    v_lo = p(lo)
    if v_lo < 0:
        raise ValueError("no bracket: polynomial already negative at 1")
    if v_lo == 0 and p(lo + 1) < 0:
        return BoundResult(lo=lo, hi=lo, floor_x_star=1, is_integral=True)
    hi = Fraction(2)
    while p(hi) > 0:
        hi *= 2
    if p(hi) == 0:
        lo = hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = p(mid)
        if v == 0:
            lo = hi = mid
            break
        if v > 0:
            lo = mid
        else:
            hi = mid
    # Exact integer adjudication: the bracket is narrower than 1, so it
    # contains at most one integer.
    is_integral = False
    floor = None
    if lo == hi:
        is_integral = lo.denominator == 1
        floor = math.floor(lo)
    else:
        j = math.ceil(lo)
        if lo <= j <= hi:
            vj = p(j)
            if vj == 0:
                is_integral = True
                floor = j
            elif vj > 0:
                floor = j  # root is above j
            else:
                floor = j - 1  # root is below j
        else:
            floor = math.floor(lo)
    return BoundResult(lo=lo, hi=hi, floor_x_star=floor, is_integral=is_integral)


def kings_root_closed_form(n: int) -> float:
    """Cardano form of the largest root of 3n^2 = x(2x-1)(2x+1).

    Algebra gives x* = (cbrt(A) + cbrt(B)) / 2 with
    A, B = 3n^2 +- sqrt((243 n^4 - 1) / 27) and A*B = 1/27, so the tiny
    branch is computed as 1/(3 cbrt(A)) to dodge the catastrophic
    cancellation in 3n^2 - sqrt(9n^4 - 1/27).
    """
    a = 3 * n * n + math.sqrt((243.0 * n**4 - 1.0) / 27.0)
    ca = a ** (1.0 / 3.0)
    return (ca + 1.0 / (3.0 * ca)) / 2.0


def kings_bound(n: int, tolerance: Fraction | float = Fraction(1, 10**12)) -> int:
    """Lower bound for the burning number of the n x n king graph.

    floor(x*) + 1, where x* is the largest root of n^2 - x(2x-1)(2x+1)/3.
    The +1 is sound for n > 1 because k(2k+1)(2k-1)/3 is never a perfect
    square there, so the volume bound floor(x*) cannot be attained.  The
    Cardano closed form is evaluated as a float cross-check and must
    agree with the exact bisection bracket to 1e-9.
    """
    if n < 2:
        raise ValueError("kings_bound needs n >= 2")
    root = largest_root(q_poly(n, 2), tolerance)
    closed = kings_root_closed_form(n)
    width = float(root.hi - root.lo)
    if abs(closed - root.approx) > 1e-9 + width:
        raise ArithmeticError(
            f"closed form {closed} disagrees with bisection {root.approx} at n={n}"
        )
    return root.floor_x_star + 1


@dataclass(frozen=True)
class Cube3Bound:
    lo: Fraction
    hi: Fraction
    bound: int
    is_integral: bool
    closed_form: float

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)


def cube3_bound(n: int, tolerance: Fraction | float = Fraction(1, 10**12)) -> Cube3Bound:
    """Largest m with 2m^4 - m^2 <= n^3, for the 3-fold strong product.

    The closed form is m* = sqrt(1 + sqrt(1 + 8 n^3)) / 2; the exact
    bisection of q_poly(n, 3) is authoritative and the closed form is a
    float cross-check (agreement to 1e-9).  The bound floor(m*) is
    attained exactly when m* is an integer.
    """
    if n < 1:
        raise ValueError("cube3_bound needs n >= 1")
    root = largest_root(q_poly(n, 3), tolerance)
    closed = 0.5 * math.sqrt(1.0 + math.sqrt(1.0 + 8.0 * n**3))
    width = float(root.hi - root.lo)
    if abs(closed - root.approx) > 1e-9 + width:
        raise ArithmeticError(
            f"closed form {closed} disagrees with bisection {root.approx} at n={n}"
        )
    return Cube3Bound(
        lo=root.lo,
        hi=root.hi,
        bound=root.floor_x_star,
        is_integral=root.is_integral,
        closed_form=closed,
    )


def non_square_check(k: int) -> bool:
    """True iff k(2k+1)(2k-1)/3 is not a perfect square (expected for k > 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    prod = k * (2 * k + 1) * (2 * k - 1)
    value = prod // 3
    if value * 3 != prod:
        raise ArithmeticError(f"k(2k+1)(2k-1) unexpectedly not divisible by 3 at k={k}")
    s = math.isqrt(value)
    return s * s != value


@dataclass(frozen=True)
class ClassicalBounds:
    """Reference upper bounds on the burning number, for reporting."""

    land_bound: int  # ceil((-3 + sqrt(24n + 33)) / 4), clamped at the trivial bound n
    sqrt_bound: int  # ceil(sqrt(n))
    radius_bound: int  # radius + 1


def classical_bounds(n_vertices: int, radius: int) -> ClassicalBounds:
    """Classical upper bounds for a connected graph on n vertices.

    All three are computed with exact integer arithmetic.  The first
    formula evaluates above n for tiny graphs (n = 1 gives 2), so it is
    clamped at the trivial bound b(G) <= n.
    """
    if n_vertices < 1:
        raise ValueError("n must be >= 1")
    disc = 24 * n_vertices + 33
    s = math.isqrt(disc)
    if s * s == disc:
        land = -((3 - s) // 4)  # ceil((s - 3) / 4)
    else:
        land = (s - 3) // 4 + 1  # sqrt irrational: ceil = floor + 1
    land = min(land, n_vertices)
    s = math.isqrt(n_vertices)
    sqrt_bound = s if s * s == n_vertices else s + 1
    return ClassicalBounds(land_bound=land, sqrt_bound=sqrt_bound, radius_bound=radius + 1)
