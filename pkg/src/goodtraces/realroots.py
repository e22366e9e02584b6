"""Real root isolation for rational polynomials via Sturm sequences.

Polynomials are tuples of Fractions in ascending degree order.  All
computations are exact; isolating intervals have rational endpoints that are
never roots of the polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

QPoly = tuple[Fraction, ...]


def poly(coeffs: Sequence) -> QPoly:
    out = tuple(Fraction(c) for c in coeffs)
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def degree(p: QPoly) -> int:
    return len(p) - 1


def evaluate(p: QPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: QPoly) -> QPoly:
    return poly([i * c for i, c in enumerate(p)][1:])


def pmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly(out)


def padd(a: QPoly, b: QPoly) -> QPoly:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly(out)


def pscale(a: QPoly, s: Fraction) -> QPoly:
    return poly([c * s for c in a])


def pdivmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    r = list(a)
    db, lb = degree(b), b[-1]
    while len(r) >= len(b) and any(c != 0 for c in r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        k = len(r) - len(b)
        f = r[-1] / lb
        q[k] = f
        for i in range(len(b)):
            r[k + i] -= f * b[i]
        r.pop()
    return poly(q), poly(r)


def pgcd(a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, pdivmod(a, b)[1]
    if a:
        a = pscale(a, 1 / a[-1])
    return a


def squarefree_part(p: QPoly) -> QPoly:
    if degree(p) <= 0:
        return p
    g = pgcd(p, derivative(p))
    if degree(g) <= 0:
        return pscale(p, 1 / p[-1])
    q, r = pdivmod(p, g)
    assert not r
    return pscale(q, 1 / q[-1])


def sturm_chain(p: QPoly) -> list[QPoly]:
    p = squarefree_part(p)
    chain = [p, derivative(p)]
    while chain[-1] and degree(chain[-1]) > 0:
        rem = pdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(pscale(rem, Fraction(-1)))
    return [c for c in chain if c]


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def variations_at(chain: list[QPoly], x: Fraction) -> int:
    return _variations([_sgn(evaluate(c, x)) for c in chain])


def variations_at_inf(chain: list[QPoly], positive: bool) -> int:
    signs = []
    for c in chain:
        s = _sgn(c[-1])
        if not positive and degree(c) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def root_bound(p: QPoly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p[-1])
    b = 1 + max(abs(c) for c in p) / lead
    return Fraction(b)


def count_roots(p: QPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi]; endpoints must satisfy lo < hi."""
    chain = sturm_chain(p)
    return variations_at(chain, lo) - variations_at(chain, hi)


def count_real_roots(p: QPoly) -> int:
    chain = sturm_chain(p)
    return variations_at_inf(chain, False) - variations_at_inf(chain, True)


def isolate_real_roots(p: QPoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open rational intervals, one per distinct real root.

    Interval endpoints are never roots.  The square-free part is used
    internally, so multiplicities are ignored.
    """
    p = squarefree_part(poly(p))
    if degree(p) <= 0:
        return []
    chain = sturm_chain(p)
    B = root_bound(p)
    lo, hi = -B, B
    total = variations_at(chain, lo) - variations_at(chain, hi)
    out: list[tuple[Fraction, Fraction]] = []

    def go(a, b, count):
        if count == 0:
            return
        if count == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        while evaluate(p, mid) == 0:
            mid = (a + mid) / 2  # nudge off the root; rationals are countable
        left = variations_at(chain, a) - variations_at(chain, mid)
        go(a, mid, left)
        go(mid, b, count - left)

    go(lo, hi, total)
    return sorted(out)


def refine_root(p: QPoly, iv: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval by bisection (sign change preserved)."""
    a, b = iv
    mid = (a + b) / 2
    if evaluate(p, mid) == 0:
        mid = a + (b - a) * Fraction(1, 3)
        if evaluate(p, mid) == 0:
            mid = a + (b - a) * Fraction(2, 5)
    fa = evaluate(p, a)
    fm = evaluate(p, mid)
    if _sgn(fa) * _sgn(fm) < 0:
        return (a, mid)
    return (mid, b)


class RealAlgebraic:
    """A real algebraic number: a square-free rational polynomial plus an
    isolating interval whose endpoints are not roots."""

    __slots__ = ("poly", "lo", "hi")

    def __init__(self, p, iv):
        p = squarefree_part(poly(p))
        lo, hi = Fraction(iv[0]), Fraction(iv[1])
        if evaluate(p, lo) == 0 or evaluate(p, hi) == 0:
            raise ValueError("isolating interval endpoints must not be roots")
        if count_roots(p, lo, hi) != 1:
            raise ValueError("interval does not isolate exactly one root")
        self.poly, self.lo, self.hi = p, lo, hi

    @classmethod
    def from_rational(cls, q) -> "RealAlgebraic":
        q = Fraction(q)
        return cls((-q, Fraction(1)), (q - 1, q + 1))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self):
        self.lo, self.hi = refine_root(self.poly, (self.lo, self.hi))

    def refine_to(self, width: Fraction):
        while self.width() > width:
            self.refine()

    def sign(self) -> int:
        while self.lo < 0 < self.hi:
            if evaluate(self.poly, Fraction(0)) == 0:
                # zero is a root of poly; it is *this* number iff it is the
                # unique root in the interval
                return 0
            self.refine()
        return 1 if self.lo >= 0 else -1

    def eq(self, other: "RealAlgebraic") -> bool:
        g = pgcd(self.poly, other.poly)
        if degree(g) <= 0:
            return False
        # g divides both defining polynomials, so each interval holds at most
        # one root of g; the numbers are equal iff both are g-roots and land
        # in the same isolating interval of g.
        if not self._is_root_of(g) or not other._is_root_of(g):
            return False
        g_ivs = isolate_real_roots(g)
        mine = self._locate(g, g_ivs)
        theirs = other._locate(g, g_ivs)
        return mine == theirs

    def _is_root_of(self, g: QPoly) -> bool:
        return count_roots(g, self.lo, self.hi) == 1

    def _locate(self, g: QPoly, g_ivs) -> int:
        """Index of the g-isolating interval this number lies in (it must be
        a root of g)."""
        while True:
            inside = [
                i for i, (a, b) in enumerate(g_ivs) if a < self.hi and self.lo < b
            ]
            if len(inside) == 1 and g_ivs[inside[0]][0] < self.lo and self.hi < g_ivs[inside[0]][1]:
                return inside[0]
            if len(inside) == 1:
                a, b = g_ivs[inside[0]]
                if a <= self.lo and self.hi <= b:
                    return inside[0]
            self.refine()

    def compare(self, other: "RealAlgebraic") -> int:
        if self.eq(other):
            return 0
        while True:
            if self.hi < other.lo:
                return -1
            if other.hi < self.lo:
                return 1
            self.refine()
            other.refine()

    def compare_rational(self, q) -> int:
        q = Fraction(q)
        if evaluate(self.poly, q) == 0 and self.lo < q < self.hi:
            return 0
        while self.lo <= q <= self.hi:
            self.refine()
        return -1 if self.hi < q else 1

    def __repr__(self):
        return f"RealAlgebraic({[str(c) for c in self.poly]}, ({self.lo}, {self.hi}))"


def _isolate_within(g: QPoly, lo: Fraction, hi: Fraction):
    ivs = [iv for iv in isolate_real_roots(g) if iv[0] < hi and iv[1] > lo]
    if len(ivs) != 1:
        raise ValueError("expected one root in window")
    return ivs[0]
