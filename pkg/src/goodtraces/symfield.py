"""The fraction field of the scalar domain, with exact sign tests, plus
Gaussian elimination over it.

Real linear algebra on vectors whose entries are domain scalars is exact
here: the evaluation of the domain into R is an injective ring map, so ranks
and solution spaces over this fraction field coincide with those over R.
"""

from __future__ import annotations

from fractions import Fraction

from .domain import DomainElement, DomainSpec


class K:
    """An element num/den of the domain's fraction field."""

    __slots__ = ("num", "den")

    def __init__(self, num: DomainElement, den: DomainElement | None = None):
        if den is None:
            den = num.spec.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        # fold rational denominators into the numerator
        if den.is_rational():
            num = num * (1 / den.rational_value())
            den = num.spec.one()
        self.num = num
        self.den = den

    @classmethod
    def of(cls, spec: DomainSpec, value) -> "K":
        if isinstance(value, K):
            return value
        if isinstance(value, DomainElement):
            return cls(value)
        return cls(spec.rational(Fraction(value)))

    def spec(self) -> DomainSpec:
        return self.num.spec

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "K") -> "K":
        return K(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "K") -> "K":
        return K(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "K":
        return K(-self.num, self.den)

    def __mul__(self, other: "K") -> "K":
        return K(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "K") -> "K":
        if other.is_zero():
            raise ZeroDivisionError
        return K(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, K):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("field fractions are not hashable (no canonical form)")

    def sign(self, budget: int = 256) -> int:
        sn = self.num.sign(budget)
        if sn == 0:
            return 0
        return sn * self.den.sign(budget)

    def enclosure(self, level: int):
        (a, b) = self.num.enclosure(level)
        (c, d) = self.den.enclosure(level)
        if c <= 0 <= d:
            return None  # denominator enclosure straddles zero; refine more
        cands = (a / c, a / d, b / c, b / d)
        return (min(cands), max(cands))

    def as_domain_element(self) -> DomainElement:
        if not self.den.is_rational():
            raise ValueError("fraction has a non-rational denominator")
        return self.num * (1 / self.den.rational_value())

    def __repr__(self):
        return f"K({self.num!r} / {self.den!r})"


def kzero(spec: DomainSpec) -> K:
    return K(spec.zero())


def kone(spec: DomainSpec) -> K:
    return K(spec.one())


# ---------------------------------------------------------------------------
# linear algebra over the fraction field


def field_rank(rows: list[list[K]], budget: int = 256) -> int:
    return len(field_rref(rows, budget)[1])


def field_rref(rows: list[list[K]], budget: int = 256):
    """Gaussian elimination with exact zero tests; returns (matrix, pivot cols)."""
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not m[i][c].is_zero()), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def field_solve(rows: list[list[K]], rhs: list[K]):
    """One solution of rows @ x = rhs over the fraction field, or None."""
    if not rows:
        return [] if all(b.is_zero() for b in rhs) else None
    ncols = len(rows[0])
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    red, pivots = field_rref(aug)
    if ncols in pivots:
        return None
    spec = rows[0][0].spec()
    x = [kzero(spec) for _ in range(ncols)]
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return x


def field_kernel(rows: list[list[K]]):
    """Basis of the right kernel over the fraction field."""
    if not rows:
        return []
    ncols = len(rows[0])
    spec = rows[0][0].spec()
    red, pivots = field_rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        vec = [kzero(spec) for _ in range(ncols)]
        vec[f] = kone(spec)
        for r, p in enumerate(pivots):
            vec[p] = -red[r][f]
        out.append(vec)
    return out


def independent_subset(vectors: list[list[K]]) -> list[int]:
    """Indices of the first maximal linearly independent subset, in order."""
    chosen: list[list[K]] = []
    idx = []
    for i, v in enumerate(vectors):
        if field_rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            idx.append(i)
    return idx


def delem_rows(vectors) -> list[list[K]]:
    return [[K(x) for x in row] for row in vectors]
