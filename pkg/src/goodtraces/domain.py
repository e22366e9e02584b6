"""Exact scalar arithmetic: a real number field Q(theta) extended by declared
algebraically independent transcendentals.

Elements are kept in a canonical form: a polynomial in the transcendental
names whose coefficients are vectors over the power basis 1, theta, ...,
theta^(d-1).  Equality of canonical forms decides equality of the denoted
reals, by irreducibility of the minimal polynomial together with the declared
independence of the transcendentals.  Signs are decided by refining interval
enclosures; the refinement terminates on nonzero elements for the same
reason.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from . import realroots
from .errors import BudgetExceeded, NonPolynomial, UnknownSymbol
from .oracles import Oracle, make_oracle

Interval = tuple[Fraction, Fraction]

DEFAULT_BUDGET = 256


# ---------------------------------------------------------------------------
# rational interval arithmetic

def iv_add(a: Interval, b: Interval) -> Interval:
    return (a[0] + b[0], a[1] + b[1])


def iv_neg(a: Interval) -> Interval:
    return (-a[1], -a[0])


def iv_mul(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(products), max(products))


def iv_scale(a: Interval, s: Fraction) -> Interval:
    return (a[0] * s, a[1] * s) if s >= 0 else (a[1] * s, a[0] * s)


def iv_pow(a: Interval, n: int) -> Interval:
    out = (Fraction(1), Fraction(1))
    for _ in range(n):
        out = iv_mul(out, a)
    return out


# ---------------------------------------------------------------------------

def _check_irreducible(int_coeffs: Sequence[int]) -> bool:
    import sympy

    x = sympy.Symbol("x")
    p = sum(int(c) * x**i for i, c in enumerate(int_coeffs))
    _, factors = sympy.factor_list(sympy.Poly(p, x, domain="QQ"))
    return len(factors) == 1 and factors[0][1] == 1


class DomainSpec:
    """Declares the scalar domain: optional Q(theta) plus named transcendentals.

    ``min_poly`` is a monic integer-coefficient polynomial (ascending
    coefficients) and ``root_interval`` isolates the intended real root.
    ``transcendentals`` is a sequence of (name, oracle) pairs; oracles may be
    given as catalogue ids (see oracles.make_oracle).  The joint algebraic
    independence of the transcendental values over Q(theta) is a declared
    assertion and is echoed in reports.
    """

    def __init__(self, min_poly=None, root_interval=None, transcendentals=()):
        if min_poly is not None:
            p = realroots.poly(min_poly)
            if realroots.degree(p) < 2:
                raise ValueError("min_poly must have degree >= 2 (fold rationals away)")
            if p[-1] != 1:
                raise ValueError("min_poly must be monic")
            if any(c.denominator != 1 for c in p):
                raise ValueError("min_poly must have integer coefficients")
            if not _check_irreducible([int(c) for c in p]):
                raise ValueError("min_poly is reducible over Q")
            if root_interval is None:
                raise ValueError("root_interval required with min_poly")
            lo, hi = Fraction(root_interval[0]), Fraction(root_interval[1])
            if realroots.evaluate(p, lo) == 0 or realroots.evaluate(p, hi) == 0:
                raise ValueError("root_interval endpoints must not be roots")
            if realroots.count_roots(p, lo, hi) != 1:
                raise ValueError("root_interval must isolate exactly one real root")
            self.min_poly: realroots.QPoly | None = p
            self._theta_iv = [(lo, hi)]
            self.theta_degree = realroots.degree(p)
        else:
            self.min_poly = None
            self._theta_iv = []
            self.theta_degree = 1

        names = []
        oracles: list[Oracle] = []
        for name, orc in transcendentals:
            if name in names:
                raise ValueError(f"duplicate transcendental name {name!r}")
            names.append(name)
            oracles.append(make_oracle(orc) if isinstance(orc, str) else orc)
        self.names: tuple[str, ...] = tuple(names)
        self.oracles: tuple[Oracle, ...] = tuple(oracles)

        d = self.theta_degree
        self._zero_coeff = (Fraction(0),) * d
        # reduction table: theta^(d+k) as a vector over the power basis
        self._red: list[tuple[Fraction, ...]] = []
        if self.min_poly is not None:
            top = [-c for c in self.min_poly[:-1]]  # theta^d
            self._red.append(tuple(top))
            for _ in range(d - 2):
                prev = self._red[-1]
                nxt = [Fraction(0)] + list(prev[:-1])
                for i in range(d):
                    nxt[i] += prev[-1] * top[i]
                self._red.append(tuple(nxt))

    # -- enclosures ---------------------------------------------------------

    def theta_enclosure(self, level: int) -> Interval:
        if self.min_poly is None:
            raise ValueError("domain has no algebraic generator")
        while len(self._theta_iv) <= level:
            self._theta_iv.append(
                realroots.refine_root(self.min_poly, self._theta_iv[-1])
            )
        return self._theta_iv[level]

    def symbol_enclosure(self, i: int, level: int) -> Interval:
        return self.oracles[i].enclosure(level)

    # -- element constructors ------------------------------------------------

    def zero(self) -> "DomainElement":
        return DomainElement(self, {})

    def one(self) -> "DomainElement":
        return self.rational(1)

    def rational(self, q) -> "DomainElement":
        q = Fraction(q)
        if q == 0:
            return self.zero()
        coeff = (q,) + self._zero_coeff[1:]
        mono = (0,) * len(self.names)
        return DomainElement(self, {mono: coeff})

    def theta(self) -> "DomainElement":
        if self.min_poly is None:
            raise UnknownSymbol("theta is not declared in this domain")
        coeff = list(self._zero_coeff)
        coeff[1] = Fraction(1)
        mono = (0,) * len(self.names)
        return DomainElement(self, {mono: tuple(coeff)})

    def symbol(self, name: str) -> "DomainElement":
        if name == "theta":
            return self.theta()
        try:
            i = self.names.index(name)
        except ValueError:
            raise UnknownSymbol(f"symbol {name!r} is not declared") from None
        mono = tuple(1 if j == i else 0 for j in range(len(self.names)))
        coeff = (Fraction(1),) + self._zero_coeff[1:]
        return DomainElement(self, {mono: coeff})

    def from_theta_vector(self, vec: Sequence) -> "DomainElement":
        coeff = tuple(Fraction(c) for c in vec)
        if len(coeff) != self.theta_degree:
            if len(coeff) < self.theta_degree:
                coeff = coeff + (Fraction(0),) * (self.theta_degree - len(coeff))
            else:
                raise ValueError("theta vector too long; reduce first")
        if all(c == 0 for c in coeff):
            return self.zero()
        mono = (0,) * len(self.names)
        return DomainElement(self, {mono: coeff})

    # -- coefficient (theta-vector) arithmetic -------------------------------

    def _cadd(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _cneg(self, a):
        return tuple(-x for x in a)

    def _cscale(self, a, s):
        return tuple(x * s for x in a)

    def _cmul(self, a, b):
        d = self.theta_degree
        if d == 1:
            return (a[0] * b[0],)
        raw = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                raw[i + j] += x * y
        out = raw[:d]
        for k in range(d, 2 * d - 1):
            c = raw[k]
            if c == 0:
                continue
            red = self._red[k - d]
            for i in range(d):
                out[i] += c * red[i]
        return tuple(out)

    def describe(self) -> dict:
        return {
            "min_poly": [str(c) for c in self.min_poly] if self.min_poly else None,
            "transcendentals": list(self.names),
            "independence": "declared by user; echoed, not verified",
        }


class DomainElement:
    """Canonical form: map monomial-exponent tuple -> theta coefficient vector."""

    __slots__ = ("spec", "terms", "_key")

    def __init__(self, spec: DomainSpec, terms: dict):
        self.spec = spec
        self.terms = {
            m: c for m, c in terms.items() if any(x != 0 for x in c)
        }
        self._key = None

    # -- canonical identity ---------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, DomainElement):
            return NotImplemented
        return self.spec is other.spec and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        if not self.terms:
            return True
        mono = (0,) * len(self.spec.names)
        if set(self.terms) != {mono}:
            return False
        coeff = self.terms[mono]
        return all(c == 0 for c in coeff[1:])

    def rational_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_rational():
            raise NonPolynomial("element is not rational")
        return self.terms[(0,) * len(self.spec.names)][0]

    def has_transcendental_part(self) -> bool:
        zero_mono = (0,) * len(self.spec.names)
        return any(m != zero_mono for m in self.terms)

    def theta_vector(self) -> tuple[Fraction, ...]:
        """Coefficient vector over the theta power basis; requires no
        transcendental part."""
        if self.has_transcendental_part():
            raise NonPolynomial("element involves transcendentals")
        if self.is_zero():
            return self.spec._zero_coeff
        return self.terms[(0,) * len(self.spec.names)]

    # -- ring operations ------------------------------------------------------

    def _binop_check(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.spec.rational(other)
        if not isinstance(other, DomainElement) or other.spec is not self.spec:
            raise TypeError("operands from different domains")
        return other

    def __add__(self, other):
        other = self._binop_check(other)
        out = dict(self.terms)
        sp = self.spec
        for m, c in other.terms.items():
            out[m] = sp._cadd(out[m], c) if m in out else c
        return DomainElement(sp, out)

    __radd__ = __add__

    def __neg__(self):
        sp = self.spec
        return DomainElement(sp, {m: sp._cneg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._binop_check(other))

    def __rsub__(self, other):
        return (-self) + self.spec.rational(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            sp = self.spec
            if s == 0:
                return sp.zero()
            return DomainElement(
                sp, {m: sp._cscale(c, s) for m, c in self.terms.items()}
            )
        other = self._binop_check(other)
        sp = self.spec
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = sp._cmul(c1, c2)
                out[m] = sp._cadd(out[m], c) if m in out else c
        return DomainElement(sp, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise NonPolynomial("negative powers are not in the domain")
        out = self.spec.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, q) -> "DomainElement":
        return self * Fraction(q)

    # -- numerics -------------------------------------------------------------

    def enclosure(self, level: int) -> Interval:
        sp = self.spec
        theta_iv = sp.theta_enclosure(level) if sp.min_poly is not None else None
        sym_iv = [sp.symbol_enclosure(i, level) for i in range(len(sp.names))]
        total = (Fraction(0), Fraction(0))
        for mono, coeff in self.terms.items():
            ci = (coeff[0], coeff[0])
            if theta_iv is not None:
                tp = (Fraction(1), Fraction(1))
                acc = (coeff[0], coeff[0])
                for k in range(1, len(coeff)):
                    tp = iv_mul(tp, theta_iv)
                    if coeff[k] != 0:
                        acc = iv_add(acc, iv_scale(tp, coeff[k]))
                ci = acc
            mi = ci
            for i, e in enumerate(mono):
                if e:
                    mi = iv_mul(mi, iv_pow(sym_iv[i], e))
            total = iv_add(total, mi)
        return total

    def sign(self, budget: int = DEFAULT_BUDGET) -> int:
        """Exact sign: 0 iff the canonical form is zero, else decided by
        refining the enclosure until it excludes zero.

        Raises BudgetExceeded (with the last enclosure) if the refinement cap
        is reached; it never returns a wrong sign.
        """
        if self.is_zero():
            return 0
        level = 0
        enc = self.enclosure(level)
        while enc[0] <= 0 <= enc[1]:
            level += 1
            if level > budget:
                raise BudgetExceeded(enc)
            enc = self.enclosure(level)
        return 1 if enc[0] > 0 else -1

    def __repr__(self):
        return f"DomainElement({format_element(self)})"


def sign(e: DomainElement, budget: int = DEFAULT_BUDGET) -> int:
    return e.sign(budget)


def q_coordinates(elements: Iterable[DomainElement]):
    """Rational coordinates of elements over their joint monomial/theta basis.

    Returns (basis, rows): basis is a sorted list of (monomial, theta_power)
    pairs, rows[i] reproduces elements[i] exactly.  Q-linear relations among
    the inputs correspond to rational null vectors of the row matrix.
    """
    elements = list(elements)
    support = set()
    for e in elements:
        for mono, coeff in e.terms.items():
            for k, c in enumerate(coeff):
                if c != 0:
                    support.add((mono, k))
    basis = sorted(support)
    index = {b: i for i, b in enumerate(basis)}
    rows = []
    for e in elements:
        row = [Fraction(0)] * len(basis)
        for mono, coeff in e.terms.items():
            for k, c in enumerate(coeff):
                if c != 0:
                    row[index[(mono, k)]] = c
        rows.append(row)
    return basis, rows


def evaluate_qpoly(p: Sequence, x: DomainElement) -> DomainElement:
    """Evaluate a rational polynomial (ascending coefficients) at a domain
    element, by Horner's rule."""
    acc = x.spec.zero()
    for c in reversed(list(p)):
        acc = acc * x + x.spec.rational(c)
    return acc


def minimal_polynomial(e: DomainElement) -> realroots.QPoly:
    """Minimal polynomial over Q of a purely algebraic element (monic)."""
    if e.has_transcendental_part():
        raise NonPolynomial("transcendental elements have no minimal polynomial")
    from .linalg import rational_kernel

    vec = e.theta_vector()
    d = e.spec.theta_degree
    powers = [e.spec.one()]
    for k in range(1, d + 1):
        powers.append(powers[-1] * e)
        rows = [list(p.theta_vector()) for p in powers]
        # a relation sum_i c_i e^i = 0 is a null vector of the transpose
        cols = [[rows[i][j] for i in range(len(rows))] for j in range(d)]
        null = rational_kernel(cols)
        if null:
            rel = null[0]
            lead = rel[-1]
            if lead == 0:
                # take highest nonzero as leading coefficient
                while rel and rel[-1] == 0:
                    rel = rel[:-1]
                lead = rel[-1]
            return realroots.poly([c / lead for c in rel])
    raise AssertionError("no relation found below field degree")


def to_real_algebraic(e: DomainElement, budget: int = DEFAULT_BUDGET) -> realroots.RealAlgebraic:
    """Represent a purely algebraic element as a standalone algebraic number."""
    p = minimal_polynomial(e)
    if realroots.degree(p) == 1:
        return realroots.RealAlgebraic.from_rational(-p[0] / p[1])
    level = 0
    while True:
        lo, hi = e.enclosure(level)
        if (
            realroots.evaluate(p, lo) != 0
            and realroots.evaluate(p, hi) != 0
            and realroots.count_roots(p, lo, hi) == 1
        ):
            return realroots.RealAlgebraic(p, (lo, hi))
        level += 1
        if level > budget:
            raise BudgetExceeded((lo, hi))


def format_element(e: DomainElement) -> str:
    if e.is_zero():
        return "0"
    bits = []
    for mono, coeff in sorted(e.terms.items()):
        mono_txt = "*".join(
            f"{e.spec.names[i]}^{k}" if k > 1 else e.spec.names[i]
            for i, k in enumerate(mono)
            if k
        )
        coeff_bits = []
        for j, c in enumerate(coeff):
            if c == 0:
                continue
            if j == 0:
                coeff_bits.append(str(c))
            elif j == 1:
                coeff_bits.append(f"{c}*theta")
            else:
                coeff_bits.append(f"{c}*theta^{j}")
        ct = " + ".join(coeff_bits)
        if mono_txt:
            bits.append(f"({ct})*{mono_txt}" if len(coeff_bits) > 1 else f"{ct}*{mono_txt}")
        else:
            bits.append(f"({ct})" if len(coeff_bits) > 1 else ct)
    return " + ".join(bits)
