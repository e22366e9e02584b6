"""Nested-interval oracles for declared transcendental constants.

An oracle produces rational enclosures ``enclosure(level)`` with the nesting
guarantee: the interval at ``level+1`` is contained in the interval at
``level``, and widths shrink at least geometrically.  Levels index precision
doublings, matching the refinement budget of the sign routine.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import OracleExhausted

Interval = tuple[Fraction, Fraction]


class Oracle:
    name = "oracle"

    def enclosure(self, level: int) -> Interval:
        raise NotImplementedError

    def __repr__(self):
        return f"<oracle {self.name}>"


def _intersect(a: Interval, b: Interval) -> Interval:
    lo = max(a[0], b[0])
    hi = min(a[1], b[1])
    if lo > hi:
        raise AssertionError("oracle produced non-nested intervals")
    return (lo, hi)


class _CachedOracle(Oracle):
    """Caches enclosures and forces nesting by intersecting with earlier ones."""

    def __init__(self):
        self._cache: list[Interval] = []

    def _raw(self, level: int) -> Interval:
        raise NotImplementedError

    def enclosure(self, level: int) -> Interval:
        while len(self._cache) <= level:
            k = len(self._cache)
            iv = self._raw(k)
            if self._cache:
                iv = _intersect(self._cache[-1], iv)
            self._cache.append(iv)
        return self._cache[level]


class EOracle(_CachedOracle):
    """e via its factorial series; the tail after n terms is < 2/(n+1)!."""

    name = "e"

    def _raw(self, level):
        target = Fraction(1, 2**level)
        s = Fraction(0)
        term = Fraction(1)
        n = 0
        while True:
            s += term
            n += 1
            term /= n
            tail = 2 * term  # bound for sum of remaining terms
            if tail < target:
                return (s, s + tail)


class PiOracle(_CachedOracle):
    """pi from Machin's identity; arctan partial sums of an alternating
    series bracket the true value."""

    name = "pi"

    @staticmethod
    def _arctan_brackets(inv_x: Fraction, terms: int) -> Interval:
        # arctan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)); alternating, decreasing
        s = Fraction(0)
        power = inv_x
        lo = hi = None
        for k in range(terms):
            term = power / (2 * k + 1)
            s = s + term if k % 2 == 0 else s - term
            power *= inv_x * inv_x
            if k >= terms - 2:
                if k % 2 == 0:
                    hi = s
                else:
                    lo = s
        if lo is None or hi is None:  # very low term counts
            return (s - power, s + power)
        return (lo, hi)

    def _raw(self, level):
        terms = 4 + level  # each extra term gains ~ 2 decimal digits at x=5
        a5 = self._arctan_brackets(Fraction(1, 5), terms)
        a239 = self._arctan_brackets(Fraction(1, 239), max(3, terms // 2))
        lo = 16 * a5[0] - 4 * a239[1]
        hi = 16 * a5[1] - 4 * a239[0]
        return (lo, hi)


class Log2Oracle(_CachedOracle):
    """log 2 = sum 1/(k 2^k); the tail after K terms is < 2^-K/(K+1)."""

    name = "log2"

    def _raw(self, level):
        target = Fraction(1, 2**level)
        s = Fraction(0)
        k = 0
        while True:
            k += 1
            s += Fraction(1, k * 2**k)
            tail = Fraction(1, (k + 1) * 2**k)
            if tail < target:
                return (s, s + tail)


class DigitsOracle(Oracle):
    """A user constant given by a literal decimal expansion.

    The supplied digits are taken as exact leading digits of the value, so the
    enclosure at full depth is [d, d + 10^-n].  Requests beyond the supplied
    precision raise OracleExhausted rather than fabricating digits.
    """

    def __init__(self, text: str, name: str | None = None):
        text = text.strip()
        self.name = name or f"digits:{text[:12]}"
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        if "." in text:
            int_part, frac_part = text.split(".", 1)
        else:
            int_part, frac_part = text, ""
        if not (int_part + frac_part).isdigit() or not int_part:
            raise ValueError(f"bad digit literal {text!r}")
        self._scale = len(frac_part)
        value = Fraction(int(int_part + frac_part), 10**self._scale)
        self._neg = neg
        self._value = value

    def enclosure(self, level: int) -> Interval:
        # level k asks for width <= 2^-k; we have width 10^-scale available
        have = Fraction(1, 10**self._scale)
        want = Fraction(1, 2**level)
        lo, hi = self._value, self._value + have
        if self._neg:
            lo, hi = -hi, -lo
        if have > want:
            raise OracleExhausted((lo, hi), f"{self.name}: digit stream exhausted")
        return (lo, hi)


_CATALOGUE = {"pi": PiOracle, "e": EOracle, "log2": Log2Oracle}


def make_oracle(spec: str) -> Oracle:
    """Resolve an oracle id: a catalogue name or ``digits:<literal>``."""
    if spec in _CATALOGUE:
        return _CATALOGUE[spec]()
    if spec.startswith("digits:"):
        return DigitsOracle(spec[len("digits:"):], name=spec)
    raise ValueError(f"unknown oracle {spec!r}; use pi, e, log2 or digits:<literal>")
