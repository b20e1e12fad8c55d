"""Kapranov zeta function of a curve in the E-polynomial realization.

The generating function of symmetric-product classes of a genus-g curve is
rational with numerator (1 - u t)**g (1 - v t)**g and denominator
(1 - t)(1 - L t); the numerator convention is pinned by requiring the
t-linear coefficient to be the class of the curve itself,
1 - g u - g v + uv.  Symmetric-product classes are memoized per genus and
extended monotonically in the truncation order.
"""

from __future__ import annotations

import math
import threading

from .epoly import LEFSCHETZ, ONE, EPoly, lefschetz_power
from .qseries import (
    MSeries,
    Window,
    _validate_direction,
    geometric_divide,
    multiply_sparse,
)


class InvalidTuple(ValueError):
    """Nested lengths must be nondecreasing and nonnegative."""


_sym_cache: dict[int, list[EPoly]] = {}
_cache_lock = threading.Lock()


def zeta_numerator(genus: int) -> tuple[EPoly, ...]:
    """Coefficients of (1 - u t)**g (1 - v t)**g in t, degrees 0..2g."""
    out = []
    for k in range(2 * genus + 1):
        terms = {}
        for a in range(max(0, k - genus), min(genus, k) + 1):
            b = k - a
            terms[(a, b)] = (-1) ** k * math.comb(genus, a) * math.comb(genus, b)
        out.append(EPoly(terms))
    return tuple(out)


def _projective_space(n: int) -> EPoly:
    return EPoly({(k, k): 1 for k in range(n + 1)})


def sym_classes(genus: int, order: int) -> list[EPoly]:
    """Classes of Sym^0 C .. Sym^order C for a genus-g curve."""
    if genus < 0 or order < 0:
        raise ValueError("genus and order must be >= 0")
    with _cache_lock:
        cache = _sym_cache.setdefault(genus, [])
        if len(cache) <= order:
            num = zeta_numerator(genus)
            for n in range(len(cache), order + 1):
                c = EPoly()
                for k in range(min(2 * genus, n) + 1):
                    c = c + num[k] * _projective_space(n - k)
                cache.append(c)
        return cache[: order + 1]


def sym_class(genus: int, n: int) -> EPoly:
    return sym_classes(genus, n)[n]


class ZetaSeries:
    """Truncated zeta function: coefficients c_0..c_N with c_n = [Sym^n C]."""

    __slots__ = ("genus", "order", "coefficients")

    def __init__(self, genus: int, order: int):
        self.genus = genus
        self.order = order
        self.coefficients = tuple(sym_classes(genus, order))

    def __getitem__(self, n: int) -> EPoly:
        return self.coefficients[n]


def zeta_series(genus: int, order: int) -> ZetaSeries:
    return ZetaSeries(genus, order)


def zeta_rationality_check(genus: int, order: int) -> bool:
    """Multiply the zeta expansion by (1 - t)(1 - L t) and verify every
    coefficient in degrees 2g+1..order vanishes, i.e. the numerator is a
    polynomial of degree at most 2g."""
    if order < 2 * genus + 2:
        raise ValueError("order must be at least 2*genus + 2")
    c = sym_classes(genus, order)
    one_plus_l = ONE + LEFSCHETZ
    for n in range(2 * genus + 1, order + 1):
        p = c[n] - one_plus_l * c[n - 1]
        if n >= 2:
            p = p + LEFSCHETZ * c[n - 2]
        if p:
            return False
    return True


def nested_hilb_class(genus: int, lengths: tuple[int, ...]) -> EPoly:
    """Class of the nested Hilbert scheme of points with the given
    nondecreasing length tuple: the product of the symmetric-product
    classes of the successive differences."""
    prev = 0
    out = ONE
    for n in lengths:
        if n < 0:
            raise InvalidTuple(f"lengths must be nonnegative: {tuple(lengths)}")
        if n < prev:
            raise InvalidTuple(f"lengths must be nondecreasing: {tuple(lengths)}")
        out = out * sym_class(genus, n - prev)
        prev = n
    return out


def zeta_eval(genus: int, a: int, m: tuple[int, ...], window: Window) -> MSeries:
    """The zeta function evaluated at L**a q**m: the series
    sum_n [Sym^n C] L**(a n) q**(n m), truncated to the window."""
    m = _validate_direction(window, m)
    bound = min(b // x for b, x in zip(window.hi, m) if x)
    out = {}
    if bound >= 0:
        for n, c in enumerate(sym_classes(genus, bound)):
            d = tuple(n * x for x in m)
            if window.contains(d):
                v = c * lefschetz_power(a * n)
                if v:
                    out[d] = v
    return MSeries(window, out)


def zeta_divide(series: MSeries, genus: int, a: int, m: tuple[int, ...]) -> MSeries:
    """Multiply a series by the zeta function evaluated at L**a q**m,
    truncating to the series window.

    Uses the rational form: multiply by the degree-2g numerator, then divide
    by (1 - L**a q**m) and (1 - L**(a+1) q**m) with linear-cost recurrences.
    Exact within the window provided the operand has nonnegative support and
    the window's lower bound is <= 0.
    """
    m = _validate_direction(series.window, m)
    if genus > 0:
        num = zeta_numerator(genus)
        terms = []
        for k in range(2 * genus + 1):
            coeff = num[k] * lefschetz_power(a * k)
            terms.append((tuple(k * x for x in m), coeff))
        series = multiply_sparse(series, terms)
    series = geometric_divide(series, lefschetz_power(a), m)
    series = geometric_divide(series, lefschetz_power(a + 1), m)
    return series
