"""Exact arithmetic in the ring of E-polynomials.

An E-polynomial (Hodge-Deligne polynomial) is a Laurent polynomial in two
variables u, v with arbitrary-precision integer coefficients.  Classes of
varieties are represented by their E-polynomial; the Lefschetz class L
(the class of the affine line) is the monomial u*v.  Negative exponents
are allowed, so Laurent prefactors such as L**k with k < 0 are first-class
values.

The classical specializations are fixed by three anchors:

    euler:    e(u=1, v=1),      so a genus-g curve gives 2 - 2g
    poincare: P(z) = e(-z, -z), so a genus-g curve gives 1 + 2gz + z**2
    chi_y:    e(u=y, v=1),      so the projective line gives 1 + y
"""

from __future__ import annotations

import itertools
from typing import TYPE_CHECKING, Iterable, Mapping

if TYPE_CHECKING:
    from .combinat import NestingProfile


class NegativeExponent(ValueError):
    """A specialization was asked of a Laurent input with negative exponents."""


class InvalidRange(ValueError):
    """Grassmannian parameters outside 0 <= d <= r."""


class InternalInconsistency(RuntimeError):
    """An exact polynomial division left a remainder; indicates a bug."""


class EPoly:
    """Sparse Laurent polynomial in u, v over the integers.

    Terms are stored as a mapping (u-exponent, v-exponent) -> coefficient
    with no zero coefficients.  Instances are immutable by convention:
    no method mutates ``terms`` after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        if terms:
            for (pu, pv), c in terms.items():
                if c:
                    clean[(pu, pv)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, pu: int, pv: int, coeff: int = 1) -> EPoly:
        return cls({(pu, pv): coeff})

    @classmethod
    def from_int(cls, n: int) -> EPoly:
        return cls({(0, 0): n})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = EPoly.from_int(other)
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _coerce(x) -> EPoly:
        if isinstance(x, EPoly):
            return x
        if isinstance(x, int):
            return EPoly.from_int(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to EPoly")

    def __add__(self, other) -> EPoly:
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = EPoly.__new__(EPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> EPoly:
        res = EPoly.__new__(EPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other) -> EPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> EPoly:
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> EPoly:
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        if not a:
            return ZERO
        if len(a) == 1:
            (pu, pv), c = next(iter(a.items()))
            if (pu, pv) == (0, 0):
                if c == 1:
                    res = EPoly.__new__(EPoly)
                    res.terms = dict(b)
                    return res
                out = {k: c * d for k, d in b.items()}
            else:
                out = {(k[0] + pu, k[1] + pv): c * d for k, d in b.items()}
            res = EPoly.__new__(EPoly)
            res.terms = out
            return res
        out = {}
        for (pu1, pv1), c1 in a.items():
            for (pu2, pv2), c2 in b.items():
                k = (pu1 + pu2, pv1 + pv2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        res = EPoly.__new__(EPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("EPoly exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def min_exponent(self) -> int | None:
        """Smallest exponent appearing in any variable; None for the zero polynomial."""
        if not self.terms:
            return None
        return min(min(pu, pv) for pu, pv in self.terms)

    def top_degree(self) -> int | None:
        """max over monomials of max(u-exp, v-exp); the dimension for a
        class of a smooth projective variety.  None for zero."""
        if not self.terms:
            return None
        return max(max(pu, pv) for pu, pv in self.terms)

    def reversal(self, d: int) -> EPoly:
        """The polynomial (uv)**d * self(1/u, 1/v).  Poincare duality for the
        class of a smooth projective variety of dimension d means
        ``self.reversal(d) == self``."""
        return EPoly({(d - pu, d - pv): c for (pu, pv), c in self.terms.items()})

    def is_diagonal(self) -> bool:
        """True when every monomial is a power of uv, i.e. a polynomial in L."""
        return all(pu == pv for pu, pv in self.terms)

    def __repr__(self):
        return f"EPoly({format_epoly(self)})"


ZERO = EPoly()
ONE = EPoly.from_int(1)
LEFSCHETZ = EPoly.monomial(1, 1)


def lefschetz_power(k: int) -> EPoly:
    """The monomial (uv)**k; Laurent for negative k."""
    return EPoly.monomial(k, k)


def epoly_arith(a: EPoly, b: EPoly, op: str) -> EPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def euler_number(a: EPoly) -> int:
    """Topological Euler characteristic: evaluate at u = v = 1."""
    return sum(a.terms.values())


def _require_nonnegative(a: EPoly):
    m = a.min_exponent()
    if m is not None and m < 0:
        raise NegativeExponent(
            "specialization requires nonnegative exponents, found exponent %d" % m
        )


def poincare_polynomial(a: EPoly) -> dict[int, int]:
    """Poincare polynomial in z: substitute u = v = -z.  Returned as a
    mapping degree -> coefficient with zeros dropped."""
    _require_nonnegative(a)
    out: dict[int, int] = {}
    for (pu, pv), c in a.terms.items():
        k = pu + pv
        s = out.get(k, 0) + c * (-1) ** k
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def chi_y_polynomial(a: EPoly) -> dict[int, int]:
    """chi_-y genus in y: substitute u = y, v = 1."""
    _require_nonnegative(a)
    out: dict[int, int] = {}
    for (pu, _pv), c in a.terms.items():
        s = out.get(pu, 0) + c
        if s:
            out[pu] = s
        else:
            out.pop(pu, None)
    return out


def specialize(a: EPoly, target: str):
    """Dispatch to one of the classical specializations.

    ``euler`` returns an integer; ``poincare`` and ``chi_y`` return a
    univariate polynomial as a degree -> coefficient mapping and raise
    NegativeExponent on Laurent input.
    """
    if target == "euler":
        return euler_number(a)
    if target == "poincare":
        return poincare_polynomial(a)
    if target == "chi_y":
        return chi_y_polynomial(a)
    raise ValueError(f"unknown specialization target {target!r}")


# -- quotients of products of (L**k - 1) ------------------------------------
#
# Grassmannian and flag classes are quotients of products of (L**k - 1).
# These are polynomials in L alone, so the exact division is carried out on
# univariate coefficient dictionaries keyed by L-degree.


def _diag_coeffs(a: EPoly) -> dict[int, int]:
    out = {}
    for (pu, pv), c in a.terms.items():
        if pu != pv:
            raise InternalInconsistency("expected a polynomial in L = uv")
        out[pu] = c
    return out


def _from_diag(coeffs: dict[int, int]) -> EPoly:
    return EPoly({(k, k): c for k, c in coeffs.items()})

def _lpow_minus_one_product(ks: Iterable[int]) -> dict[int, int]:
    out = {0: 1}
    for k in ks:
        nxt: dict[int, int] = {}
        for deg, c in out.items():
            nxt[deg + k] = nxt.get(deg + k, 0) + c
            nxt[deg] = nxt.get(deg, 0) - c
        out = {d: c for d, c in nxt.items() if c}
    return out


def _exact_div(num: dict[int, int], den: dict[int, int]) -> dict[int, int]:
    """Exact univariate division over the integers; raises on any remainder."""
    num = dict(num)
    quot: dict[int, int] = {}
    dtop = max(den)
    dlead = den[dtop]
    while num:
        ntop = max(num)
        if ntop < dtop:
            raise InternalInconsistency("inexact polynomial division")
        q, rem = divmod(num[ntop], dlead)
        if rem:
            raise InternalInconsistency("inexact polynomial division")
        quot[ntop - dtop] = q
        for deg, c in den.items():
            k = ntop - dtop + deg
            s = num.get(k, 0) - q * c
            if s:
                num[k] = s
            else:
                num.pop(k, None)
    return quot


def grassmannian_motive(d: int, r: int) -> EPoly:
    """Class of the Grassmannian of d-dimensional quotients of an
    r-dimensional space: the Gaussian binomial in L."""
    if d < 0 or d > r:
        raise InvalidRange(f"need 0 <= d <= r, got d={d}, r={r}")
    num = _lpow_minus_one_product(range(1, r + 1))
    den = _lpow_minus_one_product(
        itertools.chain(range(1, d + 1), range(1, r - d + 1))
    )
    return _from_diag(_exact_div(num, den))


def flag_motive(profile: NestingProfile) -> EPoly:
    """Class of the partial flag variety attached to a nesting profile:
    the Gaussian multinomial over the corank block sizes."""
    r = profile.rank
    num = _lpow_minus_one_product(range(1, r + 1))
    sizes = profile.block_sizes()
    den = _lpow_minus_one_product(
        itertools.chain.from_iterable(range(1, b + 1) for b in sizes)
    )
    return _from_diag(_exact_div(num, den))


# -- formatting and JSON -----------------------------------------------------


def _fmt_var(name: str, e: int) -> str:
    if e == 1:
        return name
    return f"{name}^{e}"


def format_epoly(a: EPoly) -> str:
    """Human-readable rendering; powers of uv are printed as powers of L."""
    if not a.terms:
        return "0"
    diagonal = a.is_diagonal()
    parts = []
    for (pu, pv) in sorted(a.terms, key=lambda k: (k[0] + k[1], k[0])):
        c = a.terms[(pu, pv)]
        if diagonal:
            mono = "" if pu == 0 else _fmt_var("L", pu)
        else:
            factors = []
            if pu:
                factors.append(_fmt_var("u", pu))
            if pv:
                factors.append(_fmt_var("v", pv))
            mono = "*".join(factors)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def epoly_to_json(a: EPoly) -> list[dict]:
    """Canonical JSON form: terms sorted lexicographically by (pu, pv),
    coefficients as decimal strings."""
    return [
        {"pu": pu, "pv": pv, "c": str(a.terms[(pu, pv)])}
        for (pu, pv) in sorted(a.terms)
    ]


def epoly_from_json(data: list[dict]) -> EPoly:
    return EPoly({(int(t["pu"]), int(t["pv"])): int(t["c"]) for t in data})
