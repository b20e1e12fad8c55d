"""Closed-form partition functions of hyperquot schemes on a curve.

Three generating functions over the multidegree lattice:

* ``motivic_partition_function`` -- the fixed-locus sum over block
  permutations of a Lefschetz prefactor times a product of twisted zeta
  evaluations; valid as a motivic identity whenever the hyperquot scheme is
  smooth and unobstructed, and well defined as a formal series always.
* ``genus0_closed_form`` -- the product formula for the projective line
  with the free bundle: the flag-variety class times geometric factors.
* ``euler_partition_function`` -- the Euler-characteristic series, valid
  with no smoothness assumption.

None of these enforce smoothness; callers consult the smoothness module
for whether the motivic output is certified to equal the motive.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .combinat import (
    BlockPermutation,
    BundleSpec,
    CurveSpec,
    NestingProfile,
    block_permutations,
)
from .curve_motives import zeta_divide
from .epoly import ONE, EPoly, flag_motive, lefschetz_power, poincare_polynomial
from .qseries import (
    MSeries,
    Window,
    geometric_divide,
    multiply_sparse,
    one_series,
    shift_rewindow,
    zero_series,
)


def _check_ranks(bundle: BundleSpec, profile: NestingProfile):
    if bundle.rank != profile.rank:
        raise ValueError(
            f"bundle rank {bundle.rank} != profile rank {profile.rank}"
        )


def default_lower_bounds(bundle: BundleSpec, profile: NestingProfile) -> tuple[int, ...]:
    """Componentwise minimum over block permutations of the degree
    prefactors: at index j this is the sum of the s_j smallest degrees.
    No nonzero coefficient sits below these bounds."""
    _check_ranks(bundle, profile)
    ordered = sorted(bundle.degrees)
    return tuple(sum(ordered[: profile.s[j - 1]]) for j in range(1, profile.length + 1))


def _direction(l: int, i: int, j: int) -> tuple[int, ...]:
    """Exponent vector of the monomial q_i ... q_j (1-based, inclusive)."""
    return tuple(1 if i <= k <= j else 0 for k in range(1, l + 1))


def _sigma_series(
    genus: int,
    degrees: tuple[int, ...],
    profile: NestingProfile,
    window: Window,
    values: tuple[int, ...],
) -> MSeries:
    """The contribution of one block permutation, truncated to the window."""
    sigma = BlockPermutation(profile, values)
    l = profile.length
    pre = tuple(sigma.degree_prefactor(j, degrees) for j in range(1, l + 1))
    if any(h - p < 0 for h, p in zip(window.hi, pre)):
        return zero_series(window)
    inner = Window(
        tuple(min(0, a - p) for a, p in zip(window.lo, pre)),
        tuple(h - p for h, p in zip(window.hi, pre)),
    )
    acc = one_series(inner)
    for j in range(1, l + 1):
        for alpha in profile.block_range(j):
            for i in range(1, j + 1):
                acc = zeta_divide(
                    acc, genus, sigma.zeta_exponent(i, j, alpha), _direction(l, i, j)
                )
    offset = sum(sigma.stratum_offset(j, genus, degrees) for j in range(1, l + 1))
    return shift_rewindow(acc, pre, lefschetz_power(offset), window)


def _sigma_task(args):
    return _sigma_series(*args)


def motivic_partition_function(
    curve: CurveSpec,
    bundle: BundleSpec,
    profile: NestingProfile,
    window: Window,
    parallel: bool = False,
) -> MSeries:
    """Sum over block permutations of the Lefschetz-weighted prefactor times
    the product of twisted zeta evaluations.  Exact integer arithmetic makes
    the reduction order irrelevant, so the parallel path is bit-identical."""
    _check_ranks(bundle, profile)
    if window.arity != profile.length:
        raise ValueError(f"window arity {window.arity} != profile length {profile.length}")
    perms = block_permutations(profile)
    args = [
        (curve.genus, bundle.degrees, profile, window, sigma.values)
        for sigma in perms
    ]
    if parallel and len(args) > 1:
        with ProcessPoolExecutor() as pool:
            parts = list(pool.map(_sigma_task, args))
    else:
        parts = [_sigma_series(*a) for a in args]
    total = zero_series(window)
    for p in parts:
        total = total + p
    return total


def genus0_closed_form(profile: NestingProfile, window: Window) -> MSeries:
    """Partition function of the free rank-r bundle on the projective line:
    the flag-variety class divided by the product of
    (1 - L**(r_i - alpha) q_i..q_j)(1 - L**(r_{i-1} - alpha + 1) q_i..q_j)
    over 1 <= i <= j <= l and alpha in block j."""
    l = profile.length
    if window.arity != l:
        raise ValueError(f"window arity {window.arity} != profile length {l}")
    inner = Window(tuple(min(0, a) for a in window.lo), window.hi)
    acc = one_series(inner)
    cls = flag_motive(profile)
    acc = MSeries(inner, {d: cls * c for d, c in acc.coeffs.items()})
    for j in range(1, l + 1):
        for alpha in profile.block_range(j):
            for i in range(1, j + 1):
                m = _direction(l, i, j)
                acc = geometric_divide(acc, lefschetz_power(profile.corank(i) - alpha), m)
                acc = geometric_divide(
                    acc, lefschetz_power(profile.corank(i - 1) - alpha + 1), m
                )
    return acc.restrict(window)


def euler_partition_function(
    curve: CurveSpec,
    bundle: BundleSpec,
    profile: NestingProfile,
    window: Window,
) -> MSeries:
    """Euler-characteristic series, valid with no smoothness assumption:
    the sum over block permutations of the prefactor monomials, times
    prod (1 - q_i..q_j)**((2g-2)(r_j - r_{j+1}))."""
    _check_ranks(bundle, profile)
    l = profile.length
    if window.arity != l:
        raise ValueError(f"window arity {window.arity} != profile length {l}")
    minpre = default_lower_bounds(bundle, profile)
    hi = tuple(h - p for h, p in zip(window.hi, minpre))
    if any(h < 0 for h in hi):
        return zero_series(window)
    inner = Window((0,) * l, hi)
    prod = one_series(inner)
    g = curve.genus
    for j in range(1, l + 1):
        e = (2 * g - 2) * (profile.corank(j) - profile.corank(j + 1))
        if e == 0:
            continue
        for i in range(1, j + 1):
            m = _direction(l, i, j)
            if e > 0:
                for _ in range(e):
                    prod = multiply_sparse(prod, [((0,) * l, ONE), (m, EPoly.from_int(-1))])
            else:
                for _ in range(-e):
                    prod = geometric_divide(prod, ONE, m)
    prefactors = Counter(
        tuple(sigma.degree_prefactor(j, bundle.degrees) for j in range(1, l + 1))
        for sigma in block_permutations(profile)
    )
    total = zero_series(window)
    for pre, mult in sorted(prefactors.items()):
        total = total + shift_rewindow(prod, pre, EPoly.from_int(mult), window)
    return total


def unnested_partition_function(
    curve: CurveSpec, bundle: BundleSpec, quotient_rank: int, window: Window
) -> MSeries:
    """Single-step special case: quotients of one fixed rank."""
    profile = NestingProfile(bundle.rank, (quotient_rank,))
    return motivic_partition_function(curve, bundle, profile, window)


def poincare_series(a: MSeries) -> dict[tuple[int, ...], dict[int, int]]:
    """Coefficientwise Poincare polynomials; the z-constant term of each
    value is the zeroth Betti number.  Raises NegativeExponent on Laurent
    coefficients."""
    return {d: poincare_polynomial(c) for d, c in a.items()}
