"""Nesting profiles, block permutations and their combinatorial weights.

A nesting profile records the rank r of the ambient bundle and the
nondecreasing quotient ranks s_1 <= ... <= s_l.  The coranks r_i = r - s_i
(with r_0 = r, r_{l+1} = 0) cut the positions 1..r into consecutive
blocks; block j is the interval (r_{j+1}, r_j].  A block permutation is a
permutation of {1..r} increasing on every block; these index the connected
components of the torus-fixed locus, and all exponents entering the closed
formulas are read off from them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache


class InvalidProfile(ValueError):
    """Quotient ranks not nondecreasing or out of the range 0..r."""


@dataclass(frozen=True)
class NestingProfile:
    rank: int
    s: tuple[int, ...]
    coranks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "s", tuple(int(x) for x in self.s))
        if self.rank < 1:
            raise InvalidProfile(f"rank must be positive, got {self.rank}")
        if not self.s:
            raise InvalidProfile("need at least one quotient rank")
        prev = 0
        for x in self.s:
            if x < prev:
                raise InvalidProfile(f"quotient ranks must be nondecreasing: {self.s}")
            prev = x
        if self.s[0] < 0 or self.s[-1] > self.rank:
            raise InvalidProfile(f"quotient ranks must lie in 0..{self.rank}: {self.s}")
        # coranks[i] = r_i for i = 0..l+1
        cor = (self.rank,) + tuple(self.rank - x for x in self.s) + (0,)
        object.__setattr__(self, "coranks", cor)

    @property
    def length(self) -> int:
        return len(self.s)

    def corank(self, i: int) -> int:
        """r_i for i in 0..l+1."""
        return self.coranks[i]

    def block_range(self, j: int) -> range:
        """Positions of block j: the interval (r_{j+1}, r_j], for j in 0..l."""
        return range(self.coranks[j + 1] + 1, self.coranks[j] + 1)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(self.coranks[j] - self.coranks[j + 1] for j in range(self.length + 1))

    def block_index(self, alpha: int) -> int:
        """The j with alpha in block j.  Positions in block j survive into
        the kernels K_1..K_j and none later."""
        if not 1 <= alpha <= self.rank:
            raise InvalidProfile(f"position {alpha} outside 1..{self.rank}")
        for j in range(self.length + 1):
            if self.coranks[j + 1] + 1 <= alpha <= self.coranks[j]:
                return j
        raise AssertionError("unreachable: blocks partition 1..r")


def profile_new(r: int, s: tuple[int, ...] | list[int]) -> NestingProfile:
    return NestingProfile(r, tuple(s))


@dataclass(frozen=True)
class BundleSpec:
    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(x) for x in self.degrees))
        if not self.degrees:
            raise InvalidProfile("bundle needs at least one line-bundle summand")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @property
    def max_gap(self) -> int:
        return max(self.degrees) - min(self.degrees)


@dataclass(frozen=True)
class CurveSpec:
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise InvalidProfile(f"genus must be >= 0, got {self.genus}")


class BlockPermutation:
    """A permutation of {1..r} increasing on every corank block.

    ``sigma(alpha)`` is available through call syntax with the 1-based
    position alpha.  The weight methods below feed the closed formulas:

    * ``stratum_weight(i, alpha)`` -- tangent directions gained per point of
      the i-th subscheme sitting in slot alpha (the coefficient of n_{i,alpha}
      in the attracting-cell dimension);
    * ``stratum_offset(i, genus, degrees)`` -- the constant part of the
      attracting-cell dimension contributed by the line-bundle summands;
    * ``dropped_above(i, alpha)`` -- how many of the summands dropped between
      the kernels K_{i-1} and K_i sit above slot alpha in the sigma-order;
    * ``zeta_exponent(i, j, alpha)`` -- the Lefschetz exponent of the zeta
      argument attached to (i, j, alpha); it equals the telescoped sum of
      stratum weights sum_{k=i..j} stratum_weight(k, alpha).
    """

    __slots__ = ("profile", "values", "_weights", "_offsets")

    def __init__(self, profile: NestingProfile, values: tuple[int, ...]):
        values = tuple(int(x) for x in values)
        if sorted(values) != list(range(1, profile.rank + 1)):
            raise InvalidProfile(f"not a permutation of 1..{profile.rank}: {values}")
        for j in range(profile.length + 1):
            block = profile.block_range(j)
            for a, b in zip(block, block[1:]):
                if values[a - 1] > values[b - 1]:
                    raise InvalidProfile(
                        f"{values} not increasing on block {tuple(block)}"
                    )
        self.profile = profile
        self.values = values
        self._weights: dict[tuple[int, int], int] = {}
        self._offsets: dict = {}

    def __call__(self, alpha: int) -> int:
        return self.values[alpha - 1]

    def __eq__(self, other):
        if not isinstance(other, BlockPermutation):
            return NotImplemented
        return self.profile == other.profile and self.values == other.values

    def __hash__(self):
        return hash((self.profile, self.values))

    def __repr__(self):
        return f"BlockPermutation{self.values}"

    def _above_in(self, alpha: int, positions: range) -> int:
        va = self.values[alpha - 1]
        return sum(1 for b in positions if self.values[b - 1] > va)

    def _below_in(self, alpha: int, positions: range) -> int:
        va = self.values[alpha - 1]
        return sum(1 for b in positions if self.values[b - 1] < va)

    def dropped_above(self, i: int, alpha: int) -> int:
        """Count of positions beta in (r_i, r_{i-1}] with sigma(beta) > sigma(alpha);
        defined for i = 1..l+1."""
        p = self.profile
        return self._above_in(alpha, range(p.corank(i) + 1, p.corank(i - 1) + 1))

    def stratum_weight(self, i: int, alpha: int) -> int:
        key = (i, alpha)
        w = self._weights.get(key)
        if w is None:
            p = self.profile
            w = self._below_in(
                alpha, range(p.corank(i + 1) + 1, p.corank(i) + 1)
            ) + self.dropped_above(i, alpha)
            self._weights[key] = w
        return w

    def stratum_offset(self, i: int, genus: int, degrees: tuple[int, ...]) -> int:
        key = (i, genus, degrees)
        w = self._offsets.get(key)
        if w is None:
            p = self.profile
            w = 0
            for alpha in range(p.corank(i + 1) + 1, p.corank(i) + 1):
                va = self.values[alpha - 1]
                for beta in range(p.corank(i) + 1, p.rank + 1):
                    vb = self.values[beta - 1]
                    if vb > va:
                        w += degrees[vb - 1] - degrees[va - 1] + 1 - genus
            self._offsets[key] = w
        return w

    def zeta_exponent(self, i: int, j: int, alpha: int) -> int:
        p = self.profile
        return (
            self.dropped_above(i, alpha)
            + p.corank(i)
            - p.corank(j)
            + alpha
            - p.corank(j + 1)
            - 1
        )

    def degree_prefactor(self, j: int, degrees: tuple[int, ...]) -> int:
        """Sum of the degrees of the summands absorbed into the j-th quotient:
        sum over positions alpha > r_j of deg L_{sigma(alpha)}."""
        p = self.profile
        return sum(degrees[self.values[a - 1] - 1] for a in range(p.corank(j) + 1, p.rank + 1))


@lru_cache(maxsize=None)
def block_permutations(profile: NestingProfile) -> tuple[BlockPermutation, ...]:
    """All block permutations, in lexicographic order of their value sequences.

    Enumeration picks the value set of each block in position order, so the
    cost is the Gaussian multinomial count r!/prod(block sizes!), never r!.
    """
    sizes = [len(profile.block_range(j)) for j in range(profile.length, -1, -1)]
    out: list[BlockPermutation] = []

    def place(bi: int, remaining: tuple[int, ...], acc: tuple[int, ...]):
        if bi == len(sizes):
            out.append(BlockPermutation(profile, acc))
            return
        for chosen in itertools.combinations(remaining, sizes[bi]):
            left = tuple(x for x in remaining if x not in set(chosen))
            place(bi + 1, left, acc + chosen)

    place(0, tuple(range(1, profile.rank + 1)), ())
    return tuple(out)


def enumerate_block_permutations(profile: NestingProfile):
    return block_permutations(profile)


def stratum_weight_identity(profile: NestingProfile) -> bool:
    """Check, for every block permutation, that the telescoped stratum
    weights sum_{k=i..j} stratum_weight(k, alpha) agree with the closed-form
    zeta exponents, for all 1 <= i <= j <= l and alpha in block j."""
    l = profile.length
    for sigma in block_permutations(profile):
        for j in range(1, l + 1):
            for alpha in profile.block_range(j):
                for i in range(1, j + 1):
                    lhs = sum(sigma.stratum_weight(k, alpha) for k in range(i, j + 1))
                    if lhs != sigma.zeta_exponent(i, j, alpha):
                        return False
    return True


def flag_dimension(profile: NestingProfile) -> int:
    """Dimension of the partial flag variety: sum s_i (s_{i+1} - s_i) with
    s_{l+1} = r."""
    s = profile.s + (profile.rank,)
    return sum(s[i] * (s[i + 1] - s[i]) for i in range(profile.length))


def virtual_dimension(
    profile: NestingProfile, d: tuple[int, ...], genus: int, total_degree: int
) -> int:
    """Rank of the natural obstruction theory at multidegree d:
    (1-g) dim Flag + sum d_i (s_{i+1} - s_{i-1}) - deg(E) s_l."""
    l = profile.length
    if len(d) != l:
        raise InvalidProfile(f"degree vector {d} has length != {l}")
    s = (0,) + profile.s + (profile.rank,)
    move = sum(d[i - 1] * (s[i + 1] - s[i - 1]) for i in range(1, l + 1))
    return (1 - genus) * flag_dimension(profile) + move - total_degree * s[l]
