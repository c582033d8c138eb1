"""Golay complementary pairs: embedded seeds, Turyn composition, complementary mates."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .corrcore import (
    DimensionError,
    PhaseSequence,
    correlation_profile,
    exponents_from_values,
    kronecker,
    profile_is_zero,
)


class ConstructionError(RuntimeError):
    """A construction produced output that fails its own defining property."""


class UnsupportedLengthError(ValueError):
    pass


SEED_LENGTHS = (26, 10, 2)

# Binary seeds as +-1 entries. Length 10 is the pair used in the CCC example;
# length 26 is the standard binary pair of that length.
_SEEDS = {
    2: ([1, 1], [1, -1]),
    10: ([1, 1, -1, 1, -1, 1, -1, -1, 1, 1],
         [1, 1, -1, 1, 1, 1, 1, 1, -1, -1]),
    26: ([1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1, 1, 1, 1],
         [1, 1, 1, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, -1, -1, -1]),
}


def _complementary(a: PhaseSequence, b: PhaseSequence) -> bool:
    L = len(a)
    total = correlation_profile(a, a) + correlation_profile(b, b)
    off_peak = np.arange(-(L - 1), L) != 0
    return bool(np.all(profile_is_zero(total, a.q, L)[off_peak]))


@dataclass(frozen=True)
class GcpPair:
    """Two sequences whose autocorrelations cancel at every nonzero shift.

    The property is checked on construction; an invalid pair raises
    :class:`ConstructionError`.
    """

    a: PhaseSequence
    b: PhaseSequence

    def __post_init__(self):
        if self.a.q != self.b.q or len(self.a) != len(self.b):
            raise DimensionError("pair members must share length and modulus")
        if not _complementary(self.a, self.b):
            raise ConstructionError("sequences are not a Golay complementary pair")

    @classmethod
    def from_values(cls, a, b, q: int = 2) -> "GcpPair":
        return cls(PhaseSequence.from_values(a, q), PhaseSequence.from_values(b, q))

    @property
    def q(self) -> int:
        return self.a.q

    def __len__(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter((self.a, self.b))


def seed_pair(length: int) -> GcpPair:
    """Embedded binary GCP of length 2, 10 or 26."""
    if length not in _SEEDS:
        raise UnsupportedLengthError(f"no seed pair of length {length}; available: 2, 10, 26")
    return GcpPair.from_values(*_SEEDS[length])


def complementary_mate(p: GcpPair) -> GcpPair:
    """(reverse(conj b), -reverse(conj a))."""
    return GcpPair(p.b.conj().reversed(), p.a.conj().reversed().negated())


TURYN_VARIANTS = ("reversed", "printed")
DEFAULT_TURYN_VARIANT = "reversed"


def turyn_candidate(p1: GcpPair, p2: GcpPair, variant: str = DEFAULT_TURYN_VARIANT):
    """Raw length-mn value vectors (e, f) of the Turyn composition, unvalidated.

    ``printed``:  e = a x h - b* x g,        f = b x h + a* x g
    ``reversed``: e = a x h - rev(b*) x g,   f = b x h + rev(a*) x g
    with h = (c + d)/2 and g = (c - d)/2 taken from the second pair.
    """
    if variant not in TURYN_VARIANTS:
        raise ValueError(f"unknown Turyn variant {variant!r}; choose from {TURYN_VARIANTS}")
    if p1.q != p2.q:
        raise DimensionError("pairs must share a modulus")
    a, b = p1.a.values(), p1.b.values()
    c, d = p2.a.values(), p2.b.values()
    half_sum, half_diff = (c + d) / 2, (c - d) / 2
    ac, bc = np.conj(a), np.conj(b)
    if variant == "reversed":
        ac, bc = ac[::-1], bc[::-1]
    e = kronecker(a, half_sum) - kronecker(bc, half_diff)
    f = kronecker(b, half_sum) + kronecker(ac, half_diff)
    return e, f


def turyn_compose(p1: GcpPair, p2: GcpPair, variant: str = DEFAULT_TURYN_VARIANT) -> GcpPair:
    """Length-multiplying composition of two Golay pairs."""
    e, f = turyn_candidate(p1, p2, variant)
    q = p1.q
    try:
        e_exps = exponents_from_values(e, q)
        f_exps = exponents_from_values(f, q)
    except ValueError as exc:
        raise ConstructionError(f"Turyn ({variant}) output is not unimodular") from exc
    return GcpPair(PhaseSequence(q, e_exps), PhaseSequence(q, f_exps))


def factor_length(N: int) -> list[int]:
    """Greedy factorization of N over the seed lengths (26, 10, 2)."""
    if N < 1:
        raise UnsupportedLengthError(f"N must be positive, got {N}")
    rest, factors = N, []
    for s in SEED_LENGTHS:
        while rest % s == 0:
            factors.append(s)
            rest //= s
    if rest != 1:
        raise UnsupportedLengthError(
            f"N={N} is not of the form 2^a * 10^b * 26^c (admissible lengths: 1, 2, 4, 8, 10, 16, 20, 26, ...)")
    return factors


def is_admissible(N: int) -> bool:
    try:
        factor_length(N)
    except UnsupportedLengthError:
        return False
    return True


@lru_cache(maxsize=None)
def gcp_for(N: int) -> GcpPair:
    """Binary GCP of length N = 2^a 10^b 26^c, composed from seeds largest-first."""
    factors = factor_length(N)
    if not factors:
        return GcpPair.from_values([1], [1])
    pair = seed_pair(factors[0])
    for s in factors[1:]:
        pair = turyn_compose(pair, seed_pair(s))
    return pair
