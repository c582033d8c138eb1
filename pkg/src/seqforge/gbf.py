"""Generalized Boolean functions Z_2^m -> Z_q and the quadratic GCP generator."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .corrcore import PhaseSequence, _check_modulus
from .gcp import GcpPair


def _canon(monomial) -> tuple[int, ...]:
    return tuple(sorted(set(int(v) for v in monomial)))


@dataclass(frozen=True)
class Gbf:
    """f = sum_S c_S prod_{i in S} x_i, with monomials as sorted variable tuples.

    The empty tuple is the constant term. Variables are numbered 1..m.
    """

    m: int
    q: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...] = field(default=())

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a GBF needs at least one variable")
        _check_modulus(self.q)
        merged: dict[tuple[int, ...], int] = {}
        for mono, c in self.coeffs:
            mono = _canon(mono)
            if any(not 1 <= v <= self.m for v in mono):
                raise ValueError(f"monomial {mono} uses a variable outside 1..{self.m}")
            merged[mono] = (merged.get(mono, 0) + int(c)) % self.q
        object.__setattr__(self, "coeffs",
                           tuple(sorted((k, v) for k, v in merged.items() if v)))

    @classmethod
    def from_terms(cls, m: int, q: int, terms: Mapping[Sequence[int], int]) -> "Gbf":
        """``Gbf.from_terms(2, 2, {(1, 2): 1, (1,): 1, (2,): 1, (): 1})`` is x1x2+x1+x2+1."""
        return cls(m, q, tuple((tuple(k), v) for k, v in terms.items()))

    def __add__(self, other: "Gbf") -> "Gbf":
        if (self.m, self.q) != (other.m, other.q):
            raise ValueError("GBFs must share m and q to be added")
        return Gbf(self.m, self.q, self.coeffs + other.coeffs)

    def plus_constant(self, c: int) -> "Gbf":
        return Gbf(self.m, self.q, self.coeffs + (((), c),))

    def __call__(self, *x: int) -> int:
        if len(x) != self.m:
            raise ValueError(f"expected {self.m} arguments")
        total = 0
        for mono, c in self.coeffs:
            if all(x[v - 1] for v in mono):
                total += c
        return total % self.q

    def truth_table(self) -> np.ndarray:
        """Exponents f_I for I = 0..2^m-1, with x_1 the least-significant bit of I."""
        idx = np.arange(2 ** self.m)
        bits = [(idx >> (v - 1)) & 1 for v in range(1, self.m + 1)]
        out = np.zeros(idx.size, dtype=np.int64)
        for mono, c in self.coeffs:
            term = np.ones(idx.size, dtype=np.int64)
            for v in mono:
                term = term * bits[v - 1]
            out += c * term
        return np.mod(out, self.q)


def evaluate(f: Gbf) -> PhaseSequence:
    """psi(f): the length-2^m phase sequence of ``f``."""
    return PhaseSequence(f.q, f.truth_table())


def quadratic_form(m: int, q: int, h: int, perm: Sequence[int], c: Sequence[int]) -> Gbf:
    """2^{h-1} * sum x_{pi(i)} x_{pi(i+1)} + sum c_k x_k."""
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{m}")
    if len(c) != m:
        raise ValueError(f"linear coefficient vector must have length {m}")
    if h < 1:
        raise ValueError("h must be >= 1")
    w = 2 ** (h - 1)
    terms: list[tuple[tuple[int, ...], int]] = []
    for i in range(m - 1):
        terms.append(((perm[i], perm[i + 1]), w))
    for k, ck in enumerate(c, start=1):
        terms.append(((k,), int(ck)))
    return Gbf(m, q, tuple(terms))


def quadratic_gcp(m: int, q: int, h: int, perm: Sequence[int], c: Sequence[int],
                  theta: int = 0, theta2: int = 0) -> GcpPair:
    """Golay pair (psi(f + theta), psi(f + 2^{h-1} x_{pi(1)} + theta2)) of length 2^m.

    The coefficient 2^{h-1} is reduced mod q as written; the returned pair is
    re-checked by the GcpPair constructor, so an (m, q, h) combination that
    does not yield a complementary pair raises instead of returning garbage.
    """
    f = quadratic_form(m, q, h, perm, c)
    first = evaluate(f.plus_constant(theta))
    g = f + Gbf(m, q, (((int(perm[0]),), 2 ** (h - 1)),))
    second = evaluate(g.plus_constant(theta2))
    return GcpPair(first, second)
