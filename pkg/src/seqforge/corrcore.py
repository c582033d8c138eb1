"""Phase sequences, cyclic shifts, circulants and aperiodic correlation sums.

Everything is 0-indexed. A sequence is stored as a vector of Z_q exponents;
the complex entry at position i is xi**exps[i] with xi = exp(2*pi*1j/q).
For q in {2, 4} every correlation sum is a Gaussian integer and is computed
exactly by counting exponent differences. Other even q fall back to complex
doubles with a zero tolerance of 1e-9 * L.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

import numpy as np

EXACT_MODULI = (2, 4)
ZERO_TOL = 1e-9


class DimensionError(ValueError):
    """Operands have incompatible lengths, moduli or shapes."""


class RangeError(ValueError):
    """A shift or truncation parameter lies outside its admissible range."""


def _check_modulus(q: int) -> None:
    if not isinstance(q, (int, np.integer)) or q < 2 or q % 2:
        raise ValueError(f"phase modulus must be an even integer >= 2, got {q!r}")


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


def unit_values(exps, q: int) -> np.ndarray:
    """Complex entries xi**e for an exponent array (any shape)."""
    exps = np.asarray(exps)
    if q == 2:
        return (1 - 2 * exps).astype(np.complex128)
    if q == 4:
        return np.array([1, 1j, -1, -1j], dtype=np.complex128)[exps]
    return np.exp(2j * np.pi * exps / q)


def gaussian_parts(exps, q: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer (re, im) parts of xi**e; only defined for q in {2, 4}."""
    exps = np.asarray(exps)
    if q == 2:
        return (1 - 2 * exps).astype(np.int64), np.zeros(exps.shape, dtype=np.int64)
    if q == 4:
        return (np.array([1, 0, -1, 0], dtype=np.int64)[exps],
                np.array([0, 1, 0, -1], dtype=np.int64)[exps])
    raise ValueError(f"no exact Gaussian representation for q={q}")


def exponents_from_values(values, q: int, tol: float = 1e-9) -> np.ndarray:
    """Inverse of :func:`unit_values`; raises if an entry is not a q-th root of unity."""
    _check_modulus(q)
    vals = np.asarray(values, dtype=np.complex128)
    exps = np.mod(np.rint(np.angle(vals) * q / (2 * np.pi)).astype(np.int64), q)
    if not np.allclose(unit_values(exps, q), vals, atol=tol, rtol=0):
        raise ValueError(f"entries are not unimodular {q}-th roots of unity")
    return exps


@dataclass(frozen=True, eq=False)
class CorrelationValue:
    """A correlation sum. ``exact`` values carry Python ints."""

    re: Union[int, float]
    im: Union[int, float]
    exact: bool
    length: int = 1

    @classmethod
    def zero(cls, q: int, length: int = 1) -> "CorrelationValue":
        if q in EXACT_MODULI:
            return cls(0, 0, True, length)
        return cls(0.0, 0.0, False, length)

    @property
    def tolerance(self) -> float:
        return 0.0 if self.exact else ZERO_TOL * max(self.length, 1)

    def is_zero(self) -> bool:
        return abs(self.re) + abs(self.im) <= self.tolerance

    def conjugate(self) -> "CorrelationValue":
        return CorrelationValue(self.re, -self.im, self.exact, self.length)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __add__(self, other: "CorrelationValue") -> "CorrelationValue":
        if not isinstance(other, CorrelationValue):
            return NotImplemented
        return CorrelationValue(self.re + other.re, self.im + other.im,
                                self.exact and other.exact, max(self.length, other.length))

    def __neg__(self) -> "CorrelationValue":
        return CorrelationValue(-self.re, -self.im, self.exact, self.length)

    def __sub__(self, other: "CorrelationValue") -> "CorrelationValue":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, CorrelationValue):
            other = complex(other)
        if isinstance(other, (int, float, complex, np.number)):
            diff = complex(self) - complex(other)
            return abs(diff.real) + abs(diff.imag) <= self.tolerance
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __repr__(self) -> str:
        if self.im == 0:
            return f"CorrelationValue({self.re})"
        return f"CorrelationValue({self.re}{self.im:+}j)"


@dataclass(frozen=True, eq=False)
class PhaseSequence:
    """Length-L vector of Z_q exponents."""

    q: int
    exps: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_modulus(self.q)
        exps = np.asarray(self.exps)
        if exps.ndim != 1 or exps.size == 0:
            raise DimensionError("a phase sequence needs a non-empty 1-D exponent vector")
        if np.any(exps < 0) or np.any(exps >= self.q):
            raise ValueError(f"exponents must lie in [0, {self.q})")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "exps", _frozen(exps))

    @classmethod
    def from_exponents(cls, exps: Iterable[int], q: int) -> "PhaseSequence":
        return cls(q, np.mod(np.asarray(list(exps), dtype=np.int64), q))

    @classmethod
    def from_values(cls, values, q: int = 2) -> "PhaseSequence":
        """Build from complex or +-1 entries, e.g. ``from_values([1, -1, 1])``."""
        return cls(q, exponents_from_values(values, q))

    def __len__(self) -> int:
        return int(self.exps.size)

    @property
    def exact(self) -> bool:
        return self.q in EXACT_MODULI

    def values(self) -> np.ndarray:
        return unit_values(self.exps, self.q)

    def conj(self) -> "PhaseSequence":
        return PhaseSequence(self.q, np.mod(-self.exps, self.q))

    def reversed(self) -> "PhaseSequence":
        return PhaseSequence(self.q, self.exps[::-1])

    def negated(self) -> "PhaseSequence":
        return PhaseSequence(self.q, np.mod(self.exps + self.q // 2, self.q))

    def truncated(self, k: int) -> "PhaseSequence":
        """Drop the last ``k`` entries (the a^{L-k} notation)."""
        if not 0 <= k < len(self):
            raise RangeError(f"truncation k={k} outside [0, {len(self) - 1}]")
        return PhaseSequence(self.q, self.exps[: len(self) - k])

    def concat(self, other: "PhaseSequence") -> "PhaseSequence":
        if other.q != self.q:
            raise DimensionError("cannot concatenate sequences of different modulus")
        return PhaseSequence(self.q, np.concatenate([self.exps, other.exps]))

    def signs(self) -> list[int]:
        """Entries as +-1 integers (binary only)."""
        if self.q != 2:
            raise ValueError("signs() is only meaningful for q=2")
        return [1 - 2 * int(e) for e in self.exps]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseSequence):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.exps, other.exps)

    def __hash__(self) -> int:
        return hash((self.q, self.exps.tobytes()))

    def __repr__(self) -> str:
        return f"PhaseSequence(q={self.q}, exps={self.exps.tolist()})"


@dataclass(frozen=True, eq=False)
class SequenceMatrix:
    """M rows of equal-length phase sequences sharing one modulus."""

    q: int
    exps: np.ndarray = field(repr=False)

    def __post_init__(self):
        _check_modulus(self.q)
        exps = np.asarray(self.exps)
        if exps.ndim != 2 or exps.shape[0] == 0 or exps.shape[1] == 0:
            raise DimensionError("a sequence matrix needs a non-empty 2-D exponent array")
        if np.any(exps < 0) or np.any(exps >= self.q):
            raise ValueError(f"exponents must lie in [0, {self.q})")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "exps", _frozen(exps))

    @classmethod
    def from_rows(cls, rows: Sequence[PhaseSequence]) -> "SequenceMatrix":
        rows = list(rows)
        if not rows:
            raise DimensionError("need at least one row")
        q, L = rows[0].q, len(rows[0])
        if any(r.q != q or len(r) != L for r in rows):
            raise DimensionError("rows must share modulus and length")
        return cls(q, np.stack([r.exps for r in rows]))

    @classmethod
    def from_values(cls, values, q: int = 2) -> "SequenceMatrix":
        return cls(q, exponents_from_values(np.atleast_2d(values), q))

    @property
    def shape(self) -> tuple[int, int]:
        return int(self.exps.shape[0]), int(self.exps.shape[1])

    @property
    def M(self) -> int:
        return self.shape[0]

    @property
    def L(self) -> int:
        return self.shape[1]

    @property
    def exact(self) -> bool:
        return self.q in EXACT_MODULI

    @property
    def rows(self) -> tuple[PhaseSequence, ...]:
        return tuple(PhaseSequence(self.q, r) for r in self.exps)

    def row(self, i: int) -> PhaseSequence:
        return PhaseSequence(self.q, self.exps[i])

    def values(self) -> np.ndarray:
        return unit_values(self.exps, self.q)

    def negated(self) -> "SequenceMatrix":
        return SequenceMatrix(self.q, np.mod(self.exps + self.q // 2, self.q))

    def signs(self) -> list[list[int]]:
        if self.q != 2:
            raise ValueError("signs() is only meaningful for q=2")
        return (1 - 2 * self.exps).tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SequenceMatrix):
            return NotImplemented
        return self.q == other.q and np.array_equal(self.exps, other.exps)

    def __hash__(self) -> int:
        return hash((self.q, self.exps.shape, self.exps.tobytes()))

    def __repr__(self) -> str:
        return f"SequenceMatrix(q={self.q}, shape={self.shape})"


def block(grid: Sequence[Sequence[SequenceMatrix]]) -> SequenceMatrix:
    """Assemble a block matrix from equally-moduled sub-matrices."""
    qs = {m.q for row in grid for m in row}
    if len(qs) != 1:
        raise DimensionError("blocks must share a modulus")
    return SequenceMatrix(qs.pop(), np.block([[m.exps for m in row] for row in grid]))


# -- correlation ------------------------------------------------------------

def _diff_sum(d: np.ndarray, q: int, length: int) -> CorrelationValue:
    """Sum of xi**d over an array of exponent differences."""
    if d.size == 0:
        return CorrelationValue.zero(q, length)
    counts = np.bincount(np.mod(d, q), minlength=q)
    if q == 2:
        return CorrelationValue(int(counts[0] - counts[1]), 0, True, length)
    if q == 4:
        return CorrelationValue(int(counts[0] - counts[2]), int(counts[1] - counts[3]), True, length)
    s = complex(np.sum(counts * np.exp(2j * np.pi * np.arange(q) / q)))
    return CorrelationValue(s.real, s.imag, False, length)


def _check_pair(a: PhaseSequence, b: PhaseSequence) -> None:
    if a.q != b.q:
        raise DimensionError(f"modulus mismatch: {a.q} vs {b.q}")
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def accf(a: PhaseSequence, b: PhaseSequence, lam: int) -> CorrelationValue:
    """Aperiodic cross-correlation sum_i a_i conj(b_{i+lam})."""
    _check_pair(a, b)
    L = len(a)
    if lam >= L or lam <= -L:
        return CorrelationValue.zero(a.q, L)
    if lam >= 0:
        d = a.exps[: L - lam] - b.exps[lam:]
    else:
        # sum_{i >= -lam} a_i conj(b_{i+lam}), so that C(a,b)(-lam) = conj(C(b,a)(lam))
        d = a.exps[-lam:] - b.exps[:L + lam]
    return _diff_sum(d, a.q, L)


def aacf(a: PhaseSequence, lam: int) -> CorrelationValue:
    return accf(a, a, lam)


def dot(u: PhaseSequence, v: PhaseSequence) -> CorrelationValue:
    """Hermitian inner product sum_t u_t conj(v_t)."""
    return accf(u, v, 0)


def lags(L: int) -> np.ndarray:
    """Shift values covered by a correlation profile of length-L sequences."""
    return np.arange(-(L - 1), L)


def correlation_profile(a: PhaseSequence, b: PhaseSequence, exact: bool | None = None) -> np.ndarray:
    """accf(a, b, lam) for every lam in ``lags(L)``, as a complex array.

    With ``exact`` (default for q in {2, 4}) the sum runs on integer Gaussian
    parts, so every entry is an integer-valued complex; otherwise it is a
    floating-point correlation of the complex entries.
    """
    _check_pair(a, b)
    if exact is None:
        exact = a.exact
    if exact:
        ar, ai = gaussian_parts(a.exps, a.q)
        br, bi = gaussian_parts(b.exps, b.q)
        # np.correlate(y, x, 'full')[lam + L - 1] == sum_i x_i * y_{i+lam}
        re = np.correlate(br, ar, "full") + np.correlate(bi, ai, "full")
        im = np.correlate(br, ai, "full") - np.correlate(bi, ar, "full")
        return re.astype(np.complex128) + 1j * im.astype(np.complex128)
    return np.conj(np.correlate(b.values(), a.values(), "full"))


def profile_is_zero(values: np.ndarray, q: int, L: int) -> np.ndarray:
    """Elementwise zero test with the tolerance rule of :class:`CorrelationValue`."""
    if q in EXACT_MODULI:
        return values == 0
    return np.abs(values.real) + np.abs(values.imag) <= ZERO_TOL * L


# -- shifts, circulants, truncation ----------------------------------------

def shift_forward(v: PhaseSequence, k: int) -> PhaseSequence:
    """T^k(v) = (v_{k-1}, ..., v_0, v_{n-1}, ..., v_k) for 1 <= k <= n."""
    n = len(v)
    if not 1 <= k <= n:
        raise RangeError(f"forward shift k={k} outside [1, {n}]")
    idx = np.mod(k - 1 - np.arange(n), n)
    return PhaseSequence(v.q, v.exps[idx])


def shift_right(v: PhaseSequence, k: int) -> PhaseSequence:
    """k-fold right rotation (v_{n-1}, v_0, ..., v_{n-2}); k = 0 is the identity."""
    n = len(v)
    if not 0 <= k <= n - 1:
        raise RangeError(f"right shift k={k} outside [0, {n - 1}]")
    return PhaseSequence(v.q, np.roll(v.exps, k))


def circulant(a: PhaseSequence) -> SequenceMatrix:
    """Cir(a): row i is shift_forward(a, i + 1), i.e. entry [i][j] = a[(i - j) mod n]."""
    n = len(a)
    i, j = np.indices((n, n))
    return SequenceMatrix(a.q, a.exps[np.mod(i - j, n)])


def truncate_columns(M: SequenceMatrix, k: int) -> SequenceMatrix:
    """Remove the last ``k`` columns, 0 <= k < L."""
    if not 0 <= k < M.L:
        raise RangeError(f"truncation k={k} outside [0, {M.L - 1}]")
    return SequenceMatrix(M.q, M.exps[:, : M.L - k])


def kronecker(a, b) -> np.ndarray:
    """Kronecker product of two vectors; phase sequences are taken by value."""
    av = a.values() if isinstance(a, PhaseSequence) else np.asarray(a)
    bv = b.values() if isinstance(b, PhaseSequence) else np.asarray(b)
    return np.kron(av, bv)


# -- set-level sums ---------------------------------------------------------

def auto_sum(S: SequenceMatrix, lam: int) -> CorrelationValue:
    """Sum of the row autocorrelations at shift ``lam``."""
    total = CorrelationValue.zero(S.q, S.L)
    for r in S.rows:
        total = total + aacf(r, lam)
    return total


def cross_sum_adjacent(S: SequenceMatrix, lam: int) -> CorrelationValue:
    """sum_j accf(row_j, row_{(j+1) mod M}, lam)."""
    rows = S.rows
    total = CorrelationValue.zero(S.q, S.L)
    for j, r in enumerate(rows):
        total = total + accf(r, rows[(j + 1) % len(rows)], lam)
    return total


def cross_sum_pointwise(S: SequenceMatrix, T: SequenceMatrix, lam: int) -> CorrelationValue:
    """sum_i accf(S.row_i, T.row_i, lam); S and T must have identical shape."""
    if S.shape != T.shape or S.q != T.q:
        raise DimensionError(f"shape mismatch: {S.shape} vs {T.shape}")
    total = CorrelationValue.zero(S.q, S.L)
    for r, s in zip(S.rows, T.rows):
        total = total + accf(r, s, lam)
    return total


def auto_sum_profile(S: SequenceMatrix) -> np.ndarray:
    return sum(correlation_profile(r, r) for r in S.rows)


def adjacent_sum_profile(S: SequenceMatrix, T: SequenceMatrix | None = None) -> np.ndarray:
    """Profile of sum_j accf(S.row_j, T.row_{(j+1) mod M}, .); T defaults to S."""
    T = S if T is None else T
    if S.shape != T.shape:
        raise DimensionError(f"shape mismatch: {S.shape} vs {T.shape}")
    M = S.M
    return sum(correlation_profile(S.row(j), T.row((j + 1) % M)) for j in range(M))


def pointwise_sum_profile(S: SequenceMatrix, T: SequenceMatrix) -> np.ndarray:
    if S.shape != T.shape or S.q != T.q:
        raise DimensionError(f"shape mismatch: {S.shape} vs {T.shape}")
    return sum(correlation_profile(r, s) for r, s in zip(S.rows, T.rows))
