"""Circulant-Hadamard, recursive CZCS/GCS, circulant-block GCS, CCC and CZCSS builders."""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .corrcore import RangeError, SequenceMatrix, block, circulant, truncate_columns
from .gbf import Gbf, evaluate
from .gcp import GcpPair, complementary_mate, factor_length, gcp_for
from .verify import is_hadamard


class DoublingVariant(enum.Enum):
    """Sign pattern of one doubling step [[s00 E, s01 E], [s10 E, s11 E]]."""

    F = ((1, 1), (1, -1))
    G = ((1, 1), (-1, 1))
    H = ((-1, 1), (1, 1))
    I = ((1, -1), (1, 1))

    @classmethod
    def parse(cls, v) -> "DoublingVariant":
        if isinstance(v, cls):
            return v
        try:
            return cls[str(v).upper()]
        except KeyError:
            raise ValueError(f"unknown doubling variant {v!r}; choose from F, G, H, I") from None


@dataclass(frozen=True)
class CodeSet:
    """N codes, each an M x L sequence matrix of one common shape."""

    codes: tuple[SequenceMatrix, ...]

    def __post_init__(self):
        codes = tuple(self.codes)
        if not codes:
            raise ValueError("a code set needs at least one code")
        if any(c.shape != codes[0].shape or c.q != codes[0].q for c in codes):
            raise ValueError("codes must share shape and modulus")
        object.__setattr__(self, "codes", codes)

    @property
    def q(self) -> int:
        return self.codes[0].q

    @property
    def N(self) -> int:
        return len(self.codes)

    @property
    def M(self) -> int:
        return self.codes[0].M

    @property
    def L(self) -> int:
        return self.codes[0].L

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self):
        return iter(self.codes)

    def __getitem__(self, i) -> SequenceMatrix:
        return self.codes[i]


@dataclass(frozen=True)
class CzcsParams:
    M: int
    L: int
    Z: int
    n: int
    k: int

    @classmethod
    def for_construction(cls, n: int, k: int) -> "CzcsParams":
        if n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= k <= 2 ** (n + 1) - 1:
            raise RangeError(f"k={k} outside [0, {2 ** (n + 1) - 1}] for n={n}")
        Z = 2 ** (n + 1) - (k - 2 ** n) * (k // 2 ** n)
        return cls(M=2 ** (n + 2), L=2 ** (n + 2) - k, Z=Z, n=n, k=k)

    def label(self) -> str:
        return f"({self.M},{self.L},{self.Z})-CZCS"


# -- order-4 circulant Hadamard --------------------------------------------

def chm4_function(q: int, theta1: int, theta2: int, theta3: int) -> Gbf:
    """f(x1, x2) = (q/2)(x1x2 + theta1 x1 + theta2 x2) + theta3."""
    if q < 2 or q % 2:
        raise ValueError(f"q must be a positive even integer, got {q}")
    for t in (theta1, theta2, theta3):
        if not 0 <= t < q:
            raise ValueError(f"theta values must lie in [0, {q - 1}]")
    h = q // 2
    return Gbf.from_terms(2, q, {(1, 2): h, (1,): h * theta1, (2,): h * theta2, (): theta3})


def circulant_hadamard4(q: int = 2, theta1: int = 1, theta2: int = 1, theta3: int = 1) -> SequenceMatrix:
    """E_4 = Cir(psi(f)); the defaults give the -1-diagonal matrix."""
    return circulant(evaluate(chm4_function(q, theta1, theta2, theta3)))


def enumerate_chm4() -> list[SequenceMatrix]:
    """The 8 binary circulant Hadamard matrices of order 4, over theta in {0,1}^3."""
    return [circulant_hadamard4(2, *t) for t in itertools.product((0, 1), repeat=3)]


# -- recursive doubling ------------------------------------------------------

def _double(E: SequenceMatrix, variant: DoublingVariant) -> SequenceMatrix:
    pick = {1: E, -1: E.negated()}
    (s00, s01), (s10, s11) = variant.value
    return block([[pick[s00], pick[s01]], [pick[s10], pick[s11]]])


def doubling_chain(E4: SequenceMatrix, n: int, variant=DoublingVariant.F) -> SequenceMatrix:
    """Order-2^{n+2} matrix from n doubling steps of a 4x4 circulant Hadamard seed.

    Inner steps use the F pattern; ``variant`` applies to the outermost step.
    """
    variant = DoublingVariant.parse(variant)
    if E4.shape != (4, 4):
        raise ValueError(f"seed must be 4x4, got {E4.shape}")
    if not is_hadamard(E4):
        raise ValueError("seed is not a Hadamard matrix")
    if n < 1:
        raise ValueError("n must be >= 1")
    E = E4
    for step in range(n):
        E = _double(E, variant if step == n - 1 else DoublingVariant.F)
    return E


def _default_e4(E4: Optional[SequenceMatrix]) -> SequenceMatrix:
    return circulant_hadamard4(2, 1, 1, 1) if E4 is None else E4


def czcs_matrix(n: int, k: int, variant=DoublingVariant.F,
                E4: Optional[SequenceMatrix] = None) -> tuple[SequenceMatrix, CzcsParams]:
    """Truncated doubling-chain matrix with its claimed (M, L, Z) parameters."""
    params = CzcsParams.for_construction(n, k)
    return truncate_columns(doubling_chain(_default_e4(E4), n, variant), k), params


def gcs_truncated(E4: Optional[SequenceMatrix], n: int, k: int, variant=DoublingVariant.F) -> SequenceMatrix:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= 2 ** (n + 1) - 2:
        raise RangeError(f"k={k} outside [0, {2 ** (n + 1) - 2}] for n={n}")
    return truncate_columns(doubling_chain(_default_e4(E4), n, variant), k)


# -- circulant-block GCS -----------------------------------------------------

def gcs_from_pair(pair: GcpPair, k: int = 0, mate: Optional[GcpPair] = None) -> SequenceMatrix:
    """[[Cir(a), Cir(b)], [Cir(c), Cir(d)]] with k trailing columns removed."""
    mate = complementary_mate(pair) if mate is None else mate
    N = len(pair)
    if not 0 <= k <= max(2 * N - 2, 0):
        raise RangeError(f"k={k} outside [0, {2 * N - 2}] for N={N}")
    G = block([[circulant(pair.a), circulant(pair.b)],
               [circulant(mate.a), circulant(mate.b)]])
    return truncate_columns(G, k)


def gcs_circulant(N: int, k: int = 0) -> SequenceMatrix:
    """(2N, 2N-k)-GCS built from gcp_for(N) and its complementary mate."""
    factor_length(N)
    return gcs_from_pair(gcp_for(N), k)


def hadamard_2N(N: int) -> SequenceMatrix:
    return gcs_circulant(N, 0)


# -- code sets ----------------------------------------------------------------

def row_product_codes(G: SequenceMatrix) -> CodeSet:
    """Code i is row R_i multiplied entrywise into every row of G."""
    if G.M != G.L:
        raise ValueError(f"G must be square, got {G.shape}")
    return CodeSet(tuple(SequenceMatrix(G.q, np.mod(G.exps[i] + G.exps, G.q)) for i in range(G.M)))


def ccc_codes(G: SequenceMatrix) -> CodeSet:
    """(2N, 2N, 2N)-CCC from a square circulant-block GCS."""
    return row_product_codes(G)


def czcss_codes(E4: Optional[SequenceMatrix] = None, n: int = 1, variant=DoublingVariant.F) -> CodeSet:
    """(2^{n+2}, 2^{n+2}, 2^{n+2}, 2^{n+1})-CZCSS from the doubling chain."""
    return row_product_codes(doubling_chain(_default_e4(E4), n, variant))


def czcss_zone(n: int) -> int:
    return 2 ** (n + 1)
