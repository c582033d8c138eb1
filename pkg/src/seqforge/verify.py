"""Brute-force property checks for matrices, pairs and code sets.

Nothing here imports the construction modules: every check reads raw
exponents and evaluates the defining correlation sums directly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np

from .corrcore import (
    DimensionError,
    EXACT_MODULI,
    PhaseSequence,
    SequenceMatrix,
    ZERO_TOL,
    adjacent_sum_profile,
    auto_sum_profile,
    correlation_profile,
    gaussian_parts,
    lags,
    pointwise_sum_profile,
    profile_is_zero,
)


@dataclass(frozen=True)
class Witness:
    """First violated condition: shift, offending value and the rows/codes involved."""

    lam: int
    value: complex
    indices: tuple = ()

    def to_dict(self) -> dict:
        return {"lambda": self.lam, "value": _render(self.value), "indices": list(self.indices)}


@dataclass(frozen=True)
class VerifyReport:
    property: str
    holds: bool
    witness: Optional[Witness] = None
    max_zone: Optional[int] = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("a report carries a witness exactly when the property fails")

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"property": self.property, "holds": self.holds,
                               "witness": self.witness.to_dict() if self.witness else None}
        if self.max_zone is not None:
            out["max_zone"] = self.max_zone
        out.update(self.details)
        return out


def _render(z: complex):
    z = complex(z)
    if z.imag == 0 and float(z.real).is_integer():
        return int(z.real)
    return {"re": float(f"{z.real:.12g}"), "im": float(f"{z.imag:.12g}")}


def _as_complex(v) -> complex:
    z = complex(v)
    if z.real.is_integer() and z.imag.is_integer():
        return complex(int(z.real), int(z.imag))
    return z


def _first_nonzero(values: np.ndarray, mask: np.ndarray, q: int, L: int) -> Optional[tuple[int, complex]]:
    """First (lam, value) in ``lags(L)`` order where ``mask`` holds and the value is nonzero."""
    bad = mask & ~profile_is_zero(values, q, L)
    if not bad.any():
        return None
    pos = int(np.argmax(bad))
    return int(lags(L)[pos]), _as_complex(values[pos])


def _nonneg_first(values: np.ndarray, mask: np.ndarray, q: int, L: int):
    """Like :func:`_first_nonzero` but scans lam = 0, 1, ... before negative shifts."""
    order = np.argsort(np.where(lags(L) >= 0, lags(L), L - lags(L)), kind="stable")
    bad = (mask & ~profile_is_zero(values, q, L))[order]
    if not bad.any():
        return None
    pos = order[int(np.argmax(bad))]
    return int(lags(L)[pos]), _as_complex(values[pos])


# -- Hadamard ---------------------------------------------------------------

def gram(M: SequenceMatrix) -> np.ndarray:
    """M M^H; integer-exact for q in {2, 4}."""
    if M.q in EXACT_MODULI:
        re, im = gaussian_parts(M.exps, M.q)
        g_re = re @ re.T + im @ im.T
        g_im = im @ re.T - re @ im.T
        return g_re.astype(np.complex128) + 1j * g_im
    V = M.values()
    return V @ V.conj().T


def is_hadamard(M: SequenceMatrix) -> VerifyReport:
    """M M^H == n I_n (plain transpose for q = 2)."""
    n, L = M.shape
    if n != L:
        raise DimensionError(f"Hadamard check needs a square matrix, got {M.shape}")
    G = gram(M) - n * np.eye(n)
    bad = G != 0 if M.exact else np.abs(G) > ZERO_TOL * n
    if not bad.any():
        return VerifyReport("hadamard", True)
    i, j = (int(x) for x in np.argwhere(bad)[0])
    return VerifyReport("hadamard", False,
                        Witness(0, _as_complex(G[i, j] + (n if i == j else 0)), (i, j)))


# -- complementary sets and pairs -------------------------------------------

def is_gcs(M: SequenceMatrix) -> VerifyReport:
    """Row autocorrelations sum to zero at every nonzero shift."""
    L = M.L
    prof = auto_sum_profile(M)
    hit = _nonneg_first(prof, lags(L) > 0, M.q, L)
    if hit is None:
        return VerifyReport("gcs", True)
    return VerifyReport("gcs", False, Witness(hit[0], hit[1], tuple(range(M.M))))


def _pair_rows(p) -> tuple[PhaseSequence, PhaseSequence]:
    if isinstance(p, SequenceMatrix):
        if p.M != 2:
            raise DimensionError("a pair matrix must have exactly two rows")
        return p.row(0), p.row(1)
    a, b = p
    return a, b


def is_gcp(p) -> VerifyReport:
    """``p`` may be a GcpPair, a 2-row SequenceMatrix or a tuple of sequences."""
    a, b = _pair_rows(p)
    if len(a) != len(b) or a.q != b.q:
        raise DimensionError("pair members must share length and modulus")
    report = is_gcs(SequenceMatrix.from_rows([a, b]))
    return VerifyReport("gcp", report.holds, report.witness)


def is_mate(p, mate) -> VerifyReport:
    """accf(a, c) + accf(b, d) vanishes at every nonzero shift."""
    a, b = _pair_rows(p)
    c, d = _pair_rows(mate)
    if len({len(a), len(b), len(c), len(d)}) != 1:
        raise DimensionError("pairs must have equal lengths")
    L = len(a)
    prof = correlation_profile(a, c) + correlation_profile(b, d)
    hit = _nonneg_first(prof, lags(L) != 0, a.q, L)
    if hit is None:
        return VerifyReport("mate", True)
    return VerifyReport("mate", False, Witness(hit[0], hit[1], (0, 1)))


# -- cross Z-complementary sets ---------------------------------------------

def _zone_masks(L: int, Z: int, both_signs: bool):
    lam = lags(L)
    mag = np.abs(lam) if both_signs else np.where(lam >= 0, lam, -1)
    t1 = (mag >= 1) & (mag <= Z)
    t2 = (mag >= L - Z) & (mag <= L - 1) & (mag >= 1)
    return t1, t2


def czcs_violation(M: SequenceMatrix, Z: int, both_signs: bool = False):
    """First violated CZCS condition for zone width Z, or None.

    By default sums are evaluated for lam >= 0 and the negative side is taken
    to follow by conjugate symmetry; ``both_signs`` evaluates negative shifts
    of the adjacent cross sum literally as well.
    """
    L = M.L
    auto = auto_sum_profile(M)
    adj = adjacent_sum_profile(M)
    t1, t2 = _zone_masks(L, Z, both_signs)
    hit = _nonneg_first(auto, t1 | t2, M.q, L)
    if hit is not None:
        return "auto", hit
    hit = _nonneg_first(adj, t2, M.q, L)
    if hit is not None:
        return "adjacent", hit
    return None


def czcs_max_zone(M: SequenceMatrix, bound: Optional[int] = None, both_signs: bool = False) -> VerifyReport:
    """Largest Z in [0, L-1] for which M satisfies both CZCS sums.

    The conditions only grow with Z, so the scan stops at the first failure.
    ``holds`` means max_zone >= bound (bound defaults to 1).
    """
    L = M.L
    best, failure = 0, None
    for Z in range(1, L):
        v = czcs_violation(M, Z, both_signs)
        if v is not None:
            failure = v
            break
        best = Z
    need = 1 if bound is None else bound
    details = {"L": L, "M": M.M, "requested": bound, "both_signs": both_signs}
    if best >= need:
        return VerifyReport("czcs", True, max_zone=best, details=details)
    if failure is None:
        failure = ("zone", (0, 0j))
    kind, (lam, val) = failure
    details["violated"] = kind
    return VerifyReport("czcs", False, Witness(lam, val, tuple(range(M.M))), max_zone=best, details=details)


# -- code sets --------------------------------------------------------------

def _codes(S) -> list[SequenceMatrix]:
    codes = list(S.codes) if hasattr(S, "codes") else list(S)
    if not codes:
        raise DimensionError("empty code set")
    shape, q = codes[0].shape, codes[0].q
    if any(c.shape != shape or c.q != q for c in codes):
        raise DimensionError("all codes must share shape and modulus")
    return codes


def is_ccc(S) -> VerifyReport:
    """Pointwise cross sums equal ML at (lam=0, p=p') and vanish everywhere else."""
    codes = _codes(S)
    M, L = codes[0].shape
    q = codes[0].q
    lam = lags(L)
    for p, cp in enumerate(codes):
        for r, cr in enumerate(codes):
            prof = pointwise_sum_profile(cp, cr)
            if p == r:
                peak = prof[L - 1]
                if not profile_is_zero(np.array([peak - M * L]), q, L)[0]:
                    return VerifyReport("ccc", False, Witness(0, _as_complex(peak), (p, r)))
                mask = lam != 0
            else:
                mask = np.ones_like(lam, dtype=bool)
            hit = _nonneg_first(prof, mask, q, L)
            if hit is not None:
                return VerifyReport("ccc", False, Witness(hit[0], hit[1], (p, r)))
    return VerifyReport("ccc", True, details={"N": len(codes), "M": M, "L": L})


def is_czcss(S, Z: int, both_signs: bool = False) -> VerifyReport:
    """Check the four CZCSS conditions for zone width Z.

    Intra-code: auto sums on (T1 | T2), adjacent sums on T2.
    Inter-code (p != p'): pointwise sums on {0} | T1 | T2, adjacent sums on T2.
    Pointwise inter-code sums are checked over all ordered pairs, which
    covers negative shifts exactly; adjacent sums follow ``both_signs``.
    """
    codes = _codes(S)
    N = len(codes)
    M, L = codes[0].shape
    q = codes[0].q
    t1, t2 = _zone_masks(L, Z, both_signs)
    t1_any, t2_any = _zone_masks(L, Z, True)
    lam = lags(L)
    optimal = Z * 2 * M == N * L
    details = {"N": N, "M": M, "L": L, "Z": Z, "optimal": bool(optimal), "both_signs": both_signs}

    def fail(cond, hit, idx):
        d = dict(details, violated=cond)
        return VerifyReport("czcss", False, Witness(hit[0], hit[1], idx), details=d)

    for p, c in enumerate(codes):
        hit = _nonneg_first(auto_sum_profile(c), t1_any | t2_any, q, L)
        if hit:
            return fail("intra-auto", hit, (p, p))
        hit = _nonneg_first(adjacent_sum_profile(c), t2, q, L)
        if hit:
            return fail("intra-adjacent", hit, (p, p))
    for p, cp in enumerate(codes):
        for r, cr in enumerate(codes):
            if p == r:
                continue
            zone = (lam == 0) | t1_any | t2_any
            hit = _nonneg_first(pointwise_sum_profile(cp, cr), zone, q, L)
            if hit:
                return fail("inter-pointwise", hit, (p, r))
            hit = _nonneg_first(adjacent_sum_profile(cp, cr), t2, q, L)
            if hit:
                return fail("inter-adjacent", hit, (p, r))
    return VerifyReport("czcss", True, details=details)


# -- classification ---------------------------------------------------------

class GcsClass(enum.Enum):
    TYPE1 = "type-1"
    TYPE2 = "type-2"
    NOT_GCS = "not-gcs"


def classify_gcs(M: SequenceMatrix) -> GcsClass:
    """Type-1: square GCS that is Hadamard; type-2: square GCS that is not."""
    if M.M != M.L:
        raise DimensionError(f"classification needs a square matrix, got {M.shape}")
    if not is_gcs(M):
        return GcsClass.NOT_GCS
    return GcsClass.TYPE1 if is_hadamard(M) else GcsClass.TYPE2


def hadamard_rows_are_gcs(M: SequenceMatrix) -> VerifyReport:
    """Every Hadamard matrix is a square GCS; requires a Hadamard input."""
    if not is_hadamard(M):
        raise ValueError("input is not a Hadamard matrix")
    r = is_gcs(M)
    return VerifyReport("hadamard-rows-gcs", r.holds, r.witness)


def sylvester(order: int) -> SequenceMatrix:
    """Sylvester Hadamard matrix of a power-of-two order (reference oracle input)."""
    if order < 1 or order & (order - 1):
        raise ValueError("Sylvester order must be a power of two")
    H = np.zeros((1, 1), dtype=np.int64)
    while H.shape[0] < order:
        H = np.block([[H, H], [H, 1 - H]])
    return SequenceMatrix(2, H)
