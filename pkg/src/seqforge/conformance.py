"""Randomized conformance checks of the shift/circulant correlation identities.

Each identity has a left side evaluated by brute force (explicit shifted
copies, dot products, concatenations) and one or more right-side formula
variants written in terms of aperiodic correlations:

* ``printed`` -- the identity exactly as stated.
* ``conjugate`` (lemmas 4, 5, 6, 7, 10) -- the same identity with the
  wrap-around correlation term conjugated. It coincides with ``printed`` for
  real (binary) sequences and is the form that holds for complex ones.
* ``corrected`` (lemmas 8, 9) -- a re-derivation of the case formulas from
  the index sums; the printed case boundaries and coefficients do not match
  the brute-force sums in general.

Every instance is evaluated in exact Gaussian-integer arithmetic and, as a
separate path, in complex doubles; the two must agree.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .corrcore import ZERO_TOL, gaussian_parts, unit_values

ASSERTED_LEMMAS = (4, 5, 6, 7, 10)
REPORTED_LEMMAS = (8, 9)
ALL_LEMMAS = ASSERTED_LEMMAS + REPORTED_LEMMAS
DEFAULT_SEED = 20240601


def default_seed() -> int:
    return int(os.environ.get("SEQFORGE_SEED", DEFAULT_SEED))


# -- arithmetic helpers -------------------------------------------------------

class _Arith:
    """Vectors as complex arrays; exact mode keeps them integer-valued."""

    def __init__(self, q: int, exact: bool):
        self.q, self.exact = q, exact

    def vec(self, exps) -> np.ndarray:
        if self.exact:
            re, im = gaussian_parts(exps, self.q)
            return re.astype(np.complex128) + 1j * im
        return unit_values(exps, self.q)

    def gram(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """G[i, j] = sum_t X[i, t] conj(Y[j, t])."""
        if self.exact:
            xr, xi = X.real.astype(np.int64), X.imag.astype(np.int64)
            yr, yi = Y.real.astype(np.int64), Y.imag.astype(np.int64)
            re = xr @ yr.T + xi @ yi.T
            im = xi @ yr.T - xr @ yi.T
            return re.astype(np.complex128) + 1j * im
        return X @ Y.conj().T


def _xcorr(x: np.ndarray, y: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    """lam -> sum_i x_i conj(y_{i+lam}) over valid indices (lengths may differ)."""
    nx, ny = len(x), len(y)
    # np.correlate(y, x)[lam + nx - 1] == sum_i y_{i+lam} conj(x_i)
    full = np.conj(np.correlate(y, x, "full"))
    if np.all(np.isreal(x)) and np.all(np.isreal(y)):
        full = np.real_if_close(full).astype(np.complex128)

    def at(lam):
        lam = np.asarray(lam)
        ok = (lam > -nx) & (lam < ny)
        return np.where(ok, full[np.clip(lam + nx - 1, 0, nx + ny - 2)], 0)

    return at


def _exact_round(v: np.ndarray, exact: bool) -> np.ndarray:
    return np.round(v) if exact else v


# -- per-lemma evaluators -------------------------------------------------------
# Each returns (lhs, {variant: rhs}, params) over flattened check arrays.

def _cyclic_rows(v: np.ndarray, forward: bool) -> np.ndarray:
    L = len(v)
    i, t = np.indices((L, L))
    if forward:                      # row i-1 is T^i(v): entry v[(i-1-t) mod L]
        return v[np.mod(i - t, L)]
    return v[np.mod(t - i, L)]       # row i is T_1^i(v)


def _lemma_4_5(a, b, ar: _Arith, lemma: int):
    L = len(a)
    D = ar.gram(_cyclic_rows(a, False), _cyclic_rows(b, False))
    i, j = np.indices((L, L))
    sel = (j <= i) if lemma == 4 else (i <= j)
    i, j = i[sel], j[sel]
    lhs = D[i, j]
    Cab, Cba = _xcorr(a, b), _xcorr(b, a)
    if lemma == 4:
        kp = i - j
        printed = Cba(L - kp) + Cab(kp)
        conj = Cab(kp) + np.conj(Cba(L - kp))
    else:
        kp = j - i
        printed = Cba(kp) + Cab(L - kp)
        conj = np.conj(Cba(kp)) + Cab(L - kp)
    return lhs, {"printed": printed, "conjugate": conj}, np.stack([i, j], axis=1)


def _lemma_6(a, b, ar: _Arith):
    L = len(a)
    D = ar.gram(_cyclic_rows(a, True), _cyclic_rows(a, True))
    i, j = np.indices((L, L))
    sel = i <= j
    i, j = i[sel], j[sel]
    lhs = D[i, j]
    A = _xcorr(a, a)
    kp = j - i
    same = kp == 0
    printed = np.where(same, L, A(kp) + A(L - kp))
    conj = np.where(same, L, A(kp) + np.conj(A(L - kp)))
    return lhs, {"printed": printed, "conjugate": conj}, np.stack([i + 1, j + 1], axis=1)


def _diag_prefix(Gc: np.ndarray) -> np.ndarray:
    """P[lam, m] = sum_{t=0}^{m} Gc[t, t+lam]; zero-padded."""
    W = Gc.shape[0]
    P = np.zeros((W, W), dtype=np.complex128)
    for lam in range(W):
        d = np.diagonal(Gc, offset=lam)
        P[lam, : d.size] = np.cumsum(d)
    return P


def _truncated_row_sums(X: np.ndarray, ar: _Arith, ks: np.ndarray, lams: np.ndarray) -> np.ndarray:
    """sum over rows of AACF(lam) of X with its last k columns removed."""
    W = X.shape[1]
    P = _diag_prefix(ar.gram(X.T, X.T))
    return P[lams, W - ks - 1 - lams]


def _lemma_7(a, b, ar: _Arith):
    n = len(a)
    k, lam = np.indices((n, n))
    sel = lam <= n - 1 - k
    k, lam = k[sel], lam[sel]
    lhs = _truncated_row_sums(_cyclic_rows(a, True), ar, k, lam)
    A = _xcorr(a, a)
    printed = (n - lam - k) * (A(lam) + A(n - lam))
    conj = (n - lam - k) * (np.conj(A(lam)) + A(n - lam))
    return lhs, {"printed": printed, "conjugate": conj}, np.stack([k, lam], axis=1)


def _periodic(x, y, n):
    """m -> sum_s x_s conj(y_{(s+m) mod n}) expressed through aperiodic terms."""
    Cxy, Cyx = _xcorr(x, y), _xcorr(y, x)
    return lambda m: np.where(m == 0, Cxy(0), Cxy(m) + np.conj(Cyx(n - m)))


def _lemma_8(a, b, ar: _Arith):
    n = len(a)
    Zm = np.concatenate([_cyclic_rows(a, True), _cyclic_rows(b, True)], axis=1)
    k, lam = np.indices((2 * n - 1, 2 * n))
    sel = lam <= 2 * n - k - 1
    k, lam = k[sel], lam[sel]
    lhs = _truncated_row_sums(Zm, ar, k, lam)
    Aa, Ab, Cab = _xcorr(a, a), _xcorr(b, b), _xcorr(a, b)

    lm = np.mod(lam, n)
    low = (n - lam) * (Aa(lam) + Aa(n - lam)) + (n - lam - k) * (Ab(lam) + Ab(n - lam)) \
        + lam * (Cab(lam) + Cab(n - lam))
    high = (lam - k) * (Aa(lm) + Aa(n - lm))
    wide = np.mod(lam - k, n) * (Aa(lam) + Aa(n - lam))
    printed = np.where(k <= n - 1, np.where(lam <= n - 1, low, high), wide)

    wa, wb = np.minimum(n, 2 * n - k), np.maximum(0, n - k)
    cnt_aa = np.maximum(0, wa - lam)
    cnt_bb = np.maximum(0, wb - lam)
    lo = np.maximum(0, n - lam)
    hi = np.minimum(wa - 1, n + wb - 1 - lam)
    cnt_ab = np.maximum(0, hi - lo + 1)
    lam_in = np.minimum(lam, n)
    per_a = np.conj(Aa(lam_in)) + Aa(n - lam_in)
    per_b = np.conj(Ab(lam_in)) + Ab(n - lam_in)
    per_ab = _periodic(a, b, n)(np.mod(n - lam, n))
    corrected = cnt_aa * per_a + cnt_bb * per_b + cnt_ab * per_ab
    return lhs, {"printed": printed, "corrected": corrected}, np.stack([k, lam], axis=1)


def _prefix_at(P: np.ndarray, x: np.ndarray, last: np.ndarray) -> np.ndarray:
    """P[x, last] where the index pair is in range, zero otherwise."""
    n = P.shape[0]
    ok = (x >= 0) & (x < n) & (last >= 0)
    return np.where(ok, P[np.clip(x, 0, n - 1), np.clip(last, 0, n - 1)], 0)


def _lemma_9(a, b, ar: _Arith):
    L = len(a)
    k, lam = np.indices((L, 2 * L))
    sel = lam <= 2 * L - 1 - k
    k, lam = k[sel], lam[sel]
    m = L - k

    # brute force: A = a || -a[:L-k], B likewise, correlated at lam
    cols = np.arange(2 * L)
    keep = cols[None, :] < (2 * L - np.arange(L))[:, None]
    A = np.where(keep, np.concatenate([a, -a])[None, :], 0)
    B = np.where(keep, np.concatenate([b, -b])[None, :], 0)
    Bpad = np.concatenate([B, np.zeros_like(B)], axis=1)
    shifted = Bpad[:, cols[None, :] + cols[:, None]]          # [kk, lam, i] = B[kk, i+lam]
    table = np.einsum("ki,kli->kl", A, np.conj(shifted))
    lhs = _exact_round(table[k, lam], ar.exact)

    C12, C21 = _xcorr(a, b), _xcorr(b, a)
    Pab = _diag_prefix(np.outer(a, np.conj(b)))               # sum_{t<=c} a_t conj(b_{t+x})
    Pba = _diag_prefix(np.outer(b, np.conj(a)))
    s = L - lam
    Ct = _prefix_at(Pab, lam, m - 1 - lam)                    # C(a[:m], b[:m])(lam)
    Ct21 = _prefix_at(Pba, s, m - 1 - s)                      # C(b[:m], a[:m])(L-lam)
    Xba = _prefix_at(Pba, s, np.minimum(m - 1, L - 1 - s))    # C(b[:m], a)(L-lam)
    x = lam - L
    Ct3 = _prefix_at(Pab, x, m - 1 - x)                       # C(a[:m], b[:m])(lam-L)
    P3 = _prefix_at(Pab, x, 2 * L - k - lam - 1 - x)          # length-(2L-k-lam) prefixes

    case1 = lam <= L - k - 1
    case2 = (lam >= L - k) & (lam <= L - 1)
    printed = np.where(case1, C12(lam) + Ct - C21(s),
                       np.where(case2, -Ct21 + C12(lam), -P3))
    corrected = np.where(case1, C12(lam) + Ct - np.conj(C21(s)),
                         np.where(case2, C12(lam) - np.conj(Xba), -Ct3))
    return lhs, {"printed": printed, "corrected": corrected}, np.stack([k, lam], axis=1)


def _lemma_10(a, c, ar: _Arith):
    L = len(a)
    Ra, Rc = _cyclic_rows(a, True), _cyclic_rows(c, True)
    D = ar.gram(Ra, Rc)
    i, j = np.indices((L, L + 1))
    i, j = i.ravel() + 1, j.ravel() + L          # 1 <= i <= L, L <= j <= 2L
    sel = i < j
    i, j = i[sel], j[sel]
    lhs = D[i - 1, np.mod(j - 1, L)]
    kp = np.mod(j - i, L)
    Cac, Cca = _xcorr(a, c), _xcorr(c, a)
    printed = Cac(kp) + Cca(L - kp)
    conj = Cac(kp) + np.conj(Cca(L - kp))
    return lhs, {"printed": printed, "conjugate": conj}, np.stack([i, j], axis=1)


_EVALUATORS = {
    4: lambda a, b, ar: _lemma_4_5(a, b, ar, 4),
    5: lambda a, b, ar: _lemma_4_5(a, b, ar, 5),
    6: _lemma_6,
    7: _lemma_7,
    8: _lemma_8,
    9: _lemma_9,
    10: _lemma_10,
}

PARAM_NAMES = {4: ("i", "j"), 5: ("i", "j"), 6: ("i", "j"), 7: ("k", "lambda"),
               8: ("k", "lambda"), 9: ("k", "lambda"), 10: ("i", "j")}


# -- report ---------------------------------------------------------------------

@dataclass
class Tally:
    agree: int = 0
    total: int = 0
    checks: int = 0
    failed_checks: int = 0
    first_counterexample: Optional[dict] = None

    @property
    def rate(self) -> float:
        return self.agree / self.total if self.total else 1.0

    @property
    def complete(self) -> bool:
        return self.agree == self.total


@dataclass
class ConformanceReport:
    lemma_id: int
    trials: int
    seed: int
    q_values: tuple[int, ...]
    max_len: int
    tallies: dict = field(default_factory=dict)        # (variant, q) -> Tally
    float_path: dict = field(default_factory=dict)     # q -> Tally

    @property
    def asserted(self) -> bool:
        return self.lemma_id in ASSERTED_LEMMAS

    @property
    def variants(self) -> list[str]:
        return sorted({v for v, _ in self.tallies}, key=lambda v: v != "printed")

    def tally(self, variant: str, q: int) -> Tally:
        return self.tallies[(variant, q)]

    def holds(self, variant: str = "printed", q: Optional[int] = None) -> bool:
        qs = self.q_values if q is None else (q,)
        return all(self.tallies[(variant, x)].complete for x in qs)

    def validated_variant(self) -> Optional[str]:
        """First variant reaching 100% on every modulus, printed preferred."""
        for v in self.variants:
            if self.holds(v):
                return v
        return None

    def float_path_agrees(self) -> bool:
        return all(t.complete for t in self.float_path.values())

    def to_dict(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "trials_per_q": self.trials,
            "seed": self.seed,
            "max_len": self.max_len,
            "asserted": self.asserted,
            "validated_variant": self.validated_variant(),
            "results": [
                {"variant": v, "q": q, "agree": t.agree, "total": t.total,
                 "checks": t.checks, "failed_checks": t.failed_checks,
                 "first_counterexample": t.first_counterexample}
                for (v, q), t in sorted(self.tallies.items(), key=lambda kv: (kv[0][0] != "printed", kv[0]))
            ],
            "float_path": {str(q): {"agree": t.agree, "total": t.total} for q, t in self.float_path.items()},
        }

    def table_lines(self) -> list[str]:
        out = []
        for v in self.variants:
            cells = []
            for q in self.q_values:
                t = self.tallies[(v, q)]
                cells.append(f"q={q}: {t.agree}/{t.total} ({100 * t.rate:.1f}%)")
            out.append(f"lemma {self.lemma_id:>2}  {v:<10} " + "  ".join(cells))
        return out


def _close(x: np.ndarray, y: np.ndarray, exact: bool, L: int) -> np.ndarray:
    if exact:
        return x == y
    return np.abs(x - y) <= ZERO_TOL * max(L, 1)


def lemma_conformance(lemma_id: int, trials: int = 1000, seed: Optional[int] = None,
                      q_values: tuple[int, ...] = (2, 4), max_len: int = 64,
                      min_len: int = 2) -> ConformanceReport:
    """Compare brute-force left sides with the formula right sides on random instances.

    ``trials`` random instances are drawn per modulus; each instance covers
    every admissible shift/truncation parameter for its length.
    """
    if lemma_id not in _EVALUATORS:
        raise ValueError(f"unknown lemma id {lemma_id}; choose from {sorted(_EVALUATORS)}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    seed = default_seed() if seed is None else seed
    rng = np.random.default_rng([seed, lemma_id])
    evaluate = _EVALUATORS[lemma_id]
    report = ConformanceReport(lemma_id, trials, seed, tuple(q_values), max_len)
    for q in q_values:
        report.float_path[q] = Tally()
        for _ in range(trials):
            L = int(rng.integers(min_len, max_len + 1))
            ea = rng.integers(0, q, L)
            eb = rng.integers(0, q, L)
            ex = _Arith(q, True)
            lhs, rhs, params = evaluate(ex.vec(ea), ex.vec(eb), ex)
            fl = _Arith(q, False)
            f_lhs, f_rhs, _ = evaluate(fl.vec(ea), fl.vec(eb), fl)

            ft = report.float_path[q]
            ft.total += 1
            same = _close(f_lhs, lhs, False, L) & all(
                np.all(_close(f_rhs[v], r, False, L)) for v, r in rhs.items())
            ft.agree += int(np.all(same))

            for v, r in rhs.items():
                t = report.tallies.setdefault((v, q), Tally())
                ok = _close(lhs, r, True, L)
                t.total += 1
                t.checks += ok.size
                t.failed_checks += int((~ok).sum())
                if ok.all():
                    t.agree += 1
                elif t.first_counterexample is None:
                    pos = int(np.argmin(ok))
                    names = PARAM_NAMES[lemma_id]
                    t.first_counterexample = {
                        "L": L, "a": ea.tolist(), "b": eb.tolist(),
                        **{nm: int(val) for nm, val in zip(names, params[pos])},
                        "lhs": _fmt(lhs[pos]), "rhs": _fmt(r[pos]),
                    }
    return report


def _fmt(z) -> str:
    z = complex(z)
    re = int(z.real) if float(z.real).is_integer() else round(z.real, 12)
    im = int(z.imag) if float(z.imag).is_integer() else round(z.imag, 12)
    return f"{re}" if im == 0 else f"{re}{im:+}j"
