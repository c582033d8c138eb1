"""Acceptance criteria 1-10; each test records one PASS/FAIL line."""
import itertools

import numpy as np

from seqforge.conformance import ASSERTED_LEMMAS, REPORTED_LEMMAS, lemma_conformance
from seqforge.constructions import (
    CzcsParams,
    DoublingVariant,
    ccc_codes,
    circulant_hadamard4,
    czcs_matrix,
    czcss_codes,
    czcss_zone,
    doubling_chain,
    enumerate_chm4,
    gcs_circulant,
    hadamard_2N,
)
from seqforge.corrcore import PhaseSequence, auto_sum_profile, circulant, lags, pointwise_sum_profile
from seqforge.gcp import complementary_mate, gcp_for, is_admissible
from seqforge.verify import czcs_max_zone, gram, is_ccc, is_czcss, is_gcp, is_gcs, is_hadamard, is_mate, sylvester

from conftest import record_criterion, signs

CONFORMANCE_TRIALS = 1000
CONFORMANCE_SEED = 20240601


def test_criterion_01_chm4_census():
    found = set(enumerate_chm4())
    brute = set()
    for row in itertools.product((1, -1), repeat=4):
        C = circulant(PhaseSequence.from_values(row, 2))
        if is_hadamard(C).holds:
            brute.add(C)
    ok = len(found) == 8 and found == brute and all(is_hadamard(m).holds for m in found)
    record_criterion(1, ok, f"{len(found)} constructed, {len(brute)} by brute force, sets equal: {found == brute}")
    assert ok


def test_criterion_02_golden_fixtures(golden):
    checks = {
        "E4 theta=(1,1,1)": circulant_hadamard4() == signs(golden["e4_theta_111"]),
        "F8": doubling_chain(circulant_hadamard4(), 1) == signs(golden["f8"]),
        "8x8 circulant-block G": gcs_circulant(4) == signs(golden["gcs_pair4_g8"]),
    }
    table = czcss_codes(circulant_hadamard4(2, 0, 0, 0), 1)
    for i, want in enumerate(golden["czcss_table_codes"]):
        checks[f"code {i + 1}"] = table[i] == signs(want)
    bad = [k for k, v in checks.items() if not v]
    record_criterion(2, not bad, f"{len(checks) - len(bad)}/{len(checks)} fixtures exact" + (f"; mismatched {bad}" if bad else ""))
    assert not bad


def test_criterion_03_czcs_sweep():
    rows, bad = 0, []
    for n in (1, 2, 3):
        for k in range(2 ** (n + 1)):
            M, p = czcs_matrix(n, k)
            rep = czcs_max_zone(M, p.Z)
            rows += 1
            if not rep.holds:
                bad.append((n, k, rep.max_zone, p.Z))
    record_criterion(3, not bad, f"{rows - len(bad)}/{rows} (n,k) cases reach the claimed zone" + (f"; short {bad}" if bad else ""))
    assert not bad


def test_criterion_04_gcs_sweep():
    bad, cases = [], 0
    for N in (1, 2, 4, 10, 20, 26):
        for k in sorted({0, 1, N // 2, 2 * N - 2}):
            if k > 2 * N - 2:
                continue
            cases += 1
            G = gcs_circulant(N, k)
            if G.shape != (2 * N, 2 * N - k) or not is_gcs(G).holds:
                bad.append((N, k))
        H = gcs_circulant(N, 0)
        if not (is_hadamard(H).holds and np.array_equal(gram(H), 2 * N * np.eye(2 * N))):
            bad.append((N, "hadamard"))
    record_criterion(4, not bad, f"{cases} truncations GCS, 6 Hadamard orders up to 52" + (f"; failing {bad}" if bad else ""))
    assert not bad


def test_criterion_05_gcs_20_17():
    G = gcs_circulant(10, 3)
    ok = G.shape == (20, 17) and is_gcs(G).holds
    record_criterion(5, ok, f"shape {G.shape}, is_gcs={is_gcs(G).holds}")
    assert ok


def test_criterion_06_ccc():
    bad = []
    for N in (1, 2, 4, 10):
        S = ccc_codes(gcs_circulant(N))
        if not is_ccc(S).holds:
            bad.append(N)
    S = ccc_codes(gcs_circulant(10))
    L = S.L
    off = lags(L) != 0
    for p, c in enumerate(S):
        prof = auto_sum_profile(c)
        if prof[L - 1] != S.M * L or np.any(prof[off] != 0):
            bad.append(("auto", p))
        for r, d in enumerate(S):
            if r != p and np.any(pointwise_sum_profile(c, d) != 0):
                bad.append(("cross", p, r))
    record_criterion(6, not bad, "CCC for N=1,2,4,10; N=10 profiles peak 400 and zero elsewhere" + (f"; failing {bad}" if bad else ""))
    assert not bad


def test_criterion_07_czcss():
    bad = []
    for n in (1, 2):
        S = czcss_codes(None, n)
        rep = is_czcss(S, czcss_zone(n))
        if not (rep.holds and rep.details["optimal"] and is_ccc(S).holds):
            bad.append(n)
    record_criterion(7, not bad, "n=1,2 optimal CZCSS and CCC" + (f"; failing {bad}" if bad else ""))
    assert not bad


def _hadamard_pool():
    pool = [sylvester(2 ** m) for m in range(7)]
    pool += enumerate_chm4()
    pool += [hadamard_2N(N) for N in range(1, 105) if is_admissible(N)]
    pool += [doubling_chain(E, 1, v) for E in enumerate_chm4() for v in DoublingVariant]
    return pool


def test_criterion_08_hadamard_rows_gcs():
    pool = _hadamard_pool()
    had = [is_hadamard(H).holds for H in pool]
    gcs = [is_gcs(H).holds for H in pool]
    ok = len(pool) >= 50 and all(had) and all(gcs)
    record_criterion(8, ok, f"{sum(gcs)}/{len(pool)} Hadamard matrices pass is_gcs (orders 1..208)")
    assert ok


def test_criterion_09_lemma_conformance():
    lines, ok = [], True
    for lemma in ASSERTED_LEMMAS:
        r = lemma_conformance(lemma, CONFORMANCE_TRIALS, CONFORMANCE_SEED, (2, 4), max_len=64)
        b, q = r.tally("printed", 2), r.tally("printed", 4)
        c = r.tally("conjugate", 4)
        ok &= r.holds("printed") and r.float_path_agrees()
        lines.append(f"L{lemma} q2 {b.agree}/{b.total} q4 {q.agree}/{q.total} (conjugate form q4 {c.agree}/{c.total})")
    for lemma in REPORTED_LEMMAS:
        r = lemma_conformance(lemma, CONFORMANCE_TRIALS, CONFORMANCE_SEED, (2, 4), max_len=64)
        v = r.validated_variant()
        ok &= v is not None and r.float_path_agrees()
        lines.append(f"L{lemma} report: {v} variant 100%")
    record_criterion(9, ok, "; ".join(lines))
    assert ok


def test_criterion_10_gcp_factory():
    bad = []
    for N in (1, 2, 4, 8, 10, 20, 26, 40, 52):
        p = gcp_for(N)
        if len(p) != N or not is_gcp(p).holds or not is_mate(p, complementary_mate(p)).holds:
            bad.append(N)
    record_criterion(10, not bad, "9 lengths pass is_gcp and is_mate" + (f"; failing {bad}" if bad else ""))
    assert not bad
