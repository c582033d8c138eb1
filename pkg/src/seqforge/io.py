"""Matrix / code-set JSON, binary plain-text export and correlation profile CSV."""
from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Union

import numpy as np

from .constructions import CodeSet
from .corrcore import SequenceMatrix, auto_sum_profile, lags, pointwise_sum_profile

PROFILE_HEADER = ("p", "p_prime", "lambda", "re", "im")


class FormatError(ValueError):
    """A file does not match the expected layout."""


def render_number(x: float):
    """Integers stay integers; anything else keeps 12 significant digits."""
    x = float(x)
    if x.is_integer():
        return int(x)
    return float(f"{x:.12g}")


# -- JSON ----------------------------------------------------------------------

def matrix_payload(M: SequenceMatrix) -> dict:
    return {"q": M.q, "rows": M.M, "cols": M.L, "exponents": M.exps.tolist()}


def codeset_payload(S: CodeSet) -> dict:
    return {"q": S.q, "codes": [matrix_payload(c) for c in S]}


def _int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{what} must be an integer, got {v!r}")
    return v


def matrix_from_payload(d) -> SequenceMatrix:
    if not isinstance(d, dict):
        raise FormatError("matrix payload must be a JSON object")
    missing = {"q", "rows", "cols", "exponents"} - set(d)
    if missing:
        raise FormatError(f"matrix payload is missing {sorted(missing)}")
    q, rows, cols = _int(d["q"], "q"), _int(d["rows"], "rows"), _int(d["cols"], "cols")
    if q < 2 or q % 2:
        raise FormatError(f"q must be a positive even integer, got {q}")
    ex = d["exponents"]
    if not isinstance(ex, list) or len(ex) != rows or rows < 1:
        raise FormatError(f"expected {rows} exponent rows")
    for r in ex:
        if not isinstance(r, list) or len(r) != cols:
            raise FormatError(f"every exponent row must have {cols} entries")
        for v in r:
            _int(v, "exponent")
            if not 0 <= v < q:
                raise FormatError(f"exponent {v} outside [0, {q})")
    if cols < 1:
        raise FormatError("cols must be >= 1")
    return SequenceMatrix(q, np.array(ex, dtype=np.int64))


def codeset_from_payload(d) -> CodeSet:
    if not isinstance(d, dict) or not isinstance(d.get("codes"), list):
        raise FormatError("code-set payload must be an object with a 'codes' list")
    codes = tuple(matrix_from_payload(c) for c in d["codes"])
    if not codes:
        raise FormatError("code set is empty")
    if "q" in d and any(c.q != d["q"] for c in codes):
        raise FormatError("code moduli disagree with the set modulus")
    try:
        return CodeSet(codes)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def dump(obj: Union[SequenceMatrix, CodeSet], path) -> None:
    payload = codeset_payload(obj) if isinstance(obj, CodeSet) else matrix_payload(obj)
    Path(path).write_text(json.dumps(payload) + "\n")


# -- binary text -------------------------------------------------------------------

def to_text(M: SequenceMatrix) -> str:
    if M.q != 2:
        raise ValueError("plain-text export is defined for q=2 only")
    return "\n".join(" ".join(str(v) for v in row) for row in M.signs()) + "\n"


def from_text(text: str) -> SequenceMatrix:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            vals = [int(t) for t in line.split()]
        except ValueError as exc:
            raise FormatError(f"non-integer entry in line {line!r}") from exc
        if any(v not in (1, -1) for v in vals):
            raise FormatError("text rows may only contain 1 and -1")
        rows.append(vals)
    if not rows or len({len(r) for r in rows}) != 1:
        raise FormatError("text matrix needs at least one row and equal row lengths")
    return SequenceMatrix.from_values(np.array(rows), 2)


# -- loading -------------------------------------------------------------------------

def load(path) -> Union[SequenceMatrix, CodeSet]:
    """Read a matrix or code set; ``.txt`` files use the binary text layout."""
    p = Path(path)
    try:
        text = p.read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if p.suffix == ".txt":
        return from_text(text)
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(d, dict) and "codes" in d:
        return codeset_from_payload(d)
    return matrix_from_payload(d)


# -- profiles -------------------------------------------------------------------------

def profile_rows(obj: Union[SequenceMatrix, CodeSet], mode: str) -> list[tuple]:
    """(p, p', lambda, re, im) rows; ``auto`` uses p' = p."""
    codes = list(obj) if isinstance(obj, CodeSet) else [obj]
    if mode not in ("auto", "cross"):
        raise ValueError(f"unknown profile mode {mode!r}")
    if mode == "cross" and not isinstance(obj, CodeSet):
        raise FormatError("cross profiles need a code-set file")
    L = codes[0].L
    out = []
    for p, cp in enumerate(codes):
        partners = [(p, cp)] if mode == "auto" else list(enumerate(codes))
        for r, cr in partners:
            prof = auto_sum_profile(cp) if mode == "auto" else pointwise_sum_profile(cp, cr)
            for lam, v in zip(lags(L), prof):
                out.append((p, r, int(lam), render_number(v.real), render_number(v.imag)))
    return out


def write_profile_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(PROFILE_HEADER)
        w.writerows(rows)


def read_profile_csv(path) -> list[tuple]:
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = tuple(next(r))
        if header != PROFILE_HEADER:
            raise FormatError(f"unexpected profile header {header}")
        return [(int(p), int(pp), int(lam), float(re), float(im)) for p, pp, lam, re, im in r]
