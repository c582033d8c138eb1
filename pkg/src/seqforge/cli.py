"""seqforge command line: gen, verify, profile, conformance."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .conformance import ALL_LEMMAS, ASSERTED_LEMMAS, default_seed, lemma_conformance
from .constructions import (
    CodeSet,
    DoublingVariant,
    ccc_codes,
    circulant_hadamard4,
    czcs_matrix,
    czcss_codes,
    czcss_zone,
    doubling_chain,
    enumerate_chm4,
    gcs_circulant,
    gcs_truncated,
    hadamard_2N,
)
from .corrcore import SequenceMatrix
from .gcp import UnsupportedLengthError, factor_length
from .verify import (
    VerifyReport,
    classify_gcs,
    czcs_max_zone,
    is_ccc,
    is_czcss,
    is_gcp,
    is_gcs,
    is_hadamard,
    is_mate,
)

GEN_KINDS = ("chm4", "chm4-all", "czcs", "gcs-recursive", "gcs-circulant", "hadamard", "ccc", "czcss")
VERIFY_PROPERTIES = ("hadamard", "gcs", "gcp", "mate", "czcs", "ccc", "czcss", "classify")

EXIT_OK, EXIT_VIOLATED, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _theta(text: str) -> tuple[int, int, int]:
    vals = _int_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("theta needs three comma-separated values")
    return tuple(vals)


def _need(args, name: str, kind: str):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"gen {kind} requires --{name}")
    return v


# -- gen -------------------------------------------------------------------------

def _e4(args) -> SequenceMatrix:
    theta = args.e4_theta if args.e4_theta is not None else (1, 1, 1)
    return circulant_hadamard4(args.q, *theta)


def _check_n(n: int) -> int:
    if n < 1:
        raise UsageError(f"n={n} violates the recursive construction requirement n >= 1")
    return n


def _check_N(N: int) -> int:
    try:
        factor_length(N)
    except UnsupportedLengthError as exc:
        raise UsageError(f"circulant-block construction needs N = 2^a 10^b 26^c: {exc}") from None
    return N


def build(args) -> tuple[object, str]:
    """Construct the requested object and its claimed-parameter label."""
    kind = args.kind
    if kind == "chm4":
        theta = args.theta if args.theta is not None else (1, 1, 1)
        return circulant_hadamard4(args.q, *theta), "(4,4)-circulant Hadamard"
    if kind == "chm4-all":
        return CodeSet(tuple(enumerate_chm4())), "8 circulant Hadamard matrices of order 4"
    if kind == "czcs":
        n, k = _check_n(_need(args, "n", kind)), _need(args, "k", kind)
        M, params = czcs_matrix(n, k, args.variant, _e4(args))
        return M, params.label()
    if kind == "gcs-recursive":
        n, k = _check_n(_need(args, "n", kind)), _need(args, "k", kind)
        M = gcs_truncated(_e4(args), n, k, args.variant)
        return M, f"({M.M},{M.L})-GCS"
    if kind == "gcs-circulant":
        N = _check_N(_need(args, "N", kind))
        k = args.k or 0
        M = gcs_circulant(N, k)
        return M, f"({M.M},{M.L})-GCS"
    if kind == "hadamard":
        if args.N is not None:
            M = hadamard_2N(_check_N(args.N))
        else:
            M = doubling_chain(_e4(args), _check_n(_need(args, "n", kind)), args.variant)
        return M, f"({M.M},{M.L})-Hadamard"
    if kind == "ccc":
        N = _check_N(_need(args, "N", kind))
        S = ccc_codes(gcs_circulant(N, 0))
        return S, f"({S.N},{S.M},{S.L})-CCC"
    if kind == "czcss":
        n = _check_n(_need(args, "n", kind))
        S = czcss_codes(_e4(args), n, args.variant)
        return S, f"({S.N},{S.M},{S.L},{czcss_zone(n)})-CZCSS"
    raise UsageError(f"unknown kind {kind!r}")


def cmd_gen(args) -> int:
    obj, label = build(args)
    print(label)
    text_out = args.format == "text" or (args.out is not None and Path(args.out).suffix == ".txt")
    if text_out:
        if not isinstance(obj, SequenceMatrix) or obj.q != 2:
            raise UsageError("text export needs a single binary matrix")
        payload = io.to_text(obj)
    else:
        data = io.codeset_payload(obj) if isinstance(obj, CodeSet) else io.matrix_payload(obj)
        payload = json.dumps(data) + "\n"
    if args.out is None:
        sys.stdout.write(payload)
    else:
        Path(args.out).write_text(payload)
    return EXIT_OK


# -- verify -----------------------------------------------------------------------

def _matrix(obj) -> SequenceMatrix:
    if not isinstance(obj, SequenceMatrix):
        raise UsageError("this property needs a single-matrix file")
    return obj


def _codeset(obj) -> CodeSet:
    if not isinstance(obj, CodeSet):
        raise UsageError("this property needs a code-set file")
    return obj


def _mate_pairs(obj):
    if isinstance(obj, CodeSet) and obj.N == 2 and obj.M == 2:
        return obj[0], obj[1]
    if isinstance(obj, SequenceMatrix) and obj.M == 4:
        return (obj.row(0), obj.row(1)), (obj.row(2), obj.row(3))
    raise UsageError("mate needs a 4-row matrix (a, b, c, d) or a set of two 2-row codes")


def check(prop: str, obj, Z: Optional[int], both_signs: bool = False) -> VerifyReport | dict:
    if prop == "hadamard":
        return is_hadamard(_matrix(obj))
    if prop == "gcs":
        return is_gcs(_matrix(obj))
    if prop == "gcp":
        return is_gcp(_matrix(obj))
    if prop == "mate":
        return is_mate(*_mate_pairs(obj))
    if prop == "czcs":
        return czcs_max_zone(_matrix(obj), Z, both_signs)
    if prop == "ccc":
        return is_ccc(_codeset(obj))
    if prop == "czcss":
        if Z is None:
            raise UsageError("verify czcss requires --Z")
        return is_czcss(_codeset(obj), Z, both_signs)
    if prop == "classify":
        M = _matrix(obj)
        cls = classify_gcs(M)
        return {"property": "classify", "holds": cls.value != "not-gcs", "class": cls.value,
                "rows": M.M, "cols": M.L}
    raise UsageError(f"unknown property {prop!r}")


def cmd_verify(args) -> int:
    obj = io.load(args.path)
    if args.Z is not None and args.Z < 0:
        raise UsageError("--Z must be non-negative")
    rep = check(args.property, obj, args.Z, args.both_signs)
    out = rep.to_dict() if isinstance(rep, VerifyReport) else rep
    print(json.dumps(out))
    return EXIT_OK if out["holds"] else EXIT_VIOLATED


# -- profile ----------------------------------------------------------------------

def cmd_profile(args) -> int:
    obj = io.load(args.path)
    rows = io.profile_rows(obj, args.mode)
    if args.out is None:
        w = sys.stdout
        w.write(",".join(io.PROFILE_HEADER) + "\n")
        for r in rows:
            w.write(",".join(str(x) for x in r) + "\n")
    else:
        io.write_profile_csv(rows, args.out)
    return EXIT_OK


# -- conformance -------------------------------------------------------------------

def cmd_conformance(args) -> int:
    lemmas = args.lemmas if args.lemmas is not None else list(ALL_LEMMAS)
    unknown = sorted(set(lemmas) - set(ALL_LEMMAS))
    if unknown:
        raise UsageError(f"unknown lemma ids {unknown}; choose from {sorted(ALL_LEMMAS)}")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    seed = default_seed() if args.seed is None else args.seed
    qs = tuple(args.q) if args.q else (2, 4)
    reports = [lemma_conformance(l, args.trials, seed, qs) for l in lemmas]
    print(f"seed={seed} trials_per_q={args.trials} q={','.join(map(str, qs))}")
    ok = True
    for r in reports:
        for line in r.table_lines():
            print(line)
        tag = "asserted" if r.asserted else "reported"
        fp = "agree" if r.float_path_agrees() else "DISAGREE"
        print(f"lemma {r.lemma_id:>2}  {tag}; holding variant: {r.validated_variant()}; float path: {fp}")
        if r.asserted and not (r.holds("printed") and r.float_path_agrees()):
            ok = False
    if args.json:
        Path(args.json).write_text(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    return EXIT_OK if ok else EXIT_VIOLATED


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seqforge", description="complementary sequence constructions and checks")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a construction and write it as JSON")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--q", type=int, default=2)
    g.add_argument("--theta", type=_theta, help="theta1,theta2,theta3 for chm4")
    g.add_argument("--e4-theta", type=_theta, help="seed E4 theta for recursive kinds (default 1,1,1)")
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--N", type=int)
    g.add_argument("--variant", type=DoublingVariant.parse, default=DoublingVariant.F)
    g.add_argument("--out", "-o")
    g.add_argument("--format", choices=("json", "text"), default="json")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a property of a matrix or code-set file")
    v.add_argument("property", choices=VERIFY_PROPERTIES)
    v.add_argument("path")
    v.add_argument("--Z", type=int)
    v.add_argument("--both-signs", action="store_true",
                   help="evaluate zone conditions at negative shifts literally")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="correlation sum profile as CSV")
    p.add_argument("mode", choices=("auto", "cross"))
    p.add_argument("path")
    p.add_argument("out", nargs="?")
    p.set_defaults(func=cmd_profile)

    c = sub.add_parser("conformance", help="randomized lemma identity checks")
    c.add_argument("--lemmas", type=_int_list)
    c.add_argument("--trials", type=int, default=1000)
    c.add_argument("--seed", type=int)
    c.add_argument("--q", type=_int_list, help="moduli to draw from (default 2,4)")
    c.add_argument("--json", help="also write the full report as JSON")
    c.set_defaults(func=cmd_conformance)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (UsageError, io.FormatError, ValueError, OSError) as exc:
        print(f"seqforge {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # never let malformed input surface as a traceback
        print(f"seqforge {args.command}: unexpected error: {exc!r}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
