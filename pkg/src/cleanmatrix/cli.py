"""Command line front end.

Subcommands: decide (clean decomposition), pi (pi-regular decomposition),
factor (unit-split factorization), survey (ring-level verdict), classify-int
(integer similarity class), selftest (oracle agreement sweep), and verify,
which re-checks a JSON document produced by the other subcommands.

Exit codes: 0 decided or verified, 2 negative verdict, 3 unknown, 64 bad
input.  JSON output is stable: keys sorted, matrices as nested arrays of
element literals in the input grammar, and a verified flag that is set only
after the certificate has been re-checked from scratch.

CLEANMATRIX_THREADS caps selftest parallelism: unset or 1 runs serially, a
larger value splits the sweep over a process pool; chunk merge order is fixed
either way, so output does not depend on the worker count.
"""

import argparse
import json
import os
import random
import sys

from .bruteforce import brute_clean, brute_pi
from .clean import (
    CleanCertificate,
    decide_strongly_clean,
    ring_is_strongly_clean,
    verify_certificate,
)
from .errors import (
    CleanMatrixError,
    NoFactorization,
    ParseError,
    Undecidable,
)
from .factorization import (
    FactorizationWitness,
    Poly,
    star_factorize,
    verify_factorization,
)
from .integer_matrices import classify_integer
from .literals import (
    matrix_to_literals,
    parse_element,
    parse_matrix,
    parse_ring,
)
from .matrices import Mat2, conjugate
from .piregular import (
    PiCertificate,
    decide_strongly_pi_regular,
    ring_is_m2_pi_regular,
    verify_pi_certificate,
)
from .quadratics import MonicQuadratic

EXIT_OK = 0
EXIT_NEGATIVE = 2
EXIT_UNKNOWN = 3
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="cleanmatrix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="strongly clean decision for one matrix")
    p.add_argument("--ring", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("pi", help="strongly pi-regular decision for one matrix")
    p.add_argument("--ring", required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("factor", help="unit-split factorization of t^2+a1*t+a0")
    p.add_argument("--ring", required=True)
    p.add_argument("--poly", required=True, metavar="a1,a0")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("survey", help="ring-level verdict")
    p.add_argument("--ring", required=True)
    p.add_argument("--mode", choices=("clean", "pi"), default="clean")
    p.add_argument("--bound", type=int, default=10000)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify-int", help="integer similarity class")
    p.add_argument("--matrix", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="oracle agreement sweep")
    p.add_argument("--ring", default="Zmod(2,2)")

    p = sub.add_parser("verify")  # internal: re-check an emitted JSON document
    p.add_argument("--file", default="-", help="JSON document, - for stdin")
    return parser


def _emit(args, doc, lines):
    if getattr(args, "json", False):
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _split_poly_arg(text):
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return text[:i], text[i + 1 :]
    raise ParseError("expected two comma-separated coefficients a1,a0")


# ------------------------------------------------------------------- decide


def _clean_cert_doc(R, cert):
    doc = {"E": matrix_to_literals(cert.E), "U": matrix_to_literals(cert.U)}
    if cert.diag is not None:
        t0, t1, P = cert.diag
        doc["diag"] = {
            "t0": R.format_element(t0),
            "t1": R.format_element(t1),
            "P": matrix_to_literals(P),
        }
    return doc


def _reverify_clean(A, cert):
    if not verify_certificate(A, cert):
        return False
    if cert.diag is not None:
        t0, t1, P = cert.diag
        if conjugate(P, A) != Mat2.diag(A.ring, t0, t1):
            return False
    return True


def _cmd_decide(args):
    R = parse_ring(args.ring)
    A = parse_matrix(R, args.matrix)
    try:
        dec = decide_strongly_clean(A)
    except Undecidable as exc:
        _emit(args, {"command": "decide", "ring": R.spec_string(),
                     "matrix": matrix_to_literals(A), "status": "Unknown",
                     "detail": str(exc)},
              [f"status: Unknown ({exc})"])
        return EXIT_UNKNOWN
    doc = {
        "command": "decide",
        "ring": R.spec_string(),
        "matrix": matrix_to_literals(A),
        "status": dec.status,
    }
    lines = [f"status: {dec.status}"]
    if dec.method is not None:
        doc["method"] = dec.method
        lines.append(f"method: {dec.method}")
    if dec.certificate is not None:
        cert = dec.certificate
        doc["certificate"] = _clean_cert_doc(R, cert)
        doc["verified"] = _reverify_clean(A, cert)
        lines.append(f"E: {cert.E}")
        lines.append(f"U: {cert.U}")
        if cert.diag is not None:
            t0, t1, P = cert.diag
            lines.append(
                f"diag: t0={R.format_element(t0)} t1={R.format_element(t1)} P={P}"
            )
        lines.append(f"verified: {str(doc['verified']).lower()}")
    if dec.witness is not None:
        doc["witness"] = dec.witness.text()
        lines.append(f"witness: {dec.witness.text()}")
    _emit(args, doc, lines)
    return EXIT_NEGATIVE if dec.status == "NotClean" else EXIT_OK


# ----------------------------------------------------------------------- pi


def _pi_cert_doc(R, cert):
    doc = {"kind": cert.kind}
    if cert.kind == "diag":
        doc["t0"] = R.format_element(cert.t0)
        doc["t1"] = R.format_element(cert.t1)
        doc["P"] = matrix_to_literals(cert.P)
    elif cert.kind == "nilpotent":
        doc["index"] = cert.index
    return doc


def _cmd_pi(args):
    R = parse_ring(args.ring)
    A = parse_matrix(R, args.matrix)
    dec = decide_strongly_pi_regular(A)
    doc = {
        "command": "pi",
        "ring": R.spec_string(),
        "matrix": matrix_to_literals(A),
        "status": dec.status,
    }
    lines = [f"status: {dec.status}"]
    if dec.certificate is not None:
        doc["certificate"] = _pi_cert_doc(R, dec.certificate)
        doc["verified"] = verify_pi_certificate(A, dec.certificate)
        cert = dec.certificate
        if cert.kind == "diag":
            lines.append(
                f"diag: t0={R.format_element(cert.t0)} "
                f"t1={R.format_element(cert.t1)} P={cert.P}"
            )
        elif cert.kind == "nilpotent":
            lines.append(f"nilpotency index: {cert.index}")
        lines.append(f"verified: {str(doc['verified']).lower()}")
    if dec.witness is not None:
        doc["witness"] = dec.witness.text()
        lines.append(f"witness: {dec.witness.text()}")
    _emit(args, doc, lines)
    return EXIT_NEGATIVE if dec.status == "No" else EXIT_OK


# ------------------------------------------------------------------- factor


def _poly_literals(R, poly):
    return [R.format_element(c) for c in poly.coeffs]


def _cmd_factor(args):
    R = parse_ring(args.ring)
    a1_text, a0_text = _split_poly_arg(args.poly)
    a1 = parse_element(R, a1_text)
    a0 = parse_element(R, a0_text)
    f = MonicQuadratic(R, a1, a0)
    doc = {
        "command": "factor",
        "ring": R.spec_string(),
        "poly": {"a1": R.format_element(a1), "a0": R.format_element(a0)},
        "f": f.text(),
    }
    try:
        witness = star_factorize(f)
    except NoFactorization:
        doc["status"] = "NoFactorization"
        doc["witness"] = f.text()
        _emit(args, doc, ["status: NoFactorization", f"f: {f.text()}"])
        return EXIT_NEGATIVE
    doc["status"] = "Factored"
    doc["witness"] = {
        "g0": _poly_literals(R, witness.g0),
        "g1": _poly_literals(R, witness.g1),
        "h0": _poly_literals(R, witness.h0),
        "h1": _poly_literals(R, witness.h1),
        "starred": witness.starred,
    }
    doc["verified"] = verify_factorization(f, witness)
    lines = [
        "status: Factored",
        f"f: {f.text()}",
        f"g0: {witness.g0.text()}",
        f"g1: {witness.g1.text()}",
        f"h1: {witness.h1.text()}",
        f"h0: {witness.h0.text()}",
        f"starred: {str(witness.starred).lower()}",
        f"verified: {str(doc['verified']).lower()}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


# ------------------------------------------------------------------- survey


def _cmd_survey(args):
    R = parse_ring(args.ring)
    if args.mode == "clean":
        verdict = ring_is_strongly_clean(R, search_bound=args.bound)
    else:
        verdict = ring_is_m2_pi_regular(R)
    doc = {
        "command": "survey",
        "ring": R.spec_string(),
        "mode": args.mode,
        "answer": verdict.answer,
    }
    lines = [f"answer: {verdict.answer}"]
    if verdict.witness is not None:
        doc["witness"] = verdict.witness.text()
        lines.append(f"witness: {verdict.witness.text()}")
    _emit(args, doc, lines)
    if verdict.answer == "Yes":
        return EXIT_OK
    if verdict.answer == "No":
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


# ------------------------------------------------------------- classify-int


def _cmd_classify_int(args):
    R = parse_ring("Z")
    A = parse_matrix(R, args.matrix)
    cls = classify_integer(A)
    doc = {
        "command": "classify-int",
        "matrix": matrix_to_literals(A),
        "tag": cls.tag,
    }
    lines = [f"tag: {cls.tag}"]
    if cls.tag == "Diag":
        doc["d1"] = cls.d1
        doc["d2"] = cls.d2
        doc["transform"] = matrix_to_literals(cls.transform)
        P = cls.transform
        diag = Mat2.diag(R, R.el(cls.d1), R.el(cls.d2))
        doc["verified"] = conjugate(P, A) == diag
        lines.append(f"diag: ({cls.d1}, {cls.d2})")
        lines.append(f"transform: {cls.transform}")
        lines.append(f"verified: {str(doc['verified']).lower()}")
    _emit(args, doc, lines)
    return EXIT_NEGATIVE if cls.tag == "NotClean" else EXIT_OK


# ----------------------------------------------------------------- selftest


def _selftest_chunk(spec_text, flat_indices):
    R = parse_ring(spec_text)
    els = R.enumerate_elements("All")
    n = len(els)
    clean_ok = pi_ok = 0
    mismatches = []
    for flat in flat_indices:
        i, rest = divmod(flat, n * n * n)
        j, rest = divmod(rest, n * n)
        k, l = divmod(rest, n)
        A = Mat2(R, els[i], els[j], els[k], els[l])
        clean_dec = decide_strongly_clean(A)
        clean_brute = brute_clean(A)
        if (clean_dec.status != "NotClean") == (clean_brute is not None):
            clean_ok += 1
        else:
            mismatches.append(("clean", flat))
        pi_dec = decide_strongly_pi_regular(A)
        pi_brute = brute_pi(A)
        if (pi_dec.status != "No") == (pi_brute is not None):
            pi_ok += 1
        else:
            mismatches.append(("pi", flat))
    return clean_ok, pi_ok, len(flat_indices), mismatches


def _thread_count():
    raw = os.environ.get("CLEANMATRIX_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _cmd_selftest(args):
    R = parse_ring(args.ring)
    if not R.is_finite:
        raise CleanMatrixError("selftest needs a finite ring")
    size = R.size()
    total_all = size ** 4
    if total_all <= 6561:
        flat = list(range(total_all))
        scope = "exhaustive"
    else:
        rng = random.Random(0)
        flat = sorted(rng.sample(range(total_all), 1000))
        scope = "sampled"
    threads = _thread_count()
    if threads == 1:
        results = [_selftest_chunk(R.spec_string(), flat)]
    else:
        chunk_size = (len(flat) + threads - 1) // threads
        chunks = [
            flat[i : i + chunk_size] for i in range(0, len(flat), chunk_size)
        ]
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(_selftest_chunk, [R.spec_string()] * len(chunks), chunks)
            )
    clean_ok = sum(r[0] for r in results)
    pi_ok = sum(r[1] for r in results)
    total = sum(r[2] for r in results)
    mismatches = [m for r in results for m in r[3]]
    print(f"ring: {R.spec_string()}")
    print(f"scope: {scope}")
    print(f"matrices: {total}")
    print(f"clean agreements: {clean_ok}/{total}")
    print(f"pi agreements: {pi_ok}/{total}")
    for kind, flat_index in mismatches:
        print(f"mismatch: {kind} at matrix index {flat_index}")
    return EXIT_OK if not mismatches else EXIT_NEGATIVE


# ------------------------------------------------------------------- verify


def _matrix_from_literals(R, nested):
    a, b = nested[0]
    c, d = nested[1]
    return Mat2(
        R,
        parse_element(R, a),
        parse_element(R, b),
        parse_element(R, c),
        parse_element(R, d),
    )


def _verify_doc(doc):
    command = doc.get("command")
    if command == "decide":
        R = parse_ring(doc["ring"])
        A = _matrix_from_literals(R, doc["matrix"])
        raw = doc.get("certificate")
        if raw is None:
            return None
        diag = None
        if "diag" in raw:
            diag = (
                parse_element(R, raw["diag"]["t0"]),
                parse_element(R, raw["diag"]["t1"]),
                _matrix_from_literals(R, raw["diag"]["P"]),
            )
        cert = CleanCertificate(
            E=_matrix_from_literals(R, raw["E"]),
            U=_matrix_from_literals(R, raw["U"]),
            diag=diag,
        )
        return _reverify_clean(A, cert)
    if command == "pi":
        R = parse_ring(doc["ring"])
        A = _matrix_from_literals(R, doc["matrix"])
        raw = doc.get("certificate")
        if raw is None:
            return None
        kind = raw["kind"]
        cert = PiCertificate(kind)
        if kind == "diag":
            cert.t0 = parse_element(R, raw["t0"])
            cert.t1 = parse_element(R, raw["t1"])
            cert.P = _matrix_from_literals(R, raw["P"])
        elif kind == "nilpotent":
            cert.index = raw["index"]
        return verify_pi_certificate(A, cert)
    if command == "factor":
        R = parse_ring(doc["ring"])
        f = MonicQuadratic(
            R,
            parse_element(R, doc["poly"]["a1"]),
            parse_element(R, doc["poly"]["a0"]),
        )
        raw = doc.get("witness")
        if raw is None or not isinstance(raw, dict):
            return None
        def poly(key):
            return Poly(R, [parse_element(R, c) for c in raw[key]])
        witness = FactorizationWitness(
            g0=poly("g0"), g1=poly("g1"), h0=poly("h0"), h1=poly("h1"),
            starred=bool(raw["starred"]),
        )
        return verify_factorization(f, witness)
    if command == "classify-int":
        R = parse_ring("Z")
        A = _matrix_from_literals(R, doc["matrix"])
        if doc.get("tag") != "Diag":
            return None
        P = _matrix_from_literals(R, doc["transform"])
        diag = Mat2.diag(R, R.el(doc["d1"]), R.el(doc["d2"]))
        from .integer_matrices import is_unimodular

        return is_unimodular(P) and conjugate(P, A) == diag
    raise CleanMatrixError(f"nothing to verify in a {command!r} document")


def _cmd_verify(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}")
    verdict = _verify_doc(doc)
    print(json.dumps({"verified": verdict}, sort_keys=True))
    if verdict is False:
        return EXIT_NEGATIVE
    return EXIT_OK


# --------------------------------------------------------------------- main


_COMMANDS = {
    "decide": _cmd_decide,
    "pi": _cmd_pi,
    "factor": _cmd_factor,
    "survey": _cmd_survey,
    "classify-int": _cmd_classify_int,
    "selftest": _cmd_selftest,
    "verify": _cmd_verify,
}


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Undecidable as exc:
        print(f"unknown: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except CleanMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> int:
    return run(sys.argv[1:])
