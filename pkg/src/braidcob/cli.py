"""
Command-line surface: braid-word utilities, link invariants, certificate
generation and verification, and the bound tables.

Braid words come from --strands/--word (comma-separated signed letters) or
from a JSON file {"n": <int>, "w": [<letters>]}. Machine-readable output via
--json. Exit codes: 0 success, 1 validation or verification failure, 2
malformed input file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .alexander import alexander
from .certificates import (
    CertificateError,
    CobordismCertificate,
    StepError,
    verify,
)
from .garside import equal, normal_form
from .replication import (
    clover_bound,
    coxeter_certificate,
    fourstrand_certificate,
    gg_estimate,
    sixstrand_certificate,
    theorem_table,
    trefoil_stack_certificate,
)
from .signature import (
    PrecisionError,
    Sigma6Error,
    sigma6,
    signature_at,
)
from .words import BraidWord, WordError, make_word, parse_letters


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _load_word(args, attr_word="word", attr_file="file") -> BraidWord:
    path = getattr(args, attr_file, None)
    if path:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            return BraidWord.from_json(data)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise CliError(f"cannot read word file {path}: {exc}", 2)
    text = getattr(args, attr_word, None)
    if text is None or args.strands is None:
        raise CliError("need --strands and --word, or --file", 1)
    try:
        return make_word(args.strands, parse_letters(text))
    except WordError as exc:
        raise CliError(str(exc), 1)


def _emit(args, human: str, payload: dict):
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(human)


def _cmd_braid_nf(args):
    w = _load_word(args)
    nf = normal_form(w)
    perms = [[i + 1 for i in f] for f in nf.factors]
    _emit(
        args,
        f"infimum {nf.infimum}, {len(nf.factors)} factors: {perms}",
        {"n": w.strands, "infimum": nf.infimum, "factors": perms},
    )


def _cmd_braid_eq(args):
    try:
        w1 = make_word(args.strands, parse_letters(args.word))
        w2 = make_word(args.strands, parse_letters(args.word2))
        same = equal(w1, w2)
    except WordError as exc:
        raise CliError(str(exc), 1)
    _emit(args, "equal" if same else "not equal", {"equal": same})


def _parse_theta(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse theta {text!r}: {exc}", 1)


def _cmd_link_sigma(args):
    w = _load_word(args)
    try:
        if args.sigma6:
            value = sigma6(w)
            _emit(args, str(value), {"sigma6": value})
        else:
            if not args.theta:
                raise CliError("need --theta p/q or --sigma6", 1)
            prof = signature_at(w, _parse_theta(args.theta))
            _emit(
                args,
                f"signature {prof.signature}, nullity {prof.nullity}",
                {
                    "theta": str(prof.theta),
                    "signature": prof.signature,
                    "nullity": prof.nullity,
                    "precision_bits": prof.precision_bits,
                },
            )
    except (Sigma6Error, PrecisionError, ValueError) as exc:
        raise CliError(str(exc), 1)


def _cmd_link_alexander(args):
    w = _load_word(args)
    poly = alexander(w)
    _emit(
        args, str(poly), {"coefficients": list(poly.coefficients)}
    )


def _cmd_cert_gen(args):
    if args.kind == "fourstrand":
        cert = fourstrand_certificate()
    elif args.kind == "coxeter":
        cert = coxeter_certificate()
    elif args.kind == "sixstrand":
        if args.l is None:
            raise CliError("cert gen sixstrand needs --l", 1)
        cert = sixstrand_certificate(args.l)
    elif args.kind == "trefoils":
        if args.n is None or args.nprime is None:
            raise CliError("cert gen trefoils needs --n and --nprime", 1)
        cert = trefoil_stack_certificate(args.n, args.nprime)
    else:
        raise CliError(f"unknown certificate kind {args.kind!r}", 1)
    print(cert.dumps())


def _cmd_cert_verify(args):
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            cert = CobordismCertificate.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError, StepError) as exc:
        raise CliError(f"cannot read certificate {args.file}: {exc}", 2)
    try:
        report = verify(cert)
    except (StepError, CertificateError, WordError) as exc:
        raise CliError(f"verification failed: {exc}", 1)
    if args.json:
        print(json.dumps(report.to_json(), separators=(",", ":")))
    else:
        ok = report.bound_ok
        verdict = "PASS" if ok in (True, None) else "FAIL"
        print(
            f"cost {report.total_cost}, sigma6 {report.sigma6_start} -> "
            f"{report.sigma6_end}, lower bound {report.lower_bound}, "
            f"{verdict}"
        )
    if report.bound_ok is False:
        raise CliError("signature lower bound exceeds realized cost", 1)


def _cmd_paper_gg_table(args):
    rows = []
    for m in range(1, args.mmax + 1):
        for n in range(1, args.nmax + 1):
            est, tol = gg_estimate(m, n)
            rows.append((m, n, est, tol))
    if args.json:
        print(json.dumps(
            [{"m": m, "n": n, "estimate": str(e), "tolerance": t}
             for m, n, e, t in rows]))
    else:
        print("m,n,estimate,tolerance")
        for m, n, e, t in rows:
            print(f"{m},{n},{e},{t}")


def _cmd_paper_theorem_table(args):
    try:
        grid = [int(x) for x in args.grid.split(",")]
        offsets = [int(x) for x in args.offsets.split(",")]
    except ValueError as exc:
        raise CliError(f"bad grid: {exc}", 1)
    reports = theorem_table(grid, grid, offsets)
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        print("m,n,N,upper,lower,slack,window,pass")
        for r in reports:
            print(
                f"{r.m},{r.n},{r.N},{r.upper},{r.lower},{r.slack},"
                f"{r.window},{r.passed}"
            )
    if not all(r.passed for r in reports):
        raise CliError("theorem bound audit failed on the grid", 1)


def _cmd_paper_clover(args):
    value = clover_bound(args.m, args.n)
    _emit(args, str(value), {"m": args.m, "n": args.n, "bound": str(value)})


def _add_word_args(p):
    p.add_argument("--strands", type=int, help="strand count")
    p.add_argument("--word", help="comma-separated signed letters")
    p.add_argument("--file", help="JSON word file {n, w}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidcob",
        description="braid words, link signatures, cobordism certificates",
    )
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    braid = sub.add_parser("braid", help="braid word utilities")
    bsub = braid.add_subparsers(dest="subcommand", required=True)
    nf = bsub.add_parser("nf", help="left greedy normal form")
    _add_word_args(nf)
    nf.set_defaults(func=_cmd_braid_nf)
    eq = bsub.add_parser("eq", help="decide word equality")
    eq.add_argument("--strands", type=int, required=True)
    eq.add_argument("--word", required=True)
    eq.add_argument("--word2", required=True)
    eq.set_defaults(func=_cmd_braid_eq)

    link = sub.add_parser("link", help="link invariants of closures")
    lsub = link.add_subparsers(dest="subcommand", required=True)
    sig = lsub.add_parser("sigma", help="Levine-Tristram signature")
    _add_word_args(sig)
    sig.add_argument("--theta", help="rational p/q in (0,1)")
    sig.add_argument("--sigma6", action="store_true",
                     help="the limit invariant at the sixth root")
    sig.set_defaults(func=_cmd_link_sigma)
    alex = lsub.add_parser("alexander", help="Alexander polynomial")
    _add_word_args(alex)
    alex.set_defaults(func=_cmd_link_alexander)

    cert = sub.add_parser("cert", help="cobordism certificates")
    csub = cert.add_subparsers(dest="subcommand", required=True)
    gen = csub.add_parser("gen", help="emit a built-in certificate")
    gen.add_argument(
        "kind", choices=["fourstrand", "coxeter", "sixstrand", "trefoils"]
    )
    gen.add_argument("--l", type=int, help="cable parameter for sixstrand")
    gen.add_argument("--n", type=int, help="trefoils: target count")
    gen.add_argument("--nprime", type=int, help="trefoils: source count")
    gen.set_defaults(func=_cmd_cert_gen)
    ver = csub.add_parser("verify", help="replay and check a certificate")
    ver.add_argument("file")
    ver.set_defaults(func=_cmd_cert_verify)

    paper = sub.add_parser("paper", help="bound tables")
    psub = paper.add_subparsers(dest="subcommand", required=True)
    gg = psub.add_parser("gg-table", help="quasimorphism estimates")
    gg.add_argument("--mmax", type=int, default=6)
    gg.add_argument("--nmax", type=int, default=6)
    gg.set_defaults(func=_cmd_paper_gg_table)
    tt = psub.add_parser("theorem-table", help="upper/lower bound audit")
    tt.add_argument("--grid", default="6,12,18")
    tt.add_argument("--offsets", default="0,5,10")
    tt.set_defaults(func=_cmd_paper_theorem_table)
    cl = psub.add_parser("clover", help="clover invariant lower bound")
    cl.add_argument("--m", type=int, required=True)
    cl.add_argument("--n", type=int, required=True)
    cl.set_defaults(func=_cmd_paper_clover)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
