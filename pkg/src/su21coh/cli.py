"""Command-line driver for the verification suites and the cocycle export.

Exit codes: 0 = every check passed, 1 = at least one verification failure,
2 = usage error.  All randomness is seeded; identical invocations produce
identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cochains, lie, oracle
from .report import CheckResult, all_passed, summarize


def _parse_k_spec(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k specification {text!r}") from None
    if not ks or ks[0] < 0:
        raise argparse.ArgumentTypeError(f"k values must be >= 0, got {text!r}")
    return ks


def _parse_jmax(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad j-max {text!r} (use e.g. 5/2)") from None


def _emit(args, command: str, params: dict, results: list[CheckResult]) -> int:
    ok = all_passed(results)
    if args.format == "structured":
        payload = {
            "command": command,
            "params": params,
            "pass": ok,
            "checks": [r.to_dict() for r in results],
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = f"== {command} {params}\n" + summarize(results, verbose=args.verbose) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return 0 if ok else 1


def cmd_verify_structure(args) -> int:
    results = lie.verify_structure(inject_error=args.inject_error)
    return _emit(args, "verify-structure", {"inject_error": args.inject_error}, results)


def cmd_verify_theorem(args) -> int:
    results: list[CheckResult] = []
    for k in args.k:
        results += cochains.verify_closedness(
            k, variant=args.thm37_variant, mutate_alpha0=args.perturb
        )
        results += cochains.verify_nonexactness(k, variant=args.thm37_variant)
    params = {"k": args.k, "variant": args.thm37_variant, "perturb": args.perturb}
    return _emit(args, "verify-theorem", params, results)


def cmd_export_generators(args) -> int:
    k = args.k[0] if len(args.k) == 1 else None
    if k is None:
        print("export-generators takes a single k, not a range", file=sys.stderr)
        return 2
    payload = {
        "k": k,
        "generators": {
            "chi": cochains.cochain_to_dict(cochains.build_chi(k)),
            "psi": cochains.cochain_to_dict(cochains.build_psi(k)),
            "psi0": cochains.cochain_to_dict(cochains.build_psi0(k)),
        },
    }
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    print(f"wrote generators for k={k} to {args.out}")
    return 0


def cmd_oracle(args) -> int:
    results: list[CheckResult] = []
    variant = args.thm37_variant
    if variant == "auto":
        verdict = oracle.adjudicate_variant(
            k_max=min(args.k[-1], 1), samples=min(args.samples, 5),
            tol=args.tol, seed=args.seed,
        )
        accepted = verdict["accepted"]
        results.append(
            CheckResult(
                name="variant adjudication",
                passed=accepted is not None,
                detail=f"accepted={accepted}; "
                + ", ".join(
                    f"{v}: err={verdict[v]['max_rel_err']:.2e}" for v in ("plus1", "plus2")
                ),
            )
        )
        if accepted is None:
            return _emit(args, "oracle", {"variant": "auto"}, results)
        variant = accepted
    for k in args.k:
        results += oracle.check_compact_action(
            k, j_max=args.j_max, samples=args.samples, tol=args.tol, seed=args.seed
        )
        results += oracle.check_noncompact_action(
            k, j_max=args.j_max, samples=args.samples, tol=args.tol,
            seed=args.seed, variant=variant,
        )
    results += oracle.homomorphism_report(seed=args.seed)
    results += oracle.iwasawa_report(seed=args.seed)
    results += oracle.orthogonality_report()
    results += oracle.covariance_report(k=args.k[0], seed=args.seed)
    params = {
        "k": args.k,
        "j_max": str(args.j_max),
        "samples": args.samples,
        "seed": args.seed,
        "tol": args.tol,
        "variant": variant,
    }
    return _emit(args, "oracle", params, results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su21coh",
        description="Exact verification of boundary cocycles for the principal "
        "series of SU(2,1), plus an independent floating-point oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_k):
        p.add_argument("--k", "--k-range", type=_parse_k_spec, default=_parse_k_spec(default_k),
                       help=f"single value or inclusive range lo..hi (default {default_k})")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--out", default=None, help="also write the report to this path")
        p.add_argument("--verbose", "-v", action="store_true")

    p = sub.add_parser("verify-structure", help="exact bracket/table suite")
    common(p, "0")
    p.add_argument("--inject-error", action="store_true",
                   help="corrupt one fixture cell (test mode; forces exit 1)")
    p.set_defaults(func=cmd_verify_structure)

    p = sub.add_parser("verify-theorem", help="exact cocycle identities and non-exactness")
    common(p, "0..10")
    p.add_argument("--thm37-variant", choices=("plus1", "plus2"), default="plus1")
    p.add_argument("--perturb", action="store_true",
                   help="shift the leading psi coefficient by +1 (test mode)")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("export-generators", help="write the three cocycles as JSON")
    p.add_argument("--k", "--k-range", type=_parse_k_spec, default=_parse_k_spec("0"))
    p.add_argument("--out", required=True, help="destination path for the JSON export")
    p.add_argument("--format", choices=("text", "structured"), default="structured")
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_export_generators)

    p = sub.add_parser("oracle", help="finite-difference and quadrature validation")
    common(p, "0..3")
    p.add_argument("--j-max", type=_parse_jmax, default=Fraction(5, 2))
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--thm37-variant", choices=("auto", "plus1", "plus2"), default="auto")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) <= 0:
        parser.error("--samples must be positive")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
