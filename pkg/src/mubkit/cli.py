"""Command-line front end: generate, verify, oracle, search, table.

Exit codes: 0 success/certified, 1 verification or oracle failure,
2 usage error, 3 search non-convergence.  All machine output is
byte-stable JSON with sorted keys.
"""

from __future__ import annotations

import argparse
import sys

from . import constructions, verifier
from .errors import MubkitError
from .finite_field import make_field
from .galois_ring import make_ring
from .search import SearchConfig, search as run_search

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3

CONSTRUCTIONS = ("standard", "wootters-fields", "alltop", "galois-ring", "macneish")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mubkit",
        description="Construct, certify and search mutually unbiased bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a family and write it as JSON")
    g.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--n", type=int, help="field/ring degree")
    g.add_argument("--d", type=int, help="dimension (standard basis only)")
    g.add_argument("--factors", help="comma-separated prime-power factors (macneish)")
    g.add_argument("--out", required=True, help="output family JSON path")

    v = sub.add_parser("verify", help="certify a family JSON file")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--mode", choices=("exact", "float"), default="exact")
    v.add_argument("--tol", type=float, default=verifier.DEFAULT_FLOAT_TOL)
    v.add_argument("--report-out", help="optional report JSON path")

    o = sub.add_parser("oracle", help="run an exponential-sum oracle")
    o.add_argument("kind", choices=("weil", "gamma"))
    o.add_argument("--p", type=int)
    o.add_argument("--n", type=int, required=True)

    s = sub.add_parser("search", help="numerical search for unbiased bases")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--target", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--max-iterations", type=int, default=None)
    s.add_argument("--out", required=True, help="output result JSON path")

    t = sub.add_parser("table", help="known lower/upper bounds per dimension")
    t.add_argument("max_d", type=int)
    return parser


def _best_prime_power_family(d: int):
    factors = constructions.prime_power_factorization(d)
    if len(factors) != 1:
        raise MubkitError(f"{d} is not a prime power")
    p, a = factors[0]
    if p == 2:
        return constructions.galois_ring_mubs(make_ring(a))
    return constructions.wootters_fields(make_field(p, a))


def cmd_generate(args) -> int:
    name = args.construction
    if name == "standard":
        if args.d is None:
            raise MubkitError("--d is required for the standard construction")
        family = constructions.MubFamily(
            args.d, 1, "standard", {"d": args.d},
            [constructions.standard_basis(args.d)],
        )
    elif name in ("wootters-fields", "alltop"):
        if args.p is None or args.n is None:
            raise MubkitError("--p and --n are required for field constructions")
        spec = make_field(args.p, args.n)
        build = (constructions.wootters_fields if name == "wootters-fields"
                 else constructions.alltop)
        family = build(spec)
    elif name == "galois-ring":
        if args.n is None:
            raise MubkitError("--n is required for the ring construction")
        family = constructions.galois_ring_mubs(make_ring(args.n))
    else:  # macneish
        if not args.factors:
            raise MubkitError("--factors is required for macneish")
        try:
            dims = [int(v) for v in args.factors.split(",") if v.strip()]
        except ValueError as exc:
            raise MubkitError(f"bad --factors value: {args.factors!r}") from exc
        if not dims:
            raise MubkitError("--factors must list at least one dimension")
        family = constructions.macneish_tensor(
            [_best_prime_power_family(d) for d in dims]
        )
    text = constructions.family_to_json(family)
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(
        f"dimension={family.dimension} bases={len(family.bases)} "
        f"construction={family.construction} out={args.out}"
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        with open(args.infile) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.infile}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    family = constructions.family_from_json(text)  # SchemaViolation -> usage error
    if args.mode == "exact":
        report = verifier.verify_exact(family)
    else:
        report = verifier.verify_float(family, args.tol)
    print(
        f"overall={report.overall} mode={report.mode} "
        f"dimension={family.dimension} bases={len(family.bases)} "
        f"violations={len(report.violations)}"
    )
    for v in report.violations:
        print(f"violation: bases=({v.i},{v.j}) evidence={v.evidence}")
    if args.report_out:
        try:
            with open(args.report_out, "w") as fh:
                fh.write(report.to_json())
        except OSError as exc:
            print(f"error: cannot write {args.report_out}: {exc}", file=sys.stderr)
            return EXIT_FAILURE
    return EXIT_OK if report.certified else EXIT_FAILURE


def cmd_oracle(args) -> int:
    if args.kind == "weil":
        if args.p is None:
            raise MubkitError("oracle weil needs --p and --n")
        spec = make_field(args.p, args.n)
        checked, failures = verifier.weil_exhaustive_check(spec)
        if failures:
            for a2, a1, a0, val in failures[:10]:
                print(f"FAIL a2={a2} a1={a1} a0={a0} normsq={val}")
            print(f"{len(failures)} of {checked} quadratics off the expected value")
            return EXIT_FAILURE
        print(f"{checked} quadratics checked, all |S|^2={spec.q}")
        return EXIT_OK
    table = verifier.gamma_oracle(make_ring(args.n))
    for coeffs, ns, expected, ok in table.rows:
        print(
            f"r={list(coeffs)} normsq={ns} expected={expected} "
            f"ok={'true' if ok else 'false'}"
        )
    counts = " ".join(f"{k}:{v}" for k, v in sorted(table.counts.items()))
    print(f"match={'true' if table.matches else 'false'} counts {counts}")
    return EXIT_OK if table.matches else EXIT_FAILURE


def cmd_search(args) -> int:
    kwargs = {}
    if args.max_iterations is not None:
        kwargs["max_iterations"] = args.max_iterations
    config = SearchConfig(
        dimension=args.d, target=args.target, restarts=args.restarts,
        seed=args.seed, **kwargs,
    )
    result = run_search(config)
    try:
        with open(args.out, "w") as fh:
            fh.write(result.to_json())
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    print(
        f"objective={result.objective!r} converged="
        f"{'true' if result.converged else 'false'} out={args.out}"
    )
    return EXIT_OK if result.converged else EXIT_NO_CONVERGENCE


def cmd_table(args) -> int:
    if args.max_d < 2:
        raise MubkitError("max_d must be at least 2")
    for d in range(2, args.max_d + 1):
        lower, upper = constructions.mub_count_bounds(d)
        print(f"d={d} lower={lower} upper={upper}")
    return EXIT_OK


_DISPATCH = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "search": cmd_search,
    "table": cmd_table,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except MubkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
