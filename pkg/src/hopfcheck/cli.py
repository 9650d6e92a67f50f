"""``hopfcheck`` command line: run verification suites and export data."""

from __future__ import annotations

import argparse
import json
import sys

from .suites import SUITES, UnsupportedSuite, run_suite


def _verify(args) -> int:
    try:
        report = run_suite(args.suite, args.n, args.field, seed=args.seed, samples=args.samples, jobs=args.jobs)
    except (UnsupportedSuite, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    for ch in report.checks:
        tag = "SKIP" if ch.skipped else ("PASS" if ch.passed else "FAIL")
        line = f"[{tag}] {ch.name}"
        if ch.skipped or not ch.passed:
            line += f"  ({ch.detail})" if ch.detail != "" else ""
        print(line)
    failed = sum(not c.passed for c in report.checks)
    print(f"{report.suite} n={report.n} field={report.field}: "
          f"{len(report.checks) - failed}/{len(report.checks)} passed in {report.elapsed_ms / 1000:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report.to_json(), fh, indent=2, default=str)
    return 0 if report.passed else 1


def _export_lagrangians(args) -> int:
    from .io import lagrangians_to_json
    from .symplectic import enumerate_lagrangians

    out = lagrangians_to_json(enumerate_lagrangians(args.n, args.q))
    _dump(out, args.out)
    return 0


def _export_cocycle(args) -> int:
    from .cocycle import build_sigma
    from .scalars import FieldSpec, Matrix

    F = FieldSpec.parse(args.field)
    M = Matrix(F, json.loads(args.M))
    _dump(build_sigma(M).to_json(), args.out)
    return 0


def _dump(obj, path):
    text = json.dumps(obj, indent=2, default=str)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcheck")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    v.add_argument("--n", type=int, required=True, choices=[1, 2, 3])
    v.add_argument("--field", default="rational", help="rational or gf:p (p an odd prime)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=100)
    v.add_argument("--json", metavar="PATH", help="write the JSON report here")
    v.add_argument("--jobs", type=int, default=1, help="worker processes for --suite all")
    v.set_defaults(func=_verify)

    e = sub.add_parser("lagrangians", help="list the Lagrangian subspaces of GF(q)^{2n} as RREF matrices")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--out")
    e.set_defaults(func=_export_lagrangians)

    s = sub.add_parser("cocycle", help="print the value grid of σ_M for a symmetric M")
    s.add_argument("--M", required=True, help='JSON matrix, e.g. "[[1,0],[0,2]]"')
    s.add_argument("--field", default="rational")
    s.add_argument("--out")
    s.set_defaults(func=_export_cocycle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
