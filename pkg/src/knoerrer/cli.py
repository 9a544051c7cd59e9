"""Command line surface: per-pair computations, verification, and sweeps.

Subcommands: fraction, present, verify, ext, ideals, diagram, equiv, sweep.
Exit codes: 0 success, 1 verification failure, 2 usage/input error.  The
environment variable ``KNOERRER_OUT`` supplies a default --out directory;
when set, each invocation also writes its output there.  Sweeps parallelize
over pairs with --jobs; output is buffered and emitted in input order, so
identical invocations produce byte-identical output at any parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from knoerrer.endomorphism import (
    corner,
    end_algebra,
    inject_fault,
    phi,
    verify_iso,
)
from knoerrer.equivalence import decompose, equivalence_verdict
from knoerrer.fractions import (
    SMOOTH,
    CoprimePair,
    coprime_pairs,
    dual,
    evaluate,
    expand,
    lambda_seq,
    point_diagram,
    t_map,
)
from knoerrer.homology import chain_algebra_ext, ext_table
from knoerrer.monomial import KappaAlgebra, monomial_diagram
from knoerrer.presentations import (
    knoerrer_presentation,
    lambda_presentation,
    recon_presentation,
    render,
    riemenschneider_presentation,
)

OUT_ENV = "KNOERRER_OUT"

CHECK_NAMES = (
    "dim=r",
    "ideal-dims=lambda",
    "phi-iso",
    "ext-table",
    "gldim=2",
    "corner=kappa",
)
CHECK_ALIASES = {
    "dim": "dim=r",
    "ideals": "ideal-dims=lambda",
    "ideal-dims": "ideal-dims=lambda",
    "phi": "phi-iso",
    "ext": "ext-table",
    "gldim": "gldim=2",
    "corner": "corner=kappa",
}


class UsageError(Exception):
    pass


def _parse_pair(r: int, a: int) -> CoprimePair:
    try:
        return CoprimePair(r, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_checks(spec: Optional[str]) -> tuple[str, ...]:
    if not spec:
        return CHECK_NAMES
    chosen = []
    for token in spec.split(","):
        token = token.strip()
        name = CHECK_ALIASES.get(token, token)
        if name not in CHECK_NAMES:
            raise UsageError(
                f"unknown check {token!r}; known: {', '.join(CHECK_NAMES)}"
            )
        chosen.append(name)
    return tuple(sorted(set(chosen), key=CHECK_NAMES.index))


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError as exc:
        raise UsageError(f"malformed {what} {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# Named checks shared by verify and sweep
# ---------------------------------------------------------------------------


def run_checks(
    r: int,
    a: int,
    checks: tuple[str, ...] = CHECK_NAMES,
    depth: int = 4,
    fault: bool = False,
    ext_limit: Optional[int] = None,
) -> dict:
    """Run the named checks for one pair; values are "pass", "skip", or
    "fail: <diagnostic>"."""
    pair = CoprimePair(r, a)
    kappa = KappaAlgebra.from_pair(pair)
    needs_end = {"phi-iso", "ext-table", "gldim=2", "corner=kappa"}
    end = end_algebra(kappa) if needs_end.intersection(checks) else None
    table = None
    results: dict = {}
    for name in checks:
        try:
            if name == "dim=r":
                ok = kappa.dim == r
                detail = f"dim {kappa.dim} != r {r}" if not ok else ""
            elif name == "ideal-dims=lambda":
                dims = tuple(ideal.dim for ideal in kappa.ideals)
                lam = tuple(lambda_seq(kappa.alpha))
                ok = dims == lam
                detail = f"ideal dims {dims} != lambda {lam}" if not ok else ""
            elif name == "phi-iso":
                morphism = phi(lambda_presentation(kappa.alpha), end)
                if fault:
                    morphism = inject_fault(morphism)
                report = verify_iso(morphism)
                ok = report.passed
                detail = "; ".join(report.failures[:3]) if not ok else ""
            elif name in ("ext-table", "gldim=2"):
                if ext_limit is not None and r > ext_limit:
                    results[name] = "skip"
                    continue
                if table is None:
                    table = ext_table(end, depth)
                if name == "ext-table":
                    alpha = list(kappa.alpha)
                    n = len(alpha)
                    bad = [
                        (k, i, j)
                        for k in range(depth + 1)
                        for i in range(n + 1)
                        for j in range(n + 1)
                        if table.ext(k, i, j) != chain_algebra_ext(alpha, k, i, j)
                    ]
                    ok = not bad
                    detail = f"cells {bad[:5]} disagree with closed form" if bad else ""
                else:
                    gd = table.global_dimension
                    ok = gd == 2
                    detail = f"global dimension {gd} != 2" if not ok else ""
            elif name == "corner=kappa":
                result = corner(end, 0)
                ok = result.matches_kappa
                detail = "; ".join(result.mismatches[:3]) if not ok else ""
            else:
                raise UsageError(f"unknown check {name!r}")
        except UsageError:
            raise
        except Exception as exc:  # a crash inside a check is a failure, not an abort
            results[name] = f"fail: {type(exc).__name__}: {exc}"
            continue
        results[name] = "pass" if ok else f"fail: {detail}"
    return results


def _checks_failed(results: dict) -> bool:
    return any(v.startswith("fail") for v in results.values())


def _report_json(r: int, a: int, results: dict) -> str:
    return json.dumps({"pair": [r, a], "checks": results}, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Output plumbing
# ---------------------------------------------------------------------------


def _emit(text: str, out_dir: Optional[str], filename: str) -> None:
    sys.stdout.write(text)
    target = out_dir or os.environ.get(OUT_ENV)
    if target:
        os.makedirs(target, exist_ok=True)
        with open(os.path.join(target, filename), "w") as fh:
            fh.write(text)


_EXT_BY_FORMAT = {"text": "txt", "json": "json", "dot": "dot"}


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_fraction(args) -> int:
    pair = _parse_pair(args.r, args.a)
    alpha = expand(pair)
    beta = dual(alpha)
    lam = list(lambda_seq(alpha))
    tmap = t_map(alpha)
    tvals = [tmap[j] for j in range(1, len(beta) + 1)]
    dual_pair = evaluate(beta)
    if args.format == "json":
        obj = {
            "r": pair.r,
            "a": pair.a,
            "alpha": list(alpha),
            "beta": list(beta),
            "lambda": lam,
            "t": tvals,
            "dual_pair": [dual_pair.r, dual_pair.a] if dual_pair is not SMOOTH else None,
        }
        if args.diagram:
            obj["diagram_columns"] = list(point_diagram(alpha).column_counts())
        text = json.dumps(obj, indent=2) + "\n"
    else:
        def fmt(values) -> str:
            return "[" + ",".join(str(x) for x in values) + "]"

        lines = [
            f"r/a = {pair.r}/{pair.a}",
            f"alpha {fmt(alpha)}",
            f"beta {fmt(beta)}",
            f"lambda {fmt(lam)}",
            f"t {fmt(tvals)}",
        ]
        if dual_pair is not SMOOTH:
            lines.append(f"dual r/(r-a) = {dual_pair.r}/{dual_pair.a}")
        if args.diagram:
            lines.append("diagram")
            lines.append(point_diagram(alpha).ascii())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, f"fraction-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[args.format]}")
    return 0


_PRESENTERS = {
    "lambda": lambda pair: lambda_presentation(expand(pair)),
    "recon": lambda pair: recon_presentation(expand(pair)),
    "knoerrer": knoerrer_presentation,
    "riemenschneider": riemenschneider_presentation,
}


def cmd_present(args) -> int:
    pair = _parse_pair(args.r, args.a)
    presentation = _PRESENTERS[args.algebra](pair)
    try:
        text = render(presentation, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(
        text,
        args.out,
        f"present-{args.algebra}-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[args.format]}",
    )
    return 0


def cmd_verify(args) -> int:
    pair = _parse_pair(args.r, args.a)
    checks = _parse_checks(args.checks)
    results = run_checks(
        pair.r, pair.a, checks, depth=args.depth, fault=args.inject_fault
    )
    if args.format == "json":
        text = _report_json(pair.r, pair.a, results)
    else:
        lines = [f"verify ({pair.r},{pair.a})"]
        lines.extend(f"check {name}: {status}" for name, status in results.items())
        failed = sum(1 for v in results.values() if v.startswith("fail"))
        lines.append(f"result {'FAIL' if failed else 'PASS'} ({failed} failing)")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, f"verify-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[args.format]}")
    return 1 if _checks_failed(results) else 0


def cmd_ext(args) -> int:
    pair = _parse_pair(args.r, args.a)
    kappa = KappaAlgebra.from_pair(pair)
    end = end_algebra(kappa)
    table = ext_table(end, args.depth)
    n = end.n
    cells = {
        (k, i, j): table.ext(k, i, j)
        for k in range(args.depth + 1)
        for i in range(n + 1)
        for j in range(n + 1)
        if table.ext(k, i, j)
    }
    gd = table.global_dimension
    if args.format == "json":
        obj = {
            "pair": [pair.r, pair.a],
            "depth": args.depth,
            "gldim": gd,
        }
        obj.update(
            {f"ext.{k}.{i}.{j}": v for (k, i, j), v in sorted(cells.items())}
        )
        text = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [f"ext ({pair.r},{pair.a}) depth {args.depth}"]
        lines.extend(
            f"ext[{k}]({i},{j}) = {v}" for (k, i, j), v in sorted(cells.items())
        )
        lines.append(f"gldim {gd}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, f"ext-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[args.format]}")
    return 0


def cmd_ideals(args) -> int:
    pair = _parse_pair(args.r, args.a)
    kappa = KappaAlgebra.from_pair(pair)
    if args.format == "json":
        obj = {
            "pair": [pair.r, pair.a],
            "ideals": [
                {"index": i.index, "generator": str(i.generator), "dim": i.dim}
                for i in kappa.ideals
            ],
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [f"ideals ({pair.r},{pair.a})"]
        lines.extend(
            f"I_{i.index} gen {i.generator} dim {i.dim}" for i in kappa.ideals
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, f"ideals-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[args.format]}")
    return 0


def cmd_diagram(args) -> int:
    pair = _parse_pair(args.r, args.a)
    kappa = KappaAlgebra.from_pair(pair)
    fmt = args.format
    if fmt == "json":
        raise UsageError("diagram supports formats: dot, text")
    text = monomial_diagram(kappa, format=fmt)
    _emit(text, args.out, f"diagram-{pair.r}-{pair.a}.{_EXT_BY_FORMAT[fmt]}")
    return 0


def cmd_equiv(args) -> int:
    if len(args.alpha) != 2 or len(args.keep) != 2:
        raise UsageError("equiv expects exactly two --alpha and two --keep")
    configs = []
    for alpha_text, keep_text in zip(args.alpha, args.keep):
        alpha = _parse_int_list(alpha_text, "--alpha")
        keep = _parse_int_list(keep_text, "--keep")
        try:
            configs.append((alpha, keep))
            decompose(alpha, keep)  # validates entries, kept set, ranges
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    verdict = equivalence_verdict(configs[0], configs[1])

    def describe(cfg) -> dict:
        dec = decompose(*cfg)
        return {
            "alpha": list(dec.alpha),
            "keep": list(dec.kept.vertices),
            "chunks": [list(c) for c in dec.chunks],
            "chunk_pairs": [
                "smooth" if v is SMOOTH else [v.r, v.a] for v in dec.values
            ],
            "gamma": list(dec.gamma),
        }

    obj = {
        "config1": describe(configs[0]),
        "config2": describe(configs[1]),
        "equivalent": verdict.chunk_equivalent,
        "concatenation_equivalent": verdict.concatenation_equivalent,
        "criteria_agree": verdict.criteria_agree,
    }
    if args.format == "text":
        lines = [
            f"config1 alpha {obj['config1']['alpha']} keep {obj['config1']['keep']}"
            f" chunks {obj['config1']['chunks']}",
            f"config2 alpha {obj['config2']['alpha']} keep {obj['config2']['keep']}"
            f" chunks {obj['config2']['chunks']}",
            f"equivalent {verdict.chunk_equivalent}",
            f"concatenation_equivalent {verdict.concatenation_equivalent}",
            f"criteria_agree {verdict.criteria_agree}",
        ]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(obj, indent=2) + "\n"
    _emit(text, args.out, f"equiv.{_EXT_BY_FORMAT[args.format]}")
    return 0


def _sweep_task(task: tuple) -> tuple:
    r, a, checks, depth, ext_limit = task
    results = run_checks(r, a, checks, depth=depth, ext_limit=ext_limit)
    return r, a, results


def cmd_sweep(args) -> int:
    if args.rmax < 2:
        _emit("pairs 0 failures 0\n", args.out, "sweep.txt")
        return 0
    checks = _parse_checks(args.checks)
    ext_limit = args.rmax_ext if args.rmax_ext is not None else min(args.rmax, 30)
    pairs = [
        p for p in coprime_pairs(args.rmax) if args.a is None or p.a == args.a
    ]
    tasks = [(p.r, p.a, checks, args.depth, ext_limit) for p in pairs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_task, tasks, chunksize=8))
    else:
        rows = [_sweep_task(t) for t in tasks]
    lines = []
    reports = []
    failures = 0
    for r, a, results in rows:
        reports.append({"pair": [r, a], "checks": results})
        if _checks_failed(results):
            failures += 1
        cells = " ".join(
            f"{name}:{'fail' if status.startswith('fail') else status}"
            for name, status in results.items()
        )
        lines.append(f"({r},{a}) {cells}")
    lines.append(f"pairs {len(rows)} failures {failures}")
    text = "\n".join(lines) + "\n"
    _emit(text, args.out, f"sweep-rmax{args.rmax}.txt")
    target = args.out or os.environ.get(OUT_ENV)
    if target:
        with open(os.path.join(target, f"sweep-rmax{args.rmax}.json"), "w") as fh:
            json.dump(reports, fh, indent=2)
            fh.write("\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knoerrer",
        description="Continued-fraction dualities, quiver presentations, "
        "monomial ideal theory, endomorphism realizations, and homology "
        "for cyclic quotient surface singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pair(p) -> None:
        p.add_argument("r", type=int)
        p.add_argument("a", type=int)

    def add_common(p, formats=("text", "json"), default="text") -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--out", default=None, help="directory for a copy of the output")

    p = sub.add_parser("fraction", help="expansion, dual, lambda, t-map, diagram")
    add_pair(p)
    p.add_argument("--diagram", action="store_true", help="include the point diagram")
    add_common(p)
    p.set_defaults(func=cmd_fraction)

    p = sub.add_parser("present", help="quiver/commutative presentations")
    p.add_argument(
        "algebra", choices=("lambda", "recon", "knoerrer", "riemenschneider")
    )
    add_pair(p)
    add_common(p, formats=("text", "json", "dot"))
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("verify", help="run the named checks for one pair")
    add_pair(p)
    p.add_argument("--depth", type=int, default=4, help="Ext probe depth")
    p.add_argument("--checks", default=None, help="comma list of checks")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ext", help="Ext table of the endomorphism algebra")
    add_pair(p)
    p.add_argument("--depth", type=int, default=4)
    add_common(p, default="json")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("ideals", help="the indecomposable monomial ideals")
    add_pair(p)
    add_common(p)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("diagram", help="the monomial diagram")
    add_pair(p)
    add_common(p, formats=("dot", "text"), default="dot")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("equiv", help="compare two kept-vertex configurations")
    p.add_argument("--alpha", action="append", default=[], help="comma list, twice")
    p.add_argument("--keep", action="append", default=[], help="comma list, twice")
    add_common(p, default="json")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("sweep", help="run checks over all coprime pairs")
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--a", type=int, default=None, help="restrict to one a value")
    p.add_argument("--checks", default=None)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument(
        "--rmax-ext",
        type=int,
        default=None,
        help="run ext/gldim checks only for r up to this bound (default min(rmax, 30))",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
