"""Command-line front end: run any verification section or all of them,
emit a deterministic text or JSON report, and exit with a CI-friendly
status code.

Exit codes: 0 all checks pass, 2 a reproduced statement failed, 3 the
run is inconclusive by design (the surface case of the enumeration),
4 configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chern, cohomology, geombasis, gwcount, smoothcheck, specialfiber

EXIT_OK = 0
EXIT_DISCREPANCY = 2
EXIT_INCONCLUSIVE = 3
EXIT_CONFIG = 4

SECTIONS = ("euler", "cohomology", "fiber", "geombasis", "smoothness", "degeneration")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _claim(claim_id: str, ok: bool, **payload) -> dict:
    entry = {"claim": claim_id, "ok": bool(ok)}
    entry.update(payload)
    return entry


def _fmt_gauss(value) -> str:
    re, im = value.re, value.im
    if not im:
        return str(re)
    imag = "i" if im == 1 else ("-i" if im == -1 else f"{im}i")
    if not re:
        return imag
    return f"{re}{imag}" if imag.startswith("-") else f"{re}+{imag}"


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def run_euler(cfg: dict) -> dict:
    m = cfg["m"]
    ci = chern.CIDescriptor(m + 2, (2, 2))
    chi = chern.euler_char(ci)
    prim = chern.primitive_middle_dim(ci)
    claims = [
        _claim("euler-characteristic-is-2m-plus-4", chi == 2 * m + 4, chi=chi),
        _claim("primitive-rank-is-m-plus-3", prim == m + 3, prim_rank=prim),
    ]
    return {
        "name": "euler",
        "chi": chi,
        "prim_rank": prim,
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


def run_cohomology(cfg: dict) -> dict:
    m = cfg["m"]
    if m < 4:
        return {
            "name": "cohomology",
            "skipped": "lattice claims start in dimension 4",
            "claims": [],
            "ok": True,
        }
    det_value = cohomology.integral_gram_det(m)
    expected_det = Fraction(-1 if m % 4 else 1)
    index = cohomology.lattice_index(m)
    _, sig = cohomology.primitive_gram(m)
    pos, neg, zero = sig
    definite = zero == 0 and (pos == 0 or neg == 0) and pos + neg == m + 3
    claims = [
        _claim(
            "integral-gram-determinant-is-unit",
            det_value == expected_det,
            determinant=det_value,
            expected=expected_det,
        ),
        _claim("ambient-plus-primitive-index-is-4", index == 4, index=index),
        _claim(
            "primitive-pairing-is-definite-of-rank-m-plus-3",
            definite,
            signature=list(sig),
        ),
    ]
    return {
        "name": "cohomology",
        "determinant": det_value,
        "lattice_index": index,
        "primitive_signature": list(sig),
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


def run_fiber(cfg: dict) -> dict:
    m = cfg["m"]
    if m < 4:
        return {
            "name": "fiber",
            "skipped": "the fiber model starts in dimension 4",
            "claims": [],
            "ok": True,
        }
    try:
        basis = specialfiber.mv_kernel(m)
        span_ok = True
    except AssertionError:
        basis = []
        span_ok = False
    gram = specialfiber.fiber_gram_on_kernel(m) if span_ok else []
    expected = [
        [Fraction(0)] * len(basis) for _ in range(len(basis))
    ]
    if span_ok:
        expected[0][0] = Fraction(4)
        expected[2][2] = Fraction(1)
        expected[3][3] = Fraction(1)
        for i in range(4, len(basis)):
            expected[i][i] = Fraction(-1)
    rmap = specialfiber.restriction_map(m)
    kernel = rmap.kernel()
    kernel_ok = len(kernel) == 1 and all(
        not c for j, c in enumerate(kernel[0]) if j != 1
    )
    claims = [
        _claim(
            "glued-fiber-kernel-matches-named-basis",
            span_ok and len(basis) == m + 5,
            dimension=len(basis),
        ),
        _claim("fiber-pairing-matches-block-table", span_ok and gram == expected),
        _claim(
            "restriction-is-pairing-compatible", rmap.is_pairing_preserving()
        ),
        _claim(
            "restriction-kernel-is-the-null-block",
            kernel_ok,
            rank=rmap.rank(),
        ),
    ]
    return {
        "name": "fiber",
        "kernel_dimension": len(basis),
        "kernel_basis": {
            "labels": list(specialfiber.mv_kernel_labels(m)),
            "coordinates": [
                [_fmt_gauss(c) for c in v.coeffs] for v in basis
            ],
            "over": list(specialfiber.fiber_basis_labels(m)),
        },
        "fiber_gram": [[str(x) for x in row] for row in gram],
        "restriction_matrix": {
            "rows": list(rmap.target_labels),
            "columns": list(rmap.source_labels),
            "entries": [[_fmt_gauss(x) for x in row] for row in rmap.matrix],
        },
        "restriction_rank": rmap.rank(),
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


def run_geombasis(cfg: dict) -> dict:
    m = cfg["m"]
    lambdas = cfg["lambdas"]
    config = (
        geombasis.LambdaConfig(tuple(lambdas))
        if lambdas
        else geombasis.default_config(m)
    )
    sums = [geombasis.power_sum(config, p) for p in range(m + 3)]
    sums_ok = all(s == 0 for s in sums[: m + 2]) and sums[m + 2] == 1
    on_quadrics = geombasis.verify_points_on_quadrics(config)
    plane = geombasis.verify_plane_in_x(config, trials=cfg["trials"], seed=cfg["seed"])
    claims = [
        _claim("weighted-power-sums-vanish-below-node-count", sums_ok),
        _claim("spanning-points-lie-on-both-quadrics", on_quadrics),
        _claim(
            "plane-lies-inside-the-intersection",
            plane,
            trials=cfg["trials"],
            seed=cfg["seed"],
        ),
    ]
    return {
        "name": "geombasis",
        "nodes": [str(v) for v in config.lambdas],
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


def run_smoothness(cfg: dict) -> dict:
    m = cfg["m"]
    primes = cfg["primes"]
    lambdas = cfg["lambdas"] or None
    if lambdas is not None:
        if any(v.denominator != 1 for v in lambdas):
            raise _UsageError("the finite-field scans need integer --lambdas")
        lambdas = [int(v) for v in lambdas]
    data = smoothcheck.default_pencil(
        m, primes=tuple(primes), seed=cfg["seed"], lambdas=lambdas
    )
    claims = []
    per_prime = []
    for p in primes:
        try:
            locus = smoothcheck.singular_locus_check(
                data, p, allow_lambda_collisions=True, budget=cfg["budget"]
            )
            charts = smoothcheck.chart_smoothness_check(
                data, p, allow_lambda_collisions=True, budget=cfg["budget"]
            )
        except smoothcheck.BudgetExceededError as exc:
            raise _UsageError(str(exc)) from exc
        claims.append(
            _claim(
                f"singular-locus-equals-base-locus-mod-{p}",
                locus["ok"],
                discrepancies=len(locus["t_zero"]["discrepancies"]),
            )
        )
        claims.append(
            _claim(
                f"blowup-charts-have-uniform-rank-3-mod-{p}",
                not charts["chart_rank_failures"],
                chart_points=charts["chart_points"],
            )
        )
        claims.append(
            _claim(
                f"divisor-and-center-are-smooth-mod-{p}",
                not charts["divisor_rank_failures"]
                and not charts["center_rank_failures"],
            )
        )
        per_prime.append({"prime": p, "locus": locus, "charts": charts})
    return {
        "name": "smoothness",
        "pencil": {
            "lambdas": list(data.lambdas),
            "g1": list(data.g1),
            "g2": list(data.g2),
        },
        "runs": per_prime,
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


def run_degeneration(cfg: dict) -> dict:
    m = cfg["m"]
    report = gwcount.main_correlator_report(m)
    claims = [
        _claim(
            "tangency-bound-and-dimension-screen-agree",
            report["screens_consistent"],
        )
    ]
    if m >= 4:
        claims.append(
            _claim(
                "every-degeneration-term-vanishes",
                report["status"] == "vanishes",
                survivors=len(report["surviving_terms"]),
            )
        )
        claims.append(
            _claim(
                "main-correlator-is-zero",
                report["correlator_value"] == 0,
                correlator=report["correlator_value"],
            )
        )
    else:
        claims.append(
            _claim(
                "surface-case-reports-surviving-candidates",
                report["status"] == "inconclusive"
                and len(report["surviving_terms"]) >= 1,
                survivors=len(report["surviving_terms"]),
            )
        )
    return {
        "name": "degeneration",
        "report": report,
        "inconclusive": report["status"] == "inconclusive",
        "claims": claims,
        "ok": all(c["ok"] for c in claims),
    }


_RUNNERS = {
    "euler": run_euler,
    "cohomology": run_cohomology,
    "fiber": run_fiber,
    "geombasis": run_geombasis,
    "smoothness": run_smoothness,
    "degeneration": run_degeneration,
}


def _parse_int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip() != ""]


def build_parser() -> _Parser:
    parser = _Parser(prog="twoquadrics", description=__doc__)
    parser.add_argument("section", choices=SECTIONS + ("full",))
    parser.add_argument("--m", type=int, default=4, help="even dimension, at least 2")
    parser.add_argument(
        "--lambdas",
        type=str,
        default="",
        help="comma-separated distinct rational nodes (default 0..m+2)",
    )
    parser.add_argument(
        "--primes", type=str, default="5,7,11", help="comma-separated scan primes"
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument(
        "--budget",
        type=int,
        default=smoothcheck.DEFAULT_BUDGET,
        help="maximum projective points per finite-field scan",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--output", type=str, default="", help="write the report here")
    return parser


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _config_from_args(args) -> dict:
    if args.m % 2 or args.m < 2:
        raise _UsageError("--m must be even and at least 2")
    lambdas = []
    if args.lambdas:
        lambdas = [Fraction(part) for part in args.lambdas.split(",")]
        if len(set(lambdas)) != len(lambdas):
            raise _UsageError("--lambdas must be pairwise distinct")
        if len(lambdas) != args.m + 3:
            raise _UsageError(f"--lambdas needs exactly {args.m + 3} nodes")
    primes = _parse_int_list(args.primes)
    if not primes or any(not _is_prime(p) for p in primes):
        raise _UsageError("--primes must list primes")
    if args.trials < 1:
        raise _UsageError("--trials must be positive")
    return {
        "m": args.m,
        "lambdas": lambdas,
        "primes": primes,
        "seed": args.seed,
        "trials": args.trials,
        "budget": args.budget,
    }


def _render_text(report: dict) -> str:
    lines = []
    for key in ("m", "seed"):
        lines.append(f"{key}: {report['config'][key]}")
    skip = ("claims", "name", "runs", "report", "kernel_basis", "fiber_gram",
            "restriction_matrix", "pencil")
    for section in report["sections"]:
        name = section["name"]
        for key, value in section.items():
            if key in skip:
                continue
            lines.append(f"[{name}] {key}: {value}")
        for claim in section["claims"]:
            status = "pass" if claim["ok"] else "FAIL"
            extras = {
                k: v for k, v in claim.items() if k not in ("claim", "ok")
            }
            suffix = f" {extras}" if extras else ""
            lines.append(f"[{name}] {claim['claim']}: {status}{suffix}")
        if name == "degeneration" and "report" in section:
            rep = section["report"]
            lines.append(f"[{name}] total_terms: {rep['total_terms']}")
            lines.append(f"[{name}] verdict_census: {rep['verdict_census']}")
            lines.append(f"[{name}] survivors: {len(rep['surviving_terms'])}")
    lines.append(f"overall: {report['verdict']}")
    if report.get("correlator") is not None:
        lines.append(f"correlator = {report['correlator']}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = _config_from_args(args)
        names = SECTIONS if args.section == "full" else (args.section,)
        sections = [_RUNNERS[name](cfg) for name in names]
    except _UsageError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (smoothcheck.DegenerateReductionError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    ok = all(section["ok"] for section in sections)
    inconclusive = any(section.get("inconclusive") for section in sections)
    correlator = None
    for section in sections:
        if section["name"] == "degeneration":
            correlator = section["report"]["correlator_value"]
    report = {
        "config": {
            "m": cfg["m"],
            "seed": cfg["seed"],
            "primes": cfg["primes"],
            "trials": cfg["trials"],
            "sections": list(names),
        },
        "sections": sections,
        "verdict": "pass" if ok else "discrepancy",
        "inconclusive": bool(inconclusive),
        "correlator": correlator,
    }
    if ok and inconclusive:
        report["verdict"] = "inconclusive"

    if args.format == "json":
        rendered = json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"
    else:
        rendered = _render_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)

    if not ok:
        return EXIT_DISCREPANCY
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
