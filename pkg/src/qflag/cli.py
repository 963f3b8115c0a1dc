"""
Command line front end.

::

    qflag verify covering --type A1 --ell 3 --mu 1 --grid 8
    qflag verify braid --type A2 --ell generic --format text
    qflag suite --config suite.json --out report.json --jobs 2

A suite config is a JSON object ``{"jobs": [...]}``; each job carries
``check`` and ``type`` plus the optional fields ``ell`` (an integer or
``"generic"``), ``lambda``, ``mu``, ``grid``, ``j_override`` (a 0/1 mask
over the nodes), ``height``, ``seed`` and ``expect_covered``.  Reports are
JSON with ``schema: 1``; the exit status is 0 when every job passed, 1
when some job failed and 2 for invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import __version__
from .flagcover import dominant_weights, verify_sigma_multiplicativity, verify_w_mult_commutation
from .report import CheckResult
from .rootdata import sharp_datum
from .suites import (SUPPORTED_TYPES, check_arithmetic, check_braid, check_covering, check_dimension,
                     check_frobenius, check_graded, check_pm1, check_relations, check_sharp,
                     datum_for, mode_label, parse_mode)
from .uqrep.generators import check_J

__all__ = ["main", "run_job", "run_suite", "validate_job", "CHECKS", "SCHEMA"]

SCHEMA = 1
CHECKS = ("covering", "braid", "pm1", "frobenius", "sigma", "w-mult", "sharp-surjectivity",
          "arithmetic", "relations", "graded", "dimension")
_JOB_KEYS = {"check", "type", "ell", "lambda", "mu", "grid", "j_override", "height",
             "expect_covered", "seed"}


class ConfigError(ValueError):
    pass


def _weight(value: Any, rank: int, name: str) -> tuple[int, ...]:
    if isinstance(value, str):
        value = [int(x) for x in value.split(",") if x.strip()]
    elif isinstance(value, int):
        value = [value]
    w = tuple(int(x) for x in value)
    if len(w) != rank:
        raise ConfigError(f"{name} needs {rank} coordinate(s), got {list(w)}")
    if any(x < 0 for x in w):
        raise ConfigError(f"{name}={list(w)} is not dominant")
    return w


def validate_job(job: dict) -> dict:
    """Normalize a job description, raising :class:`ConfigError` on bad input."""
    unknown = set(job) - _JOB_KEYS
    if unknown:
        raise ConfigError(f"unknown job field(s): {', '.join(sorted(unknown))}")
    check = job.get("check")
    if check not in CHECKS:
        raise ConfigError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    out: dict[str, Any] = {"check": check}
    if check == "arithmetic":
        out["seed"] = int(job.get("seed", 0))
        return out
    type_label = job.get("type")
    if type_label not in SUPPORTED_TYPES:
        raise ConfigError(f"unknown type {type_label!r}; choose from {', '.join(SUPPORTED_TYPES)}")
    out["type"] = type_label
    datum = datum_for(type_label)
    try:
        ell = parse_mode(job.get("ell", "generic"))
    except ValueError as exc:
        raise ConfigError(f"bad ell: {exc}") from None
    out["ell"] = "generic" if ell is None else ell
    rank = datum.rank
    if check in ("pm1", "frobenius", "sharp-surjectivity") and ell is None:
        raise ConfigError(f"check {check!r} needs a root of unity (--ell n)")
    if check == "pm1" and ell not in (1, 2):
        raise ConfigError("check 'pm1' needs ell in {1, 2}")
    for key in ("lambda", "mu"):
        if job.get(key) is not None:
            out[key] = list(_weight(job[key], rank, key))
    required = {"covering": ["mu"], "frobenius": ["lambda"], "sigma": ["lambda", "mu"],
                "w-mult": ["lambda", "mu"], "sharp-surjectivity": ["mu"]}
    for key in required.get(check, []):
        if key not in out:
            raise ConfigError(f"check {check!r} needs --{key}")
    if check in ("covering", "sharp-surjectivity"):
        out["grid"] = int(job.get("grid", 8 if rank == 1 else 4))
    if check == "braid":
        out["grid"] = int(job.get("grid", 3))
    if check == "graded":
        out["height"] = int(job.get("height", 6))
    if check == "dimension":
        out["grid"] = int(job.get("grid", 3))
    if job.get("j_override") is not None:
        mask = job["j_override"]
        if isinstance(mask, str):
            mask = [x.strip() for x in mask.split(",") if x.strip()]
        try:
            mask = [int(x) for x in mask]
        except (TypeError, ValueError):
            raise ConfigError(f"j_override must be a 0/1 mask, got {job['j_override']!r}") from None
        if len(mask) != rank or any(x not in (0, 1) for x in mask):
            raise ConfigError(f"j_override needs {rank} entries from {{0, 1}}, got {mask}")
        try:
            check_J(datum, [i for i, x in enumerate(mask) if x])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        out["j_override"] = mask
    if job.get("expect_covered"):
        out["expect_covered"] = [list(_weight(w, rank, "expect_covered")) for w in job["expect_covered"]]
    key = {"frobenius": "lambda", "sharp-surjectivity": "mu"}.get(check)
    if key and not sharp_datum(datum, ell).contains(out[key]):
        raise ConfigError(f"{key}={out[key]} is not in the rescaled lattice for ell={ell}")
    return out


def _dispatch(job: dict) -> CheckResult:
    check = job["check"]
    if check == "arithmetic":
        return check_arithmetic(seed=job["seed"])
    datum = datum_for(job["type"])
    ell = parse_mode(job["ell"])
    J = None if "j_override" not in job else [i for i, x in enumerate(job["j_override"]) if x]
    lam = tuple(job["lambda"]) if "lambda" in job else None
    mu = tuple(job["mu"]) if "mu" in job else None
    if check == "covering":
        return check_covering(datum, ell, mu, job["grid"], job.get("expect_covered", ()))
    if check == "braid":
        return check_braid(datum, ell, job["grid"], J, lams=None if lam is None else [lam])
    if check == "pm1":
        return check_pm1(datum, ell, J)
    if check == "frobenius":
        return check_frobenius(datum, lam, ell)
    if check == "sigma":
        return verify_sigma_multiplicativity(datum, lam, mu, ell)
    if check == "w-mult":
        return verify_w_mult_commutation(datum, lam, mu, ell)
    if check == "sharp-surjectivity":
        return check_sharp(datum, ell, mu, job["grid"])
    if check == "relations":
        return check_relations(datum, ell)
    if check == "graded":
        return check_graded(datum, ell, job["height"], full=False)
    if check == "dimension":
        lams = [lam] if lam is not None else dominant_weights(datum.rank, job["grid"])
        return check_dimension(datum, ell, lams)
    raise ConfigError(f"unknown check {check!r}")


def _plain(x: Any) -> Any:
    """JSON-ready copy: tuples become lists, keys strings, scalars strings."""
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else ",".join(map(str, k)) if isinstance(k, tuple) else str(k)):
                _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    return str(x)


def run_job(job: dict) -> dict:
    """Run one validated job and return its report record."""
    t0 = time.perf_counter()
    try:
        res = _dispatch(job)
        record = {"job": job, "name": res.name, "passed": res.passed, "checks": res.checks,
                  "failures": _plain(res.failures), "data": _plain(res.data)}
    except ArithmeticError as exc:
        record = {"job": job, "name": job["check"], "passed": False, "checks": 0,
                  "failures": [{"error": type(exc).__name__, "message": str(exc)}], "data": {}}
    record["seconds"] = round(time.perf_counter() - t0, 3)
    return record


def run_suite(jobs: Sequence[dict], workers: int = 1) -> dict:
    """Validate and run ``jobs``; returns the report object."""
    valid = [validate_job(j) for j in jobs]
    t0 = time.perf_counter()
    if workers > 1 and len(valid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_job, valid))
    else:
        records = [run_job(j) for j in valid]
    passed = sum(r["passed"] for r in records)
    return {"schema": SCHEMA, "tool": "qflag", "version": __version__, "config": {"jobs": valid},
            "results": records,
            "summary": {"jobs": len(records), "passed": passed, "failed": len(records) - passed,
                        "seconds": round(time.perf_counter() - t0, 3)}}


def _describe(job: dict) -> str:
    parts = [job["check"]]
    if "type" in job:
        parts.append(job["type"])
        parts.append(mode_label(parse_mode(job["ell"])))
    for key in ("lambda", "mu", "grid", "height", "j_override"):
        if key in job:
            parts.append(f"{key}={job[key]}")
    return " ".join(str(p) for p in parts)


def format_text(report: dict) -> str:
    lines = []
    for r in report["results"]:
        flag = "PASS" if r["passed"] else "FAIL"
        extra = ""
        data = r["data"]
        if "thresholds" in data:
            extra = f" thresholds={data['thresholds']}"
        lines.append(f"{flag} {_describe(r['job'])} checks={r['checks']}{extra} ({r['seconds']}s)")
        for wit in r["failures"][:3]:
            lines.append(f"    witness: {json.dumps(wit)}")
    s = report["summary"]
    lines.append(f"{s['passed']}/{s['jobs']} jobs passed")
    return "\n".join(lines)


def _emit(report: dict, fmt: str, out: str | None) -> None:
    text = json.dumps(report, indent=2) if fmt == "json" else format_text(report)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qflag", description="Exact verification suites for quantum "
                                "groups at roots of unity and the quantized flag manifold.")
    p.add_argument("--version", action="version", version=f"qflag {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    v = sub.add_parser("verify", parents=[common], help="run one check")
    v.add_argument("check", choices=CHECKS)
    v.add_argument("--type", choices=SUPPORTED_TYPES)
    v.add_argument("--ell", default="generic", help="order of zeta, or 'generic'")
    v.add_argument("--lambda", dest="lam", help="weight, comma separated")
    v.add_argument("--mu", help="weight, comma separated")
    v.add_argument("--grid", type=int, help="grid bound (covering, sharp-surjectivity, braid)")
    v.add_argument("--height", type=int, help="total height bound (graded)")
    v.add_argument("--j-override", help="membership mask of J over the nodes, e.g. 1,0")
    v.add_argument("--seed", type=int, help="random seed (arithmetic)")
    s = sub.add_parser("suite", parents=[common], help="run the jobs of a config file")
    s.add_argument("--config", required=True)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            job = {"check": args.check, "type": args.type, "ell": args.ell, "lambda": args.lam,
                   "mu": args.mu, "grid": args.grid, "height": args.height,
                   "j_override": args.j_override, "seed": args.seed}
            job = {k: v for k, v in job.items() if v is not None}
            if args.check == "arithmetic":
                job = {k: v for k, v in job.items() if k in ("check", "seed")}
            jobs = [job]
        else:
            try:
                with open(args.config, encoding="utf-8") as fh:
                    config = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigError(f"cannot read config: {exc}") from None
            if not isinstance(config, dict) or not isinstance(config.get("jobs", []), list):
                raise ConfigError("config must be an object with a 'jobs' list")
            jobs = config.get("jobs", [])
        report = run_suite(jobs, max(1, args.jobs))
    except ConfigError as exc:
        print(f"qflag: error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format, args.out)
    return 0 if report["summary"]["failed"] == 0 else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
