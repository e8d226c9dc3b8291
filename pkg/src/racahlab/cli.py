"""Command-line front end: verification subcommands and reproducible suites.

Reports are JSON with every numeric quantity rendered as an exact-rational
token, never a float.  Suite runs are deterministic: the same configuration
(including the recorded seed) produces byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import decompose as dec
from . import leonard, pbw, rd
from .errors import ConfigError, RacahLabError
from .gaussian import GaussianRational
from .racah import (
    central_values,
    load_rep,
    rep_to_text,
    verify_presentation,
    verify_section6_relations,
)
from .sl2 import build_hypercube, build_Ln, sharp_pullback, verify_hypercube

REPORT_SCHEMA = "racahlab-report/1"

SUITE_TARGETS = (
    "thm1_4",
    "thm1_5",
    "thm1_6_membership",
    "thm3_3",
    "sec3_identities",
    "prop2_4",
    "lemma6_suite",
    "thm6_9",
    "thm7_2",
    "thm7_5",
    "thm1_8",
    "thm8_4",
    "thm8_7",
)


@dataclass(frozen=True)
class SuiteConfig:
    targets: tuple[str, ...]
    d_range: tuple[int, int]
    big_d_range: tuple[int, int]
    samples: int
    seed: int
    workers: int
    out: str | None
    export_matrices: str | None

    def as_dict(self) -> dict:
        return {
            "targets": list(self.targets),
            "d": f"{self.d_range[0]}..{self.d_range[1]}",
            "D": f"{self.big_d_range[0]}..{self.big_d_range[1]}",
            "samples": self.samples,
            "seed": self.seed,
            "workers": self.workers,
        }


def _check_dict(target: str, result: pbw.CheckResult) -> dict:
    return {
        "target": target,
        "identity": result.identity,
        "pass": result.passed,
        "residual_term_count": result.residual_term_count,
    }


def _ok(target: str, name: str, passed: bool, **extra) -> dict:
    out = {"target": target, "identity": name, "pass": bool(passed)}
    out.update(extra)
    return out


# -- seeded parameter sampling --------------------------------------------------


def sample_params(rng: random.Random, d: int) -> rd.RdParams:
    """Draw a parameter triple from a bounded Gaussian-integer box."""

    def scalar() -> GaussianRational:
        num_re = rng.randint(-3, 3)
        num_im = rng.randint(-1, 1)
        den = rng.randint(1, 3)
        return GaussianRational(Fraction(num_re, den), Fraction(num_im, den))

    return rd.RdParams(scalar(), scalar(), scalar(), d)


# -- suite targets ------------------------------------------------------------


def _run_thm1_4(cfg: SuiteConfig) -> list[dict]:
    return [_check_dict("thm1_4", r) for r in pbw.verify_sharp_relations()]


def _run_thm1_5(cfg: SuiteConfig) -> list[dict]:
    return [_check_dict("thm1_5", r) for r in pbw.verify_casimir_images()]


def _run_thm1_6(cfg: SuiteConfig) -> list[dict]:
    return [_check_dict("thm1_6_membership", r) for r in pbw.verify_kernel_generators()]


def _run_thm3_3(cfg: SuiteConfig) -> list[dict]:
    out = [_check_dict("thm3_3", r) for r in pbw.verify_d3_presentation()]
    out.extend(_check_dict("thm3_3", r) for r in pbw.verify_equivariance())
    return out


def _run_sec3(cfg: SuiteConfig) -> list[dict]:
    return [_check_dict("sec3_identities", r) for r in pbw.verify_even_identities()]


def _run_prop2_4(cfg: SuiteConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    out = []
    lo, hi = cfg.d_range
    for k in range(cfg.samples):
        d = lo + (k % (hi - lo + 1))
        params = sample_params(rng, d)
        rep = rd.construct(params)
        report = verify_presentation(rep)
        out.append(
            _ok(
                "prop2_4",
                f"sample {k}: presentation holds for {params.label()}",
                report.ok,
            )
        )
        values = central_values(rep)
        closed = rd.central_scalars(params)
        scalars = values.scalars()
        match = all(scalars[name] == closed[name] for name in closed)
        out.append(
            _ok(
                "prop2_4",
                f"sample {k}: central values are the four closed scalars",
                match,
            )
        )
    return out


def _run_lemma6(cfg: SuiteConfig) -> list[dict]:
    rng = random.Random(cfg.seed + 1)
    out = []
    lo, hi = cfg.d_range
    for k in range(cfg.samples):
        d = lo + (k % (hi - lo + 1))
        params = sample_params(rng, d)
        rep = rd.construct(params)
        n = d + 1
        expected = [
            (params.a * (params.a + 1) + Fraction(d * (d + 2), 12)) * n,
            (params.b * (params.b + 1) + Fraction(d * (d + 2), 12)) * n,
            (params.c * (params.c + 1) + Fraction(d * (d + 2), 12)) * n,
        ]
        traces_ok = [rep.A.trace(), rep.B.trace(), rep.C.trace()] == expected
        out.append(_ok("lemma6_suite", f"sample {k}: trace closed forms", traces_ok))
        witness = rd.is_irreducible(params)
        burnside = rd.burnside_irreducible(rep)
        out.append(
            _ok(
                "lemma6_suite",
                f"sample {k}: irreducibility criterion agrees with closure oracle",
                bool(witness) == burnside,
            )
        )
        sec6 = verify_section6_relations(rep)
        out.append(_ok("lemma6_suite", f"sample {k}: six auxiliary relations", sec6.ok))
        if witness:
            polys = rd.min_polys(params)
            gcd_flags = [p.is_squarefree for p in polys]
            window_flags = [
                rd.parameter_diagonalizable(v, d)
                for v in (params.a, params.b, params.c)
            ]
            out.append(
                _ok(
                    "lemma6_suite",
                    f"sample {k}: diagonalizability window matches squarefree test",
                    gcd_flags == window_flags,
                )
            )
    return out


def _run_thm6_9(cfg: SuiteConfig) -> list[dict]:
    rng = random.Random(cfg.seed + 2)
    out = []
    lo, hi = cfg.d_range
    for k in range(cfg.samples):
        d = lo + (k % (hi - lo + 1))
        params = sample_params(rng, d)
        witness = rd.is_irreducible(params)
        if not witness:
            out.append(
                _ok(
                    "thm6_9",
                    f"sample {k}: {params.label()} reducible; criterion skipped",
                    True,
                )
            )
            continue
        rep = rd.construct(params)
        criterion = rd.leonard_criterion(params)
        hints = (
            _distinct(rd.theta_list(params)),
            _distinct(rd.theta_star_list(params)),
            _distinct(rd.theta_eps_list(params)),
        )
        checker = leonard.check(rep.A, rep.B, rep.C, hints=hints).passed
        out.append(
            _ok(
                "thm6_9",
                f"sample {k}: window criterion agrees with generic checker on {params.label()}",
                criterion == checker,
            )
        )
    return out


def _distinct(seq):
    out = []
    for v in seq:
        if v not in out:
            out.append(v)
    return out


def _run_thm7(cfg: SuiteConfig, parity: int, target: str) -> list[dict]:
    from .sl2 import even_halves

    out = []
    for n in range(parity, 13):
        rep = build_Ln(n)
        halves = even_halves(rep)
        half = halves[parity]
        if half is None:
            continue
        report = dec.split_even_half(half)
        expected = {
            rd.iso_class_of(p) for p in dec.expected_half_split(n, parity)
        }
        found = report.classes()
        out.append(
            _ok(
                target,
                f"n={n}: parity-{parity} half splits into the stated classes",
                found == expected and report.complete,
                classes=sorted(g.label for g in report.summands),
            )
        )
        out.append(
            _ok(
                target,
                f"n={n}: all parity-{parity} summands pass the Leonard check",
                all(g.leonard_passed for g in report.summands),
            )
        )
    return out


def _run_thm1_8(cfg: SuiteConfig) -> list[dict]:
    out = []
    lo, hi = cfg.big_d_range
    for D in range(lo, hi + 1):
        checks = verify_hypercube(D)
        relevant = [c for c in checks if "pullback" in c.identity or "A2" in c.identity]
        for c in relevant:
            out.append(_check_dict("thm1_8", c))
        closure_graph = dec.cube_operator_closure(D)
        closure_pull = dec.cube_pullback_closure(D)
        rep, ops = build_hypercube(D)
        pull = sharp_pullback(rep)
        mutual = all(
            closure_graph.contains(m) for m in (pull.A, pull.B, pull.C)
        ) and all(
            closure_pull.contains(m) for m in (ops.A2J, ops.A2Jbar, ops.A2star)
        )
        out.append(
            _ok(
                "thm1_8",
                f"D={D}: generated algebras coincide (dims {closure_graph.dim} = {closure_pull.dim})",
                closure_graph.dim == closure_pull.dim and mutual,
            )
        )
    return out


def _run_thm8_4(cfg: SuiteConfig) -> list[dict]:
    out = []
    lo, hi = cfg.big_d_range
    for D in range(lo, hi + 1):
        profile = dec.cube_semisimple_profile(D)
        formula = dec.block_dimension_formula(D)
        out.append(
            _ok(
                "thm8_4",
                f"D={D}: closure dimension {profile.dim} equals the binomial formula {formula}",
                profile.dim == formula,
            )
        )
        out.append(
            _ok(
                "thm8_4",
                f"D={D}: block profile matches the case expression",
                profile.blocks == dec.expected_block_profile(D),
                blocks=[list(b) for b in profile.blocks],
            )
        )
    return out


def _run_thm8_7(cfg: SuiteConfig) -> list[dict]:
    out = []
    lo, hi = cfg.big_d_range
    for D in range(lo, hi + 1):
        cmp = dec.compare_te_re(D)
        expected_equal = D % 2 == 1
        out.append(
            _ok(
                "thm8_7",
                f"D={D}: restricted algebra dims ({cmp.dim_te}, {cmp.dim_re}), equal iff D odd",
                cmp.contained
                and cmp.equal == expected_equal
                and (cmp.dim_re <= cmp.dim_te),
                dim_Te=cmp.dim_te,
                dim_Re=cmp.dim_re,
            )
        )
        if cmp.te_classes_ok is not None:
            out.append(
                _ok(
                    "thm8_7",
                    f"D={D}: even-restriction class catalog",
                    cmp.te_classes_ok,
                )
            )
    return out


_TARGET_RUNNERS = {
    "thm1_4": _run_thm1_4,
    "thm1_5": _run_thm1_5,
    "thm1_6_membership": _run_thm1_6,
    "thm3_3": _run_thm3_3,
    "sec3_identities": _run_sec3,
    "prop2_4": _run_prop2_4,
    "lemma6_suite": _run_lemma6,
    "thm6_9": _run_thm6_9,
    "thm7_2": lambda cfg: _run_thm7(cfg, 0, "thm7_2"),
    "thm7_5": lambda cfg: _run_thm7(cfg, 1, "thm7_5"),
    "thm1_8": _run_thm1_8,
    "thm8_4": _run_thm8_4,
    "thm8_7": _run_thm8_7,
}


def run_suite(cfg: SuiteConfig) -> tuple[int, dict]:
    """Execute the selected targets; exit status 0 iff every check passes."""
    for target in cfg.targets:
        if target not in _TARGET_RUNNERS:
            raise ConfigError(f"unknown target {target!r}")
    results: dict[str, list[dict]] = {}
    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            futures = {
                target: pool.submit(_TARGET_RUNNERS[target], cfg)
                for target in cfg.targets
            }
            for target, future in futures.items():
                results[target] = future.result()
    else:
        for target in cfg.targets:
            results[target] = _TARGET_RUNNERS[target](cfg)
    checks: list[dict] = []
    for target in sorted(results):
        checks.extend(results[target])
    ok = all(c["pass"] for c in checks)
    report = {
        "schema": REPORT_SCHEMA,
        "config": cfg.as_dict(),
        "checks": checks,
        "ok": ok,
    }
    if cfg.export_matrices:
        _export_cube_matrices(cfg, Path(cfg.export_matrices))
    return (0 if ok else 1), report


def _export_cube_matrices(cfg: SuiteConfig, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    lo, hi = cfg.big_d_range
    for D in range(lo, hi + 1):
        rep, ops = build_hypercube(D)
        for name, matrix in (
            ("E", rep.E),
            ("F", rep.F),
            ("H", rep.H),
            ("A2J", ops.A2J),
            ("A2Jbar", ops.A2Jbar),
            ("A2star", ops.A2star),
        ):
            (directory / f"cube_D{D}_{name}.txt").write_text(matrix.to_text())


# -- JSON rendering helpers ------------------------------------------------------


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _leonard_json(report: leonard.LeonardReport) -> dict:
    conditions = []
    for c in report.conditions:
        conditions.append(
            {
                "diagonal_index": c.diagonal_index,
                "diagonalizable": c.diagonalizable,
                "simple_spectrum": c.simple_spectrum,
                "ordering": list(c.ordering) if c.ordering is not None else None,
                "eigenvalues": [v.token() for v in c.eigenvalues]
                if c.eigenvalues is not None
                else None,
                "pass": c.passed,
                "reason": c.reason,
            }
        )
    return {"dim": report.dim, "conditions": conditions, "pass": report.passed}


def _decomposition_json(report: dec.DecompositionReport) -> dict:
    summands = []
    for g in report.summands:
        entry = {
            "label": g.label,
            "kind": g.kind,
            "dim": g.dim,
            "multiplicity": g.multiplicity,
        }
        if g.iso is not None:
            entry["iso_class"] = {
                "d": g.iso.d,
                "sA": g.iso.sA.token(),
                "sB": g.iso.sB.token(),
                "sC": g.iso.sC.token(),
            }
        if g.leonard_passed is not None:
            entry["leonard"] = g.leonard_passed
        summands.append(entry)
    return {
        "schema": REPORT_SCHEMA,
        "ambient_dim": report.ambient_dim,
        "summands": summands,
        "complete": report.complete,
    }


# -- argument parsing --------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ConfigError(f"empty range {text!r}")
    return lo, hi


def _parse_scalar(text: str) -> GaussianRational:
    try:
        return GaussianRational.parse(text)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="racahlab",
        description="Exact verification toolkit for the Racah-to-enveloping-algebra "
        "homomorphism, its modules, and the cube operator algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="symbolic identity suites")
    verify.add_argument(
        "suite",
        choices=["sharp", "kernel", "d3", "even-identities"],
    )

    racah_cmd = sub.add_parser("racah", help="operator quadruple checks")
    racah_sub = racah_cmd.add_subparsers(dest="racah_command", required=True)
    racah_verify = racah_sub.add_parser("verify")
    racah_verify.add_argument("--rep", required=True)

    rd_cmd = sub.add_parser("rd", help="bidiagonal module family")
    rd_sub = rd_cmd.add_subparsers(dest="rd_command", required=True)
    for name in ("build", "analyze"):
        p = rd_sub.add_parser(name)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--c", required=True)
        p.add_argument("--d", required=True, type=int)
        if name == "build":
            p.add_argument("--out")

    leonard_cmd = sub.add_parser("leonard", help="Leonard triple checks")
    leonard_sub = leonard_cmd.add_subparsers(dest="leonard_command", required=True)
    leonard_check_cmd = leonard_sub.add_parser("check")
    leonard_check_cmd.add_argument("--rep", required=True)

    cube = sub.add_parser("hypercube", help="cube module and graph operators")
    cube_sub = cube.add_subparsers(dest="cube_command", required=True)
    cube_build = cube_sub.add_parser("build")
    cube_build.add_argument("--D", required=True, type=int)
    cube_build.add_argument("--export")
    cube_verify = cube_sub.add_parser("verify")
    cube_verify.add_argument("--D", required=True, type=int)

    dec_cmd = sub.add_parser("decompose", help="module decompositions")
    dec_cmd.add_argument(
        "--target", required=True, choices=["hypercube", "Ln", "halved"]
    )
    dec_cmd.add_argument("--D", type=int)
    dec_cmd.add_argument("--n", type=int)

    tere = sub.add_parser("compare-te-re", help="even-restriction algebra dims")
    tere.add_argument("--D", required=True, type=int)

    suite = sub.add_parser("suite", help="reproducible verification suites")
    suite.add_argument("--targets", default=",".join(SUITE_TARGETS))
    suite.add_argument("--D", default="2..4")
    suite.add_argument("--d", default="0..3")
    suite.add_argument("--samples", type=int, default=10)
    suite.add_argument("--seed", type=int, default=1)
    suite.add_argument("--out")
    suite.add_argument("--workers", type=int, default=None)
    suite.add_argument("--export-matrices")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except RacahLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "verify":
        runner = {
            "sharp": pbw.verify_sharp_relations,
            "kernel": pbw.verify_kernel_generators,
            "d3": lambda: pbw.verify_d3_presentation() + pbw.verify_equivariance(),
            "even-identities": pbw.verify_even_identities,
        }[args.suite]
        checks = runner()
        payload = [
            {
                "identity": c.identity,
                "pass": c.passed,
                "residual_term_count": c.residual_term_count,
            }
            for c in checks
        ]
        _emit(_dump(payload), None)
        return 0 if all(c.passed for c in checks) else 1

    if args.command == "racah":
        rep = load_rep(args.rep)
        report = verify_presentation(rep)
        payload = [
            {
                "identity": c.identity,
                "pass": c.passed,
                "residual_term_count": c.residual_term_count,
            }
            for c in report.checks
        ]
        _emit(_dump(payload), None)
        return 0 if report.ok else 1

    if args.command == "rd":
        params = rd.RdParams(
            _parse_scalar(args.a), _parse_scalar(args.b), _parse_scalar(args.c), args.d
        )
        if args.rd_command == "build":
            rep = rd.construct(params)
            _emit(rep_to_text(rep), args.out)
            return 0
        witness = rd.is_irreducible(params)
        payload = {
            "schema": REPORT_SCHEMA,
            "params": params.label(),
            "irreducible": bool(witness),
            "iso_class": None,
            "min_poly_degrees": None,
            "leonard": None,
        }
        if witness:
            iso = rd.iso_class_of(params)
            payload["iso_class"] = {
                "d": iso.d,
                "sA": iso.sA.token(),
                "sB": iso.sB.token(),
                "sC": iso.sC.token(),
                "label": iso.label(),
            }
            payload["min_poly_degrees"] = [p.degree for p in rd.min_polys(params)]
            payload["leonard"] = rd.leonard_criterion(params)
        _emit(_dump(payload), None)
        return 0

    if args.command == "leonard":
        rep = load_rep(args.rep)
        report = leonard.check(rep.A, rep.B, rep.C)
        _emit(_dump(_leonard_json(report)), None)
        return 0 if report.passed else 1

    if args.command == "hypercube":
        if args.cube_command == "build":
            rep, ops = build_hypercube(args.D)
            if args.export:
                directory = Path(args.export)
                directory.mkdir(parents=True, exist_ok=True)
                for name, matrix in (
                    ("E", rep.E),
                    ("F", rep.F),
                    ("H", rep.H),
                    ("A2J", ops.A2J),
                    ("A2Jbar", ops.A2Jbar),
                    ("A2star", ops.A2star),
                ):
                    (directory / f"cube_D{args.D}_{name}.txt").write_text(
                        matrix.to_text()
                    )
                print(f"exported 6 operators to {args.export}")
            else:
                print(f"built cube D={args.D}: dimension {rep.dim}")
            return 0
        checks = verify_hypercube(args.D)
        payload = [
            {
                "identity": c.identity,
                "pass": c.passed,
                "residual_term_count": c.residual_term_count,
            }
            for c in checks
        ]
        _emit(_dump(payload), None)
        return 0 if all(c.passed for c in checks) else 1

    if args.command == "decompose":
        if args.target == "hypercube":
            if args.D is None:
                raise ConfigError("--D is required for the hypercube target")
            report = dec.cube_decompose(args.D)
        elif args.target == "halved":
            if args.D is None:
                raise ConfigError("--D is required for the halved target")
            report = dec.halved_decompose(args.D)
        else:
            if args.n is None:
                raise ConfigError("--n is required for the Ln target")
            report = dec.re_decompose(build_Ln(args.n))
        _emit(_dump(_decomposition_json(report)), None)
        return 0 if report.complete else 1

    if args.command == "compare-te-re":
        cmp = dec.compare_te_re(args.D)
        payload = {
            "schema": REPORT_SCHEMA,
            "dim_Te": cmp.dim_te,
            "dim_Re": cmp.dim_re,
            "equal": cmp.equal,
            "D_parity": "odd" if cmp.D % 2 else "even",
        }
        _emit(_dump(payload), None)
        return 0

    if args.command == "suite":
        targets = tuple(t.strip() for t in args.targets.split(",") if t.strip())
        workers = args.workers
        if workers is None:
            workers = int(os.environ.get("RACAHLAB_WORKERS", "1"))
        if workers < 1:
            raise ConfigError("workers must be at least 1")
        cfg = SuiteConfig(
            targets=targets,
            d_range=_parse_range(args.d),
            big_d_range=_parse_range(args.D),
            samples=args.samples,
            seed=args.seed,
            workers=workers,
            out=args.out,
            export_matrices=args.export_matrices,
        )
        status, report = run_suite(cfg)
        _emit(_dump(report), cfg.out)
        return status

    raise ConfigError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
