"""Operator quadruples satisfying the Racah presentation, over exact matrices.

A quadruple (A, B, C, Delta) of equally sized square matrices is checked
against the defining relations: the three commutators equal 2*Delta, and the
three bracket combinations together with A+B+C are central.  Central values
and the three symmetric central elements are evaluated verbatim as matrix
expressions; matrix arithmetic is the oracle here, with no simplification.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import DimensionMismatch
from .gaussian import GaussianRational
from .matrix import ExactMatrix
from .pbw import CheckResult


@dataclass(frozen=True)
class RacahRep:
    """Four same-size operators purporting to satisfy the presentation."""

    dim: int
    A: ExactMatrix
    B: ExactMatrix
    C: ExactMatrix
    Delta: ExactMatrix
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        for name in ("A", "B", "C", "Delta"):
            m = getattr(self, name)
            if not m.is_square or m.rows != self.dim:
                raise DimensionMismatch(
                    f"operator {name} must be {self.dim}x{self.dim}"
                )

    def operators(self) -> dict[str, ExactMatrix]:
        return {"A": self.A, "B": self.B, "C": self.C, "Delta": self.Delta}


@dataclass(frozen=True)
class CentralValues:
    """The four central operators; scalars extracted where applicable."""

    alpha: ExactMatrix
    beta: ExactMatrix
    gamma: ExactMatrix
    delta: ExactMatrix

    def scalars(self) -> dict[str, GaussianRational | None]:
        return {
            "alpha": self.alpha.scalar_value(),
            "beta": self.beta.scalar_value(),
            "gamma": self.gamma.scalar_value(),
            "delta": self.delta.scalar_value(),
        }


@dataclass(frozen=True)
class PresentationReport:
    checks: tuple[CheckResult, ...]
    ok: bool


def _pair_products(rep: RacahRep) -> dict[str, ExactMatrix]:
    """The twelve ordered products needed by the presentation checks."""
    ops = {"A": rep.A, "B": rep.B, "C": rep.C, "D": rep.Delta}
    out = {}
    for x, y in (
        ("A", "B"), ("B", "A"), ("B", "C"), ("C", "B"), ("C", "A"), ("A", "C"),
        ("A", "D"), ("D", "A"), ("B", "D"), ("D", "B"), ("C", "D"), ("D", "C"),
    ):
        out[x + y] = ops[x] * ops[y]
    return out


def _central_from_products(rep: RacahRep, prod: dict[str, ExactMatrix]) -> CentralValues:
    alpha = prod["AD"] - prod["DA"] + prod["AC"] - prod["BA"]
    beta = prod["BD"] - prod["DB"] + prod["BA"] - prod["CB"]
    gamma = prod["CD"] - prod["DC"] + prod["CB"] - prod["AC"]
    delta = rep.A + rep.B + rep.C
    return CentralValues(alpha, beta, gamma, delta)


def presentation_checks(rep: RacahRep) -> list[CheckResult]:
    prod = _pair_products(rep)
    two_delta = rep.Delta * 2
    checks = []
    for label, residual in (
        ("[A,B] = 2*Delta", prod["AB"] - prod["BA"] - two_delta),
        ("[B,C] = 2*Delta", prod["BC"] - prod["CB"] - two_delta),
        ("[C,A] = 2*Delta", prod["CA"] - prod["AC"] - two_delta),
    ):
        checks.append(CheckResult(label, residual.is_zero(), residual.nonzero_count()))
    central = _central_from_products(rep, prod)
    ops = rep.operators()
    for name, matrix in (
        ("alpha", central.alpha),
        ("beta", central.beta),
        ("gamma", central.gamma),
    ):
        if matrix.is_zero():
            for op_name in ops:
                checks.append(CheckResult(f"{name} commutes with {op_name}", True, 0))
            continue
        for op_name, op in ops.items():
            residual = matrix * op - op * matrix
            checks.append(
                CheckResult(
                    f"{name} commutes with {op_name}",
                    residual.is_zero(),
                    residual.nonzero_count(),
                )
            )
    # delta = A + B + C: its commutators are sums of ones already computed.
    comm = {
        "A": (prod["BA"] - prod["AB"]) + (prod["CA"] - prod["AC"]),
        "B": (prod["AB"] - prod["BA"]) + (prod["CB"] - prod["BC"]),
        "C": (prod["AC"] - prod["CA"]) + (prod["BC"] - prod["CB"]),
        "Delta": (prod["AD"] - prod["DA"]) + (prod["BD"] - prod["DB"]) + (prod["CD"] - prod["DC"]),
    }
    for op_name, residual in comm.items():
        checks.append(
            CheckResult(
                f"delta commutes with {op_name}",
                residual.is_zero(),
                residual.nonzero_count(),
            )
        )
    return checks


def verify_presentation(rep: RacahRep) -> PresentationReport:
    """Check the defining relations; exact, no tolerances."""
    checks = presentation_checks(rep)
    return PresentationReport(tuple(checks), all(c.passed for c in checks))


def ensure_verified(rep: RacahRep) -> RacahRep:
    """Return a rep flagged verified, running the presentation check if needed."""
    if rep.verified:
        return rep
    report = verify_presentation(rep)
    if not report.ok:
        failed = [c.identity for c in report.checks if not c.passed]
        raise ValueError(f"presentation relations fail: {failed}")
    return dataclasses.replace(rep, verified=True)


def central_values(rep: RacahRep) -> CentralValues:
    """The four central operators of a verified quadruple."""
    rep = ensure_verified(rep)
    return _central_from_products(rep, _pair_products(rep))


def casimirs(
    rep: RacahRep, check_central: bool = True
) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Evaluate the three symmetric central elements verbatim.

    Each is Delta^2 plus the symmetrized triple product, the square of the
    distinguished generator, and the stated central corrections.
    """
    rep = ensure_verified(rep)
    central = central_values(rep)
    a, b, c, d = rep.A, rep.B, rep.C, rep.Delta
    al, be, ga, de = central.alpha, central.beta, central.gamma, central.delta
    d2 = d * d
    half = GaussianRational(Fraction(1, 2))
    omega_a = d2 + (b * a * c + c * a * b) * half + a * a + b * ga - c * be - a * de
    omega_b = d2 + (c * b * a + a * b * c) * half + b * b + c * al - a * ga - b * de
    omega_c = d2 + (a * c * b + b * c * a) * half + c * c + a * be - b * al - c * de
    if check_central:
        for name, omega in (("Omega_A", omega_a), ("Omega_B", omega_b), ("Omega_C", omega_c)):
            for op_name, op in rep.operators().items():
                if not (omega * op - op * omega).is_zero():
                    raise ValueError(f"{name} does not commute with {op_name}")
    return omega_a, omega_b, omega_c


def verify_section6_relations(rep: RacahRep) -> PresentationReport:
    """The six auxiliary quadratic relations, as exact matrix equations."""
    rep = ensure_verified(rep)
    central = central_values(rep)
    a, b, c = rep.A, rep.B, rep.C
    al, be, ga, de = central.alpha, central.beta, central.gamma, central.delta
    checks = []
    for label, x, y, cent, sign in (
        ("A^2B - 2ABA + BA^2 - 2AB - 2BA = 2A^2 - 2A*delta + 2alpha", a, b, al, 1),
        ("B^2C - 2BCB + CB^2 - 2BC - 2CB = 2B^2 - 2B*delta + 2beta", b, c, be, 1),
        ("C^2A - 2CAC + AC^2 - 2CA - 2AC = 2C^2 - 2C*delta + 2gamma", c, a, ga, 1),
        ("A^2C - 2ACA + CA^2 - 2AC - 2CA = 2A^2 - 2A*delta - 2alpha", a, c, al, -1),
        ("B^2A - 2BAB + AB^2 - 2BA - 2AB = 2B^2 - 2B*delta - 2beta", b, a, be, -1),
        ("C^2B - 2CBC + BC^2 - 2CB - 2BC = 2C^2 - 2C*delta - 2gamma", c, b, ga, -1),
    ):
        xy = x * y
        yx = y * x
        lhs = x * xy - (x * y * x) * 2 + yx * x - xy * 2 - yx * 2
        rhs = x * x * 2 - (x * de) * 2 + cent * (2 * sign)
        residual = lhs - rhs
        checks.append(CheckResult(label, residual.is_zero(), residual.nonzero_count()))
    return PresentationReport(tuple(checks), all(ch.passed for ch in checks))


def sigma_twist(rep: RacahRep) -> RacahRep:
    """Twist by the order-2 dihedral symmetry: (A,B,C,Delta) -> (C,B,A,-Delta)."""
    return RacahRep(rep.dim, rep.C, rep.B, rep.A, -rep.Delta)


def tau_twist(rep: RacahRep) -> RacahRep:
    """Twist by the order-3 dihedral symmetry: (A,B,C,Delta) -> (B,C,A,Delta)."""
    return RacahRep(rep.dim, rep.B, rep.C, rep.A, rep.Delta)


# -- file exchange format ----------------------------------------------------

_BLOCK_ORDER = ("A", "B", "C", "Delta")


def rep_to_text(rep: RacahRep) -> str:
    parts = []
    for name in _BLOCK_ORDER:
        parts.append(name)
        parts.append(getattr(rep, name).to_text().rstrip("\n"))
    return "\n".join(parts) + "\n"


def rep_from_text(text: str) -> RacahRep:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    blocks: dict[str, ExactMatrix] = {}
    pos = 0
    while pos < len(lines):
        label = lines[pos]
        if label not in _BLOCK_ORDER:
            raise ValueError(f"unexpected block label {label!r}")
        dims = lines[pos + 1].split()
        rows = int(dims[0])
        body = lines[pos + 1 : pos + 2 + rows]
        blocks[label] = ExactMatrix.from_text("\n".join(body))
        pos += 2 + rows
    missing = [name for name in _BLOCK_ORDER if name not in blocks]
    if missing:
        raise ValueError(f"missing blocks: {missing}")
    dim = blocks["A"].rows
    return RacahRep(dim, blocks["A"], blocks["B"], blocks["C"], blocks["Delta"])


def save_rep(rep: RacahRep, path) -> None:
    Path(path).write_text(rep_to_text(rep))


def load_rep(path) -> RacahRep:
    return rep_from_text(Path(path).read_text())
