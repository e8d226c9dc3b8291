"""Generic Leonard-triple verification over the Gaussian rationals.

Each of the three conditions diagonalizes one operator (all eigenspaces must
be one-dimensional), then looks for an ordering of the eigenlines along which
the other two operators are irreducible tridiagonal.  The ordering search is
combinatorial: the union of the two off-diagonal support graphs must be a
single Hamiltonian path, which at these sizes is detected by degree counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NonSplitting
from .gaussian import GaussianRational, gr
from .matrix import (
    ExactMatrix,
    eigen_split,
    minimal_polynomial,
    rational_roots,
    solve_columns,
)


@dataclass(frozen=True)
class ConditionCertificate:
    """One diagonalization condition: which operator, ordering, verdict."""

    diagonal_index: int
    diagonalizable: bool
    simple_spectrum: bool
    ordering: tuple[int, ...] | None
    eigenvalues: tuple[GaussianRational, ...] | None
    tridiagonals: tuple[ExactMatrix, ...] | None
    passed: bool
    reason: str | None


@dataclass(frozen=True)
class LeonardReport:
    dim: int
    conditions: tuple[ConditionCertificate, ...]
    passed: bool


@dataclass(frozen=True)
class TridiagonalizationResult:
    ok: bool
    ordering: tuple[int, ...] | None
    matrix: ExactMatrix | None
    reason: str | None


def _distinct_eigenvalues(matrix: ExactMatrix, hints) -> list[GaussianRational]:
    if hints is not None:
        return [gr(h) for h in hints]
    p = minimal_polynomial(matrix)
    search = rational_roots(p)
    if not search.splits:
        raise NonSplitting(
            "minimal polynomial does not split over the Gaussian rationals; "
            "supply eigenvalue hints"
        )
    return list(search.roots)


def _path_order(n: int, edges: set[frozenset[int]]) -> tuple[list[list[int]], str | None]:
    """Order the vertices of a union-of-paths graph; or explain why not."""
    adjacency: dict[int, list[int]] = {v: [] for v in range(n)}
    for edge in edges:
        u, v = tuple(edge)
        adjacency[u].append(v)
        adjacency[v].append(u)
    for v, nbrs in adjacency.items():
        if len(nbrs) > 2:
            return [], f"support graph has a vertex of degree {len(nbrs)}"
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in range(n):
        if start in seen:
            continue
        if len(adjacency[start]) >= 2:
            continue
        # Walk from an endpoint (or isolated vertex).
        chain = [start]
        seen.add(start)
        current = start
        prev = None
        while True:
            nxt = [u for u in adjacency[current] if u != prev]
            if not nxt:
                break
            prev, current = current, nxt[0]
            chain.append(current)
            seen.add(current)
        components.append(chain)
    if len(seen) != n:
        return [], "support graph contains a cycle"
    components.sort(key=lambda ch: ch[0])
    return components, None


def _conjugate_into_eigenbasis(
    diag_op: ExactMatrix, others: Sequence[ExactMatrix], hints
) -> tuple[tuple[GaussianRational, ...], list[ExactMatrix], bool, bool]:
    """Diagonalize one operator; return eigenvalues, transformed others, flags."""
    n = diag_op.rows
    values = _distinct_eigenvalues(diag_op, hints)
    split = eigen_split(diag_op, values)
    simple = all(space.dim == 1 for _v, space in split.pairs)
    if not split.diagonalizable or not simple:
        return tuple(values), [], split.diagonalizable, simple
    columns = []
    ordered_values = []
    for value, space in split.pairs:
        columns.append(list(space.basis[0]))
        ordered_values.append(value)
    basis = ExactMatrix.from_rows(columns).transpose()
    transformed = []
    for m in others:
        sol = solve_columns(basis, m * basis)
        if sol is None:
            raise ArithmeticError("eigenbasis failed to span; this cannot happen")
        transformed.append(sol)
    return tuple(ordered_values), transformed, True, True


def _support_edges(matrices: Sequence[ExactMatrix]) -> set[frozenset[int]]:
    edges: set[frozenset[int]] = set()
    for m in matrices:
        for i in range(m.rows):
            for j in range(m.cols):
                if i != j and m.entry(i, j):
                    edges.add(frozenset((i, j)))
    return edges


def _permute(m: ExactMatrix, order: Sequence[int]) -> ExactMatrix:
    return m.submatrix(order, order)


def _is_irreducible_tridiagonal(m: ExactMatrix) -> bool:
    n = m.rows
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and m.entry(i, j):
                return False
    for k in range(n - 1):
        if not m.entry(k, k + 1) or not m.entry(k + 1, k):
            return False
    return True


def _condition(
    index: int,
    diag_op: ExactMatrix,
    others: Sequence[ExactMatrix],
    hints,
) -> ConditionCertificate:
    n = diag_op.rows
    values, transformed, diagonalizable, simple = _conjugate_into_eigenbasis(
        diag_op, others, hints
    )
    if not diagonalizable or not simple:
        reason = "not diagonalizable" if not diagonalizable else "eigenspace of dimension > 1"
        return ConditionCertificate(
            index, diagonalizable, simple, None, None, None, False, reason
        )
    if n == 1:
        return ConditionCertificate(
            index, True, True, (0,), values, tuple(transformed), True, None
        )
    edges = _support_edges(transformed)
    components, problem = _path_order(n, edges)
    if problem is not None:
        return ConditionCertificate(
            index, True, True, None, values, None, False, problem
        )
    if len(components) != 1:
        return ConditionCertificate(
            index,
            True,
            True,
            None,
            values,
            None,
            False,
            "support graph is disconnected, so no common irreducible ordering exists",
        )
    order = components[0]
    permuted = [_permute(m, order) for m in transformed]
    for m in permuted:
        if not _is_irreducible_tridiagonal(m):
            return ConditionCertificate(
                index,
                True,
                True,
                tuple(order),
                tuple(values[k] for k in order),
                tuple(permuted),
                False,
                "an operator is tridiagonal but not irreducible in the path ordering",
            )
    return ConditionCertificate(
        index,
        True,
        True,
        tuple(order),
        tuple(values[k] for k in order),
        tuple(permuted),
        True,
        None,
    )


def _normalize_hints(hints, count: int):
    if hints is None:
        return [None] * count
    if len(hints) != count:
        raise ValueError(f"expected {count} hint lists")
    return [list(h) if h is not None else None for h in hints]


def check(
    first: ExactMatrix,
    second: ExactMatrix,
    third: ExactMatrix,
    hints: Sequence[Sequence] | None = None,
) -> LeonardReport:
    """Certify or refute the three diagonalization conditions for a triple."""
    ops = (first, second, third)
    n = first.rows
    for m in ops:
        if not m.is_square or m.rows != n:
            raise DimensionMismatch("operators must be square and equally sized")
    hint_lists = _normalize_hints(hints, 3)
    conditions = []
    for k in range(3):
        others = [ops[(k + 1) % 3], ops[(k + 2) % 3]]
        conditions.append(_condition(k, ops[k], others, hint_lists[k]))
    return LeonardReport(n, tuple(conditions), all(c.passed for c in conditions))


def check_pair(
    first: ExactMatrix,
    second: ExactMatrix,
    hints: Sequence[Sequence] | None = None,
) -> LeonardReport:
    """Diagnostic mode: the two diagonalization conditions for a pair."""
    n = first.rows
    for m in (first, second):
        if not m.is_square or m.rows != n:
            raise DimensionMismatch("operators must be square and equally sized")
    hint_lists = _normalize_hints(hints, 2)
    conditions = (
        _condition(0, first, [second], hint_lists[0]),
        _condition(1, second, [first], hint_lists[1]),
    )
    return LeonardReport(n, conditions, all(c.passed for c in conditions))


def tridiagonalize(
    diag_op: ExactMatrix,
    target: ExactMatrix,
    hints: Sequence | None = None,
) -> TridiagonalizationResult:
    """Order the eigenbasis of diag_op so that target becomes tridiagonal.

    Unlike the full check, component chains may be concatenated: the result
    need not be irreducible tridiagonal.  Fails with a certificate when the
    support graph is not a union of paths.
    """
    n = diag_op.rows
    values, transformed, diagonalizable, simple = _conjugate_into_eigenbasis(
        diag_op, [target], hints
    )
    if not diagonalizable or not simple:
        reason = "not diagonalizable" if not diagonalizable else "eigenspace of dimension > 1"
        return TridiagonalizationResult(False, None, None, reason)
    if n == 1:
        return TridiagonalizationResult(True, (0,), transformed[0], None)
    edges = _support_edges(transformed)
    components, problem = _path_order(n, edges)
    if problem is not None:
        return TridiagonalizationResult(False, None, None, problem)
    order = [v for chain in components for v in chain]
    return TridiagonalizationResult(
        True, tuple(order), _permute(transformed[0], order), None
    )
