# This file is part of tnpbench.
#
# Copyright 2026 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License version 3, as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranties of MERCHANTABILITY,
# SATISFACTORY QUALITY, or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License along
# with this program.  If not, see <http://www.gnu.org/licenses/>.
"""Search for commutative associative products compatible with a Novikov product.

A dot is compatible when ``(A, ., o)`` is TNP. With circ fixed, the TNP
conditions that mix the two products are linear in the dot's structure
constants; associativity is quadratic. The linear stage is solved exactly and
the quadratics are written in coordinates of its solution space.
"""
from __future__ import annotations

import concurrent.futures
import dataclasses
import itertools
from collections.abc import Callable, Iterable, Sequence
from typing import Any

from craft_cli import emit

from tnpbench import errors, util
from tnpbench.algcore import AxiomId, Algebra, BilinearOp, check_axiom
from tnpbench.catalog import catalog_get
from tnpbench.constructions import find_square_annihilator_witness
from tnpbench.exactfield import FieldDescriptor
from tnpbench.linsolve import AnnihilatorKind, Subspace, annihilator, solvability_report
from tnpbench.models.base import BenchBaseModel

DEFAULT_MAX_POINTS = 10_000_000
CLASSIFICATION_ROWS = ("T2", "T3", "N1", "N2", "N3", "N4", "N5", "N6")
SWEEP_VALUES = ("-1", "0", "1", "2")
N6_L = "2"

Quadratic = dict[tuple[int, int], Any]
TensorKey = tuple[tuple[int, int, int, tuple[int, int]], ...]


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclasses.dataclass(frozen=True)
class CompatibleSpace:
    """Symmetric dot tensors passing the linear TNP conditions for a fixed circ.

    Unknown ``c_ij^k`` with ``i <= j`` sits at ``pair_index(i, j) * n + k``.
    ``residuals`` are the associativity quadratics in coordinates ``t`` of
    ``basis``: each maps ``(s, s')`` with ``s <= s'`` to the coefficient of
    ``t_s t_s'``.
    """

    algebra: Algebra
    basis: Subspace
    residuals: list[Quadratic]
    solutions: list[BilinearOp] | None = None

    @property
    def field(self) -> FieldDescriptor:
        return self.algebra.field

    @property
    def n(self) -> int:
        return self.algebra.dim

    @property
    def unknowns(self) -> int:
        return self.basis.ambient

    def pair_index(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return i * self.n - i * (i - 1) // 2 + (j - i)

    def tensor(self, coordinates: Sequence[Any]) -> BilinearOp:
        """The dot whose constants are ``sum_s t_s basis[s]``."""
        values = [self.field.zero] * self.unknowns
        for t, row in zip(coordinates, self.basis.basis):
            if t:
                for index, value in enumerate(row):
                    if value:
                        values[index] += t * value
        return _symmetric_op(self.field, self.n, values)

    def satisfies_residuals(self, coordinates: Sequence[Any]) -> bool:
        return all(
            not sum(
                (value * coordinates[s] * coordinates[r] for (s, r), value in quadratic.items()),
                self.field.zero,
            )
            for quadratic in self.residuals
        )


def _symmetric_op(field: FieldDescriptor, n: int, values: Sequence[Any]) -> BilinearOp:
    entries = []
    for index, (i, j) in enumerate(_pairs(n)):
        for k in range(n):
            value = values[index * n + k]
            if value:
                entries.append((i, j, k, value))
                if i != j:
                    entries.append((j, i, k, value))
    return BilinearOp.from_entries(field, n, entries)


def _novikov_input(a: Algebra, purpose: str) -> Algebra:
    novikov = a.with_ops(dot=None)
    novikov.require(("circ",), purpose)
    if novikov.is_windowed:
        raise errors.WindowedAlgebraError(f"{purpose} needs a total algebra")
    if not check_axiom(novikov, AxiomId.NOVIKOV_LEFT).passed:
        raise errors.HypothesisError(purpose, "circ satisfies NOVIKOV_LEFT")
    return novikov


def compatible_structure_space(a: Algebra) -> CompatibleSpace:
    """Solve the linear stage and express associativity in its coordinates.

    :raises HypothesisError: if circ is not left Novikov.
    """
    novikov = _novikov_input(a, "compatible_structure_space")
    field, n = novikov.field, novikov.dim
    d = novikov.op("circ").dense
    pairs = _pairs(n)
    width = len(pairs) * n
    position = {pair: index for index, pair in enumerate(pairs)}

    def unknown(i: int, j: int, k: int) -> int:
        return position[min(i, j), max(i, j)] * n + k

    rows: list[list[Any]] = []
    for i, j, k, p in itertools.product(range(n), repeat=4):
        # (e_i . e_j) o e_k = (e_i . e_k) o e_j
        row = [field.zero] * width
        for l in range(n):
            row[unknown(i, j, l)] += d[l][k][p]
            row[unknown(i, k, l)] -= d[l][j][p]
        if any(row):
            rows.append(row)
        # 2 e_k . (e_i o e_j) = (e_k . e_i) o e_j + e_i o (e_k . e_j)
        row = [field.zero] * width
        for l in range(n):
            row[unknown(k, l, p)] += 2 * d[i][j][l]
            row[unknown(k, i, l)] -= d[l][j][p]
            row[unknown(k, j, l)] -= d[i][l][p]
        if any(row):
            rows.append(row)
    basis = Subspace.solutions(field, width, rows)
    emit.debug(f"Linear stage: {len(rows)} equations, solution space of dimension {basis.dim}")

    residuals: list[Quadratic] = []
    seen: set[tuple[tuple[tuple[int, int], Any], ...]] = set()
    vectors = basis.basis
    for i, j, k, p in itertools.product(range(n), repeat=4):
        # (e_i . e_j) . e_k - e_i . (e_j . e_k)
        quadratic: Quadratic = {}
        for s, r in itertools.product(range(len(vectors)), repeat=2):
            u, v = vectors[s], vectors[r]
            value = field.zero
            for l in range(n):
                value += u[unknown(i, j, l)] * v[unknown(l, k, p)]
                value -= u[unknown(j, k, l)] * v[unknown(i, l, p)]
            if value:
                key = (min(s, r), max(s, r))
                quadratic[key] = quadratic.get(key, field.zero) + value
        quadratic = {key: value for key, value in quadratic.items() if value}
        signature = tuple(sorted(quadratic.items(), key=lambda item: item[0]))
        if quadratic and signature not in seen:
            seen.add(signature)
            residuals.append(quadratic)
    return CompatibleSpace(algebra=novikov, basis=basis, residuals=residuals)


def tensor_key(op: BilinearOp) -> TensorKey:
    """A deterministic sort key for a tensor."""
    return tuple((i, j, k, op.field.sort_key(value)) for i, j, k, value in op.entries())


def _point(field: FieldDescriptor, dim: int, index: int) -> list[Any]:
    """The ``index``-th element of ``GF(p)^dim`` in lexicographic order."""
    p = field.characteristic
    digits = []
    for _ in range(dim):
        index, digit = divmod(index, p)
        digits.append(field.element(digit))
    return digits[::-1]


def _check_enumerable(field: FieldDescriptor, size: int, max_points: int, what: str) -> None:
    if not field.is_prime:
        raise errors.InputError(
            f"{what} needs a prime field, got {field}",
            resolution="Convert the algebra to GF(p) or use the rational certificate.",
        )
    if size > max_points:
        raise errors.EnumerationBoundError(what, size, max_points)


def _map_chunks(
    count: int, jobs: int, work: Callable[[range], list[BilinearOp]]
) -> list[BilinearOp]:
    workers = util.get_worker_count(jobs)
    chunk = max(1, -(-count // workers))
    ranges = [range(start, min(start + chunk, count)) for start in range(0, count, chunk)]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        return [item for items in executor.map(work, ranges) for item in items]


def enumerate_compatible(
    a: Algebra, max_points: int = DEFAULT_MAX_POINTS, jobs: int = 1
) -> CompatibleSpace:
    """All compatible dots over GF(p), sorted by :func:`tensor_key`.

    :raises EnumerationBoundError: if the linear stage has more than ``max_points`` points.
    :raises SelfCheckError: if an enumerated dot fails the TNP check.
    """
    space = compatible_structure_space(a)
    field, dim = space.field, space.basis.dim
    count = field.characteristic**dim if field.is_prime else 0
    _check_enumerable(field, count, max_points, f"enumeration of {field}^{dim}")
    emit.debug(f"Enumerating {count} points against {len(space.residuals)} residuals")

    def scan(indices: range) -> list[BilinearOp]:
        found = []
        for index in indices:
            coordinates = _point(field, dim, index)
            if space.satisfies_residuals(coordinates):
                found.append(space.tensor(coordinates))
        return found

    solutions = sorted(_map_chunks(count, jobs, scan), key=tensor_key)
    for dot in solutions:
        report = check_axiom(space.algebra.with_ops(dot=dot), AxiomId.TNP)
        if not report.passed:
            raise errors.SelfCheckError(
                "an enumerated dot fails the TNP check",
                details=report.model_dump_json(),
            )
    return dataclasses.replace(space, solutions=solutions)


def brute_force_compatible(
    a: Algebra, max_points: int = DEFAULT_MAX_POINTS, jobs: int = 1
) -> list[BilinearOp]:
    """Every symmetric tensor making ``(A, ., o)`` TNP, by exhaustive checking."""
    novikov = _novikov_input(a, "brute_force_compatible")
    field, n = novikov.field, novikov.dim
    width = len(_pairs(n)) * n
    count = field.characteristic**width if field.is_prime else 0
    _check_enumerable(field, count, max_points, f"brute force over {field}^{width}")

    def scan(indices: range) -> list[BilinearOp]:
        found = []
        for index in indices:
            dot = _symmetric_op(field, n, _point(field, width, index))
            if check_axiom(novikov.with_ops(dot=dot), AxiomId.TNP).passed:
                found.append(dot)
        return found

    return sorted(_map_chunks(count, jobs, scan), key=tensor_key)


class ZeroCertificate(BenchBaseModel):
    """Whether the zero dot is the only compatible one.

    ``only_zero`` is None when neither argument applies.
    """

    only_zero: bool | None
    linear_dim: int
    forced: list[int]
    reason: str


def rational_zero_certificate(space: CompatibleSpace) -> ZeroCertificate:
    """Decide, where possible, whether the zero tensor is the only solution.

    Zero is forced when the linear stage is trivial, or when repeatedly
    reading off residuals of the form ``r t_s^2`` forces every coordinate to
    vanish. A non-trivial linear stage with no residuals has non-zero solutions.
    """
    dim = space.basis.dim
    if dim == 0:
        return ZeroCertificate(
            only_zero=True, linear_dim=0, forced=[], reason="the linear stage is zero"
        )
    if not space.residuals:
        return ZeroCertificate(
            only_zero=False,
            linear_dim=dim,
            forced=[],
            reason="associativity holds on the whole linear stage",
        )
    forced: set[int] = set()
    while True:
        newly = set()
        for quadratic in space.residuals:
            live = {
                key: value
                for key, value in quadratic.items()
                if key[0] not in forced and key[1] not in forced
            }
            if len(live) == 1:
                (s, r), _ = next(iter(live.items()))
                if s == r:
                    newly.add(s)
        if not newly:
            break
        forced |= newly
    if len(forced) == dim:
        return ZeroCertificate(
            only_zero=True,
            linear_dim=dim,
            forced=sorted(forced),
            reason="pure square residuals force every coordinate to zero",
        )
    return ZeroCertificate(
        only_zero=None,
        linear_dim=dim,
        forced=sorted(forced),
        reason="the residuals do not force zero through pure squares",
    )


class SquareAnnihilatorSearch(BenchBaseModel):
    """Circ tensors meeting the hypotheses of the square-annihilator dot.

    ``candidates`` counts the solvable left-Novikov products with zero
    annihilator; ``witnesses`` lists the entries of those that also admit
    ``w`` in ``Ann(A o A)`` outside ``Ann_L(A)``.
    """

    field: str
    dim: int
    scanned: int
    candidates: int
    witnesses: list[list[str]]


def _zero_annihilator_solvable(algebra: Algebra) -> bool:
    return (
        check_axiom(algebra, AxiomId.NOVIKOV_LEFT).passed
        and annihilator(algebra, "circ", AnnihilatorKind.TWO_SIDED).is_zero
        and solvability_report(algebra, "circ").solvable
    )


def square_annihilator_search(
    field: FieldDescriptor,
    dim: int,
    max_points: int = DEFAULT_MAX_POINTS,
    jobs: int = 1,
) -> SquareAnnihilatorSearch:
    """Scan every circ tensor of ``GF(p)^(dim^3)`` for a square-annihilator witness.

    :raises InputError: if the field is not prime.
    :raises EnumerationBoundError: if there are more than ``max_points`` tensors.
    """
    width = dim**3
    count = field.characteristic**width if field.is_prime else 0
    _check_enumerable(field, count, max_points, f"circ tensors over {field}^{width}")
    triples = list(itertools.product(range(dim), repeat=3))

    def scan(indices: range) -> list[BilinearOp]:
        found = []
        for index in indices:
            values = _point(field, width, index)
            circ = BilinearOp.from_entries(
                field, dim, [(*triple, v) for triple, v in zip(triples, values) if v]
            )
            if _zero_annihilator_solvable(Algebra(field, dim, {"circ": circ})):
                found.append(circ)
        return found

    candidates = sorted(_map_chunks(count, jobs, scan), key=tensor_key)
    witnesses: list[list[str]] = []
    for circ in candidates:
        if find_square_annihilator_witness(Algebra(field, dim, {"circ": circ})) is not None:
            witnesses.append(
                [f"{i},{j},{k}:{field.format(v)}" for i, j, k, v in circ.entries()]
            )
    emit.debug(
        f"Scanned {count} circ tensors: {len(candidates)} candidates, "
        f"{len(witnesses)} witnesses"
    )
    return SquareAnnihilatorSearch(
        field=str(field),
        dim=dim,
        scanned=count,
        candidates=len(candidates),
        witnesses=witnesses,
    )


class FieldRowResult(BenchBaseModel):
    """Enumerated compatible dots against the tabulated family over one field."""

    field: str
    enumerated: int
    family: int
    match: bool


class RowResult(BenchBaseModel):
    """Checks of one classification row."""

    row: str
    sweep_pass: bool
    sweep_points: int
    fields: list[FieldRowResult]

    @property
    def passed(self) -> bool:
        return self.sweep_pass and all(result.match for result in self.fields)


class ClassificationReport(BenchBaseModel):
    """Reproduction of the two-dimensional compatibility table."""

    rows: list[RowResult]
    n6_rejects_l1: bool
    passed: bool


def _row_params(row: str, values: Iterable[str]) -> list[dict[str, str]]:
    slots = {"T2": ("m", "n"), "N1": ("n", "m"), "N2": ("n", "m"), "N3": ("n", "m")}
    values = list(values)
    names = slots.get(row, ())
    combos = [dict(zip(names, combo)) for combo in itertools.product(values, repeat=len(names))]
    if row == "N6":
        return [{"l": value} for value in values if value not in ("0", "1")]
    return combos


def _field_values(field: FieldDescriptor) -> list[str]:
    return [str(value) for value in range(field.characteristic)]


def _row_result(row: str, fields: Sequence[FieldDescriptor], jobs: int) -> RowResult:
    rational = FieldDescriptor.rational()
    sweep = _row_params(row, SWEEP_VALUES)
    sweep_pass = all(
        check_axiom(catalog_get(f"{row}-tnp", params, rational), AxiomId.TNP).passed
        for params in sweep
    )
    results = []
    for field in fields:
        if row == "N6":
            family_params = [{"l": N6_L}]
            circ_params = {"l": N6_L}
        else:
            family_params = _row_params(row, _field_values(field))
            circ_params = {}
        family = {
            tensor_key(catalog_get(f"{row}-tnp", params, field).op("dot"))
            for params in family_params
        }
        enumerated = enumerate_compatible(catalog_get(row, circ_params, field), jobs=jobs)
        found = {tensor_key(dot) for dot in enumerated.solutions or []}
        results.append(
            FieldRowResult(
                field=str(field),
                enumerated=len(found),
                family=len(family),
                match=found == family,
            )
        )
        emit.debug(f"{row} over {field}: {len(found)} enumerated, {len(family)} tabulated")
    return RowResult(row=row, sweep_pass=sweep_pass, sweep_points=len(sweep), fields=results)


def verify_classification(
    fields: Sequence[FieldDescriptor] | None = None, jobs: int = 1
) -> ClassificationReport:
    """Check every row's dot family over QQ and its completeness over prime fields."""
    if fields is None:
        fields = [FieldDescriptor.prime(3), FieldDescriptor.prime(5)]
    rows = [_row_result(row, fields, jobs) for row in CLASSIFICATION_ROWS]
    try:
        catalog_get("N6", {"l": "1"})
    except errors.CatalogParameterError:
        rejects = True
    else:
        rejects = False
    return ClassificationReport(
        rows=rows,
        n6_rejects_l1=rejects,
        passed=rejects and all(row.passed for row in rows),
    )
