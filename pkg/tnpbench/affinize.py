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
"""Finite degree windows of the Laurent affinization ``A (x) k[t, 1/t]``.

The affinization carries ``(x t^m) . (y t^n) = (x . y) t^(m+n)`` and the
bracket ``[x t^m, y t^n] = (m x o y - n y o x) t^(m+n-1)``. It is transposed
Poisson exactly when ``(A, ., o)`` is TNP. A window keeps degrees ``-M..M``
and leaves products that leave it undefined.
"""
from __future__ import annotations

import dataclasses
import itertools
from typing import Any

from craft_cli import emit
from typing_extensions import Self

from tnpbench import errors
from tnpbench.algcore import (
    Algebra,
    AxiomId,
    BilinearOp,
    Component,
    Vector,
    Witness,
    axiom_components,
    check_axiom,
    find_violation,
    residual_at,
)
from tnpbench.models.base import BenchBaseModel

DEGREE_GRID = (-1, 0, 1)
# Wide enough that no grid tuple of any transposed Poisson component leaves it.
_ANALYSIS_WINDOW = 5


@dataclasses.dataclass(frozen=True)
class WindowedAlgebra:
    """The degree window ``-M..M`` of the affinization of ``base``.

    ``e_i t^m`` sits at index ``(m + M) * dim + i``.
    """

    base: Algebra
    window: int
    algebra: Algebra

    @property
    def degrees(self) -> range:
        return range(-self.window, self.window + 1)

    def index(self, i: int, degree: int) -> int:
        return (degree + self.window) * self.base.dim + i

    def degree_of(self, index: int) -> int:
        return index // self.base.dim - self.window

    @classmethod
    def build(cls, base: Algebra, window: int) -> Self:
        """Build the window; see :func:`build_window`."""
        base.require(("dot", "circ"), "an affinization")
        if base.field.is_prime:
            raise errors.AffinizationError(
                f"affinization needs the rational field, got {base.field}"
            )
        if base.is_windowed:
            raise errors.AffinizationError("the base algebra is already windowed")
        if window < 1:
            raise errors.AffinizationError(f"the window needs M >= 1, got {window}")
        n = base.dim
        dim = n * (2 * window + 1)
        field = base.field
        degrees = range(-window, window + 1)

        def at(i: int, degree: int) -> int:
            return (degree + window) * n + i

        dot_entries: list[tuple[int, int, int, Any]] = []
        bracket_entries: list[tuple[int, int, int, Any]] = []
        dot_mask: set[tuple[int, int]] = set()
        bracket_mask: set[tuple[int, int]] = set()
        dot, circ = base.op("dot"), base.op("circ")
        for m, d in itertools.product(degrees, repeat=2):
            pairs = [(at(i, m), at(j, d)) for i in range(n) for j in range(n)]
            if abs(m + d) > window:
                dot_mask.update(pairs)
            else:
                dot_entries.extend(
                    (at(i, m), at(j, d), at(k, m + d), value)
                    for i, j, k, value in dot.entries()
                )
            if abs(m + d - 1) > window:
                bracket_mask.update(pairs)
                continue
            for i, j, k, value in circ.entries():
                # e_i o e_j feeds [e_i t^m, e_j t^d] with m and [e_j t^m, e_i t^d] with -d.
                if m:
                    bracket_entries.append((at(i, m), at(j, d), at(k, m + d - 1), m * value))
                if d:
                    bracket_entries.append((at(j, m), at(i, d), at(k, m + d - 1), -d * value))
        labels = tuple(f"{label}@t^{m}" for m in degrees for label in base.labels)
        algebra = Algebra(
            field,
            dim,
            {
                "dot": BilinearOp.from_entries(field, dim, dot_entries),
                "circ": BilinearOp.from_entries(field, dim, bracket_entries),
            },
            name=f"window({base.name or 'algebra'}, M={window})",
            labels=labels,
            masks={"dot": frozenset(dot_mask), "circ": frozenset(bracket_mask)},
        )
        return cls(base=base, window=window, algebra=algebra)


def build_window(a: Algebra, window: int) -> WindowedAlgebra:
    """The windowed affinization of ``a``.

    :raises AffinizationError: for prime fields, windowed inputs or ``M < 1``.
    :raises MissingOperationError: if dot or circ is missing.
    """
    return WindowedAlgebra.build(a, window)


class AffinizationReport(BenchBaseModel):
    """Whether ``a`` is TNP and whether its window is transposed Poisson."""

    window: int
    tnp_pass: bool
    windowed_tp_pass: bool
    agree: bool
    grid: list[int]
    failure: Witness | None = None
    degrees: dict[str, list[int | None]]


def _grid_tuples(windowed: WindowedAlgebra) -> list[int]:
    return [
        index
        for index in range(windowed.algebra.dim)
        if windowed.degree_of(index) in DEGREE_GRID
    ]


def _sequence_degree(values: list[Vector]) -> int | None:
    """Degree of the quadratic interpolating three samples at -1, 0, 1."""
    low, mid, high = values
    if low - mid - mid + high:
        return 2
    if high - mid:
        return 1
    return 0 if mid else None


def _max_degree(first: int | None, second: int | None) -> int | None:
    if first is None:
        return second
    if second is None:
        return first
    return max(first, second)


def _component_degrees(wide: WindowedAlgebra, component: Component) -> list[int | None]:
    """Highest degree of the residual in each degree variable, None if it vanishes."""
    n = wide.base.dim
    found: list[int | None] = [None] * component.arity
    for base_indices in itertools.product(range(n), repeat=component.arity):
        samples = {
            degrees: residual_at(
                wide.algebra,
                component,
                [wide.index(i, d) for i, d in zip(base_indices, degrees)],
            )
            for degrees in itertools.product(DEGREE_GRID, repeat=component.arity)
        }
        for position in range(component.arity):
            for rest in itertools.product(DEGREE_GRID, repeat=component.arity - 1):
                line = [
                    samples[(*rest[:position], d, *rest[position:])] for d in DEGREE_GRID
                ]
                found[position] = _max_degree(found[position], _sequence_degree(line))
    return found


def affinization_equivalence_report(a: Algebra, window: int) -> AffinizationReport:
    """Compare the TNP check on ``a`` with the transposed Poisson check on its window.

    The windowed check visits basis tuples whose degrees lie in
    :data:`DEGREE_GRID` and skips tuples that reach an undefined product.
    """
    if window < 2:  # noqa: PLR2004
        raise errors.AffinizationError(f"the equivalence check needs M >= 2, got {window}")
    windowed = build_window(a, window)
    tnp = check_axiom(a, AxiomId.TNP)
    allowed = _grid_tuples(windowed)
    components = axiom_components(AxiomId.TRANSPOSED_POISSON)
    witness = find_violation(
        windowed.algebra,
        components,
        skip_undefined=True,
        tuples=lambda arity: itertools.product(allowed, repeat=arity),
    )
    wide = build_window(a, max(window, _ANALYSIS_WINDOW))
    degrees = {
        component.name: _component_degrees(wide, component) for component in components
    }
    emit.debug(
        f"Affinization of {a.name or 'algebra'}: TNP {tnp.passed}, "
        f"window M={window} transposed Poisson {witness is None}"
    )
    return AffinizationReport(
        window=window,
        tnp_pass=tnp.passed,
        windowed_tp_pass=witness is None,
        agree=tnp.passed == (witness is None),
        grid=list(DEGREE_GRID),
        failure=witness if witness is not None else tnp.witness,
        degrees=degrees,
    )

