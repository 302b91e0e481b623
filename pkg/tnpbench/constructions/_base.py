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
"""Result records and shared helpers for the constructions."""
from __future__ import annotations

import dataclasses
from collections.abc import Callable, Mapping

from craft_cli import emit

from tnpbench import errors
from tnpbench.algcore import (
    Algebra,
    AxiomId,
    BilinearOp,
    CheckReport,
    CheckStatus,
    LinearMap,
    Vector,
    Witness,
    check_axiom,
    check_axiom_windowed,
)
from tnpbench.exactfield import Scalar


@dataclasses.dataclass(frozen=True)
class ScalarParameter:
    """A field scalar used as a multiplier."""

    value: Scalar

    def apply(self, algebra: Algebra, vector: Vector) -> Vector:
        return vector.scale(algebra.field.element(self.value))

    def __str__(self) -> str:
        return f"s:{self.value}"


@dataclasses.dataclass(frozen=True)
class VectorParameter:
    """An algebra element used as a multiplier through the dot product."""

    value: Vector

    def apply(self, algebra: Algebra, vector: Vector) -> Vector:
        return algebra.product("dot", self.value, vector)

    def __str__(self) -> str:
        return f"v:{','.join(self.value.to_strings())}"


Parameter = ScalarParameter | VectorParameter


@dataclasses.dataclass(frozen=True)
class ConstructionResult:
    """A built algebra together with the check of what the construction promises."""

    algebra: Algebra
    promise: AxiomId
    report: CheckReport
    provenance: str
    extra: Mapping[str, CheckReport] = dataclasses.field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Whether the promise and every extra report hold."""
        return self.report.passed and all(
            report.status is not CheckStatus.FAIL for report in self.extra.values()
        )


@dataclasses.dataclass(frozen=True)
class KantorResult:
    """The commutative, Novikov and TNP algebras from a Kantor product."""

    star_comm: ConstructionResult
    star_nov: ConstructionResult
    tnp: ConstructionResult

    @property
    def ok(self) -> bool:
        return all(result.ok for result in (self.star_comm, self.star_nov, self.tnp))


@dataclasses.dataclass(frozen=True)
class HalfDerivationResult:
    """A constructed 1/2-derivation of circ and its membership check."""

    phi: LinearMap
    report: CheckReport
    provenance: str

    @property
    def ok(self) -> bool:
        return self.report.passed


def require(construction: str, condition: str, holds: bool) -> None:  # noqa: FBT001
    """Raise HypothesisError naming ``condition`` unless it holds."""
    if not holds:
        raise errors.HypothesisError(construction, condition)
    emit.trace(f"{construction}: {condition} holds")


def require_axiom(construction: str, algebra: Algebra, axiom: AxiomId) -> None:
    require(construction, f"input satisfies {axiom.name}", verify(algebra, axiom).passed)


def verify(algebra: Algebra, axiom: AxiomId) -> CheckReport:
    """Check an axiom, skipping undefined tuples on windowed algebras."""
    if algebra.is_windowed:
        return check_axiom_windowed(algebra, axiom)
    return check_axiom(algebra, axiom)


def finish(
    construction: str,
    algebra: Algebra,
    promise: AxiomId,
    provenance: str,
    extra: Mapping[str, CheckReport] | None = None,
) -> ConstructionResult:
    algebra = dataclasses.replace(algebra, name=provenance).with_meta(
        construction=construction
    )
    report = verify(algebra, promise)
    emit.debug(f"{provenance}: {promise.name} {report.status.value}")
    return ConstructionResult(
        algebra=algebra,
        promise=promise,
        report=report,
        provenance=provenance,
        extra=dict(extra or {}),
    )


def nonzero_report(identifier: str, op: BilinearOp) -> CheckReport:
    """Passes when ``op`` has a non-zero structure constant."""
    if op:
        return CheckReport.passing(identifier)
    return CheckReport.failing(
        identifier, Witness(component=identifier, indices=[], residual=[])
    )


def agreement_report(
    identifier: str,
    dim: int,
    first: Callable[[int, int], Vector],
    second: Callable[[int, int], Vector],
) -> CheckReport:
    """Compare two products on every basis pair; the witness is the first mismatch."""
    for i in range(dim):
        for j in range(dim):
            residual = first(i, j) - second(i, j)
            if residual:
                return CheckReport.failing(
                    identifier,
                    Witness(component=identifier, indices=[i, j], residual=residual.to_strings()),
                )
    return CheckReport.passing(identifier)


def describe(algebra: Algebra) -> str:
    return algebra.name or f"algebra(dim={algebra.dim})"
