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
"""Report models for axiom and identity checks."""
from __future__ import annotations

import enum

import pydantic
from typing_extensions import Self

from tnpbench.models.base import BenchBaseModel


class CheckStatus(str, enum.Enum):
    """Outcome of a single check."""

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class Witness(BenchBaseModel):
    """The first failing component of a check and where it failed."""

    component: str
    indices: list[int]
    residual: list[str]


class CheckReport(BenchBaseModel):
    """Outcome of an axiom, identity or membership check.

    A report carries a witness exactly when it failed.
    """

    identifier: str
    status: CheckStatus
    witness: Witness | None = None
    note: str | None = None

    @pydantic.model_validator(mode="after")
    def _witness_iff_failed(self) -> Self:
        if (self.status is CheckStatus.FAIL) != (self.witness is not None):
            raise ValueError("a check report has a witness exactly when it failed")
        if self.status is CheckStatus.NOT_APPLICABLE and not self.note:
            raise ValueError("a not-applicable report needs a note")
        return self

    @pydantic.computed_field(alias="pass")  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Whether the check ran and passed."""
        return self.status is CheckStatus.PASS

    @property
    def ok(self) -> bool:
        """Whether the check did not fail (passed or was not applicable)."""
        return self.status is not CheckStatus.FAIL

    @classmethod
    def passing(cls, identifier: str, note: str | None = None) -> Self:
        return cls(identifier=identifier, status=CheckStatus.PASS, note=note)

    @classmethod
    def failing(
        cls, identifier: str, witness: Witness, note: str | None = None
    ) -> Self:
        return cls(
            identifier=identifier, status=CheckStatus.FAIL, witness=witness, note=note
        )

    @classmethod
    def not_applicable(cls, identifier: str, note: str) -> Self:
        return cls(identifier=identifier, status=CheckStatus.NOT_APPLICABLE, note=note)

    @classmethod
    def from_witness(
        cls, identifier: str, witness: Witness | None, note: str | None = None
    ) -> Self:
        """Pass when ``witness`` is None, fail with it otherwise."""
        if witness is None:
            return cls.passing(identifier, note)
        return cls.failing(identifier, witness, note)


class NPEquivalence(BenchBaseModel):
    """Four conditions that coincide on every TNP algebra.

    ``unit`` is a dot-unit in coordinates, when one exists.
    """

    np_axioms: bool
    circ_symmetric_on_products: bool
    dot_multiplications_in_circ_centroid: bool
    circ_multiplications_in_dot_centroid: bool
    unit: list[str] | None = None
    circ_commutative: bool

    @property
    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.np_axioms,
            self.circ_symmetric_on_products,
            self.dot_multiplications_in_circ_centroid,
            self.circ_multiplications_in_dot_centroid,
        )

    @property
    def consistent(self) -> bool:
        """Whether the four flags agree."""
        return len(set(self.flags)) == 1
