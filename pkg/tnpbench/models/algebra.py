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
"""The JSON interchange format for algebras."""
from __future__ import annotations

from typing import Annotated

import pydantic
from typing_extensions import Self

from tnpbench import errors
from tnpbench.algcore import Algebra, BilinearOp
from tnpbench.exactfield import FieldDescriptor
from tnpbench.models.base import BenchBaseModel
from tnpbench.models.constraints import Dimension, Label, OpName, ScalarStr, UniqueList

Index = Annotated[int, pydantic.Field(ge=0)]
Entry = tuple[Index, Index, Index, ScalarStr]
"""A structure constant ``[i, j, k, "scalar"]`` with 0-based indices."""
Pair = tuple[Index, Index]


class AlgebraFile(BenchBaseModel):
    """An algebra as stored on disk.

    Omitted entries are zero. ``masks`` lists index pairs whose product is
    undefined; only windowed models carry them.
    """

    name: str = ""
    field: FieldDescriptor = FieldDescriptor.rational()
    dim: Dimension
    labels: UniqueList[Label] = []
    ops: dict[OpName, list[Entry]]
    masks: dict[OpName, list[Pair]] = {}
    meta: dict[str, str] = {}

    @pydantic.model_validator(mode="after")
    def _validate_shape(self) -> Self:
        if self.labels and len(self.labels) != self.dim:
            raise ValueError(
                f"{len(self.labels)} labels given for an algebra of dimension {self.dim}"
            )
        for opname, entries in self.ops.items():
            for entry in entries:
                if max(entry[:3]) >= self.dim:
                    raise ValueError(
                        f"{opname} entry {list(entry)} has an index outside 0..{self.dim - 1}"
                    )
        for opname, pairs in self.masks.items():
            if opname not in self.ops:
                raise ValueError(f"mask given for missing operation {opname!r}")
            if any(max(pair) >= self.dim for pair in pairs):
                raise ValueError(f"{opname} mask has an index outside 0..{self.dim - 1}")
        return self

    def to_algebra(self) -> Algebra:
        """Build the in-memory algebra, parsing every scalar in the file's field."""
        field = self.field
        ops = {}
        for opname, entries in self.ops.items():
            try:
                ops[opname] = BilinearOp.from_entries(
                    field,
                    self.dim,
                    ((i, j, k, field.parse(value)) for i, j, k, value in entries),
                )
            except errors.InputError as err:
                raise errors.AlgebraValidationError(
                    f"bad {opname} constant in {self.name or 'algebra file'}: {err}"
                ) from err
        return Algebra(
            field,
            self.dim,
            ops,
            name=self.name,
            labels=tuple(self.labels),
            masks={opname: frozenset(pairs) for opname, pairs in self.masks.items()},
            meta=dict(self.meta),
        )

    @classmethod
    def from_algebra(cls, algebra: Algebra) -> Self:
        """Serialize ``algebra`` with canonical scalar strings and sorted entries."""
        field = algebra.field
        return cls(
            name=algebra.name,
            field=field,
            dim=algebra.dim,
            labels=list(algebra.labels),
            ops={
                opname: [
                    (i, j, k, field.format(value)) for i, j, k, value in op.entries()
                ]
                for opname, op in sorted(algebra.ops.items())
            },
            masks={
                opname: sorted(pairs) for opname, pairs in sorted(algebra.masks.items())
            },
            meta={key: str(value) for key, value in sorted(algebra.meta.items())},
        )
