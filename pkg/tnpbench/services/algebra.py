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
"""Service for reading algebras and the values commands take."""
from __future__ import annotations

import pathlib
import re
from typing import Any

from craft_cli import emit

from tnpbench import errors, util
from tnpbench.algcore import Algebra, LinearMap, Vector
from tnpbench.catalog import catalog_get
from tnpbench.constructions import Parameter, ScalarParameter, VectorParameter
from tnpbench.exactfield import FieldDescriptor
from tnpbench.linsolve import Subspace
from tnpbench.models.algebra import AlgebraFile
from tnpbench.services import base

_CATALOG_REF = re.compile(
    r"^catalog:(?P<name>[^()@]+)(?:\((?P<params>[^()]*)\))?(?:@(?P<field>.+))?$"
)
_FIELD = re.compile(r"^(?:QQ|Q|rational|GF\((?P<gf>\d+)\)|(?P<bare>\d+))$")
_BASIS_INDEX = re.compile(r"^e(?P<index>\d+)$")


class AlgebraService(base.AppService):
    """Load algebras and parse vector, matrix and field arguments.

    Every loaded algebra is remembered in its serialized form so the report
    digest covers exactly what a command read.
    """

    def setup(self) -> None:
        super().setup()
        self._inputs: list[dict[str, Any]] = []

    @property
    def inputs(self) -> list[dict[str, Any]]:
        """Serialized forms of every algebra loaded so far, in load order."""
        return list(self._inputs)

    def load(self, source: str) -> Algebra:
        """Load an algebra file, or a catalog entry written ``catalog:Name(k=v)@field``.

        :raises AlgebraFileError: if the file is missing or does not parse.
        :raises AlgebraValidationError: if it does not follow the algebra format.
        """
        if match := _CATALOG_REF.match(source):
            params = self.parse_params(match["params"] or "")
            field = self.parse_field(match["field"]) if match["field"] else None
            algebra = catalog_get(match["name"], params, field)
            document = AlgebraFile.from_algebra(algebra)
        else:
            path = pathlib.Path(source)
            if not path.is_file():
                raise errors.AlgebraFileError(
                    f"algebra file {source!r} not found",
                    resolution="Check the path of the input file.",
                )
            document = AlgebraFile.from_file(path)
            algebra = document.to_algebra()
        emit.debug(f"Loaded {algebra.name or source} over {algebra.field} (dim {algebra.dim})")
        self._inputs.append(document.marshal())
        return algebra

    @staticmethod
    def parse_field(text: str) -> FieldDescriptor:
        """``QQ`` (or ``Q``, ``rational``) or ``GF(p)`` (or a bare ``p``)."""
        match = _FIELD.match(text.strip())
        if match is None:
            raise errors.ArgumentValueError(
                f"cannot parse field {text!r}",
                resolution="Use QQ for the rationals or GF(p) for an odd prime p.",
            )
        modulus = match["gf"] or match["bare"]
        if modulus is None:
            return FieldDescriptor.rational()
        try:
            return FieldDescriptor.prime(int(modulus))
        except ValueError as err:
            raise errors.ArgumentValueError(
                f"no field GF({modulus})", details=str(err)
            ) from None

    @staticmethod
    def parse_params(text: str) -> dict[str, str]:
        """``k=v,k2=v2`` catalog parameters."""
        try:
            return util.parse_assignments(text)
        except ValueError as err:
            raise errors.ArgumentValueError(f"bad parameter list {text!r}: {err}") from None

    @staticmethod
    def parse_scalar(algebra: Algebra, text: str) -> Any:  # noqa: ANN401
        return algebra.field.parse(text.strip())

    def parse_vector(self, algebra: Algebra, text: str) -> Vector:
        """A basis label, ``e<i>`` (1-based) or explicit coordinates ``v:a,b,c``."""
        text = text.strip()
        if text.startswith("v:"):
            values = [self.parse_scalar(algebra, item) for item in text[2:].split(",")]
            return algebra.vector(values)
        if text in algebra.labels:
            return algebra.basis(algebra.label_index(text))
        if (match := _BASIS_INDEX.match(text)) and 1 <= int(match["index"]) <= algebra.dim:
            return algebra.basis(int(match["index"]) - 1)
        raise errors.ArgumentValueError(
            f"cannot read {text!r} as a vector of {algebra.name or 'the algebra'}",
            details=f"Labels: {', '.join(algebra.labels)}",
            resolution="Use a basis label, e<i>, or v:a,b,c.",
        )

    def parse_parameter(self, algebra: Algebra, text: str) -> Parameter:
        """A construction multiplier: ``s:<scalar>`` or any vector form."""
        text = text.strip()
        if text.startswith("s:"):
            return ScalarParameter(algebra.field.scalar(self.parse_scalar(algebra, text[2:])))
        return VectorParameter(self.parse_vector(algebra, text))

    def parse_matrix(self, algebra: Algebra, text: str) -> LinearMap:
        """Rows separated by ``;``, entries by ``,``."""
        rows = [
            [self.parse_scalar(algebra, entry) for entry in row.split(",")]
            for row in text.strip().split(";")
        ]
        if len(rows) != algebra.dim or any(len(row) != algebra.dim for row in rows):
            raise errors.ArgumentValueError(
                f"expected a {algebra.dim}x{algebra.dim} matrix, got {text!r}",
                resolution="Separate rows with ';' and entries with ','.",
            )
        return LinearMap.from_rows(algebra.field, rows)

    def parse_subspace(self, algebra: Algebra, text: str) -> Subspace:
        """The span of ``;``-separated vectors."""
        vectors = [self.parse_vector(algebra, item) for item in text.split(";") if item.strip()]
        return Subspace.span(algebra.field, algebra.dim, vectors)
