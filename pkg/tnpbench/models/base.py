# This file is part of tnpbench.
#
# Copyright 2023-2026 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License version 3, as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranties of MERCHANTABILITY,
# SATISFACTORY QUALITY, or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License along
# with this program.  If not, see <http://www.gnu.org/licenses/>.
"""Base pydantic model for tnpbench files and reports."""
from __future__ import annotations

import pathlib
from typing import Any

import pydantic
from typing_extensions import Self

from tnpbench import errors, util


class BenchBaseModel(pydantic.BaseModel):
    """Base model for tnpbench classes.

    Keys keep their Python spelling in files and reports.
    """

    model_config = pydantic.ConfigDict(
        validate_assignment=True,
        extra="forbid",
        coerce_numbers_to_str=True,
    )

    def marshal(self) -> dict[str, Any]:
        """Convert to a JSON-compatible dictionary."""
        return self.model_dump(mode="json", by_alias=True)

    @classmethod
    def unmarshal(cls, data: dict[str, Any]) -> Self:
        """Create and populate a new model object from dictionary data.

        :param data: The dictionary data to unmarshal.
        :return: The newly created object.
        :raise TypeError: If data is not a dictionary.
        """
        if not isinstance(data, dict):  # pyright: ignore[reportUnnecessaryIsInstance]
            raise TypeError(f"{cls.__name__} data is not a dictionary")

        return cls.model_validate(data)

    @classmethod
    def from_file(cls, path: pathlib.Path) -> Self:
        """Instantiate this model from a JSON or YAML file."""
        try:
            with path.open() as file:
                data = util.safe_yaml_load(file)
        except OSError as exc:
            raise errors.AlgebraFileError(
                f"cannot read {str(path)!r}: {exc.strerror or exc}",
                resolution="Check the path and permissions of the input file.",
            ) from exc
        return cls.from_data(data, path)

    @classmethod
    def from_data(cls, data: Any, filepath: pathlib.Path) -> Self:  # noqa: ANN401
        """Instantiate this model from already-loaded data.

        :param data: The dict of model properties.
        :param filepath: The filepath corresponding to ``data``, for error reporting.
        """
        if not isinstance(data, dict):
            raise errors.AlgebraFileError(
                f"{filepath.name!r} does not contain a mapping",
                resolution="The top level of an algebra file is a JSON object.",
            )
        try:
            return cls.unmarshal(data)
        except pydantic.ValidationError as err:
            raise errors.AlgebraValidationError.from_pydantic(
                err, file_name=filepath.name
            ) from None
