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
"""Error classes for tnpbench.

All errors inherit from craft_cli.CraftError. Input problems exit with
status 2; failed self-checks exit with status 1.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, Any

import yaml
from craft_cli import CraftError

from tnpbench.util.error_formatting import format_pydantic_errors

if TYPE_CHECKING:  # pragma: no cover
    import pydantic
    from typing_extensions import Self

USAGE_RETCODE = 2
CHECK_FAILED_RETCODE = 1


class InputError(CraftError):
    """Base class for errors caused by the user's input."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("retcode", USAGE_RETCODE)
        kwargs.setdefault("logpath_report", False)
        super().__init__(message, **kwargs)


class SelfCheckError(CraftError):
    """A built-in structure failed its own axiom check."""

    def __init__(self, message: str, **kwargs: Any) -> None:
        kwargs.setdefault("retcode", CHECK_FAILED_RETCODE)
        super().__init__(message, **kwargs)


class FieldMismatchError(InputError, ValueError):
    """Two values over different fields were combined."""

    def __init__(self, left: object, right: object) -> None:
        super().__init__(
            f"field mismatch: {left} and {right}",
            resolution="Make sure every input uses the same field descriptor.",
        )


class ScalarDivisionError(InputError, ZeroDivisionError):
    """Division by the zero scalar."""

    def __init__(self) -> None:
        super().__init__("division by zero")


class ScalarParseError(InputError, ValueError):
    """A scalar string does not follow the scalar grammar."""

    def __init__(self, text: str, field: object) -> None:
        super().__init__(
            f"cannot parse {text!r} as a scalar over {field}",
            resolution="Use digits with an optional '-' sign and optional '/' denominator.",
        )


class DimensionMismatchError(InputError, ValueError):
    """Vectors, maps or operations do not share a dimension."""


class MissingOperationError(InputError, KeyError):
    """The algebra does not provide an operation the request needs."""

    def __init__(self, opname: str, purpose: str) -> None:
        super().__init__(
            f"operation {opname!r} is required for {purpose}",
            resolution=f"Add a {opname!r} table to the algebra's 'ops'.",
        )

    def __str__(self) -> str:
        return CraftError.__str__(self)


class MissingAuxiliaryMapError(InputError):
    """An identity needs an auxiliary linear map that was not given."""


class MaskedProductError(InputError):
    """A product was requested on a pair that a windowed model leaves undefined."""

    def __init__(self, opname: str, pair: tuple[int, int]) -> None:
        super().__init__(
            f"product {opname}{pair} is undefined in this windowed model"
        )


class WindowedAlgebraError(InputError):
    """A full-algebra check was requested on a windowed (masked) model."""


class HypothesisError(InputError):
    """A construction's hypothesis does not hold for the given input."""

    def __init__(self, construction: str, condition: str) -> None:
        super().__init__(
            f"{construction}: hypothesis {condition} violated",
            resolution="Check the input algebra satisfies the construction's hypotheses.",
        )
        self.condition = condition


class EnumerationBoundError(InputError):
    """An exhaustive enumeration would exceed the configured bound."""

    def __init__(self, what: str, size: int, bound: int) -> None:
        super().__init__(
            f"{what} needs {size} points, above the bound of {bound}",
            resolution="Raise the bound with --max or use a smaller instance.",
        )


class AffinizationError(InputError):
    """The windowed affinization model cannot be built for this input."""


class UnknownCatalogEntryError(InputError, KeyError):
    """The requested catalog entry does not exist."""

    def __init__(self, name: str, known: list[str]) -> None:
        super().__init__(
            f"unknown catalog entry {name!r}",
            details=f"Known entries: {', '.join(known)}",
            resolution="Run 'tnpbench catalog list' to see available entries.",
        )

    def __str__(self) -> str:
        return CraftError.__str__(self)


class CatalogParameterError(InputError, ValueError):
    """Catalog parameters do not match the entry's slots or constraints."""


class CatalogSelfCheckError(SelfCheckError):
    """A generated catalog algebra failed the axiom it is asserted to satisfy."""


class AlgebraFileError(InputError, yaml.YAMLError):
    """An algebra file could not be read or parsed."""

    @classmethod
    def from_yaml_error(cls, filename: str, error: yaml.YAMLError) -> Self:
        """Convert a pyyaml YAMLError to an AlgebraFileError."""
        message = f"error parsing {filename!r}"
        if isinstance(error, yaml.MarkedYAMLError):
            message += f": {error.problem}"
        return cls(
            message,
            details=str(error),
            resolution=f"Ensure {filename} contains valid JSON or YAML",
        )


class AlgebraValidationError(InputError):
    """An algebra file does not follow the interchange format."""

    @classmethod
    def from_pydantic(
        cls,
        error: pydantic.ValidationError,
        *,
        file_name: str = "algebra file",
        **kwargs: Any,
    ) -> Self:
        """Convert this error from a pydantic ValidationError.

        :param error: The pydantic error to convert
        :param file_name: An optional file name of the malformed file
        :param kwargs: additional keyword arguments get passed to CraftError
        """
        message = format_pydantic_errors(error.errors(), file_name=file_name)
        return cls(message, **kwargs)


class ArgumentValueError(InputError, ValueError):
    """A command-line value (vector, matrix, parameter list) is malformed."""
