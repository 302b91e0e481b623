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
"""Helpers for turning pydantic validation errors into readable messages."""
from __future__ import annotations

from collections.abc import Iterable
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:  # pragma: no cover
    from pydantic_core import ErrorDetails


class FieldLocationTuple(NamedTuple):
    """A field name and the location that holds it."""

    field: str
    location: str = "top-level"

    @classmethod
    def from_str(cls, loc_str: str) -> FieldLocationTuple:
        """Split a dotted location into the field and its parent.

        ``ops.dot[2]`` becomes ``('dot[2]', 'ops')``; ``dim`` stays top-level.
        """
        if "." not in loc_str:
            return cls(loc_str)
        location, field = loc_str.rsplit(".", maxsplit=1)
        return cls(field, location)


def format_pydantic_error(loc: Iterable[str | int], message: str) -> str:
    """Format a single pydantic error as one bullet line.

    :param loc: The "loc" entry of a pydantic error.
    :param message: The "msg" entry of a pydantic error.
    """
    field_path = _format_pydantic_error_location(loc)
    message = _format_pydantic_error_message(message)
    field_name, location = FieldLocationTuple.from_str(field_path)
    if location != "top-level":
        location = repr(location)

    if message == "field required":
        return f"- field {field_name!r} required in {location} configuration"
    if message == "extra inputs are not permitted":
        return f"- extra field {field_name!r} not permitted in {location} configuration"
    if field_path in ("__root__", ""):
        return f"- {message}"
    return f"- {message} (in field {field_path!r})"


def format_pydantic_errors(
    errors: Iterable[ErrorDetails], *, file_name: str = "algebra file"
) -> str:
    """Format a list of pydantic errors under a "Bad <file> content" header.

    Example::

        Bad n1.json content:
        - field 'dim' required in top-level configuration
        - input should be 'dot' or 'circ' (in field 'ops')
    """
    messages = (format_pydantic_error(error["loc"], error["msg"]) for error in errors)
    return "\n".join((f"Bad {file_name} content:", *messages))


def _format_pydantic_error_location(loc: Iterable[str | int]) -> str:
    loc_parts: list[str] = []
    for loc_part in loc:
        if isinstance(loc_part, str):
            loc_parts.append(loc_part)
        elif loc_parts:
            # Integers index into the previous part.
            loc_parts.append(f"{loc_parts.pop()}[{loc_part}]")
        else:
            loc_parts.append(f"[{loc_part}]")

    return ".".join(loc_parts).replace(".__root__", "")


def _format_pydantic_error_message(msg: str) -> str:
    msg = msg.removeprefix("Value error, ")
    if msg == "Field required":
        msg = "field required"
    if msg:
        msg = msg[0].lower() + msg[1:]
    return msg
