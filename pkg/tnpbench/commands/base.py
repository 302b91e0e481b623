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
"""Base command for tnpbench commands."""
from __future__ import annotations

import argparse
import os
from collections.abc import Mapping
from typing import TYPE_CHECKING, Any

from craft_cli import BaseCommand, emit

from tnpbench import errors

if TYPE_CHECKING:
    from tnpbench import application
    from tnpbench.algcore import Algebra
    from tnpbench.services import service_factory

OPERATIONS = ("dot", "circ")


class AppCommand(BaseCommand):
    """Command for use with tnpbench.

    Subclasses implement ``run`` and finish with :meth:`finish`, which writes
    the one JSON report and turns the outcome into the exit status.
    """

    def __init__(self, config: dict[str, Any]) -> None:
        super().__init__(config)

        self._app: application.AppMetadata = config["app"]
        self._services: service_factory.ServiceFactory = config["services"]

    @property
    def services(self) -> service_factory.ServiceFactory:
        """Services available to this command."""
        return self._services

    def get_arg_or_config(self, parsed_args: argparse.Namespace, item: str) -> Any:  # noqa: ANN401
        """Get a configuration option that a command argument can override."""
        arg_value = getattr(parsed_args, item, None)
        if arg_value is not None:
            return arg_value
        return self._services.config.get(item)

    def load(self, source: str) -> Algebra:
        return self._services.algebra.load(source)

    def finish(
        self,
        result: Mapping[str, Any],
        *,
        passed: bool = True,
        summary: str | None = None,
        arguments: Mapping[str, Any] | None = None,
        seed: int | None = None,
    ) -> int:
        """Emit the report and return 0, or 1 when an asserted check failed."""
        self._services.report.emit(self.name, result, arguments=arguments, seed=seed)
        if summary:
            emit.progress(summary, permanent=True)
        return os.EX_OK if passed else errors.CHECK_FAILED_RETCODE


def add_file_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "file",
        metavar="file",
        help="Algebra JSON file, or catalog:<Name>(k=v,...)@<field>",
    )


def add_op_argument(
    parser: argparse.ArgumentParser, default: str = "circ", *, both: bool = False
) -> None:
    choices = [*OPERATIONS, "both"] if both else list(OPERATIONS)
    parser.add_argument(
        "--op",
        choices=choices,
        default=default,
        help=f"Operation to use (default: {default})",
    )


def opnames(op: str) -> tuple[str, ...]:
    """The operation names an ``--op`` value stands for."""
    return OPERATIONS if op == "both" else (op,)
