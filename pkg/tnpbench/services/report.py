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
"""Service that wraps command results in the report envelope and emits them."""
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from craft_cli import emit

from tnpbench.models.report import ReportEnvelope, input_digest
from tnpbench.services import base


class ReportService(base.AppService):
    """Build the single JSON document each command writes to stdout."""

    def build(
        self,
        command: str,
        result: Mapping[str, Any],
        *,
        arguments: Mapping[str, Any] | None = None,
        seed: int | None = None,
    ) -> ReportEnvelope:
        """Wrap ``result``; the digest covers the loaded algebras and ``arguments``."""
        inputs = {
            "algebras": self._services.algebra.inputs,
            "arguments": dict(arguments or {}),
        }
        return ReportEnvelope(
            version=self._app.version,
            command=command,
            input_digest=input_digest(inputs),
            seed=seed,
            result=dict(result),
        )

    def emit(
        self,
        command: str,
        result: Mapping[str, Any],
        *,
        arguments: Mapping[str, Any] | None = None,
        seed: int | None = None,
    ) -> ReportEnvelope:
        """Build the report and write it through ``emit.message``."""
        envelope = self.build(command, result, arguments=arguments, seed=seed)
        emit.message(envelope.to_json())
        return envelope
