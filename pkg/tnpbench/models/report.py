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
"""The envelope around every command's JSON result."""
from __future__ import annotations

import hashlib
import json
from typing import Any

from tnpbench import util
from tnpbench.models.base import BenchBaseModel

TOOL_NAME = "tnpbench"


def input_digest(inputs: Any) -> str:  # noqa: ANN401
    """SHA-256 of the canonical JSON form of ``inputs``."""
    return hashlib.sha256(util.canonical_json(inputs).encode()).hexdigest()


class ReportEnvelope(BenchBaseModel):
    """One command run: what ran, on which input, and its result."""

    tool: str = TOOL_NAME
    version: str
    command: str
    input_digest: str
    seed: int | None = None
    result: dict[str, Any]

    def to_json(self) -> str:
        """Keys keep declaration order; ``seed`` is omitted unless set."""
        data = self.model_dump(mode="json", by_alias=True)
        if self.seed is None:
            del data["seed"]
        return json.dumps(data, indent=2, ensure_ascii=False)
