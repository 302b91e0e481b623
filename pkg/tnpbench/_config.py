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
"""Configuration model for tnpbench."""
from __future__ import annotations

import craft_cli
import pydantic


class ConfigModel(pydantic.BaseModel):
    """Settings read from the environment, overridable by command-line flags."""

    verbosity_level: craft_cli.EmitterMode = craft_cli.EmitterMode.BRIEF
    debug: bool = False

    jobs: int = pydantic.Field(default=1, ge=1)
    seed: int = 0
    max_enumeration: int = pydantic.Field(default=10_000_000, ge=1)
    simple_projective_bound: int = pydantic.Field(default=1_000_000, ge=1)
