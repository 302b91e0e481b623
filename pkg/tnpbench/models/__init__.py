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
"""Pydantic models for tnpbench files and reports.

The file and report models live in ``tnpbench.models.algebra`` and
``tnpbench.models.report``; they depend on ``tnpbench.algcore``, which in turn
builds on the base model exported here.
"""

from tnpbench.models.base import BenchBaseModel
from tnpbench.models.constraints import (
    MAX_DIMENSION,
    Dimension,
    Label,
    OpName,
    ScalarStr,
    UniqueList,
    get_validator_by_regex,
)

__all__ = [
    "BenchBaseModel",
    "MAX_DIMENSION",
    "Dimension",
    "Label",
    "OpName",
    "ScalarStr",
    "UniqueList",
    "get_validator_by_regex",
]
