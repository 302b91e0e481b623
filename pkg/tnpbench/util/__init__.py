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
"""Utilities for tnpbench."""

from tnpbench.util.logging import setup_loggers
from tnpbench.util.string import humanize_list, parse_assignments, strtobool
from tnpbench.util.system import get_worker_count
from tnpbench.util.yaml import canonical_json, safe_yaml_load

__all__ = [
    "setup_loggers",
    "humanize_list",
    "parse_assignments",
    "strtobool",
    "get_worker_count",
    "canonical_json",
    "safe_yaml_load",
]
