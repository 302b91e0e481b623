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
"""System-level util functions."""
from __future__ import annotations

import os

from craft_cli import emit


def get_worker_count(requested: int) -> int:
    """Clamp a requested worker count to what the host offers.

    Requests below 1 become 1. Requests above the CPU count are capped at it.
    """
    cpu_count = os.cpu_count() or 1
    workers = max(1, min(requested, cpu_count))
    if workers != requested:
        emit.debug(f"Using {workers} worker(s) instead of the {requested} requested")
    return workers
