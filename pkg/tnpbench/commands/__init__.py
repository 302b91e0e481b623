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
"""Command classes for tnpbench."""

from .base import AppCommand
from .checks import get_checks_command_group
from .classification import get_classification_command_group
from .constructions import get_constructions_command_group
from .other import get_other_command_group
from .spaces import get_spaces_command_group

__all__ = [
    "AppCommand",
    "get_checks_command_group",
    "get_classification_command_group",
    "get_constructions_command_group",
    "get_other_command_group",
    "get_spaces_command_group",
]
