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
"""Service classes for the business logic of the commands."""

from tnpbench.services.base import AppService
from tnpbench.services.config import ConfigService
from tnpbench.services.algebra import AlgebraService
from tnpbench.services.report import ReportService
from tnpbench.services.service_factory import ServiceFactory

__all__ = [
    "AppService",
    "AlgebraService",
    "ConfigService",
    "ReportService",
    "ServiceFactory",
]
