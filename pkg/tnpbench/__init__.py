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
"""Exact-arithmetic workbench for transposed Novikov-Poisson algebras."""

from tnpbench.application import Application, AppMetadata
from tnpbench.services import AppService, ServiceFactory
from tnpbench._config import ConfigModel

try:
    from ._version import __version__
except ImportError:  # pragma: no cover
    from importlib.metadata import version, PackageNotFoundError

    try:
        __version__ = version("tnpbench")
    except PackageNotFoundError:
        __version__ = "dev"

__all__ = [
    "__version__",
    "Application",
    "AppMetadata",
    "AppService",
    "ConfigModel",
    "ServiceFactory",
]
