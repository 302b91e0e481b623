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
"""Command-line entry point."""
from __future__ import annotations

import sys

from tnpbench.application import Application, AppMetadata
from tnpbench.services import ServiceFactory

APP_METADATA = AppMetadata(
    name="tnpbench",
    summary="Exact-arithmetic workbench for transposed Novikov-Poisson algebras",
)


def main() -> int:
    """Run tnpbench and return its exit status."""
    services = ServiceFactory(app=APP_METADATA)
    app = Application(APP_METADATA, services)
    return app.run()


if __name__ == "__main__":
    sys.exit(main())
