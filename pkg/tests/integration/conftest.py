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
"""Configuration for tnpbench integration tests."""
from __future__ import annotations

import pytest

import tnpbench


@pytest.fixture
def create_app(app_metadata):
    def _inner() -> tnpbench.Application:
        # A fresh factory per run, as a real invocation would have.
        services = tnpbench.ServiceFactory(app_metadata)
        return tnpbench.Application(app_metadata, services)

    return _inner


@pytest.fixture
def app(create_app):
    return create_app()
