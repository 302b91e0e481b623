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
"""Fixtures for command tests."""
from __future__ import annotations

import argparse

import pytest


@pytest.fixture
def run_command(app_metadata, fake_services, mocker):
    """Run a command class on command-line arguments.

    Returns the exit status and the emitted report envelope.
    """
    spy = mocker.spy(fake_services.report, "emit")

    def _run(command_cls, *argv: str):
        command = command_cls({"app": app_metadata, "services": fake_services})
        parser = argparse.ArgumentParser(prog=command.name)
        command.fill_parser(parser)
        retcode = command.run(parser.parse_args(list(argv)))
        return retcode, spy.spy_return

    return _run
