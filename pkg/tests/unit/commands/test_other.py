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
"""Tests for other commands."""
import argparse
import json

from tnpbench.commands.other import VersionCommand, get_other_command_group


def test_get_other_command_group():
    actual = get_other_command_group()

    assert actual.commands == [VersionCommand]


def test_version_run(app_metadata, fake_services, emitter):
    command = VersionCommand({"app": app_metadata, "services": fake_services})

    assert command.run(argparse.Namespace()) == 0

    emitter.assert_progress("testbench 3.14159", permanent=True)


def test_version_report(run_command):
    retcode, envelope = run_command(VersionCommand)

    assert retcode == 0
    assert envelope.command == "version"
    assert json.loads(envelope.to_json())["result"] == {
        "name": "testbench",
        "version": "3.14159",
    }
